//! Cycle-space machinery: cycles and their gains, cycle bases, simple-cycle
//! enumeration with a real-part census, and elementary subgraphs.

mod basis;
pub(crate) use basis::spanning_forest;
mod census;
mod cycle;
mod sachs;

pub use basis::{fundamental_cycle_basis, gf2_rank, odd_cycle_basis, CycleBasis, Gf2Eliminator};
pub use census::{
    census_is_negation_symmetric, cycle_census, cycle_census_with_budget, cycle_censuses,
    enumerate_cycles, enumerate_cycles_with_budget, for_each_cycle, CensusBucket, CycleCensus,
    CENSUS_TOLERANCE, DEFAULT_CYCLE_BUDGET,
};
pub use cycle::{cycle_gain, Cycle, EdgeSet};
pub use sachs::{
    elementary_subgraphs, elementary_subgraphs_with_cap, sachs_coefficient, sachs_coefficients,
    sachs_coefficients_with_cap, ElementarySubgraph, DEFAULT_SACHS_MAX_N,
};

use crate::graph::GainGraph;
use crate::scalar::Scalar;

/// `m − n + c`, with `c` the number of connected components.
pub fn cycle_space_dimension<T: Scalar>(g: &GainGraph<T>) -> usize {
    g.m() + g.component_count() - g.n()
}

/// `m ≤ 3/2·(n − 1)`.
pub fn satisfies_edge_bound<T: Scalar>(g: &GainGraph<T>) -> bool {
    2 * g.m() + 3 <= 3 * g.n() || (g.n() == 0 && g.m() == 0)
}
