use std::ops::ControlFlow;

use crate::cycles::{
    census_is_negation_symmetric, cycle_censuses, fundamental_cycle_basis, cycle_gain, Cycle,
    CycleCensus, DEFAULT_CYCLE_BUDGET,
};
use crate::equivalence::automorphisms::{for_each_isomorphism, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{GainGraph, SwitchingFunction, VertexPermutation};
use crate::scalar::Scalar;
use crate::unit::ComplexUnit;

/// Disagreements between the cycle-gain and tree-alignment routes are only
/// reported when the failing side exceeds this multiple of the tolerance.
const GREY_ZONE: f64 = 1e3;

/// `switch(maybe_converse(relabel(g1, perm)), switching) = g2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingWitness<T> {
    pub perm: VertexPermutation,
    pub conversed: bool,
    pub switching: Option<SwitchingFunction<T>>,
}

impl<T: Scalar> SwitchingWitness<T> {
    pub fn apply(&self, g: &GainGraph<T>) -> Result<GainGraph<T>> {
        let mut h = g.relabel(&self.perm)?;
        if self.conversed {
            h = h.converse();
        }
        match &self.switching {
            Some(x) => h.switch(x),
            None => Ok(h),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonEquivalence {
    DifferentOrder,
    DifferentUnderlyingGraph,
    CycleGainMismatch,
    /// Odd-order census with unmatched `±μ` buckets.
    CensusObstruction { k: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceOptions {
    pub limits: SearchLimits,
    pub tolerance: f64,
    /// Largest odd order checked by the census obstruction.
    pub census_max_k: usize,
    pub cycle_budget: usize,
    pub use_census: bool,
}

impl Default for EquivalenceOptions {
    fn default() -> Self {
        Self {
            limits: SearchLimits::default(),
            tolerance: 1e-9,
            census_max_k: 9,
            cycle_budget: DEFAULT_CYCLE_BUDGET,
            use_census: true,
        }
    }
}

fn check_order<T: Scalar>(g: &GainGraph<T>, opts: &EquivalenceOptions) -> Result<()> {
    if g.n() > opts.limits.max_n {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: opts.limits.max_n,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingIsomorphism<T> {
    pub result: bool,
    pub witness: Option<SwitchingWitness<T>>,
    pub reason: Option<NonEquivalence>,
    pub isomorphisms_tried: usize,
}

/// Spanning-forest alignment of `h` onto `target`, which share an
/// underlying graph. Roots get 1; each child is fixed by its tree edge.
fn align<T: Scalar>(h: &GainGraph<T>, target: &GainGraph<T>, forest: &[(usize, usize)]) -> SwitchingFunction<T> {
    let mut x = vec![ComplexUnit::one(); h.n()];
    for &(u, w) in forest {
        let hg = h.gain(u, w).expect("forest edge present");
        let tg = target.gain(u, w).expect("forest edge present");
        x[w] = tg.conj() * x[u] * hg;
    }
    SwitchingFunction(x)
}

fn max_gain_defect<T: Scalar>(a: &GainGraph<T>, b: &GainGraph<T>) -> f64 {
    a.edges()
        .iter()
        .zip(b.edges())
        .map(|(x, y)| {
            if x.gain.approx_eq(&y.gain, 0.0) {
                0.0
            } else {
                (x.gain.to_complex() - y.gain.to_complex()).norm().as_f64()
            }
        })
        .fold(0.0, f64::max)
}

struct Matcher<'a, T> {
    target: &'a GainGraph<T>,
    basis: Vec<(Cycle, ComplexUnit<T>)>,
    forest: Vec<(usize, usize)>,
    tol: f64,
}

impl<T: Scalar> Matcher<'_, T> {
    /// Both routes on a candidate already carrying the target's underlying
    /// graph; `Some` when they accept.
    fn test(&self, h: &GainGraph<T>) -> Result<Option<SwitchingFunction<T>>> {
        let mut gain_gap = 0.0f64;
        for (c, want) in &self.basis {
            let got = cycle_gain(h, c)?;
            if !got.approx_eq(want, 0.0) {
                gain_gap = gain_gap.max((got.to_complex() - want.to_complex()).norm().as_f64());
            }
        }
        let by_basis = gain_gap <= self.tol;

        let x = align(h, self.target, &self.forest);
        let defect = max_gain_defect(&h.switch(&x)?, self.target);
        let by_alignment = defect <= self.tol;

        if by_basis != by_alignment {
            let failing = if by_basis { defect } else { gain_gap };
            if failing > GREY_ZONE * self.tol {
                return Err(Error::Inconsistent(format!(
                    "basis cycle gap {gain_gap} and tree-alignment defect {defect} disagree"
                )));
            }
        }
        Ok(by_basis.then_some(x))
    }
}

pub fn is_switching_isomorphic<T: Scalar>(
    g1: &GainGraph<T>,
    g2: &GainGraph<T>,
) -> Result<SwitchingIsomorphism<T>> {
    is_switching_isomorphic_with(g1, g2, &EquivalenceOptions::default())
}

/// Tries every isomorphism of underlying graphs in lexicographic order, each
/// without then with the converse, and returns the first match. A match
/// means equal gains on a fundamental cycle basis of `g2` and is confirmed by
/// an explicit switching.
pub fn is_switching_isomorphic_with<T: Scalar>(
    g1: &GainGraph<T>,
    g2: &GainGraph<T>,
    opts: &EquivalenceOptions,
) -> Result<SwitchingIsomorphism<T>> {
    let negative = |reason, tried| SwitchingIsomorphism {
        result: false,
        witness: None,
        reason: Some(reason),
        isomorphisms_tried: tried,
    };
    check_order(g1, opts)?;
    check_order(g2, opts)?;
    if g1.n() != g2.n() {
        return Ok(negative(NonEquivalence::DifferentOrder, 0));
    }
    let basis = fundamental_cycle_basis(g2);
    let matcher = Matcher {
        target: g2,
        basis: basis
            .cycles
            .iter()
            .map(|c| Ok((c.clone(), cycle_gain(g2, c)?)))
            .collect::<Result<_>>()?,
        forest: crate::cycles::spanning_forest(g2),
        tol: opts.tolerance,
    };

    let mut found: Option<SwitchingWitness<T>> = None;
    let mut failure: Option<Error> = None;
    let tried = for_each_isomorphism(g1, g2, opts.limits, |perm| {
        let attempt = || -> Result<Option<SwitchingWitness<T>>> {
            let h = g1.relabel(perm)?;
            for conversed in [false, true] {
                let candidate = if conversed { h.converse() } else { h.clone() };
                if let Some(x) = matcher.test(&candidate)? {
                    return Ok(Some(SwitchingWitness {
                        perm: perm.clone(),
                        conversed,
                        switching: Some(x),
                    }));
                }
            }
            Ok(None)
        };
        match attempt() {
            Ok(Some(w)) => {
                found = Some(w);
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(match found {
        Some(w) => SwitchingIsomorphism {
            result: true,
            witness: Some(w),
            reason: None,
            isomorphisms_tried: tried,
        },
        None if tried == 0 => negative(NonEquivalence::DifferentUnderlyingGraph, 0),
        None => negative(NonEquivalence::CycleGainMismatch, tried),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignSymmetry<T> {
    pub result: bool,
    /// Witness for `g ∼ −g`.
    pub witness: Option<SwitchingWitness<T>>,
    pub obstruction: Option<CycleCensus<T>>,
    pub reason: Option<NonEquivalence>,
}

pub fn is_sign_symmetric<T: Scalar>(g: &GainGraph<T>) -> Result<SignSymmetry<T>> {
    is_sign_symmetric_with(g, &EquivalenceOptions::default())
}

/// Odd-order census obstruction first, then the full test. A census whose
/// enumeration exceeds the cycle budget is skipped.
pub fn is_sign_symmetric_with<T: Scalar>(g: &GainGraph<T>, opts: &EquivalenceOptions) -> Result<SignSymmetry<T>> {
    check_order(g, opts)?;
    if opts.use_census {
        if let Some(census) = census_obstruction(g, opts.census_max_k, opts.cycle_budget)? {
            return Ok(SignSymmetry {
                result: false,
                witness: None,
                reason: Some(NonEquivalence::CensusObstruction { k: census.k }),
                obstruction: Some(census),
            });
        }
    }
    let full = is_switching_isomorphic_with(g, &g.negate(), opts)?;
    Ok(SignSymmetry {
        result: full.result,
        witness: full.witness,
        obstruction: None,
        reason: full.reason,
    })
}

/// The full test alone, without the census short-circuit.
pub fn is_sign_symmetric_full<T: Scalar>(g: &GainGraph<T>, opts: &EquivalenceOptions) -> Result<SignSymmetry<T>> {
    is_sign_symmetric_with(g, &EquivalenceOptions { use_census: false, ..opts.clone() })
}

/// The least odd `k ≤ max_k` whose census is not negation-symmetric.
pub fn census_obstruction<T: Scalar>(
    g: &GainGraph<T>,
    max_k: usize,
    budget: usize,
) -> Result<Option<CycleCensus<T>>> {
    match cycle_censuses(g, max_k, budget) {
        Ok(all) => Ok(all
            .into_iter()
            .find(|c| c.k % 2 == 1 && !census_is_negation_symmetric(c))),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Whether `g` switches to real gains; the switching when it does.
pub fn switching_to_signed<T: Scalar>(g: &GainGraph<T>, tol: f64) -> Result<Option<SwitchingFunction<T>>> {
    let basis = fundamental_cycle_basis(g);
    for c in &basis.cycles {
        if !cycle_gain(g, c)?.is_real(tol) {
            return Ok(None);
        }
    }
    let real = g.map_gains(|_| ComplexUnit::one());
    let x = align(g, &real, &crate::cycles::spanning_forest(g));
    Ok(Some(x))
}
