//! Automorphisms of underlying graphs and the switching-isomorphism and
//! sign-symmetry decisions built on them.

mod automorphisms;
mod switching;

pub use automorphisms::{
    automorphisms, automorphisms_with_limits, for_each_isomorphism, is_structurally_symmetric,
    is_structurally_symmetric_with_limits, isomorphisms, SearchLimits, DEFAULT_AUTOMORPHISM_MAX_N,
    DEFAULT_MAX_ISOMORPHISMS,
};
pub use switching::{
    census_obstruction, is_sign_symmetric, is_sign_symmetric_full, is_sign_symmetric_with,
    is_switching_isomorphic, is_switching_isomorphic_with, switching_to_signed, EquivalenceOptions,
    NonEquivalence, SignSymmetry, SwitchingIsomorphism, SwitchingWitness,
};
