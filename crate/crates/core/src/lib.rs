//! Complex unit gain graphs: switching, cycle gains, Hermitian spectra,
//! sign-symmetry and constructions of gain graphs whose spectrum is
//! symmetric about zero.
//!
//! Every numeric type is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the precision. Gains may carry an exact rational
//! angle ([`Turns`]), which keeps products, conjugates and census buckets
//! exact for roots of unity.

pub mod constructions;
pub mod cycles;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod search;
pub mod spectra;
pub mod unit;

pub use error::{Error, Result};
pub use graph::{Edge, GainGraph, GainMatrix, SwitchingFunction, UnderlyingProperties, VertexPermutation};
pub use scalar::Scalar;
pub use unit::{ComplexUnit, Turns};

pub type GainGraph64 = GainGraph<f64>;
pub type GainGraph32 = GainGraph<f32>;
pub type ComplexUnit64 = ComplexUnit<f64>;
pub type ComplexUnit32 = ComplexUnit<f32>;
pub type GainMatrix64 = GainMatrix<f64>;
pub type GainMatrix32 = GainMatrix<f32>;
pub type SwitchingFunction64 = SwitchingFunction<f64>;
pub type SwitchingFunction32 = SwitchingFunction<f32>;
pub type Spectrum64 = spectra::Spectrum<f64>;
pub type Spectrum32 = spectra::Spectrum<f32>;
pub type CharPoly64 = spectra::CharPoly<f64>;
pub type CharPoly32 = spectra::CharPoly<f32>;
