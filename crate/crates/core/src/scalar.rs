//! Floating-point scalar abstraction shared by every numeric routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar type backing gains, matrices and spectra: `f32` or `f64`.
///
/// Tolerances are carried as `f64` throughout the public API and converted
/// on use; the associated constants give sensible defaults per precision.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Maximum deviation of `|z|` from 1 accepted on ingestion.
    const UNIT_TOLERANCE: f64;
    /// Default relative tolerance for symmetry and equality decisions.
    const DEFAULT_TOLERANCE: f64;

    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 is representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f64 {
    const UNIT_TOLERANCE: f64 = 1e-12;
    const DEFAULT_TOLERANCE: f64 = 1e-9;
}

impl Scalar for f32 {
    const UNIT_TOLERANCE: f64 = 1e-6;
    const DEFAULT_TOLERANCE: f64 = 1e-4;
}
