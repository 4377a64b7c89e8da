//! Complex units and exact rational turns.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An exact angle measured in full turns, reduced into `[0, 1)`.
///
/// `Turns(p/q)` denotes the unit `exp(2πi·p/q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Turns(Ratio<i64>);

impl Turns {
    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Self::reduce(Ratio::new(numer, denom)))
    }

    fn reduce(r: Ratio<i64>) -> Self {
        let f = r - r.floor();
        Turns(f)
    }

    pub fn zero() -> Self {
        Turns(Ratio::zero())
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn conj(self) -> Self {
        Self::reduce(-self.0)
    }

    pub fn half_turn(self) -> Self {
        Self::reduce(self.0 + Ratio::new(1, 2))
    }

    /// Canonical key for the real part: `t` and `1 - t` share a cosine.
    pub fn real_part_key(self) -> Self {
        let c = self.conj();
        if c.0 < self.0 {
            c
        } else {
            self
        }
    }

    /// Cartesian coordinates, exact on multiples of a quarter turn.
    pub fn cartesian<T: Scalar>(self) -> (T, T) {
        let q = self.0 * Ratio::from_integer(4);
        if q.is_integer() {
            return match q.to_integer() {
                0 => (T::one(), T::zero()),
                1 => (T::zero(), T::one()),
                2 => (-T::one(), T::zero()),
                _ => (T::zero(), -T::one()),
            };
        }
        let angle = 2.0 * std::f64::consts::PI * (self.numer() as f64 / self.denom() as f64);
        (T::of(angle.cos()), T::of(angle.sin()))
    }
}

/// Turns add modulo one.
impl Add for Turns {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        Self::reduce(self.0 + other.0)
    }
}

impl fmt::Display for Turns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl std::str::FromStr for Turns {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| format!("bad numerator in turns {s:?}"))?;
        let q: i64 = q.parse().map_err(|_| format!("bad denominator in turns {s:?}"))?;
        if q <= 0 {
            return Err(format!("turns denominator must be positive in {s:?}"));
        }
        Ok(Turns::new(p, q).expect("nonzero denominator"))
    }
}

/// A complex number of modulus one, optionally tagged with an exact angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexUnit<T> {
    re: T,
    im: T,
    turns: Option<Turns>,
}

impl<T: Scalar> ComplexUnit<T> {
    /// Accepts `(re, im)` within the scalar's unit tolerance and renormalizes.
    pub fn new(re: T, im: T) -> Result<Self> {
        Self::new_indexed(re, im, 0)
    }

    pub(crate) fn new_indexed(re: T, im: T, edge: usize) -> Result<Self> {
        let modulus = re.hypot(im);
        if !modulus.is_finite() || (modulus.as_f64() - 1.0).abs() > T::UNIT_TOLERANCE {
            return Err(Error::NonUnitGain {
                edge,
                modulus: modulus.as_f64(),
            });
        }
        // Leaving near-unit values untouched makes renormalization idempotent.
        let (re, im) = if (modulus - T::one()).abs() <= T::of(4.0) * T::epsilon() {
            (re, im)
        } else {
            (re / modulus, im / modulus)
        };
        Ok(Self { re, im, turns: None })
    }

    pub fn from_turns(t: Turns) -> Self {
        let (re, im) = t.cartesian();
        Self {
            re,
            im,
            turns: Some(t),
        }
    }

    /// `exp(iθ)`.
    pub fn from_angle(theta: T) -> Self {
        Self {
            re: theta.cos(),
            im: theta.sin(),
            turns: None,
        }
    }

    pub fn one() -> Self {
        Self::from_turns(Turns::zero())
    }

    pub fn i() -> Self {
        Self::from_turns(Turns::new(1, 4).unwrap())
    }

    pub fn re(&self) -> T {
        self.re
    }

    pub fn im(&self) -> T {
        self.im
    }

    pub fn turns(&self) -> Option<Turns> {
        self.turns
    }

    pub fn arg(&self) -> T {
        self.im.atan2(self.re)
    }

    pub fn to_complex(&self) -> Complex<T> {
        Complex::new(self.re, self.im)
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
            turns: self.turns.map(Turns::conj),
        }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.im.abs().as_f64() <= tol
    }

    /// One of `±1, ±i`.
    pub fn is_quarter_turn(&self, tol: f64) -> bool {
        match self.turns {
            Some(t) => (t.ratio() * Ratio::from_integer(4)).is_integer(),
            None => self.re.abs().min(self.im.abs()).as_f64() <= tol,
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if let (Some(a), Some(b)) = (self.turns, other.turns) {
            return a == b;
        }
        (self.to_complex() - other.to_complex()).norm().as_f64() <= tol
    }

    /// Rounds a complex value back onto the unit circle.
    pub(crate) fn from_complex_normalized(z: Complex<T>) -> Self {
        let r = z.norm();
        Self {
            re: z.re / r,
            im: z.im / r,
            turns: None,
        }
    }

    pub fn cast<U: Scalar>(&self) -> ComplexUnit<U> {
        match self.turns {
            Some(t) => ComplexUnit::from_turns(t),
            None => ComplexUnit {
                re: U::of(self.re.as_f64()),
                im: U::of(self.im.as_f64()),
                turns: None,
            },
        }
    }
}

impl<T: Scalar> Mul for ComplexUnit<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        match (self.turns, rhs.turns) {
            (Some(a), Some(b)) => Self::from_turns(a + b),
            _ => Self::from_complex_normalized(self.to_complex() * rhs.to_complex()),
        }
    }
}

impl<T: Scalar> Neg for ComplexUnit<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
            turns: self.turns.map(Turns::half_turn),
        }
    }
}

impl<T: Scalar> One for ComplexUnit<T> {
    fn one() -> Self {
        ComplexUnit::one()
    }
}

impl<T: Scalar> fmt::Display for ComplexUnit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.turns {
            Some(t) => write!(f, "exp(2πi·{t})"),
            None => write!(f, "{}{:+}i", self.re, self.im),
        }
    }
}
