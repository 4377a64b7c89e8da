use num_complex::Complex;

use crate::error::{Error, Result};
use crate::graph::{GainGraph, GainMatrix};
use crate::scalar::Scalar;
use crate::spectra::eigen::Spectrum;

pub const DEFAULT_CHAR_POLY_MAX_N: usize = 64;

/// `det(λI − A) = Σ a_j λ^{n−j}` with `a_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> CharPoly<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// `max_{j odd} |a_j|`.
    pub fn odd_residual(&self) -> T {
        self.coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// Largest coefficient gap relative to `max(1, max|a_j|)`.
    pub fn relative_distance(&self, other: &CharPoly<T>) -> Option<T> {
        (self.coeffs.len() == other.coeffs.len()).then(|| {
            let scale = T::one().max(self.max_abs()).max(other.max_abs());
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (*a - *b).abs())
                .fold(T::zero(), T::max)
                / scale
        })
    }
}

pub fn char_poly<T: Scalar>(g: &GainGraph<T>) -> Result<CharPoly<T>> {
    char_poly_with_cap(g, DEFAULT_CHAR_POLY_MAX_N)
}

pub fn char_poly_with_cap<T: Scalar>(g: &GainGraph<T>, cap: usize) -> Result<CharPoly<T>> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    faddeev_leverrier(&g.gain_matrix())
}

/// Faddeev–LeVerrier on `A/s`, `s` the largest absolute row sum, then
/// `a_j(A) = s^j·a_j(A/s)`.
pub fn faddeev_leverrier<T: Scalar>(a: &GainMatrix<T>) -> Result<CharPoly<T>> {
    let n = a.n();
    let zero = Complex::new(T::zero(), T::zero());
    let s = (0..n)
        .map(|r| (0..n).fold(T::zero(), |acc, c| acc + a.get(r, c).norm()))
        .fold(T::one(), T::max);
    let b: Vec<Complex<T>> = a.as_slice().iter().map(|z| z / s).collect();

    let mut coeffs = vec![T::one(); n + 1];
    let mut worst_imag = T::zero();
    // m holds M_k; M_1 = I.
    let mut m: Vec<Complex<T>> = vec![zero; n * n];
    for i in 0..n {
        m[i * n + i] = Complex::new(T::one(), T::zero());
    }
    let mut scale = T::one();
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let bm = matmul(&b, &m, n);
        let tr = (0..n).fold(zero, |acc, i| acc + bm[i * n + i]);
        let c = -tr / T::of(k as f64);
        worst_imag = worst_imag.max(c.im.abs());
        scale *= s;
        *slot = c.re * scale;
        if k < n {
            m = bm;
            for i in 0..n {
                m[i * n + i] += c;
            }
        }
    }
    if worst_imag.as_f64() > T::DEFAULT_TOLERANCE {
        return Err(Error::Inconsistent(format!(
            "characteristic polynomial has imaginary residue {worst_imag}"
        )));
    }
    Ok(CharPoly { coeffs })
}

fn matmul<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>], n: usize) -> Vec<Complex<T>> {
    let mut out = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x.re == T::zero() && x.im == T::zero() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

/// Expands `∏ (λ − λ_i)`.
pub fn char_poly_from_spectrum<T: Scalar>(s: &Spectrum<T>) -> CharPoly<T> {
    let mut coeffs = vec![T::one()];
    for &root in s.values() {
        coeffs.push(T::zero());
        for j in (1..coeffs.len()).rev() {
            let prev = coeffs[j - 1];
            coeffs[j] -= root * prev;
        }
    }
    CharPoly { coeffs }
}
