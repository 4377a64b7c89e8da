use num_complex::Complex;

use crate::error::{Error, Result};
use crate::graph::{GainGraph, GainMatrix};
use crate::scalar::Scalar;

const MAX_SWEEPS_PER_VALUE: usize = 60;

/// Real eigenvalues of a Hermitian gain matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
}

impl<T: Scalar> Spectrum<T> {
    /// Sorts `values` descending.
    pub fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spectral_radius(&self) -> T {
        self.values.iter().fold(T::zero(), |r, v| r.max(v.abs()))
    }

    pub fn trace(&self) -> T {
        self.values.iter().fold(T::zero(), |s, &v| s + v)
    }

    /// `max_j |λ_j + λ_{n+1−j}|`.
    pub fn pairing_residual(&self) -> T {
        let n = self.values.len();
        (0..n / 2 + n % 2)
            .map(|j| (self.values[j] + self.values[n - 1 - j]).abs())
            .fold(T::zero(), T::max)
    }

    pub fn negated(&self) -> Self {
        Self {
            values: self.values.iter().rev().map(|&v| -v).collect(),
        }
    }

    pub fn max_abs_difference(&self, other: &Spectrum<T>) -> Option<T> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (*a - *b).abs())
                .fold(T::zero(), T::max)
        })
    }
}

pub fn eigenvalues<T: Scalar>(g: &GainGraph<T>) -> Result<Spectrum<T>> {
    hermitian_eigenvalues(&g.gain_matrix())
}

/// Householder reduction to Hermitian tridiagonal form, whose off-diagonal
/// moduli give a real symmetric tridiagonal matrix with the same spectrum,
/// followed by implicit QL.
pub fn hermitian_eigenvalues<T: Scalar>(a: &GainMatrix<T>) -> Result<Spectrum<T>> {
    let (d, e) = tridiagonalize(a);
    Ok(Spectrum::from_values(tridiagonal_ql(d, e)?))
}

fn tridiagonalize<T: Scalar>(a: &GainMatrix<T>) -> (Vec<T>, Vec<T>) {
    let n = a.n();
    let mut m: Vec<Complex<T>> = a.as_slice().to_vec();
    let at = |r: usize, c: usize| r * n + c;
    let mut off = vec![T::zero(); n];
    let two = T::of(2.0);

    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex<T>> = (k + 1..n).map(|r| m[at(r, k)]).collect();
        let alpha = x.iter().fold(T::zero(), |s, z| s.hypot(z.norm()));
        let tail = x[1..].iter().fold(T::zero(), |s, z| s.hypot(z.norm()));
        if tail == T::zero() {
            off[k] = x[0].norm();
            continue;
        }
        let phase = if x[0].norm() > T::zero() {
            x[0] / x[0].norm()
        } else {
            Complex::new(T::one(), T::zero())
        };
        let mut v = x;
        v[0] += phase * alpha;
        let vnorm2 = v.iter().fold(T::zero(), |s, z| s + z.norm_sqr());
        let tau = two / vnorm2;
        let len = n - k - 1;

        // p = τ·A₂₂·v
        let mut p = vec![Complex::new(T::zero(), T::zero()); len];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = k + 1 + i;
            let mut s = Complex::new(T::zero(), T::zero());
            for (j, vj) in v.iter().enumerate() {
                s += m[at(row, k + 1 + j)] * vj;
            }
            *pi = s * tau;
        }
        // w = p − (τ/2)(v*p)·v; v*p is real for Hermitian A₂₂
        let vp = v
            .iter()
            .zip(&p)
            .fold(Complex::new(T::zero(), T::zero()), |s, (vi, pi)| s + vi.conj() * pi);
        let half = vp * (tau / two);
        let w: Vec<Complex<T>> = p.iter().zip(&v).map(|(pi, vi)| pi - half * vi).collect();

        for i in 0..len {
            for j in 0..len {
                let idx = at(k + 1 + i, k + 1 + j);
                m[idx] -= v[i] * w[j].conj() + w[i] * v[j].conj();
            }
        }
        off[k] = alpha;
        for r in k + 1..n {
            m[at(r, k)] = Complex::new(T::zero(), T::zero());
            m[at(k, r)] = Complex::new(T::zero(), T::zero());
        }
    }
    if n >= 2 {
        off[n - 2] = m[at(n - 1, n - 2)].norm();
    }
    let d = (0..n).map(|i| m[at(i, i)].re).collect();
    (d, off)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// sub-diagonal `e[0..n−1]`; `e[n−1]` is ignored.
fn tridiagonal_ql<T: Scalar>(mut d: Vec<T>, mut e: Vec<T>) -> Result<Vec<T>> {
    let n = d.len();
    if n == 0 {
        return Ok(d);
    }
    e[n - 1] = T::zero();
    let two = T::of(2.0);
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_VALUE {
                return Err(Error::ConvergenceFailure);
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(d)
}
