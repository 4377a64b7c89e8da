//! Hermitian eigenvalues, the characteristic polynomial, and the decision
//! whether a spectrum is symmetric about zero.

mod charpoly;
mod eigen;

pub use charpoly::{
    char_poly, char_poly_from_spectrum, char_poly_with_cap, faddeev_leverrier, CharPoly,
    DEFAULT_CHAR_POLY_MAX_N,
};
pub use eigen::{eigenvalues, hermitian_eigenvalues, Spectrum};

use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::scalar::Scalar;

/// Disagreements where the asymmetric side stays below this multiple of the
/// tolerance are settled by the coefficient route.
const GREY_ZONE: f64 = 1e3;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSymmetry<T> {
    pub symmetric: bool,
    /// `max_{j odd} |a_j|`, or the pairing residual when the coefficient
    /// route is beyond its cap.
    pub residual: T,
    /// The residual is compared against `tol·scale`.
    pub scale: T,
    pub coefficient_residual: Option<T>,
    /// `max_j |λ_j + λ_{n+1−j}|`.
    pub pairing_residual: T,
    pub spectrum: Spectrum<T>,
}

pub fn is_spectrally_symmetric<T: Scalar>(g: &GainGraph<T>, tol: f64) -> Result<SpectralSymmetry<T>> {
    is_spectrally_symmetric_with_cap(g, tol, DEFAULT_CHAR_POLY_MAX_N)
}

/// Odd coefficients must vanish relative to `max(1, max|a_j|)`, and
/// eigenvalues must pair up relative to `max(1, λ_1)`. The routes must agree.
pub fn is_spectrally_symmetric_with_cap<T: Scalar>(
    g: &GainGraph<T>,
    tol: f64,
    coefficient_cap: usize,
) -> Result<SpectralSymmetry<T>> {
    let spectrum = eigenvalues(g)?;
    let top = spectrum.values().first().copied().unwrap_or_else(T::zero);
    let pairing = spectrum.pairing_residual();
    let pairing_scale = T::one().max(top);
    let pairing_rel = (pairing / pairing_scale).as_f64();

    if g.n() > coefficient_cap {
        return Ok(SpectralSymmetry {
            symmetric: pairing_rel <= tol,
            residual: pairing,
            scale: pairing_scale,
            coefficient_residual: None,
            pairing_residual: pairing,
            spectrum,
        });
    }
    let poly = char_poly_with_cap(g, coefficient_cap)?;
    let coefficient = poly.odd_residual();
    let scale = T::one().max(poly.max_abs());
    let coefficient_rel = (coefficient / scale).as_f64();
    let coefficient_ok = coefficient_rel <= tol;

    if coefficient_ok != (pairing_rel <= tol) {
        let failing = if coefficient_ok { pairing_rel } else { coefficient_rel };
        if failing > GREY_ZONE * tol {
            return Err(Error::Inconsistent(format!(
                "odd-coefficient residual {coefficient} and eigenvalue pairing residual {pairing} disagree"
            )));
        }
    }
    Ok(SpectralSymmetry {
        symmetric: coefficient_ok,
        residual: coefficient,
        scale,
        coefficient_residual: Some(coefficient),
        pairing_residual: pairing,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::{ComplexUnit, Turns};

    fn triangle(p: i64, q: i64) -> GainGraph<f64> {
        let one = ComplexUnit::one();
        let phi = ComplexUnit::from_turns(Turns::new(p, q).unwrap());
        GainGraph::new(3, [(0, 1, phi), (1, 2, one), (0, 2, one)]).unwrap()
    }

    #[test]
    fn triangle_decisions() {
        let plain = is_spectrally_symmetric(&triangle(0, 1), 1e-9).unwrap();
        assert!(!plain.symmetric);
        assert!((plain.residual - 2.0).abs() < 1e-12);
        assert!((plain.scale - 3.0).abs() < 1e-12);
        assert!(is_spectrally_symmetric(&triangle(1, 4), 1e-9).unwrap().symmetric);
        assert!(is_spectrally_symmetric(&triangle(3, 4), 1e-9).unwrap().symmetric);
    }

    #[test]
    fn bipartite_is_symmetric() {
        let mut edges = Vec::new();
        for (i, (u, v)) in [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (0, 5)].into_iter().enumerate() {
            edges.push((u, v, ComplexUnit::from_turns(Turns::new(i as i64 + 1, 11).unwrap())));
        }
        let g = GainGraph::<f64>::new(6, edges).unwrap();
        assert!(is_spectrally_symmetric(&g, 1e-9).unwrap().symmetric);
    }

    #[test]
    fn pairing_only_beyond_cap() {
        let v = is_spectrally_symmetric_with_cap(&triangle(1, 4), 1e-9, 2).unwrap();
        assert!(v.symmetric);
        assert!(v.coefficient_residual.is_none());
    }
}
