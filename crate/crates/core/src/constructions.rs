//! Doubling constructions with symmetric spectra, plus the named fixture
//! graphs used throughout the test-suites and the command line.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::graph::{GainGraph, GainMatrix, VertexPermutation};
use crate::scalar::Scalar;
use crate::unit::{ComplexUnit, Turns};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoubleKind {
    HermitianBlock,
    IdentityBlock,
    OddAnchor,
    Sylvester,
}

impl DoubleKind {
    pub const ALL: [DoubleKind; 4] = [
        DoubleKind::HermitianBlock,
        DoubleKind::IdentityBlock,
        DoubleKind::OddAnchor,
        DoubleKind::Sylvester,
    ];
}

/// Entry of a block matrix: absent, or a unit gain.
fn unit_entry<T: Scalar>(z: Complex<T>, row: usize, col: usize) -> Result<Option<ComplexUnit<T>>> {
    if z.re == T::zero() && z.im == T::zero() {
        return Ok(None);
    }
    let exact = [(1, 0, 0), (0, 1, 1), (-1, 0, 2), (0, -1, 3)]
        .into_iter()
        .find(|&(re, im, _)| z.re == T::of(re as f64) && z.im == T::of(im as f64));
    if let Some((_, _, quarter)) = exact {
        return Ok(Some(ComplexUnit::from_turns(Turns::new(quarter, 4).unwrap())));
    }
    ComplexUnit::new(z.re, z.im)
        .map(Some)
        .map_err(|_| Error::NonUnitEntry { row, col })
}

/// `[A B; B* −A]` for Hermitian `B` with entries zero or of unit modulus.
pub fn hermitian_double<T: Scalar>(g: &GainGraph<T>, b: &GainMatrix<T>) -> Result<GainGraph<T>> {
    let n = g.n();
    if b.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.n(),
        });
    }
    let tol = T::of(T::DEFAULT_TOLERANCE);
    for r in 0..n {
        for c in r..n {
            if (b.get(r, c) - b.get(c, r).conj()).norm() > tol {
                return Err(Error::NotHermitian { row: r, col: c });
            }
        }
    }
    let mut edges = doubled_copies(g);
    for r in 0..n {
        for c in 0..n {
            if let Some(z) = unit_entry(b.get(r, c), r, c)? {
                edges.push((r, c + n, z));
            }
        }
    }
    GainGraph::new(2 * n, edges)
}

/// `A` on `0..n` and `−A` on `n..2n`.
fn doubled_copies<T: Scalar>(g: &GainGraph<T>) -> Vec<(usize, usize, ComplexUnit<T>)> {
    let n = g.n();
    g.edges()
        .iter()
        .map(|e| (e.u, e.v, e.gain))
        .chain(g.edges().iter().map(|e| (e.u + n, e.v + n, -e.gain)))
        .collect()
}

/// `[A zI; z̄I −A]`: the two copies joined by a perfect matching of gain `z`.
pub fn identity_block_double<T: Scalar>(g: &GainGraph<T>, z: ComplexUnit<T>) -> GainGraph<T> {
    let n = g.n();
    let mut edges = doubled_copies(g);
    edges.extend((0..n).map(|v| (v, v + n, z)));
    GainGraph::new(2 * n, edges).expect("copies and matching are disjoint")
}

/// `[0 a −a; a* A′ O; −a* O −A′]` where the anchor row of `A` is `[0 a]`.
/// The anchor becomes vertex 0, the remaining vertices keep their relative
/// order on `1..n` and their negated copies sit on `n..2n−1`.
pub fn odd_anchor_double<T: Scalar>(g: &GainGraph<T>, anchor: usize) -> Result<GainGraph<T>> {
    let n = g.n();
    if anchor >= n {
        return Err(Error::IndexOutOfRange { index: anchor, n });
    }
    let mut order: Vec<usize> = vec![0; n];
    let mut next = 1;
    for (v, slot) in order.iter_mut().enumerate() {
        if v != anchor {
            *slot = next;
            next += 1;
        }
    }
    let h = g.relabel(&VertexPermutation::new(order)?)?;
    let mut edges = Vec::new();
    for e in h.edges() {
        if e.u == 0 {
            edges.push((0, e.v, e.gain));
            edges.push((0, e.v + n - 1, -e.gain));
        } else {
            edges.push((e.u, e.v, e.gain));
            edges.push((e.u + n - 1, e.v + n - 1, -e.gain));
        }
    }
    GainGraph::new(2 * n - 1, edges)
}

/// `[A A+zI; A+z̄I −A]`; `z = None` stands for zero and drops the cross
/// diagonal.
pub fn sylvester_double<T: Scalar>(g: &GainGraph<T>, z: Option<ComplexUnit<T>>) -> GainGraph<T> {
    let n = g.n();
    let mut edges = doubled_copies(g);
    for e in g.edges() {
        // Upper-right block entries (u, v+n) and (v, u+n) carry A's gains.
        edges.push((e.u, e.v + n, e.gain));
        edges.push((e.v, e.u + n, e.gain.conj()));
    }
    if let Some(z) = z {
        edges.extend((0..n).map(|v| (v, v + n, z)));
    }
    GainGraph::new(2 * n, edges).expect("block positions are disjoint")
}

/// Whether `z` lies in `{±1, ±i}`, where the doubling of `sylvester_double`
/// may be sign-symmetric for reasons unrelated to the input.
pub fn is_fourth_root_of_unity<T: Scalar>(z: &ComplexUnit<T>) -> bool {
    z.is_quarter_turn(T::DEFAULT_TOLERANCE)
}

/// Every edge gets gain `i` in its stored orientation.
pub fn all_imaginary<T: Scalar>(g: &GainGraph<T>) -> GainGraph<T> {
    g.map_gains(|_| ComplexUnit::i())
}

fn turns<T: Scalar>(p: i64, q: i64) -> ComplexUnit<T> {
    ComplexUnit::from_turns(Turns::new(p, q).unwrap())
}

/// Five vertices, seven edges, gains in the sixth roots of unity; its
/// Sylvester doubles are spectrally symmetric without being sign-symmetric.
pub fn omega_fixture<T: Scalar>() -> GainGraph<T> {
    // ω = exp(iπ/3) is one sixth of a turn: ω̄ = 5/6, ω̄² = 2/3.
    GainGraph::new(
        5,
        [
            (0, 1, turns(0, 1)),
            (0, 2, turns(0, 1)),
            (0, 3, turns(5, 6)),
            (0, 4, turns(2, 3)),
            (1, 2, turns(2, 3)),
            (1, 3, turns(2, 3)),
            (2, 4, turns(2, 3)),
        ],
    )
    .expect("fixture is well formed")
}

/// Signed hexagon `0..6` with chords 0–3 (negative) and 3–5, and `s` extra
/// vertices each joined to 0 and 4.
pub fn hexagon_family<T: Scalar>(s: usize) -> GainGraph<T> {
    let plus = turns(0, 1);
    let minus = turns(1, 2);
    let mut edges: Vec<(usize, usize, ComplexUnit<T>)> = (0..6).map(|v| (v, (v + 1) % 6, plus)).collect();
    edges.push((0, 3, minus));
    edges.push((3, 5, plus));
    for x in 6..6 + s {
        edges.push((0, x, plus));
        edges.push((4, x, plus));
    }
    GainGraph::new(6 + s, edges).expect("fixture is well formed")
}

/// Two triangles 0-1-2 and 2-3-4 sharing vertex 2, and a pendant 5 on 4.
/// All gains 1.
pub fn bowtie_with_pendant<T: Scalar>() -> GainGraph<T> {
    GainGraph::from_edges(6, &[(0, 2), (0, 1), (1, 2), (3, 2), (4, 3), (2, 4), (4, 5)])
        .expect("fixture is well formed")
}

/// Triangles 0-1-2 and 1-2-3 sharing edge 1–2, and the square 2-3-5-4.
/// All gains 1.
pub fn triangle_pair_with_square<T: Scalar>() -> GainGraph<T> {
    GainGraph::from_edges(
        6,
        &[(0, 2), (0, 1), (2, 1), (3, 1), (2, 4), (2, 3), (5, 4), (5, 3)],
    )
    .expect("fixture is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::eigenvalues;
    use approx::assert_abs_diff_eq;

    fn k2(z: ComplexUnit<f64>) -> GainGraph<f64> {
        GainGraph::new(2, [(0, 1, z)]).unwrap()
    }

    #[test]
    fn single_vertex_doubles() {
        let p = GainGraph::<f64>::empty(1);
        let b = GainMatrix::identity(1);
        let h = hermitian_double(&p, &b).unwrap();
        assert_eq!(h.m(), 1);
        let s = eigenvalues(&h).unwrap();
        assert_abs_diff_eq!(s.values()[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.values()[1], -1.0, epsilon = 1e-14);
        let z = turns(1, 10);
        assert!(identity_block_double(&p, z).approx_eq(&k2(z), 0.0));
        assert!(sylvester_double(&p, Some(z)).approx_eq(&k2(z), 0.0));
    }

    #[test]
    fn zero_block_is_disjoint_union() {
        let g = GainGraph::<f64>::new(3, [(0, 1, turns(1, 3)), (1, 2, turns(1, 8))]).unwrap();
        let h = hermitian_double(&g, &GainMatrix::zeros(3)).unwrap();
        assert!(h.approx_eq(&g.disjoint_union(&g.negate()), 0.0));
    }

    #[test]
    fn hermitian_double_validation() {
        let g = GainGraph::<f64>::empty(2);
        assert_eq!(
            hermitian_double(&g, &GainMatrix::identity(3)).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
        let mut b = GainMatrix::zeros(2);
        b.set(0, 1, Complex::new(0.0, 1.0));
        assert_eq!(hermitian_double(&g, &b).unwrap_err(), Error::NotHermitian { row: 0, col: 1 });
        b.set(1, 0, Complex::new(0.0, -1.0));
        assert!(hermitian_double(&g, &b).is_ok());
        b.set(0, 0, Complex::new(0.5, 0.0));
        assert_eq!(hermitian_double(&g, &b).unwrap_err(), Error::NonUnitEntry { row: 0, col: 0 });
    }

    #[test]
    fn identity_block_on_k2_is_square() {
        let h = identity_block_double(&k2(ComplexUnit::one()), ComplexUnit::one());
        assert_eq!(h.m(), 4);
        assert!((0..4).all(|v| h.degree(v) == 2));
        assert!(h.is_connected());
    }

    #[test]
    fn odd_anchor_on_k2() {
        for anchor in 0..2 {
            let h = odd_anchor_double(&k2(turns(1, 7)), anchor).unwrap();
            assert_eq!(h.n(), 3);
            assert_eq!(h.m(), 2);
            let s = eigenvalues(&h).unwrap();
            let r2 = 2f64.sqrt();
            for (a, b) in s.values().iter().zip([r2, 0.0, -r2]) {
                assert_abs_diff_eq!(*a, b, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn sylvester_gain_matrix_matches_blocks() {
        let g = GainGraph::<f64>::new(3, [(0, 1, turns(1, 5)), (1, 2, turns(2, 7))]).unwrap();
        let z = turns(1, 10);
        let m = sylvester_double(&g, Some(z)).gain_matrix();
        let a = g.gain_matrix();
        for r in 0..3 {
            for c in 0..3 {
                let cross = a.get(r, c) + if r == c { z.to_complex() } else { Complex::new(0.0, 0.0) };
                assert_abs_diff_eq!((m.get(r, c) - a.get(r, c)).norm(), 0.0, epsilon = 1e-15);
                assert_abs_diff_eq!((m.get(r, c + 3) - cross).norm(), 0.0, epsilon = 1e-15);
                let lower = a.get(r, c) + if r == c { z.to_complex().conj() } else { Complex::new(0.0, 0.0) };
                assert_abs_diff_eq!((m.get(r + 3, c) - lower).norm(), 0.0, epsilon = 1e-15);
                assert_abs_diff_eq!((m.get(r + 3, c + 3) + a.get(r, c)).norm(), 0.0, epsilon = 1e-15);
            }
        }
        assert_eq!(sylvester_double(&g, None).m(), 4 + 4);
    }

    #[test]
    fn fixtures_have_expected_shape() {
        let w = omega_fixture::<f64>();
        assert_eq!((w.n(), w.m()), (5, 7));
        assert!(w.gain_matrix().max_hermitian_defect() == 0.0);
        assert!(w.is_connected() && !w.is_bipartite());
        let h = hexagon_family::<f64>(1);
        assert_eq!((h.n(), h.m()), (7, 10));
        assert!(h.edges().iter().all(|e| e.gain.is_real(0.0)));
        assert_eq!(hexagon_family::<f64>(3).n(), 9);
        assert_eq!(bowtie_with_pendant::<f64>().m(), 7);
        assert_eq!(triangle_pair_with_square::<f64>().m(), 8);
    }

    #[test]
    fn quarter_turn_flag() {
        assert!(is_fourth_root_of_unity(&turns::<f64>(3, 4)));
        assert!(is_fourth_root_of_unity(&ComplexUnit::<f64>::new(-1.0, 0.0).unwrap()));
        assert!(!is_fourth_root_of_unity(&turns::<f64>(1, 10)));
    }
}
