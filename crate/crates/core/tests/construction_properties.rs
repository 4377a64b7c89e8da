mod common;

use common::{exact, graph, max_abs_diff, unit};
use gainsym::constructions::{
    all_imaginary, bowtie_with_pendant, hermitian_double, hexagon_family, identity_block_double, is_fourth_root_of_unity,
    odd_anchor_double, omega_fixture, sylvester_double,
};
use gainsym::cycles::{cycle_gain, enumerate_cycles, Cycle};
use gainsym::equivalence::{automorphisms, is_sign_symmetric, is_structurally_symmetric, NonEquivalence};
use gainsym::spectra::{eigenvalues, is_spectrally_symmetric};
use gainsym::{ComplexUnit64, Error, GainGraph64, GainMatrix64, VertexPermutation};
use num_complex::Complex;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn connected(max_n: usize) -> impl Strategy<Value = GainGraph64> {
    graph(1, max_n).prop_filter("connected", |g| g.is_connected())
}

/// Hermitian, entries zero or unit, real diagonal.
fn hermitian_block(n: usize) -> impl Strategy<Value = GainMatrix64> {
    let entry = prop_oneof![Just(None), unit().prop_map(Some)];
    let diag = prop_oneof![Just(0.0), Just(1.0), Just(-1.0)];
    (prop::collection::vec(entry, n * n), prop::collection::vec(diag, n)).prop_map(move |(off, diag)| {
        let mut b = GainMatrix64::zeros(n);
        for r in 0..n {
            b.set(r, r, Complex::new(diag[r], 0.0));
            for c in r + 1..n {
                if let Some(z) = off[r * n + c] {
                    b.set(r, c, z.to_complex());
                    b.set(c, r, z.to_complex().conj());
                }
            }
        }
        b
    })
}

fn assert_symmetric(g: &GainGraph64) -> Result<(), TestCaseError> {
    let r = is_spectrally_symmetric(g, TOL).unwrap();
    prop_assert!(r.symmetric && r.residual <= TOL * r.scale, "residual {}", r.residual);
    Ok(())
}

proptest! {
    #[test]
    fn every_double_is_spectrally_symmetric(g in connected(6), z in unit(), anchor in any::<prop::sample::Index>()) {
        assert_symmetric(&hermitian_double(&g, &GainMatrix64::identity(g.n())).unwrap())?;
        assert_symmetric(&identity_block_double(&g, z))?;
        assert_symmetric(&odd_anchor_double(&g, anchor.index(g.n())).unwrap())?;
        assert_symmetric(&sylvester_double(&g, Some(z)))?;
        assert_symmetric(&sylvester_double(&g, None))?;
    }

    #[test]
    fn hermitian_double_is_symmetric_for_any_block(
        (g, b) in graph(1, 6).prop_flat_map(|g| { let n = g.n(); (Just(g), hermitian_block(n)) })
    ) {
        let d = hermitian_double(&g, &b).unwrap();
        assert_symmetric(&d)?;
        prop_assert!(is_sign_symmetric(&d).unwrap().result);
    }

    #[test]
    fn lemma_doubles_are_sign_symmetric(g in connected(6), z in unit(), anchor in any::<prop::sample::Index>()) {
        prop_assert!(is_sign_symmetric(&hermitian_double(&g, &GainMatrix64::identity(g.n())).unwrap()).unwrap().result);
        prop_assert!(is_sign_symmetric(&identity_block_double(&g, z)).unwrap().result);
        prop_assert!(is_sign_symmetric(&odd_anchor_double(&g, anchor.index(g.n())).unwrap()).unwrap().result);
    }

    #[test]
    fn sylvester_double_of_a_signed_graph_is_sign_symmetric(g in connected(5), signs in prop::collection::vec(any::<bool>(), 25), z in unit()) {
        let signed = g.map_gains(|e| if signs[e.u * 5 + e.v] { ComplexUnit64::one() } else { -ComplexUnit64::one() });
        prop_assert!(is_sign_symmetric(&sylvester_double(&signed, Some(z))).unwrap().result);
        prop_assert!(is_sign_symmetric(&sylvester_double(&signed, None)).unwrap().result);
    }

    #[test]
    fn sylvester_double_admits_the_copy_transpositions(g in graph(1, 6), z in unit()) {
        let d = sylvester_double(&g, Some(z));
        let n = g.n();
        for v in 0..n {
            let mut p: Vec<usize> = (0..2 * n).collect();
            p.swap(v, v + n);
            prop_assert!(d.relabel(&VertexPermutation::new(p).unwrap()).unwrap().same_underlying(&d));
        }
    }

    #[test]
    fn identity_double_mirrors_odd_cycles_with_negated_gain(g in graph(3, 6), z in unit()) {
        let d = identity_block_double(&g, z);
        let n = g.n();
        for c in enumerate_cycles(&g, n).unwrap().iter().filter(|c| c.is_odd()) {
            let mirror = Cycle::new(c.vertices().iter().map(|v| v + n).collect()).unwrap();
            let a = cycle_gain(&d, c).unwrap();
            let b = cycle_gain(&d, &mirror).unwrap();
            prop_assert!(a.approx_eq(&-b, 1e-12));
        }
    }

    #[test]
    fn zero_block_gives_the_disjoint_union_with_the_negation(g in graph(1, 6)) {
        let d = hermitian_double(&g, &GainMatrix64::zeros(g.n())).unwrap();
        prop_assert_eq!(d, g.disjoint_union(&g.negate()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn sylvester_double_of_an_asymmetric_graph_has_only_copy_swaps(
        g in graph(6, 7).prop_filter("connected", |g| g.is_connected()),
        z in unit(),
    ) {
        prop_assume!(automorphisms(&g).unwrap().len() == 1);
        let n = g.n();
        for d in [sylvester_double(&g, Some(z)), sylvester_double(&g, None)] {
            let auts = automorphisms(&d).unwrap();
            prop_assert_eq!(auts.len(), 1 << n);
            for p in &auts {
                prop_assert!((0..2 * n).all(|v| p.apply(v) % n == v % n));
            }
        }
    }
}

#[test]
fn hermitian_double_rejects_bad_blocks() {
    let g = GainGraph64::from_edges(2, &[(0, 1)]).unwrap();
    assert_eq!(
        hermitian_double(&g, &GainMatrix64::identity(3)).unwrap_err(),
        Error::DimensionMismatch { expected: 2, found: 3 }
    );
    let mut b = GainMatrix64::zeros(2);
    b.set(0, 1, Complex::new(0.0, 1.0));
    assert_eq!(hermitian_double(&g, &b).unwrap_err(), Error::NotHermitian { row: 0, col: 1 });
    b.set(1, 0, Complex::new(0.0, -1.0));
    assert!(hermitian_double(&g, &b).is_ok());
    let mut half = GainMatrix64::zeros(2);
    half.set(0, 0, Complex::new(0.5, 0.0));
    assert_eq!(hermitian_double(&g, &half).unwrap_err(), Error::NonUnitEntry { row: 0, col: 0 });
}

#[test]
fn small_doubles() {
    let k1 = GainGraph64::empty(1);
    let k2 = hermitian_double(&k1, &GainMatrix64::identity(1)).unwrap();
    assert_eq!(k2.m(), 1);
    assert!(max_abs_diff(eigenvalues(&k2).unwrap().values(), &[1.0, -1.0]) < 1e-12);
    let z = exact(1, 6);
    let s = sylvester_double(&k1, Some(z));
    assert_eq!(s.gain(0, 1), Some(z));
    assert!(max_abs_diff(eigenvalues(&s).unwrap().values(), &[1.0, -1.0]) < 1e-12);
    assert_eq!(identity_block_double(&k1, ComplexUnit64::one()).m(), 1);

    let edge = GainGraph64::from_edges(2, &[(0, 1)]).unwrap();
    for anchor in 0..2 {
        let p3 = odd_anchor_double(&edge, anchor).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let r2 = 2f64.sqrt();
        assert!(max_abs_diff(eigenvalues(&p3).unwrap().values(), &[r2, 0.0, -r2]) < 1e-12);
    }
}

#[test]
fn fourth_roots() {
    for q in 0..4 {
        assert!(is_fourth_root_of_unity(&exact(q, 4)));
    }
    assert!(!is_fourth_root_of_unity(&exact(1, 10)));
    assert!(!is_fourth_root_of_unity(&ComplexUnit64::from_angle(0.3)));
}

#[test]
fn all_imaginary_cycles() {
    let c3 = GainGraph64::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let g = all_imaginary(&c3);
    let phi = cycle_gain(&g, &Cycle::new(vec![0, 1, 2]).unwrap()).unwrap();
    assert!(phi.re().abs() < 1e-15 && (phi.im().abs() - 1.0).abs() < 1e-15);
    assert!(is_spectrally_symmetric(&g, TOL).unwrap().symmetric);
    let c5 = GainGraph64::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    assert!(is_spectrally_symmetric(&all_imaginary(&c5), TOL).unwrap().symmetric);
    let k4 = GainGraph64::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let g = all_imaginary(&k4);
    assert!(is_spectrally_symmetric(&g, TOL).unwrap().symmetric);
    assert!(is_sign_symmetric(&g).unwrap().result);
}

#[test]
fn omega_fixture_shape() {
    let g: GainGraph64 = omega_fixture();
    assert_eq!((g.n(), g.m()), (5, 7));
    assert_eq!(g.gain_matrix().max_hermitian_defect(), 0.0);
    let props = g.underlying_properties();
    assert!(props.connected && !props.bipartite);
    assert!(g.edges().iter().all(|e| e.gain.turns().is_some_and(|t| 6 % t.denom() == 0)));
}

#[test]
fn named_fixtures_are_not_asymmetric() {
    let omega: GainGraph64 = omega_fixture();
    let auts: Vec<Vec<usize>> = automorphisms(&omega).unwrap().iter().map(|p| p.as_slice().to_vec()).collect();
    assert_eq!(auts, vec![vec![0, 1, 2, 3, 4], vec![0, 2, 1, 4, 3]]);
    let bowtie: GainGraph64 = bowtie_with_pendant();
    assert!(is_structurally_symmetric(&bowtie).unwrap());
    assert!(automorphisms(&bowtie).unwrap().iter().any(|p| p.as_slice() == [1, 0, 2, 3, 4, 5]));
}

#[test]
fn sylvester_double_of_the_omega_fixture_is_not_sign_symmetric() {
    let g: GainGraph64 = omega_fixture();
    let d = sylvester_double(&g, Some(exact(1, 10)));
    assert!(is_spectrally_symmetric(&d, TOL).unwrap().symmetric);
    let r = is_sign_symmetric(&d).unwrap();
    assert!(!r.result);
    assert!(matches!(r.reason, Some(NonEquivalence::CensusObstruction { .. })));
}

#[test]
fn hexagon_family_is_spectrally_but_not_sign_symmetric() {
    for s in 1..=3 {
        let g: GainGraph64 = hexagon_family(s);
        assert_eq!((g.n(), g.m()), (6 + s, 8 + 2 * s));
        assert!(g.edges().iter().all(|e| e.gain.is_real(0.0)));
        let r = is_spectrally_symmetric(&g, TOL).unwrap();
        assert!(r.symmetric, "s = {s}: residual {}", r.residual);
        assert!(!is_sign_symmetric(&g).unwrap().result, "s = {s}");
    }
}

#[test]
fn sylvester_double_of_an_asymmetric_tree_has_only_copy_swaps() {
    // Spider with legs of lengths 1, 2 and 3: the smallest asymmetric tree.
    let tree = GainGraph64::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    assert!(!is_structurally_symmetric(&tree).unwrap());
    let d = sylvester_double(&tree, Some(exact(1, 10)));
    assert_eq!(automorphisms(&d).unwrap().len(), 1 << 7);
}
