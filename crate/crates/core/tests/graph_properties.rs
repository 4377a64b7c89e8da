mod common;

use common::{graph, graph_with_moves, switching};
use gainsym::cycles::{cycle_gain, enumerate_cycles};
use gainsym::{GainMatrix64, SwitchingFunction};
use num_complex::Complex;
use proptest::prelude::*;

proptest! {
    #[test]
    fn switching_by_the_conjugate_undoes_a_switch((g, x, _) in graph_with_moves(1, 8)) {
        let back = g.switch(&x).unwrap().switch(&x.conj()).unwrap();
        prop_assert!(back.approx_eq(&g, 1e-12));
    }

    #[test]
    fn switching_composes(
        (g, x, y) in graph(1, 8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), switching(n), switching(n))
        })
    ) {
        let xy = SwitchingFunction(x.0.iter().zip(&y.0).map(|(a, b)| *a * *b).collect());
        let twice = g.switch(&y).unwrap().switch(&x).unwrap();
        prop_assert!(twice.approx_eq(&g.switch(&xy).unwrap(), 1e-12));
    }

    #[test]
    fn cycle_gains_are_switching_invariant((g, x, _) in graph_with_moves(3, 8)) {
        let h = g.switch(&x).unwrap();
        for c in enumerate_cycles(&g, g.n()).unwrap() {
            let a = cycle_gain(&g, &c).unwrap();
            let b = cycle_gain(&h, &c).unwrap();
            prop_assert!(a.approx_eq(&b, 1e-10), "{:?}: {:?} vs {:?}", c, a, b);
        }
    }

    #[test]
    fn negation_and_converse_are_involutions(g in graph(0, 8)) {
        prop_assert_eq!(g.negate().negate(), g.clone());
        prop_assert_eq!(g.converse().converse(), g);
    }

    #[test]
    fn switched_matrix_is_a_diagonal_conjugation((g, x, _) in graph_with_moves(1, 8)) {
        let n = g.n();
        let mut diag = GainMatrix64::zeros(n);
        let mut diag_star = GainMatrix64::zeros(n);
        for (v, xv) in x.0.iter().enumerate() {
            diag.set(v, v, xv.to_complex());
            diag_star.set(v, v, xv.conj().to_complex());
        }
        let expected = diag.mul(&g.gain_matrix()).mul(&diag_star);
        let actual = g.switch(&x).unwrap().gain_matrix();
        for r in 0..n {
            for c in 0..n {
                let d: Complex<f64> = expected.get(r, c) - actual.get(r, c);
                prop_assert!(d.norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn relabeling_moves_gains_with_vertices((g, _, p) in graph_with_moves(1, 8)) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(h.m(), g.m());
        for e in g.edges() {
            let moved = h.gain(p.apply(e.u), p.apply(e.v)).unwrap();
            prop_assert!(moved.approx_eq(&e.gain, 0.0));
        }
        prop_assert_eq!(h.relabel(&p.inverse()).unwrap(), g);
    }

    #[test]
    fn gain_matrix_is_hermitian_with_unit_entries(g in graph(0, 8)) {
        let a = g.gain_matrix();
        prop_assert_eq!(a.max_hermitian_defect(), 0.0);
        for e in g.edges() {
            prop_assert!((a.get(e.u, e.v).norm() - 1.0).abs() <= 1e-12);
        }
    }
}
