#![allow(dead_code)]

use std::f64::consts::TAU;

use gainsym::cycles::{cycle_gain, enumerate_cycles};
use gainsym::{ComplexUnit64, GainGraph64, SwitchingFunction, SwitchingFunction64, Turns, VertexPermutation};
use nalgebra::{Complex, DMatrix};
use proptest::prelude::*;

pub fn exact(p: i64, q: i64) -> ComplexUnit64 {
    ComplexUnit64::from_turns(Turns::new(p, q).unwrap())
}

/// Exact roots of unity half the time, arbitrary angles otherwise.
pub fn unit() -> impl Strategy<Value = ComplexUnit64> {
    prop_oneof![
        (0i64..24, 1i64..=12).prop_map(|(p, q)| exact(p, q)),
        (0.0..TAU).prop_map(ComplexUnit64::from_angle),
    ]
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = GainGraph64> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n.saturating_sub(1)) / 2;
        (
            Just(n),
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(unit(), pairs),
        )
            .prop_map(|(n, mask, gains)| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask[i] {
                            edges.push((u, v, gains[i]));
                        }
                        i += 1;
                    }
                }
                GainGraph64::new(n, edges).unwrap()
            })
    })
}

pub fn switching(n: usize) -> impl Strategy<Value = SwitchingFunction64> {
    prop::collection::vec(unit(), n).prop_map(SwitchingFunction)
}

pub fn permutation(n: usize) -> impl Strategy<Value = VertexPermutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| VertexPermutation::new(p).unwrap())
}

/// A graph together with a switching function and a permutation of its order.
pub fn graph_with_moves(min_n: usize, max_n: usize) -> impl Strategy<Value = (GainGraph64, SwitchingFunction64, VertexPermutation)> {
    graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), switching(n), permutation(n))
    })
}

/// Random bipartite graph on a random split.
pub fn bipartite(max_n: usize) -> impl Strategy<Value = GainGraph64> {
    graph(2, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(any::<bool>(), n))
    })
    .prop_map(|(g, side)| {
        let edges: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| side[e.u] != side[e.v])
            .map(|e| (e.u, e.v, e.gain))
            .collect();
        GainGraph64::new(g.n(), edges).unwrap()
    })
}

/// Eigenvalues from nalgebra's Hermitian solver, descending.
pub fn oracle_eigenvalues(g: &GainGraph64) -> Vec<f64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let a = g.gain_matrix();
    let m = DMatrix::from_fn(n, n, |r, c| {
        let z = a.get(r, c);
        Complex::new(z.re, z.im)
    });
    let mut v: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// `∏(λ − λ_i)` from the oracle spectrum.
pub fn oracle_char_poly(g: &GainGraph64) -> Vec<f64> {
    let mut c = vec![1.0];
    for root in oracle_eigenvalues(g) {
        c.push(0.0);
        for j in (1..c.len()).rev() {
            let prev = c[j - 1];
            c[j] -= root * prev;
        }
    }
    c
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Switching isomorphism decided from the gains of every simple cycle under
/// every vertex permutation, with and without the converse.
pub fn oracle_switching_isomorphic(g1: &GainGraph64, g2: &GainGraph64, tol: f64) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let cycles = enumerate_cycles(g2, g2.n()).unwrap();
    all_permutations(g1.n()).into_iter().any(|p| {
        let perm = VertexPermutation::new(p).unwrap();
        let h = g1.relabel(&perm).unwrap();
        if !h.same_underlying(g2) {
            return false;
        }
        [h.clone(), h.converse()].iter().any(|cand| {
            cycles.iter().all(|c| {
                let a = cycle_gain(cand, c).unwrap().to_complex();
                let b = cycle_gain(g2, c).unwrap().to_complex();
                (a - b).norm() <= tol
            })
        })
    })
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Odd cycle `0..k` carrying `phi` on its closing edge, with extra vertices
/// hung as a random forest and each edge switched at random afterwards.
pub fn unicyclic(max_n: usize, phi: impl Strategy<Value = ComplexUnit64>) -> impl Strategy<Value = (GainGraph64, ComplexUnit64)> {
    ((1usize..=3).prop_map(|h| 2 * h + 1), phi)
        .prop_flat_map(move |(k, phi)| {
            let extra = max_n.saturating_sub(k);
            (
                Just(k),
                Just(phi),
                prop::collection::vec((any::<prop::sample::Index>(), unit()), 0..=extra),
            )
        })
        .prop_flat_map(|(k, phi, hang)| {
            let n = k + hang.len();
            let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1, ComplexUnit64::one())).collect();
            edges.push((0, k - 1, phi.conj()));
            for (j, (parent, gain)) in hang.iter().enumerate() {
                let v = k + j;
                edges.push((parent.index(v), v, *gain));
            }
            let g = GainGraph64::new(n, edges).unwrap();
            (Just(g), switching(n), permutation(n), Just(phi))
        })
        .prop_map(|(g, x, p, phi)| (g.switch(&x).unwrap().relabel(&p).unwrap(), phi))
}
