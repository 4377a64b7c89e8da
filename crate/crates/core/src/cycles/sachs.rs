use crate::cycles::cycle::{Cycle, GainAccumulator};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::scalar::Scalar;
use crate::unit::ComplexUnit;

pub const DEFAULT_SACHS_MAX_N: usize = 14;

/// A subgraph whose components are single edges or cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<Cycle>,
}

impl ElementarySubgraph {
    pub fn order(&self) -> usize {
        2 * self.edges.len() + self.cycles.iter().map(Cycle::len).sum::<usize>()
    }

    pub fn components(&self) -> usize {
        self.edges.len() + self.cycles.len()
    }
}

/// Recursive choice over the least uncovered vertex: leave it out, match
/// it to a higher neighbor, or route a cycle through it whose other
/// vertices are all higher.
struct Walker<'a, T, F> {
    adj: &'a [Vec<(usize, ComplexUnit<T>)>],
    covered: Vec<bool>,
    target: Option<usize>,
    edges: Vec<(usize, usize)>,
    cycles: Vec<(Vec<usize>, T)>,
    visit: F,
}

impl<T, F> Walker<'_, T, F>
where
    T: Scalar,
    F: FnMut(usize, &[(usize, usize)], &[(Vec<usize>, T)]),
{
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn cycles_through(&self, v: usize) -> Vec<(Vec<usize>, T)> {
        fn dfs<T: Scalar>(
            adj: &[Vec<(usize, ComplexUnit<T>)>],
            covered: &[bool],
            path: &mut Vec<usize>,
            on: &mut [bool],
            acc: GainAccumulator<T>,
            out: &mut Vec<(Vec<usize>, T)>,
        ) {
            let anchor = path[0];
            let u = *path.last().unwrap();
            for &(w, gain) in &adj[u] {
                if w == anchor {
                    if path.len() >= 3 && path[1] < u {
                        out.push((path.clone(), acc.times(gain).real()));
                    }
                } else if w > anchor && !covered[w] && !on[w] {
                    on[w] = true;
                    path.push(w);
                    dfs(adj, covered, path, on, acc.times(gain), out);
                    path.pop();
                    on[w] = false;
                }
            }
        }
        let mut out = Vec::new();
        let mut on = vec![false; self.n()];
        on[v] = true;
        dfs(
            self.adj,
            &self.covered,
            &mut vec![v],
            &mut on,
            GainAccumulator::new(),
            &mut out,
        );
        out
    }

    fn walk(&mut self, from: usize, order: usize) {
        let n = self.n();
        if let Some(j) = self.target {
            if order == j {
                (self.visit)(order, &self.edges, &self.cycles);
                return;
            }
            let free = (from..n).filter(|&v| !self.covered[v]).count();
            if order + free < j {
                return;
            }
        }
        let Some(v) = (from..n).find(|&v| !self.covered[v]) else {
            if self.target.is_none() {
                (self.visit)(order, &self.edges, &self.cycles);
            }
            return;
        };

        self.walk(v + 1, order);

        self.covered[v] = true;
        for idx in 0..self.adj[v].len() {
            let w = self.adj[v][idx].0;
            if w > v && !self.covered[w] {
                self.covered[w] = true;
                self.edges.push((v, w));
                self.walk(v + 1, order + 2);
                self.edges.pop();
                self.covered[w] = false;
            }
        }
        for (cycle, re) in self.cycles_through(v) {
            for &u in &cycle {
                self.covered[u] = true;
            }
            let len = cycle.len();
            self.cycles.push((cycle, re));
            self.walk(v + 1, order + len);
            let (cycle, _) = self.cycles.pop().unwrap();
            for &u in &cycle[1..] {
                self.covered[u] = false;
            }
        }
        self.covered[v] = false;
    }
}

fn walk_elementary<T, F>(g: &GainGraph<T>, target: Option<usize>, cap: usize, visit: F) -> Result<()>
where
    T: Scalar,
    F: FnMut(usize, &[(usize, usize)], &[(Vec<usize>, T)]),
{
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    let adj: Vec<Vec<_>> = (0..g.n()).map(|u| g.oriented_neighbors(u).collect()).collect();
    let mut walker = Walker {
        adj: &adj,
        covered: vec![false; g.n()],
        target,
        edges: Vec::new(),
        cycles: Vec::new(),
        visit,
    };
    walker.walk(0, 0);
    Ok(())
}

/// All elementary subgraphs on exactly `j` vertices.
pub fn elementary_subgraphs<T: Scalar>(g: &GainGraph<T>, j: usize) -> Result<Vec<ElementarySubgraph>> {
    elementary_subgraphs_with_cap(g, j, DEFAULT_SACHS_MAX_N)
}

pub fn elementary_subgraphs_with_cap<T: Scalar>(
    g: &GainGraph<T>,
    j: usize,
    cap: usize,
) -> Result<Vec<ElementarySubgraph>> {
    let mut out = Vec::new();
    if j > g.n() {
        return if g.n() > cap { Err(Error::TooLarge { n: g.n(), cap }) } else { Ok(out) };
    }
    walk_elementary(g, Some(j), cap, |_, edges, cycles| {
        out.push(ElementarySubgraph {
            edges: edges.to_vec(),
            cycles: cycles
                .iter()
                .map(|(c, _)| Cycle::from_canonical(c.clone()))
                .collect(),
        })
    })?;
    Ok(out)
}

fn weight<T: Scalar>(edges: &[(usize, usize)], cycles: &[(Vec<usize>, T)]) -> T {
    // (−1)^{components} · 2^{cycles} · ∏ Re φ(C)
    let sign = if (edges.len() + cycles.len()).is_multiple_of(2) { T::one() } else { -T::one() };
    cycles
        .iter()
        .fold(sign, |acc, (_, re)| acc * T::of(2.0) * *re)
}

/// The coefficient of `λ^{n−j}` in `det(λI − A)`, summed over elementary
/// subgraphs on `j` vertices.
pub fn sachs_coefficient<T: Scalar>(g: &GainGraph<T>, j: usize) -> Result<T> {
    if j == 0 {
        return Ok(T::one());
    }
    let mut sum = T::zero();
    if j > g.n() {
        return Ok(sum);
    }
    walk_elementary(g, Some(j), DEFAULT_SACHS_MAX_N, |_, e, c| sum += weight(e, c))?;
    Ok(sum)
}

/// `a_0 … a_n` from a single enumeration.
pub fn sachs_coefficients<T: Scalar>(g: &GainGraph<T>) -> Result<Vec<T>> {
    sachs_coefficients_with_cap(g, DEFAULT_SACHS_MAX_N)
}

pub fn sachs_coefficients_with_cap<T: Scalar>(g: &GainGraph<T>, cap: usize) -> Result<Vec<T>> {
    let mut a = vec![T::zero(); g.n() + 1];
    walk_elementary(g, None, cap, |order, e, c| a[order] += weight(e, c))?;
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::Turns;

    fn k(n: usize) -> GainGraph<f64> {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        GainGraph::from_edges(n, &e).unwrap()
    }

    /// Oracle: subsets of edges forming vertex-disjoint edges and cycles.
    fn brute_force_count(g: &GainGraph<f64>, j: usize) -> usize {
        let m = g.m();
        let mut count = 0;
        for mask in 0u32..(1 << m) {
            let mut deg = vec![0; g.n()];
            for i in 0..m {
                if mask >> i & 1 == 1 {
                    deg[g.edges()[i].u] += 1;
                    deg[g.edges()[i].v] += 1;
                }
            }
            if deg.iter().any(|&d| d > 2) {
                continue;
            }
            // Degree ≤ 2 components are paths or cycles; reject paths longer
            // than one edge by checking that degree-1 vertices pair up with
            // each other directly.
            let ok = (0..m).filter(|&i| mask >> i & 1 == 1).all(|i| {
                let e = g.edges()[i];
                !(deg[e.u] == 1 && deg[e.v] == 2 || deg[e.u] == 2 && deg[e.v] == 1)
            });
            let order = deg.iter().filter(|&&d| d > 0).count();
            if ok && order == j {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn triangle_subgraphs() {
        let c3 = k(3);
        assert_eq!(elementary_subgraphs(&c3, 2).unwrap().len(), 3);
        let tri = elementary_subgraphs(&c3, 3).unwrap();
        assert_eq!(tri.len(), 1);
        assert_eq!(tri[0].cycles.len(), 1);
    }

    #[test]
    fn k4_perfect_matchings_and_squares() {
        let subs = elementary_subgraphs(&k(4), 4).unwrap();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs.iter().filter(|s| s.edges.len() == 2).count(), 3);
        assert_eq!(subs.iter().filter(|s| s.cycles.len() == 1).count(), 3);
        assert_eq!(brute_force_count(&k(4), 4), 6);
    }

    #[test]
    fn counts_match_edge_subset_oracle() {
        let g = k(5);
        for j in 0..=5 {
            assert_eq!(elementary_subgraphs(&g, j).unwrap().len(), brute_force_count(&g, j), "j={j}");
            for s in elementary_subgraphs(&g, j).unwrap() {
                assert_eq!(s.order(), j);
            }
        }
    }

    #[test]
    fn triangle_coefficients() {
        let phi = ComplexUnit::from_turns(Turns::new(1, 6).unwrap());
        let one = ComplexUnit::one();
        let g = GainGraph::<f64>::new(3, [(0, 1, one), (1, 2, one), (0, 2, phi.conj())]).unwrap();
        assert_eq!(sachs_coefficient(&g, 0).unwrap(), 1.0);
        assert_eq!(sachs_coefficient(&g, 1).unwrap(), 0.0);
        assert_eq!(sachs_coefficient(&g, 2).unwrap(), -3.0);
        assert!((sachs_coefficient(&g, 3).unwrap() + 2.0 * 0.5).abs() < 1e-15);
        let all = sachs_coefficients(&g).unwrap();
        assert_eq!(all.len(), 4);
        assert!((all[3] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_coefficients() {
        // det(λI − A(C4)) = λ⁴ − 4λ²
        let c4 = GainGraph::<f64>::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(sachs_coefficients(&c4).unwrap(), vec![1.0, 0.0, -4.0, 0.0, 0.0]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = GainGraph::<f64>::empty(15);
        assert_eq!(sachs_coefficient(&g, 2).unwrap_err(), Error::TooLarge { n: 15, cap: 14 });
    }
}
