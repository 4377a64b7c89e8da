//! Gain-graph representation and elementary transformations.

use std::collections::VecDeque;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::unit::ComplexUnit;

/// An undirected edge stored once with `u < v`; `gain` is ψ(uv).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T> {
    pub u: usize,
    pub v: usize,
    pub gain: ComplexUnit<T>,
}

/// Simple undirected graph with a complex unit gain on every oriented edge.
///
/// The reverse gain ψ(vu) is the conjugate of the stored ψ(uv) and is
/// never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GainGraph<T> {
    n: usize,
    edges: Vec<Edge<T>>,
    // Sorted by neighbor; each entry is (neighbor, edge index).
    adj: Vec<Vec<(usize, usize)>>,
}

/// Structural predicates of the underlying graph, gains ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnderlyingProperties {
    pub connected: bool,
    pub bipartite: bool,
    pub two_connected: bool,
    pub m: usize,
}

impl<T: Scalar> GainGraph<T> {
    /// Builds and validates a gain graph. Edges given with `u > v` are
    /// flipped and their gain conjugated.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, ComplexUnit<T>)>,
    {
        let mut list = Vec::new();
        for (u, v, gain) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(if u < v {
                Edge { u, v, gain }
            } else {
                Edge {
                    u: v,
                    v: u,
                    gain: gain.conj(),
                }
            });
        }
        list.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = list.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return Err(Error::DuplicateEdge { u: w[0].u, v: w[0].v });
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds from cartesian gains, checking the unit modulus per edge.
    pub fn from_cartesian(n: usize, edges: &[(usize, usize, T, T)]) -> Result<Self> {
        let mut list = Vec::with_capacity(edges.len());
        for (idx, &(u, v, re, im)) in edges.iter().enumerate() {
            list.push((u, v, ComplexUnit::new_indexed(re, im, idx)?));
        }
        Self::new(n, list)
    }

    /// All gains equal to 1.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, ComplexUnit::one())))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<Edge<T>>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Self { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&(v, _)| v)
    }

    /// Neighbors of `u` with the gain oriented from `u`.
    pub fn oriented_neighbors(&self, u: usize) -> impl Iterator<Item = (usize, ComplexUnit<T>)> + '_ {
        self.adj[u].iter().map(move |&(v, i)| {
            let g = self.edges[i].gain;
            (v, if self.edges[i].u == u { g } else { g.conj() })
        })
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let a = self.adj.get(u)?;
        a.binary_search_by_key(&v, |&(w, _)| w).ok().map(|k| a[k].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// ψ(uv), conjugating the stored gain when `u > v`.
    pub fn gain(&self, u: usize, v: usize) -> Option<ComplexUnit<T>> {
        self.edge_index(u, v).map(|i| {
            let e = &self.edges[i];
            if e.u == u {
                e.gain
            } else {
                e.gain.conj()
            }
        })
    }

    /// Same vertex count and edge set, gains ignored.
    pub fn same_underlying(&self, other: &GainGraph<T>) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| (a.u, a.v) == (b.u, b.v))
    }

    pub fn map_gains<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Edge<T>) -> ComplexUnit<T>,
    {
        let edges = self.edges.iter().map(|e| Edge { gain: f(e), ..*e }).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Gains approximately equal edge by edge on the same underlying graph.
    pub fn approx_eq(&self, other: &GainGraph<T>, tol: f64) -> bool {
        self.same_underlying(other)
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.gain.approx_eq(&b.gain, tol))
    }

    pub fn gain_matrix(&self) -> GainMatrix<T> {
        let mut a = GainMatrix::zeros(self.n);
        for e in &self.edges {
            let g = e.gain.to_complex();
            a.set(e.u, e.v, g);
            a.set(e.v, e.u, g.conj());
        }
        a
    }

    /// ψ′(uv) = x[u]·ψ(uv)·conj(x[v]).
    pub fn switch(&self, x: &SwitchingFunction<T>) -> Result<Self> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self.map_gains(|e| x.0[e.u] * e.gain * x.0[e.v].conj()))
    }

    pub fn negate(&self) -> Self {
        self.map_gains(|e| -e.gain)
    }

    pub fn converse(&self) -> Self {
        self.map_gains(|e| e.gain.conj())
    }

    /// Vertex `u` becomes `p[u]`.
    pub fn relabel(&self, p: &VertexPermutation) -> Result<Self> {
        if p.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        Self::new(
            self.n,
            self.edges.iter().map(|e| (p.apply(e.u), p.apply(e.v), e.gain)),
        )
    }

    pub fn disjoint_union(&self, other: &GainGraph<T>) -> Self {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge {
                u: e.u + shift,
                v: e.v + shift,
                gain: e.gain,
            }))
            .collect();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Two-coloring of every component, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Cut vertices of the underlying graph, in increasing order.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS: (vertex, parent, next neighbor position).
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let v = self.adj[u][*pos].0;
                    *pos += 1;
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, 0));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    pub fn underlying_properties(&self) -> UnderlyingProperties {
        let connected = self.is_connected();
        UnderlyingProperties {
            connected,
            bipartite: self.is_bipartite(),
            two_connected: connected && self.n >= 3 && self.articulation_points().is_empty(),
            m: self.m(),
        }
    }

    pub fn cast<U: Scalar>(&self) -> GainGraph<U> {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                gain: e.gain.cast(),
            })
            .collect();
        GainGraph::from_sorted(self.n, edges)
    }
}

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GainMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> GainMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, z: Complex<T>) {
        self.data[r * self.n + c] = z;
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn max_hermitian_defect(&self) -> T {
        let mut worst = T::zero();
        for r in 0..self.n {
            for c in r..self.n {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn mul(&self, other: &GainMatrix<T>) -> GainMatrix<T> {
        let n = self.n;
        let mut out = GainMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// `X·A·X*` for diagonal unitary `X`.
    pub fn conjugate_by_diagonal(&self, x: &SwitchingFunction<T>) -> GainMatrix<T> {
        let mut out = self.clone();
        for r in 0..self.n {
            for c in 0..self.n {
                let z = x.0[r].to_complex() * self.get(r, c) * x.0[c].to_complex().conj();
                out.set(r, c, z);
            }
        }
        out
    }
}

/// Diagonal of a switching matrix `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingFunction<T>(pub Vec<ComplexUnit<T>>);

impl<T: Scalar> SwitchingFunction<T> {
    pub fn identity(n: usize) -> Self {
        Self(vec![ComplexUnit::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(|z| z.conj()).collect())
    }
}

/// A bijection on `0..n`; vertex `u` is sent to `p[u]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(p: Vec<usize>) -> Result<Self> {
        let n = p.len();
        let mut seen = vec![false; n];
        for &x in &p {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Self(p))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, u: usize) -> usize {
        self.0[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Self(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> Self {
        Self(other.0.iter().map(|&u| self.0[u]).collect())
    }
}
