use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{GainGraph, VertexPermutation};
use crate::scalar::Scalar;

pub const DEFAULT_AUTOMORPHISM_MAX_N: usize = 16;
pub const DEFAULT_MAX_ISOMORPHISMS: usize = 5_000_000;

/// Caps on the backtracking search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_n: usize,
    /// Isomorphisms visited before giving up with `BudgetExceeded`.
    pub max_isomorphisms: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_AUTOMORPHISM_MAX_N,
            max_isomorphisms: DEFAULT_MAX_ISOMORPHISMS,
        }
    }
}

/// Stable colour refinement run on both graphs at once so that colours are
/// comparable across them. Starts from degrees.
fn joint_refinement<T: Scalar>(g1: &GainGraph<T>, g2: &GainGraph<T>) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g1, g2];
    let mut colours: [Vec<usize>; 2] = [
        (0..g1.n()).map(|u| g1.degree(u)).collect(),
        (0..g2.n()).map(|u| g2.degree(u)).collect(),
    ];
    let mut classes = usize::MAX;
    loop {
        let mut signatures: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for side in 0..2 {
            let g = graphs[side];
            signatures[side] = (0..g.n())
                .map(|u| {
                    let mut around: Vec<usize> = g.neighbors(u).map(|v| colours[side][v]).collect();
                    around.sort_unstable();
                    (colours[side][u], around)
                })
                .collect();
        }
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for sig in signatures.iter().flatten() {
            let next = ids.len();
            ids.entry(sig).or_insert(next);
        }
        // Re-rank in sorted order so colours do not depend on vertex order.
        let ranked: BTreeMap<_, usize> = ids.keys().enumerate().map(|(i, k)| (*k, i)).collect();
        let count = ranked.len();
        for side in 0..2 {
            colours[side] = signatures[side].iter().map(|s| ranked[s]).collect();
        }
        if count == classes {
            break;
        }
        classes = count;
    }
    let [c1, c2] = colours;
    (c1, c2)
}

struct Backtrack<'a, T, F> {
    g1: &'a GainGraph<T>,
    g2: &'a GainGraph<T>,
    c1: Vec<usize>,
    c2: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    visited: usize,
    budget: usize,
    visit: F,
}

impl<T, F> Backtrack<'_, T, F>
where
    T: Scalar,
    F: FnMut(&VertexPermutation) -> ControlFlow<()>,
{
    fn extend(&mut self, u: usize) -> Result<ControlFlow<()>> {
        let n = self.g1.n();
        if u == n {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let p = VertexPermutation::new(self.image.clone()).expect("backtracking builds a bijection");
            return Ok((self.visit)(&p));
        }
        for cand in 0..n {
            if self.used[cand] || self.c1[u] != self.c2[cand] {
                continue;
            }
            let consistent = (0..u).all(|w| self.g1.has_edge(u, w) == self.g2.has_edge(cand, self.image[w]));
            if !consistent {
                continue;
            }
            self.image[u] = cand;
            self.used[cand] = true;
            let flow = self.extend(u + 1)?;
            self.used[cand] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Visits every isomorphism `Γ(g1) → Γ(g2)` in lexicographic order of the
/// image sequence. Returns the number visited.
pub fn for_each_isomorphism<T, F>(
    g1: &GainGraph<T>,
    g2: &GainGraph<T>,
    limits: SearchLimits,
    visit: F,
) -> Result<usize>
where
    T: Scalar,
    F: FnMut(&VertexPermutation) -> ControlFlow<()>,
{
    let n = g1.n();
    if n > limits.max_n || g2.n() > limits.max_n {
        return Err(Error::TooLarge {
            n: n.max(g2.n()),
            cap: limits.max_n,
        });
    }
    if n != g2.n() || g1.m() != g2.m() {
        return Ok(0);
    }
    let (c1, c2) = joint_refinement(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(0);
    }
    let mut bt = Backtrack {
        g1,
        g2,
        c1,
        c2,
        image: vec![0; n],
        used: vec![false; n],
        visited: 0,
        budget: limits.max_isomorphisms,
        visit,
    };
    let _ = bt.extend(0)?;
    Ok(bt.visited)
}

pub fn isomorphisms<T: Scalar>(
    g1: &GainGraph<T>,
    g2: &GainGraph<T>,
    limits: SearchLimits,
) -> Result<Vec<VertexPermutation>> {
    let mut out = Vec::new();
    for_each_isomorphism(g1, g2, limits, |p| {
        out.push(p.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Automorphisms of the underlying graph, gains ignored, lexicographic.
pub fn automorphisms<T: Scalar>(g: &GainGraph<T>) -> Result<Vec<VertexPermutation>> {
    automorphisms_with_limits(g, SearchLimits::default())
}

pub fn automorphisms_with_limits<T: Scalar>(
    g: &GainGraph<T>,
    limits: SearchLimits,
) -> Result<Vec<VertexPermutation>> {
    isomorphisms(g, g, limits)
}

/// Whether the underlying graph has a non-identity automorphism.
pub fn is_structurally_symmetric<T: Scalar>(g: &GainGraph<T>) -> Result<bool> {
    is_structurally_symmetric_with_limits(g, SearchLimits::default())
}

pub fn is_structurally_symmetric_with_limits<T: Scalar>(
    g: &GainGraph<T>,
    limits: SearchLimits,
) -> Result<bool> {
    let mut found = false;
    for_each_isomorphism(g, g, limits, |p| {
        if p.is_identity() {
            ControlFlow::Continue(())
        } else {
            found = true;
            ControlFlow::Break(())
        }
    })?;
    Ok(found)
}
