use std::collections::VecDeque;

use crate::cycles::census::{for_each_cycle, DEFAULT_CYCLE_BUDGET};
use crate::cycles::cycle::{Cycle, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::scalar::Scalar;

/// A basis of the cycle space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<Cycle>,
    /// The spanning forest used, for fundamental bases.
    pub tree_edges: Option<Vec<(usize, usize)>>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn rank<T: Scalar>(&self, g: &GainGraph<T>) -> Result<usize> {
        let sets = self
            .cycles
            .iter()
            .map(|c| c.edge_set(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(gf2_rank(&sets))
    }
}

/// Incremental Gaussian elimination over GF(2).
#[derive(Debug, Clone, Default)]
pub struct Gf2Eliminator {
    // (pivot, row); no row contains another row's pivot.
    rows: Vec<(usize, EdgeSet)>,
}

impl Gf2Eliminator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residue.
    pub fn reduce(&self, v: &EdgeSet) -> EdgeSet {
        // Rows are fully reduced, so a single pass clears every pivot.
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if v.contains(*p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn is_independent(&self, v: &EdgeSet) -> bool {
        !self.reduce(v).is_empty()
    }

    /// Adds `v` if it is independent of the stored rows.
    pub fn insert(&mut self, v: &EdgeSet) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(lead) => {
                // Keep leads unique: clear `lead` from older rows.
                for (_, row) in &mut self.rows {
                    if row.contains(lead) {
                        row.xor_assign(&r);
                    }
                }
                self.rows.push((lead, r));
                true
            }
        }
    }
}

pub fn gf2_rank(vectors: &[EdgeSet]) -> usize {
    let mut elim = Gf2Eliminator::new();
    vectors.iter().filter(|v| elim.insert(v)).count()
}

struct Forest {
    parent: Vec<usize>,
    depth: Vec<usize>,
    in_tree: Vec<bool>,
}

fn bfs_forest<T: Scalar>(g: &GainGraph<T>) -> Forest {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut in_tree = vec![false; g.m()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    in_tree[g.edge_index(u, v).unwrap()] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Forest {
        parent,
        depth,
        in_tree,
    }
}

/// Spanning-forest edges of the breadth-first forest rooted at the least
/// vertex of each component, as `(parent, child)` pairs in visiting order.
pub(crate) fn spanning_forest<T: Scalar>(g: &GainGraph<T>) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    out.push((u, v));
                    queue.push_back(v);
                }
            }
        }
    }
    out
}

fn tree_path_cycle(forest: &Forest, u: usize, v: usize) -> Cycle {
    let (mut a, mut b) = (u, v);
    let mut up = vec![u];
    let mut down = vec![v];
    while a != b {
        if forest.depth[a] >= forest.depth[b] {
            a = forest.parent[a];
            up.push(a);
        } else {
            b = forest.parent[b];
            down.push(b);
        }
    }
    down.pop();
    up.extend(down.into_iter().rev());
    Cycle::new(up).expect("tree path plus chord is a simple cycle")
}

/// One cycle per cotree edge of a breadth-first spanning forest.
pub fn fundamental_cycle_basis<T: Scalar>(g: &GainGraph<T>) -> CycleBasis {
    let forest = bfs_forest(g);
    let mut cycles = Vec::new();
    let mut tree_edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if forest.in_tree[i] {
            tree_edges.push((e.u, e.v));
        } else {
            cycles.push(tree_path_cycle(&forest, e.u, e.v));
        }
    }
    CycleBasis {
        cycles,
        tree_edges: Some(tree_edges),
    }
}

/// The edge set as a single simple cycle, if it is one.
fn as_simple_cycle<T: Scalar>(g: &GainGraph<T>, set: &EdgeSet) -> Option<Cycle> {
    let mut deg = vec![0usize; g.n()];
    let mut first = None;
    for i in set.iter() {
        let e = &g.edges()[i];
        deg[e.u] += 1;
        deg[e.v] += 1;
        first.get_or_insert(e.u);
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return None;
    }
    let start = first?;
    let mut seq = vec![start];
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        let next = g
            .neighbors(cur)
            .find(|&w| w != prev && set.contains(g.edge_index(cur, w).unwrap()))?;
        if next == start {
            break;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
    (seq.len() == set.count()).then(|| Cycle::new(seq).ok()).flatten()
}

/// Splits an even-degree edge set into edge-disjoint simple cycles.
fn decompose_eulerian<T: Scalar>(g: &GainGraph<T>, set: &EdgeSet) -> Vec<Cycle> {
    let n = g.n();
    let mut used = vec![false; g.m()];
    let mut pos: Vec<Option<usize>> = vec![None; n];
    let mut out = Vec::new();
    let incident = |u: usize, used: &[bool]| {
        g.neighbors(u).find_map(|w| {
            let e = g.edge_index(u, w).unwrap();
            (set.contains(e) && !used[e]).then_some((w, e))
        })
    };
    for start in 0..n {
        while incident(start, &used).is_some() {
            let mut path = vec![start];
            pos[start] = Some(0);
            let mut u = start;
            while let Some((w, e)) = incident(u, &used) {
                used[e] = true;
                match pos[w] {
                    Some(i) => {
                        if path.len() - i >= 3 {
                            if let Ok(c) = Cycle::new(path[i..].to_vec()) {
                                out.push(c);
                            }
                        }
                        for &v in &path[i + 1..] {
                            pos[v] = None;
                        }
                        path.truncate(i + 1);
                    }
                    None => {
                        pos[w] = Some(path.len());
                        path.push(w);
                    }
                }
                u = w;
            }
            for &v in &path {
                pos[v] = None;
            }
        }
    }
    out
}

/// A basis of the cycle space made only of odd cycles.
///
/// Even fundamental cycles are replaced by their symmetric difference with
/// the shortest odd fundamental cycle, or by an odd cycle extracted from
/// that difference; any remaining deficit is filled greedily from the odd
/// simple cycles in order of length.
pub fn odd_cycle_basis<T: Scalar>(g: &GainGraph<T>) -> Result<CycleBasis> {
    let props = g.underlying_properties();
    if props.bipartite {
        return Err(Error::Bipartite);
    }
    if !props.two_connected {
        return Err(Error::NotTwoConnected);
    }
    let fundamental = fundamental_cycle_basis(g);
    let target = fundamental.len();
    let seed = fundamental
        .cycles
        .iter()
        .filter(|c| c.is_odd())
        .min_by_key(|c| c.len())
        .cloned()
        .ok_or_else(|| Error::Inconsistent("nonbipartite graph without odd fundamental cycle".into()))?;
    let seed_set = seed.edge_set(g)?;

    let mut elim = Gf2Eliminator::new();
    let mut chosen = Vec::with_capacity(target);
    for c in &fundamental.cycles {
        let set = c.edge_set(g)?;
        let candidates = if c.is_odd() {
            vec![c.clone()]
        } else {
            let diff = set.xor(&seed_set);
            match as_simple_cycle(g, &diff) {
                Some(d) => vec![d],
                None => {
                    let mut parts: Vec<_> =
                        decompose_eulerian(g, &diff).into_iter().filter(Cycle::is_odd).collect();
                    parts.sort_by_key(Cycle::len);
                    parts
                }
            }
        };
        for cand in candidates {
            if elim.insert(&cand.edge_set(g)?) {
                chosen.push(cand);
                break;
            }
        }
    }

    let mut len = 3;
    while chosen.len() < target && len <= g.n() {
        let mut found = Vec::new();
        for_each_cycle(g, len, len, DEFAULT_CYCLE_BUDGET, |verts, _| {
            found.push(Cycle::from_canonical(verts.to_vec()));
        })?;
        for c in found {
            if chosen.len() == target {
                break;
            }
            if elim.insert(&c.edge_set(g)?) {
                chosen.push(c);
            }
        }
        len += 2;
    }
    if chosen.len() < target {
        return Err(Error::Inconsistent("odd cycles do not span the cycle space".into()));
    }
    Ok(CycleBasis {
        cycles: chosen,
        tree_edges: None,
    })
}
