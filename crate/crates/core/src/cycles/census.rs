use std::collections::BTreeMap;

use crate::cycles::cycle::{Cycle, GainAccumulator};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::scalar::Scalar;
use crate::unit::{ComplexUnit, Turns};

pub const DEFAULT_CYCLE_BUDGET: usize = 10_000_000;

/// Real parts closer than this share a census bucket.
pub const CENSUS_TOLERANCE: f64 = 1e-9;

struct CycleSearch<'a, T, F> {
    adj: &'a [Vec<(usize, ComplexUnit<T>)>],
    min_len: usize,
    max_len: usize,
    /// Cap on path extensions.
    budget: usize,
    steps: usize,
    count: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    visit: F,
}

impl<T: Scalar, F: FnMut(&[usize], ComplexUnit<T>)> CycleSearch<'_, T, F> {
    fn extend(&mut self, anchor: usize, acc: GainAccumulator<T>) -> Result<()> {
        let u = *self.path.last().unwrap();
        let len = self.path.len();
        for idx in 0..self.adj[u].len() {
            let (w, gain) = self.adj[u][idx];
            if w == anchor {
                if len >= self.min_len && len >= 3 && self.path[1] < u {
                    self.count += 1;
                    (self.visit)(&self.path, acc.times(gain).finish());
                }
            } else if w > anchor && !self.on_path[w] && len < self.max_len {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                self.path.push(w);
                self.on_path[w] = true;
                self.extend(anchor, acc.times(gain))?;
                self.on_path[w] = false;
                self.path.pop();
            }
        }
        Ok(())
    }
}

/// Visits every simple cycle with `min_len ≤ length ≤ max_len` once, in
/// canonical form, together with its gain. Returns the number visited.
/// `budget` caps the number of partial paths explored.
pub fn for_each_cycle<T, F>(
    g: &GainGraph<T>,
    min_len: usize,
    max_len: usize,
    budget: usize,
    visit: F,
) -> Result<usize>
where
    T: Scalar,
    F: FnMut(&[usize], ComplexUnit<T>),
{
    let adj: Vec<Vec<_>> = (0..g.n()).map(|u| g.oriented_neighbors(u).collect()).collect();
    let mut search = CycleSearch {
        adj: &adj,
        min_len,
        max_len,
        budget,
        steps: 0,
        count: 0,
        path: Vec::with_capacity(max_len),
        on_path: vec![false; g.n()],
        visit,
    };
    for anchor in 0..g.n() {
        search.path.push(anchor);
        search.on_path[anchor] = true;
        search.extend(anchor, GainAccumulator::new())?;
        search.on_path[anchor] = false;
        search.path.pop();
    }
    Ok(search.count)
}

/// Every simple cycle of length at most `max_len`, canonical and sorted.
pub fn enumerate_cycles<T: Scalar>(g: &GainGraph<T>, max_len: usize) -> Result<Vec<Cycle>> {
    enumerate_cycles_with_budget(g, max_len, DEFAULT_CYCLE_BUDGET)
}

pub fn enumerate_cycles_with_budget<T: Scalar>(
    g: &GainGraph<T>,
    max_len: usize,
    budget: usize,
) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    for_each_cycle(g, 3, max_len, budget, |verts, _| {
        out.push(Cycle::from_canonical(verts.to_vec()))
    })?;
    out.sort_unstable();
    Ok(out)
}

/// Count of order-`k` cycles sharing (approximately) one real gain part.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusBucket<T> {
    pub value: T,
    pub count: usize,
    /// Exact angle representing the real part, when every member had one.
    pub exact: Option<Turns>,
}

/// Order-`k` cycles grouped by the real part of their gain.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleCensus<T> {
    pub k: usize,
    /// Sorted by increasing value.
    pub buckets: Vec<CensusBucket<T>>,
}

impl<T: Scalar> CycleCensus<T> {
    pub fn total(&self) -> usize {
        self.buckets.iter().map(|b| b.count).sum()
    }

    pub fn count_near(&self, value: f64, tol: f64) -> usize {
        self.buckets
            .iter()
            .filter(|b| (b.value.as_f64() - value).abs() <= tol)
            .map(|b| b.count)
            .sum()
    }

    fn from_samples(k: usize, mut samples: Vec<(T, Option<Turns>)>) -> Self {
        if samples.iter().all(|s| s.1.is_some()) {
            let mut exact: BTreeMap<Turns, usize> = BTreeMap::new();
            for (_, t) in &samples {
                *exact.entry(t.unwrap().real_part_key()).or_default() += 1;
            }
            let mut buckets: Vec<_> = exact
                .into_iter()
                .map(|(t, count)| CensusBucket {
                    value: t.cartesian::<T>().0,
                    count,
                    exact: Some(t),
                })
                .collect();
            buckets.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
            return Self { k, buckets };
        }
        samples.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let tol = T::of(CENSUS_TOLERANCE);
        let mut buckets: Vec<CensusBucket<T>> = Vec::new();
        let mut sum = T::zero();
        let mut last = T::neg_infinity();
        for (x, _) in samples {
            match buckets.last_mut() {
                Some(b) if x - last <= tol => {
                    b.count += 1;
                    sum += x;
                }
                _ => {
                    if let Some(b) = buckets.last_mut() {
                        b.value = sum / T::of(b.count as f64);
                    }
                    buckets.push(CensusBucket {
                        value: x,
                        count: 1,
                        exact: None,
                    });
                    sum = x;
                }
            }
            last = x;
        }
        if let Some(b) = buckets.last_mut() {
            b.value = sum / T::of(b.count as f64);
        }
        Self { k, buckets }
    }
}

/// Order-`k` cycles bucketed by `Re φ(C)`.
pub fn cycle_census<T: Scalar>(g: &GainGraph<T>, k: usize) -> Result<CycleCensus<T>> {
    cycle_census_with_budget(g, k, DEFAULT_CYCLE_BUDGET)
}

pub fn cycle_census_with_budget<T: Scalar>(
    g: &GainGraph<T>,
    k: usize,
    budget: usize,
) -> Result<CycleCensus<T>> {
    let mut samples = Vec::new();
    for_each_cycle(g, k, k, budget, |_, gain| samples.push((gain.re(), gain.turns())))?;
    Ok(CycleCensus::from_samples(k, samples))
}

/// Censuses for every order `3..=max_k` from a single enumeration.
pub fn cycle_censuses<T: Scalar>(
    g: &GainGraph<T>,
    max_k: usize,
    budget: usize,
) -> Result<Vec<CycleCensus<T>>> {
    let max_k = max_k.min(g.n());
    let mut samples: Vec<Vec<(T, Option<Turns>)>> = vec![Vec::new(); max_k + 1];
    for_each_cycle(g, 3, max_k, budget, |verts, gain| {
        samples[verts.len()].push((gain.re(), gain.turns()))
    })?;
    Ok(samples
        .into_iter()
        .enumerate()
        .skip(3)
        .map(|(k, s)| CycleCensus::from_samples(k, s))
        .collect())
}

/// Whether every bucket at `μ` is matched by a bucket at `−μ` of equal count.
pub fn census_is_negation_symmetric<T: Scalar>(c: &CycleCensus<T>) -> bool {
    c.buckets.iter().all(|b| {
        let partner = c.buckets.iter().find(|o| match (b.exact, o.exact) {
            (Some(x), Some(y)) => x.half_turn().real_part_key() == y,
            _ => (b.value + o.value).abs().as_f64() <= CENSUS_TOLERANCE,
        });
        partner.is_some_and(|o| o.count == b.count)
    })
}
