use num_complex::Complex;

use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::scalar::Scalar;
use crate::unit::{ComplexUnit, Turns};

/// A simple cycle as a vertex sequence, closed implicitly.
///
/// Canonical form starts at the least vertex and continues towards the
/// smaller of its two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes a sequence of at least three distinct vertices.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::NotACycle);
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotACycle);
        }
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        if vertices[1] > vertices[k - 1] {
            vertices[1..].reverse();
        }
        Ok(Cycle(vertices))
    }

    /// Wraps a sequence already in canonical form.
    pub(crate) fn from_canonical(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() >= 3 && vertices[1] < vertices[vertices.len() - 1]);
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    /// Edge indicator vector over `g`'s edge list.
    pub fn edge_set<T: Scalar>(&self, g: &GainGraph<T>) -> Result<EdgeSet> {
        let mut set = EdgeSet::new(g.m());
        for (a, b) in self.steps() {
            set.toggle(g.edge_index(a, b).ok_or(Error::NotACycle)?);
        }
        Ok(set)
    }
}

/// Product of gains along the canonical traversal of `c`.
pub fn cycle_gain<T: Scalar>(g: &GainGraph<T>, c: &Cycle) -> Result<ComplexUnit<T>> {
    let mut acc = GainAccumulator::new();
    for (a, b) in c.steps() {
        acc = acc.times(g.gain(a, b).ok_or(Error::NotACycle)?);
    }
    Ok(acc.finish())
}

/// Running product that keeps exact turns while every factor carries them.
#[derive(Debug, Clone, Copy)]
pub(crate) struct GainAccumulator<T> {
    value: Complex<T>,
    turns: Option<Turns>,
}

impl<T: Scalar> GainAccumulator<T> {
    pub(crate) fn new() -> Self {
        Self {
            value: Complex::new(T::one(), T::zero()),
            turns: Some(Turns::zero()),
        }
    }

    #[inline]
    pub(crate) fn times(self, z: ComplexUnit<T>) -> Self {
        Self {
            value: self.value * z.to_complex(),
            turns: match (self.turns, z.turns()) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }

    pub(crate) fn real(&self) -> T {
        match self.turns {
            Some(t) => t.cartesian::<T>().0,
            None => self.value.re,
        }
    }

    pub(crate) fn finish(self) -> ComplexUnit<T> {
        match self.turns {
            Some(t) => ComplexUnit::from_turns(t),
            None => ComplexUnit::from_complex_normalized(self.value),
        }
    }
}

/// GF(2) vector over edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: Vec<u64>,
    len: usize,
}

impl EdgeSet {
    pub fn new(len: usize) -> Self {
        Self {
            bits: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn toggle(&mut self, i: usize) {
        self.bits[i / 64] ^= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &EdgeSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn leading(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}
