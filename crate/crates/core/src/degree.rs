//! Per-vertex degree prescriptions: integer functions (`g`, `f`, `h`) and
//! the set-valued `{1}` / `{0,2}` specs.

use std::fmt;
use std::ops::Index;

use crate::graph::{Vertex, VertexSet};

/// A nonnegative integer per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFn(Vec<u32>);

impl VertexFn {
    pub fn new(values: Vec<u32>) -> Self {
        VertexFn(values)
    }

    pub fn constant(n: usize, value: u32) -> Self {
        VertexFn(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// `Σ_{v ∈ set} self(v)`.
    pub fn sum_over(&self, set: VertexSet) -> u64 {
        set.iter().map(|v| u64::from(self.0[v])).sum()
    }

    /// Pointwise `self <= other`; false on length mismatch.
    pub fn le(&self, other: &VertexFn) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<Vertex> for VertexFn {
    type Output = u32;

    fn index(&self, v: Vertex) -> &u32 {
        &self.0[v]
    }
}

impl fmt::Debug for VertexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Vec<u32>> for VertexFn {
    fn from(values: Vec<u32>) -> Self {
        VertexFn(values)
    }
}

/// The admissible degree set at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeSet {
    /// `{1}`
    One,
    /// `{0, 2}`
    ZeroTwo,
}

impl DegreeSet {
    pub fn admits(self, degree: u32) -> bool {
        match self {
            DegreeSet::One => degree == 1,
            DegreeSet::ZeroTwo => degree == 0 || degree == 2,
        }
    }
}

/// A map `V -> {{1}, {0,2}}`, stored as the set of `{1}` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeSpec {
    n: usize,
    ones: VertexSet,
}

impl DegreeSpec {
    /// `ones` is the set of vertices prescribed `{1}`; the rest get `{0,2}`.
    pub fn new(n: usize, ones: VertexSet) -> Self {
        assert!(
            ones.is_subset(VertexSet::full(n)),
            "spec marks vertices outside 0..{n}"
        );
        DegreeSpec { n, ones }
    }

    pub fn all_one(n: usize) -> Self {
        Self::new(n, VertexSet::full(n))
    }

    pub fn all_zero_two(n: usize) -> Self {
        Self::new(n, VertexSet::EMPTY)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `H^{-1}(1)`.
    pub fn ones(&self) -> VertexSet {
        self.ones
    }

    pub fn get(&self, v: Vertex) -> DegreeSet {
        assert!(v < self.n);
        if self.ones.contains(v) {
            DegreeSet::One
        } else {
            DegreeSet::ZeroTwo
        }
    }

    pub fn is_even(&self) -> bool {
        self.ones.len().is_multiple_of(2)
    }

    /// Whether a degree vector satisfies the spec at every vertex.
    pub fn admits(&self, degrees: &VertexFn) -> bool {
        degrees.len() == self.n
            && degrees
                .values()
                .iter()
                .enumerate()
                .all(|(v, &d)| self.get(v).admits(d))
    }
}

impl fmt::Debug for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: String = (0..self.n)
            .map(|v| match self.get(v) {
                DegreeSet::One => '1',
                DegreeSet::ZeroTwo => 'z',
            })
            .collect();
        write!(f, "DegreeSpec({cells})")
    }
}
