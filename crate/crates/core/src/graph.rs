//! Simple undirected graphs on dense vertex indices and the counting
//! primitives (components, degrees, edge boundaries) built on them.
//!
//! Graphs are immutable once built. Every graph keeps a CSR adjacency for
//! the matching engine; graphs on at most 64 vertices also keep one
//! adjacency bitmask per vertex, which is what the subset scans run on.

use std::fmt;

use crate::degree::VertexFn;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Largest vertex count representable by [`VertexSet`].
pub const MASK_VERTICES: usize = 64;

/// A set of vertices of a graph on at most 64 vertices, as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MASK_VERTICES, "vertex set over {n} vertices");
        if n == MASK_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        assert!(v < MASK_VERTICES);
        VertexSet(1 << v)
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MASK_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < MASK_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    masks: Vec<u64>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicate edges and
    /// out-of-range endpoints. Endpoint order within a pair is irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, normalized))
    }

    /// Caller guarantees a simple graph; edges are normalized and sorted here.
    pub(crate) fn new_unchecked(n: usize, mut edges: Vec<Edge>) -> Graph {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Self::from_sorted(n, edges)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        let masks = if n <= MASK_VERTICES {
            let mut masks = vec![0u64; n];
            for &(u, v) in &edges {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
            masks
        } else {
            Vec::new()
        };
        Graph {
            n,
            edges,
            offsets,
            targets,
            masks,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    pub fn path(n: usize) -> Graph {
        Self::new_unchecked(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::new_unchecked(n, edges)
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Self::new_unchecked(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::new_unchecked(a + b, edges)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::new_unchecked(10, edges)
    }

    /// Number of vertex pairs, i.e. the width of an edge bitmask.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Position of `{u, v}` (`u < v`) in the lexicographic order of pairs.
    pub fn pair_index(n: usize, u: Vertex, v: Vertex) -> usize {
        debug_assert!(u < v && v < n);
        u * (2 * n - u - 1) / 2 + (v - u - 1)
    }

    /// The graph whose edge `{u, v}` is present iff bit `pair_index(n, u, v)`
    /// of `mask` is set.
    pub fn from_pair_mask(n: usize, mask: u64) -> Graph {
        assert!(Self::pair_count(n) <= 64, "edge mask too narrow for n = {n}");
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::from_sorted(n, edges)
    }

    pub fn pair_mask(&self) -> u64 {
        assert!(Self::pair_count(self.n) <= 64);
        self.edges
            .iter()
            .fold(0, |m, &(u, v)| m | 1 << Self::pair_index(self.n, u, v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, smaller endpoint first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.vertex_degree(v)).collect()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighborhood of `v` as a bitmask.
    ///
    /// Panics if the graph has more than 64 vertices.
    pub fn adjacency(&self, v: Vertex) -> VertexSet {
        VertexSet(self.masks()[v])
    }

    fn masks(&self) -> &[u64] {
        assert!(
            self.n <= MASK_VERTICES,
            "bitmask operations need n <= {MASK_VERTICES}, graph has {}",
            self.n
        );
        &self.masks
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || component_count(self, VertexSet::EMPTY) == 1
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.vertex_degree(v) == k)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Grows the component of `seed` inside `alive`.
fn grow(masks: &[u64], seed: u64, alive: u64) -> u64 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= masks[v];
        }
        next &= alive & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Connected components of `g - removed`, ordered by smallest member.
pub fn components(g: &Graph, removed: VertexSet) -> Vec<VertexSet> {
    let masks = g.masks();
    let mut alive = g.vertices().difference(removed).bits();
    let mut out = Vec::new();
    while alive != 0 {
        let comp = grow(masks, alive & alive.wrapping_neg(), alive);
        alive &= !comp;
        out.push(VertexSet(comp));
    }
    out
}

/// Calls `visit` on each component of `g - removed`, by smallest member.
pub fn for_each_component(g: &Graph, removed: VertexSet, mut visit: impl FnMut(VertexSet)) {
    let masks = g.masks();
    let mut alive = g.vertices().difference(removed).bits();
    while alive != 0 {
        let comp = grow(masks, alive & alive.wrapping_neg(), alive);
        alive &= !comp;
        visit(VertexSet(comp));
    }
}

/// `ω(g - removed)` without materializing the components.
pub fn component_count(g: &Graph, removed: VertexSet) -> usize {
    let masks = g.masks();
    let mut alive = g.vertices().difference(removed).bits();
    let mut count = 0;
    while alive != 0 {
        alive &= !grow(masks, alive & alive.wrapping_neg(), alive);
        count += 1;
    }
    count
}

/// Degree of `v` in `g - removed`. Panics if `v` is in `removed`.
pub fn degree(g: &Graph, v: Vertex, removed: VertexSet) -> usize {
    assert!(!removed.contains(v), "vertex {v} is in the removed set");
    g.adjacency(v).difference(removed).len()
}

/// `Σ_{v ∈ s} degree(g, v, removed)`; an edge inside `s` counts twice.
/// Panics if `s` and `removed` overlap.
pub fn degree_sum(g: &Graph, s: VertexSet, removed: VertexSet) -> usize {
    assert!(s.is_disjoint(removed), "degree_sum: s and removed overlap");
    s.iter().map(|v| degree(g, v, removed)).sum()
}

/// Number of edges with one endpoint in `a` and the other in `b`.
/// Panics if the sets overlap.
pub fn edge_boundary(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    assert!(a.is_disjoint(b), "edge_boundary: sets overlap");
    a.iter().map(|v| g.adjacency(v).intersection(b).len()).sum()
}

/// A spanning subgraph of `host`, identified by its edge set.
#[derive(Clone, PartialEq, Eq)]
pub struct Factor<'g> {
    host: &'g Graph,
    chosen: Vec<Edge>,
}

impl<'g> Factor<'g> {
    /// Fails unless every chosen edge is an edge of `host`, listed once.
    pub fn new<I>(host: &'g Graph, chosen: I) -> Result<Factor<'g>>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut edges: Vec<Edge> = chosen.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAFactor("edge listed twice".into()));
        }
        if let Some(e) = edges.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(Error::NotAFactor(format!(
                "{{{}, {}}} is not an edge of the host",
                e.0, e.1
            )));
        }
        Ok(Factor { host, chosen: edges })
    }

    pub(crate) fn new_unchecked(host: &'g Graph, mut chosen: Vec<Edge>) -> Factor<'g> {
        chosen.sort_unstable();
        debug_assert!(chosen.iter().all(|&(u, v)| host.has_edge(u, v)));
        Factor { host, chosen }
    }

    pub fn empty(host: &'g Graph) -> Factor<'g> {
        Factor {
            host,
            chosen: Vec::new(),
        }
    }

    /// The subset of `host.edges()` selected by the bits of `mask`.
    pub fn from_edge_mask(host: &'g Graph, mask: u64) -> Factor<'g> {
        let chosen = host
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Factor { host, chosen }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn edges(&self) -> &[Edge] {
        &self.chosen
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.chosen.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

impl fmt::Debug for Factor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Factor(n={}, edges={:?})", self.host.n(), self.chosen)
    }
}

/// `d_F(v)` for every host vertex.
pub fn factor_degrees(f: &Factor<'_>) -> VertexFn {
    let mut deg = vec![0u32; f.host.n()];
    for &(u, v) in &f.chosen {
        deg[u] += 1;
        deg[v] += 1;
    }
    VertexFn::new(deg)
}
