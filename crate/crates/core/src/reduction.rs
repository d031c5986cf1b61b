//! The pendant and triangle-lift gadgets, and the map from a connected
//! cubic graph to an all-(g,f)-factors instance.

use crate::degree::{DegreeSet, DegreeSpec, VertexFn};
use crate::error::{Error, Result};
use crate::graph::{component_count, Edge, Graph, Vertex};

/// `G^x`: `g` plus a new vertex `n` joined to `x` only.
pub fn pendant_attach(g: &Graph, x: Vertex) -> Result<Graph> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let mut edges = g.edges().to_vec();
    edges.push((x, g.n()));
    Ok(Graph::new_unchecked(g.n() + 1, edges))
}

/// `G_L`: every base vertex `v_i` gets a private triangle `v_i x_i y_i`,
/// with `x_i = n + i` and `y_i = 2n + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedGraph {
    base: Graph,
    lifted: Graph,
}

impl LiftedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lifted(&self) -> &Graph {
        &self.lifted
    }

    pub fn x_of(&self, i: Vertex) -> Vertex {
        assert!(i < self.base.n());
        self.base.n() + i
    }

    pub fn y_of(&self, i: Vertex) -> Vertex {
        assert!(i < self.base.n());
        2 * self.base.n() + i
    }

    pub fn is_base(&self, u: Vertex) -> bool {
        u < self.base.n()
    }

    /// `[x_0, .., x_{n-1}]`.
    pub fn x_map(&self) -> Vec<Vertex> {
        (0..self.base.n()).map(|i| self.x_of(i)).collect()
    }

    pub fn y_map(&self) -> Vec<Vertex> {
        (0..self.base.n()).map(|i| self.y_of(i)).collect()
    }
}

pub fn triangle_lift(g: &Graph) -> LiftedGraph {
    let n = g.n();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for i in 0..n {
        let (x, y) = (n + i, 2 * n + i);
        edges.extend([(x, y), (i, y), (i, x)]);
    }
    LiftedGraph {
        base: g.clone(),
        lifted: Graph::new_unchecked(3 * n, edges),
    }
}

/// `h_H`: 2 on base vertices prescribed `{0,2}`, 1 everywhere else.
pub fn lift_degree_spec(lifted: &LiftedGraph, spec: &DegreeSpec) -> VertexFn {
    let n = lifted.base.n();
    assert_eq!(spec.n(), n, "spec must cover the base graph");
    let mut h = vec![1u32; 3 * n];
    for (v, value) in h.iter_mut().enumerate().take(n) {
        if spec.get(v) == DegreeSet::ZeroTwo {
            *value = 2;
        }
    }
    VertexFn::new(h)
}

/// The all-(g,f)-factors instance on `G_L`: `g ≡ 1`, `f = 2` on the base
/// vertices and `f = 1` on the triangle vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub lifted: LiftedGraph,
    pub g_fn: VertexFn,
    pub f_fn: VertexFn,
}

impl ReductionInstance {
    pub fn graph(&self) -> &Graph {
        self.lifted.lifted()
    }
}

/// Checks that `g` is connected and 3-regular.
pub fn check_connected_cubic(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.vertex_degree(v) != 3) {
        return Err(Error::NotCubic {
            vertex: v,
            degree: g.vertex_degree(v),
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected {
            components: crate::graph::components(g, Default::default()).len(),
        });
    }
    Ok(())
}

pub fn reduce_to_all_gf(g: &Graph) -> Result<ReductionInstance> {
    check_connected_cubic(g)?;
    let n = g.n();
    let lifted = triangle_lift(g);
    let f_fn = VertexFn::new((0..3 * n).map(|u| if u < n { 2 } else { 1 }).collect());
    Ok(ReductionInstance {
        lifted,
        g_fn: VertexFn::constant(3 * n, 1),
        f_fn,
    })
}

/// `ω(G^x - S)` versus `ω(G - S)`: the pendant adds a component exactly
/// when its anchor is removed.
pub fn pendant_component_delta(g: &Graph, x: Vertex, removed: crate::graph::VertexSet) -> Result<isize> {
    let gx = pendant_attach(g, x)?;
    Ok(component_count(&gx, removed) as isize - component_count(g, removed) as isize)
}
