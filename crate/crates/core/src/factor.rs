//! Exact factor existence with certificates.
//!
//! The engine is the classical f-factor to perfect-matching gadget solved by
//! [`crate::matching`]. Every solver has a brute-force twin over edge
//! subsets, used as the oracle in tests.

use crate::degree::{DegreeSpec, VertexFn};
use crate::enumerate::degree_targets;
use crate::error::{scale, Error, Result};
use crate::graph::{factor_degrees, Edge, Factor, Graph, Vertex, VertexSet};
use crate::matching::perfect_matching;
use crate::reduction::{lift_degree_spec, triangle_lift, LiftedGraph};

/// Edge-count bound for the exhaustive edge-subset oracles.
pub const MAX_BRUTE_FORCE_EDGES: usize = 24;

/// The f-factor gadget of a graph together with the edges that encode
/// original edges.
///
/// Vertex `v` of the original graph becomes `d(v)` ports, one per incident
/// edge, followed by `d(v) - f(v)` cores, each core adjacent to every port
/// of `v`. Original edge `uv` becomes one edge between the matching ports.
#[derive(Clone, Debug)]
pub struct TutteGadgetMap {
    pub gadget: Graph,
    /// `encoding[i]` is the gadget edge standing for original edge `i`.
    encoding: Vec<Edge>,
    /// First port of each original vertex; cores follow the ports.
    port_base: Vec<usize>,
    degrees: Vec<usize>,
    originals: Vec<Edge>,
}

impl TutteGadgetMap {
    /// The original edge encoded by a gadget edge, if it encodes one.
    pub fn back_map(&self, gadget_edge: Edge) -> Option<Edge> {
        let key = (gadget_edge.0.min(gadget_edge.1), gadget_edge.0.max(gadget_edge.1));
        self.encoding.binary_search(&key).ok().map(|i| self.originals[i])
    }

    pub fn encoding_edges(&self) -> &[Edge] {
        &self.encoding
    }

    /// Gadget vertices standing for original vertex `v`: `(ports, cores)`.
    pub fn vertex_block(&self, v: Vertex) -> (std::ops::Range<usize>, std::ops::Range<usize>) {
        let start = self.port_base[v];
        let ports = start + self.degrees[v];
        (start..ports, ports..self.port_base[v + 1])
    }

    /// Pulls a perfect matching of the gadget back to a factor.
    fn pull_back<'g>(&self, host: &'g Graph, mate: &[Vertex]) -> Factor<'g> {
        let chosen = self
            .encoding
            .iter()
            .zip(&self.originals)
            .filter(|((a, b), _)| mate[*a] == *b)
            .map(|(_, &e)| e)
            .collect();
        Factor::new_unchecked(host, chosen)
    }
}

/// Builds the gadget; requires `f(v) <= d(v)` everywhere.
pub fn tutte_gadget(g: &Graph, f_fn: &VertexFn) -> Result<TutteGadgetMap> {
    check_len(g, f_fn, "f")?;
    let n = g.n();
    let mut port_base = Vec::with_capacity(n + 1);
    let mut next = 0usize;
    for v in 0..n {
        let d = g.vertex_degree(v);
        if f_fn[v] as usize > d {
            return Err(Error::GadgetPrecondition {
                vertex: v,
                f: f_fn[v],
                degree: d,
            });
        }
        port_base.push(next);
        next += 2 * d - f_fn[v] as usize;
    }
    port_base.push(next);

    let port = |v: Vertex, u: Vertex| -> usize {
        port_base[v] + g.neighbors(v).binary_search(&u).expect("neighbor")
    };
    let mut edges = Vec::new();
    for v in 0..n {
        let d = g.vertex_degree(v);
        let cores = d - f_fn[v] as usize;
        for c in 0..cores {
            let core = port_base[v] + d + c;
            for p in 0..d {
                edges.push((port_base[v] + p, core));
            }
        }
    }
    let encoding: Vec<Edge> = g.edges().iter().map(|&(u, v)| (port(u, v), port(v, u))).collect();
    debug_assert!(encoding.windows(2).all(|w| w[0] < w[1]));
    edges.extend_from_slice(&encoding);
    Ok(TutteGadgetMap {
        gadget: Graph::new_unchecked(next, edges),
        encoding,
        port_base,
        degrees: g.degrees(),
        originals: g.edges().to_vec(),
    })
}

fn check_len(g: &Graph, fun: &VertexFn, name: &str) -> Result<()> {
    if fun.len() == g.n() {
        Ok(())
    } else {
        Err(Error::InvalidFunction(format!(
            "{name} has {} values for a graph on {} vertices",
            fun.len(),
            g.n()
        )))
    }
}

fn check_brute_force(g: &Graph) -> Result<()> {
    scale(
        "edge count for brute force",
        g.m() as u64,
        MAX_BRUTE_FORCE_EDGES as u64,
    )
}

/// A perfect matching of `g`, if one exists.
pub fn has_perfect_matching(g: &Graph) -> Option<Factor<'_>> {
    let mate = perfect_matching(g)?;
    let chosen = (0..g.n())
        .filter(|&v| v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Some(Factor::new_unchecked(g, chosen))
}

/// A factor with `d_F = f` exactly, if one exists.
///
/// Panics if `f_fn` is not defined on exactly the vertices of `g`.
pub fn has_f_factor<'g>(g: &'g Graph, f_fn: &VertexFn) -> Option<Factor<'g>> {
    assert_eq!(f_fn.len(), g.n(), "f must be defined on every vertex");
    if (0..g.n()).any(|v| f_fn[v] as usize > g.vertex_degree(v)) || f_fn.total() % 2 == 1 {
        return None;
    }
    let map = tutte_gadget(g, f_fn).expect("bounds checked");
    let mate = perfect_matching(&map.gadget)?;
    let factor = map.pull_back(g, &mate);
    debug_assert_eq!(&factor_degrees(&factor), f_fn);
    Some(factor)
}

/// Incidence bitmask (over edge indices) of every vertex.
fn incidence(g: &Graph) -> Vec<u32> {
    let mut inc = vec![0u32; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        inc[u] |= 1 << i;
        inc[v] |= 1 << i;
    }
    inc
}

/// First edge subset (by increasing mask) whose degree vector passes `accept`.
fn search_subsets<'g>(g: &'g Graph, mut accept: impl FnMut(Vertex, u32) -> bool) -> Option<Factor<'g>> {
    let inc = incidence(g);
    (0u32..1 << g.m())
        .find(|&mask| {
            inc.iter()
                .enumerate()
                .all(|(v, &i)| accept(v, (mask & i).count_ones()))
        })
        .map(|mask| Factor::from_edge_mask(g, u64::from(mask)))
}

/// Exhaustive twin of [`has_f_factor`], for `|E| <= 24`.
pub fn has_f_factor_bruteforce<'g>(g: &'g Graph, f_fn: &VertexFn) -> Result<Option<Factor<'g>>> {
    check_len(g, f_fn, "f")?;
    check_brute_force(g)?;
    Ok(search_subsets(g, |v, d| d == f_fn[v]))
}

/// A factor with `g(v) <= d_F(v) <= f(v)`, found by running every degree
/// target in the interval through [`has_f_factor`].
pub fn has_gf_factor<'g>(g: &'g Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<Option<Factor<'g>>> {
    check_len(g, g_fn, "g")?;
    check_len(g, f_fn, "f")?;
    if !g_fn.le(f_fn) {
        return Err(Error::InvalidFunction("g must not exceed f".into()));
    }
    // Targets above the degree can never be met; clip them off first.
    let mut hi = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let d = g.vertex_degree(v) as u32;
        if g_fn[v] > d {
            return Ok(None);
        }
        hi.push(f_fn[v].min(d));
    }
    for target in degree_targets(g_fn, &VertexFn::new(hi), false)? {
        if let Some(factor) = has_f_factor(g, &target) {
            return Ok(Some(factor));
        }
    }
    Ok(None)
}

/// Exhaustive twin of [`has_gf_factor`].
pub fn has_gf_factor_bruteforce<'g>(
    g: &'g Graph,
    g_fn: &VertexFn,
    f_fn: &VertexFn,
) -> Result<Option<Factor<'g>>> {
    check_len(g, g_fn, "g")?;
    check_len(g, f_fn, "f")?;
    check_brute_force(g)?;
    Ok(search_subsets(g, |v, d| g_fn[v] <= d && d <= f_fn[v]))
}

/// A factor with `d_F(v) ∈ spec(v)`, by exhaustive search.
pub fn has_h_factor_bruteforce<'g>(g: &'g Graph, spec: &DegreeSpec) -> Result<Option<Factor<'g>>> {
    if spec.n() != g.n() {
        return Err(Error::InvalidFunction(
            "spec size differs from graph order".into(),
        ));
    }
    check_brute_force(g)?;
    Ok(search_subsets(g, |v, d| spec.get(v).admits(d)))
}

/// For every spec on `g` at once, the first H-factor by increasing edge
/// mask, from a single pass over all edge subsets.
///
/// A subset with every degree at most 2 satisfies exactly one spec (the
/// one whose `{1}` set is its degree-1 vertices); any degree-3 vertex rules
/// it out everywhere.
#[derive(Clone, Debug)]
pub struct SpecProfile {
    n: usize,
    first: Vec<Option<u32>>,
}

impl SpecProfile {
    pub fn factor<'g>(&self, g: &'g Graph, spec: &DegreeSpec) -> Option<Factor<'g>> {
        assert_eq!(spec.n(), self.n);
        self.first[spec.ones().bits() as usize].map(|m| Factor::from_edge_mask(g, u64::from(m)))
    }

    pub fn is_realizable(&self, spec: &DegreeSpec) -> bool {
        self.first[spec.ones().bits() as usize].is_some()
    }

    /// Number of realizable specs.
    pub fn realizable(&self) -> usize {
        self.first.iter().filter(|f| f.is_some()).count()
    }
}

pub fn spec_profile_bruteforce(g: &Graph) -> Result<SpecProfile> {
    check_brute_force(g)?;
    scale(
        "vertex count for spec profile",
        g.n() as u64,
        crate::enumerate::MAX_SPEC_N as u64,
    )?;
    let inc = incidence(g);
    let mut first = vec![None; 1 << g.n()];
    'subsets: for mask in 0u32..1 << g.m() {
        let mut ones = 0usize;
        for (v, &i) in inc.iter().enumerate() {
            match (mask & i).count_ones() {
                0 | 2 => {}
                1 => ones |= 1 << v,
                _ => continue 'subsets,
            }
        }
        first[ones].get_or_insert(mask);
    }
    Ok(SpecProfile { n: g.n(), first })
}

/// An H-factor of `g` found through the triangle lift: solve the
/// `h_H`-factor problem on `G_L` and project back.
pub fn has_h_factor_via_lift<'g>(g: &'g Graph, spec: &DegreeSpec) -> Option<Factor<'g>> {
    assert_eq!(spec.n(), g.n());
    let lifted = triangle_lift(g);
    let h = lift_degree_spec(&lifted, spec);
    let lifted_factor = has_f_factor(lifted.lifted(), &h)?;
    let projected = project_factor(&lifted, &lifted_factor).expect("h_H-factor projects");
    Some(Factor::new_unchecked(g, projected.edges().to_vec()))
}

/// `F' = E(F) ∪ M_1 ∪ M_2`: `x_i y_i` for every `v_i` with `d_F(v_i) ∈ {1, 2}`,
/// and `x_i v_i, y_i v_i` for every `v_i` with `d_F(v_i) = 0`.
pub fn lift_factor<'l>(lifted: &'l LiftedGraph, f: &Factor<'_>, spec: &DegreeSpec) -> Result<Factor<'l>> {
    if f.host() != lifted.base() {
        return Err(Error::NotALift("factor host is not the lift's base graph".into()));
    }
    let degrees = factor_degrees(f);
    if !spec.admits(&degrees) {
        return Err(Error::NotAFactor(format!(
            "{f:?} is not an H-factor for {spec:?}"
        )));
    }
    let mut chosen = f.edges().to_vec();
    for i in 0..lifted.base().n() {
        let (x, y) = (lifted.x_of(i), lifted.y_of(i));
        match degrees[i] {
            1 | 2 => chosen.push((x, y)),
            _ => {
                chosen.push((i, x));
                chosen.push((i, y));
            }
        }
    }
    let out = Factor::new_unchecked(lifted.lifted(), chosen);
    debug_assert_eq!(factor_degrees(&out), lift_degree_spec(lifted, spec));
    Ok(out)
}

/// `E(F') ∩ E(G)`, after checking that `F'` is an `h_H`-factor of the lift
/// for the spec its base degrees determine, and that the projection is an
/// H-factor of the base for that spec.
pub fn project_factor<'l>(lifted: &'l LiftedGraph, f_lifted: &Factor<'_>) -> Result<Factor<'l>> {
    if f_lifted.host() != lifted.lifted() {
        return Err(Error::NotALift("factor host is not the lifted graph".into()));
    }
    let n = lifted.base().n();
    let degrees = factor_degrees(f_lifted);
    let mut ones = VertexSet::EMPTY;
    for v in 0..n {
        match degrees[v] {
            1 => ones.insert(v),
            2 => {}
            d => {
                return Err(Error::NotAFactor(format!(
                    "base vertex {v} has lifted degree {d}, expected 1 or 2"
                )))
            }
        }
    }
    if let Some(w) = (n..3 * n).find(|&w| degrees[w] != 1) {
        return Err(Error::NotAFactor(format!(
            "gadget vertex {w} has degree {}, expected 1",
            degrees[w]
        )));
    }
    let spec = DegreeSpec::new(n, ones);
    let chosen: Vec<Edge> = f_lifted.edges().iter().copied().filter(|&(_, v)| v < n).collect();
    let projected = Factor::new_unchecked(lifted.base(), chosen);
    if !spec.admits(&factor_degrees(&projected)) {
        return Err(Error::NotAFactor("projection is not an H-factor".into()));
    }
    Ok(projected)
}
