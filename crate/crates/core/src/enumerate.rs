//! Test universes: labeled connected graphs, labeled connected cubic
//! graphs, `{1}`/`{0,2}` degree specs, and admissible degree functions.
//!
//! Enumeration is over labeled graphs; nothing here rejects isomorphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::{DegreeSpec, VertexFn};
use crate::error::{scale, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for exhaustive connected-graph enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 6;
/// Largest order for connected cubic enumeration.
pub const MAX_CUBIC_N: usize = 10;
/// Largest order accepted by the degree-spec enumerators.
pub const MAX_SPEC_N: usize = 20;
/// Largest number of candidate degree targets `Π (f(v) - g(v) + 1)`.
pub const MAX_TARGETS: u128 = 1 << 20;
/// Seed used by the samplers unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0x5EED_0F6F;

fn is_connected_mask(n: usize, mask: u64) -> bool {
    Graph::from_pair_mask(n, mask).is_connected()
}

/// Every labeled connected simple graph on `n` vertices, in increasing
/// order of edge bitmask (see [`Graph::pair_index`]).
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::InvalidGraph("connected graphs need n >= 1".into()));
    }
    scale(
        "vertex count for exhaustive enumeration",
        n as u64,
        MAX_EXHAUSTIVE_N as u64,
    )?;
    let width = Graph::pair_count(n);
    Ok((0u64..1 << width)
        .map(move |mask| Graph::from_pair_mask(n, mask))
        .filter(Graph::is_connected))
}

/// `count` connected graphs on `n` vertices drawn uniformly from the
/// labeled connected graphs (uniform edge mask, rejection on
/// disconnection). Deterministic for a fixed seed.
pub fn sample_connected_graphs(n: usize, count: usize, seed: u64) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::InvalidGraph("connected graphs need n >= 1".into()));
    }
    let width = Graph::pair_count(n);
    scale("edge-mask width for sampling", width as u64, 64u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let full = if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    };
    Ok(std::iter::repeat_with(move || loop {
        let mask = rng.gen::<u64>() & full;
        if is_connected_mask(n, mask) {
            return Graph::from_pair_mask(n, mask);
        }
    })
    .take(count))
}

/// Every labeled connected 3-regular graph on `n` vertices, in
/// lexicographic order of their sorted edge lists.
pub fn connected_cubic_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n % 2 == 1 {
        return Err(Error::NoCubicGraph(n));
    }
    scale("vertex count for cubic enumeration", n as u64, MAX_CUBIC_N as u64)?;
    let masks = if n >= 4 { cubic_masks(n) } else { Vec::new() };
    Ok(masks.into_iter().map(move |m| Graph::from_pair_mask(n, m)))
}

fn cubic_masks(n: usize) -> Vec<u64> {
    struct Search {
        n: usize,
        pairs: Vec<(usize, usize)>,
        deg: Vec<u8>,
        out: Vec<u64>,
    }

    impl Search {
        fn run(&mut self, p: usize, mask: u64) {
            if p == self.pairs.len() {
                if self.deg.iter().all(|&d| d == 3) && is_connected_mask(self.n, mask) {
                    self.out.push(mask);
                }
                return;
            }
            let (u, v) = self.pairs[p];
            // Pairs still available to u after this one, all on u's row.
            let rest = (self.n - 1 - v) as u8;
            if self.deg[u] < 3 && self.deg[v] < 3 && self.deg[u] + 1 + rest >= 3 {
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.run(p + 1, mask | 1 << p);
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
            if self.deg[u] + rest >= 3 {
                self.run(p + 1, mask);
            }
        }
    }

    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut search = Search {
        n,
        pairs,
        deg: vec![0; n],
        out: Vec::new(),
    };
    search.run(0, 0);
    search.out
}

/// All `2^n` degree specs on `n` vertices, by increasing `{1}`-set mask.
pub fn degree_specs_all(n: usize) -> Result<impl Iterator<Item = DegreeSpec>> {
    scale("vertex count for degree specs", n as u64, MAX_SPEC_N as u64)?;
    Ok((0u64..1 << n).map(move |m| DegreeSpec::new(n, VertexSet::from_bits(m))))
}

/// The `2^(n-1)` specs with an even number of `{1}` vertices.
pub fn degree_specs_even(g: &Graph) -> Result<impl Iterator<Item = DegreeSpec>> {
    Ok(degree_specs_all(g.n())?.filter(DegreeSpec::is_even))
}

/// Checks `g <= f` pointwise (same length) and returns `Π (f - g + 1)`.
pub fn target_count(g_fn: &VertexFn, f_fn: &VertexFn) -> Result<u128> {
    if g_fn.len() != f_fn.len() {
        return Err(Error::InvalidFunction(format!(
            "g has {} values, f has {}",
            g_fn.len(),
            f_fn.len()
        )));
    }
    if let Some(v) = (0..g_fn.len()).find(|&v| g_fn[v] > f_fn[v]) {
        return Err(Error::InvalidFunction(format!(
            "g({v}) = {} exceeds f({v}) = {}",
            g_fn[v], f_fn[v]
        )));
    }
    Ok(g_fn
        .values()
        .iter()
        .zip(f_fn.values())
        .map(|(&lo, &hi)| u128::from(hi - lo + 1))
        .fold(1u128, |acc, k| acc.saturating_mul(k)))
}

/// Odometer over `g <= h <= f`, vertex 0 most significant.
#[derive(Clone, Debug)]
pub struct DegreeTargets {
    lo: Vec<u32>,
    hi: Vec<u32>,
    current: Option<Vec<u32>>,
    even_only: bool,
}

impl Iterator for DegreeTargets {
    type Item = VertexFn;

    fn next(&mut self) -> Option<VertexFn> {
        loop {
            let cur = self.current.as_mut()?;
            let out = cur.clone();
            let mut i = cur.len();
            loop {
                if i == 0 {
                    self.current = None;
                    break;
                }
                i -= 1;
                if cur[i] < self.hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.lo[i];
            }
            let total: u64 = out.iter().map(|&x| u64::from(x)).sum();
            if !self.even_only || total.is_multiple_of(2) {
                return Some(VertexFn::new(out));
            }
        }
    }
}

/// Every `h` with `g <= h <= f`, with or without the even-total filter.
pub fn degree_targets(g_fn: &VertexFn, f_fn: &VertexFn, even_only: bool) -> Result<DegreeTargets> {
    scale("degree-target space", target_count(g_fn, f_fn)?, MAX_TARGETS)?;
    Ok(DegreeTargets {
        lo: g_fn.values().to_vec(),
        hi: f_fn.values().to_vec(),
        current: Some(g_fn.values().to_vec()),
        even_only,
    })
}

/// Every admissible `h`: `g <= h <= f` pointwise with even total.
pub fn admissible_h(g_fn: &VertexFn, f_fn: &VertexFn) -> Result<DegreeTargets> {
    degree_targets(g_fn, f_fn, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vf(v: &[u32]) -> VertexFn {
        VertexFn::new(v.to_vec())
    }

    #[test]
    fn connected_counts_small() {
        let counts: Vec<usize> = (1..=4).map(|n| connected_graphs(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
        assert_eq!(connected_graphs(2).unwrap().next().unwrap(), Graph::complete(2));
    }

    #[test]
    fn connected_out_of_range() {
        assert!(matches!(connected_graphs(7), Err(Error::ScaleExceeded { .. })));
        assert!(connected_graphs(0).is_err());
    }

    #[test]
    fn cubic_examples() {
        let four: Vec<Graph> = connected_cubic_graphs(4).unwrap().collect();
        assert_eq!(four, vec![Graph::complete(4)]);
        assert!(matches!(connected_cubic_graphs(5), Err(Error::NoCubicGraph(5))));
        assert!(matches!(
            connected_cubic_graphs(12),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn cubic_order_is_lexicographic() {
        let graphs: Vec<Graph> = connected_cubic_graphs(6).unwrap().collect();
        assert!(graphs.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }

    #[test]
    fn spec_examples() {
        let specs: Vec<DegreeSpec> = degree_specs_even(&Graph::complete(2)).unwrap().collect();
        assert_eq!(specs, vec![DegreeSpec::all_zero_two(2), DegreeSpec::all_one(2)]);
        let specs: Vec<DegreeSpec> = degree_specs_even(&Graph::empty(1)).unwrap().collect();
        assert_eq!(specs, vec![DegreeSpec::all_zero_two(1)]);
        assert_eq!(degree_specs_even(&Graph::complete(4)).unwrap().count(), 8);
        assert!(degree_specs_all(21).is_err());
    }

    #[test]
    fn admissible_examples() {
        let hs: Vec<VertexFn> = admissible_h(&vf(&[1, 1]), &vf(&[1, 1])).unwrap().collect();
        assert_eq!(hs, vec![vf(&[1, 1])]);
        assert_eq!(admissible_h(&vf(&[1, 1, 1]), &vf(&[1, 1, 1])).unwrap().count(), 0);
        let hs: Vec<VertexFn> = admissible_h(&vf(&[1, 1]), &vf(&[2, 2])).unwrap().collect();
        assert_eq!(hs, vec![vf(&[1, 1]), vf(&[2, 2])]);
    }

    #[test]
    fn admissible_rejects_bad_bounds() {
        assert!(admissible_h(&vf(&[2]), &vf(&[1])).is_err());
        assert!(admissible_h(&vf(&[0]), &vf(&[1, 1])).is_err());
        let g = VertexFn::constant(21, 0);
        let f = VertexFn::constant(21, 1);
        assert!(matches!(admissible_h(&g, &f), Err(Error::ScaleExceeded { .. })));
    }

    #[test]
    fn unfiltered_targets_include_odd_totals() {
        let all: Vec<VertexFn> = degree_targets(&vf(&[0, 1]), &vf(&[1, 2]), false)
            .unwrap()
            .collect();
        assert_eq!(all, vec![vf(&[0, 1]), vf(&[0, 2]), vf(&[1, 1]), vf(&[1, 2])]);
    }

    #[test]
    fn sampler_is_deterministic_and_connected() {
        let a: Vec<Graph> = sample_connected_graphs(8, 20, 7).unwrap().collect();
        let b: Vec<Graph> = sample_connected_graphs(8, 20, 7).unwrap().collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.is_connected() && g.n() == 8));
        let c: Vec<Graph> = sample_connected_graphs(8, 20, 8).unwrap().collect();
        assert_ne!(a, c);
    }
}
