//! Exact toughness by scanning every vertex subset.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::error::{scale, Result};
use crate::graph::{component_count, Graph, VertexSet};

pub const MAX_TOUGHNESS_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Ratio<u64>),
    /// No vertex subset disconnects the graph (complete graphs).
    Infinite,
}

impl Toughness {
    pub fn is_at_least(self, t: Ratio<u64>) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(v) => v >= t,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: Toughness,
    /// The minimizing cut; smallest `|S|`, then smallest bitmask, among ties.
    pub witness_cut: Option<VertexSet>,
}

/// Outcome of a cut-quantified property: `holds`, or the first violating cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutVerdict {
    pub holds: bool,
    pub cut: Option<VertexSet>,
}

impl CutVerdict {
    fn from_violation(cut: Option<VertexSet>) -> Self {
        CutVerdict {
            holds: cut.is_none(),
            cut,
        }
    }
}

fn check_scale(g: &Graph) -> Result<()> {
    scale("vertex count for toughness", g.n() as u64, MAX_TOUGHNESS_N as u64)
}

/// Subsets in order of size, then bitmask.
fn cuts_by_size(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..=n).flat_map(move |k| {
        (0u64..1 << n)
            .filter(move |m| m.count_ones() as usize == k)
            .map(VertexSet::from_bits)
    })
}

/// `min |S| / ω(G - S)` over all `S` with `ω(G - S) >= 2`.
pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    check_scale(g)?;
    let mut best: Option<(Ratio<u64>, VertexSet)> = None;
    for cut in cuts_by_size(g.n()) {
        let omega = component_count(g, cut);
        if omega < 2 {
            continue;
        }
        let value = Ratio::new(cut.len() as u64, omega as u64);
        // Strict improvement keeps the earliest cut in (size, mask) order.
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, cut));
        }
    }
    Ok(match best {
        Some((value, cut)) => ToughnessResult {
            value: Toughness::Finite(value),
            witness_cut: Some(cut),
        },
        None => ToughnessResult {
            value: Toughness::Infinite,
            witness_cut: None,
        },
    })
}

/// `|S| >= ω(G - S)` for every `S` with `ω(G - S) > 1`.
pub fn is_one_tough(g: &Graph) -> Result<CutVerdict> {
    check_scale(g)?;
    let violation = cuts_by_size(g.n()).find(|&cut| {
        let omega = component_count(g, cut);
        omega > 1 && omega > cut.len()
    });
    Ok(CutVerdict::from_violation(violation))
}

/// `ω(G - S) <= |S| + 1` for every `S`, the empty set included, so a
/// disconnected graph is never almost 1-tough.
pub fn is_almost_one_tough(g: &Graph) -> Result<CutVerdict> {
    check_scale(g)?;
    let violation = cuts_by_size(g.n()).find(|&cut| component_count(g, cut) > cut.len() + 1);
    Ok(CutVerdict::from_violation(violation))
}

/// Whether `cut` certifies that `g` is not almost 1-tough.
pub fn is_tough_cut(g: &Graph, cut: VertexSet) -> bool {
    cut.is_subset(g.vertices()) && component_count(g, cut) >= cut.len() + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(n: u64, d: u64) -> Toughness {
        Toughness::Finite(Ratio::new(n, d))
    }

    #[test]
    fn toughness_examples() {
        assert_eq!(toughness(&Graph::complete(4)).unwrap().value, Toughness::Infinite);
        let p3 = toughness(&Graph::path(3)).unwrap();
        assert_eq!(p3.value, finite(1, 2));
        assert_eq!(p3.witness_cut, Some(VertexSet::singleton(1)));
        assert_eq!(toughness(&Graph::cycle(5)).unwrap().value, finite(1, 1));
        assert_eq!(toughness(&Graph::empty(1)).unwrap().value, Toughness::Infinite);
        assert!(toughness(&Graph::empty(21)).is_err());
    }

    #[test]
    fn ratio_is_in_lowest_terms() {
        // C_6 minimum is 2/2 at its first opposite pair; reported as 1/1.
        let r = toughness(&Graph::cycle(6)).unwrap();
        assert_eq!(r.value, finite(1, 1));
        assert_eq!(r.witness_cut, Some(VertexSet::from_bits(0b101)));
    }

    #[test]
    fn one_tough_examples() {
        assert!(is_one_tough(&Graph::complete_bipartite(3, 3)).unwrap().holds);
        let star = is_one_tough(&Graph::star(3)).unwrap();
        assert_eq!(star.cut, Some(VertexSet::singleton(0)));
        assert!(is_one_tough(&Graph::cycle(6)).unwrap().holds);
    }

    #[test]
    fn almost_one_tough_examples() {
        assert!(is_almost_one_tough(&Graph::path(4)).unwrap().holds);
        let star = is_almost_one_tough(&Graph::star(3)).unwrap();
        assert_eq!(star.cut, Some(VertexSet::singleton(0)));
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let v = is_almost_one_tough(&two_edges).unwrap();
        assert_eq!(v.cut, Some(VertexSet::EMPTY));
        assert!(is_tough_cut(&two_edges, VertexSet::EMPTY));
    }

    #[test]
    fn ordering_puts_infinite_on_top() {
        assert!(Toughness::Infinite > finite(100, 1));
        assert!(finite(1, 3) < finite(1, 2));
        assert!(Toughness::Infinite.is_at_least(Ratio::new(1, 1)));
    }
}
