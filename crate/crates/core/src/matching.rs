//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, one BFS per exposed vertex with explicit blossom bases).

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    marked: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            marked: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Greedy start; the augmenting phase only has to fix what this misses.
    fn greedy(&mut self) {
        for v in 0..self.g.n() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.marked.iter_mut().for_each(|m| *m = false);
        loop {
            a = self.base[a];
            self.marked[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.marked[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the exposed `root`; returns its
    /// other (exposed) end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Runs augmentation from every exposed vertex. With `stop_on_exposed`,
    /// gives up at the first vertex that no augmenting path reaches: such a
    /// vertex stays exposed in every later matching, so no perfect matching
    /// exists.
    fn run(&mut self, stop_on_exposed: bool) -> bool {
        self.greedy();
        for v in 0..self.g.n() {
            if self.mate[v] != NONE {
                continue;
            }
            match self.find_path(v) {
                Some(end) => self.augment(end),
                None if stop_on_exposed => return false,
                None => {}
            }
        }
        true
    }
}

/// A maximum matching as a mate array.
pub fn maximum_matching(g: &Graph) -> Vec<Option<Vertex>> {
    let mut search = Search::new(g);
    search.run(false);
    search
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// A perfect matching as a mate array, if one exists.
pub fn perfect_matching(g: &Graph) -> Option<Vec<Vertex>> {
    if g.n() % 2 == 1 {
        return None;
    }
    let mut search = Search::new(g);
    if !search.run(true) {
        return None;
    }
    debug_assert!(search.mate.iter().all(|&m| m != NONE));
    Some(search.mate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matching_size(mate: &[Option<Vertex>]) -> usize {
        mate.iter().filter(|m| m.is_some()).count() / 2
    }

    fn brute_force_max(g: &Graph) -> usize {
        (0u64..1 << g.m())
            .filter(|&mask| {
                let mut seen = 0u64;
                g.edges().iter().enumerate().all(|(i, &(u, v))| {
                    if mask >> i & 1 == 0 {
                        return true;
                    }
                    let hit = seen & (1 << u | 1 << v) != 0;
                    seen |= 1 << u | 1 << v;
                    !hit
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn blossom_needed_cases() {
        // Two triangles joined by a path: greedy can go wrong, blossoms must shrink.
        let g = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        )
        .unwrap();
        assert!(perfect_matching(&g).is_some());
        let pm = perfect_matching(&Graph::petersen()).unwrap();
        for (v, &u) in pm.iter().enumerate() {
            assert_eq!(pm[u], v);
            assert!(Graph::petersen().has_edge(u, v));
        }
    }

    #[test]
    fn no_perfect_matching() {
        assert!(perfect_matching(&Graph::complete(3)).is_none());
        assert!(perfect_matching(&Graph::star(3)).is_none());
        assert!(perfect_matching(&Graph::empty(2)).is_none());
        assert_eq!(perfect_matching(&Graph::empty(0)), Some(vec![]));
    }

    #[test]
    fn maximum_matches_brute_force_on_small_graphs() {
        for n in 1..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap().step_by(7) {
                let mate = maximum_matching(&g);
                for (v, m) in mate.iter().enumerate() {
                    if let Some(u) = *m {
                        assert_eq!(mate[u], Some(v));
                        assert!(g.has_edge(u, v));
                    }
                }
                assert_eq!(matching_size(&mate), brute_force_max(&g), "{g:?}");
                assert_eq!(
                    perfect_matching(&g).is_some(),
                    2 * brute_force_max(&g) == n,
                    "{g:?}"
                );
            }
        }
    }
}
