use gfactor::enumerate::{admissible_h, target_count};
use gfactor::factor::{has_f_factor, has_gf_factor, has_h_factor_via_lift, lift_factor, project_factor};
use gfactor::graph::{component_count, components, degree_sum, edge_boundary, factor_degrees};
use gfactor::io::{parse_edge_list, write_edge_list, GraphJson};
use gfactor::niessen::{all_gf_criterion, all_gf_enumeration, find_violation, is_vacuous, NiessenWitness};
use gfactor::reduction::{pendant_attach, pendant_component_delta, triangle_lift};
use gfactor::toughness::{is_almost_one_tough, is_one_tough, toughness, Toughness};
use gfactor::{DegreeSpec, Graph, VertexFn, VertexSet};
use num_rational::Ratio;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let width = Graph::pair_count(n);
        let full = if width == 0 { 0 } else { u64::MAX >> (64 - width) };
        any::<u64>().prop_map(move |m| Graph::from_pair_mask(n, m & full))
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |m| VertexSet::from_bits(m).intersection(VertexSet::full(n)))
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), subset(n))
    })
}

/// `(g, f)` with `0 <= g <= f <= d` pointwise.
fn instance(max_n: usize) -> impl Strategy<Value = (Graph, VertexFn, VertexFn)> {
    graph(max_n).prop_flat_map(|g| {
        let bounds: Vec<_> = g
            .degrees()
            .into_iter()
            .map(|d| (0..=d as u32).prop_flat_map(move |f| (0..=f, Just(f))))
            .collect();
        (Just(g), bounds).prop_map(|(g, pairs)| {
            let (lo, hi): (Vec<u32>, Vec<u32>) = pairs.into_iter().unzip();
            (g, VertexFn::new(lo), VertexFn::new(hi))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn handshake(g in graph(10)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn components_partition_the_rest((g, removed) in graph_and_set(10)) {
        let comps = components(&g, removed);
        prop_assert_eq!(comps.len(), component_count(&g, removed));
        let mut seen = VertexSet::EMPTY;
        for &c in &comps {
            prop_assert!(!c.is_empty() && c.is_disjoint(seen) && c.is_disjoint(removed));
            seen = seen.union(c);
        }
        prop_assert_eq!(seen, g.vertices().difference(removed));
        for (i, &a) in comps.iter().enumerate() {
            for &b in &comps[i + 1..] {
                prop_assert_eq!(edge_boundary(&g, a, b), 0);
            }
        }
    }

    #[test]
    fn boundary_is_symmetric_and_counts_crossing_edges((g, a) in graph_and_set(10), b in any::<u64>()) {
        let b = VertexSet::from_bits(b).intersection(g.vertices()).difference(a);
        let direct = g.edges().iter().filter(|&&(u, v)| {
            (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))
        }).count();
        prop_assert_eq!(edge_boundary(&g, a, b), direct);
        prop_assert_eq!(edge_boundary(&g, b, a), direct);
    }

    #[test]
    fn degree_sum_splits_inside_and_out((g, s) in graph_and_set(10), d in any::<u64>()) {
        let d = VertexSet::from_bits(d).intersection(g.vertices()).difference(s);
        let inside = g.edges().iter().filter(|&&(u, v)| s.contains(u) && s.contains(v)).count();
        let rest = g.vertices().difference(s).difference(d);
        prop_assert_eq!(degree_sum(&g, s, d), 2 * inside + edge_boundary(&g, s, rest));
    }

    #[test]
    fn admissible_h_is_bounded_even_and_complete((_, lo, hi) in instance(6)) {
        let all = target_count(&lo, &hi).unwrap();
        let hs: Vec<VertexFn> = admissible_h(&lo, &hi).unwrap().collect();
        for h in &hs {
            prop_assert!(lo.le(h) && h.le(&hi) && h.total() % 2 == 0);
        }
        let even = (0..all).filter(|&k| {
            let mut k = k;
            let mut total = 0u64;
            for v in (0..lo.len()).rev() {
                let width = u128::from(hi[v] - lo[v] + 1);
                total += u64::from(lo[v]) + (k % width) as u64;
                k /= width;
            }
            total.is_multiple_of(2)
        }).count();
        prop_assert_eq!(hs.len(), even);
    }

    #[test]
    fn f_factor_has_the_requested_degrees((g, _, f) in instance(8)) {
        if let Some(factor) = has_f_factor(&g, &f) {
            prop_assert_eq!(factor_degrees(&factor), f);
        }
    }

    #[test]
    fn gf_factor_lies_between_bounds((g, lo, hi) in instance(8)) {
        if let Some(factor) = has_gf_factor(&g, &lo, &hi).unwrap() {
            let deg = factor_degrees(&factor);
            prop_assert!(lo.le(&deg) && deg.le(&hi));
        }
    }

    #[test]
    fn criterion_agrees_with_enumeration((g, lo, hi) in instance(5)) {
        prop_assume!(!is_vacuous(&lo, &hi));
        let c = all_gf_criterion(&g, &lo, &hi).unwrap();
        let e = all_gf_enumeration(&g, &lo, &hi).unwrap();
        prop_assert_eq!(c.holds, e.holds);
        if let Some(w) = c.counterexample.and_then(|cx| cx.niessen) {
            prop_assert!(w.validates(&g, &lo, &hi));
        }
    }

    #[test]
    fn deficiency_witness_recomputes((g, lo, hi) in instance(6)) {
        if let Some(w) = find_violation(&g, &lo, &hi).unwrap() {
            prop_assert!(w.d_set.is_disjoint(w.s_set));
            prop_assert_eq!(&w, &NiessenWitness::evaluate(&g, w.d_set, w.s_set, &lo, &hi));
            prop_assert!(w.validates(&g, &lo, &hi));
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_toughness(g in graph(8), pick in any::<prop::sample::Index>()) {
        let missing: Vec<_> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let extra = missing[pick.index(missing.len())];
        let bigger = Graph::new(g.n(), g.edges().iter().copied().chain([extra])).unwrap();
        prop_assert!(toughness(&bigger).unwrap().value >= toughness(&g).unwrap().value);
    }

    #[test]
    fn one_tough_matches_value_and_implies_almost(g in connected(8)) {
        let value = toughness(&g).unwrap().value;
        let one = is_one_tough(&g).unwrap();
        prop_assert_eq!(one.holds, value.is_at_least(Ratio::from_integer(1)));
        if one.holds {
            prop_assert!(is_almost_one_tough(&g).unwrap().holds);
        }
        prop_assert_eq!(value == Toughness::Infinite, g.m() == g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn pendant_adds_a_component_iff_anchor_removed((g, removed) in graph_and_set(9), x in any::<prop::sample::Index>()) {
        let x = x.index(g.n());
        let delta = pendant_component_delta(&g, x, removed).unwrap();
        prop_assert_eq!(delta, isize::from(removed.contains(x)));
        let gx = pendant_attach(&g, x).unwrap();
        prop_assert_eq!((gx.n(), gx.m()), (g.n() + 1, g.m() + 1));
    }

    #[test]
    fn triangle_lift_shape(g in graph(10)) {
        let n = g.n();
        let lift = triangle_lift(&g);
        let l = lift.lifted();
        prop_assert_eq!((l.n(), l.m()), (3 * n, g.m() + 3 * n));
        for i in 0..n {
            let (x, y) = (lift.x_of(i), lift.y_of(i));
            prop_assert_eq!((x, y), (n + i, 2 * n + i));
            prop_assert!(l.has_edge(i, x) && l.has_edge(i, y) && l.has_edge(x, y));
            prop_assert_eq!(l.vertex_degree(x), 2);
            prop_assert_eq!(l.vertex_degree(y), 2);
            prop_assert_eq!(l.vertex_degree(i), g.vertex_degree(i) + 2);
            prop_assert!(lift.is_base(i) && !lift.is_base(x) && !lift.is_base(y));
        }
        for &(u, v) in g.edges() {
            prop_assert!(l.has_edge(u, v));
        }
    }

    #[test]
    fn lift_and_project_round_trip(g in graph(7), ones in any::<u64>()) {
        let spec = DegreeSpec::new(g.n(), VertexSet::from_bits(ones).intersection(g.vertices()));
        let lift = triangle_lift(&g);
        if let Some(h) = has_h_factor_via_lift(&g, &spec) {
            prop_assert!(spec.admits(&factor_degrees(&h)));
            let up = lift_factor(&lift, &h, &spec).unwrap();
            let down = project_factor(&lift, &up).unwrap();
            prop_assert_eq!(down.edges(), h.edges());
        }
    }

    #[test]
    fn edge_list_and_json_round_trip(g in graph(11)) {
        prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap(), &g);
        let json = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back.to_graph().unwrap(), &g);
    }
}
