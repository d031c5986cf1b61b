//! Exhaustive verification runs over small-graph universes, and the
//! end-to-end check of the cubic-graph reduction with its certificates.
//!
//! Each run checks one biconditional on every graph of its universe and
//! collects the graphs where the two sides disagree.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::degree::VertexFn;
use crate::enumerate::{
    admissible_h, connected_cubic_graphs, connected_graphs, degree_specs_all, degree_specs_even,
    sample_connected_graphs, MAX_EXHAUSTIVE_N,
};
use crate::error::{scale, Error, Result};
use crate::factor::{
    has_f_factor, has_f_factor_bruteforce, has_h_factor_via_lift, lift_factor, project_factor,
    spec_profile_bruteforce, MAX_BRUTE_FORCE_EDGES,
};
use crate::graph::{factor_degrees, Edge, Graph, VertexSet};
use crate::io::{GraphJson, VerdictJson};
use crate::niessen::{all_gf_criterion, all_gf_enumeration, AllFactorsVerdict, MAX_CRITERION_N};
use crate::reduction::{pendant_attach, reduce_to_all_gf, triangle_lift};
use crate::toughness::{is_almost_one_tough, is_one_tough, is_tough_cut};

/// Largest cubic order accepted by [`verify_reduction`] (lift on 48 vertices).
pub const MAX_REDUCTION_N: usize = 16;
/// Cubic orders covered by the lift and reduction runs.
pub const CUBIC_SIZES: [usize; 3] = [4, 6, 8];
/// Orders sampled by the pendant run beyond the exhaustive range.
pub const SAMPLED_SIZES: [usize; 3] = [7, 8, 9];

#[derive(Clone, Debug, Serialize)]
pub struct SizeCount {
    pub n: usize,
    pub graphs: usize,
    /// Individual checks, e.g. graph-spec pairs.
    pub instances: usize,
    pub counterexamples: usize,
    pub sampled: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub check: &'static str,
    pub statement: &'static str,
    pub seed: Option<u64>,
    pub sizes: Vec<SizeCount>,
    pub counterexamples: Vec<Discrepancy>,
    /// Named counters specific to the run.
    pub tallies: BTreeMap<&'static str, u64>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    fn new(check: &'static str, statement: &'static str) -> Self {
        VerifyReport {
            check,
            statement,
            seed: None,
            sizes: Vec::new(),
            counterexamples: Vec::new(),
            tallies: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn graphs(&self) -> usize {
        self.sizes.iter().map(|s| s.graphs).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One line per size plus a total, e.g. `n=4: 38 graphs, 0 counterexamples (38 checks)`.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        for s in &self.sizes {
            lines.push(format!(
                "  n={}{}: {} graphs, {} counterexamples ({} checks)",
                s.n,
                if s.sampled { " (sampled)" } else { "" },
                s.graphs,
                s.counterexamples,
                s.instances
            ));
        }
        lines.push(format!(
            "  total: {} graphs, {} counterexamples",
            self.graphs(),
            self.counterexamples.len()
        ));
        lines
    }

    fn tally(&mut self, key: &'static str, by: u64) {
        *self.tallies.entry(key).or_default() += by;
    }
}

/// Outcome of checking one graph.
struct Item {
    instances: usize,
    failure: Option<String>,
    tallies: Vec<(&'static str, u64)>,
}

impl Item {
    fn single(failure: Option<String>) -> Self {
        Item {
            instances: 1,
            failure,
            tallies: Vec::new(),
        }
    }
}

fn run_pool<T, F>(jobs: usize, graphs: &[Graph], check: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidFunction(format!("thread pool: {e}")))?;
    Ok(pool.install(|| graphs.par_iter().map(&check).collect()))
}

fn absorb(report: &mut VerifyReport, n: usize, sampled: bool, graphs: &[Graph], items: Vec<Item>) {
    let mut size = SizeCount {
        n,
        graphs: graphs.len(),
        instances: 0,
        counterexamples: 0,
        sampled,
    };
    for (g, item) in graphs.iter().zip(items) {
        size.instances += item.instances;
        for (key, by) in item.tallies {
            report.tally(key, by);
        }
        if let Some(detail) = item.failure {
            size.counterexamples += 1;
            report.counterexamples.push(Discrepancy {
                graph: g.into(),
                detail,
            });
        }
    }
    report.sizes.push(size);
}

fn pendant_item(g: &Graph) -> Item {
    let run = || -> Result<Option<String>> {
        let tough = is_one_tough(g)?;
        let mut all_almost = true;
        let mut failing_x = None;
        for x in 0..g.n() {
            if !is_almost_one_tough(&pendant_attach(g, x)?)?.holds {
                all_almost = false;
                failing_x = Some(x);
                break;
            }
        }
        Ok((tough.holds != all_almost).then(|| {
            format!(
                "1-tough = {} (cut {:?}) but every pendant graph almost 1-tough = {} (first failure at x = {:?})",
                tough.holds, tough.cut, all_almost, failing_x
            )
        }))
    };
    Item::single(run().unwrap_or_else(|e| Some(format!("error: {e}"))))
}

/// `G` is 1-tough iff `G^x` is almost 1-tough for every vertex `x`: every
/// connected graph up to `n_max` (at most 6), plus `samples` seeded
/// connected graphs spread over 7, 8 and 9 vertices.
pub fn verify_pendant_toughness(
    n_max: usize,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<VerifyReport> {
    scale(
        "n_max for exhaustive pendant check",
        n_max as u64,
        MAX_EXHAUSTIVE_N as u64,
    )?;
    let mut report = VerifyReport::new(
        "pendant-toughness",
        "G is 1-tough iff G^x is almost 1-tough for every x",
    );
    report.seed = Some(seed);
    for n in 1..=n_max {
        let graphs: Vec<Graph> = connected_graphs(n)?.collect();
        let items = run_pool(jobs, &graphs, pendant_item)?;
        absorb(&mut report, n, false, &graphs, items);
    }
    if samples > 0 {
        let per = samples / SAMPLED_SIZES.len();
        for (i, &n) in SAMPLED_SIZES.iter().enumerate() {
            let count = per + usize::from(i < samples % SAMPLED_SIZES.len());
            let graphs: Vec<Graph> = sample_connected_graphs(n, count, seed)?.collect();
            let items = run_pool(jobs, &graphs, pendant_item)?;
            absorb(&mut report, n, true, &graphs, items);
        }
        report.notes.push(format!(
            "sampled graphs drawn uniformly from labeled connected graphs, seed {seed:#x}"
        ));
    }
    Ok(report)
}

fn lift_item(g: &Graph) -> Item {
    let run = || -> Result<Item> {
        let profile = spec_profile_bruteforce(g)?;
        let lifted = triangle_lift(g);
        let mut item = Item {
            instances: 0,
            failure: None,
            tallies: Vec::new(),
        };
        let (mut present, mut factors, mut round_trips) = (0u64, 0u64, 0u64);
        for spec in degree_specs_all(g.n())? {
            item.instances += 1;
            let oracle = profile.factor(g, &spec);
            let lifted_side = has_h_factor_via_lift(g, &spec);
            if oracle.is_some() != lifted_side.is_some() {
                item.failure = Some(format!(
                    "{spec:?}: brute force {} but lifted solver {}",
                    oracle.is_some(),
                    lifted_side.is_some()
                ));
                break;
            }
            if let Some(f) = &lifted_side {
                if !spec.admits(&factor_degrees(f)) {
                    item.failure = Some(format!("{spec:?}: lifted solver returned a non-H-factor"));
                    break;
                }
            }
            let found: Vec<_> = oracle.into_iter().chain(lifted_side).collect();
            present += u64::from(!found.is_empty());
            for f in found {
                factors += 1;
                let up = lift_factor(&lifted, &f, &spec)?;
                if project_factor(&lifted, &up)?.edges() != f.edges() {
                    item.failure = Some(format!("{spec:?}: projection of the lift differs from F"));
                    break;
                }
                round_trips += 1;
            }
            if item.failure.is_some() {
                break;
            }
        }
        item.tallies = vec![
            ("specs_with_h_factor", present),
            ("h_factors_found", factors),
            ("round_trips", round_trips),
        ];
        Ok(item)
    };
    run().unwrap_or_else(|e| Item::single(Some(format!("error: {e}"))))
}

/// `G` has an H-factor iff `G_L` has an `h_H`-factor, for every connected
/// cubic graph of the given orders and all `2^n` specs (parity unrestricted).
/// Every H-factor found on either side is also lifted and projected back.
pub fn verify_lift_equivalence(sizes: &[usize], jobs: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("lift-equivalence", "G has an H-factor iff G_L has an h_H-factor");
    for &n in sizes {
        let graphs: Vec<Graph> = connected_cubic_graphs(n)?.collect();
        let items = run_pool(jobs, &graphs, lift_item)?;
        absorb(&mut report, n, false, &graphs, items);
    }
    report.notes.push(
        "H side: exhaustive edge-subset search on G; lifted side: f-factor gadget and blossom matching on G_L"
            .into(),
    );
    Ok(report)
}

fn parity_item(g: &Graph) -> Item {
    let run = || -> Result<Option<String>> {
        let almost = is_almost_one_tough(g)?;
        let profile = spec_profile_bruteforce(g)?;
        let missing = degree_specs_even(g)?.find(|s| !profile.is_realizable(s));
        Ok((almost.holds != missing.is_none()).then(|| {
            format!(
                "almost 1-tough = {} (cut {:?}) but first even spec without H-factor = {:?}",
                almost.holds, almost.cut, missing
            )
        }))
    };
    Item::single(run().unwrap_or_else(|e| Some(format!("error: {e}"))))
}

/// A connected `G` has an H-factor for every even spec iff `G` is almost
/// 1-tough: every connected graph up to `n_max` (at most 6).
pub fn verify_parity_factors(n_max: usize, jobs: usize) -> Result<VerifyReport> {
    scale(
        "n_max for exhaustive parity-factor check",
        n_max as u64,
        MAX_EXHAUSTIVE_N as u64,
    )?;
    let mut report = VerifyReport::new(
        "parity-factors",
        "connected G has an H-factor for every even H iff G is almost 1-tough",
    );
    for n in 1..=n_max {
        let graphs: Vec<Graph> = connected_graphs(n)?.collect();
        let items = run_pool(jobs, &graphs, parity_item)?;
        absorb(&mut report, n, false, &graphs, items);
    }
    Ok(report)
}

/// Result of [`verify_reduction`] on one cubic graph.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub almost_one_tough: bool,
    /// A cut with `ω(G - S) >= |S| + 2` when `G` is not almost 1-tough.
    pub tough_cut: Option<VertexSet>,
    pub enumeration: AllFactorsVerdict,
    /// Present when the lift is small enough for the `(D, S)` scan.
    pub criterion: Option<AllFactorsVerdict>,
    pub chosen_h: VertexFn,
    /// An h-factor of `G_L` for `chosen_h`, when one exists.
    pub chosen_factor: Option<Vec<Edge>>,
    /// Every verdict agrees with `almost_one_tough`.
    pub agree: bool,
    /// Every certificate recomputes; empty when all are valid.
    pub certificate_errors: Vec<String>,
}

impl ReductionReport {
    pub fn is_consistent(&self) -> bool {
        self.agree && self.certificate_errors.is_empty()
    }
}

#[derive(Serialize)]
pub struct ReductionReportJson {
    pub almost_one_tough: bool,
    pub tough_cut: Option<Vec<usize>>,
    pub enumeration: VerdictJson,
    pub criterion: Option<VerdictJson>,
    pub chosen_h: Vec<u32>,
    pub chosen_factor: Option<Vec<[usize; 2]>>,
    pub agree: bool,
    pub certificate_errors: Vec<String>,
}

impl From<&ReductionReport> for ReductionReportJson {
    fn from(r: &ReductionReport) -> Self {
        ReductionReportJson {
            almost_one_tough: r.almost_one_tough,
            tough_cut: r.tough_cut.map(VertexSet::to_vec),
            enumeration: (&r.enumeration).into(),
            criterion: r.criterion.as_ref().map(Into::into),
            chosen_h: r.chosen_h.values().to_vec(),
            chosen_factor: r
                .chosen_factor
                .as_ref()
                .map(|es| es.iter().map(|&(u, v)| [u, v]).collect()),
            agree: r.agree,
            certificate_errors: r.certificate_errors.clone(),
        }
    }
}

/// Runs both sides of the reduction on a connected cubic `g` and checks
/// every certificate.
///
/// Negative side: the tough cut must satisfy `ω(G - S) >= |S| + 2`, and the
/// failing `h` must have no h-factor by the solver, by the edge-subset
/// oracle when the lift has at most 24 edges, and by its deficiency
/// witness when one was found. Positive side: `chosen_h` (default: the
/// first admissible `h`, i.e. `h ≡ 1`) must be admissible and, when the
/// property holds, have an h-factor.
pub fn verify_reduction(g: &Graph, chosen_h: Option<&VertexFn>) -> Result<ReductionReport> {
    scale(
        "cubic order for reduction check",
        g.n() as u64,
        MAX_REDUCTION_N as u64,
    )?;
    let inst = reduce_to_all_gf(g)?;
    let lg = inst.graph();
    let almost = is_almost_one_tough(g)?;
    let enumeration = all_gf_enumeration(lg, &inst.g_fn, &inst.f_fn)?;
    let criterion = if lg.n() <= MAX_CRITERION_N {
        Some(all_gf_criterion(lg, &inst.g_fn, &inst.f_fn)?)
    } else {
        None
    };
    let agree =
        enumeration.holds == almost.holds && criterion.as_ref().is_none_or(|c| c.holds == almost.holds);

    let mut errors = Vec::new();
    if let Some(cut) = almost.cut {
        if !is_tough_cut(g, cut) {
            errors.push(format!("tough cut {cut:?} does not leave |S| + 2 components"));
        }
    }
    for (name, verdict) in [
        ("enumeration", Some(&enumeration)),
        ("criterion", criterion.as_ref()),
    ] {
        let Some(verdict) = verdict else { continue };
        if verdict.holds {
            continue;
        }
        let Some(cx) = &verdict.counterexample else {
            errors.push(format!("{name}: failure without counterexample"));
            continue;
        };
        if let Some(h) = &cx.h {
            if has_f_factor(lg, h).is_some() {
                errors.push(format!("{name}: failing h {h:?} has an h-factor"));
            }
            if lg.m() <= MAX_BRUTE_FORCE_EDGES && has_f_factor_bruteforce(lg, h)?.is_some() {
                errors.push(format!("{name}: oracle finds an h-factor for {h:?}"));
            }
            if name == "enumeration" {
                if let Some(w) = &cx.niessen {
                    if !w.validates(lg, h, h) {
                        errors.push(format!("{name}: deficiency witness {w:?} does not recompute"));
                    }
                }
            }
        } else if name == "enumeration" {
            errors.push(format!("{name}: failure without a failing h"));
        }
        if name == "criterion" {
            match &cx.niessen {
                Some(w) if w.validates(lg, &inst.g_fn, &inst.f_fn) => {}
                other => errors.push(format!("criterion: invalid witness {other:?}")),
            }
        }
    }

    let chosen_h = match chosen_h {
        Some(h) => h.clone(),
        None => admissible_h(&inst.g_fn, &inst.f_fn)?
            .next()
            .expect("g ≡ 1 on 3n vertices with n even has even total"),
    };
    let admissible = chosen_h.len() == lg.n()
        && inst.g_fn.le(&chosen_h)
        && chosen_h.le(&inst.f_fn)
        && chosen_h.total() % 2 == 0;
    if !admissible {
        return Err(Error::InvalidFunction(format!(
            "chosen h {chosen_h:?} is not admissible"
        )));
    }
    let chosen_factor = has_f_factor(lg, &chosen_h);
    if let Some(f) = &chosen_factor {
        if factor_degrees(f) != chosen_h {
            errors.push("chosen factor degrees differ from chosen h".into());
        }
    } else if enumeration.holds {
        errors.push(format!(
            "property holds but chosen h {chosen_h:?} has no h-factor"
        ));
    }

    Ok(ReductionReport {
        almost_one_tough: almost.holds,
        tough_cut: almost.cut,
        enumeration,
        criterion,
        chosen_h,
        chosen_factor: chosen_factor.map(|f| f.edges().to_vec()),
        agree,
        certificate_errors: errors,
    })
}

fn reduction_item(g: &Graph) -> Item {
    match verify_reduction(g, None) {
        Ok(r) => Item {
            instances: 1,
            failure: (!r.is_consistent()).then(|| {
                format!(
                    "almost 1-tough = {}, enumeration = {}, criterion = {:?}, certificate errors = {:?}",
                    r.almost_one_tough,
                    r.enumeration.holds,
                    r.criterion.as_ref().map(|c| c.holds),
                    r.certificate_errors
                )
            }),
            tallies: vec![
                ("negative_instances", u64::from(!r.almost_one_tough)),
                ("criterion_cross_checks", u64::from(r.criterion.is_some())),
            ],
        },
        Err(e) => Item::single(Some(format!("error: {e}"))),
    }
}

/// `G` is almost 1-tough iff `G_L` has all (g,f)-factors for the reduced
/// instance, for every connected cubic graph of the given orders.
pub fn verify_reduction_equivalence(sizes: &[usize], jobs: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(
        "reduction",
        "cubic G is almost 1-tough iff G_L has all (g,f)-factors (g = 1, f = 2 on V(G), 1 elsewhere)",
    );
    for &n in sizes {
        let graphs: Vec<Graph> = connected_cubic_graphs(n)?.collect();
        let items = run_pool(jobs, &graphs, reduction_item)?;
        absorb(&mut report, n, false, &graphs, items);
    }
    report.notes.push(format!(
        "criterion cross-check runs where the lift has at most {MAX_CRITERION_N} vertices"
    ));
    Ok(report)
}
