//! The all-(g,f)-factors property, two ways: the deficiency criterion over
//! all disjoint pairs `(D, S)`, and direct enumeration of every admissible
//! degree function through the f-factor solver.
//!
//! For disjoint `D, S` the deficiency is
//!
//! ```text
//! g(D) - f(S) + d_{G-D}(S) - q(D, S)
//! ```
//!
//! where `d_{G-D}(S)` sums the degrees in `G - D` of the vertices of `S`
//! (edges inside `S` count twice) and `q(D, S)` counts the components `C`
//! of `G - (D ∪ S)` that contain a vertex with `g(v) < f(v)` or have
//! `e(C, S) + f(C)` odd. The property holds iff every deficiency is at
//! least `-1` when `g ≠ f`, or at least `0` when `g = f`.

use crate::degree::VertexFn;
use crate::enumerate::admissible_h;
use crate::error::{scale, Error, Result};
use crate::factor::has_f_factor;
use crate::graph::{degree_sum, edge_boundary, for_each_component, Graph, VertexSet, MASK_VERTICES};

/// Largest order for the full `3^n` scan of `(D, S)` pairs.
pub const MAX_CRITERION_N: usize = 16;

/// A pair `(D, S)` with its deficiency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiessenWitness {
    pub d_set: VertexSet,
    pub s_set: VertexSet,
    pub deficiency: i64,
    pub q_value: usize,
}

impl NiessenWitness {
    pub fn evaluate(g: &Graph, d_set: VertexSet, s_set: VertexSet, g_fn: &VertexFn, f_fn: &VertexFn) -> Self {
        let q_value = q_count(g, d_set, s_set, g_fn, f_fn);
        NiessenWitness {
            d_set,
            s_set,
            deficiency: raw_deficiency(g, d_set, s_set, g_fn, f_fn, q_value),
            q_value,
        }
    }

    /// Recomputes the stored values and checks they violate the threshold.
    pub fn validates(&self, g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> bool {
        self.d_set.is_disjoint(self.s_set)
            && self.d_set.union(self.s_set).is_subset(g.vertices())
            && *self == Self::evaluate(g, self.d_set, self.s_set, g_fn, f_fn)
            && self.deficiency < threshold(g_fn, f_fn)
    }
}

/// A failing admissible `h` and/or a violating `(D, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub h: Option<VertexFn>,
    pub niessen: Option<NiessenWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllFactorsVerdict {
    pub holds: bool,
    /// No admissible `h` exists; `holds` is then true.
    pub vacuous: bool,
    pub counterexample: Option<Counterexample>,
}

impl AllFactorsVerdict {
    fn holds() -> Self {
        AllFactorsVerdict {
            holds: true,
            vacuous: false,
            counterexample: None,
        }
    }

    pub fn vacuous() -> Self {
        AllFactorsVerdict {
            holds: true,
            vacuous: true,
            counterexample: None,
        }
    }
}

/// Validates lengths, `g <= f`, and the bitmask bound.
fn check_instance(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<()> {
    if g_fn.len() != g.n() || f_fn.len() != g.n() {
        return Err(Error::InvalidFunction(format!(
            "g and f need {} values, got {} and {}",
            g.n(),
            g_fn.len(),
            f_fn.len()
        )));
    }
    if !g_fn.le(f_fn) {
        return Err(Error::InvalidFunction("g must not exceed f".into()));
    }
    scale("vertex count", g.n() as u64, MASK_VERTICES as u64)
}

/// True iff `g = f` with odd total, so no admissible `h` exists.
pub fn is_vacuous(g_fn: &VertexFn, f_fn: &VertexFn) -> bool {
    g_fn == f_fn && g_fn.total() % 2 == 1
}

/// `-1` if `g ≠ f` somewhere, `0` if `g = f`.
pub fn threshold(g_fn: &VertexFn, f_fn: &VertexFn) -> i64 {
    if g_fn == f_fn {
        0
    } else {
        -1
    }
}

fn slack_set(g_fn: &VertexFn, f_fn: &VertexFn) -> VertexSet {
    (0..g_fn.len()).filter(|&v| g_fn[v] < f_fn[v]).collect()
}

fn q_with_slack(g: &Graph, d_set: VertexSet, s_set: VertexSet, f_fn: &VertexFn, slack: VertexSet) -> usize {
    let mut q = 0;
    for_each_component(g, d_set.union(s_set), |c| {
        if !c.is_disjoint(slack) || (edge_boundary(g, c, s_set) as u64 + f_fn.sum_over(c)) % 2 == 1 {
            q += 1;
        }
    });
    q
}

/// `q(D, S)`. Panics if `D` and `S` overlap.
pub fn q_count(g: &Graph, d_set: VertexSet, s_set: VertexSet, g_fn: &VertexFn, f_fn: &VertexFn) -> usize {
    assert!(d_set.is_disjoint(s_set), "q_count: D and S overlap");
    q_with_slack(g, d_set, s_set, f_fn, slack_set(g_fn, f_fn))
}

fn raw_deficiency(
    g: &Graph,
    d_set: VertexSet,
    s_set: VertexSet,
    g_fn: &VertexFn,
    f_fn: &VertexFn,
    q: usize,
) -> i64 {
    g_fn.sum_over(d_set) as i64 - f_fn.sum_over(s_set) as i64 + degree_sum(g, s_set, d_set) as i64 - q as i64
}

/// `g(D) - f(S) + d_{G-D}(S) - q(D, S)`. Panics if `D` and `S` overlap.
pub fn deficiency(g: &Graph, d_set: VertexSet, s_set: VertexSet, g_fn: &VertexFn, f_fn: &VertexFn) -> i64 {
    let q = q_count(g, d_set, s_set, g_fn, f_fn);
    raw_deficiency(g, d_set, s_set, g_fn, f_fn, q)
}

/// Scans `(D, S)` as one ternary digit per vertex (0 = neither, 1 = D,
/// 2 = S), vertex 0 most significant, and returns the first pair whose
/// deficiency is below the threshold.
pub fn find_violation(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<Option<NiessenWitness>> {
    check_instance(g, g_fn, f_fn)?;
    scale(
        "vertex count for the (D, S) scan",
        g.n() as u64,
        MAX_CRITERION_N as u64,
    )?;
    Ok(scan_all(g, g_fn, f_fn))
}

fn scan_all(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Option<NiessenWitness> {
    let n = g.n();
    let bound = threshold(g_fn, f_fn);
    let slack = slack_set(g_fn, f_fn);
    let mut digits = vec![0u8; n];
    let (mut d_set, mut s_set) = (VertexSet::EMPTY, VertexSet::EMPTY);
    loop {
        let q = q_with_slack(g, d_set, s_set, f_fn, slack);
        let value = raw_deficiency(g, d_set, s_set, g_fn, f_fn, q);
        if value < bound {
            return Some(NiessenWitness {
                d_set,
                s_set,
                deficiency: value,
                q_value: q,
            });
        }
        // Odometer step from the least significant vertex.
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            let bit = VertexSet::singleton(i);
            match digits[i] {
                0 => {
                    digits[i] = 1;
                    d_set = d_set.union(bit);
                    break;
                }
                1 => {
                    digits[i] = 2;
                    d_set = d_set.difference(bit);
                    s_set = s_set.union(bit);
                    break;
                }
                _ => {
                    digits[i] = 0;
                    s_set = s_set.difference(bit);
                }
            }
        }
    }
}

/// Pairs with `|D| + |S| <= 2`, by support size, then vertices, then roles.
fn scan_small_support(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Option<NiessenWitness> {
    let n = g.n();
    let bound = threshold(g_fn, f_fn);
    let check = |d: VertexSet, s: VertexSet| {
        let w = NiessenWitness::evaluate(g, d, s, g_fn, f_fn);
        (w.deficiency < bound).then_some(w)
    };
    let one = |v| VertexSet::singleton(v);
    if let Some(w) = check(VertexSet::EMPTY, VertexSet::EMPTY) {
        return Some(w);
    }
    for v in 0..n {
        for (d, s) in [(one(v), VertexSet::EMPTY), (VertexSet::EMPTY, one(v))] {
            if let Some(w) = check(d, s) {
                return Some(w);
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let both = one(u).union(one(v));
            for (d, s) in [
                (both, VertexSet::EMPTY),
                (one(u), one(v)),
                (one(v), one(u)),
                (VertexSet::EMPTY, both),
            ] {
                if let Some(w) = check(d, s) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// A deficiency violation for the exact-degree problem `(h, h)`: the full
/// scan up to [`MAX_CRITERION_N`] vertices, the `|D| + |S| <= 2` scan above.
pub fn tutte_witness(g: &Graph, h: &VertexFn) -> Option<NiessenWitness> {
    if g.n() <= MAX_CRITERION_N {
        scan_all(g, h, h)
    } else {
        scan_small_support(g, h, h)
    }
}

fn first_failing_h(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<Option<VertexFn>> {
    for h in admissible_h(g_fn, f_fn)? {
        if has_f_factor(g, &h).is_none() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Decides the property with the deficiency criterion.
///
/// Refuses vacuous instances with [`Error::VacuousInstance`]. On failure the
/// counterexample carries the first violating pair and, when the
/// admissible space is small enough to search, the first admissible `h`
/// without an h-factor.
pub fn all_gf_criterion(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<AllFactorsVerdict> {
    check_instance(g, g_fn, f_fn)?;
    if is_vacuous(g_fn, f_fn) {
        return Err(Error::VacuousInstance { total: g_fn.total() });
    }
    let Some(witness) = find_violation(g, g_fn, f_fn)? else {
        return Ok(AllFactorsVerdict::holds());
    };
    let h = first_failing_h(g, g_fn, f_fn).unwrap_or(None);
    Ok(AllFactorsVerdict {
        holds: false,
        vacuous: false,
        counterexample: Some(Counterexample {
            h,
            niessen: Some(witness),
        }),
    })
}

/// Decides the property by solving every admissible `h`.
///
/// On failure the counterexample carries the first failing `h` and a
/// deficiency violation of `(h, h)` from [`tutte_witness`].
pub fn all_gf_enumeration(g: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Result<AllFactorsVerdict> {
    check_instance(g, g_fn, f_fn)?;
    if is_vacuous(g_fn, f_fn) {
        return Ok(AllFactorsVerdict::vacuous());
    }
    Ok(match first_failing_h(g, g_fn, f_fn)? {
        None => AllFactorsVerdict::holds(),
        Some(h) => {
            let niessen = tutte_witness(g, &h);
            AllFactorsVerdict {
                holds: false,
                vacuous: false,
                counterexample: Some(Counterexample { h: Some(h), niessen }),
            }
        }
    })
}
