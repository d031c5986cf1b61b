//! File formats: the edge-list text format for graphs and factors, and the
//! JSON forms of instances, verdicts, toughness results and lift maps.
//!
//! Edge-list text is strict: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`, ASCII decimal separated by single spaces, LF endings.

use serde::{Deserialize, Serialize};

use crate::degree::VertexFn;
use crate::error::{Error, Result};
use crate::graph::{Factor, Graph, VertexSet};
use crate::niessen::{AllFactorsVerdict, NiessenWitness};
use crate::reduction::{LiftedGraph, ReductionInstance};
use crate::toughness::{CutVerdict, Toughness, ToughnessResult};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_decimal(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(
            line,
            format!("expected a decimal number, got {token:?}"),
        ));
    }
    token
        .parse()
        .map_err(|_| parse_err(line, format!("number out of range: {token}")))
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let mut parts = text.split(' ');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((parse_decimal(a, line)?, parse_decimal(b, line)?)),
        _ => Err(parse_err(line, "expected two numbers separated by one space")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    if text.contains('\r') {
        return Err(parse_err(1, "CR characters are not allowed; use LF line endings"));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line, lineno)?;
        if !(u < v && v < n) {
            return Err(parse_err(
                lineno,
                format!("edge {u} {v} violates 0 <= u < v < {n}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            edges.len() + 2,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A factor as the edge list of the spanning subgraph: the host's vertex
/// count, then the chosen edges.
pub fn write_factor(f: &Factor<'_>) -> String {
    let mut out = format!("{} {}\n", f.host().n(), f.edges().len());
    for &(u, v) in f.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

/// `{"graph": {...}, "g": [...], "f": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub graph: GraphJson,
    pub g: Vec<u32>,
    pub f: Vec<u32>,
}

/// A validated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub g_fn: VertexFn,
    pub f_fn: VertexFn,
}

impl InstanceJson {
    pub fn new(graph: &Graph, g_fn: &VertexFn, f_fn: &VertexFn) -> Self {
        InstanceJson {
            graph: graph.into(),
            g: g_fn.values().to_vec(),
            f: f_fn.values().to_vec(),
        }
    }

    /// Checks the graph, the array lengths, `g <= f`, and `f(v) <= n - 1`.
    pub fn validate(&self) -> Result<Instance> {
        let graph = self.graph.to_graph()?;
        let n = graph.n();
        if self.g.len() != n || self.f.len() != n {
            return Err(Error::InvalidFunction(format!(
                "g and f need {n} values, got {} and {}",
                self.g.len(),
                self.f.len()
            )));
        }
        if let Some(v) = (0..n).find(|&v| self.g[v] > self.f[v]) {
            return Err(Error::InvalidFunction(format!(
                "g({v}) = {} exceeds f({v}) = {}",
                self.g[v], self.f[v]
            )));
        }
        let cap = n.saturating_sub(1) as u32;
        if let Some(v) = (0..n).find(|&v| self.f[v] > cap) {
            return Err(Error::InvalidFunction(format!(
                "f({v}) = {} exceeds n - 1 = {cap}",
                self.f[v]
            )));
        }
        Ok(Instance {
            graph,
            g_fn: VertexFn::new(self.g.clone()),
            f_fn: VertexFn::new(self.f.clone()),
        })
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    serde_json::from_str::<InstanceJson>(text)?.validate()
}

impl From<&ReductionInstance> for InstanceJson {
    fn from(inst: &ReductionInstance) -> Self {
        InstanceJson::new(inst.graph(), &inst.g_fn, &inst.f_fn)
    }
}

/// `{"x_of": [...], "y_of": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftMapJson {
    pub x_of: Vec<usize>,
    pub y_of: Vec<usize>,
}

impl From<&LiftedGraph> for LiftMapJson {
    fn from(l: &LiftedGraph) -> Self {
        LiftMapJson {
            x_of: l.x_map(),
            y_of: l.y_map(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiessenJson {
    pub d: Vec<usize>,
    pub s: Vec<usize>,
    pub deficiency: i64,
    pub q: usize,
}

impl From<&NiessenWitness> for NiessenJson {
    fn from(w: &NiessenWitness) -> Self {
        NiessenJson {
            d: w.d_set.to_vec(),
            s: w.s_set.to_vec(),
            deficiency: w.deficiency,
            q: w.q_value,
        }
    }
}

impl NiessenJson {
    pub fn to_witness(&self) -> NiessenWitness {
        NiessenWitness {
            d_set: self.d.iter().copied().collect::<VertexSet>(),
            s_set: self.s.iter().copied().collect::<VertexSet>(),
            deficiency: self.deficiency,
            q_value: self.q,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub h: Option<Vec<u32>>,
    pub niessen: Option<NiessenJson>,
}

/// `{"holds": bool, "vacuous": bool, "witness": {...} | null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub holds: bool,
    pub vacuous: bool,
    pub witness: Option<WitnessJson>,
}

impl From<&AllFactorsVerdict> for VerdictJson {
    fn from(v: &AllFactorsVerdict) -> Self {
        VerdictJson {
            holds: v.holds,
            vacuous: v.vacuous,
            witness: v.counterexample.as_ref().map(|c| WitnessJson {
                h: c.h.as_ref().map(|h| h.values().to_vec()),
                niessen: c.niessen.as_ref().map(NiessenJson::from),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ToughnessValueJson {
    Fraction {
        num: u64,
        den: u64,
    },
    /// Always `"infinite"`.
    Label(String),
}

/// `{"toughness": {"num": .., "den": ..} | "infinite", "cut": [...] | null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessJson {
    pub toughness: ToughnessValueJson,
    pub cut: Option<Vec<usize>>,
}

impl From<&ToughnessResult> for ToughnessJson {
    fn from(r: &ToughnessResult) -> Self {
        let toughness = match r.value {
            Toughness::Infinite => ToughnessValueJson::Label("infinite".into()),
            Toughness::Finite(t) => ToughnessValueJson::Fraction {
                num: *t.numer(),
                den: *t.denom(),
            },
        };
        ToughnessJson {
            toughness,
            cut: r.witness_cut.map(VertexSet::to_vec),
        }
    }
}

/// `{"holds": bool, "cut": [...] | null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutVerdictJson {
    pub holds: bool,
    pub cut: Option<Vec<usize>>,
}

impl From<&CutVerdict> for CutVerdictJson {
    fn from(v: &CutVerdict) -> Self {
        CutVerdictJson {
            holds: v.holds,
            cut: v.cut.map(VertexSet::to_vec),
        }
    }
}
