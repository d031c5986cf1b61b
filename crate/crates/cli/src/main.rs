//! `gfactor`: factors, toughness, and the cubic reduction from the shell.
//!
//! Exit codes are the machine contract. Every subcommand exits 2 on a
//! usage, parse, or hypothesis error, with the message on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gfactor::enumerate::DEFAULT_SEED;
use gfactor::factor::{has_f_factor, has_gf_factor};
use gfactor::io::{
    parse_edge_list, parse_instance, write_factor, CutVerdictJson, GraphJson, InstanceJson, LiftMapJson,
    ToughnessJson, VerdictJson,
};
use gfactor::niessen::{all_gf_criterion, all_gf_enumeration, is_vacuous};
use gfactor::reduction::reduce_to_all_gf;
use gfactor::toughness::{is_almost_one_tough, is_one_tough, toughness};
use gfactor::verify::{
    verify_lift_equivalence, verify_parity_factors, verify_pendant_toughness, verify_reduction_equivalence,
    VerifyReport, CUBIC_SIZES,
};
use gfactor::{AllFactorsVerdict, Error, Graph, VertexFn};

const EXIT_ERROR: u8 = 2;
const EXIT_VACUOUS: u8 = 3;
/// Default `--n-max` for the runs over all connected graphs.
const DEFAULT_N_MAX: usize = 6;
/// Default number of sampled graphs beyond the exhaustive range.
const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "gfactor",
    version,
    about = "Exact graph factors and toughness on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find an f-factor, or a (g,f)-factor when --g is given.
    /// Exit 0 found, 1 absent.
    CheckFactor {
        /// Edge-list file (first line `n m`, then one `u v` per edge) or graph JSON.
        #[arg(long)]
        graph: PathBuf,
        /// Upper degree bound as a JSON array, inline or in a file.
        #[arg(long)]
        f: String,
        /// Lower degree bound as a JSON array, inline or in a file.
        #[arg(long)]
        g: Option<String>,
    },
    /// Decide whether every admissible h has an h-factor.
    /// Exit 0 holds, 1 fails, 3 vacuous, 2 if the methods disagree.
    CheckAllFactors {
        /// Instance JSON: {"graph": {"n": .., "edges": [[u, v], ..]}, "g": [..], "f": [..]}.
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Exact toughness, or a 1-tough / almost 1-tough verdict with its cut.
    Toughness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Value)]
        mode: Mode,
    },
    /// Build the all-(g,f)-factors instance for a connected cubic graph.
    /// Also writes the lift's vertex map next to the output as `<out>.map.json`.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the exhaustive equivalence checks. Exit 0 iff no counterexamples.
    VerifyLemmas {
        #[arg(long, value_enum, default_value_t = Lemma::All)]
        lemma: Lemma,
        /// Largest order: connected graphs for pendant and parity (at most 6),
        /// cubic graphs for lift and reduction (sizes 4, 6, 8 up to this).
        #[arg(long)]
        n_max: Option<usize>,
        /// Sampling seed, decimal or 0x-prefixed hex.
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        /// Sampled graphs on 7 to 9 vertices for the pendant check.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Worker threads; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the full reports as JSON instead of summary lines.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Criterion,
    #[value(alias = "enumeration")]
    Enum,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Value,
    OneTough,
    Almost,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Lemma {
    /// 1-tough iff every pendant graph is almost 1-tough.
    #[value(name = "2.2", alias = "pendant")]
    Pendant,
    /// H-factor iff h_H-factor of the triangle lift.
    #[value(name = "2.4", alias = "lift")]
    Lift,
    /// Cubic reduction to all (g,f)-factors.
    #[value(name = "2.5", alias = "reduction")]
    Reduction,
    /// All even H-factors iff almost 1-tough.
    #[value(name = "1.5", alias = "parity")]
    Parity,
    All,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

/// A failure with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_ERROR, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", path.display())))
}

/// Edge-list text, or graph JSON when the file starts with `{`.
fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    let graph = if text.trim_start().starts_with('{') {
        serde_json::from_str::<GraphJson>(&text)
            .map_err(Error::from)?
            .to_graph()?
    } else {
        parse_edge_list(&text)?
    };
    Ok(graph)
}

fn load_fn(arg: &str, n: usize, name: &str) -> Result<VertexFn, Failure> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        read(Path::new(arg))?
    };
    let values: Vec<u32> = serde_json::from_str(&text).map_err(|e| {
        Failure(
            EXIT_ERROR,
            format!("--{name}: expected a JSON array of integers: {e}"),
        )
    })?;
    if values.len() != n {
        return Err(Failure(
            EXIT_ERROR,
            format!("--{name}: graph has {n} vertices, got {} values", values.len()),
        ));
    }
    Ok(VertexFn::new(values))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn check_factor(graph: &Path, f: &str, g: Option<&str>) -> Outcome {
    let graph = load_graph(graph)?;
    let f_fn = load_fn(f, graph.n(), "f")?;
    let found = match g {
        Some(g) => {
            let g_fn = load_fn(g, graph.n(), "g")?;
            has_gf_factor(&graph, &g_fn, &f_fn)?
        }
        None => has_f_factor(&graph, &f_fn),
    };
    match found {
        Some(factor) => {
            print!("{}", write_factor(&factor));
            Ok(0)
        }
        None => {
            println!("absent");
            Ok(1)
        }
    }
}

fn check_all_factors(instance: &Path, method: Method) -> Outcome {
    let inst = parse_instance(&read(instance)?)?;
    let (g, lo, hi) = (&inst.graph, &inst.g_fn, &inst.f_fn);
    if is_vacuous(lo, hi) {
        println!("{}", to_json(&VerdictJson::from(&AllFactorsVerdict::vacuous())));
        return Ok(EXIT_VACUOUS);
    }
    let verdict = match method {
        Method::Criterion => all_gf_criterion(g, lo, hi)?,
        Method::Enum => all_gf_enumeration(g, lo, hi)?,
        Method::Both => {
            let c = all_gf_criterion(g, lo, hi)?;
            let e = all_gf_enumeration(g, lo, hi)?;
            if c.holds != e.holds {
                println!("{}", to_json(&VerdictJson::from(&c)));
                println!("{}", to_json(&VerdictJson::from(&e)));
                return Err(Failure(
                    EXIT_ERROR,
                    format!(
                        "methods disagree: criterion holds = {}, enumeration holds = {}",
                        c.holds, e.holds
                    ),
                ));
            }
            c
        }
    };
    println!("{}", to_json(&VerdictJson::from(&verdict)));
    Ok(if verdict.holds { 0 } else { 1 })
}

fn run_toughness(graph: &Path, mode: Mode) -> Outcome {
    let graph = load_graph(graph)?;
    let line = match mode {
        Mode::Value => to_json(&ToughnessJson::from(&toughness(&graph)?)),
        Mode::OneTough => to_json(&CutVerdictJson::from(&is_one_tough(&graph)?)),
        Mode::Almost => to_json(&CutVerdictJson::from(&is_almost_one_tough(&graph)?)),
    };
    println!("{line}");
    Ok(0)
}

fn write(path: &Path, text: String) -> Result<(), Failure> {
    fs::write(path, text + "\n").map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn reduce(graph: &Path, out: &Path) -> Outcome {
    let graph = load_graph(graph)?;
    let inst = reduce_to_all_gf(&graph)?;
    let map_path = out.with_extension("map.json");
    write(out, to_json(&InstanceJson::from(&inst)))?;
    write(&map_path, to_json(&LiftMapJson::from(&inst.lifted)))?;
    println!(
        "wrote {} ({} vertices, {} edges) and {}",
        out.display(),
        inst.graph().n(),
        inst.graph().m(),
        map_path.display()
    );
    Ok(0)
}

fn verify_lemmas(
    lemma: Lemma,
    n_max: Option<usize>,
    seed: u64,
    samples: usize,
    jobs: Option<usize>,
    json: bool,
) -> Outcome {
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let exhaustive_n = n_max.unwrap_or(DEFAULT_N_MAX);
    let cubic: Vec<usize> = CUBIC_SIZES
        .into_iter()
        .filter(|&n| n_max.is_none_or(|m| n <= m))
        .collect();
    let wanted = |l: Lemma| lemma == Lemma::All || lemma == l;

    let mut reports: Vec<(&str, VerifyReport)> = Vec::new();
    if wanted(Lemma::Pendant) {
        reports.push((
            "2.2",
            verify_pendant_toughness(exhaustive_n, samples, seed, jobs)?,
        ));
    }
    if wanted(Lemma::Lift) {
        reports.push(("2.4", verify_lift_equivalence(&cubic, jobs)?));
    }
    if wanted(Lemma::Reduction) {
        reports.push(("2.5", verify_reduction_equivalence(&cubic, jobs)?));
    }
    if wanted(Lemma::Parity) {
        reports.push(("1.5", verify_parity_factors(exhaustive_n, jobs)?));
    }

    if json {
        let all: Vec<_> = reports
            .iter()
            .map(|(id, r)| serde_json::json!({ "lemma": id, "report": r }))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({ "seed": seed, "reports": all })).unwrap()
        );
    } else {
        println!("seed: {seed:#x}");
        for (id, r) in &reports {
            println!("{} ({id}): {}", r.check, r.statement);
            for line in r.summary_lines() {
                println!("{line}");
            }
            for (k, v) in &r.tallies {
                println!("  {k}: {v}");
            }
            for c in &r.counterexamples {
                println!("  counterexample: {} {}", to_json(&c.graph), c.detail);
            }
        }
    }
    Ok(if reports.iter().all(|(_, r)| r.is_clean()) {
        0
    } else {
        1
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::CheckFactor { graph, f, g } => check_factor(graph, f, g.as_deref()),
        Command::CheckAllFactors { instance, method } => check_all_factors(instance, *method),
        Command::Toughness { graph, mode } => run_toughness(graph, *mode),
        Command::Reduce { graph, out } => reduce(graph, out),
        Command::VerifyLemmas {
            lemma,
            n_max,
            seed,
            samples,
            jobs,
            json,
        } => verify_lemmas(*lemma, *n_max, *seed, *samples, *jobs, *json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
