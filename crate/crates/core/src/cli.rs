//! The `subfree` command line. The binary only forwards to [`run`], so the
//! whole interface is testable in-process.
//!
//! Exit codes: 0 success, 1 a decision answered NO, 2 usage, parse or
//! validation error, 3 capacity exceeded, 4 internal invariant failure.
//! With `--json` every report and every error is a JSON object on stdout.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{Edge, Graph};
use crate::hardness::cnf::random_2p1n;
use crate::hardness::{build_variable_gadget, parse_cnf, reduce, verify_reduction};
use crate::ifvs::{min_ifvs_subcubic, IfvsOutcome};
use crate::meta::{check_structure_theorem, classify_h, decompose_ct, solve, Witness};
use crate::oracle::{
    oracle_chromatic, oracle_k_colouring, oracle_matching_cut, oracle_min_cvc, oracle_min_fvs,
    oracle_min_ifvs, ProblemKind,
};
use crate::subgraph::{contains_spider, SpiderPattern};
use crate::{to_canonical_json, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "subfree", version, about = "Feedback vertex set and related solvers for spider-free graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print reports and errors as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

/// Vertex caps for the exponential engines.
#[derive(Args, Debug)]
pub struct Caps {
    #[arg(long, global = true, default_value_t = Limits::default().oracle, value_parser = positive)]
    pub oracle_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().oracle_subcubic, value_parser = positive)]
    pub oracle_subcubic_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().matching_cut, value_parser = positive)]
    pub matching_cut_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().fvs_exact, value_parser = positive)]
    pub fvs_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().fvs_exact_subcubic, value_parser = positive)]
    pub fvs_subcubic_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().treedepth, value_parser = positive)]
    pub treedepth_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().pattern, value_parser = positive)]
    pub pattern_cap: usize,
    #[arg(long, global = true, default_value_t = Limits::default().reduction, value_parser = positive)]
    pub reduction_cap: usize,
}

impl Caps {
    pub fn limits(&self) -> Limits {
        Limits {
            oracle: self.oracle_cap,
            oracle_subcubic: self.oracle_subcubic_cap,
            matching_cut: self.matching_cut_cap,
            fvs_exact: self.fvs_cap,
            fvs_exact_subcubic: self.fvs_subcubic_cap,
            treedepth: self.treedepth_cap,
            pattern: self.pattern_cap,
            reduction: self.reduction_cap,
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("caps must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve a problem with the bridge-splitting meta-solver.
    Solve {
        /// fvs, ifvs, cvc, colouring or matchingcut.
        problem: String,
        file: PathBuf,
        /// Number of colours, required for colouring.
        #[arg(long)]
        k: Option<usize>,
        /// Run the subcubic IFVS algorithm directly (ifvs only).
        #[arg(long)]
        subcubic: bool,
    },
    /// Print the C/T decomposition and the treedepth bound checks.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = positive)]
        q: usize,
        #[arg(long, default_value_t = 1, value_parser = positive)]
        r: usize,
    },
    /// Test a graph for a spider subgraph.
    Check {
        file: PathBuf,
        /// Tentacle lengths, e.g. 2,2,2,2.
        #[arg(long)]
        spider: SpiderPattern,
    },
    /// Solve a problem by brute force on the whole graph.
    Oracle {
        problem: String,
        file: PathBuf,
        /// Colours for a decision; without it colouring reports the chromatic number.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build the FVS instance of a 2P1N-3SAT formula.
    Reduce {
        formula: PathBuf,
        /// Graph output; the JSON sidecar goes to the same path plus `.json`.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a reduction against SAT and FVS/IFVS oracles.
    VerifyReduction { formula: PathBuf },
    /// Generate a graph or formula.
    Gen {
        kind: GenKind,
        /// Vertices (or variables for 2p1n, cycles for cactus kinds).
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra edges for `subcubic`.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Tentacle lengths for `spider`.
        #[arg(long, default_value = "1,1,1,1")]
        spider: SpiderPattern,
        #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify FVS, IFVS, CVC, colouring and matching cut on H-free graphs.
    ClassifyH { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Path,
    Cycle,
    Complete,
    Star,
    Petersen,
    Spider,
    Subcubic,
    Cactus,
    VeryNiceCactus,
    QuasiBridgeless,
    BlockBridge,
    VariableGadget,
    #[value(name = "2p1n")]
    Formula2p1n,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Text,
    Dot,
}

/// What a subcommand produced: a report for stdout and an exit code.
struct Output {
    json: String,
    human: String,
    code: i32,
}

impl Output {
    fn new<T: Serialize>(report: &T, human: String, code: i32) -> Self {
        Output {
            json: to_canonical_json(report),
            human,
            code,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Validation(_) => EXIT_INVALID,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Invariant(_) => EXIT_INVARIANT,
    }
}

fn error_json(kind: &str, message: &str, code: i32) -> String {
    to_canonical_json(&json!({
        "error": { "kind": kind, "message": message },
        "exit_code": code,
    }))
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if json {
                let msg = e.kind().to_string();
                let _ = writeln!(out, "{}", error_json("usage", &msg, EXIT_INVALID));
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return EXIT_INVALID;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let text = if cli.json { o.json } else { o.human };
            let _ = writeln!(out, "{}", text.trim_end());
            o.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(out, "{}", error_json(e.kind(), &e.to_string(), code));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn describe(w: &Option<Witness>) -> String {
    match w {
        None => "none".into(),
        Some(Witness::Vertices(s)) => format!("{s:?}"),
        Some(Witness::Colouring(c)) => format!("{c:?}"),
        Some(Witness::Edges(e)) => format!("{e:?}"),
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let limits = cli.caps.limits();
    match &cli.command {
        Command::Solve {
            problem,
            file,
            k,
            subcubic,
        } => {
            let problem = ProblemKind::parse(problem, *k)?;
            let g = read_graph(file)?;
            if *subcubic {
                if problem != ProblemKind::Ifvs {
                    return Err(Error::Validation("--subcubic applies to ifvs only".into()));
                }
                return solve_subcubic(&g, &limits);
            }
            let r = solve(problem, &g, &limits)?;
            if !r.validation.ok {
                return Err(Error::Invariant(format!(
                    "solver output failed validation: {}",
                    r.validation.detail
                )));
            }
            let mut human = format!("problem: {}\n", problem.name());
            if let Some(k) = r.k {
                human += &format!("k: {k}\n");
            }
            human += &format!("decision: {}\n", yes_no(r.decision));
            if let Some(v) = r.value {
                human += &format!("value: {v}\n");
            }
            human += &format!("witness: {}\nroute:\n", describe(&r.witness));
            for s in &r.route {
                human += &format!(
                    "  component {} {:?} at {}: {:?} on {} vertices\n",
                    s.component,
                    s.piece,
                    s.anchor,
                    s.engine,
                    s.vertices
                );
            }
            let code = if r.decision { EXIT_OK } else { EXIT_NO };
            Ok(Output::new(&r, human, code))
        }
        Command::Analyze { file, q, r } => {
            let g = read_graph(file)?;
            let decomposition = decompose_ct(&g, &limits)?;
            let structure = check_structure_theorem(&g, *q, *r, &limits)?;
            let mut human = format!("vertices: {}\nedges: {}\nparts:\n", g.n(), g.m());
            for (i, p) in decomposition.parts.iter().enumerate() {
                human += &format!("  {i}: {:?} {:?}", p.kind, p.vertices);
                if let Some(td) = p.treedepth {
                    human += &format!(" treedepth {td:?}");
                }
                human.push('\n');
            }
            for b in &decomposition.connecting_bridges {
                human += &format!("  bridge {:?} joins parts {} and {}\n", b.edge, b.c_part, b.t_part);
            }
            human += &format!("treedepth: {:?}\n", structure.treedepth);
            for c in [&structure.quadratic, &structure.linear] {
                human += &format!(
                    "{}-free bound {}: premise {}, {:?}\n",
                    c.pattern, c.bound, c.premise, c.status
                );
            }
            let report = json!({
                "vertices": g.n(),
                "edges": g.m(),
                "decomposition": decomposition,
                "structure": structure,
            });
            Ok(Output::new(&report, human, EXIT_OK))
        }
        Command::Check { file, spider } => {
            let g = read_graph(file)?;
            let emb = contains_spider(&g, spider);
            let human = match &emb {
                None => "FREE".to_string(),
                Some(e) => format!("CONTAINS {spider}: {e:?}"),
            };
            let report = json!({
                "pattern": spider.to_string(),
                "free": emb.is_none(),
                "embedding": emb,
            });
            Ok(Output::new(&report, human, EXIT_OK))
        }
        Command::Oracle { problem, file, k } => {
            let g = read_graph(file)?;
            oracle_report(problem, *k, &g, &limits)
        }
        Command::Reduce { formula, output } => {
            let f = parse_cnf(&read(formula)?)?;
            let r = reduce(&f)?;
            write(output, &r.graph.to_text())?;
            let mut sidecar = output.clone().into_os_string();
            sidecar.push(".json");
            let sidecar = PathBuf::from(sidecar);
            write(&sidecar, &to_canonical_json(&r))?;
            let human = format!(
                "wrote {} ({} vertices, {} edges, threshold {}) and {}",
                output.display(),
                r.vertices,
                r.edges,
                r.threshold,
                sidecar.display()
            );
            Ok(Output::new(&r, human, EXIT_OK))
        }
        Command::VerifyReduction { formula } => {
            let f = parse_cnf(&read(formula)?)?;
            let r = verify_reduction(&f, &limits)?;
            if !r.consistent() {
                return Err(Error::Invariant(format!("reduction report is inconsistent: {r:?}")));
            }
            let human = format!(
                "variables: {}\nclauses: {}\nvertices: {}\nmax degree: {}\nS_{{2,2,2,2}}-free: {}\n\
                 satisfiable: {}\nmin FVS: {} (threshold {})\nmin IFVS: {}\nequivalent: yes",
                r.variables,
                r.clauses,
                r.vertices,
                r.max_degree,
                r.spider_free,
                r.satisfiable,
                r.min_fvs,
                r.threshold,
                r.min_ifvs.map_or("none".into(), |v| v.to_string()),
            );
            Ok(Output::new(&r, human, EXIT_OK))
        }
        Command::Gen {
            kind,
            n,
            seed,
            extra,
            spider,
            format,
            output,
        } => {
            let text = if *kind == GenKind::Formula2p1n {
                random_2p1n(*seed, *n)?.to_dimacs()
            } else {
                let g = generated(*kind, *n, *seed, *extra, spider)?;
                match format {
                    GraphFormat::Text => g.to_text(),
                    GraphFormat::Dot => g.to_dot(),
                }
            };
            if let Some(path) = output {
                write(path, &text)?;
            }
            let report = json!({ "kind": format!("{kind:?}"), "seed": seed, "text": text });
            Ok(Output::new(&report, text, EXIT_OK))
        }
        Command::ClassifyH { file } => {
            let h = read_graph(file)?;
            let c = classify_h(&h)?;
            let mut human = format!("H: {} vertices, {} edges, {}\n", c.vertices, c.edges, c.shape);
            for p in &c.problems {
                human += &format!("{:<12} {:?}: {}\n", p.problem, p.complexity, p.reason);
            }
            Ok(Output::new(&c, human, EXIT_OK))
        }
    }
}

fn solve_subcubic(g: &Graph, limits: &Limits) -> Result<Output> {
    let r = min_ifvs_subcubic(g, limits)?;
    match &r.outcome {
        IfvsOutcome::Solution { set, degree3_only } => {
            let human = format!("set: {set:?}\nsize: {}\ndegree3Only: {degree3_only}", set.len());
            Ok(Output::new(&r, human, EXIT_OK))
        }
        IfvsOutcome::NoIfvsK4 => Ok(Output::new(&r, "NO-IFVS(K4)".into(), EXIT_NO)),
    }
}

#[derive(Serialize)]
struct OracleReport {
    problem: ProblemKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    decision: bool,
    value: Option<usize>,
    witness: Option<Witness>,
}

fn oracle_report(problem: &str, k: Option<usize>, g: &Graph, limits: &Limits) -> Result<Output> {
    let sized = |s: Option<Vec<usize>>| (s.as_ref().map(Vec::len), s.map(Witness::Vertices));
    let (kind, value, witness) = match (problem, k) {
        ("colouring" | "coloring", None) => {
            let (chi, c) = oracle_chromatic(g, limits)?;
            (ProblemKind::parse("colouring", Some(chi.max(1)))?, Some(chi), Some(Witness::Colouring(c)))
        }
        _ => {
            let kind = ProblemKind::parse(problem, k)?;
            let (value, witness) = match kind {
                ProblemKind::Fvs => sized(Some(oracle_min_fvs(g, limits)?)),
                ProblemKind::Ifvs => sized(oracle_min_ifvs(g, limits)?),
                ProblemKind::Cvc => sized(oracle_min_cvc(g, limits)?),
                ProblemKind::Colouring(k) => {
                    let c = oracle_k_colouring(g, k, limits)?;
                    (None, c.map(Witness::Colouring))
                }
                ProblemKind::MatchingCut => {
                    let cut: Option<Vec<Edge>> = oracle_matching_cut(g, limits)?;
                    (None, cut.map(Witness::Edges))
                }
            };
            (kind, value, witness)
        }
    };
    let decision = witness.is_some();
    let report = OracleReport {
        problem: kind,
        k: match kind {
            ProblemKind::Colouring(k) => Some(k),
            _ => None,
        },
        decision,
        value,
        witness,
    };
    let mut human = format!("problem: {}\ndecision: {}\n", kind.name(), yes_no(decision));
    if let Some(v) = value {
        human += &format!("optimum: {v}\n");
    }
    human += &format!("witness: {}", describe(&report.witness));
    Ok(Output::new(&report, human, if decision { EXIT_OK } else { EXIT_NO }))
}

fn generated(kind: GenKind, n: usize, seed: u64, extra: usize, spider: &SpiderPattern) -> Result<Graph> {
    Ok(match kind {
        GenKind::Path => generate::path(n)?,
        GenKind::Cycle => generate::cycle(n)?,
        GenKind::Complete => generate::complete(n)?,
        GenKind::Star => generate::star(n)?,
        GenKind::Petersen => generate::petersen(),
        GenKind::Spider => generate::spider(spider),
        GenKind::Subcubic => generate::random_subcubic(seed, n, extra)?,
        GenKind::Cactus => generate::random_cactus(seed, n, false)?,
        GenKind::VeryNiceCactus => generate::random_cactus(seed, n, true)?,
        GenKind::QuasiBridgeless => generate::random_quasi_bridgeless(seed, n)?,
        GenKind::BlockBridge => generate::random_block_bridge(seed, n)?,
        GenKind::VariableGadget => build_variable_gadget().graph.clone(),
        GenKind::Formula2p1n => unreachable!("formulas are handled by the caller"),
    })
}
