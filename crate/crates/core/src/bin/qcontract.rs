//! Command-line front end: graph6 in, JSON out.
//!
//! Exit status is 0 when every assertion passed, 1 when some record failed and
//! 2 on usage or I/O errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcontract::connectivity::{
    enumerate_cuts, is_quasi_k_connected, vertex_connectivity, CutClass, Separation,
};
use qcontract::contraction::{contractible_edges, quasi_contractible_edges};
use qcontract::families::Family;
use qcontract::generators::{
    enumerate_forbidden_free, enumerate_matchable_cubic, enumerate_small_graphs, generate_ccc4,
    MAX_BUILTIN_ENUMERATION,
};
use qcontract::harness::{self, CampaignReport, HarnessError};
use qcontract::{graph6, Edge, Graph};

#[derive(Parser)]
#[command(
    name = "qcontract",
    version,
    about = "Quasi k-connectivity and contractible edges of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connectivity, quasi verdict, nontrivial (k-1)-cuts and contractible edges per graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-contractible (or quasi k-contractible) edges per graph.
    Contractible {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        k: usize,
        /// List quasi k-contractible edges instead.
        #[arg(long)]
        quasi: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a graph6 corpus.
    Generate {
        kind: GenerateKind,
        /// Family specs for `family`, e.g. `cycle_square:8` or `circulant:11:1,4`.
        specs: Vec<String>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Minimum degree for `forbidden-free`.
        #[arg(long, default_value_t = 4)]
        min_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification campaign and emit its report.
    Verify {
        campaign: Campaign,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Re-validate every claim in a report.
    CheckWitness {
        report: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// graph6 file, one graph per line; `-` or absent reads stdin.
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "file")]
    corpus: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> Result<Vec<Graph>, CliError> {
        match self.file.as_ref().or(self.corpus.as_ref()) {
            Some(p) if p.as_os_str() != "-" => Ok(harness::read_corpus(p)?),
            _ => {
                let mut text = String::new();
                io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::Io("<stdin>".into(), e))?;
                graph6::decode_lines(&text)
                    .map_err(|(line, e)| CliError::Usage(format!("<stdin>:{line}: {e}")))
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    /// Cubic cyclically 4-connected graphs grown from K3,3 and the cube by handles.
    Ccc4,
    /// All graphs up to isomorphism with n <= max-n (at most 8).
    Small,
    /// {K4-, complement of P5}-free graphs with n <= max-n and the given minimum degree.
    ForbiddenFree,
    /// All connected cubic graphs with n <= max-n.
    Cubic,
    /// Named family members.
    Family,
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    ForbiddenPair,
    CriticalDegree,
    CriticalFamilies,
    CyclicCubic,
    DegreeBound,
    TriangleFree,
    Circulant,
    ForbiddenPairFacts,
    Handles,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(PathBuf, #[source] io::Error),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Graph(#[from] qcontract::GraphError),
}

#[derive(Serialize)]
struct CutView {
    cut: qcontract::VertexSet,
    side_a: qcontract::VertexSet,
    side_b: qcontract::VertexSet,
}

impl From<Separation> for CutView {
    fn from(s: Separation) -> Self {
        CutView {
            cut: s.cut,
            side_a: s.side_a,
            side_b: s.side_b,
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    index: usize,
    graph6: String,
    n: usize,
    edges: usize,
    connectivity: usize,
    k: usize,
    quasi_k_connected: bool,
    nontrivial_cuts: Vec<CutView>,
    /// Present when the graph is k-connected.
    #[serde(skip_serializing_if = "Option::is_none")]
    contractible_edges: Option<Vec<Edge>>,
    /// Present when the graph is quasi k-connected.
    #[serde(skip_serializing_if = "Option::is_none")]
    quasi_contractible_edges: Option<Vec<Edge>>,
}

#[derive(Serialize)]
struct EdgeList {
    index: usize,
    graph6: String,
    k: usize,
    quasi: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn analyze(index: usize, g: &Graph, k: usize) -> Result<Analysis, CliError> {
    let kappa = vertex_connectivity(g);
    let quasi = is_quasi_k_connected(g, k);
    let nontrivial_cuts = if kappa + 1 >= k {
        enumerate_cuts(g, k - 1)
            .into_iter()
            .filter(|c| c.class == CutClass::Nontrivial)
            .map(|c| c.separation.into())
            .collect()
    } else {
        Vec::new()
    };
    let contractible = if kappa >= k {
        Some(contractible_edges(g, k)?)
    } else {
        None
    };
    let quasi_contractible = if quasi {
        Some(quasi_contractible_edges(g, k)?)
    } else {
        None
    };
    Ok(Analysis {
        index,
        graph6: graph6::encode(g),
        n: g.n(),
        edges: g.edge_count(),
        connectivity: kappa,
        k,
        quasi_k_connected: quasi,
        nontrivial_cuts,
        contractible_edges: contractible,
        quasi_contractible_edges: quasi_contractible,
    })
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(p.into(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("<stdout>".into(), e)),
    }
}

fn need_k(k: usize) -> Result<(), CliError> {
    if k < 2 {
        return Err(CliError::Usage(format!("--k must be at least 2, got {k}")));
    }
    Ok(())
}

fn generate(
    kind: GenerateKind,
    specs: &[String],
    max_n: Option<usize>,
    min_degree: usize,
) -> Result<Vec<Graph>, CliError> {
    let need_max = || max_n.ok_or_else(|| CliError::Usage("--max-n is required".into()));
    Ok(match kind {
        GenerateKind::Ccc4 => generate_ccc4(need_max()?)?,
        GenerateKind::Small => {
            let max = need_max()?;
            if max > MAX_BUILTIN_ENUMERATION {
                return Err(CliError::Usage(format!(
                    "--max-n must be at most {MAX_BUILTIN_ENUMERATION}"
                )));
            }
            let mut all = Vec::new();
            for n in 1..=max {
                all.extend(enumerate_small_graphs(n, |_| true)?);
            }
            all
        }
        GenerateKind::ForbiddenFree => enumerate_forbidden_free(need_max()?, min_degree)?,
        GenerateKind::Cubic => {
            let mut all = Vec::new();
            for n in (4..=need_max()?).step_by(2) {
                all.extend(enumerate_matchable_cubic(n)?);
            }
            all
        }
        GenerateKind::Family => {
            if specs.is_empty() {
                return Err(CliError::Usage("family needs at least one spec".into()));
            }
            specs
                .iter()
                .map(|s| s.parse::<Family>().and_then(|f| f.build()))
                .collect::<Result<_, _>>()?
        }
    })
}

fn verify(
    campaign: Campaign,
    corpus_path: Option<&Path>,
    k: usize,
    max_n: Option<usize>,
    jobs: usize,
) -> Result<CampaignReport, CliError> {
    let corpus = || -> Result<Vec<Graph>, CliError> {
        match corpus_path {
            Some(p) => Ok(harness::read_corpus(p)?),
            None => Err(CliError::Usage(
                "--corpus is required for this campaign".into(),
            )),
        }
    };
    let optional_corpus = || -> Result<Vec<Graph>, CliError> {
        match corpus_path {
            Some(p) => Ok(harness::read_corpus(p)?),
            None => Ok(Vec::new()),
        }
    };
    Ok(match campaign {
        Campaign::ForbiddenPair => harness::forbidden_pair(&corpus()?, jobs),
        Campaign::CriticalDegree => harness::critical_degree(&corpus()?, jobs),
        Campaign::CriticalFamilies => {
            harness::critical_families(max_n.unwrap_or(12), &optional_corpus()?, jobs)?
        }
        Campaign::CyclicCubic => {
            harness::cyclic_cubic(max_n.unwrap_or(14), &optional_corpus()?, jobs)?
        }
        Campaign::DegreeBound => harness::degree_bound(&corpus()?, jobs),
        Campaign::TriangleFree => {
            need_k(k)?;
            harness::triangle_free(&corpus()?, k, jobs)?
        }
        Campaign::Circulant => harness::circulant_check(),
        Campaign::ForbiddenPairFacts => harness::forbidden_pair_facts(max_n.unwrap_or(12))?,
        Campaign::Handles => harness::handles(max_n.unwrap_or(12), jobs)?,
    })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Analyze { input, k, out } => {
            need_k(k)?;
            let graphs = input.read()?;
            let rows = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| analyze(i, g, k))
                .collect::<Result<Vec<_>, _>>()?;
            emit(out.as_deref(), &to_json(&rows))?;
            Ok(true)
        }
        Command::Contractible {
            input,
            k,
            quasi,
            out,
        } => {
            need_k(k)?;
            let graphs = input.read()?;
            let rows: Vec<EdgeList> = graphs
                .iter()
                .enumerate()
                .map(|(index, g)| {
                    let found = if quasi {
                        quasi_contractible_edges(g, k)
                    } else {
                        contractible_edges(g, k)
                    };
                    let (edges, error) = match found {
                        Ok(e) => (Some(e), None),
                        Err(e) => (None, Some(e.to_string())),
                    };
                    EdgeList {
                        index,
                        graph6: graph6::encode(g),
                        k,
                        quasi,
                        edges,
                        error,
                    }
                })
                .collect();
            emit(out.as_deref(), &to_json(&rows))?;
            Ok(true)
        }
        Command::Generate {
            kind,
            specs,
            max_n,
            min_degree,
            out,
        } => {
            let graphs = generate(kind, &specs, max_n, min_degree)?;
            eprintln!("generated {} graphs", graphs.len());
            emit(out.as_deref(), &graph6::encode_lines(&graphs))?;
            Ok(true)
        }
        Command::Verify {
            campaign,
            corpus,
            k,
            max_n,
            report,
            jobs,
        } => {
            let start = Instant::now();
            let r = verify(campaign, corpus.as_deref(), k, max_n, jobs.max(1))?;
            let s = r.summary;
            eprintln!(
                "{}: tested {} passed {} failed {} skipped {} ({:.2?})",
                r.campaign,
                s.tested,
                s.passed,
                s.failed,
                s.skipped,
                start.elapsed()
            );
            emit(report.as_deref(), &r.to_json())?;
            Ok(r.all_passed())
        }
        Command::CheckWitness { report, jobs, out } => {
            let r = harness::read_report(&report)?;
            let check = harness::check_report(&r, jobs.max(1));
            eprintln!(
                "checked {} claims over {} records: {} problems",
                check.claims_checked,
                check.records,
                check.problems.len()
            );
            emit(out.as_deref(), &to_json(&check))?;
            Ok(check.is_valid())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
