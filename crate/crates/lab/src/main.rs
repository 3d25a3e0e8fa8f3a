use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use koszul_core::canon::canonical_form;
use koszul_core::groebner::{
    quadratic_gb_search, s_pairs_reduce_to_zero, TermOrder, DEFAULT_ATTEMPTS, DEFAULT_DEGREE_BOUND, DEFAULT_SEED,
};
use koszul_core::semigroup::{strongly_koszul_pairwise, veronese_basis, OracleVerdict};
use koszul_core::toric::{generator_counts, is_quadratically_generated, minimal_generators, Binomial};
use koszul_lab::corpus::{self, CorpusOptions};
use koszul_lab::error::exit;
use koszul_lab::input::{parse_input, Format, Input};
use koszul_lab::{graph6, LabError};
use serde::Serialize;

const MAX_VERONESE_N: usize = 7;

#[derive(Parser)]
#[command(
    name = "koszul-lab",
    version,
    about = "Strongly Koszul edge rings: classifier, algebra oracle and corpus checks"
)]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph as graph6, an edge list or JSON; read from --file or stdin when omitted.
    graph: Option<String>,
    #[arg(long, short)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide from the block structure whether the edge ring is strongly Koszul.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check pairwise principal-ideal intersections up to a degree bound.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: usize,
    },
    /// Minimal generators of the toric ideal up to a degree bound.
    Toric {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: usize,
    },
    /// Search term orders for a quadratic Gröbner basis.
    Groebner {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Oracle verdict for the squarefree Veronese ring of degree d in n variables.
    Veronese {
        n: usize,
        d: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: usize,
    },
    /// Cross-check classifier and oracle on every connected graph up to --max-n vertices.
    Corpus {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: usize,
        /// Worker threads (default: all cores).
        #[arg(long, env = "KOSZUL_LAB_JOBS")]
        jobs: Option<usize>,
        /// Write the JSON-lines report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the graph6 encoding of the input.
    Encode {
        #[command(flatten)]
        input: InputArgs,
        /// Relabel to the canonical form first.
        #[arg(long)]
        canonical: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::PARSE } else { exit::OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, LabError> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Classify { input } => {
            let g = read_input(&input)?.into_graph()?;
            emit(&koszul_core::classify(&g)?, pretty)?;
        }
        Command::Oracle { input, degree_bound } => {
            check_bound(degree_bound)?;
            let verdict = match read_input(&input)? {
                Input::Graph(g) => corpus::oracle_summary(&g, degree_bound),
                Input::Basis(b) => from_verdict(strongly_koszul_pairwise(&b, degree_bound)),
            };
            emit(&OracleOut::from(verdict), pretty)?;
        }
        Command::Toric { input, degree_bound } => {
            check_bound(degree_bound)?;
            let (gens, quadratic) = match read_input(&input)? {
                Input::Graph(g) if g.edge_count() == 0 => (Vec::new(), true),
                other => {
                    let b = other.basis()?;
                    (minimal_generators(&b, degree_bound), is_quadratically_generated(&b))
                }
            };
            let counts = generator_counts(&gens, degree_bound);
            emit(&ToricOut { degree_bound, counts, quadratic, generators: gens }, pretty)?;
        }
        Command::Groebner { input, attempts, seed } => {
            let out = match read_input(&input)? {
                Input::Graph(g) if g.edge_count() == 0 => {
                    GroebnerOut::found(0, TermOrder::identity(0), Vec::new(), attempts, seed)
                }
                other => match quadratic_gb_search(&other.basis()?, attempts, seed) {
                    Some(q) => GroebnerOut::found(q.attempt, q.order, q.basis, attempts, seed),
                    None => GroebnerOut { found: false, attempts, seed, ..Default::default() },
                },
            };
            emit(&out, pretty)?;
        }
        Command::Veronese { n, d, degree_bound } => {
            check_bound(degree_bound)?;
            if n > MAX_VERONESE_N {
                return Err(LabError::Cap { what: "squarefree Veronese", n, max: MAX_VERONESE_N });
            }
            let verdict = strongly_koszul_pairwise(&veronese_basis(n, d)?, degree_bound);
            let expected_pass = (n, d) == (4, 2) || n == d + 1;
            let matches_expected = verdict.passed() == expected_pass;
            emit(&VeroneseOut { n, d, oracle: from_verdict(verdict).into(), expected_pass, matches_expected }, pretty)?;
        }
        Command::Corpus { max_n, degree_bound, jobs, out, attempts, seed } => {
            check_bound(degree_bound)?;
            let opts = CorpusOptions { max_n, degree_bound, gb_attempts: attempts, seed, jobs };
            let report = corpus::run(&opts)?;
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    report.write_jsonl(&mut w)?;
                    w.flush()?;
                }
                None => report.write_jsonl(BufWriter::new(io::stdout().lock()))?,
            }
            let s = &report.summary;
            eprintln!(
                "{} graphs, {} agree, {} strongly Koszul, {} disagreements",
                s.total,
                s.agree,
                s.strongly_koszul,
                s.disagreements.len()
            );
            if !report.is_clean() {
                return Ok(exit::OTHER);
            }
        }
        Command::Encode { input, canonical } => {
            let mut g = read_input(&input)?.into_graph()?;
            if canonical {
                g = canonical_form(&g)?;
            }
            println!("{}", graph6::encode(&g)?);
        }
    }
    Ok(exit::OK)
}

fn read_input(args: &InputArgs) -> Result<Input, LabError> {
    let text = match (&args.graph, &args.file) {
        (Some(_), Some(_)) => return Err(LabError::Parse("give either a graph argument or --file, not both".into())),
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let input = parse_input(&text, args.format)?;
    if let Input::Graph(g) = &input {
        g.require_connected()?;
    }
    Ok(input)
}

fn check_bound(d: usize) -> Result<(), LabError> {
    if d < 2 {
        return Err(LabError::Parse(format!("--degree-bound must be at least 2, got {d}")));
    }
    Ok(())
}

fn emit(value: &impl Serialize, pretty: bool) -> Result<(), LabError> {
    let mut out = io::stdout().lock();
    if pretty { serde_json::to_writer_pretty(&mut out, value) } else { serde_json::to_writer(&mut out, value) }
        .map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn from_verdict(v: OracleVerdict) -> corpus::OracleSummary {
    match v {
        OracleVerdict::Pass { degree_bound } => corpus::OracleSummary { degree_bound, passed: true, witness: None },
        OracleVerdict::Fail { degree_bound, witness } => {
            corpus::OracleSummary { degree_bound, passed: false, witness: Some(witness) }
        }
    }
}

#[derive(Serialize)]
struct OracleOut {
    verdict: &'static str,
    #[serde(flatten)]
    summary: corpus::OracleSummary,
}

impl From<corpus::OracleSummary> for OracleOut {
    fn from(summary: corpus::OracleSummary) -> Self {
        OracleOut { verdict: if summary.passed { "pass" } else { "fail" }, summary }
    }
}

#[derive(Serialize)]
struct ToricOut {
    degree_bound: usize,
    counts: Vec<usize>,
    /// Certified independently of `degree_bound`.
    quadratic: bool,
    generators: Vec<Binomial>,
}

#[derive(Serialize, Default)]
struct GroebnerOut {
    found: bool,
    attempts: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    attempt: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<TermOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_pairs_verified: Option<bool>,
    basis: Vec<Binomial>,
}

impl GroebnerOut {
    fn found(attempt: usize, order: TermOrder, basis: Vec<Binomial>, attempts: usize, seed: u64) -> Self {
        let verified = s_pairs_reduce_to_zero(&basis, &order);
        GroebnerOut {
            found: true,
            attempts,
            seed,
            attempt: Some(attempt),
            order: Some(order),
            s_pairs_verified: Some(verified),
            basis,
        }
    }
}

#[derive(Serialize)]
struct VeroneseOut {
    n: usize,
    d: usize,
    oracle: OracleOut,
    /// `(n, d) = (4, 2)` or `n = d + 1`.
    expected_pass: bool,
    matches_expected: bool,
}
