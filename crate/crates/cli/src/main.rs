//! `polyprod`: Euler characteristics of polyhedral products from JSON input.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain error, 3 internal
//! assertion failure (including any formula/oracle disagreement in `verify`).

mod input;
mod output;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyprod::oracle::{self, euler_vectors, random_instance, InstanceLimits, DEFAULT_BUDGET};
use polyprod::GroupSpec;
use serde::Serialize;

use input::InputDocument;

#[derive(Parser)]
#[command(name = "polyprod", version, about = "Exact Euler characteristics of polyhedral products")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Read the input document from FILE instead of standard input.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// f-polynomial of the complex, as multilinear terms.
    Fpoly,
    /// h-polynomial of the complex.
    Hpoly,
    /// hhat-polynomial of the complex, as multilinear terms.
    Hhat,
    /// Euler characteristic from "euler" {eA, eB}, or from "pairs" cell models.
    Chi,
    /// Every B_i a point; uses "euler".eA.
    ChiPoints,
    /// B_i finite sets of q_i + 1 points, A_i their cones; uses "q".
    ChiCone,
    /// Odd-dimensional manifolds with boundary; uses "manifold".
    ChiManifold,
    /// Brute-force cell enumeration over "pairs".
    ChiOracle {
        /// Maximum number of product cells to enumerate.
        #[arg(long, value_name = "CELLS", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// h(-1) and its sign condition; with "manifold", also the full sign report.
    CdCheck,
    /// Euler characteristic of a graph product over a flag complex; uses "groups".
    GraphProduct,
    /// Compare the closed formula with brute force on seeded random instances.
    Verify {
        /// Number of instances, seeded 1..=N.
        #[arg(long, value_name = "N", default_value_t = 1000)]
        seeds: u64,
        /// Largest vertex count.
        #[arg(long, value_name = "K", default_value_t = 5)]
        max_m: usize,
        /// Maximum number of product cells per instance.
        #[arg(long, value_name = "CELLS", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Domain(polyprod::Error),
}

impl CliError {
    pub fn malformed(msg: impl Into<String>) -> Self {
        CliError::Malformed(msg.into())
    }
}

impl From<polyprod::Error> for CliError {
    fn from(e: polyprod::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Serialize)]
struct Output<T> {
    result: T,
}

struct Rendered {
    json: String,
    failed_check: bool,
}

fn render<T: Serialize>(result: T, pretty: bool) -> Rendered {
    let out = Output { result };
    let json = if pretty { serde_json::to_string_pretty(&out) } else { serde_json::to_string(&out) };
    Rendered { json: json.expect("results always serialize"), failed_check: false }
}

fn read_document(path: Option<&PathBuf>) -> Result<InputDocument, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::malformed(format!("{}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::malformed(format!("stdin: {e}")))?;
            buf
        }
    };
    InputDocument::parse(&text)
}

fn verify(seeds: u64, max_m: usize, budget: u128, pretty: bool) -> Result<Rendered, CliError> {
    let limits = InstanceLimits { max_m, ..InstanceLimits::default() };
    let mut failures = 0;
    for seed in 1..=seeds {
        let inst = random_instance(seed, &limits)?;
        let (e_a, e_b) = euler_vectors(&inst.pairs);
        let formula = polyprod::chi_polyhedral_product(&inst.complex, &e_a, &e_b)?;
        let brute = oracle::chi_brute_force_with_budget(&inst.complex, &inst.pairs, budget)?;
        if formula != brute {
            eprintln!("seed {seed}: formula {formula} != brute force {brute}");
            failures += 1;
        }
    }
    let mut out = render(output::VerifySummary { instances: seeds, failures }, pretty);
    out.failed_check = failures > 0;
    Ok(out)
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let pretty = cli.pretty;
    if let Command::Verify { seeds, max_m, budget } = cli.command {
        return verify(seeds, max_m, budget, pretty);
    }
    let doc = read_document(cli.input.as_ref())?;
    let complex = doc.complex()?;
    let rendered = match &cli.command {
        Command::Fpoly => render(output::multilinear(&polyprod::f_polynomial(&complex)), pretty),
        Command::Hhat => render(output::multilinear(&polyprod::hhat_polynomial(&complex)), pretty),
        Command::Hpoly => render(output::univariate(&polyprod::h_polynomial(&complex)), pretty),
        Command::Chi => {
            let (e_a, e_b) = if doc.has_euler() || !doc.has_pairs() {
                (doc.e_a()?, doc.e_b()?)
            } else {
                let pairs = doc.pairs()?;
                if let Some(i) = pairs.iter().position(|p| p.is_empty()) {
                    return Err(polyprod::Error::EmptyModel(i + 1).into());
                }
                euler_vectors(&pairs)
            };
            let chi = polyprod::chi_polyhedral_product(&complex, &e_a, &e_b)?;
            render(chi.to_string(), pretty)
        }
        Command::ChiPoints => render(polyprod::chi_points_case(&complex, &doc.e_a()?)?.to_string(), pretty),
        Command::ChiCone => render(polyprod::chi_cone_case(&complex, &doc.q()?)?.to_string(), pretty),
        Command::ChiManifold => {
            let spec = doc.manifold()?.ok_or_else(|| CliError::malformed("input has no \"manifold\" section"))?;
            render(polyprod::chi_manifold_case(&complex, &spec)?.to_string(), pretty)
        }
        Command::ChiOracle { budget } => {
            let chi = oracle::chi_brute_force_with_budget(&complex, &doc.pairs()?, *budget)?;
            render(chi.to_string(), pretty)
        }
        Command::CdCheck => {
            let check = polyprod::cd_sign_check(&complex);
            let report = match doc.manifold()? {
                Some(spec) => Some(polyprod::ecc_cd_equivalence_report(&complex, &spec)?),
                None => None,
            };
            render(output::cd_check(&check, report.as_ref()), pretty)
        }
        Command::GraphProduct => {
            let groups = doc.groups()?;
            match groups.first() {
                Some(GroupSpec::TypeFl(_)) => {
                    render(polyprod::chi_classifying_space(&complex, &groups)?.to_string(), pretty)
                }
                _ => render(output::fraction(&polyprod::chi_rational_graph_product(&complex, &groups)?), pretty),
            }
        }
        Command::Verify { .. } => unreachable!("handled above"),
    };
    Ok(rendered)
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal assertion failure: {info}");
        std::process::exit(3);
    }));

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.json);
            if out.failed_check {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Malformed(msg)) => {
            eprintln!("error: malformed input: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}
