use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};
use num_bigint::BigInt;

use cqsres::{Report, SvgScene};
use cqsres_core::sweep::{
    all_cyclic_quotients, check_all_presolutions, check_hilbert_bases, check_m_resolution, check_maximality,
    check_resolutions, check_t_classification, selftest,
};
use cqsres_core::{
    admissible_chains, build_presolution, enumerate_zero_chains, invariants, m_resolution, maximal_resolution,
    minimal_resolution, oracle, Chain, CyclicQuotient, Error,
};

const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_USAGE: u8 = 4;

/// Resolutions and P-resolutions of cyclic quotient singularities Y(n,q).
#[derive(Parser)]
#[command(name = "cqsres", version, about)]
struct Cli {
    /// Cross-check the results against the brute-force oracles.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, minimal and maximal resolutions and all P-resolutions.
    Analyze {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
        #[arg(allow_negative_numbers = true)]
        q: BigInt,
        /// Print the JSON report instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Chains representing zero of length m, or the admissible chains of Y(n,q).
    #[command(group(ArgGroup::new("source").required(true).args(["m", "for_"])))]
    Chains {
        m: Option<usize>,
        /// Admissible chains of Y(N,Q).
        #[arg(long = "for", num_args = 2, value_names = ["N", "Q"], allow_negative_numbers = true)]
        for_: Option<Vec<BigInt>>,
        /// Print only the number of chains.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG diagram of σ, Δ and a fan.
    Svg {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
        #[arg(allow_negative_numbers = true)]
        q: BigInt,
        /// minimal, maximal, presolution:<k2,...> or mres:<k2,...>
        #[arg(long)]
        what: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every Y(n,q) with n <= 60 against the oracles.
    Selftest {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() { EXIT_INPUT } else { EXIT_INTERNAL };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn internal(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INTERNAL, message: message.into() }
}

fn failures_to_result(failures: Vec<String>) -> Result<(), Failure> {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(internal(format!("verification failed:\n{}", failures.join("\n"))))
    }
}

/// Oracle checks for one singularity.
fn verify_singularity(cq: &CyclicQuotient) -> Result<(), Failure> {
    let family = oracle::t_singularity_family(cq.n().try_into().map_err(|_| input("--verify needs n < 2^64"))?);
    let mut failures = check_hilbert_bases(cq);
    failures.extend(check_resolutions(cq));
    failures.extend(check_maximality(cq));
    failures.extend(check_t_classification(cq, &family));
    let (records, f) = check_all_presolutions(cq, &family);
    failures.extend(f);
    for p in &records {
        failures.extend(check_m_resolution(cq, p));
    }
    let a = invariants(cq).a_chain;
    if a.len() <= 7 && oracle::exhaustive_admissible_chains(&a) != admissible_chains(cq) {
        failures.push(format!("{cq}: admissible chains differ from exhaustive search"));
    }
    failures_to_result(failures)
}

fn parse_chain(s: &str) -> Result<Chain, Failure> {
    let entries = s
        .split(',')
        .map(|x| x.trim().parse::<BigInt>().map_err(|_| input(format!("invalid chain entry {x:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Chain::new(entries))
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn analyze(cq: &CyclicQuotient, json: bool) -> Result<(), Failure> {
    let report = Report::build(cq)?;
    if report.p_resolutions.iter().any(|p| !p.verified) {
        return Err(internal("a P-resolution failed verification"));
    }
    if json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| internal(e.to_string()))?;
        println!("{text}");
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn chains(m: Option<usize>, for_: Option<Vec<BigInt>>, count: bool, json: bool, verify: bool) -> Result<(), Failure> {
    let list = match (m, for_) {
        (Some(0), _) => return Err(input("m must be at least 1")),
        (Some(m), _) => {
            let list = enumerate_zero_chains(m);
            if verify && m <= 7 && oracle::exhaustive_zero_chains(m, m as i64 + 1) != list {
                return Err(internal(format!("K_{m} differs from exhaustive search")));
            }
            list
        }
        (None, Some(nq)) => {
            let cq = CyclicQuotient::new(nq[0].clone(), nq[1].clone())?;
            if verify {
                verify_singularity(&cq)?;
            }
            admissible_chains(&cq)
        }
        (None, None) => unreachable!("clap requires m or --for"),
    };
    if count {
        println!("{}", list.len());
    } else if json {
        let rows: Vec<Vec<String>> =
            list.iter().map(|k| k.entries().iter().map(ToString::to_string).collect()).collect();
        println!("{}", serde_json::to_string(&rows).map_err(|e| internal(e.to_string()))?);
    } else {
        for k in &list {
            let row: Vec<String> = k.entries().iter().map(ToString::to_string).collect();
            println!("{}", row.join(" "));
        }
    }
    Ok(())
}

fn svg(cq: &CyclicQuotient, what: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    let cq = cq.canonical();
    let scene = match what.split_once(':') {
        None if what == "minimal" => SvgScene::resolution(format!("{cq} minimal resolution"), &minimal_resolution(&cq)),
        None if what == "maximal" => SvgScene::resolution(format!("{cq} maximal resolution"), &maximal_resolution(&cq)),
        Some(("presolution", k)) => {
            let p = build_presolution(&cq, &parse_chain(k)?)?;
            SvgScene::presolution(format!("{cq} P-resolution {}", p.chain), &p)
        }
        Some(("mres", k)) => {
            let p = build_presolution(&cq, &parse_chain(k)?)?;
            SvgScene::fan(format!("{cq} M-resolution {}", p.chain), &m_resolution(&p))
        }
        _ => {
            return Err(input(format!(
                "unknown diagram {what:?}; use minimal, maximal, presolution:<chain> or mres:<chain>"
            )))
        }
    };
    write_out(out, &scene.render())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { n, q, json } => {
            let cq = CyclicQuotient::new(n, q)?;
            if cli.verify {
                verify_singularity(&cq.canonical())?;
            }
            analyze(&cq, json)
        }
        Command::Chains { m, for_, count, json } => chains(m, for_, count, json, cli.verify),
        Command::Svg { n, q, what, out } => {
            let cq = CyclicQuotient::new(n, q)?;
            if cli.verify {
                verify_singularity(&cq.canonical())?;
            }
            svg(&cq, &what, out.as_ref())
        }
        Command::Selftest { max_n } => {
            let summary = selftest(max_n);
            println!(
                "checked {} singularities and {} P-resolutions with n <= {max_n}: {} failure(s)",
                summary.singularities,
                summary.presolutions,
                summary.failures.len()
            );
            debug_assert_eq!(summary.singularities, all_cyclic_quotients(max_n).len());
            failures_to_result(summary.failures)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = std::io::stdout().flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
