use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use tspread::expansion::{classic_successor, macaulay_expand, t_successor};
use tspread::ideal::{parse_monomial_file, tlex, TlexOutcome};
use tspread::kk::{kk_check, kk_witness};
use tspread::lexset::shadow;
use tspread::oracle::OracleLimits;
use tspread::verify::{casewise_disagreements, run_all, VerifyConfig};
use tspread::{enumerate_tspread, Error, FtVector, MonomialSet, TSpreadIdeal};

mod json;

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_OBSTRUCTION: u8 = 3;

/// Combinatorics of t-spread monomials.
#[derive(Parser, Debug)]
#[command(name = "tspread", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Macaulay expansion of a with respect to d.
    Expand {
        a: BigUint,
        d: u32,
        #[arg(long)]
        json: bool,
    },
    /// Successor bound a^(d), or a^[d]_t in n variables with --t.
    Succ {
        a: BigUint,
        d: u32,
        #[arg(long, requires = "n")]
        t: Option<u32>,
        #[arg(long, requires = "t")]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// The t-spread lex ideal with the same f_t-vector as the given ideal.
    Tlex {
        file: PathBuf,
        /// Prefix the output with the per-degree construction as comments.
        #[arg(long)]
        trace: bool,
        /// Print the generators as `(u1, u2, ...)` instead of an ideal file.
        #[arg(long)]
        compact: bool,
        /// Write the ideal file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Feasibility of an f_t-vector such as 1,12,50,20,15.
    Kk {
        f: FtVector,
        #[arg(long)]
        t: u32,
        /// Write the lex ideal realizing f to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Print the bound for every degree.
        #[arg(long)]
        verbose: bool,
    },
    /// All t-spread monomials of degree d in n variables, descending lex.
    Enum { n: u32, d: u32, t: u32 },
    /// t-spread shadow of each degree of a set or ideal file.
    Shadow {
        file: PathBuf,
        /// Spread of the shadow; defaults to the file's t.
        #[arg(long)]
        tau: Option<u32>,
    },
    /// f_t-vector of an ideal file.
    Fvec {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Strong stability and lex predicates of an ideal file.
    Check { file: PathBuf },
    /// Cross-check formulas against brute-force oracles.
    Verify {
        /// Cap on n for every sweep.
        #[arg(long)]
        max_n: Option<u32>,
        /// Seed for the random ideal sweep.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Domain(String),
    Obstruction(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(report) => Failure::Obstruction(report.summary()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_ideal(path: &Path) -> Result<TSpreadIdeal, Failure> {
    Ok(read(path)?.parse::<TSpreadIdeal>()?)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Expand { a, d, json } => {
            let e = macaulay_expand(&a, d)?;
            if json {
                print_json(&json::expansion(&e));
            } else {
                println!("{e}");
            }
        }
        Command::Succ { a, d, t, n, json } => {
            let value = match (t, n) {
                (Some(t), Some(n)) => t_successor(&a, d, t, n)?,
                _ => classic_successor(&a, d)?,
            };
            if json {
                print_json(&json::successor(&a, d, t, n, &value));
            } else {
                println!("{value}");
            }
        }
        Command::Tlex {
            file,
            trace,
            compact,
            output,
        } => return tlex_command(&file, trace, compact, output.as_deref()),
        Command::Kk {
            f,
            t,
            witness,
            json,
            verbose,
        } => return kk_command(&f, t, witness.as_deref(), json, verbose),
        Command::Enum { n, d, t } => {
            for u in &enumerate_tspread(n, d, t)? {
                println!("{u}");
            }
        }
        Command::Shadow { file, tau } => {
            let parsed = parse_monomial_file(&read(&file)?)?;
            let tau = tau.unwrap_or(parsed.t);
            let mut by_degree: BTreeMap<usize, Vec<_>> = BTreeMap::new();
            for u in parsed.monomials {
                u.validate(parsed.n, parsed.t)?;
                by_degree.entry(u.degree()).or_default().push(u);
            }
            println!("n={} t={tau}", parsed.n);
            for (d, members) in by_degree {
                let set = MonomialSet::new(parsed.n, d as u32, parsed.t, members)?;
                for u in &shadow(&set, tau)? {
                    println!("{u}");
                }
            }
        }
        Command::Fvec { file, json } => {
            let f = read_ideal(&file)?.ft_vector();
            if json {
                print_json(&json::ft_vector(&f));
            } else {
                println!("{f}");
            }
        }
        Command::Check { file } => {
            let ideal = read_ideal(&file)?;
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            println!(
                "strongly-stable: {}, lex: {}",
                yes_no(ideal.is_strongly_stable()),
                yes_no(ideal.is_lex())
            );
        }
        Command::Verify { max_n, seed, json } => return verify_command(max_n, seed, json),
    }
    Ok(())
}

fn tlex_command(file: &Path, trace: bool, compact: bool, output: Option<&Path>) -> Outcome {
    let ideal = read_ideal(file)?;
    let outcome = tlex(&ideal)?;
    let mut text = String::new();
    if trace {
        for line in outcome.trace().to_string().lines() {
            text.push_str(&format!("# {line}\n"));
        }
    }
    match outcome {
        TlexOutcome::Obstructed(o) => {
            print!("{text}");
            Err(Failure::Obstruction(o.to_string()))
        }
        TlexOutcome::Lex { ideal: lex, .. } => {
            if compact {
                let gens: Vec<String> = lex.generators().iter().map(|g| g.to_string()).collect();
                text.push_str(&format!("({})\n", gens.join(", ")));
            } else {
                text.push_str(&lex.to_file_string());
            }
            match output {
                Some(path) => write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn kk_command(f: &FtVector, t: u32, witness: Option<&Path>, json: bool, verbose: bool) -> Outcome {
    let report = kk_check(f, t)?;
    if report.feasible {
        if let Some(path) = witness {
            write(path, &kk_witness(f, t)?.to_file_string())?;
        }
    }
    if json {
        let path = witness
            .filter(|_| report.feasible)
            .map(|p| p.display().to_string());
        print_json(&json::feasibility(f, &report, path.as_deref()));
    } else {
        if verbose {
            for b in &report.bounds {
                println!(
                    "d={}: f({}) = {}, f({})^[{}]_{} = {}, f({}) = {}",
                    b.degree,
                    b.degree,
                    b.value,
                    b.degree,
                    b.degree,
                    t,
                    b.bound,
                    b.degree + 1,
                    b.next
                );
            }
        }
        println!("{}", report.summary());
    }
    if report.feasible {
        Ok(())
    } else if witness.is_some() {
        Err(Failure::Obstruction("no witness written".into()))
    } else {
        Err(Failure::Obstruction(String::new()))
    }
}

fn verify_command(max_n: Option<u32>, seed: Option<u64>, json: bool) -> Outcome {
    let mut cfg = VerifyConfig {
        limits: OracleLimits::from_env(),
        ..VerifyConfig::default()
    };
    if let Some(m) = max_n {
        cfg = cfg.with_max_n(m);
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    let reports = run_all(&cfg)?;
    if json {
        print_json(&json::sweeps(&reports));
    } else {
        for r in &reports {
            println!("{r}");
        }
        let (checked, wrong) = casewise_disagreements(&cfg)?;
        println!("note: the casewise form of the t-spread operator differs from brute force on {wrong} of {checked} lex segments");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "{failed} sweep(s) disagree with the oracles"
        )))
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
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Obstruction(msg)) => {
            if !msg.is_empty() {
                println!("{msg}");
            }
            ExitCode::from(EXIT_OBSTRUCTION)
        }
    }
}
