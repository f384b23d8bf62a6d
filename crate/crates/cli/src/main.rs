//! `ssst`: generate, count, enumerate, solve, verify, decide, reduce and
//! render scheduling instances.
//!
//! Exit codes: 0 success / accept / yes, 1 reject / no, 2 usage or parse
//! error, 3 exploration budget exceeded.

mod formats;

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use ssst::reductions::{self, mpsp_to_mumpsp, mumpsp_user_makespans};
use ssst::{
    BnbOptions, BruteForceOptions, Decision, Instance, SolveResult, TreeCounts, DEFAULT_LEAF_CAP,
    DEFAULT_NODE_CAP,
};

use formats::{
    parse, to_line, CertificateFile, InstanceFile, MumpspFile, OrderedScheduleFile, PartitionFile,
};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<ssst::Error> for CliError {
    fn from(e: ssst::Error) -> Self {
        let code = match e {
            ssst::Error::BudgetExceeded { .. } | ssst::Error::TooLarge { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// A makespan bound, given as an integer or an exact fraction `a/b`.
///
/// Makespans are integers, so `C_max <= a/b` is tested as `C_max <= floor(a/b)`.
#[derive(Debug, Clone)]
struct Threshold(BigRational);

impl FromStr for Threshold {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let value = match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad numerator in {s:?}"))?;
                let den: BigInt = den
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad denominator in {s:?}"))?;
                if den.is_zero() {
                    return Err("denominator must not be zero".into());
                }
                BigRational::new(num, den)
            }
            None => BigRational::from_integer(
                s.trim()
                    .parse()
                    .map_err(|_| format!("{s:?} is not a number"))?,
            ),
        };
        if value.is_negative() {
            return Err("threshold must not be negative".into());
        }
        Ok(Threshold(value))
    }
}

impl Threshold {
    fn floor(&self) -> u64 {
        self.0.floor().to_integer().to_u64().unwrap_or(u64::MAX)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Bnb,
}

#[derive(Debug, Parser)]
#[command(
    name = "ssst",
    version,
    about = "Scheduling solution space tree workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random instance with processing times uniform in [1, pmax].
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        pmax: u64,
    },
    /// Print node and schedule counts of the tree for m machines and n jobs.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// List every schedule with its loads and makespan, in lexicographic order.
    Leaves {
        instance: String,
        /// Refuse instances with more leaves than this.
        #[arg(long, default_value_t = 4096)]
        cap: u64,
    },
    /// Compute the optimal makespan.
    Solve {
        instance: String,
        #[arg(long, value_enum, default_value_t = Method::Bnb)]
        method: Method,
        /// Leaf budget for brute force.
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap: u64,
        /// Worker threads for brute force (branch and bound runs on one thread
        /// so its statistics stay reproducible). Defaults to the available parallelism.
        #[arg(long)]
        threads: Option<usize>,
        /// Branch on the longest jobs first.
        #[arg(long)]
        lpt: bool,
    },
    /// Check a certificate against a makespan threshold.
    Verify {
        instance: String,
        certificate: String,
        /// Integer or fraction `a/b`.
        #[arg(long)]
        threshold: Threshold,
    },
    /// Decide whether some schedule meets a makespan threshold.
    Decide {
        instance: String,
        /// Integer or fraction `a/b`.
        #[arg(long)]
        threshold: Threshold,
        /// Also write the witness certificate to this file.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LEAF_CAP)]
        cap: u64,
    },
    /// Turn a partition instance into a two-machine instance; the threshold
    /// W/2 goes to standard error.
    ReducePartition { partition: String },
    /// Turn an instance into a single-user multi-user instance.
    ReduceMumpsp { instance: String },
    /// Per-user makespans of an ordered multi-user schedule.
    EvalMumpsp { instance: String, schedule: String },
    /// Render levels 0..=max-level of the weighted tree as Graphviz DOT.
    Dot {
        instance: String,
        #[arg(long)]
        max_level: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: u64,
    },
}

#[derive(Serialize)]
struct SolveOutput {
    optimum: u64,
    assignment: Vec<u32>,
    leaves_explored: u64,
    nodes_pruned: u64,
}

impl From<SolveResult> for SolveOutput {
    fn from(r: SolveResult) -> Self {
        SolveOutput {
            optimum: r.optimum,
            assignment: r.best_schedule.into_inner(),
            leaves_explored: r.leaves_explored.to_u64().unwrap_or(u64::MAX),
            nodes_pruned: r.nodes_pruned.to_u64().unwrap_or(u64::MAX),
        }
    }
}

fn load_instance(path: &str) -> Result<Instance, CliError> {
    parse::<InstanceFile>(path)?.into_instance(path)
}

fn write_file(path: &str, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::usage(format!("{path}: {e}")))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen { seed, m, n, pmax } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let jobs = (0..n).map(|_| rng.gen_range(1..=pmax)).collect();
            println!("{}", to_line(&InstanceFile { machines: m, jobs }));
            Ok(0)
        }
        Command::Count { m, n } => {
            let c = TreeCounts::new(m, n)?;
            println!("m={m} n={n}");
            println!("nodes={}", c.nodes);
            println!("schedules={}", c.schedules);
            println!("partial={}", c.partial);
            println!("essential_formula={}", c.essential_formula);
            println!("essential_exact={}", c.essential_exact);
            if c.essential_mismatch() {
                println!(
                    "note: essential_formula (m^n - m) only removes single-machine schedules; \
                     essential_exact counts schedules that use every machine"
                );
            }
            Ok(0)
        }
        Command::Leaves { instance, cap } => {
            let inst = load_instance(&instance)?;
            ssst::solver::check_leaf_budget(&inst, cap)?;
            for s in ssst::leaves(&inst) {
                let loads = inst.loads(&s)?;
                let makespan = loads.iter().max().copied().unwrap_or(0);
                println!(
                    "{} loads={} makespan={makespan}",
                    to_line(&s.assignment()),
                    to_line(&loads)
                );
            }
            Ok(0)
        }
        Command::Solve {
            instance,
            method,
            cap,
            threads,
            lpt,
        } => {
            let inst = load_instance(&instance)?;
            let result = match method {
                Method::Brute => {
                    let threads = threads.unwrap_or_else(|| {
                        std::thread::available_parallelism().map_or(1, |n| n.get())
                    });
                    ssst::brute_force_opt_with(
                        &inst,
                        BruteForceOptions {
                            leaf_cap: cap,
                            threads,
                        },
                    )?
                }
                Method::Bnb => ssst::branch_and_bound_with(
                    &inst,
                    BnbOptions {
                        lpt_order: lpt,
                        threads: 1,
                    },
                )?,
            };
            println!("{}", to_line(&SolveOutput::from(result)));
            Ok(0)
        }
        Command::Verify {
            instance,
            certificate,
            threshold,
        } => {
            let inst = load_instance(&instance)?;
            let cert = parse::<CertificateFile>(&certificate)?.into_certificate();
            let verdict = ssst::verify_certificate(&inst, &cert, threshold.floor());
            println!("{verdict}");
            Ok(if verdict.is_accept() { 0 } else { 1 })
        }
        Command::Decide {
            instance,
            threshold,
            witness,
            cap,
        } => {
            let inst = load_instance(&instance)?;
            match ssst::verifier::decide_with_cap(&inst, threshold.floor(), cap)? {
                Decision::Yes(cert) => {
                    let line = to_line(&CertificateFile::from_certificate(&cert));
                    println!("yes");
                    println!("{line}");
                    if let Some(path) = witness {
                        write_file(&path, &format!("{line}\n"))?;
                    }
                    Ok(0)
                }
                Decision::No => {
                    println!("no");
                    Ok(1)
                }
            }
        }
        Command::ReducePartition { partition } => {
            let pp = parse::<PartitionFile>(&partition)?.into_instance(&partition)?;
            let (inst, threshold) = reductions::partition_to_2psp(&pp)?;
            println!("{}", to_line(&InstanceFile::from_instance(&inst)));
            eprintln!("threshold {threshold}");
            Ok(0)
        }
        Command::ReduceMumpsp { instance } => {
            let inst = load_instance(&instance)?;
            println!(
                "{}",
                to_line(&MumpspFile::from_instance(&mpsp_to_mumpsp(&inst)))
            );
            Ok(0)
        }
        Command::EvalMumpsp { instance, schedule } => {
            let mu = parse::<MumpspFile>(&instance)?.into_instance(&instance)?;
            let ordered = parse::<OrderedScheduleFile>(&schedule)?.into_schedule();
            let per_user = mumpsp_user_makespans(&mu, &ordered)?;
            println!("{}", to_line(&per_user));
            Ok(0)
        }
        Command::Dot {
            instance,
            max_level,
            cap,
        } => {
            let inst = load_instance(&instance)?;
            print!("{}", ssst::to_dot_with_cap(&inst, max_level, cap)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits with 2 on usage errors and 0 for --help / --version
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
