use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ctseq::harness::{
    builtin_registry_cached, export_dot, find_check, list_checks, run_check_with, save_automaton,
    xcheck, Automaton, CheckResult, HarnessError,
};
use ctseq::laurent::{synth_dfao, DEFAULT_STATE_LIMIT};
use ctseq::logic::{LogicError, Verdict};
use ctseq::sequences::{builtin_ctspec, oracle, SeqKind, SequenceError};

#[derive(Parser)]
#[command(name = "ctseq", version, about = "Automata for Catalan, Motzkin and central trinomial numbers mod p, and a decision procedure for queries about them")]
struct Cli {
    /// Directory caching synthesized built-in automata.
    #[arg(long, global = true, default_value = ".ctseq")]
    cache: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize the automaton for a sequence mod a prime.
    Synth {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        out: PathBuf,
        /// Also write a graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a query script and print one verdict per command.
    Query {
        #[arg(long)]
        file: PathBuf,
        /// Cache directory for the built-in sequences (overrides --cache).
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Run named checks.
    Check {
        #[arg(long, conflicts_with = "names")]
        all: bool,
        /// Print results as JSON.
        #[arg(long)]
        json: bool,
        names: Vec<String>,
    },
    /// Print the first terms of a sequence mod m, by brute force.
    Oracle {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        count: usize,
    },
    /// Compare the synthesized automaton with the oracle for n < count.
    Xcheck {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
    },
}

#[derive(Args)]
struct SeqArgs {
    /// catalan, motzkin or trinomial
    #[arg(long)]
    seq: SeqKind,
    #[arg(long = "mod")]
    modulus: u32,
}

enum Failure {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// The requested work ran and did not pass; exit 1.
    Failed(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::UnknownCheck(_)
            | HarnessError::UnknownSequence(_)
            | HarnessError::Format { .. }
            | HarnessError::Logic(_)
            | HarnessError::Sequence(SequenceError::NotPrime(_)) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        HarnessError::from(e).into()
    }
}

impl From<LogicError> for Failure {
    fn from(e: LogicError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Synth { seq, out, dot } => synth(&seq, &out, dot.as_deref()),
        Command::Query { file, registry } => query(&file, registry.unwrap_or(cli.cache)),
        Command::Check { all, json, names } => check(all, json, names, cli.cache),
        Command::Oracle { seq, count } => print_oracle(&seq, count),
        Command::Xcheck { seq, count } => run_xcheck(&seq, count),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn synth(seq: &SeqArgs, out: &Path, dot: Option<&Path>) -> Result<bool, Failure> {
    let spec = builtin_ctspec(seq.seq, seq.modulus)?;
    let dfao = synth_dfao(&spec, DEFAULT_STATE_LIMIT).map_err(HarnessError::from)?;
    println!("{}: {} states", spec.name(), dfao.state_count());
    let a = Automaton::from(dfao);
    save_automaton(&a, out)?;
    if let Some(path) = dot {
        export_dot(&a, spec.name(), path)?;
    }
    Ok(true)
}

fn query(file: &Path, cache: PathBuf) -> Result<bool, Failure> {
    let src = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let mut session = builtin_registry_cached(Some(cache));
    let log = session.run_script(&src)?;
    let dir = file.parent().unwrap_or(Path::new("."));
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for (name, verdict) in &log {
        let count = seen.entry(name).or_default();
        *count += 1;
        match verdict {
            Verdict::Automaton(dfa) => {
                let file_name = if *count == 1 {
                    format!("{name}.ctaut")
                } else {
                    format!("{name}_{count}.ctaut")
                };
                let path = dir.join(file_name);
                save_automaton(&Automaton::from(dfa.clone()), &path)?;
                println!("{name}: {verdict} -> {}", path.display());
            }
            _ => println!("{name}: {verdict}"),
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct JsonStep<'a> {
    label: &'a str,
    passed: bool,
    detail: &'a str,
    witness: &'a Option<Vec<u64>>,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    passed: bool,
    error: &'a Option<String>,
    steps: Vec<JsonStep<'a>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    passed: bool,
    checks: Vec<JsonCheck<'a>>,
}

fn check(all: bool, json: bool, names: Vec<String>, cache: PathBuf) -> Result<bool, Failure> {
    let names: Vec<String> = if all || names.is_empty() {
        list_checks().into_iter().map(String::from).collect()
    } else {
        names
    };
    if let Some(bad) = names.iter().find(|n| find_check(n).is_none()) {
        return Err(HarnessError::UnknownCheck(bad.clone()).into());
    }
    let mut results: Vec<CheckResult> = Vec::new();
    for name in &names {
        let r = run_check_with(name, builtin_registry_cached(Some(cache.clone())))?;
        if !json {
            print_result(&r);
        }
        results.push(r);
    }
    let passed = results.iter().all(|r| r.passed);
    if json {
        // Durations are left out so the report is reproducible.
        let report = JsonReport {
            passed,
            checks: results
                .iter()
                .map(|r| JsonCheck {
                    name: &r.name,
                    passed: r.passed,
                    error: &r.error,
                    steps: r
                        .steps
                        .iter()
                        .map(|s| JsonStep {
                            label: &s.label,
                            passed: s.passed,
                            detail: &s.detail,
                            witness: &s.witness,
                        })
                        .collect(),
                })
                .collect(),
        };
        let text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Failed(e.to_string()))?;
        println!("{text}");
    } else {
        let ok = results.iter().filter(|r| r.passed).count();
        println!("{ok}/{} checks passed", results.len());
    }
    Ok(passed)
}

fn print_result(r: &CheckResult) {
    let status = if r.passed { "PASS" } else { "FAIL" };
    println!("{status} {} ({:.2}s)", r.name, r.duration.as_secs_f64());
    if let Some(e) = &r.error {
        println!("    error: {e}");
    }
    for s in r.steps.iter().filter(|s| !s.passed) {
        match &s.witness {
            Some(w) => println!("    {}: {} (witness {w:?})", s.label, s.detail),
            None => println!("    {}: {}", s.label, s.detail),
        }
    }
}

fn print_oracle(seq: &SeqArgs, count: usize) -> Result<bool, Failure> {
    if seq.modulus == 0 {
        return Err(Failure::Usage("modulus must be positive".into()));
    }
    let table = oracle(seq.seq, count, seq.modulus);
    let line: Vec<String> = table.values.iter().map(u32::to_string).collect();
    println!("{}", line.join(" "));
    Ok(true)
}

fn run_xcheck(seq: &SeqArgs, count: usize) -> Result<bool, Failure> {
    let report = xcheck(seq.seq, seq.modulus, count)?;
    println!("{report}");
    Ok(report.passed())
}
