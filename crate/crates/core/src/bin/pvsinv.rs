use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pvsinv::corpus::{corpus_list, corpus_run, corpus_run_all, EntryOutcome};
use pvsinv::input::{load_input, AnalysisInput, InputOptions, Task};
use pvsinv::liealg::LieAlgebraVF;
use pvsinv::pvscore::{is_linear_free_divisor, linear_logarithmic_fields};
use pvsinv::report::{run_analysis, AnalysisOptions, AnalysisReport};

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "pvsinv",
    version,
    about = "Relative and additive relative invariants of prehomogeneous vector spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on an input file and print a summary.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        max_denominator_degree: Option<u32>,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide whether the input defines a linear free divisor.
    CheckLfd { file: PathBuf },
    /// Linear logarithmic vector fields of a polynomial input, printed as an
    /// algebra input file.
    Derlog {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    List,
    Run {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            file,
            seed,
            max_degree,
            max_denominator_degree,
            json,
        } => analyze(
            file,
            InputOptions {
                seed,
                max_degree,
                max_denominator_degree,
                ..Default::default()
            },
            json,
        ),
        Command::CheckLfd { file } => check_lfd(file),
        Command::Derlog { poly } => derlog(poly),
        Command::Corpus { command } => corpus(command),
    };
    ExitCode::from(code)
}

fn load(file: &PathBuf) -> Result<AnalysisInput, u8> {
    load_input(file).map_err(|e| {
        eprintln!("error: {e}");
        INPUT_ERROR
    })
}

fn analyze(file: PathBuf, cli: InputOptions, json: Option<PathBuf>) -> u8 {
    let input = match load(&file) {
        Ok(i) => i,
        Err(c) => return c,
    };
    let opts = AnalysisOptions::default()
        .overridden_by(&input.options)
        .overridden_by(&cli);
    let report = run_analysis(&input, &opts);
    match json.as_deref() {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json() + "\n") {
                eprintln!("error: cannot write {}: {e}", p.display());
                return INPUT_ERROR;
            }
            print_summary(&report);
        }
        None => print_summary(&report),
    }
    if report.passed() {
        PASS
    } else {
        CHECK_FAILED
    }
}

fn print_summary(r: &AnalysisReport) {
    if let Some(a) = &r.algebra {
        println!("dim g = {}, dim [g,g] = {}", a.dim, a.dim_derived);
    }
    if let Some(p) = &r.prehomogeneity {
        println!(
            "generic point ({}): ({})",
            p.source,
            p.generic_point.join(", ")
        );
    }
    if let Some(l) = &r.lfd {
        println!("linear free divisor: {} ({})", l.is_lfd, l.reason);
    }
    if let Some(b) = &r.basics {
        println!("basic relative invariants (complete: {}):", b.complete);
        for f in &b.invariants {
            println!("  degree {}: {}", f.degree, f.f);
        }
    }
    if let Some(a) = &r.additive {
        println!(
            "additive relative invariants (denominator degree <= {}):",
            a.bound
        );
        for h in &a.basis {
            println!("  {}", h.fraction);
        }
    }
    if let Some(d) = &r.dims {
        let c = &d.counts;
        println!("r = {}, dim A1 = {}, dim H = {}", c.r, c.dim_a1, c.dim_h);
    }
    if let Some(v) = &r.verdicts {
        for (name, verdict) in v.all() {
            let tag = if verdict.is_pass() {
                "pass"
            } else if verdict.is_fail() {
                "FAIL"
            } else {
                "skipped"
            };
            println!("check {name}: {tag}");
        }
    }
    for e in &r.errors {
        println!("error in {}: {}", e.stage, e.message);
    }
}

fn algebra_of(input: &AnalysisInput) -> Result<LieAlgebraVF, String> {
    match &input.task {
        Task::Algebra(g) => Ok(g.clone()),
        Task::Poly { poly, .. } => linear_logarithmic_fields(poly).map_err(|e| e.to_string()),
    }
}

fn check_lfd(file: PathBuf) -> u8 {
    let input = match load(&file) {
        Ok(i) => i,
        Err(c) => return c,
    };
    let opts = AnalysisOptions::default().overridden_by(&input.options);
    let verdict = algebra_of(&input).and_then(|g| {
        is_linear_free_divisor(&g, opts.reducedness_trials, opts.seed).map_err(|e| e.to_string())
    });
    match verdict {
        Ok(v) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("verdict serializes")
            );
            if v.is_lfd {
                PASS
            } else {
                CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            CHECK_FAILED
        }
    }
}

#[derive(Serialize)]
struct AlgebraFile {
    n: usize,
    variables: Vec<String>,
    basis: Vec<Vec<Vec<String>>>,
}

fn derlog(file: PathBuf) -> u8 {
    let input = match load(&file) {
        Ok(i) => i,
        Err(c) => return c,
    };
    if !matches!(input.task, Task::Poly { .. }) {
        eprintln!("error: {} has no `poly` field", file.display());
        return INPUT_ERROR;
    }
    match algebra_of(&input) {
        Ok(g) => {
            let out = AlgebraFile {
                n: g.n(),
                variables: input.variables.clone(),
                basis: g
                    .basis()
                    .iter()
                    .map(|x| {
                        x.matrix()
                            .row_vectors()
                            .iter()
                            .map(|r| r.iter().map(ToString::to_string).collect())
                            .collect()
                    })
                    .collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("algebra serializes")
            );
            PASS
        }
        Err(e) => {
            eprintln!("error: {e}");
            CHECK_FAILED
        }
    }
}

fn print_outcome(o: &EntryOutcome) {
    println!(
        "{} {} ({:.2}s)",
        if o.passed { "PASS" } else { "FAIL" },
        o.name,
        o.seconds
    );
    for c in o.comparisons.iter().filter(|c| !c.passed) {
        println!("    {}: {}", c.check, c.detail);
    }
}

fn corpus(command: CorpusCommand) -> u8 {
    match command {
        CorpusCommand::List => {
            for (name, summary) in corpus_list() {
                println!("{name:<20} {summary}");
            }
            PASS
        }
        CorpusCommand::Run { name, all } => {
            let outcomes = if all {
                corpus_run_all()
            } else {
                match corpus_run(name.as_deref().unwrap_or_default()) {
                    Ok(o) => o,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return INPUT_ERROR;
                    }
                }
            };
            outcomes.iter().for_each(print_outcome);
            if outcomes.iter().all(|o| o.passed) {
                PASS
            } else {
                CHECK_FAILED
            }
        }
    }
}
