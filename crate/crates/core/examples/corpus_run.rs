//! Runs built-in corpus entries and prints one line per comparison.
//!
//! `cargo run --release --example corpus_run -- [name]` (default: every entry).

use pvsinv::corpus::{corpus_run, corpus_run_all};

fn main() {
    let outcomes = match std::env::args().nth(1) {
        Some(name) => corpus_run(&name).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(2)
        }),
        None => corpus_run_all(),
    };
    let mut failed = 0;
    for o in &outcomes {
        println!(
            "{} {} ({:.2}s)",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.seconds
        );
        for c in &o.comparisons {
            if !c.passed {
                println!("    {}: {}", c.check, c.detail);
            }
        }
        failed += usize::from(!o.passed);
    }
    println!("{} of {} passed", outcomes.len() - failed, outcomes.len());
    std::process::exit(i32::from(failed > 0));
}
