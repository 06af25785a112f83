//! The whole pipeline on a JSON input, as the `analyze` command runs it.
//!
//! `cargo run --example analyze_json -- [input.json]`

use pvsinv::input::{load_input, parse_input};
use pvsinv::report::{run_analysis, AnalysisOptions};

const DEFAULT: &str = r#"{
  "n": 3,
  "variables": ["x", "y", "z"],
  "poly": "x*(x*z - y^2)",
  "points": {"generic": ["1", "0", "1"], "component:1": ["0", "1", "0"], "component:2": ["1", "0", "0"]},
  "options": {"max_denominator_degree": 6}
}"#;

fn main() {
    let input = match std::env::args().nth(1) {
        Some(path) => load_input(path),
        None => parse_input(DEFAULT),
    }
    .unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2)
    });
    let opts = AnalysisOptions::default().overridden_by(&input.options);
    let report = run_analysis(&input, &opts);
    println!("{}", report.to_json());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
