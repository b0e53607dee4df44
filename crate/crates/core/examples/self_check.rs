//! Run the built-in self-check programmatically.
//!
//! cargo run --example self_check -- --quick

use ade_bps::verify::{run, Case};

fn main() {
    let quick = std::env::args().any(|a| a == "--quick");
    let report = run(Case::E8A5, quick);
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
