//! Runs verification suites and prints one summary line per claim.
//!
//! With no arguments every claim runs at its default bounds:
//!
//!     cargo run --release --example harness
//!     cargo run --release --example harness -- interpolation corollary

use std::time::Instant;

use maxilat::harness::{run_suite, Claim, SuiteOptions};

fn main() -> maxilat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let claims: Vec<Claim> = if args.is_empty() {
        Claim::ALL.to_vec()
    } else {
        args.iter().map(|a| Claim::parse(a)).collect::<Result<_, _>>()?
    };
    for claim in claims {
        let start = Instant::now();
        let report = run_suite(claim, &SuiteOptions::defaults(claim))?;
        println!("{}  [{:.2?}]", report.summary_line(), start.elapsed());
        if let Some(fail) = report.failures().next() {
            let witness = serde_json::to_string(&fail.outcome.witness).unwrap();
            println!("  first failure on {:?}: {witness}", fail.instance.e.elements);
        };
    }
    Ok(())
}
