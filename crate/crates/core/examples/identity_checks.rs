//! Runs the randomized identity suite and prints one line per check.
//!
//! Usage: cargo run --release --example identity_checks -- [n] [seed] [samples]

use std::time::Instant;

use contact_forms::checks::{run_checks, CheckConfig};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |k: usize, default: u64| args.get(k).and_then(|s| s.parse().ok()).unwrap_or(default);
    let mut cfg = CheckConfig::new(arg(0, 2) as usize, arg(1, 2024), arg(2, 50) as usize);
    cfg.negative_controls = true;

    let start = Instant::now();
    let outcomes = run_checks(&cfg);
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} {:<13} {:<26} {:>4} samples, {} failing", o.group, o.name, o.samples, o.failures);
        if !o.pass {
            println!("     {}", o.detail.as_deref().unwrap_or(""));
            println!("     rerun: {}", o.reproduce);
        }
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("{} checks, {failed} failed, {:.2?}", outcomes.len(), start.elapsed());
}
