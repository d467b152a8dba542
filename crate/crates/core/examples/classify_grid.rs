//! Runs the full classification grid for n = 1 and n = 2 with both algebras.

use std::time::Instant;

use contact_forms::invariants::{classify_with, Algebra};

fn main() {
    for algebra in [Algebra::SpOnly, Algebra::Full] {
        for n in 1..=2 {
            let start = Instant::now();
            let top = match algebra {
                Algebra::SpOnly => 2 * n,
                Algebra::Full => 2 * n + 1,
            };
            let mut failures = 0;
            for a in 0..=top {
                for b in 0..=top {
                    let report = classify_with(n, a, b, 3, algebra).expect("valid degrees");
                    let dims: Vec<String> =
                        report.rows.iter().map(|r| format!("{}/{}", r.solver_dim, r.spanning_rank)).collect();
                    if !report.overall_pass {
                        failures += 1;
                    }
                    println!(
                        "{algebra:?} n={n} a={a} b={b}: {} {}",
                        dims.join(" "),
                        if report.overall_pass { "ok" } else { "FAIL" }
                    );
                }
            }
            println!("{algebra:?} n={n}: {failures} failures in {:.2?}", start.elapsed());
        }
    }
}
