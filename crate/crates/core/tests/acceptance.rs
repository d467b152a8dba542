//! Acceptance criteria 1 to 8, each with its own time limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use contact_forms::checks::{run_checks, CheckConfig, CheckOutcome};
use contact_forms::invariants::{classify_with, Algebra};

const SEED: u64 = 2024;

struct Verdict {
    ok: bool,
    summary: String,
    problems: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { ok: true, summary: String::new(), problems: Vec::new() }
    }

    fn require(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.problems.push(what());
        }
    }
}

fn suite(ns: &[usize], samples: usize, groups: &[&str], controls: bool) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for &n in ns {
        for group in groups {
            let mut cfg = CheckConfig::new(n, SEED, samples);
            cfg.only = Some(group.to_string());
            cfg.negative_controls = controls;
            out.extend(run_checks(&cfg));
        }
    }
    out
}

fn judge_checks(outcomes: &[CheckOutcome], min_samples: usize) -> Verdict {
    let mut v = Verdict::new();
    v.require(!outcomes.is_empty(), || "no checks ran".into());
    for o in outcomes {
        v.require(o.pass, || format!("n={} {}: {}", o.n, o.name, o.detail.clone().unwrap_or_default()));
        v.require(o.samples >= min_samples || o.samples == 1, || format!("{} ran {} samples", o.name, o.samples));
    }
    let samples: usize = outcomes.iter().map(|o| o.samples).sum();
    v.summary = format!("{} checks, {} samples", outcomes.len(), samples);
    v
}

fn exactness() -> Verdict {
    judge_checks(&suite(&[1, 2, 3], 200, &["ring", "exterior", "calculus"], false), 200)
}

fn sl2() -> Verdict {
    judge_checks(&suite(&[1, 2, 3], 200, &["sl2"], false), 200)
}

fn worked() -> Verdict {
    judge_checks(&suite(&[1], 1, &["worked"], false), 1)
}

fn compositions() -> Verdict {
    judge_checks(&suite(&[1, 2], 50, &["composition"], false), 50)
}

fn equivariance() -> Verdict {
    let natural = suite(&[1, 2], 50, &["equivariance"], false);
    let controls = suite(&[1, 2], 50, &["controls"], true);
    let mut v = judge_checks(&natural, 50);
    for c in &controls {
        v.require(c.expect_failure && c.failures > 0, || format!("n={} {} never failed", c.n, c.name));
    }
    v.summary = format!("{}, {} controls rejected", v.summary, controls.len());
    v
}

fn fundamental_theorem() -> Verdict {
    let mut v = Verdict::new();
    let mut cells = 0;
    for n in 1..=2 {
        for a in 0..=2 * n {
            for b in 0..=2 * n {
                let report = classify_with(n, a, b, 3, Algebra::SpOnly).expect("valid cell");
                cells += 1;
                for row in &report.rows {
                    let tag = format!("n={n} a={a} b={b} r={}", row.r);
                    v.require(row.pass, || format!("{tag}: dim {} vs rank {}", row.solver_dim, row.spanning_rank));
                    if (row.r + a + b) % 2 == 1 || row.r > 2 {
                        v.require(row.solver_dim == 0, || format!("{tag}: dim {} should vanish", row.solver_dim));
                    }
                }
            }
        }
    }
    v.summary = format!("{cells} cells");
    v
}

fn main_theorem() -> Verdict {
    let mut v = Verdict::new();
    let mut cells = 0;
    for n in 1..=2 {
        for a in 0..=2 * n + 1 {
            for b in 0..=2 * n + 1 {
                let report = classify_with(n, a, b, 3, Algebra::Full).expect("valid cell");
                cells += 1;
                let neighbour = b + 1 == a || b == a || b == a + 1;
                for row in &report.rows {
                    let tag = format!("n={n} a={a} b={b} r={}", row.r);
                    v.require(row.pass, || format!("{tag}: dim {} vs rank {}", row.solver_dim, row.spanning_rank));
                    if !neighbour {
                        v.require(row.solver_dim == 0, || format!("{tag}: dim {} should vanish", row.solver_dim));
                    }
                }
            }
        }
    }
    for (n, a, b, expected) in [(1, 1, 2, [0, 1, 1, 0]), (2, 2, 1, [1, 0, 0, 0]), (2, 3, 4, [0, 1, 1, 0])] {
        let dims: Vec<usize> =
            classify_with(n, a, b, 3, Algebra::Full).expect("valid cell").rows.iter().map(|r| r.solver_dim).collect();
        v.require(dims == expected, || format!("n={n} a={a} b={b}: dims {dims:?}, expected {expected:?}"));
    }
    v.summary = format!("{cells} cells, 3 spot values");
    v
}

fn selftest() -> Verdict {
    let mut v = Verdict::new();
    let run = || Command::new(env!("CARGO_BIN_EXE_contact-forms")).arg("selftest").output().expect("binary runs");
    let (first, second) = (run(), run());
    v.require(first.status.success(), || format!("exit status {:?}", first.status.code()));
    v.require(first.stdout == second.stdout, || "reports differ between runs".into());
    match serde_json::from_slice::<serde_json::Value>(&first.stdout) {
        Ok(report) => {
            v.require(report["schema_version"] == 1, || "missing schema_version".into());
            v.require(report["pass"] == true, || "report does not pass".into());
            let criteria = report["criteria"].as_array().map_or(0, Vec::len);
            v.require(criteria == 7, || format!("{criteria} criteria in report"));
        }
        Err(e) => v.require(false, || format!("report is not JSON: {e}")),
    }
    v.summary = format!("{} bytes, two runs compared", first.stdout.len());
    v
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Verdict); 8] = [
        (1, "exactness suite, n = 1..3", 30, exactness),
        (2, "sl2 suite, n = 1..3", 30, sl2),
        (3, "worked values", 30, worked),
        (4, "composition identities, n = 1, 2", 60, compositions),
        (5, "equivariance and controls, n = 1, 2", 120, equivariance),
        (6, "symplectic invariant theory, n = 1, 2", 300, fundamental_theorem),
        (7, "natural operator classification, n = 1, 2", 600, main_theorem),
        (8, "selftest determinism", 600, selftest),
    ];
    let mut all_ok = true;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = verdict.ok && in_time;
        all_ok &= ok;
        println!(
            "{} criterion {id}: {name}: {} in {:.2}s (limit {limit}s)",
            if ok { "PASS" } else { "FAIL" },
            verdict.summary,
            elapsed.as_secs_f64()
        );
        for p in verdict.problems.iter().take(10) {
            println!("    {p}");
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
