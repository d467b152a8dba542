//! Command implementations behind the `contact-forms` binary. Each command
//! returns a serializable report; rendering and exit codes are decided here
//! so the binary stays a thin argument parser.

use std::fmt::Write as _;

use serde::Serialize;

use crate::calculus::exterior_derivative;
use crate::checks::{run_checks, CheckConfig, CheckOutcome};
use crate::error::{Error, Result};
use crate::exterior::parse_form;
use crate::invariants::{classify_with, Algebra, ClassifyReport};
use crate::lefschetz::{primitive_projections, HorizontalForm};
use crate::natural_ops::{q_via_composition, q_via_xi, rumin_via_composition, rumin_via_xi};

pub const SCHEMA_VERSION: u32 = 1;

/// Seed used by `selftest`.
pub const SELFTEST_SEED: u64 = 20240607;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub trait Report: Serialize {
    fn passed(&self) -> bool;
    fn to_text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }

    fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAILED"
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

// decompose

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub i: usize,
    pub power: usize,
    pub form: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub input: String,
    pub degree: usize,
    pub restriction: String,
    pub components: Vec<Component>,
    pub reconstruction_ok: bool,
}

impl Report for DecomposeReport {
    fn passed(&self) -> bool {
        self.reconstruction_ok
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "form        {} (degree {}, n = {})", self.input, self.degree, self.n).unwrap();
        writeln!(s, "restriction {}", self.restriction).unwrap();
        for c in &self.components {
            writeln!(s, "π_{} = {}    (enters as L^{} π_{})", c.i, c.form, c.power, c.i).unwrap();
        }
        writeln!(s, "reconstruction {}", mark(self.reconstruction_ok)).unwrap();
        s
    }
}

/// Restricts the form to the contact plane and splits it into primitive parts.
pub fn cmd_decompose(n: usize, text: &str) -> Result<DecomposeReport> {
    let form = parse_form(text, n)?;
    let a = form.degree();
    if a > 2 * n {
        return Err(Error::DegreeOutOfRange { degree: a, n });
    }
    let restriction = HorizontalForm::try_from(form.restrict_to_contact_plane())?;
    let dec = primitive_projections(&restriction)?;
    let components =
        dec.components.iter().map(|(&i, pi)| Component { i, power: (a - i) / 2, form: pi.to_string() }).collect();
    Ok(DecomposeReport {
        schema_version: SCHEMA_VERSION,
        command: "decompose",
        n,
        input: text.to_string(),
        degree: a,
        restriction: restriction.to_string(),
        components,
        reconstruction_ok: dec.reconstruct() == restriction,
    })
}

// rumin

#[derive(Clone, Debug, Serialize)]
pub struct RuminReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub input: String,
    pub q: String,
    pub d: String,
    /// `Dω` vanishes on the contact plane.
    pub d_restriction_zero: bool,
    /// `d(Dω) = 0`.
    pub d_closed: bool,
    /// The ξ construction and the composition formulas agree for `Q` and `D`.
    pub paths_agree: bool,
}

impl Report for RuminReport {
    fn passed(&self) -> bool {
        self.d_restriction_zero && self.d_closed && self.paths_agree
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "ω  = {} (n = {})", self.input, self.n).unwrap();
        writeln!(s, "Qω = {}", self.q).unwrap();
        writeln!(s, "Dω = {}", self.d).unwrap();
        writeln!(s, "Dω restricted to the contact plane is zero: {}", mark(self.d_restriction_zero)).unwrap();
        writeln!(s, "d(Dω) = 0: {}", mark(self.d_closed)).unwrap();
        writeln!(s, "composition formulas agree: {}", mark(self.paths_agree)).unwrap();
        s
    }
}

/// `Qω` and `Dω` for a form of degree `n`.
pub fn cmd_rumin(n: usize, text: &str) -> Result<RuminReport> {
    let form = parse_form(text, n)?;
    let q = q_via_xi(&form)?;
    let d = rumin_via_xi(&form)?;
    let paths_agree = q == q_via_composition(&form)? && d == rumin_via_composition(&form)?;
    Ok(RuminReport {
        schema_version: SCHEMA_VERSION,
        command: "rumin",
        n,
        input: text.to_string(),
        q: q.to_string(),
        d: d.to_string(),
        d_restriction_zero: d.restrict_to_contact_plane().is_zero(),
        d_closed: exterior_derivative(&d).is_zero(),
        paths_agree,
    })
}

// check

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
    pub only: Option<String>,
    pub negative_controls: bool,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
}

fn outcome_lines(s: &mut String, outcomes: &[CheckOutcome]) {
    for o in outcomes {
        let expect = if o.expect_failure { " (control)" } else { "" };
        writeln!(
            s,
            "{} {}/{}{}: {} samples, {} failing",
            pass_fail(o.pass),
            o.group,
            o.name,
            expect,
            o.samples,
            o.failures
        )
        .unwrap();
        if !o.pass {
            if let Some(d) = &o.detail {
                writeln!(s, "    {d}").unwrap();
            }
            writeln!(s, "    reproduce: {}", o.reproduce).unwrap();
        }
    }
}

impl Report for CheckReport {
    fn passed(&self) -> bool {
        self.pass
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "n = {}, seed = {}, samples = {}, max degree = {}",
            self.n, self.seed, self.samples, self.max_degree
        )
        .unwrap();
        outcome_lines(&mut s, &self.checks);
        let failed = self.checks.iter().filter(|o| !o.pass).count();
        writeln!(s, "{} checks, {} failed", self.checks.len(), failed).unwrap();
        s
    }
}

/// Runs the identity suite. An `only` filter that selects nothing is an error.
pub fn cmd_check(cfg: &CheckConfig) -> Result<CheckReport> {
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let checks = run_checks(cfg);
    if checks.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no check or group named {:?}",
            cfg.only.as_deref().unwrap_or_default()
        )));
    }
    let pass = checks.iter().all(|o| o.pass);
    Ok(CheckReport {
        schema_version: SCHEMA_VERSION,
        command: "check",
        n: cfg.n,
        seed: cfg.seed,
        samples: cfg.samples,
        max_degree: cfg.max_degree,
        only: cfg.only.clone(),
        negative_controls: cfg.negative_controls,
        checks,
        pass,
    })
}

// classify

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyCell {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: ClassifyReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyGrid {
    pub schema_version: u32,
    pub n: usize,
    pub algebra: Algebra,
    pub max_order: usize,
    pub cells: Vec<ClassifyReport>,
    pub overall_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ClassifyOutput {
    Cell(ClassifyCell),
    Grid(ClassifyGrid),
}

fn cell_lines(s: &mut String, report: &ClassifyReport) {
    writeln!(s, "n = {}, a = {}, b = {}: {}", report.n, report.a, report.b, pass_fail(report.overall_pass)).unwrap();
    for row in &report.rows {
        writeln!(
            s,
            "  r = {}: solver dim {}, spanning rank {} {}",
            row.r,
            row.solver_dim,
            row.spanning_rank,
            pass_fail(row.pass)
        )
        .unwrap();
    }
}

impl Report for ClassifyOutput {
    fn passed(&self) -> bool {
        match self {
            ClassifyOutput::Cell(c) => c.report.overall_pass,
            ClassifyOutput::Grid(g) => g.overall_pass,
        }
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            ClassifyOutput::Cell(c) => cell_lines(&mut s, &c.report),
            ClassifyOutput::Grid(g) => {
                for cell in &g.cells {
                    cell_lines(&mut s, cell);
                }
                let failed = g.cells.iter().filter(|c| !c.overall_pass).count();
                writeln!(s, "{} cells, {} failed", g.cells.len(), failed).unwrap();
            }
        }
        s
    }
}

/// Largest form degree on which `algebra` is compared.
pub fn top_degree(n: usize, algebra: Algebra) -> usize {
    match algebra {
        Algebra::SpOnly => 2 * n,
        Algebra::Full => 2 * n + 1,
    }
}

pub fn cmd_classify(n: usize, a: usize, b: usize, max_order: usize, algebra: Algebra) -> Result<ClassifyOutput> {
    let top = top_degree(n, algebra);
    if a > top || b > top {
        return Err(Error::DegreeOutOfRange { degree: a.max(b), n });
    }
    let report = classify_with(n, a, b, max_order, algebra)?;
    Ok(ClassifyOutput::Cell(ClassifyCell { schema_version: SCHEMA_VERSION, report }))
}

/// Every `(a, b)` with `a, b ≤ 2n` (sp only) or `a, b ≤ 2n + 1` (full).
pub fn cmd_classify_all(n: usize, max_order: usize, algebra: Algebra) -> Result<ClassifyOutput> {
    let top = top_degree(n, algebra);
    let mut cells = Vec::new();
    for a in 0..=top {
        for b in 0..=top {
            cells.push(classify_with(n, a, b, max_order, algebra)?);
        }
    }
    let overall_pass = cells.iter().all(|c| c.overall_pass);
    Ok(ClassifyOutput::Grid(ClassifyGrid {
        schema_version: SCHEMA_VERSION,
        n,
        algebra,
        max_order,
        cells,
        overall_pass,
    }))
}

// selftest

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub executed: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    pub pass: bool,
}

impl Report for SelftestReport {
    fn passed(&self) -> bool {
        self.pass
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.criteria {
            writeln!(s, "{} {}. {} ({} checks)", pass_fail(c.pass), c.id, c.name, c.executed).unwrap();
            for f in &c.failures {
                writeln!(s, "    {f}").unwrap();
            }
        }
        writeln!(s, "selftest {}", pass_fail(self.pass)).unwrap();
        s
    }
}

fn criterion(id: u32, name: &'static str, results: Vec<(String, bool)>) -> CriterionResult {
    let failures: Vec<String> = results.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.clone()).collect();
    CriterionResult { id, name, executed: results.len(), pass: failures.is_empty(), failures }
}

fn suite_results(seed: u64, samples: usize, groups: &[&str], controls: bool) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for n in [1, 2] {
        for group in groups {
            let mut cfg = CheckConfig::new(n, seed, samples);
            cfg.only = Some(group.to_string());
            for o in run_checks(&cfg) {
                out.push((format!("n={n} {}: {}", o.name, o.detail.unwrap_or_default()), o.pass));
            }
        }
        if controls {
            let mut cfg = CheckConfig::new(n, seed, samples);
            cfg.only = Some("controls".into());
            cfg.negative_controls = true;
            for o in run_checks(&cfg) {
                out.push((format!("n={n} {}: control residual stayed zero", o.name), o.pass));
            }
        }
    }
    out
}

fn grid_results(algebra: Algebra) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for n in [1, 2] {
        if let ClassifyOutput::Grid(g) = cmd_classify_all(n, 3, algebra)? {
            for c in g.cells {
                let dims: Vec<String> =
                    c.rows.iter().map(|r| format!("{}/{}", r.solver_dim, r.spanning_rank)).collect();
                out.push((format!("n={n} a={} b={}: dims {}", c.a, c.b, dims.join(" ")), c.overall_pass));
            }
        }
    }
    Ok(out)
}

/// Spot dimensions by order `r = 0..=3` for the full algebra.
const SPOT_VALUES: &[(usize, usize, usize, [usize; 4])] =
    &[(1, 1, 2, [0, 1, 1, 0]), (2, 2, 1, [1, 0, 0, 0]), (2, 3, 4, [0, 1, 1, 0])];

fn spot_results() -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for &(n, a, b, expected) in SPOT_VALUES {
        let report = classify_with(n, a, b, 3, Algebra::Full)?;
        let dims: Vec<usize> = report.rows.iter().map(|r| r.solver_dim).collect();
        out.push((format!("n={n} a={a} b={b}: dims {dims:?}, expected {expected:?}"), dims == expected));
    }
    Ok(out)
}

/// Runs criteria 1 to 7 at `n ∈ {1, 2}` with a fixed seed. The report holds
/// no timings, so repeated runs are byte-identical.
pub fn cmd_selftest() -> Result<SelftestReport> {
    let seed = SELFTEST_SEED;
    let mut criteria = vec![
        criterion(1, "exactness", suite_results(seed, 200, &["ring", "exterior", "calculus"], false)),
        criterion(2, "sl2 relations and projections", suite_results(seed, 200, &["sl2"], false)),
        criterion(3, "worked values", suite_results(seed, 1, &["worked"], false)),
        criterion(4, "composition identities", suite_results(seed, 50, &["composition"], false)),
        criterion(5, "equivariance", suite_results(seed, 50, &["equivariance"], true)),
        criterion(6, "symplectic invariants", grid_results(Algebra::SpOnly)?),
    ];
    let mut full = grid_results(Algebra::Full)?;
    full.extend(spot_results()?);
    criteria.push(criterion(7, "natural operator classification", full));
    let pass = criteria.iter().all(|c| c.pass);
    Ok(SelftestReport { schema_version: SCHEMA_VERSION, command: "selftest", seed, criteria, pass })
}
