//! A named suite of randomized identity checks. Every check draws from its
//! own seeded stream, so a single check can be rerun in isolation with the
//! same inputs.

use std::collections::BTreeMap;
use std::thread;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::calculus::{
    contact_field_from_h, equivariance_residual, exterior_derivative, lie_derivative, ContactContext, FormOperator,
};
use crate::coeff_ring::{int, Polynomial, Rational, Var};
use crate::exterior::{parse_form, DifferentialForm, Word};
use crate::lefschetz::{
    decomposition_indices, lambda_l_coefficient, lefschetz_L, lefschetz_dual, lefschetz_dual_power,
    primitive_projections, sl2_table, HorizontalForm,
};
use crate::linalg::{integer_row, solve_square, Echelon};
use crate::natural_ops::{
    admissible_indices, apply_P, q_via_composition, q_via_xi, rumin_via_composition, rumin_via_xi, wedge_power_alpha,
    ControlOperator, NaturalOperator,
};
use crate::random::FormSampler;

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
    /// Restrict to one group or one check name.
    pub only: Option<String>,
    /// Also run the non-natural control operators, which must fail.
    pub negative_controls: bool,
}

impl CheckConfig {
    pub fn new(n: usize, seed: u64, samples: usize) -> Self {
        CheckConfig { n, seed, samples, max_degree: 3, only: None, negative_controls: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub group: String,
    pub n: usize,
    pub samples: usize,
    pub failures: usize,
    /// Controls are expected to fail on at least one sample.
    pub expect_failure: bool,
    pub pass: bool,
    pub detail: Option<String>,
    pub reproduce: String,
}

type CheckFn = fn(&mut FormSampler) -> Result<(), String>;

struct CheckSpec {
    name: &'static str,
    group: &'static str,
    /// Deterministic checks run once regardless of the sample count.
    once: bool,
    control: bool,
    run: CheckFn,
}

const fn spec(name: &'static str, group: &'static str, run: CheckFn) -> CheckSpec {
    CheckSpec { name, group, once: false, control: false, run }
}

const fn once(name: &'static str, group: &'static str, run: CheckFn) -> CheckSpec {
    CheckSpec { name, group, once: true, control: false, run }
}

const fn control(name: &'static str, run: CheckFn) -> CheckSpec {
    CheckSpec { name, group: "controls", once: false, control: true, run }
}

const SUITE: &[CheckSpec] = &[
    spec("ring_associativity", "ring", ring_associativity),
    spec("ring_distributivity", "ring", ring_distributivity),
    spec("partials_commute", "ring", partials_commute),
    spec("leibniz_rule", "ring", leibniz_rule),
    spec("wedge_associativity", "exterior", wedge_associativity),
    spec("graded_commutativity", "exterior", graded_commutativity),
    spec("interior_antiderivation", "exterior", interior_antiderivation),
    spec("restriction_morphism", "exterior", restriction_morphism),
    spec("d_squared_zero", "exterior", d_squared_zero),
    spec("d_leibniz", "exterior", d_leibniz),
    spec("lie_commutes_with_d", "calculus", lie_commutes_with_d),
    spec("contact_field_equations", "calculus", contact_field_equations),
    spec("lie_bracket", "calculus", lie_bracket),
    once("sl2_commutator", "sl2", sl2_commutator),
    spec("lambda_l_relation", "sl2", lambda_l_relation),
    spec("reconstruction", "sl2", reconstruction),
    spec("primitive_power_vanishes", "sl2", primitive_power_vanishes),
    once("projection_oracle", "sl2", projection_oracle),
    spec("constant_identities", "sl2", constant_identities),
    once("worked_values", "worked", worked_values),
    spec("p_after_p", "composition", p_after_p),
    spec("p_d_p", "composition", p_d_p),
    spec("q_paths_agree", "composition", q_paths_agree),
    spec("rumin_paths_agree", "composition", rumin_paths_agree),
    spec("rumin_horizontal", "composition", rumin_horizontal),
    spec("rumin_closed", "composition", rumin_closed),
    spec("rumin_after_d", "composition", rumin_after_d),
    spec("p_output_structure", "composition", p_output_structure),
    spec("p_lift_independence", "composition", p_lift_independence),
    spec("equivariance_id_d", "equivariance", equivariance_id_d),
    spec("equivariance_p", "equivariance", equivariance_p),
    spec("equivariance_q", "equivariance", equivariance_q),
    spec("equivariance_rumin", "equivariance", equivariance_rumin),
    control("control_wedge_dz", control_wedge_dz),
    control("control_reeb_interior", control_reeb_interior),
    control("control_reeb_lie", control_reeb_lie),
];

/// Names of all groups, in suite order.
pub fn groups() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for s in SUITE {
        if !out.contains(&s.group) {
            out.push(s.group);
        }
    }
    out
}

/// Names of all checks, in suite order.
pub fn check_names() -> Vec<&'static str> {
    SUITE.iter().map(|s| s.name).collect()
}

fn selected(spec: &CheckSpec, cfg: &CheckConfig) -> bool {
    if spec.control && !cfg.negative_controls {
        return false;
    }
    match &cfg.only {
        None => true,
        Some(f) => f == spec.name || f == spec.group,
    }
}

fn run_one(index: usize, spec: &CheckSpec, cfg: &CheckConfig) -> CheckOutcome {
    let mut sampler = FormSampler::with_stream(cfg.n, cfg.seed, index as u64, cfg.max_degree);
    let samples = if spec.once { 1 } else { cfg.samples };
    let mut failures = 0;
    let mut detail = None;
    for _ in 0..samples {
        if let Err(msg) = (spec.run)(&mut sampler) {
            failures += 1;
            detail.get_or_insert(msg);
        }
    }
    let pass = if spec.control { failures > 0 } else { failures == 0 };
    if spec.control && pass {
        detail = Some(format!("nonzero residual on {failures} of {samples} samples, as expected"));
    }
    CheckOutcome {
        name: spec.name.to_string(),
        group: spec.group.to_string(),
        n: cfg.n,
        samples,
        failures,
        expect_failure: spec.control,
        pass,
        detail,
        reproduce: format!(
            "contact-forms check --n {} --seed {} --samples {} --max-degree {} --only {}{}",
            cfg.n,
            cfg.seed,
            cfg.samples,
            cfg.max_degree,
            spec.name,
            if spec.control { " --negative-controls" } else { "" }
        ),
    }
}

/// Runs the selected checks concurrently; results come back in suite order.
pub fn run_checks(cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let chosen: Vec<(usize, &CheckSpec)> = SUITE.iter().enumerate().filter(|(_, s)| selected(s, cfg)).collect();
    let mut results: BTreeMap<usize, CheckOutcome> = BTreeMap::new();
    thread::scope(|scope| {
        let handles: Vec<_> =
            chosen.iter().map(|&(index, spec)| (index, scope.spawn(move || run_one(index, spec, cfg)))).collect();
        for (index, h) in handles {
            results.insert(index, h.join().expect("check thread panicked"));
        }
    });
    results.into_values().collect()
}

fn expect_zero(form: &DifferentialForm, what: &str) -> Result<(), String> {
    if form.is_zero() {
        Ok(())
    } else {
        Err(format!("{what}: residual {form}"))
    }
}

fn expect_eq(left: &DifferentialForm, right: &DifferentialForm, what: &str) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} != {right}"))
    }
}

fn expect_poly_eq(left: &Polynomial, right: &Polynomial, what: &str) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} != {right}"))
    }
}

fn err(e: crate::error::Error) -> String {
    e.to_string()
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn add(a: &DifferentialForm, b: &DifferentialForm) -> Result<DifferentialForm, String> {
    a.checked_add(b).map_err(err)
}

fn sub(a: &DifferentialForm, b: &DifferentialForm) -> Result<DifferentialForm, String> {
    a.checked_sub(b).map_err(err)
}

fn horizontal(form: DifferentialForm) -> Result<HorizontalForm, String> {
    HorizontalForm::try_from(form).map_err(err)
}

// ring

fn ring_associativity(s: &mut FormSampler) -> Result<(), String> {
    let (p, q, r) = (s.polynomial(), s.polynomial(), s.polynomial());
    expect_poly_eq(&(&(&p * &q) * &r), &(&p * &(&q * &r)), "(pq)r = p(qr)")?;
    expect_poly_eq(&(&(&p + &q) + &r), &(&p + &(&q + &r)), "(p+q)+r = p+(q+r)")
}

fn ring_distributivity(s: &mut FormSampler) -> Result<(), String> {
    let (p, q, r) = (s.polynomial(), s.polynomial(), s.polynomial());
    expect_poly_eq(&(&p * &(&q + &r)), &(&(&p * &q) + &(&p * &r)), "p(q+r) = pq+pr")
}

fn partials_commute(s: &mut FormSampler) -> Result<(), String> {
    let p = s.polynomial();
    let n = s.n();
    for u in Var::all(n) {
        for v in Var::all(n) {
            expect_poly_eq(&p.partial(u).partial(v), &p.partial(v).partial(u), "mixed partials")?;
        }
    }
    Ok(())
}

fn leibniz_rule(s: &mut FormSampler) -> Result<(), String> {
    let (p, q) = (s.polynomial(), s.polynomial());
    for v in Var::all(s.n()) {
        let left = (&p * &q).partial(v);
        let right = &(&p.partial(v) * &q) + &(&p * &q.partial(v));
        expect_poly_eq(&left, &right, "product rule")?;
    }
    Ok(())
}

// exterior

fn random_degrees(s: &mut FormSampler, count: usize) -> Vec<usize> {
    let top = 2 * s.n() + 1;
    (0..count).map(|_| s.degree_up_to(top)).collect()
}

fn wedge_associativity(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 3);
    let (a, b, c) = (s.form(d[0]), s.form(d[1]), s.form(d[2]));
    expect_eq(&a.wedge(&b).wedge(&c), &a.wedge(&b.wedge(&c)), "(a^b)^c = a^(b^c)")
}

fn graded_commutativity(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 2);
    let (a, b) = (s.form(d[0]), s.form(d[1]));
    let swapped = b.wedge(&a).scale(&sign(d[0] * d[1] % 2 == 1));
    expect_eq(&a.wedge(&b), &swapped, "a^b = (-1)^{|a||b|} b^a")
}

fn interior_antiderivation(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 2);
    let (a, b, x) = (s.form(d[0]), s.form(d[1]), s.vector_field());
    let left = a.wedge(&b).interior(&x);
    if d[0] + d[1] == 0 {
        return expect_zero(&left, "interior of a function");
    }
    let mut right = DifferentialForm::zero(s.n(), d[0] + d[1] - 1);
    if d[0] > 0 {
        right = add(&right, &a.interior(&x).wedge(&b))?;
    }
    if d[1] > 0 {
        right = add(&right, &a.wedge(&b.interior(&x)).scale(&sign(d[0] % 2 == 1)))?;
    }
    expect_eq(&left, &right, "i_X(a^b)")
}

fn restriction_morphism(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 2);
    let (a, b) = (s.form(d[0]), s.form(d[1]));
    let left = a.wedge(&b).restrict_to_contact_plane();
    let right = a.restrict_to_contact_plane().wedge(&b.restrict_to_contact_plane());
    expect_eq(&left, &right, "(a^b)|Q = a|Q ^ b|Q")
}

fn d_squared_zero(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 1)[0];
    let w = s.form(d);
    expect_zero(&exterior_derivative(&exterior_derivative(&w)), "d(dw)")
}

fn d_leibniz(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 2);
    let (a, b) = (s.form(d[0]), s.form(d[1]));
    let left = exterior_derivative(&a.wedge(&b));
    let right =
        add(&exterior_derivative(&a).wedge(&b), &a.wedge(&exterior_derivative(&b)).scale(&sign(d[0] % 2 == 1)))?;
    expect_eq(&left, &right, "d(a^b)")
}

// calculus

fn lie_commutes_with_d(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 1)[0];
    let (w, x) = (s.form(d), s.vector_field());
    expect_eq(
        &lie_derivative(&x, &exterior_derivative(&w)),
        &exterior_derivative(&lie_derivative(&x, &w)),
        "L_X d = d L_X",
    )
}

fn contact_field_equations(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let h = s.polynomial();
    let ctx = ContactContext::new(n);
    let x = contact_field_from_h(&h);
    let alpha_x = ctx.alpha.interior(&x);
    expect_eq(&alpha_x, &DifferentialForm::function(h.clone()), "alpha(X) = h")?;
    let dh = exterior_derivative(&DifferentialForm::function(h.clone()));
    let lhs = sub(&add(&ctx.dalpha.interior(&x), &dh)?, &ctx.alpha.mul_function(&h.partial(Var::Z)))?;
    expect_zero(&lhs, "i_X dα + dh - h_z α")
}

fn lie_bracket(s: &mut FormSampler) -> Result<(), String> {
    let d = random_degrees(s, 1)[0];
    let w = s.form(d);
    let (x, y) = (s.vector_field(), s.vector_field());
    let left = lie_derivative(&x.bracket(&y), &w);
    let right = sub(&lie_derivative(&x, &lie_derivative(&y, &w)), &lie_derivative(&y, &lie_derivative(&x, &w)))?;
    expect_eq(&left, &right, "L_[X,Y] = [L_X, L_Y]")
}

// sl2

fn lambda_then_l(phi: &HorizontalForm) -> DifferentialForm {
    if phi.degree() < 2 {
        DifferentialForm::zero(phi.n(), phi.degree())
    } else {
        lefschetz_L(&lefschetz_dual(phi), 1).into_form()
    }
}

fn sl2_commutator(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    for a in 0..=2 * n {
        for w in Word::all_of_degree(2 * n, a) {
            let phi = horizontal(DifferentialForm::monomial(Polynomial::one(n), w))?;
            let l_lambda = lambda_then_l(&phi);
            let lambda_l = lefschetz_dual(&lefschetz_L(&phi, 1));
            let comm = if a + 2 <= 2 * n { sub(&l_lambda, lambda_l.as_form())? } else { l_lambda };
            let expected = phi.as_form().scale(&int(a as i64 - n as i64));
            expect_eq(&comm, &expected, &format!("[L,Λ] on {phi}"))?;
        }
    }
    Ok(())
}

fn random_horizontal(s: &mut FormSampler) -> Result<HorizontalForm, String> {
    let a = s.degree_up_to(2 * s.n());
    horizontal(s.horizontal_form(a))
}

fn lambda_l_relation(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let phi = random_horizontal(s)?;
    let dec = primitive_projections(&phi).map_err(err)?;
    for (&i, pi) in &dec.components {
        for j in 1..=n - i + 1 {
            let left = lefschetz_dual(&lefschetz_L(pi, j));
            let right = lefschetz_L(pi, j - 1).as_form().scale(&lambda_l_coefficient(n, i, j));
            expect_eq(left.as_form(), &right, &format!("Λ L^{j} π_{i}"))?;
        }
    }
    Ok(())
}

fn reconstruction(s: &mut FormSampler) -> Result<(), String> {
    let phi = random_horizontal(s)?;
    let dec = primitive_projections(&phi).map_err(err)?;
    expect_eq(dec.reconstruct().as_form(), phi.as_form(), "Σ L^k π_i = φ")?;
    for (i, pi) in &dec.components {
        if *i >= 2 {
            expect_zero(lefschetz_dual(pi).as_form(), &format!("Λ π_{i}"))?;
        }
    }
    Ok(())
}

fn primitive_power_vanishes(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let phi = random_horizontal(s)?;
    let dec = primitive_projections(&phi).map_err(err)?;
    for (&i, pi) in &dec.components {
        expect_zero(lefschetz_L(pi, n - i + 1).as_form(), &format!("L^(n-i+1) π_{i}"))?;
    }
    Ok(())
}

/// Decomposes a constant horizontal form by solving `φ = Σ L^{k_i} π_i`
/// over explicit bases of the primitive subspaces.
pub fn decompose_by_linear_solve(phi: &HorizontalForm) -> Result<BTreeMap<usize, DifferentialForm>, String> {
    let (n, a) = (phi.n(), phi.degree());
    let target_words = Word::all_of_degree(2 * n, a);
    let one = Polynomial::one(n);
    let mut columns: Vec<(usize, DifferentialForm)> = Vec::new();
    for i in decomposition_indices(a, n) {
        let words = Word::all_of_degree(2 * n, i);
        // primitive basis: nullspace of Λ on ∧^i
        let mut ech = Echelon::new(words.len());
        if i >= 2 {
            let images: Vec<DifferentialForm> = words
                .iter()
                .map(|w| {
                    lefschetz_dual(&HorizontalForm::try_from(DifferentialForm::monomial(one.clone(), *w)).unwrap())
                        .into_form()
                })
                .collect();
            for w in Word::all_of_degree(2 * n, i - 2) {
                let row =
                    integer_row(images.iter().enumerate().map(|(c, img)| (c, img.coefficient(w).constant_term())));
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
        for v in ech.nullspace() {
            let mut p = DifferentialForm::zero(n, i);
            for (c, value) in v.iter().enumerate() {
                if !value.is_zero() {
                    p = add(&p, &DifferentialForm::monomial(Polynomial::constant(n, value.clone()), words[c]))?;
                }
            }
            columns.push((i, p));
        }
    }
    if columns.len() != target_words.len() {
        return Err(format!("primitive bases give {} columns for {} words", columns.len(), target_words.len()));
    }
    let lifted: Vec<DifferentialForm> = columns
        .iter()
        .map(|(i, p)| lefschetz_L(&HorizontalForm::try_from(p.clone()).unwrap(), (a - i) / 2).into_form())
        .collect();
    let m = target_words.iter().map(|w| lifted.iter().map(|f| f.coefficient(*w).constant_term()).collect()).collect();
    let rhs = target_words.iter().map(|w| phi.as_form().coefficient(*w).constant_term()).collect();
    let coeffs = solve_square(m, rhs).ok_or("Lefschetz images are not a basis")?;
    let mut out: BTreeMap<usize, DifferentialForm> =
        decomposition_indices(a, n).into_iter().map(|i| (i, DifferentialForm::zero(n, i))).collect();
    for ((i, p), c) in columns.iter().zip(coeffs) {
        let entry = out.get_mut(i).expect("index present");
        *entry = add(entry, &p.scale(&c))?;
    }
    Ok(out)
}

fn projection_oracle(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    for a in 0..=2 * n {
        for w in Word::all_of_degree(2 * n, a) {
            let phi = horizontal(DifferentialForm::monomial(Polynomial::one(n), w))?;
            let closed = primitive_projections(&phi).map_err(err)?;
            let solved = decompose_by_linear_solve(&phi)?;
            for (i, pi) in &solved {
                expect_eq(closed.component(*i).as_form(), pi, &format!("Π_{i}({phi})"))?;
            }
        }
    }
    Ok(())
}

fn constant_identities(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let phi = random_horizontal(s)?;
    let a = phi.degree();
    let table = sl2_table(n, a).map_err(err)?;
    let dec = primitive_projections(&phi).map_err(err)?;
    let k = |i: usize| (a - i) / 2;
    for sp in 0..=a / 2 {
        let target = lefschetz_dual_power(&phi, sp);
        let mut via_pi = DifferentialForm::zero(n, a - 2 * sp);
        for ((_, i), c) in table.c.range((sp, 0)..=(sp, usize::MAX)) {
            via_pi = add(&via_pi, &lefschetz_L(&dec.component(*i), k(*i) - sp).as_form().scale(c))?;
        }
        expect_eq(&via_pi, target.as_form(), &format!("Λ^{sp} through Π_i"))?;
        let mut via_lambda = DifferentialForm::zero(n, a - 2 * sp);
        for ((_, j), c) in table.c_double_prime.range((sp, 0)..=(sp, usize::MAX)) {
            let term = lefschetz_L(&lefschetz_dual_power(&phi, *j), j - sp);
            via_lambda = add(&via_lambda, &term.as_form().scale(c))?;
        }
        expect_eq(&via_lambda, target.as_form(), &format!("Λ^{sp} through L^(j-s) Λ^j"))?;
    }
    Ok(())
}

// worked values

fn worked_values(_: &mut FormSampler) -> Result<(), String> {
    let f = |text: &str, n: usize| parse_form(text, n).map_err(err);
    let alpha1 = ContactContext::new(1).alpha;
    let alpha2 = ContactContext::new(2).alpha;
    expect_eq(&q_via_xi(&f("x1 dy1", 1)?).map_err(err)?, &f("-dz", 1)?, "Q(x1 dy1)")?;
    expect_eq(&q_via_composition(&f("x1 dy1", 1)?).map_err(err)?, &f("-dz", 1)?, "Q(x1 dy1), composition")?;
    expect_zero(&q_via_xi(&alpha1).map_err(err)?, "Q(α)")?;
    let d = rumin_via_xi(&f("z dx1", 1)?).map_err(err)?;
    expect_eq(&d, &alpha1.wedge(&f("dx1", 1)?).scale(&int(2)), "D(z dx1) = 2 α^dx1")?;
    expect_eq(&rumin_via_composition(&f("z dx1", 1)?).map_err(err)?, &d, "D(z dx1), composition")?;
    expect_zero(&rumin_via_xi(&f("x1 dy1", 1)?).map_err(err)?, "D(x1 dy1)")?;
    expect_eq(&apply_P(2, 0, &f("dx1^dy1", 1)?).map_err(err)?, &alpha1, "P_{2,0}(dx1^dy1)")?;
    expect_eq(&apply_P(3, 1, &f("dx1^dy1^dx2", 2)?).map_err(err)?, &f("dx2", 2)?.wedge(&alpha2), "P_{3,1}(dx1^dy1^dx2)")
}

// composition identities

fn p_after_p(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    for a in 3..=2 * n {
        let w = s.form(a);
        for i in admissible_indices(a, n) {
            let first = apply_P(a, i, &w).map_err(err)?;
            for j in admissible_indices(a - 1, n) {
                expect_zero(&apply_P(a - 1, j, &first).map_err(err)?, &format!("P_{{{},{j}}} P_{{{a},{i}}}", a - 1))?;
            }
        }
    }
    Ok(())
}

fn p_d_p(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    for a in 2..=2 * n {
        let w = s.form(a);
        for i in admissible_indices(a, n) {
            let inner = apply_P(a, i, &w).map_err(err)?;
            let d_inner = exterior_derivative(&inner);
            for j in admissible_indices(a, n) {
                let out = apply_P(a, j, &d_inner).map_err(err)?;
                let what = format!("P_{{{a},{j}}} d P_{{{a},{i}}}");
                if i == j {
                    expect_eq(&out, &inner.scale(&sign(a % 2 == 1)), &what)?;
                } else {
                    expect_zero(&out, &what)?;
                }
            }
        }
    }
    Ok(())
}

fn q_paths_agree(s: &mut FormSampler) -> Result<(), String> {
    let w = s.form(s.n());
    let q = q_via_xi(&w).map_err(err)?;
    expect_eq(&q, &q_via_composition(&w).map_err(err)?, "Q via ξ = Q via P∘d")?;
    expect_zero(&exterior_derivative(&q).restrict_to_contact_plane(), "(dQω)|Q")
}

fn rumin_paths_agree(s: &mut FormSampler) -> Result<(), String> {
    let w = s.form(s.n());
    expect_eq(&rumin_via_xi(&w).map_err(err)?, &rumin_via_composition(&w).map_err(err)?, "D via ξ = D via d∘P∘d")
}

fn rumin_horizontal(s: &mut FormSampler) -> Result<(), String> {
    let w = s.form(s.n());
    expect_zero(&rumin_via_xi(&w).map_err(err)?.restrict_to_contact_plane(), "(Dω)|Q")
}

fn rumin_closed(s: &mut FormSampler) -> Result<(), String> {
    let w = s.form(s.n());
    expect_zero(&exterior_derivative(&rumin_via_xi(&w).map_err(err)?), "d(Dω)")
}

fn rumin_after_d(s: &mut FormSampler) -> Result<(), String> {
    let eta = s.form(s.n() - 1);
    expect_zero(&rumin_via_xi(&exterior_derivative(&eta)).map_err(err)?, "D(dη)")
}

fn p_output_structure(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let ctx = ContactContext::new(n);
    for a in 2..=2 * n {
        let w = s.form(a);
        for i in admissible_indices(a, n) {
            let out = apply_P(a, i, &w).map_err(err)?;
            // out = β ∧ α with β horizontal, so β = (-1)^{a} i_R out
            let beta = out.interior(&ctx.reeb).scale(&sign(a % 2 == 1));
            if beta.has_dz() {
                return Err(format!("P_{{{a},{i}}}: left factor {beta} contains dz"));
            }
            expect_eq(&beta.wedge(&ctx.alpha), &out, &format!("P_{{{a},{i}}} = β ∧ α"))?;
            expect_zero(&out.restrict_to_contact_plane(), &format!("P_{{{a},{i}}}ω restricted"))?;
        }
    }
    Ok(())
}

fn p_lift_independence(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let alpha = ContactContext::new(n).alpha;
    for a in 2..=2 * n {
        for i in admissible_indices(a, n) {
            let pi = s.horizontal_form(i);
            let noise = if i == 0 { DifferentialForm::zero(n, 0) } else { alpha.wedge(&s.form(i - 1)) };
            let k = (a - i - 2) / 2;
            expect_eq(&wedge_power_alpha(&add(&pi, &noise)?, k), &wedge_power_alpha(&pi, k), "lift independence")?;
        }
    }
    Ok(())
}

// equivariance

fn natural_operators(n: usize) -> Vec<NaturalOperator> {
    let mut ops = Vec::new();
    for a in 0..=2 * n + 1 {
        ops.push(NaturalOperator::id(n, a));
    }
    for a in 0..=2 * n {
        ops.push(NaturalOperator::ext_d(n, a));
    }
    ops
}

fn residuals_vanish(s: &mut FormSampler, ops: &[&dyn FormOperator]) -> Result<(), String> {
    let h = s.polynomial();
    for op in ops {
        let w = s.form(op.domain_degree());
        let r = equivariance_residual(*op, &h, &w).map_err(err)?;
        expect_zero(&r, &format!("{} with h = {h}", op.name()))?;
    }
    Ok(())
}

fn equivariance_id_d(s: &mut FormSampler) -> Result<(), String> {
    let ops = natural_operators(s.n());
    let refs: Vec<&dyn FormOperator> = ops.iter().map(|o| o as &dyn FormOperator).collect();
    residuals_vanish(s, &refs)
}

fn equivariance_p(s: &mut FormSampler) -> Result<(), String> {
    let n = s.n();
    let ops: Vec<NaturalOperator> = (2..=2 * n)
        .flat_map(|a| admissible_indices(a, n).into_iter().map(move |i| NaturalOperator::p(n, a, i).unwrap()))
        .collect();
    let refs: Vec<&dyn FormOperator> = ops.iter().map(|o| o as &dyn FormOperator).collect();
    residuals_vanish(s, &refs)
}

fn equivariance_q(s: &mut FormSampler) -> Result<(), String> {
    let op = NaturalOperator::q(s.n());
    residuals_vanish(s, &[&op])
}

fn equivariance_rumin(s: &mut FormSampler) -> Result<(), String> {
    let op = NaturalOperator::rumin(s.n());
    residuals_vanish(s, &[&op])
}

fn control_residual(s: &mut FormSampler, make: fn(usize, usize) -> ControlOperator) -> Result<(), String> {
    let n = s.n();
    let a = s.degree_up_to(2 * n);
    let op = make(n, a);
    residuals_vanish(s, &[&op])
}

fn control_wedge_dz(s: &mut FormSampler) -> Result<(), String> {
    control_residual(s, |n, a| ControlOperator::WedgeDz { n, a })
}

fn control_reeb_interior(s: &mut FormSampler) -> Result<(), String> {
    control_residual(s, |n, a| ControlOperator::ReebInterior { n, a: a.max(1) })
}

fn control_reeb_lie(s: &mut FormSampler) -> Result<(), String> {
    control_residual(s, |n, a| ControlOperator::ReebLie { n, a })
}
