mod common;

use common::*;
use itertools::Itertools;
use proptest::prelude::*;

use contact_forms::calculus::{contact_field_from_h, exterior_derivative, lie_derivative, ContactContext};
use contact_forms::coeff_ring::{Polynomial, Rational, Var};
use contact_forms::exterior::{parse_form, DifferentialForm, VectorField, Word};
use contact_forms::random::FormSampler;

fn sampler(n: usize, seed: u64) -> FormSampler {
    FormSampler::new(n, seed, 3)
}

fn field_at(x: &VectorField, point: &[Rational]) -> Vec<Rational> {
    x.components().iter().map(|f| f.eval(point)).collect()
}

fn ones(n: usize) -> Polynomial {
    Polynomial::one(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn restriction_is_evaluation_on_the_contact_frame(seed in any::<u64>(), n in 1usize..=2, k in 0usize..=4) {
        let k = k.min(2 * n);
        let mut s = sampler(n, seed);
        let omega = s.form(k);
        let point = sample_point(n, seed);
        let restricted = omega.restrict_to_contact_plane();
        let frame = contact_frame(n, &point);
        for subset in (0..2 * n).combinations(k) {
            let coordinate: Vec<_> = subset.iter().map(|&c| unit(2 * n + 1, c)).collect();
            let framed: Vec<_> = subset.iter().map(|&c| frame[c].clone()).collect();
            prop_assert_eq!(eval_form(&restricted, &coordinate, &point), eval_form(&omega, &framed, &point));
        }
    }

    #[test]
    fn interior_inserts_in_the_first_slot(seed in any::<u64>(), n in 1usize..=2, k in 1usize..=3) {
        let mut s = sampler(n, seed);
        let omega = s.form(k);
        let x = s.vector_field();
        let point = sample_point(n, seed);
        let xp = field_at(&x, &point);
        let contracted = omega.interior(&x);
        for rest in (0..=2 * n).combinations(k - 1) {
            let vs: Vec<_> = rest.iter().map(|&c| unit(2 * n + 1, c)).collect();
            let mut full = vec![xp.clone()];
            full.extend(vs.iter().cloned());
            prop_assert_eq!(eval_form(&contracted, &vs, &point), eval_form(&omega, &full, &point));
        }
    }

    #[test]
    fn wedge_of_covectors_is_a_determinant(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = sampler(n, seed);
        let (a, b) = (s.form(1), s.form(1));
        let point = sample_point(n, seed);
        let dim = 2 * n + 1;
        for (i, j) in (0..dim).tuple_combinations() {
            let (u, v) = (unit(dim, i), unit(dim, j));
            let expected = eval_form(&a, &[u.clone()], &point) * eval_form(&b, &[v.clone()], &point)
                - eval_form(&a, &[v.clone()], &point) * eval_form(&b, &[u.clone()], &point);
            prop_assert_eq!(eval_form(&a.wedge(&b), &[u, v], &point), expected);
        }
    }

    #[test]
    fn d_of_one_form_matches_coordinate_formula(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = sampler(n, seed);
        let omega = s.form(1);
        let point = sample_point(n, seed);
        let d = exterior_derivative(&omega);
        let vars: Vec<Var> = Var::all(n).collect();
        let coefficient = |k: usize| {
            omega.coefficient(Word::from_positions([vars[k].position(n)]))
        };
        // dω(∂_i, ∂_j) = ∂_i ω_j - ∂_j ω_i
        for (i, j) in (0..=2 * n).tuple_combinations() {
            let expected = coefficient(j).partial(vars[i]).eval(&point) - coefficient(i).partial(vars[j]).eval(&point);
            let value = eval_form(&d, &[unit(2 * n + 1, i), unit(2 * n + 1, j)], &point);
            prop_assert_eq!(value, expected);
        }
    }

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=5) {
        let mut s = sampler(n, seed);
        let omega = s.form(k.min(2 * n + 1));
        prop_assert!(exterior_derivative(&exterior_derivative(&omega)).is_zero());
    }

    #[test]
    fn display_parses_back(seed in any::<u64>(), n in 1usize..=2, k in 0usize..=5) {
        let mut s = sampler(n, seed);
        let omega = s.form(k.min(2 * n + 1));
        let text = omega.to_string();
        prop_assert_eq!(parse_form(&text, n).unwrap(), omega);
    }

    #[test]
    fn contact_field_has_explicit_components(seed in any::<u64>(), n in 1usize..=3) {
        let mut s = sampler(n, seed);
        let h = s.polynomial();
        let x = contact_field_from_h(&h);
        let hz = h.partial(Var::Z);
        let mut euler = Polynomial::zero(n);
        for k in 1..=n {
            let xk = Polynomial::var(n, Var::X(k));
            prop_assert_eq!(x.component(Var::X(k)), &(&(&hz * &xk) - &h.partial(Var::Y(k))));
            prop_assert_eq!(x.component(Var::Y(k)), &h.partial(Var::X(k)));
            euler = &euler + &(&h.partial(Var::X(k)) * &xk);
        }
        prop_assert_eq!(x.component(Var::Z), &(&h - &euler));
    }

    #[test]
    fn contact_fields_rescale_alpha(seed in any::<u64>(), n in 1usize..=2) {
        let mut s = sampler(n, seed);
        let h = s.polynomial();
        let a = alpha(n);
        let expected = a.mul_function(&h.partial(Var::Z));
        prop_assert_eq!(lie_derivative(&contact_field_from_h(&h), &a), expected);
    }
}

#[test]
fn hand_built_contact_data_matches_context() {
    for n in 1..=3 {
        let ctx = ContactContext::new(n);
        assert_eq!(ctx.alpha, alpha(n));
        assert_eq!(ctx.dalpha, omega0(n));
        assert_eq!(exterior_derivative(&ctx.alpha), omega0(n));
        let top = (0..n).fold(ctx.alpha.clone(), |acc, _| acc.wedge(&ctx.dalpha));
        assert!(!top.is_zero());
        assert_eq!(ctx.alpha.interior(&ctx.reeb), DifferentialForm::function(ones(n)));
        assert!(ctx.dalpha.interior(&ctx.reeb).is_zero());
    }
}

#[test]
fn parse_rejects_bad_input() {
    assert!(parse_form("dx1 +", 1).is_err());
    assert!(parse_form("dx2", 1).is_err());
    assert!(parse_form("dx1 + dx1^dy1", 1).is_err());
    assert!(parse_form("x1 (dy1", 1).is_err());
}
