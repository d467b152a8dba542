mod common;

use common::*;
use proptest::prelude::*;

use contact_forms::coeff_ring::{int, Polynomial};
use contact_forms::error::Error;
use contact_forms::exterior::{DifferentialForm, Word};
use contact_forms::lefschetz::{
    decomposition_indices, is_primitive, lambda_l_coefficient, lefschetz_L, lefschetz_dual, lefschetz_dual_power,
    primitive_projections, sl2_constants, sl2_table, HorizontalForm, Sl2Target,
};
use contact_forms::random::FormSampler;

fn basis_form(n: usize, w: Word) -> HorizontalForm {
    HorizontalForm::try_from(DifferentialForm::monomial(Polynomial::one(n), w)).unwrap()
}

#[test]
fn projections_match_kernel_oracle_everywhere() {
    for n in 1..=3 {
        for a in 0..=2 * n {
            for w in Word::all_of_degree(2 * n, a) {
                let phi = basis_form(n, w);
                let closed = primitive_projections(&phi).unwrap();
                let oracle = oracle_decomposition(phi.as_form());
                assert_eq!(closed.components.len(), oracle.len());
                for (i, pi) in oracle {
                    assert_eq!(closed.component(i).as_form(), &pi, "n = {n}, φ = {phi}, i = {i}");
                }
            }
        }
    }
}

#[test]
fn kernel_primitives_are_killed_by_lambda() {
    for n in 1..=3 {
        for i in 0..=n {
            let basis = primitive_basis(n, i);
            let expected =
                Word::all_of_degree(2 * n, i).len() - if i >= 2 { Word::all_of_degree(2 * n, i - 2).len() } else { 0 };
            assert_eq!(basis.len(), expected);
            for p in basis {
                let p = HorizontalForm::try_from(p).unwrap();
                assert!(is_primitive(&p));
                if i >= 2 {
                    assert!(lefschetz_dual(&p).is_zero());
                }
            }
        }
    }
}

#[test]
fn constant_tables_exist_for_small_n() {
    for n in 1..=3 {
        for a in 0..=2 * n {
            let table = sl2_table(n, a).unwrap_or_else(|e| panic!("n = {n}, a = {a}: {e}"));
            for i in decomposition_indices(a, n) {
                // Λ^0 Π_i = Π_i, so c(0, i) = 1
                assert_eq!(table.get(Sl2Target::C { s: 0, i }).unwrap(), int(1));
            }
        }
    }
    assert!(matches!(sl2_table(1, 3), Err(Error::DegreeOutOfRange { .. })));
    assert!(matches!(sl2_constants(2, 2, Sl2Target::C { s: 0, i: 1 }), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn lambda_l_coefficient_values() {
    // Λ L 1 = Λ ω₀ = n
    for n in 1..=4 {
        assert_eq!(lambda_l_coefficient(n, 0, 1), int(n as i64));
    }
    // Λ L^2 1 = 2(n - 1) L 1
    assert_eq!(lambda_l_coefficient(3, 0, 2), int(4));
    // j = n - i + 1 gives zero
    assert_eq!(lambda_l_coefficient(2, 1, 2), int(0));
}

#[test]
fn lambda_contracts_symplectic_pairs() {
    let w = omega0(2);
    let phi = HorizontalForm::try_from(w).unwrap();
    assert_eq!(lefschetz_dual(&phi).as_form(), &DifferentialForm::constant(2, int(2)));
    let top = HorizontalForm::try_from(l_power(&DifferentialForm::constant(2, int(1)), 2)).unwrap();
    // ω₀² = 2 dx1^dy1^dx2^dy2, Λ² of it is 2·2·1 = 4
    assert_eq!(lefschetz_dual_power(&top, 2).as_form(), &DifferentialForm::constant(2, int(4)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn polynomial_forms_decompose_like_the_oracle(seed in any::<u64>(), n in 1usize..=3, a in 0usize..=6) {
        let a = a.min(2 * n);
        let phi = FormSampler::new(n, seed, 2).horizontal_form(a);
        let dec = primitive_projections(&HorizontalForm::try_from(phi.clone()).unwrap()).unwrap();
        prop_assert_eq!(dec.reconstruct().into_form(), phi.clone());
        for i in decomposition_indices(a, n) {
            prop_assert_eq!(dec.component(i).into_form(), oracle_component(&phi, i));
        }
    }

    #[test]
    fn commutator_is_degree_minus_n(seed in any::<u64>(), n in 1usize..=3, a in 2usize..=4) {
        let a = a.min(2 * n - 2).max(2);
        let phi = HorizontalForm::try_from(FormSampler::new(n, seed, 2).horizontal_form(a)).unwrap();
        let l_lambda = lefschetz_L(&lefschetz_dual(&phi), 1);
        let lambda_l = lefschetz_dual(&lefschetz_L(&phi, 1));
        let comm = l_lambda.as_form().checked_sub(lambda_l.as_form()).unwrap();
        prop_assert_eq!(comm, phi.as_form().scale(&int(a as i64 - n as i64)));
    }

    #[test]
    fn primitive_projections_are_primitive(seed in any::<u64>(), n in 1usize..=3, a in 0usize..=6) {
        let a = a.min(2 * n);
        let phi = HorizontalForm::try_from(FormSampler::new(n, seed, 2).horizontal_form(a)).unwrap();
        for (i, pi) in primitive_projections(&phi).unwrap().components {
            prop_assert!(lefschetz_L(&pi, n + 1 - i).is_zero());
            for j in 1..=n + 1 - i {
                let lhs = lefschetz_dual(&lefschetz_L(&pi, j));
                let rhs = lefschetz_L(&pi, j - 1).as_form().scale(&int(-(j as i64) * (i as i64 - n as i64 + j as i64 - 1)));
                prop_assert_eq!(lhs.as_form(), &rhs);
            }
        }
    }
}

#[test]
fn dz_forms_are_not_horizontal() {
    let f = DifferentialForm::monomial(Polynomial::one(1), Word::from_positions([2]));
    assert!(matches!(HorizontalForm::try_from(f), Err(Error::NotHorizontal)));
}
