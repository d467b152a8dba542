mod common;

use common::*;
use num_traits::Zero;

use contact_forms::calculus::{contact_field_from_h, lie_derivative, FormOperator};
use contact_forms::coeff_ring::{int, Polynomial, Rational, Var};
use contact_forms::exterior::DifferentialForm;
use contact_forms::invariants::{
    classify_with, contraction_spanning_set, induced_action, isotropy_generators, r_space_operators,
    solve_intertwiners, symbol_of, Algebra, GeneratorLabel, Space, SymbolMap, TensorSpaceBasis,
};
use contact_forms::natural_ops::NaturalOperator;

fn vector_of(form: &DifferentialForm, basis: &TensorSpaceBasis) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); basis.dim()];
    for (w, c) in form.terms() {
        v[basis.word_index(*w).unwrap()] = c.constant_term();
    }
    v
}

fn act(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a.clone() * b.clone()).fold(Rational::zero(), |s, t| s + t))
        .collect()
}

#[test]
fn generator_fields_fix_the_origin_and_rescale_alpha() {
    for n in 1..=2 {
        for g in isotropy_generators(n, Algebra::Full) {
            let h = g.hamiltonian();
            let x = contact_field_from_h(&h);
            assert!(x.vanishes_at_origin(), "{}", g.label);
            let scale = if g.label == GeneratorLabel::Scaling { int(2) } else { int(0) };
            let lie = lie_derivative(&x, &alpha(n));
            assert_eq!(lie, alpha(n).mul_function(&h.partial(Var::Z)), "{}", g.label);
            assert_eq!(lie.at_origin(), alpha(n).at_origin().scale(&scale), "{}", g.label);
        }
    }
}

#[test]
fn symplectic_generators_preserve_alpha_and_omega_at_origin() {
    for n in 1..=2 {
        let one_forms = TensorSpaceBasis::exterior(n, 1, Space::Full);
        let two_forms = TensorSpaceBasis::exterior(n, 2, Space::Full);
        let a0 = vector_of(&alpha(n).at_origin(), &one_forms);
        let w0 = vector_of(&omega0(n), &two_forms);
        for g in isotropy_generators(n, Algebra::Full) {
            let on_alpha = act(&induced_action(&g, &one_forms).to_dense(), &a0);
            let on_omega = act(&induced_action(&g, &two_forms).to_dense(), &w0);
            match g.label {
                GeneratorLabel::Scaling => {
                    assert_eq!(on_alpha, a0.iter().map(|c| c.clone() * int(-2)).collect::<Vec<_>>());
                    assert_eq!(on_omega, w0.iter().map(|c| c.clone() * int(-2)).collect::<Vec<_>>());
                }
                GeneratorLabel::Ex(_) | GeneratorLabel::Ey(_) => {
                    assert!(on_alpha.iter().all(Zero::is_zero));
                }
                _ => {
                    assert!(on_alpha.iter().all(Zero::is_zero), "{}", g.label);
                    assert!(on_omega.iter().all(Zero::is_zero), "{}", g.label);
                }
            }
        }
    }
}

#[test]
fn contraction_maps_are_symplectic_intertwiners() {
    for n in 1..=2 {
        let gens = isotropy_generators(n, Algebra::SpOnly);
        for a in 0..=2 * n {
            for b in 0..=2 * n {
                for r in 0..=2 {
                    for map in contraction_spanning_set(n, a, r, b) {
                        assert!(map.is_intertwiner(&gens), "n={n} a={a} r={r} b={b}: {}", map.label);
                    }
                }
            }
        }
    }
}

#[test]
fn operator_symbols_are_full_intertwiners() {
    for n in 1..=2 {
        let gens = isotropy_generators(n, Algebra::Full);
        for a in 0..=2 * n + 1 {
            for b in a.saturating_sub(1)..=(a + 1).min(2 * n + 1) {
                for op in r_space_operators(n, a, b) {
                    assert!(symbol_of(&op).unwrap().is_intertwiner(&gens), "n={n}: {op}");
                }
            }
        }
    }
}

/// A full intertwiner that vanishes on the horizontal inputs is zero.
#[test]
fn full_intertwiners_are_determined_by_horizontal_inputs() {
    let dz = |n: usize| 2 * n;
    for n in 1..=2 {
        for a in 0..2 * n {
            for b in 0..=2 * n + 1 {
                for r in 0..=3 {
                    let sol = solve_intertwiners(n, a, r, b, Algebra::Full);
                    let domain = TensorSpaceBasis::new(n, a, r, Space::Full);
                    let horizontal: Vec<usize> = domain
                        .elements()
                        .iter()
                        .enumerate()
                        .filter(|(_, (w, s))| !w.contains(dz(n)) && s.factors().all(|p| p != dz(n)))
                        .map(|(k, _)| k)
                        .collect();
                    let restricted: Vec<Vec<Rational>> = sol
                        .basis
                        .iter()
                        .map(|m| m.matrix.iter().flat_map(|row| horizontal.iter().map(|&k| row[k].clone())).collect())
                        .collect();
                    assert_eq!(dense_rank(&restricted), sol.dimension, "n={n} a={a} b={b} r={r}");
                }
            }
        }
    }
}

/// The order-r symbol of an operator read off from its action on
/// `x_{p_1} ⋯ x_{p_r} φ` at the origin.
fn symbol_by_application(op: &dyn FormOperator, n: usize, a: usize, r: usize, b: usize) -> SymbolMap {
    SymbolMap::from_fn(n, a, r, b, Space::Full, op.name(), |phi, taus| {
        let mut f = Polynomial::one(n);
        for tau in taus {
            let pos = tau.terms().next().unwrap().0.positions().next().unwrap();
            f = &f * &Polynomial::var(n, Var::from_position(pos, n));
        }
        op.apply(&phi.mul_function(&f)).unwrap().at_origin()
    })
}

fn same_span(left: &[SymbolMap], right: &[SymbolMap]) -> bool {
    let l: Vec<_> = left.iter().map(SymbolMap::flatten).collect();
    let r: Vec<_> = right.iter().map(SymbolMap::flatten).collect();
    let both: Vec<_> = l.iter().chain(&r).cloned().collect();
    let rank = dense_rank(&both);
    rank == dense_rank(&l) && rank == dense_rank(&r)
}

#[test]
fn tabulated_symbols_span_the_applied_symbols() {
    for n in 1usize..=2 {
        for a in 0..=2 * n + 1 {
            for b in a.saturating_sub(1)..=(a + 1).min(2 * n + 1) {
                let ops = r_space_operators(n, a, b);
                for r in 0..=2 {
                    let of_order: Vec<&NaturalOperator> = ops.iter().filter(|o| o.order == r).collect();
                    let table: Vec<SymbolMap> = of_order.iter().map(|o| symbol_of(o).unwrap()).collect();
                    let applied: Vec<SymbolMap> =
                        of_order.iter().map(|o| symbol_by_application(*o, n, a, r, b)).collect();
                    assert!(same_span(&table, &applied), "n={n} a={a} b={b} r={r}");
                }
            }
        }
    }
}

#[test]
fn q_and_rumin_symbols_lie_in_the_span() {
    for n in 1..=2 {
        for (op, r, b) in [(NaturalOperator::q(n), 1, n), (NaturalOperator::rumin(n), 2, n + 1)] {
            let table: Vec<SymbolMap> =
                r_space_operators(n, n, b).iter().filter(|o| o.order == r).map(|o| symbol_of(o).unwrap()).collect();
            let applied = symbol_by_application(&op, n, n, r, b);
            assert!(!applied.is_zero(), "{op} has a nonzero symbol");
            let mut with = table.clone();
            with.push(applied);
            assert!(same_span(&table, &with), "n={n}: {op}");
        }
    }
}

#[test]
fn triviality_outside_neighbouring_degrees() {
    for a in 0..=3 {
        for b in 0..=3 {
            if b + 1 < a || b > a + 1 {
                let report = classify_with(1, a, b, 3, Algebra::Full).unwrap();
                assert!(report.rows.iter().all(|row| row.solver_dim == 0 && row.pass), "a={a} b={b}");
            }
        }
    }
}

#[test]
fn spot_dimensions() {
    let dims = |n, a, b, alg| -> Vec<usize> {
        classify_with(n, a, b, 3, alg).unwrap().rows.iter().map(|r| r.solver_dim).collect()
    };
    assert_eq!(dims(1, 1, 2, Algebra::Full), vec![0, 1, 1, 0]);
    assert_eq!(dims(2, 2, 1, Algebra::Full), vec![1, 0, 0, 0]);
    assert_eq!(dims(2, 3, 4, Algebra::Full), vec![0, 1, 1, 0]);
    assert_eq!(dims(2, 2, 2, Algebra::Full), vec![1, 2, 0, 0]);
    assert_eq!(dims(2, 2, 2, Algebra::SpOnly), vec![2, 0, 1, 0]);
}
