//! The contraction maps `L^t Λ^s` (with `τ` wedged before or after) that
//! span the symplectic intertwiners on horizontal tensor spaces.

use super::tensor::{Space, SymbolMap};
use crate::exterior::DifferentialForm;
use crate::lefschetz::{lefschetz_L, lefschetz_dual_power, HorizontalForm};

fn lt_ls(phi: &DifferentialForm, t: usize, s: usize) -> DifferentialForm {
    let h = HorizontalForm::try_from(phi.clone()).expect("horizontal input");
    lefschetz_L(&lefschetz_dual_power(&h, s), t).into_form()
}

/// Pairs `(s, t)` with `lo ≤ s ≤ s_max`, `0 ≤ t ≤ t_max`, `t - s = shift`.
fn index_pairs(lo: i64, s_max: i64, t_max: i64, shift: i64) -> Vec<(usize, usize)> {
    (lo.max(0)..=s_max)
        .filter_map(|s| {
            let t = s + shift;
            (0..=t_max).contains(&t).then_some((s as usize, t as usize))
        })
        .collect()
}

/// Generators of the symplectic intertwiners `∧^a W* ⊗ Sym^r W* → ∧^b W*`.
/// Empty when `r + a + b` is odd or `r > 2`; identical maps are listed once.
pub fn contraction_spanning_set(n: usize, a: usize, r: usize, b: usize) -> Vec<SymbolMap> {
    if (r + a + b) % 2 == 1 || r > 2 || a > 2 * n || b > 2 * n {
        return Vec::new();
    }
    let (ni, ai, bi) = (n as i64, a as i64, b as i64);
    let mut maps = Vec::new();
    let build = |label: String, f: &dyn Fn(&DifferentialForm, &[DifferentialForm]) -> DifferentialForm| {
        SymbolMap::from_fn(n, a, r, b, Space::Horizontal, label, f)
    };
    match r {
        0 => {
            for (s, t) in index_pairs(ai - ni, ai / 2, bi / 2, (bi - ai) / 2) {
                maps.push(build(format!("L^{t} Λ^{s}"), &|phi, _| lt_ls(phi, t, s)));
            }
        }
        1 => {
            for (s, t) in index_pairs(ai + 1 - ni, (ai + 1) / 2, bi / 2, (bi - ai - 1) / 2) {
                maps.push(build(format!("L^{t} Λ^{s}(φ∧τ)"), &|phi, tau| lt_ls(&phi.wedge(&tau[0]), t, s)));
            }
            for (s, t) in index_pairs(ai - ni, ai / 2, (bi - 1).div_euclid(2), (bi - ai - 1) / 2) {
                maps.push(build(format!("L^{t} Λ^{s}(φ)∧τ"), &|phi, tau| lt_ls(phi, t, s).wedge(&tau[0])));
            }
        }
        2 => {
            for (s, t) in index_pairs(ai + 1 - ni, (ai + 1) / 2, (bi - 1).div_euclid(2), (bi - ai - 2) / 2) {
                maps.push(build(format!("L^{t} Λ^{s}(φ∧τ1)∧τ2 + (τ1 ↔ τ2)"), &|phi, tau| {
                    let first = lt_ls(&phi.wedge(&tau[0]), t, s).wedge(&tau[1]);
                    let second = lt_ls(&phi.wedge(&tau[1]), t, s).wedge(&tau[0]);
                    first.checked_add(&second).expect("same degree")
                }));
            }
        }
        _ => unreachable!(),
    }
    let mut unique: Vec<SymbolMap> = Vec::with_capacity(maps.len());
    for m in maps {
        if !unique.iter().any(|u| u.matrix == m.matrix) {
            unique.push(m);
        }
    }
    unique
}
