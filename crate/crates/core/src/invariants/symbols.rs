//! Principal symbols at the origin of the operators built from `d`, `id`
//! and `P_{a,i}`.

use super::tensor::{Space, SymbolMap};
use crate::error::{Error, Result};
use crate::exterior::{CovectorIndex, DifferentialForm};
use crate::lefschetz::{lefschetz_L, primitive_projections, HorizontalForm};
use crate::natural_ops::{admissible_indices, NaturalOperator, OperatorKind};

/// `p_{a,i}(φ) = L^{(a-i-2)/2} π_i ∧ dz`, with `π_i` taken from the
/// horizontal part of the constant form `φ`.
pub fn p_symbol(a: usize, i: usize, phi: &DifferentialForm) -> Result<DifferentialForm> {
    let n = phi.n();
    if !admissible_indices(a, n).contains(&i) {
        return Err(Error::Inadmissible { a, i, n });
    }
    if phi.degree() != a {
        return Err(Error::DegreeMismatch { expected: a, found: phi.degree() });
    }
    let horizontal = HorizontalForm::try_from(phi.horizontal_part())?;
    let pi = primitive_projections(&horizontal)?.component(i);
    let dz = DifferentialForm::covector(n, CovectorIndex::Dz);
    Ok(lefschetz_L(&pi, (a - i - 2) / 2).into_form().wedge(&dz))
}

fn p_index(op: &NaturalOperator) -> Option<(usize, usize)> {
    match op.kind {
        OperatorKind::P { a, i } => Some((a, i)),
        _ => None,
    }
}

/// The principal symbol of `op` at the origin, as a map
/// `∧^a V* ⊗ Sym^r V* → ∧^b V*`.
pub fn symbol_of(op: &NaturalOperator) -> Result<SymbolMap> {
    let (n, a, r, b) = (op.n, op.domain, op.order, op.codomain);
    let label = op.to_string();
    let build = |f: &dyn Fn(&DifferentialForm, &[DifferentialForm]) -> DifferentialForm| {
        SymbolMap::from_fn(n, a, r, b, Space::Full, label.clone(), f)
    };
    let p = |a: usize, i: usize, phi: &DifferentialForm| p_symbol(a, i, phi).expect("admissible by construction");
    match &op.kind {
        OperatorKind::Id => Ok(build(&|phi, _| phi.clone())),
        OperatorKind::ExtD => Ok(build(&|phi, tau| phi.wedge(&tau[0]))),
        OperatorKind::P { a, i } => {
            let (a, i) = (*a, *i);
            Ok(build(&|phi, _| p(a, i, phi)))
        }
        OperatorKind::Compose(ops) => {
            let kinds: Vec<&OperatorKind> = ops.iter().map(|o| &o.kind).collect();
            match kinds.as_slice() {
                [OperatorKind::ExtD, OperatorKind::P { .. }] => {
                    let (pa, pi) = p_index(&ops[1]).unwrap();
                    Ok(build(&|phi, tau| p(pa, pi, phi).wedge(&tau[0])))
                }
                [OperatorKind::P { .. }, OperatorKind::ExtD] => {
                    let (pa, pi) = p_index(&ops[0]).unwrap();
                    Ok(build(&|phi, tau| p(pa, pi, &phi.wedge(&tau[0]))))
                }
                [OperatorKind::ExtD, OperatorKind::P { .. }, OperatorKind::ExtD] => {
                    let (pa, pi) = p_index(&ops[1]).unwrap();
                    Ok(build(&|phi, tau| {
                        let first = p(pa, pi, &phi.wedge(&tau[0])).wedge(&tau[1]);
                        let second = p(pa, pi, &phi.wedge(&tau[1])).wedge(&tau[0]);
                        first.checked_add(&second).expect("same degree")
                    }))
                }
                _ => Err(Error::NotInSymbolTable(label.clone())),
            }
        }
        OperatorKind::Q | OperatorKind::RuminD => Err(Error::NotInSymbolTable(label.clone())),
    }
}
