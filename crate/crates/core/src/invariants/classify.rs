//! Compares solver dimensions with the ranks of known operator symbols.

use serde::Serialize;

use super::generators::Algebra;
use super::solver::solve_intertwiners;
use super::spanning::contraction_spanning_set;
use super::symbols::symbol_of;
use super::tensor::SymbolMap;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::natural_ops::{admissible_indices, NaturalOperator};

/// The operators spanning the natural maps from a-forms to b-forms.
pub fn r_space_operators(n: usize, a: usize, b: usize) -> Vec<NaturalOperator> {
    let p = |a: usize, i: usize| NaturalOperator::p(n, a, i).expect("admissible");
    let d = |a: usize| NaturalOperator::ext_d(n, a);
    let compose = |ops: Vec<NaturalOperator>| NaturalOperator::compose(ops).expect("degrees match");
    let mut ops = Vec::new();
    if b + 1 == a {
        ops.extend(admissible_indices(a, n).into_iter().map(|i| p(a, i)));
    } else if b == a {
        ops.push(NaturalOperator::id(n, a));
        ops.extend(admissible_indices(a, n).into_iter().map(|i| compose(vec![d(a - 1), p(a, i)])));
        ops.extend(admissible_indices(a + 1, n).into_iter().map(|i| compose(vec![p(a + 1, i), d(a)])));
    } else if b == a + 1 {
        ops.push(d(a));
        ops.extend(admissible_indices(a + 1, n).into_iter().map(|i| compose(vec![d(a), p(a + 1, i), d(a)])));
    }
    ops
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyRow {
    pub r: usize,
    pub solver_dim: usize,
    pub spanning_rank: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub algebra: Algebra,
    pub rows: Vec<ClassifyRow>,
    pub overall_pass: bool,
}

fn rank_of_maps(maps: &[SymbolMap]) -> usize {
    let rows: Vec<_> = maps.iter().map(SymbolMap::flatten).collect();
    rank(&rows)
}

/// For each order `r ≤ max_order`: the intertwiner dimension and the rank of
/// the known maps of that order. With the full algebra the known maps are
/// the symbols of the natural operators, and every dimension must vanish
/// unless `b ∈ {a-1, a, a+1}`; with `sp_only` they are the contraction maps.
pub fn classify_with(n: usize, a: usize, b: usize, max_order: usize, algebra: Algebra) -> Result<ClassifyReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if a > 2 * n + 1 || b > 2 * n + 1 {
        return Err(Error::DegreeOutOfRange { degree: a.max(b), n });
    }
    let operators = r_space_operators(n, a, b);
    let mut rows = Vec::new();
    for r in 0..=max_order {
        let solver_dim = solve_intertwiners(n, a, r, b, algebra).dimension;
        let known = match algebra {
            Algebra::Full => operators.iter().filter(|op| op.order == r).map(symbol_of).collect::<Result<Vec<_>>>()?,
            Algebra::SpOnly => contraction_spanning_set(n, a, r, b),
        };
        let spanning_rank = rank_of_maps(&known);
        rows.push(ClassifyRow { r, solver_dim, spanning_rank, pass: solver_dim == spanning_rank });
    }
    let trivial_ok =
        algebra == Algebra::SpOnly || b + 1 == a || b == a || b == a + 1 || rows.iter().all(|row| row.solver_dim == 0);
    let overall_pass = trivial_ok && rows.iter().all(|row| row.pass);
    Ok(ClassifyReport { n, a, b, algebra, rows, overall_pass })
}

/// Full-algebra classification up to order 3.
pub fn classify(n: usize, a: usize, b: usize) -> Result<ClassifyReport> {
    classify_with(n, a, b, 3, Algebra::Full)
}
