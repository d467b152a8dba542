//! Exact solver for equivariant maps `∧^a U* ⊗ Sym^r U* → ∧^b U*`.

use std::collections::HashMap;

use num_traits::Zero;

use super::generators::{isotropy_generators, Algebra};
use super::tensor::{induced_action, Space, SymbolMap, TensorSpaceBasis};
use crate::coeff_ring::Rational;
use crate::linalg::{integer_row, Echelon};

/// The space of intertwiners, with an exact basis.
#[derive(Clone, Debug)]
pub struct IntertwinerSolution {
    pub dimension: usize,
    pub basis: Vec<SymbolMap>,
}

/// Solves `ρ_out(g) σ = σ ρ_in(g)` for every generator `g` of `algebra`.
///
/// Generators acting diagonally split the unknowns by weight first: an entry
/// `σ[c][d]` can only be nonzero when `c` and `d` have the same weights.
/// The remaining generators give a sparse integer system whose nullspace is
/// the answer.
pub fn solve_intertwiners(n: usize, a: usize, r: usize, b: usize, algebra: Algebra) -> IntertwinerSolution {
    let space = Space::for_algebra(algebra);
    let domain = TensorSpaceBasis::new(n, a, r, space);
    let codomain = TensorSpaceBasis::exterior(n, b, space);
    let generators = isotropy_generators(n, algebra);

    let mut dom_weights: Vec<Vec<Rational>> = vec![Vec::new(); domain.dim()];
    let mut cod_weights: Vec<Vec<Rational>> = vec![Vec::new(); codomain.dim()];
    let mut off_diagonal = Vec::new();
    for g in &generators {
        let rin = induced_action(g, &domain);
        let rout = induced_action(g, &codomain);
        if g.is_diagonal() {
            for (d, w) in dom_weights.iter_mut().enumerate() {
                w.push(rin.diagonal_weight(d).expect("diagonal generator"));
            }
            for (c, w) in cod_weights.iter_mut().enumerate() {
                w.push(rout.diagonal_weight(c).expect("diagonal generator"));
            }
        } else {
            off_diagonal.push((rin, rout.rows()));
        }
    }

    // unknown (c, d) -> column index
    let mut unknowns: HashMap<(usize, usize), usize> = HashMap::new();
    let mut positions = Vec::new();
    for c in 0..codomain.dim() {
        for d in 0..domain.dim() {
            if cod_weights[c] == dom_weights[d] {
                unknowns.insert((c, d), positions.len());
                positions.push((c, d));
            }
        }
    }

    let mut echelon = Echelon::new(positions.len());
    'outer: for (rin, rout_rows) in &off_diagonal {
        for c in 0..codomain.dim() {
            for d in 0..domain.dim() {
                if echelon.rank() == positions.len() {
                    break 'outer;
                }
                let mut row: HashMap<usize, Rational> = HashMap::new();
                for (cp, v) in &rout_rows[c] {
                    if let Some(&u) = unknowns.get(&(*cp, d)) {
                        *row.entry(u).or_insert_with(Rational::zero) += v;
                    }
                }
                for (dp, v) in &rin.columns[d] {
                    if let Some(&u) = unknowns.get(&(c, *dp)) {
                        *row.entry(u).or_insert_with(Rational::zero) -= v;
                    }
                }
                let row = integer_row(row);
                if !row.is_empty() {
                    echelon.insert(row);
                }
            }
        }
    }

    let basis: Vec<SymbolMap> = echelon
        .nullspace()
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let mut map = SymbolMap::zero(n, a, r, b, space, format!("solution {}", k + 1));
            for (u, value) in v.into_iter().enumerate() {
                let (c, d) = positions[u];
                map.matrix[c][d] = value;
            }
            map
        })
        .collect();
    IntertwinerSolution { dimension: basis.len(), basis }
}
