//! Tensor spaces `∧^a U* ⊗ Sym^r U*` (with `U = W` or `V`), their bases,
//! the induced Lie algebra action, and linear maps between them.
//!
//! Basis order: exterior words in lexicographic order of positions, and
//! within each word the symmetric monomials as sorted multisets in
//! lexicographic order. Positions are `x1..xn, y1..yn, z`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;
use smallvec::SmallVec;

use super::generators::{Algebra, LieGenerator};
use crate::coeff_ring::{Polynomial, Rational};
use crate::exterior::{CovectorIndex, DifferentialForm, Word};

/// Whether covectors range over the contact plane `W` or all of `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Horizontal,
    Full,
}

impl Space {
    pub fn for_algebra(algebra: Algebra) -> Self {
        match algebra {
            Algebra::SpOnly => Space::Horizontal,
            Algebra::Full => Space::Full,
        }
    }

    /// Number of basis covectors.
    pub fn dim(self, n: usize) -> usize {
        match self {
            Space::Horizontal => 2 * n,
            Space::Full => 2 * n + 1,
        }
    }
}

/// A monomial in `Sym^r`, stored as the sorted multiset of its factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMonomial(SmallVec<[u8; 4]>);

impl SymMonomial {
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        let mut v: SmallVec<[u8; 4]> = positions.into_iter().map(|p| p as u8).collect();
        v.sort_unstable();
        SymMonomial(v)
    }

    pub fn factors(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&p| p as usize)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Replaces one occurrence of `from` by `to`.
    fn replace(&self, from: usize, to: usize) -> Self {
        let mut v = self.0.clone();
        let k = v.iter().position(|&p| p as usize == from).expect("factor present");
        v[k] = to as u8;
        v.sort_unstable();
        SymMonomial(v)
    }
}

/// An ordered basis of `∧^a U* ⊗ Sym^r U*`.
#[derive(Clone, Debug)]
pub struct TensorSpaceBasis {
    pub n: usize,
    pub space: Space,
    pub exterior_degree: usize,
    pub sym_degree: usize,
    elements: Vec<(Word, SymMonomial)>,
    index: HashMap<(Word, SymMonomial), usize>,
}

impl TensorSpaceBasis {
    pub fn new(n: usize, a: usize, r: usize, space: Space) -> Self {
        let dim = space.dim(n);
        let words = if a > dim { Vec::new() } else { Word::all_of_degree(dim, a) };
        let monomials: Vec<SymMonomial> =
            (0..dim).combinations_with_replacement(r).map(SymMonomial::from_positions).collect();
        let elements: Vec<(Word, SymMonomial)> = words.into_iter().cartesian_product(monomials).collect();
        let index = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        TensorSpaceBasis { n, space, exterior_degree: a, sym_degree: r, elements, index }
    }

    /// `∧^b U*`
    pub fn exterior(n: usize, b: usize, space: Space) -> Self {
        Self::new(n, b, 0, space)
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[(Word, SymMonomial)] {
        &self.elements
    }

    pub fn index_of(&self, word: Word, sym: &SymMonomial) -> Option<usize> {
        self.index.get(&(word, sym.clone())).copied()
    }

    /// Index of a bare exterior word (`r = 0` spaces).
    pub fn word_index(&self, word: Word) -> Option<usize> {
        self.index_of(word, &SymMonomial::from_positions([]))
    }

    pub fn label(&self, k: usize) -> String {
        let (w, s) = &self.elements[k];
        let n = self.n;
        let mut out = if w.is_empty() { "1".to_string() } else { w.covectors(n).map(|c| c.to_string()).join("^") };
        if s.degree() > 0 {
            out.push_str(" ⊗ ");
            out.push_str(&s.factors().map(|p| CovectorIndex::from_position(p, n).to_string()).join("·"));
        }
        out
    }
}

/// A sparse square matrix stored by columns: `columns[j]` is the image of
/// basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    pub columns: Vec<Vec<(usize, Rational)>>,
}

impl ActionMatrix {
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Row-wise view: `rows[i]` lists `(j, M[i][j])`.
    pub fn rows(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows = vec![Vec::new(); self.dim()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); self.dim()]; self.dim()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m[*i][j] = v.clone();
            }
        }
        m
    }

    /// The diagonal entry of column `j` if the column has no other entries.
    pub fn diagonal_weight(&self, j: usize) -> Option<Rational> {
        match self.columns[j].as_slice() {
            [] => Some(Rational::zero()),
            [(i, v)] if *i == j => Some(v.clone()),
            _ => None,
        }
    }
}

fn accumulate(col: &mut HashMap<usize, Rational>, k: usize, v: Rational) {
    let entry = col.entry(k).or_insert_with(Rational::zero);
    *entry += v;
}

/// The action of `g` on `U*`: `e^k ↦ -Σ_l M[k][l] e^l`, extended to the
/// tensor space as a derivation.
pub fn induced_action(g: &LieGenerator, basis: &TensorSpaceBasis) -> ActionMatrix {
    assert_eq!(g.n, basis.n, "generator and basis disagree on n");
    let dim = basis.space.dim(basis.n);
    assert!(
        (0..dim).all(|k| (dim..g.matrix.len()).all(|l| g.matrix[k][l].is_zero())),
        "generator {} does not preserve the horizontal covectors",
        g.label
    );
    // on_covector[k] = image of e^k as (l, coefficient)
    let on_covector: Vec<Vec<(usize, Rational)>> = (0..dim)
        .map(|k| (0..dim).filter(|&l| !g.matrix[k][l].is_zero()).map(|l| (l, -g.matrix[k][l].clone())).collect())
        .collect();
    let mut columns = Vec::with_capacity(basis.dim());
    for (w, s) in basis.elements() {
        let mut col: HashMap<usize, Rational> = HashMap::new();
        for k in w.positions() {
            let (below, rest) = w.remove(k).expect("letter present");
            for (l, v) in &on_covector[k] {
                let Some((swap, word)) = Word::from_positions([*l]).wedge(rest) else { continue };
                let idx = basis.index_of(word, s).expect("image in basis");
                let v = if below != swap { -v.clone() } else { v.clone() };
                accumulate(&mut col, idx, v);
            }
        }
        for k in s.factors().dedup() {
            let multiplicity = s.factors().filter(|&p| p == k).count();
            for (l, v) in &on_covector[k] {
                let idx = basis.index_of(*w, &s.replace(k, *l)).expect("image in basis");
                accumulate(&mut col, idx, v * Rational::from_integer(multiplicity.into()));
            }
        }
        let mut col: Vec<(usize, Rational)> = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        col.sort_by_key(|(k, _)| *k);
        columns.push(col);
    }
    ActionMatrix { columns }
}

/// A linear map `∧^a U* ⊗ Sym^r U* → ∧^b U*`, as a `[codomain][domain]`
/// matrix in the documented basis orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolMap {
    pub n: usize,
    pub a: usize,
    pub r: usize,
    pub b: usize,
    pub space: Space,
    pub label: String,
    pub matrix: Vec<Vec<Rational>>,
}

impl SymbolMap {
    pub fn zero(n: usize, a: usize, r: usize, b: usize, space: Space, label: impl Into<String>) -> Self {
        let rows = TensorSpaceBasis::exterior(n, b, space).dim();
        let cols = TensorSpaceBasis::new(n, a, r, space).dim();
        SymbolMap { n, a, r, b, space, label: label.into(), matrix: vec![vec![Rational::zero(); cols]; rows] }
    }

    /// Tabulates `f(φ, [τ1, ..., τr])` on the domain basis, with `φ` a basis
    /// word and the `τ` the factors of a basis monomial, as constant forms.
    pub fn from_fn(
        n: usize,
        a: usize,
        r: usize,
        b: usize,
        space: Space,
        label: impl Into<String>,
        f: impl Fn(&DifferentialForm, &[DifferentialForm]) -> DifferentialForm,
    ) -> Self {
        let domain = TensorSpaceBasis::new(n, a, r, space);
        let codomain = TensorSpaceBasis::exterior(n, b, space);
        let mut map = SymbolMap::zero(n, a, r, b, space, label);
        let one = Polynomial::one(n);
        for (col, (w, s)) in domain.elements().iter().enumerate() {
            let phi = DifferentialForm::monomial(one.clone(), *w);
            let taus: Vec<DifferentialForm> =
                s.factors().map(|p| DifferentialForm::monomial(one.clone(), Word::from_positions([p]))).collect();
            let image = f(&phi, &taus);
            assert_eq!(image.degree(), b, "map must land in degree {b}");
            for (word, c) in image.terms() {
                let row = codomain.word_index(*word).expect("image lies in the codomain space");
                map.matrix[row][col] = c.constant_term();
            }
        }
        map
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or_else(|| TensorSpaceBasis::new(self.n, self.a, self.r, self.space).dim(), Vec::len)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|row| row.iter().all(Zero::is_zero))
    }

    /// Row-major entries, used for rank computations across maps.
    pub fn flatten(&self) -> Vec<Rational> {
        self.matrix.iter().flatten().cloned().collect()
    }

    /// `ρ_out(g) σ - σ ρ_in(g)` for every generator; true if all vanish.
    pub fn is_intertwiner(&self, generators: &[LieGenerator]) -> bool {
        let domain = TensorSpaceBasis::new(self.n, self.a, self.r, self.space);
        let codomain = TensorSpaceBasis::exterior(self.n, self.b, self.space);
        generators.iter().all(|g| {
            let rin = induced_action(g, &domain).to_dense();
            let rout = induced_action(g, &codomain).to_dense();
            let left = mat_mul(&rout, &self.matrix, domain.dim());
            let right = mat_mul(&self.matrix, &rin, domain.dim());
            left == right
        })
    }
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .fold(Rational::zero(), |acc, v| acc + v)
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for SymbolMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let domain = TensorSpaceBasis::new(self.n, self.a, self.r, self.space);
        let codomain = TensorSpaceBasis::exterior(self.n, self.b, self.space);
        writeln!(f, "{} : ∧^{} ⊗ Sym^{} → ∧^{}", self.label, self.a, self.r, self.b)?;
        for col in 0..domain.dim() {
            let mut image = DifferentialForm::zero(self.n, self.b);
            for (row, (word, _)) in codomain.elements().iter().enumerate() {
                let c = &self.matrix[row][col];
                if !c.is_zero() {
                    let term = DifferentialForm::monomial(Polynomial::constant(self.n, c.clone()), *word);
                    image = image.checked_add(&term).expect("same degree");
                }
            }
            if !image.is_zero() {
                writeln!(f, "  {} ↦ {image}", domain.label(col))?;
            }
        }
        Ok(())
    }
}
