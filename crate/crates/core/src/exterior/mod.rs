//! Differential forms with polynomial coefficients on ℝ^{2n+1}.
//!
//! Basis covectors are ordered `dx1 < .. < dxn < dy1 < .. < dyn < dz`. A basis
//! word is a strictly increasing sequence of covectors, stored as a bitmask
//! over those positions.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeff_ring::{Polynomial, Rational, Var};
use crate::error::{Error, Result};

pub use parse::parse_form;

/// A basis covector `dxk`, `dyk` or `dz` (1-based `k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CovectorIndex {
    Dx(usize),
    Dy(usize),
    Dz,
}

impl CovectorIndex {
    pub fn position(self, n: usize) -> usize {
        self.var().position(n)
    }

    pub fn from_position(pos: usize, n: usize) -> Self {
        match Var::from_position(pos, n) {
            Var::X(k) => CovectorIndex::Dx(k),
            Var::Y(k) => CovectorIndex::Dy(k),
            Var::Z => CovectorIndex::Dz,
        }
    }

    /// The coordinate this covector differentiates.
    pub fn var(self) -> Var {
        match self {
            CovectorIndex::Dx(k) => Var::X(k),
            CovectorIndex::Dy(k) => Var::Y(k),
            CovectorIndex::Dz => Var::Z,
        }
    }
}

impl fmt::Display for CovectorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.var())
    }
}

/// Increasing word of basis covectors, as a bitmask of covector positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Word(u32);

impl Word {
    pub const EMPTY: Word = Word(0);

    pub fn from_bits(bits: u32) -> Self {
        Word(bits)
    }

    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        Word(positions.into_iter().fold(0, |acc, p| acc | (1 << p)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 & (1 << pos) != 0
    }

    /// Positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }

    pub fn covectors(self, n: usize) -> impl Iterator<Item = CovectorIndex> {
        self.positions().map(move |p| CovectorIndex::from_position(p, n))
    }

    /// Number of letters strictly below `pos`.
    pub fn rank_of(self, pos: usize) -> usize {
        (self.0 & ((1u32 << pos) - 1)).count_ones() as usize
    }

    /// Removes the letter at `pos`; the sign is that of moving it to the
    /// front, i.e. of contracting with the dual vector.
    pub fn remove(self, pos: usize) -> Option<(bool, Word)> {
        if !self.contains(pos) {
            return None;
        }
        let negative = self.rank_of(pos) % 2 == 1;
        Some((negative, Word(self.0 & !(1 << pos))))
    }

    /// `self ∧ other` as a sign and a word, or `None` if they share a letter.
    pub fn wedge(self, other: Word) -> Option<(bool, Word)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0usize;
        for p in other.positions() {
            swaps += (self.0 >> (p + 1)).count_ones() as usize;
        }
        Some((swaps % 2 == 1, Word(self.0 | other.0)))
    }

    /// All words of length `degree` over `dim` letters, in canonical order.
    pub fn all_of_degree(dim: usize, degree: usize) -> Vec<Word> {
        use itertools::Itertools;
        (0..dim).combinations(degree).map(Word::from_positions).collect()
    }
}

impl Ord for Word {
    /// Lexicographic on the increasing letter sequence, shorter prefix first.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.positions();
        let mut b = other.positions();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A differential `degree`-form `Σ f_w dw` on ℝ^{2n+1}.
///
/// Forms of degree above `2n+1` exist only as zero forms; this keeps degree
/// bookkeeping uniform when a wedge product overflows the top degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<Word, Polynomial>,
}

impl DifferentialForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        DifferentialForm { n, degree, terms: BTreeMap::new() }
    }

    pub fn function(f: Polynomial) -> Self {
        let mut out = Self::zero(f.n(), 0);
        out.add_term(Word::EMPTY, f);
        out
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::function(Polynomial::constant(n, c))
    }

    /// `f dw` for a single word.
    pub fn monomial(f: Polynomial, word: Word) -> Self {
        let mut out = Self::zero(f.n(), word.len());
        out.add_term(word, f);
        out
    }

    /// Wedge of the given covectors in the given order, with unit coefficient.
    pub fn basis(n: usize, covectors: &[CovectorIndex]) -> Self {
        covectors.iter().fold(Self::constant(n, Rational::one()), |acc, &c| acc.wedge(&Self::covector(n, c)))
    }

    pub fn covector(n: usize, c: CovectorIndex) -> Self {
        Self::monomial(Polynomial::one(n), Word::from_positions([c.position(n)]))
    }

    /// The differential of a coordinate function, `dv`.
    pub fn differential_of(n: usize, v: Var) -> Self {
        Self::monomial(Polynomial::one(n), Word::from_positions([v.position(n)]))
    }

    pub fn from_terms(n: usize, degree: usize, terms: impl IntoIterator<Item = (Word, Polynomial)>) -> Self {
        let mut out = Self::zero(n, degree);
        for (w, f) in terms {
            assert_eq!(w.len(), degree, "word length must equal the form degree");
            out.add_term(w, f);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: Word) -> Polynomial {
        self.terms.get(&word).cloned().unwrap_or_else(|| Polynomial::zero(self.n))
    }

    /// Number of coordinates, `2n+1`.
    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn has_dz(&self) -> bool {
        let dz = 2 * self.n;
        self.terms.keys().any(|w| w.contains(dz))
    }

    pub(crate) fn add_term(&mut self, w: Word, f: Polynomial) {
        debug_assert_eq!(w.len(), self.degree);
        if f.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &f;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add_signed(&mut self, w: Word, f: Polynomial, negative: bool) {
        self.add_term(w, if negative { -&f } else { f });
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(*w, f.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|f| -f)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coefficients(|f| f.scale(c))
    }

    /// Multiplies every coefficient by the function `g`.
    pub fn mul_function(&self, g: &Polynomial) -> Self {
        self.map_coefficients(|f| f * g)
    }

    pub fn map_coefficients(&self, mut op: impl FnMut(&Polynomial) -> Polynomial) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (w, f) in &self.terms {
            out.add_term(*w, op(f));
        }
        out
    }

    /// Graded-commutative exterior product.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "form dimension mismatch");
        let mut out = Self::zero(self.n, self.degree + other.degree);
        if self.degree + other.degree > self.dim() {
            return out;
        }
        for (w1, f1) in &self.terms {
            for (w2, f2) in &other.terms {
                if let Some((negative, w)) = w1.wedge(*w2) {
                    out.add_signed(w, f1 * f2, negative);
                }
            }
        }
        out
    }

    /// Interior product `i_X ω`. A 0-form contracts to the zero 0-form.
    pub fn interior(&self, x: &VectorField) -> Self {
        assert_eq!(self.n, x.n(), "form dimension mismatch");
        if self.degree == 0 {
            return Self::zero(self.n, 0);
        }
        let mut out = Self::zero(self.n, self.degree - 1);
        for (w, f) in &self.terms {
            for pos in w.positions() {
                let xk = x.component_at(pos);
                if xk.is_zero() {
                    continue;
                }
                let (negative, rest) = w.remove(pos).expect("letter present");
                out.add_signed(rest, f * xk, negative);
            }
        }
        out
    }

    /// The `dz`-free representative of `ω|_Q`, obtained by substituting
    /// `dz ↦ -Σ xi dyi`.
    pub fn restrict_to_contact_plane(&self) -> Self {
        let n = self.n;
        let dz = 2 * n;
        let mut theta = Self::zero(n, 1);
        for k in 1..=n {
            theta.add_term(Word::from_positions([CovectorIndex::Dy(k).position(n)]), -&Polynomial::var(n, Var::X(k)));
        }
        let mut out = Self::zero(n, self.degree);
        for (w, f) in &self.terms {
            match w.remove(dz) {
                None => out.add_term(*w, f.clone()),
                // dz is the last letter, so f dw = f dw' ∧ dz.
                Some((_, rest)) => {
                    let head = Self::monomial(f.clone(), rest);
                    for (w2, f2) in head.wedge(&theta).terms {
                        out.add_term(w2, f2);
                    }
                }
            }
        }
        out
    }

    /// Drops every term containing `dz`.
    pub fn horizontal_part(&self) -> Self {
        let dz = 2 * self.n;
        Self::from_terms(
            self.n,
            self.degree,
            self.terms.iter().filter(|(w, _)| !w.contains(dz)).map(|(w, f)| (*w, f.clone())),
        )
    }

    /// Evaluates the coefficients at the origin.
    pub fn at_origin(&self) -> Self {
        self.map_coefficients(|f| Polynomial::constant(self.n, f.constant_term()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.values().all(Polynomial::is_constant)
    }

    /// Maximal total degree among the coefficients.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Polynomial::total_degree).max()
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_form(self, f)
    }
}

/// Vector field with polynomial components ordered `∂x1..∂xn, ∂y1..∂yn, ∂z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    n: usize,
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn zero(n: usize) -> Self {
        VectorField { n, components: vec![Polynomial::zero(n); 2 * n + 1] }
    }

    pub fn from_components(n: usize, components: Vec<Polynomial>) -> Result<Self> {
        if components.len() != 2 * n + 1 {
            return Err(Error::InvalidArgument(format!(
                "a vector field on R^{} needs {} components, got {}",
                2 * n + 1,
                2 * n + 1,
                components.len()
            )));
        }
        if let Some(bad) = components.iter().find(|c| c.n() != n) {
            return Err(Error::DimensionMismatch { left: n, right: bad.n() });
        }
        Ok(VectorField { n, components })
    }

    /// The coordinate field `∂/∂v`.
    pub fn coordinate(n: usize, v: Var) -> Self {
        let mut out = Self::zero(n);
        out.components[v.position(n)] = Polynomial::one(n);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component(&self, v: Var) -> &Polynomial {
        &self.components[v.position(self.n)]
    }

    pub(crate) fn component_at(&self, pos: usize) -> &Polynomial {
        &self.components[pos]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// Directional derivative `X(f)`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for v in Var::all(self.n) {
            let c = self.component(v);
            if !c.is_zero() {
                out = &out + &(c * &f.partial(v));
            }
        }
        out
    }

    /// Lie bracket `[X, Y]`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        let components =
            self.components.iter().zip(&other.components).map(|(xk, yk)| &self.apply(yk) - &other.apply(xk)).collect();
        VectorField { n: self.n, components }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField { n: self.n, components: self.components.iter().map(|p| p.scale(c)).collect() }
    }

    /// Jacobian at the origin: entry `(i, j)` is `∂X_i/∂v_j` at 0.
    pub fn jacobian_at_origin(&self) -> Vec<Vec<Rational>> {
        self.components.iter().map(|c| Var::all(self.n).map(|v| c.partial(v).constant_term()).collect()).collect()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.components.iter().all(|c| c.constant_term().is_zero())
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::all(self.n) {
            let c = self.component(v);
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) d/d{v}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exterior product of two forms, free-function form.
pub fn wedge(a: &DifferentialForm, b: &DifferentialForm) -> DifferentialForm {
    a.wedge(b)
}

pub fn interior_product(x: &VectorField, omega: &DifferentialForm) -> DifferentialForm {
    omega.interior(x)
}

pub fn restrict_to_q(omega: &DifferentialForm) -> DifferentialForm {
    omega.restrict_to_contact_plane()
}

pub fn format_form(omega: &DifferentialForm) -> String {
    omega.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_ring::int;
    use CovectorIndex::*;

    fn basis(n: usize, c: &[CovectorIndex]) -> DifferentialForm {
        DifferentialForm::basis(n, c)
    }

    fn alpha(n: usize) -> DifferentialForm {
        let mut a = basis(n, &[Dz]);
        for k in 1..=n {
            a = a.checked_add(&basis(n, &[Dy(k)]).mul_function(&Polynomial::var(n, Var::X(k)))).unwrap();
        }
        a
    }

    #[test]
    fn wedge_of_basis_covectors() {
        assert_eq!(basis(1, &[Dx(1)]).wedge(&basis(1, &[Dy(1)])).to_string(), "dx1^dy1");
        assert!(basis(1, &[Dx(1)]).wedge(&basis(1, &[Dx(1)])).is_zero());
    }

    #[test]
    fn alpha_wedge_dalpha_is_volume() {
        let dalpha = basis(1, &[Dx(1), Dy(1)]);
        assert_eq!(alpha(1).wedge(&dalpha), basis(1, &[Dx(1), Dy(1), Dz]));
    }

    #[test]
    fn reordering_signs() {
        assert_eq!(basis(2, &[Dx(2), Dx(1), Dy(1)]), basis(2, &[Dx(1), Dy(1), Dx(2)]).neg().neg());
        assert_eq!(basis(2, &[Dx(2), Dx(1)]), basis(2, &[Dx(1), Dx(2)]).neg());
    }

    #[test]
    fn top_degree_overflow_is_zero() {
        let vol = basis(1, &[Dx(1), Dy(1), Dz]);
        let w = vol.wedge(&basis(1, &[Dx(1)]));
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn reeb_contractions() {
        let r = VectorField::coordinate(1, Var::Z);
        assert_eq!(alpha(1).interior(&r), DifferentialForm::constant(1, int(1)));
        assert!(basis(1, &[Dx(1), Dy(1)]).interior(&r).is_zero());
        let dx = VectorField::coordinate(1, Var::X(1));
        assert_eq!(basis(1, &[Dx(1), Dy(1)]).interior(&dx), basis(1, &[Dy(1)]));
        assert!(DifferentialForm::constant(1, int(3)).interior(&dx).is_zero());
    }

    #[test]
    fn restriction_examples() {
        assert!(alpha(1).restrict_to_contact_plane().is_zero());
        assert_eq!(basis(1, &[Dx(1)]).restrict_to_contact_plane(), basis(1, &[Dx(1)]));
        let r = basis(1, &[Dz, Dx(1)]).restrict_to_contact_plane();
        let expected = basis(1, &[Dx(1), Dy(1)]).mul_function(&Polynomial::var(1, Var::X(1)));
        assert_eq!(r, expected);
        assert!(!r.has_dz());
    }

    #[test]
    fn word_order_is_lexicographic() {
        let a = Word::from_positions([0, 2]);
        let b = Word::from_positions([1]);
        let c = Word::from_positions([0, 1]);
        assert!(c < a && a < b);
        assert_eq!(Word::all_of_degree(3, 2), vec![c, a, Word::from_positions([1, 2])]);
    }

    #[test]
    fn mismatched_addition_is_an_error() {
        let err = basis(1, &[Dx(1)]).checked_add(&basis(1, &[Dx(1), Dy(1)])).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 1, found: 2 });
    }
}
