//! The sl₂ action `(L, Λ, H)` on horizontal forms, primitivity, and the
//! Lefschetz decomposition `φ = Σ L^{(a-i)/2} π_i` with `π_i` primitive.
//!
//! `L` wedges with `Σ dxk ∧ dyk` and `Λ = Σ i_{∂yk} i_{∂xk}`, so that
//! `Λ(dxk ∧ dyk) = 1` and `[L, Λ] = a - n` on a-forms. Everything else is
//! derived from the relation `Λ L^j π = -j(i - n + j - 1) L^{j-1} π` for
//! primitive `π` of degree `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::coeff_ring::{int, Rational};
use crate::error::{Error, Result};
use crate::exterior::{CovectorIndex, DifferentialForm, Word};
use crate::linalg::solve_square;

/// A form without `dz`, viewed as a form on the contact plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalForm(DifferentialForm);

impl HorizontalForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        HorizontalForm(DifferentialForm::zero(n, degree))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_form(&self) -> &DifferentialForm {
        &self.0
    }

    pub fn into_form(self) -> DifferentialForm {
        self.0
    }

    fn checked_add(&self, other: &Self) -> Self {
        HorizontalForm(self.0.checked_add(&other.0).expect("matching degree and n"))
    }

    fn scale(&self, c: &Rational) -> Self {
        HorizontalForm(self.0.scale(c))
    }
}

impl TryFrom<DifferentialForm> for HorizontalForm {
    type Error = Error;

    fn try_from(form: DifferentialForm) -> Result<Self> {
        if form.has_dz() {
            Err(Error::NotHorizontal)
        } else {
            Ok(HorizontalForm(form))
        }
    }
}

impl fmt::Display for HorizontalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `Σ dxk ∧ dyk` as a horizontal 2-form.
pub fn symplectic_form(n: usize) -> HorizontalForm {
    let mut omega = DifferentialForm::zero(n, 2);
    for k in 1..=n {
        let pair = DifferentialForm::basis(n, &[CovectorIndex::Dx(k), CovectorIndex::Dy(k)]);
        omega = omega.checked_add(&pair).expect("same degree");
    }
    HorizontalForm(omega)
}

/// `φ ∧ (Σ dxk ∧ dyk)^power`.
#[allow(non_snake_case)]
pub fn lefschetz_L(phi: &HorizontalForm, power: usize) -> HorizontalForm {
    let omega = symplectic_form(phi.n());
    let mut out = phi.0.clone();
    for _ in 0..power {
        out = out.wedge(&omega.0);
    }
    HorizontalForm(out)
}

/// The dual Lefschetz operator `Λ = Σ i_{∂yk} i_{∂xk}`.
pub fn lefschetz_dual(phi: &HorizontalForm) -> HorizontalForm {
    let n = phi.n();
    let mut out = DifferentialForm::zero(n, phi.degree().saturating_sub(2));
    if phi.degree() < 2 {
        return HorizontalForm(out);
    }
    for (w, f) in phi.0.terms() {
        for k in 1..=n {
            let px = CovectorIndex::Dx(k).position(n);
            let py = CovectorIndex::Dy(k).position(n);
            let Some((s1, w1)) = w.remove(px) else { continue };
            let Some((s2, w2)) = w1.remove(py) else { continue };
            out.add_term(w2, if s1 != s2 { -f } else { f.clone() });
        }
    }
    HorizontalForm(out)
}

/// `Λφ = 0` and `deg φ ≤ n`.
pub fn is_primitive(phi: &HorizontalForm) -> bool {
    phi.degree() <= phi.n() && lefschetz_dual(phi).is_zero()
}

/// Degrees `i` of the primitive components of an a-form:
/// `0 ≤ i ≤ min(a, 2n - a)` with `i ≡ a mod 2`. Empty for `a > 2n`.
pub fn decomposition_indices(a: usize, n: usize) -> Vec<usize> {
    if a > 2 * n {
        return Vec::new();
    }
    let top = a.min(2 * n - a);
    (a % 2..=top).step_by(2).collect()
}

/// The coefficient in `Λ L^j π = μ L^{j-1} π` for primitive `π` of degree `i`.
pub fn lambda_l_coefficient(n: usize, i: usize, j: usize) -> Rational {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    int(-j * (i - n + j - 1))
}

/// Which family of sl₂ constants to look up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Target {
    /// `Λ^s = Σ_i c(s, i) L^{(a-i)/2 - s} Π_i`
    C { s: usize, i: usize },
    /// `Π_i = Σ_j c′(i, j) L^{j + (i-a)/2} Λ^j`
    CPrime { i: usize, j: usize },
    /// `Λ^s = Σ_j c″(s, j) L^{j-s} Λ^j`, `max(s, a-n) ≤ j ≤ a/2`
    CDoublePrime { s: usize, j: usize },
}

/// All sl₂ constants for forms of degree `a` in dimension `2n`.
#[derive(Clone, Debug)]
pub struct Sl2Table {
    pub n: usize,
    pub a: usize,
    pub c: BTreeMap<(usize, usize), Rational>,
    pub c_prime: BTreeMap<(usize, usize), Rational>,
    pub c_double_prime: BTreeMap<(usize, usize), Rational>,
}

impl Sl2Table {
    fn compute(n: usize, a: usize) -> Self {
        let indices = decomposition_indices(a, n);
        let half = a / 2;
        let k = |i: usize| (a - i) / 2;
        // Λ^s L^{k_i} π_i = c(s, i) L^{k_i - s} π_i
        let c_fn = |s: usize, i: usize| -> Rational {
            (0..s).fold(Rational::one(), |acc, t| {
                if t > k(i) {
                    return Rational::zero();
                }
                acc * lambda_l_coefficient(n, i, k(i) - t)
            })
        };

        let mut c = BTreeMap::new();
        for s in 0..=half {
            for &i in indices.iter().filter(|&&i| i + 2 * s <= a) {
                c.insert((s, i), c_fn(s, i));
            }
        }

        // L^{j - k_i} Λ^j φ only sees components i' ≤ i, each as
        // c(j, i') L^{k_{i'} - k_i} π_{i'}; solve for the combination that
        // keeps exactly π_i.
        let mut c_prime = BTreeMap::new();
        for &i in &indices {
            let js: Vec<usize> = (k(i)..=half).collect();
            let rows: Vec<usize> = indices.iter().copied().filter(|&ip| ip <= i).collect();
            let m = rows.iter().map(|&ip| js.iter().map(|&j| c_fn(j, ip)).collect()).collect();
            let rhs = rows.iter().map(|&ip| if ip == i { Rational::one() } else { Rational::zero() }).collect();
            let sol = solve_square(m, rhs).expect("triangular with nonzero diagonal");
            for (j, v) in js.into_iter().zip(sol) {
                c_prime.insert((i, j), v);
            }
        }

        // Both sides of Λ^s = Σ_j c″ L^{j-s} Λ^j expand into L^{k_i - s} π_i.
        let mut c_double_prime = BTreeMap::new();
        for s in 0..=half {
            let js: Vec<usize> = (s.max(a.saturating_sub(n))..=half).collect();
            let rows: Vec<usize> = indices.iter().copied().filter(|&i| k(i) >= s).collect();
            let m = rows.iter().map(|&i| js.iter().map(|&j| c_fn(j, i)).collect()).collect();
            let rhs = rows.iter().map(|&i| c_fn(s, i)).collect();
            let sol = solve_square(m, rhs).expect("triangular with nonzero diagonal");
            for (j, v) in js.into_iter().zip(sol) {
                c_double_prime.insert((s, j), v);
            }
        }

        Sl2Table { n, a, c, c_prime, c_double_prime }
    }

    pub fn get(&self, target: Sl2Target) -> Result<Rational> {
        let (table, key, what) = match target {
            Sl2Target::C { s, i } => (&self.c, (s, i), "c"),
            Sl2Target::CPrime { i, j } => (&self.c_prime, (i, j), "c'"),
            Sl2Target::CDoublePrime { s, j } => (&self.c_double_prime, (s, j), "c''"),
        };
        table
            .get(&key)
            .cloned()
            .ok_or_else(|| Error::IndexOutOfRange(format!("{what}{key:?} for n = {}, a = {}", self.n, self.a)))
    }
}

fn table_cache() -> &'static RwLock<HashMap<(usize, usize), Arc<Sl2Table>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), Arc<Sl2Table>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The cached sl₂ table for `(n, a)`.
pub fn sl2_table(n: usize, a: usize) -> Result<Arc<Sl2Table>> {
    if n == 0 || a > 2 * n {
        return Err(Error::DegreeOutOfRange { degree: a, n });
    }
    if let Some(t) = table_cache().read().expect("cache lock").get(&(n, a)) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(Sl2Table::compute(n, a));
    let mut cache = table_cache().write().expect("cache lock");
    Ok(Arc::clone(cache.entry((n, a)).or_insert(table)))
}

pub fn sl2_constants(n: usize, a: usize, target: Sl2Target) -> Result<Rational> {
    sl2_table(n, a)?.get(target)
}

/// The primitive components of a horizontal a-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzDecomposition {
    pub n: usize,
    pub degree: usize,
    pub components: BTreeMap<usize, HorizontalForm>,
}

impl LefschetzDecomposition {
    /// `π_i`, or zero if `i` is not a component index.
    pub fn component(&self, i: usize) -> HorizontalForm {
        self.components.get(&i).cloned().unwrap_or_else(|| HorizontalForm::zero(self.n, i))
    }

    /// `Σ L^{(a-i)/2} π_i`
    pub fn reconstruct(&self) -> HorizontalForm {
        let mut out = HorizontalForm::zero(self.n, self.degree);
        for (&i, pi) in &self.components {
            out = out.checked_add(&lefschetz_L(pi, (self.degree - i) / 2));
        }
        out
    }
}

/// Decomposes `φ` by the closed-form projections `Π_i = Σ_j c′ L^{j+(i-a)/2} Λ^j`.
pub fn primitive_projections(phi: &HorizontalForm) -> Result<LefschetzDecomposition> {
    let (n, a) = (phi.n(), phi.degree());
    let table = sl2_table(n, a)?;
    let mut duals = vec![phi.clone()];
    for _ in 0..a / 2 {
        duals.push(lefschetz_dual(duals.last().unwrap()));
    }
    let mut components = BTreeMap::new();
    for i in decomposition_indices(a, n) {
        let mut pi = HorizontalForm::zero(n, i);
        for j in (a - i) / 2..=a / 2 {
            let coeff = &table.c_prime[&(i, j)];
            if coeff.is_zero() {
                continue;
            }
            let term = lefschetz_L(&duals[j], j - (a - i) / 2);
            pi = pi.checked_add(&term.scale(coeff));
        }
        components.insert(i, pi);
    }
    Ok(LefschetzDecomposition { n, degree: a, components })
}

/// `Λ^s φ`, exposed for the constant identities.
pub fn lefschetz_dual_power(phi: &HorizontalForm, power: usize) -> HorizontalForm {
    let mut out = phi.clone();
    for _ in 0..power {
        out = lefschetz_dual(&out);
    }
    out
}

/// Basis words of the horizontal a-forms, `dz` excluded.
pub fn horizontal_words(n: usize, a: usize) -> Vec<Word> {
    Word::all_of_degree(2 * n, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::parse_form;

    fn h(text: &str, n: usize) -> HorizontalForm {
        HorizontalForm::try_from(parse_form(text, n).unwrap()).unwrap()
    }

    #[test]
    fn rejects_dz() {
        let err = HorizontalForm::try_from(parse_form("dz", 1).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotHorizontal);
    }

    #[test]
    fn lefschetz_examples() {
        let one = HorizontalForm(DifferentialForm::constant(1, int(1)));
        assert_eq!(lefschetz_L(&one, 1), h("dx1^dy1", 1));
        assert!(lefschetz_L(&one, 2).is_zero());
        assert_eq!(lefschetz_L(&h("dx2", 2), 1), h("dx1^dy1^dx2", 2));
        assert_eq!(lefschetz_dual(&h("dx1^dy1", 1)), one);
        assert!(lefschetz_dual(&h("dx1^dx2", 2)).is_zero());
        assert_eq!(lefschetz_dual(&h("dx1^dy1 + dx2^dy2", 2)), HorizontalForm(DifferentialForm::constant(2, int(2))));
        assert_eq!(lefschetz_dual(&h("dy1^dx1", 1)), HorizontalForm(DifferentialForm::constant(1, int(-1))));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&HorizontalForm(DifferentialForm::constant(2, int(1)))));
        assert!(!is_primitive(&h("dx1^dy1", 2)));
        assert!(is_primitive(&h("dx1^dy1 - dx2^dy2", 2)));
    }

    #[test]
    fn indices() {
        assert_eq!(decomposition_indices(2, 1), vec![0]);
        assert_eq!(decomposition_indices(3, 2), vec![1]);
        assert_eq!(decomposition_indices(4, 3), vec![0, 2]);
        assert_eq!(decomposition_indices(3, 3), vec![1, 3]);
        assert!(decomposition_indices(3, 1).is_empty());
    }

    #[test]
    fn decomposition_examples() {
        let d = primitive_projections(&h("dx1^dy1", 1)).unwrap();
        assert_eq!(d.components.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(d.component(0), HorizontalForm(DifferentialForm::constant(1, int(1))));

        let d = primitive_projections(&h("dx1^dx2", 2)).unwrap();
        assert!(d.component(0).is_zero());
        assert_eq!(d.component(2), h("dx1^dx2", 2));

        let d = primitive_projections(&h("dx1^dy1^dx2", 2)).unwrap();
        assert_eq!(d.component(1), h("dx2", 2));
        assert!(d.component(3).is_zero());
    }

    #[test]
    fn constants_examples() {
        assert_eq!(lambda_l_coefficient(1, 0, 1), int(1));
        assert_eq!(sl2_constants(1, 2, Sl2Target::CPrime { i: 0, j: 1 }).unwrap(), int(1));
        for n in 1..=3 {
            for a in 0..=n {
                assert_eq!(sl2_constants(n, a, Sl2Target::CPrime { i: a, j: 0 }).unwrap(), int(1));
            }
        }
        assert!(matches!(sl2_constants(2, 2, Sl2Target::CPrime { i: 2, j: 2 }), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(sl2_constants(1, 3, Sl2Target::C { s: 0, i: 1 }), Err(Error::DegreeOutOfRange { .. })));
    }
}
