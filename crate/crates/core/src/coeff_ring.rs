//! Exact rationals and multivariate polynomials over the coordinates
//! `x1..xn, y1..yn, z` of the standard contact space.
//!
//! A [`Polynomial`] stores a dense exponent vector of length `2n+1` for every
//! monomial and never keeps a zero coefficient, so structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A coordinate of ℝ^{2n+1}. Indices are 1-based, matching the usual
/// notation `x1, ..., xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    Z,
}

impl Var {
    /// Position in the coordinate order `x1..xn, y1..yn, z`.
    pub fn position(self, n: usize) -> usize {
        match self {
            Var::X(k) => k - 1,
            Var::Y(k) => n + k - 1,
            Var::Z => 2 * n,
        }
    }

    pub fn from_position(pos: usize, n: usize) -> Var {
        assert!(pos <= 2 * n, "coordinate position {pos} out of range for n = {n}");
        if pos < n {
            Var::X(pos + 1)
        } else if pos < 2 * n {
            Var::Y(pos - n + 1)
        } else {
            Var::Z
        }
    }

    pub fn all(n: usize) -> impl Iterator<Item = Var> {
        (0..=2 * n).map(move |p| Var::from_position(p, n))
    }

    pub fn is_valid(self, n: usize) -> bool {
        match self {
            Var::X(k) | Var::Y(k) => (1..=n).contains(&k),
            Var::Z => true,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(k) => write!(f, "x{k}"),
            Var::Y(k) => write!(f, "y{k}"),
            Var::Z => f.write_str("z"),
        }
    }
}

/// Exponent vector, one entry per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, 2 * n + 1))
    }

    pub fn from_exponents(exponents: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Display order: higher total degree first, then lexicographically
    /// larger exponent vectors first.
    fn display_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| other.0.cmp(&self.0))
    }

    pub(crate) fn write(&self, n: usize, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (pos, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            write!(f, "{}", Var::from_position(pos, n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Polynomial in `x1..xn, y1..yn, z` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(n, c, Monomial::one(n))
    }

    pub fn var(n: usize, v: Var) -> Self {
        assert!(v.is_valid(n), "variable {v} invalid for n = {n}");
        let mut m = Monomial::one(n);
        m.0[v.position(n)] = 1;
        Self::term(n, Rational::one(), m)
    }

    pub fn term(n: usize, c: Rational, m: Monomial) -> Self {
        assert_eq!(m.0.len(), 2 * n + 1, "exponent vector length must be 2n+1");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.0.len(), 2 * n + 1, "exponent vector length must be 2n+1");
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.n)).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Exact ring operation with a dimension check.
    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: Var) -> Polynomial {
        let pos = v.position(self.n);
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[pos];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[pos] = e - 1;
            out.add_term(dm, c * int(i64::from(e)));
        }
        out
    }

    /// Substitutes the polynomial `value` for the variable `v`.
    pub fn substitute(&self, v: Var, value: &Polynomial) -> Result<Polynomial> {
        self.check_dim(value)?;
        let pos = v.position(self.n);
        let mut powers = vec![Polynomial::one(self.n)];
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = usize::from(m.0[pos]);
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_unchecked(value);
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[pos] = 0;
            let head = Polynomial::term(self.n, c.clone(), rest);
            out = out.add_unchecked(&head.mul_unchecked(&powers[e]), false);
        }
        Ok(out)
    }

    /// Evaluates at a point given in coordinate order `x1..xn, y1..yn, z`.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), 2 * self.n + 1, "point must have 2n+1 coordinates");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Terms in display order.
    pub(crate) fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        terms
    }
}

fn assert_same_dim(p: &Polynomial, q: &Polynomial) {
    assert_eq!(p.n, q.n, "polynomial dimension mismatch");
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same_dim(self, rhs);
        self.add_unchecked(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same_dim(self, rhs);
        self.add_unchecked(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same_dim(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// Writes a rational coefficient in the `p/q` text form.
pub(crate) fn write_rational(c: &Rational, f: &mut impl fmt::Write) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Writes `c * m` (coefficient then monomial) with the sign stripped; the
/// caller handles the separator. `suffix` is true when more factors follow,
/// in which case a unit coefficient is omitted.
pub(crate) fn write_scaled_monomial(
    n: usize,
    c: &Rational,
    m: &Monomial,
    suffix: bool,
    f: &mut impl fmt::Write,
) -> fmt::Result {
    let abs = c.abs();
    let unit = abs.is_one();
    let mut wrote = false;
    if !unit || (m.is_one() && !suffix) {
        write_rational(&abs, f)?;
        wrote = true;
    }
    if !m.is_one() {
        if wrote {
            f.write_char(' ')?;
        }
        m.write(n, f)?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_scaled_monomial(self.n, c, m, false, f)?;
        }
        Ok(())
    }
}
