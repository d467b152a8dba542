//! Generators of the isotropy algebra of the origin, as linear maps of
//! `V = T_0 ℝ^{2n+1}` in the basis `(x1..xn, y1..yn, z)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff_ring::{int, rat, Polynomial, Rational, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algebra {
    /// The symplectic block alone, acting on the contact plane.
    SpOnly,
    /// Symplectic block, translations `R_w` and the scaling.
    Full,
}

/// Which block parameter a generator switches on (indices are 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorLabel {
    A { i: usize, j: usize },
    B { i: usize, j: usize },
    C { i: usize, j: usize },
    Ex(usize),
    Ey(usize),
    Scaling,
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::A { i, j } => write!(f, "A({i},{j})"),
            GeneratorLabel::B { i, j } => write!(f, "B({i},{j})"),
            GeneratorLabel::C { i, j } => write!(f, "C({i},{j})"),
            GeneratorLabel::Ex(i) => write!(f, "Ex({i})"),
            GeneratorLabel::Ey(i) => write!(f, "Ey({i})"),
            GeneratorLabel::Scaling => write!(f, "scaling"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieGenerator {
    pub n: usize,
    pub label: GeneratorLabel,
    /// `(2n+1) × (2n+1)`, row = output coordinate.
    pub matrix: Vec<Vec<Rational>>,
}

/// The matrix
/// ```text
/// [ hz Id - Bᵗ   -C   -Ey ]
/// [ A             B    Ex ]
/// [ 0             0    hz ]
/// ```
fn block_matrix(n: usize, label: GeneratorLabel) -> Vec<Vec<Rational>> {
    let dim = 2 * n + 1;
    let mut m = vec![vec![Rational::zero(); dim]; dim];
    let (x, y, z) = (|k: usize| k - 1, |k: usize| n + k - 1, 2 * n);
    match label {
        GeneratorLabel::A { i, j } => {
            m[y(i)][x(j)] = Rational::one();
            m[y(j)][x(i)] = Rational::one();
        }
        GeneratorLabel::B { i, j } => {
            m[y(i)][y(j)] = Rational::one();
            m[x(j)][x(i)] = -Rational::one();
        }
        GeneratorLabel::C { i, j } => {
            m[x(i)][y(j)] = -Rational::one();
            m[x(j)][y(i)] = -Rational::one();
        }
        GeneratorLabel::Ex(i) => m[y(i)][z] = Rational::one(),
        GeneratorLabel::Ey(i) => m[x(i)][z] = -Rational::one(),
        GeneratorLabel::Scaling => {
            for k in 1..=n {
                m[x(k)][x(k)] = Rational::one();
                m[y(k)][y(k)] = Rational::one();
            }
            m[z][z] = int(2);
        }
    }
    m
}

impl LieGenerator {
    pub fn new(n: usize, label: GeneratorLabel) -> Self {
        LieGenerator { n, label, matrix: block_matrix(n, label) }
    }

    /// A Hamiltonian whose contact field vanishes at the origin with this
    /// generator as its linear part.
    pub fn hamiltonian(&self) -> Polynomial {
        let n = self.n;
        let v = |var: Var| Polynomial::var(n, var);
        match self.label {
            GeneratorLabel::A { i, j } if i == j => (&v(Var::X(i)) * &v(Var::X(i))).scale(&rat(1, 2)),
            GeneratorLabel::A { i, j } => &v(Var::X(i)) * &v(Var::X(j)),
            GeneratorLabel::B { i, j } => &v(Var::X(i)) * &v(Var::Y(j)),
            GeneratorLabel::C { i, j } if i == j => (&v(Var::Y(i)) * &v(Var::Y(i))).scale(&rat(1, 2)),
            GeneratorLabel::C { i, j } => &v(Var::Y(i)) * &v(Var::Y(j)),
            GeneratorLabel::Ex(i) => &v(Var::X(i)) * &v(Var::Z),
            GeneratorLabel::Ey(i) => &v(Var::Y(i)) * &v(Var::Z),
            GeneratorLabel::Scaling => {
                let mut h = v(Var::Z).scale(&int(2));
                for k in 1..=n {
                    h = &h + &(&v(Var::X(k)) * &v(Var::Y(k)));
                }
                h
            }
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, v)| r == c || v.is_zero()))
    }
}

/// `sp_only`: `n(2n+1)` generators; `full` adds `Ex(i)`, `Ey(i)` and the scaling.
pub fn isotropy_generators(n: usize, algebra: Algebra) -> Vec<LieGenerator> {
    assert!(n >= 1, "n must be at least 1");
    let mut labels = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            labels.push(GeneratorLabel::A { i, j });
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            labels.push(GeneratorLabel::B { i, j });
        }
    }
    for i in 1..=n {
        for j in i..=n {
            labels.push(GeneratorLabel::C { i, j });
        }
    }
    if algebra == Algebra::Full {
        labels.extend((1..=n).map(GeneratorLabel::Ex));
        labels.extend((1..=n).map(GeneratorLabel::Ey));
        labels.push(GeneratorLabel::Scaling);
    }
    labels.into_iter().map(|l| LieGenerator::new(n, l)).collect()
}
