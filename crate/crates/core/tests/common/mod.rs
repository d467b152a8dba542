//! Independent oracles: dense rational linear algebra, evaluation of forms on
//! vectors through determinants, and a Lefschetz decomposition built from
//! the kernel of powers of `L` instead of `Λ`.

#![allow(dead_code)]

use num_traits::{One, Zero};

use contact_forms::coeff_ring::{Polynomial, Rational, Var};
use contact_forms::exterior::{DifferentialForm, Word};

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Rational::one() / m[row][col].clone();
        for v in m[row].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let sub = f.clone() * m[row][c].clone();
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : M v = 0}`.
pub fn dense_nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves a square system by row reducing the augmented matrix.
pub fn dense_solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> =
        m.iter().zip(rhs).map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

fn permutation_sign(p: &[usize]) -> Rational {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

/// Leibniz expansion of a determinant.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    permutations(m.len())
        .into_iter()
        .map(|p| {
            let mut term = permutation_sign(&p);
            for (r, &c) in p.iter().enumerate() {
                term *= m[r][c].clone();
            }
            term
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `ω_p(v_1, ..., v_k) = Σ_w f_w(p) det[dw_j(v_l)]`.
pub fn eval_form(form: &DifferentialForm, vectors: &[Vec<Rational>], point: &[Rational]) -> Rational {
    assert_eq!(vectors.len(), form.degree());
    let mut total = Rational::zero();
    for (word, f) in form.terms() {
        let positions: Vec<usize> = word.positions().collect();
        let m: Vec<Vec<Rational>> = positions.iter().map(|&p| vectors.iter().map(|v| v[p].clone()).collect()).collect();
        total += f.eval(point) * det(&m);
    }
    total
}

pub fn unit(dim: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[k] = Rational::one();
    v
}

/// The horizontal frame `∂x_i`, `∂y_i - x_i ∂z` at `point`.
pub fn contact_frame(n: usize, point: &[Rational]) -> Vec<Vec<Rational>> {
    let dim = 2 * n + 1;
    let mut frame: Vec<Vec<Rational>> = (0..n).map(|i| unit(dim, i)).collect();
    for i in 0..n {
        let mut v = unit(dim, n + i);
        v[2 * n] = -point[i].clone();
        frame.push(v);
    }
    frame
}

/// `ω₀ = Σ dx_k ∧ dy_k` built directly from words.
pub fn omega0(n: usize) -> DifferentialForm {
    let mut out = DifferentialForm::zero(n, 2);
    for k in 0..n {
        let w = DifferentialForm::monomial(Polynomial::one(n), Word::from_positions([k, n + k]));
        out = out.checked_add(&w).unwrap();
    }
    out
}

pub fn l_power(form: &DifferentialForm, power: usize) -> DifferentialForm {
    let w = omega0(form.n());
    (0..power).fold(form.clone(), |acc, _| acc.wedge(&w))
}

fn constant_vector(form: &DifferentialForm, words: &[Word]) -> Vec<Rational> {
    words.iter().map(|w| form.coefficient(*w).constant_term()).collect()
}

fn form_from_vector(n: usize, degree: usize, words: &[Word], v: &[Rational]) -> DifferentialForm {
    let mut out = DifferentialForm::zero(n, degree);
    for (w, c) in words.iter().zip(v) {
        if !c.is_zero() {
            out = out.checked_add(&DifferentialForm::monomial(Polynomial::constant(n, c.clone()), *w)).unwrap();
        }
    }
    out
}

/// Primitive `i`-forms as the kernel of `L^{n-i+1}`, which needs no `Λ`.
pub fn primitive_basis(n: usize, i: usize) -> Vec<DifferentialForm> {
    let words = Word::all_of_degree(2 * n, i);
    let power = n + 1 - i;
    let images: Vec<DifferentialForm> =
        words.iter().map(|w| l_power(&DifferentialForm::monomial(Polynomial::one(n), *w), power)).collect();
    let target = if i + 2 * power <= 2 * n { Word::all_of_degree(2 * n, i + 2 * power) } else { Vec::new() };
    let m: Vec<Vec<Rational>> =
        target.iter().map(|t| images.iter().map(|f| f.coefficient(*t).constant_term()).collect()).collect();
    let kernel = if m.is_empty() {
        (0..words.len()).map(|k| unit(words.len(), k)).collect()
    } else {
        dense_nullspace(&m, words.len())
    };
    kernel.iter().map(|v| form_from_vector(n, i, &words, v)).collect()
}

/// Components `π_i` of a constant horizontal `a`-form, keyed by `i`.
pub fn oracle_decomposition(phi: &DifferentialForm) -> Vec<(usize, DifferentialForm)> {
    let (n, a) = (phi.n(), phi.degree());
    let words = Word::all_of_degree(2 * n, a);
    let indices: Vec<usize> = (0..=a.min(2 * n - a)).filter(|i| (a - i) % 2 == 0).collect();
    let mut columns = Vec::new();
    for &i in &indices {
        for p in primitive_basis(n, i) {
            columns.push((i, p));
        }
    }
    assert_eq!(columns.len(), words.len(), "Lefschetz images must form a basis");
    let lifted: Vec<Vec<Rational>> =
        columns.iter().map(|(i, p)| constant_vector(&l_power(p, (a - i) / 2), &words)).collect();
    let m: Vec<Vec<Rational>> = (0..words.len()).map(|r| lifted.iter().map(|c| c[r].clone()).collect()).collect();
    let coeffs = dense_solve(&m, &constant_vector(phi, &words)).expect("basis");
    indices
        .iter()
        .map(|&i| {
            let mut pi = DifferentialForm::zero(n, i);
            for ((j, p), c) in columns.iter().zip(&coeffs) {
                if *j == i {
                    pi = pi.checked_add(&p.scale(c)).unwrap();
                }
            }
            (i, pi)
        })
        .collect()
}

/// The oracle extended to polynomial coefficients word by word.
pub fn oracle_component(phi: &DifferentialForm, i: usize) -> DifferentialForm {
    let n = phi.n();
    let mut out = DifferentialForm::zero(n, i);
    for (w, f) in phi.terms() {
        let basis = DifferentialForm::monomial(Polynomial::one(n), *w);
        for (j, pi) in oracle_decomposition(&basis) {
            if j == i {
                out = out.checked_add(&pi.mul_function(f)).unwrap();
            }
        }
    }
    out
}

/// `α = dz + Σ x_k dy_k`, written out by hand.
pub fn alpha(n: usize) -> DifferentialForm {
    let mut out = DifferentialForm::monomial(Polynomial::one(n), Word::from_positions([2 * n]));
    for k in 0..n {
        let term = DifferentialForm::monomial(Polynomial::var(n, Var::X(k + 1)), Word::from_positions([n + k]));
        out = out.checked_add(&term).unwrap();
    }
    out
}

/// A point of ℝ^{2n+1} with small distinct rational coordinates.
pub fn sample_point(n: usize, seed: u64) -> Vec<Rational> {
    (0..=2 * n).map(|k| q(((seed as i64 + 3 * k as i64) % 7) - 3, 1 + (k as i64 % 3))).collect()
}
