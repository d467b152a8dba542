//! Exact linear algebra: a small dense rational solver and an incremental
//! sparse fraction-free echelon form over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff_ring::Rational;

/// Unique solution of a square system `m x = rhs`, or `None` if `m` is singular.
pub fn solve_square(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let size = m.len();
    assert_eq!(rhs.len(), size);
    for col in 0..size {
        let pivot = (col..size).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..size {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..size {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..size {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs)
}

/// A sparse integer row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators and removes the content of a rational row.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut entries: Vec<(usize, Rational)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort_by_key(|(c, _)| *c);
    let mut lcm = BigInt::one();
    for (_, v) in &entries {
        lcm = lcm.lcm(v.denom());
    }
    let mut row: SparseRow = entries.into_iter().map(|(c, v)| (c, v.numer() * (&lcm / v.denom()))).collect();
    normalize(&mut row);
    row
}

fn normalize(row: &mut SparseRow) {
    let Some((_, first)) = row.first() else { return };
    let mut g = first.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.is_negative();
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `p * row - c * pivot` with both rows sorted.
fn combine(row: &SparseRow, p: &BigInt, pivot: &SparseRow, c: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, value) = if ci < cj {
            i += 1;
            (ci, p * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(c * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, p * &row[i - 1].1 - c * &pivot[j - 1].1)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

/// Row echelon form built one row at a time; each stored row has a distinct
/// leading column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; returns true if it was
    /// independent and has been added.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        normalize(&mut row);
        while let Some((lead, value)) = row.first() {
            assert!(*lead < self.ncols, "column {lead} out of range");
            match self.pivots.get(lead) {
                None => {
                    self.pivots.insert(*lead, row);
                    return true;
                }
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd(value);
                    let (p, c) = (p / &g, value / &g);
                    row = combine(&row, &p, pivot, &c);
                    normalize(&mut row);
                }
            }
        }
        false
    }

    /// Basis of `{x : Ax = 0}` as rational vectors, one per free column, in
    /// increasing order of the free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let reduced = self.reduced_rows();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.ncols];
            v[f] = Rational::one();
            for (&p, row) in &reduced {
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v[p] = -Rational::new(row[k].1.clone(), row[0].1.clone());
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced echelon form: every pivot column is zero outside its own row.
    fn reduced_rows(&self) -> BTreeMap<usize, SparseRow> {
        let mut rows = self.pivots.clone();
        let cols: Vec<usize> = rows.keys().copied().rev().collect();
        for &pc in &cols {
            let pivot = rows[&pc].clone();
            let p = &pivot[0].1;
            for (_, row) in rows.range_mut(..pc) {
                if let Ok(k) = row.binary_search_by_key(&pc, |e| e.0) {
                    let value = row[k].1.clone();
                    let g = p.gcd(&value);
                    *row = combine(row, &(p / &g), &pivot, &(&value / &g));
                    normalize(row);
                }
            }
        }
        rows
    }
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(integer_row(r.iter().cloned().enumerate()));
    }
    ech.rank()
}
