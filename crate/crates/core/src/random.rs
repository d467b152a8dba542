//! Seeded generation of random polynomials, forms and vector fields.
//!
//! Polynomials have 1 to 3 terms of total degree at most `max_degree`, with
//! coefficients drawn from a small fixed set of nonzero rationals. A random
//! form includes each basis word with probability ½ (at least one word is
//! always present).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff_ring::{rat, Monomial, Polynomial, Rational};
use crate::exterior::{DifferentialForm, VectorField, Word};

const COEFFICIENTS: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1), (3, 1)];

pub struct FormSampler {
    rng: ChaCha8Rng,
    n: usize,
    max_degree: u32,
}

impl FormSampler {
    pub fn new(n: usize, seed: u64, max_degree: u32) -> Self {
        FormSampler { rng: ChaCha8Rng::seed_from_u64(seed), n, max_degree }
    }

    /// An independent stream of the same seed, e.g. one per named check.
    pub fn with_stream(n: usize, seed: u64, stream: u64, max_degree: u32) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        FormSampler { rng, n, max_degree }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient(&mut self) -> Rational {
        let (p, q) = *COEFFICIENTS.choose(&mut self.rng).expect("nonempty");
        rat(p, q)
    }

    fn monomial(&mut self, degree: u32) -> Monomial {
        let mut exps = vec![0u16; 2 * self.n + 1];
        for _ in 0..degree {
            let k = self.rng.gen_range(0..exps.len());
            exps[k] += 1;
        }
        Monomial::from_exponents(&exps)
    }

    /// A nonzero polynomial of degree at most `max_degree`.
    pub fn polynomial(&mut self) -> Polynomial {
        self.polynomial_of_degree(self.max_degree)
    }

    pub fn polynomial_of_degree(&mut self, max_degree: u32) -> Polynomial {
        loop {
            let count = self.rng.gen_range(1..=3);
            let terms: Vec<(Monomial, Rational)> = (0..count)
                .map(|_| {
                    let d = self.rng.gen_range(0..=max_degree);
                    (self.monomial(d), self.coefficient())
                })
                .collect();
            let p = Polynomial::from_terms(self.n, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn form_on(&mut self, words: Vec<Word>, degree: usize) -> DifferentialForm {
        let mut out = DifferentialForm::zero(self.n, degree);
        if words.is_empty() {
            return out;
        }
        let forced = self.rng.gen_range(0..words.len());
        for (k, w) in words.into_iter().enumerate() {
            if k == forced || self.rng.gen_bool(0.5) {
                let f = self.polynomial();
                out = out.checked_add(&DifferentialForm::monomial(f, w)).expect("same degree");
            }
        }
        out
    }

    /// A random form of the given degree on ℝ^{2n+1}.
    pub fn form(&mut self, degree: usize) -> DifferentialForm {
        let dim = 2 * self.n + 1;
        let words = if degree > dim { Vec::new() } else { Word::all_of_degree(dim, degree) };
        self.form_on(words, degree)
    }

    /// A random `dz`-free form.
    pub fn horizontal_form(&mut self, degree: usize) -> DifferentialForm {
        let dim = 2 * self.n;
        let words = if degree > dim { Vec::new() } else { Word::all_of_degree(dim, degree) };
        self.form_on(words, degree)
    }

    /// A random form with constant coefficients.
    pub fn constant_form(&mut self, degree: usize) -> DifferentialForm {
        let form = self.form(degree);
        form.map_coefficients(|f| Polynomial::constant(f.n(), f.constant_term()))
    }

    pub fn vector_field(&mut self) -> VectorField {
        let components = (0..2 * self.n + 1).map(|_| self.polynomial()).collect();
        VectorField::from_components(self.n, components).expect("2n+1 components")
    }

    /// A degree in `0..=top`.
    pub fn degree_up_to(&mut self, top: usize) -> usize {
        self.rng.gen_range(0..=top)
    }
}
