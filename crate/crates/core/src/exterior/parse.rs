//! Text form of differential forms.
//!
//! ```text
//! form      := term (("+"|"-") term)*
//! term      := [rational] [monomial] [wedgeword]
//! wedgeword := basis ("^" basis)*
//! basis     := "dx"INT | "dy"INT | "dz"
//! monomial  := var ("*" var)*
//! var       := ("x"|"y")INT["^"INT] | "z"["^"INT]
//! ```
//!
//! Whitespace (or `*`) between the parts of a term is multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{CovectorIndex, DifferentialForm, Word};
use crate::coeff_ring::{write_scaled_monomial, Monomial, Polynomial, Rational, Var};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

/// One parsed term: coefficient, exponents, and covectors in written order.
struct Term {
    coeff: Rational,
    exponents: Vec<u16>,
    covectors: Vec<CovectorIndex>,
}

#[derive(PartialEq, PartialOrd, Clone, Copy)]
enum Stage {
    Start,
    Coefficient,
    Monomial,
    Wedge,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.get(self.pos + offset).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn small_integer(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let value = self.integer()?;
        usize::try_from(value).map_err(|_| Error::Syntax { pos: start, msg: format!("{what} too large") })
    }

    fn index(&mut self, letter: char) -> Result<usize> {
        let start = self.pos;
        let k = self.small_integer("index")?;
        if k == 0 || k > self.n {
            return Err(Error::UnknownVariable { name: format!("{letter}{k}"), pos: start, n: self.n });
        }
        Ok(k)
    }

    fn exponent(&mut self) -> Result<u16> {
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'^') && matches!(self.peek_at(1), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
            let start = self.pos;
            let e = self.small_integer("exponent")?;
            return u16::try_from(e).map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() });
        }
        self.pos = save;
        Ok(1)
    }

    fn basis(&mut self) -> Result<CovectorIndex> {
        debug_assert_eq!(self.peek(), Some(b'd'));
        self.pos += 1;
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(CovectorIndex::Dx(self.index('x')?))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(CovectorIndex::Dy(self.index('y')?))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(CovectorIndex::Dz)
            }
            _ => self.error("expected dx<k>, dy<k> or dz"),
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let mut term = Term { coeff: Rational::one(), exponents: vec![0; 2 * self.n + 1], covectors: Vec::new() };
        let mut stage = Stage::Start;
        loop {
            self.skip_ws();
            let factor_start = self.pos;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    if stage >= Stage::Coefficient {
                        return self.error("coefficient must come first in a term");
                    }
                    let numer = self.integer()?;
                    let mut denom = BigInt::one();
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        denom = self.integer()?;
                        if denom == BigInt::from(0) {
                            self.pos = factor_start;
                            return self.error("zero denominator");
                        }
                    }
                    term.coeff = Rational::new(numer, denom);
                    stage = Stage::Coefficient;
                }
                Some(b'd') if matches!(self.peek_at(1), Some(b'x' | b'y' | b'z')) => {
                    if stage == Stage::Wedge {
                        return self.error("expected '^' between basis covectors");
                    }
                    term.covectors.push(self.basis()?);
                    loop {
                        let save = self.pos;
                        self.skip_ws();
                        if self.peek() == Some(b'^') {
                            self.pos += 1;
                            self.skip_ws();
                            if self.peek() != Some(b'd') {
                                return self.error("expected a basis covector after '^'");
                            }
                            term.covectors.push(self.basis()?);
                        } else {
                            self.pos = save;
                            break;
                        }
                    }
                    stage = Stage::Wedge;
                }
                Some(c @ (b'x' | b'y' | b'z')) => {
                    if stage == Stage::Wedge {
                        return self.error("coefficient variables must precede the wedge word");
                    }
                    self.pos += 1;
                    let v = match c {
                        b'x' => Var::X(self.index('x')?),
                        b'y' => Var::Y(self.index('y')?),
                        _ => Var::Z,
                    };
                    let e = self.exponent()?;
                    term.exponents[v.position(self.n)] += e;
                    stage = Stage::Monomial;
                }
                _ => {
                    if stage == Stage::Start {
                        return self.error("expected a term");
                    }
                    return self.error("unexpected character");
                }
            }
            // Decide whether the term continues.
            self.skip_ws();
            match self.peek() {
                None | Some(b'+' | b'-') => break,
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => {}
            }
        }
        Ok(term)
    }

    fn form(&mut self) -> Result<DifferentialForm> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negative = c == b'-';
            self.pos += 1;
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(c @ (b'+' | b'-')) => {
                    negative = c == b'-';
                    self.pos += 1;
                }
                Some(_) => return self.error("expected '+' or '-'"),
            }
        }

        let n = self.n;
        let degree = terms[0].covectors.len();
        if let Some(t) = terms.iter().find(|t| t.covectors.len() != degree) {
            return Err(Error::MixedDegrees { first: degree, second: t.covectors.len() });
        }
        if degree > 2 * n + 1 {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        let mut out = DifferentialForm::zero(n, degree);
        for t in terms {
            let f = Polynomial::term(n, t.coeff, Monomial::from_exponents(&t.exponents));
            let piece = DifferentialForm::function(f).wedge(&DifferentialForm::basis(n, &t.covectors));
            out = out.checked_add(&piece)?;
        }
        Ok(out)
    }
}

/// Parses a form on ℝ^{2n+1} from its text representation.
pub fn parse_form(text: &str, n: usize) -> Result<DifferentialForm> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    p.form()
}

fn write_word(w: Word, n: usize, f: &mut impl fmt::Write) -> fmt::Result {
    for (i, c) in w.covectors(n).enumerate() {
        if i > 0 {
            f.write_char('^')?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

pub(super) fn write_form(form: &DifferentialForm, f: &mut impl fmt::Write) -> fmt::Result {
    let n = form.n;
    if form.is_zero() {
        return f.write_char('0');
    }
    let mut first = true;
    for (w, coeff) in &form.terms {
        for (m, c) in coeff.sorted_terms() {
            match (first, c.is_negative()) {
                (true, true) => f.write_char('-')?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mut head = String::new();
            write_scaled_monomial(n, c, m, !w.is_empty(), &mut head)?;
            f.write_str(&head)?;
            if !w.is_empty() {
                if !head.is_empty() {
                    f.write_char(' ')?;
                }
                write_word(*w, n, f)?;
            }
        }
    }
    Ok(())
}
