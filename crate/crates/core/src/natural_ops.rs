//! The natural operators `P_{a,i}`, `Q` and the Rumin differential `D`,
//! together with a small algebra of compositions.

use std::fmt;

use crate::calculus::{exterior_derivative, lie_derivative, ContactContext, FormOperator};
use crate::error::{Error, Result};
use crate::exterior::{CovectorIndex, DifferentialForm};
use crate::lefschetz::{lefschetz_L, primitive_projections, HorizontalForm};

/// The `i` for which `P_{a,i}` exists: `0 ≤ i ≤ min(a-2, 2n-a)`, `i ≡ a mod 2`.
pub fn admissible_indices(a: usize, n: usize) -> Vec<usize> {
    if a < 2 || a > 2 * n {
        return Vec::new();
    }
    let top = (a - 2).min(2 * n - a);
    (a % 2..=top).step_by(2).collect()
}

fn check_form(omega: &DifferentialForm, n: usize, degree: usize) -> Result<()> {
    if omega.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: omega.n() });
    }
    if omega.degree() != degree {
        return Err(Error::DegreeMismatch { expected: degree, found: omega.degree() });
    }
    Ok(())
}

/// `π ∧ dα^power ∧ α`. Unchanged when `α ∧ τ` is added to `π`.
pub fn wedge_power_alpha(pi: &DifferentialForm, power: usize) -> DifferentialForm {
    let ctx = ContactContext::new(pi.n());
    let mut out = pi.clone();
    for _ in 0..power {
        out = out.wedge(&ctx.dalpha);
    }
    out.wedge(&ctx.alpha)
}

/// `P_{a,i} ω = L^{(a-i-2)/2} π_i ∧ α`, with `π_i` the primitive component
/// of the restriction of `ω` to the contact plane.
#[allow(non_snake_case)]
pub fn apply_P(a: usize, i: usize, omega: &DifferentialForm) -> Result<DifferentialForm> {
    let n = omega.n();
    if !admissible_indices(a, n).contains(&i) {
        return Err(Error::Inadmissible { a, i, n });
    }
    if omega.degree() != a {
        return Err(Error::DegreeMismatch { expected: a, found: omega.degree() });
    }
    let eta = HorizontalForm::try_from(omega.restrict_to_contact_plane())?;
    let pi = primitive_projections(&eta)?.component(i);
    Ok(wedge_power_alpha(pi.as_form(), (a - i - 2) / 2))
}

/// `ξ = -Σ L^{(n-1-i)/2} π_i(dω|_Q)`, the unique horizontal solution of
/// `(dω + dα ∧ ξ)|_Q = 0`.
pub fn rumin_correction(omega: &DifferentialForm) -> Result<HorizontalForm> {
    let n = omega.n();
    check_form(omega, n, n)?;
    let restricted = HorizontalForm::try_from(exterior_derivative(omega).restrict_to_contact_plane())?;
    let decomposition = primitive_projections(&restricted)?;
    let mut xi = DifferentialForm::zero(n, n - 1);
    for (&i, pi) in &decomposition.components {
        let term = lefschetz_L(pi, (n - 1 - i) / 2);
        xi = xi.checked_sub(term.as_form())?;
    }
    HorizontalForm::try_from(xi)
}

/// `Qω = ω + α ∧ ξ`.
pub fn q_via_xi(omega: &DifferentialForm) -> Result<DifferentialForm> {
    let xi = rumin_correction(omega)?;
    let alpha = ContactContext::new(omega.n()).alpha;
    omega.checked_add(&alpha.wedge(xi.as_form()))
}

/// `Q = id + (-1)^n Σ_i P_{n+1,i} ∘ d`.
pub fn q_via_composition(omega: &DifferentialForm) -> Result<DifferentialForm> {
    let n = omega.n();
    check_form(omega, n, n)?;
    let d_omega = exterior_derivative(omega);
    let mut out = omega.clone();
    for i in admissible_indices(n + 1, n) {
        let term = apply_P(n + 1, i, &d_omega)?;
        out = if n % 2 == 0 { out.checked_add(&term)? } else { out.checked_sub(&term)? };
    }
    Ok(out)
}

#[allow(non_snake_case)]
pub fn apply_Q(omega: &DifferentialForm) -> Result<DifferentialForm> {
    q_via_xi(omega)
}

/// `D ω = d(Qω)`.
pub fn rumin_via_xi(omega: &DifferentialForm) -> Result<DifferentialForm> {
    Ok(exterior_derivative(&q_via_xi(omega)?))
}

/// `D = d + (-1)^n Σ_i d ∘ P_{n+1,i} ∘ d`, assembled from operator handles.
pub fn rumin_via_composition(omega: &DifferentialForm) -> Result<DifferentialForm> {
    let n = omega.n();
    check_form(omega, n, n)?;
    let mut out = NaturalOperator::ext_d(n, n).apply(omega)?;
    for i in admissible_indices(n + 1, n) {
        let chain = NaturalOperator::compose(vec![
            NaturalOperator::ext_d(n, n),
            NaturalOperator::p(n, n + 1, i)?,
            NaturalOperator::ext_d(n, n),
        ])?;
        let term = chain.apply(omega)?;
        out = if n % 2 == 0 { out.checked_add(&term)? } else { out.checked_sub(&term)? };
    }
    Ok(out)
}

pub fn apply_rumin(omega: &DifferentialForm) -> Result<DifferentialForm> {
    rumin_via_xi(omega)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Id,
    ExtD,
    P {
        a: usize,
        i: usize,
    },
    Q,
    RuminD,
    /// Mathematical order: `[A, B]` is `A ∘ B`, so `B` acts first.
    Compose(Vec<NaturalOperator>),
}

/// A natural operator on forms of a fixed degree on ℝ^{2n+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalOperator {
    pub n: usize,
    pub kind: OperatorKind,
    pub domain: usize,
    pub codomain: usize,
    /// Differential order.
    pub order: usize,
}

impl NaturalOperator {
    pub fn id(n: usize, a: usize) -> Self {
        NaturalOperator { n, kind: OperatorKind::Id, domain: a, codomain: a, order: 0 }
    }

    /// `d` on a-forms.
    pub fn ext_d(n: usize, a: usize) -> Self {
        NaturalOperator { n, kind: OperatorKind::ExtD, domain: a, codomain: a + 1, order: 1 }
    }

    pub fn p(n: usize, a: usize, i: usize) -> Result<Self> {
        if !admissible_indices(a, n).contains(&i) {
            return Err(Error::Inadmissible { a, i, n });
        }
        Ok(NaturalOperator { n, kind: OperatorKind::P { a, i }, domain: a, codomain: a - 1, order: 0 })
    }

    pub fn q(n: usize) -> Self {
        NaturalOperator { n, kind: OperatorKind::Q, domain: n, codomain: n, order: 1 }
    }

    pub fn rumin(n: usize) -> Self {
        NaturalOperator { n, kind: OperatorKind::RuminD, domain: n, codomain: n + 1, order: 2 }
    }

    /// `ops[0] ∘ ops[1] ∘ ...`; nested compositions are flattened.
    pub fn compose(ops: Vec<NaturalOperator>) -> Result<Self> {
        let first = ops.first().ok_or_else(|| Error::InvalidArgument("empty composition".into()))?;
        let n = first.n;
        let mut flat = Vec::new();
        for op in ops {
            if op.n != n {
                return Err(Error::DimensionMismatch { left: n, right: op.n });
            }
            match op.kind {
                OperatorKind::Compose(inner) => flat.extend(inner),
                _ => flat.push(op),
            }
        }
        for pair in flat.windows(2) {
            if pair[0].domain != pair[1].codomain {
                return Err(Error::DegreeMismatch { expected: pair[0].domain, found: pair[1].codomain });
            }
        }
        if flat.len() == 1 {
            return Ok(flat.pop().unwrap());
        }
        let codomain = flat[0].codomain;
        let domain = flat.last().unwrap().domain;
        let order = flat.iter().map(|op| op.order).sum();
        Ok(NaturalOperator { n, kind: OperatorKind::Compose(flat), domain, codomain, order })
    }

    pub fn apply(&self, omega: &DifferentialForm) -> Result<DifferentialForm> {
        check_form(omega, self.n, self.domain)?;
        match &self.kind {
            OperatorKind::Id => Ok(omega.clone()),
            OperatorKind::ExtD => Ok(exterior_derivative(omega)),
            OperatorKind::P { a, i } => apply_P(*a, *i, omega),
            OperatorKind::Q => apply_Q(omega),
            OperatorKind::RuminD => apply_rumin(omega),
            OperatorKind::Compose(ops) => {
                let mut out = omega.clone();
                for op in ops.iter().rev() {
                    out = op.apply(&out)?;
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for NaturalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OperatorKind::Id => write!(f, "id"),
            OperatorKind::ExtD => write!(f, "d"),
            OperatorKind::P { a, i } => write!(f, "P_{{{a},{i}}}"),
            OperatorKind::Q => write!(f, "Q"),
            OperatorKind::RuminD => write!(f, "D"),
            OperatorKind::Compose(ops) => {
                for (k, op) in ops.iter().enumerate() {
                    if k > 0 {
                        write!(f, "∘")?;
                    }
                    write!(f, "{op}")?;
                }
                Ok(())
            }
        }
    }
}

impl FormOperator for NaturalOperator {
    fn name(&self) -> String {
        self.to_string()
    }

    fn domain_degree(&self) -> usize {
        self.domain
    }

    fn apply(&self, omega: &DifferentialForm) -> Result<DifferentialForm> {
        NaturalOperator::apply(self, omega)
    }
}

/// Operators built from the contact form that are not natural under
/// contactomorphisms; used to show the equivariance check has teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ControlOperator {
    /// `ω ↦ ω ∧ dz`
    WedgeDz { n: usize, a: usize },
    /// `ω ↦ i_R ω` for the Reeb field `R = ∂z`
    ReebInterior { n: usize, a: usize },
    /// `ω ↦ L_R ω`
    ReebLie { n: usize, a: usize },
}

impl FormOperator for ControlOperator {
    fn name(&self) -> String {
        match self {
            ControlOperator::WedgeDz { .. } => "wedge_dz".into(),
            ControlOperator::ReebInterior { .. } => "reeb_interior".into(),
            ControlOperator::ReebLie { .. } => "reeb_lie".into(),
        }
    }

    fn domain_degree(&self) -> usize {
        match *self {
            ControlOperator::WedgeDz { a, .. }
            | ControlOperator::ReebInterior { a, .. }
            | ControlOperator::ReebLie { a, .. } => a,
        }
    }

    fn apply(&self, omega: &DifferentialForm) -> Result<DifferentialForm> {
        let (ControlOperator::WedgeDz { n, a }
        | ControlOperator::ReebInterior { n, a }
        | ControlOperator::ReebLie { n, a }) = *self;
        check_form(omega, n, a)?;
        let ctx = ContactContext::new(n);
        Ok(match self {
            ControlOperator::WedgeDz { .. } => omega.wedge(&DifferentialForm::covector(n, CovectorIndex::Dz)),
            ControlOperator::ReebInterior { .. } => omega.interior(&ctx.reeb),
            ControlOperator::ReebLie { .. } => lie_derivative(&ctx.reeb, omega),
        })
    }
}
