//! Exterior derivative, Lie derivative and contact vector fields on the
//! standard contact space `(ℝ^{2n+1}, α = dz + Σ xi dyi)`.

use crate::coeff_ring::{Polynomial, Var};
use crate::error::{Error, Result};
use crate::exterior::{CovectorIndex, DifferentialForm, VectorField, Word};

/// The standard contact structure on ℝ^{2n+1}.
#[derive(Clone, Debug)]
pub struct ContactContext {
    pub n: usize,
    /// `α = dz + Σ xi dyi`
    pub alpha: DifferentialForm,
    /// `dα = Σ dxi ∧ dyi`
    pub dalpha: DifferentialForm,
    /// Reeb field `∂z`.
    pub reeb: VectorField,
}

impl ContactContext {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "n must be at least 1");
        let mut alpha = DifferentialForm::covector(n, CovectorIndex::Dz);
        let mut dalpha = DifferentialForm::zero(n, 2);
        for k in 1..=n {
            let dy = DifferentialForm::covector(n, CovectorIndex::Dy(k));
            alpha = alpha.checked_add(&dy.mul_function(&Polynomial::var(n, Var::X(k)))).unwrap();
            let pair = DifferentialForm::basis(n, &[CovectorIndex::Dx(k), CovectorIndex::Dy(k)]);
            dalpha = dalpha.checked_add(&pair).unwrap();
        }
        ContactContext { n, alpha, dalpha, reeb: VectorField::coordinate(n, Var::Z) }
    }

    /// `α` evaluated at the origin, i.e. `dz`.
    pub fn alpha_at_origin(&self) -> DifferentialForm {
        self.alpha.at_origin()
    }
}

/// Exterior derivative `d(f dw) = Σ ∂f/∂v dv ∧ dw`.
pub fn exterior_derivative(omega: &DifferentialForm) -> DifferentialForm {
    let n = omega.n();
    let mut out = DifferentialForm::zero(n, omega.degree() + 1);
    if omega.degree() + 1 > omega.dim() {
        return out;
    }
    for (w, f) in omega.terms() {
        for v in Var::all(n) {
            let pos = v.position(n);
            if w.contains(pos) {
                continue;
            }
            let df = f.partial(v);
            if df.is_zero() {
                continue;
            }
            let (negative, word) = Word::from_positions([pos]).wedge(*w).expect("disjoint letters");
            out.add_term(word, if negative { -&df } else { df });
        }
    }
    out
}

/// The contact vector field with Hamiltonian `h`, the unique `X` with
/// `α(X) = h` and `i_X dα = dh(R) α - dh`.
pub fn contact_field_from_h(h: &Polynomial) -> VectorField {
    let n = h.n();
    let hz = h.partial(Var::Z);
    let mut components = Vec::with_capacity(2 * n + 1);
    for k in 1..=n {
        let xk = Polynomial::var(n, Var::X(k));
        components.push(&(&hz * &xk) - &h.partial(Var::Y(k)));
    }
    let mut z_component = h.clone();
    for k in 1..=n {
        let hx = h.partial(Var::X(k));
        z_component = &z_component - &(&hx * &Polynomial::var(n, Var::X(k)));
        components.push(hx);
    }
    components.push(z_component);
    VectorField::from_components(n, components).expect("2n+1 components")
}

/// Cartan formula `L_X ω = i_X dω + d(i_X ω)`.
pub fn lie_derivative(x: &VectorField, omega: &DifferentialForm) -> DifferentialForm {
    let a = exterior_derivative(omega).interior(x);
    if omega.degree() == 0 {
        return a;
    }
    let b = exterior_derivative(&omega.interior(x));
    a.checked_add(&b).expect("same degree")
}

/// A linear operator between spaces of forms on the standard contact space.
pub trait FormOperator {
    fn name(&self) -> String;

    /// Degree of the forms the operator accepts.
    fn domain_degree(&self) -> usize;

    fn apply(&self, omega: &DifferentialForm) -> Result<DifferentialForm>;
}

/// `L_X(Pω) - P(L_X ω)` for the contact field `X` generated by `h`; zero
/// whenever `P` commutes with contactomorphisms.
pub fn equivariance_residual(
    op: &dyn FormOperator,
    h: &Polynomial,
    omega: &DifferentialForm,
) -> Result<DifferentialForm> {
    if omega.degree() != op.domain_degree() {
        return Err(Error::DegreeMismatch { expected: op.domain_degree(), found: omega.degree() });
    }
    if h.n() != omega.n() {
        return Err(Error::DimensionMismatch { left: h.n(), right: omega.n() });
    }
    let x = contact_field_from_h(h);
    let lhs = lie_derivative(&x, &op.apply(omega)?);
    let rhs = op.apply(&lie_derivative(&x, omega))?;
    lhs.checked_sub(&rhs)
}
