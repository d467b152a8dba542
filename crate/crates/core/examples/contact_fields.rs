//! Contact vector fields from generating functions, their action on α, and
//! equivariance residuals of a natural and a non-natural operator.

use contact_forms::calculus::{contact_field_from_h, equivariance_residual, lie_derivative, ContactContext};
use contact_forms::coeff_ring::{Polynomial, Var};
use contact_forms::exterior::parse_form;
use contact_forms::natural_ops::{ControlOperator, NaturalOperator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1;
    let ctx = ContactContext::new(n);
    let (x, y, z) = (Polynomial::var(n, Var::X(1)), Polynomial::var(n, Var::Y(1)), Polynomial::var(n, Var::Z));
    let hamiltonians = [("1", Polynomial::one(n)), ("x1 y1", &x * &y), ("z", z.clone()), ("x1^2 z", &(&x * &x) * &z)];
    for (name, h) in hamiltonians {
        let field = contact_field_from_h(&h);
        println!("h = {name}");
        for v in Var::all(n) {
            println!("  X^{v} = {}", field.component(v));
        }
        println!("  α(X) = {}", ctx.alpha.interior(&field));
        println!("  L_X α = {}", lie_derivative(&field, &ctx.alpha));
    }

    let h = &(&x * &x) * &z;
    let omega = parse_form("y1 dx1^dy1", n)?;
    let p = NaturalOperator::p(n, 2, 0)?;
    let wedge_dz = ControlOperator::WedgeDz { n, a: 1 };
    println!("residual of {p}: {}", equivariance_residual(&p, &h, &omega)?);
    let one_form = parse_form("x1 dy1", n)?;
    println!("residual of ∧dz: {}", equivariance_residual(&wedge_dz, &h, &one_form)?);
    Ok(())
}
