//! Parsing forms, wedge and interior products, d, and restriction to the
//! contact plane on ℝ^5.

use contact_forms::calculus::{exterior_derivative, ContactContext};
use contact_forms::coeff_ring::{int, Polynomial, Var};
use contact_forms::exterior::{parse_form, VectorField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2;
    let ctx = ContactContext::new(n);
    println!("α  = {}", ctx.alpha);
    println!("dα = {}", ctx.dalpha);
    println!("α∧dα∧dα = {}", ctx.alpha.wedge(&ctx.dalpha).wedge(&ctx.dalpha));

    let f = parse_form("x1^2 y2 - 1/2 z", n)?;
    let omega = parse_form("x2 dx1^dz + 3 y1*z dy1^dy2", n)?;
    println!("f = {f}, df = {}", exterior_derivative(&f));
    println!("ω = {omega}");
    println!("dω = {}", exterior_derivative(&omega));
    println!("f ω = {}", f.wedge(&omega));
    println!("ω|Q = {}", omega.restrict_to_contact_plane());

    let x = VectorField::coordinate(n, Var::Z).scale(&int(2));
    let y = VectorField::from_components(
        n,
        vec![
            Polynomial::var(n, Var::Y(1)),
            Polynomial::zero(n),
            Polynomial::zero(n),
            Polynomial::zero(n),
            Polynomial::one(n),
        ],
    )?;
    println!("i_(2∂z) ω = {}", omega.interior(&x));
    println!("[2∂z, y1∂x1 + ∂z] has z-component {}", x.bracket(&y).component(Var::Z));
    Ok(())
}
