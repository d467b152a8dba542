//! Computes Qω and the Rumin differential Dω of an n-form along both
//! construction paths and checks the defining properties of Dω.
//!
//! Usage: cargo run --example rumin_operator -- [n] [form]

use contact_forms::calculus::exterior_derivative;
use contact_forms::exterior::parse_form;
use contact_forms::natural_ops::{q_via_composition, q_via_xi, rumin_correction, rumin_via_composition, rumin_via_xi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(1), |s| s.parse())?;
    let text = args.get(1).map_or("z dx1", String::as_str);
    let omega = parse_form(text, n)?;

    let xi = rumin_correction(&omega)?;
    let q = q_via_xi(&omega)?;
    let d = rumin_via_xi(&omega)?;
    println!("ω  = {omega}");
    println!("ξ  = {xi}");
    println!("Qω = ω + α∧ξ = {q}");
    println!("Dω = d(Qω)   = {d}");
    println!("Q through P∘d agrees:   {}", q == q_via_composition(&omega)?);
    println!("D through d∘P∘d agrees: {}", d == rumin_via_composition(&omega)?);
    println!("Dω|Q = 0: {}", d.restrict_to_contact_plane().is_zero());
    println!("d(Dω) = 0: {}", exterior_derivative(&d).is_zero());
    Ok(())
}
