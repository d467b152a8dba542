//! Restricts a form to the contact plane and prints its primitive parts.
//!
//! Usage: cargo run --example decompose_form -- [n] [form]

use contact_forms::exterior::parse_form;
use contact_forms::lefschetz::{lefschetz_L, primitive_projections, HorizontalForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(2), |s| s.parse())?;
    let text = args.get(1).map_or("dx1^dy1^dx2 + z dx1^dy2^dz", String::as_str);

    let omega = parse_form(text, n)?;
    let restricted = HorizontalForm::try_from(omega.restrict_to_contact_plane())?;
    println!("ω        = {omega}");
    println!("ω|Q      = {restricted}");

    let dec = primitive_projections(&restricted)?;
    for (i, pi) in &dec.components {
        let k = (omega.degree() - i) / 2;
        println!("π_{i}      = {pi}");
        println!("L^{k} π_{i}  = {}", lefschetz_L(pi, k));
    }
    println!("sum matches ω|Q: {}", dec.reconstruct() == restricted);
    Ok(())
}
