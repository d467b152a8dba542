//! Prints the exact constants of the Lefschetz decomposition for each degree:
//! `Λ^s = Σ_i c(s,i) L^{k_i-s} Π_i`, `Π_i = Σ_j c'(i,j) L^{j-k_i} Λ^j` and
//! `Λ^s = Σ_j c''(s,j) L^{j-s} Λ^j`, where `k_i = (a-i)/2`.
//!
//! Usage: cargo run --example sl2_constants -- [n]

use std::collections::BTreeMap;

use contact_forms::coeff_ring::Rational;
use contact_forms::lefschetz::sl2_table;

fn row(name: &str, table: &BTreeMap<(usize, usize), Rational>) -> String {
    let entries: Vec<String> = table.iter().map(|((p, q), c)| format!("{name}({p},{q})={c}")).collect();
    entries.join("  ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    for a in 0..=2 * n {
        let table = sl2_table(n, a)?;
        println!("n = {n}, a = {a}");
        println!("  {}", row("c", &table.c));
        println!("  {}", row("c'", &table.c_prime));
        println!("  {}", row("c''", &table.c_double_prime));
    }
    Ok(())
}
