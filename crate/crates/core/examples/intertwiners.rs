//! Solves for the equivariant symbols of one cell and lists the known maps
//! that span them.
//!
//! Usage: cargo run --release --example intertwiners -- [n] [a] [b] [r]

use contact_forms::invariants::{contraction_spanning_set, r_space_operators, solve_intertwiners, symbol_of, Algebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let [n, a, b, r] = match args.as_slice() {
        [n, a, b, r] => [*n, *a, *b, *r],
        _ => [2, 2, 2, 1],
    };

    let full = solve_intertwiners(n, a, r, b, Algebra::Full);
    println!("full isotropy algebra: {} independent symbols of order {r}", full.dimension);
    for op in r_space_operators(n, a, b).into_iter().filter(|o| o.order == r) {
        println!("  symbol of {op}");
        print!("{}", symbol_of(&op)?);
    }

    if a <= 2 * n && b <= 2 * n {
        let sp = solve_intertwiners(n, a, r, b, Algebra::SpOnly);
        println!("symplectic part only: {} independent maps", sp.dimension);
        for map in contraction_spanning_set(n, a, r, b) {
            println!("  {}", map.label);
        }
    }
    Ok(())
}
