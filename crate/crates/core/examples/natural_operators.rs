//! The operators P_{a,i} at n = 3 and their composition identities on a
//! random 4-form.

use contact_forms::calculus::exterior_derivative;
use contact_forms::exterior::parse_form;
use contact_forms::natural_ops::{admissible_indices, apply_P, NaturalOperator};
use contact_forms::random::FormSampler;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    for a in 2..=2 * n {
        let names: Vec<String> = admissible_indices(a, n)
            .into_iter()
            .map(|i| NaturalOperator::p(n, a, i).map(|p| p.to_string()))
            .collect::<Result<_, _>>()?;
        println!("a = {a}: {}", names.join(", "));
    }

    let small = parse_form("dx1^dy1^dx2^dy3", n)?;
    for i in admissible_indices(4, n) {
        println!("P_{{4,{i}}}({small}) = {}", apply_P(4, i, &small)?);
    }

    let omega = FormSampler::new(n, 1, 1).form(4);
    println!("random 4-form with {} terms", omega.terms().count());
    for i in admissible_indices(4, n) {
        let p = apply_P(4, i, &omega)?;
        let dp = exterior_derivative(&p);
        for j in admissible_indices(4, n) {
            let back = apply_P(4, j, &dp)?;
            let holds = if i == j { back == p } else { back.is_zero() };
            let expected = if i == j { format!("P_{{4,{i}}} ω") } else { "0".to_string() };
            println!("P_{{4,{j}}} d P_{{4,{i}}} ω = {expected}: {holds}");
        }
        for j in admissible_indices(3, n) {
            println!("P_{{3,{j}}} P_{{4,{i}}} ω = 0: {}", apply_P(3, j, &p)?.is_zero());
        }
    }
    Ok(())
}
