//! Symbolic certificates: each identity reduced to a difference that must be the zero polynomial.

use knapsack_degrees::symbolic::{certify_all, closed_form_symbol, ratio, SymShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for report in certify_all() {
        print!("{}", report.to_text());
    }

    let vars = ["k", "m"];
    let a = closed_form_symbol(&SymShape::parse("k+2,k,1^(m-2)", &vars)?);
    let b = closed_form_symbol(&SymShape::parse("k,k,1^m", &vars)?);
    println!(
        "f(k+2,k,1^(m-2)) / f(k,k,1^m) = {}",
        ratio(&a, &b)?.display(&vars)
    );
    Ok(())
}
