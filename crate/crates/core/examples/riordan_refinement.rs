//! Equal-parity three-part shapes and fat hooks both sum to the Riordan number.

use knapsack_degrees::identity::verify_riordan_refinement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=16 {
        let r = verify_riordan_refinement(n)?;
        println!(
            "n={n:<2} R(n)={:<8} X={} Y={} per-k pieces agree: {}",
            r.totals[0].rhs_value,
            r.totals[0].lhs_value,
            r.totals[1].lhs_value,
            r.bookkeeping_agrees
        );
    }
    Ok(())
}
