//! Sums of 2d+1 consecutive fat hooks against their closed forms, plus the analytic version.

use knapsack_degrees::identity::{l_sum, verify_analytic_4_5, verify_l_identity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (d, k, m) in [
        (1, 14, 7),
        (1, 11, 13),
        (1, 7, 21),
        (2, 8, 8),
        (2, 7, 12),
        (2, 3, 20),
        (3, 12, 9),
    ] {
        println!(
            "L_{}({k},{m}) = {}",
            2 * d + 1,
            l_sum(2 * d as usize + 1, k, m)
        );
        for r in verify_l_identity(d, k, m)? {
            println!("  {} {}: {}", r.id(), r.regime, r.instance.equation());
        }
    }

    // outside the partition range
    let r = verify_analytic_4_5(2, 5, 3)?;
    println!("{}  [{}] {}", r.instance.equation(), r.lhs_value, r.pass);
    Ok(())
}
