//! Both degree-sum equations for every k at one n, with the regime each falls in.
//!
//! cargo run --example knapsack_identities -- 32

use knapsack_degrees::identity::verify_theorem_1_4;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(20);
    for k in 0..=n / 2 {
        for r in verify_theorem_1_4(n, k)? {
            println!(
                "k={k:<3} {:<5} {}  [{}]  ({})",
                if r.pass { "ok" } else { "FAIL" },
                r.instance.equation(),
                r.lhs_value,
                r.regime
            );
        }
    }
    Ok(())
}
