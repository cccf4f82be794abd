//! Adding a rim k-hook in every way gives a signed degree sum of zero; two counting identities
//! for tableaux with few rows.

use knapsack_degrees::identity::{verify_four_row_count, verify_hook_wrap, verify_regev};
use knapsack_degrees::partition::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (mu, k) in [("3,1", 6), ("", 3), ("2,2", 4), ("4,2,1", 5)] {
        let mu: Partition = mu.parse()?;
        let r = verify_hook_wrap(&mu, k)?;
        println!(
            "mu={mu} k={k}: {}  ({})",
            r.instance.equation(),
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    for m in 2..=6 {
        let [a, b] = verify_regev(m)?;
        println!("m={m}: {} = {} = {}", a.lhs_value, a.rhs_value, b.rhs_value);
    }
    for n in [8, 9, 20] {
        let r = verify_four_row_count(n)?;
        println!("at most four rows, n={n}: {}", r.lhs_value);
    }
    Ok(())
}
