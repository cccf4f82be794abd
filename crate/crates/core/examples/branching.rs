//! Removing a box from each row of an X set, and what the smaller X sets are missing.

use knapsack_degrees::identity::verify_branching_decomposition;
use knapsack_degrees::partition::{x_set, XSetClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, k, class) in [
        (20, 5, XSetClass::Class1),
        (20, 5, XSetClass::Class2),
        (14, 5, XSetClass::Class2),
        (24, 9, XSetClass::Class1),
    ] {
        let set: Vec<String> = x_set(n, k, class).iter().map(|p| p.to_string()).collect();
        println!("{}({n},{k}) = {{{}}}", class.label(), set.join(", "));
        let d = verify_branching_decomposition(n, k, class)?;
        for row in &d.rows {
            println!("  {}", row.describe(n));
        }
        println!(
            "  {}  {}",
            d.report.instance.equation(),
            if d.report.pass { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
