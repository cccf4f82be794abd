//! The closed forms evaluated outside the partition range, where 1/j! = 0 for negative j.

use knapsack_degrees::degree::{h1_analytic, h_analytic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // n = 20, k = 8: two of the five terms are not partitions and cancel
    for (x, y, z) in [(4, 8, 8), (6, 8, 6), (8, 8, 4), (10, 8, 2), (12, 8, 0)] {
        println!("h({x},{y},{z}) = {}", h_analytic(x, y, z)?.to_integer());
    }
    println!("h(3,5,5) = {}", h_analytic(3, 5, 5)?.to_integer());
    println!(
        "h(4,2,8) = {} = h(6,5,3) = {}",
        h_analytic(4, 2, 8)?.to_integer(),
        h_analytic(6, 5, 3)?.to_integer()
    );
    println!("h1(5,5;3) = {}", h1_analytic(5, 5, 3)?.to_integer());
    println!("h1(2,4;-1) = {}", h1_analytic(2, 4, -1)?.to_integer());
    if let Err(e) = h1_analytic(2, 1, -3) {
        println!("h1(2,1;-3): {e}");
    }
    Ok(())
}
