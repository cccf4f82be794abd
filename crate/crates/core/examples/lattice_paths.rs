//! Dyck, Motzkin and Riordan counts, and Riordan paths sorted by flat and up steps.

use knapsack_degrees::degree::degree;
use knapsack_degrees::partition::Partition;
use knapsack_degrees::paths::{count_paths, count_riordan_by_steps, enumerate_paths, PathKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [PathKind::Dyck, PathKind::Motzkin, PathKind::Riordan] {
        let counts: Vec<String> = (0..=10).map(|n| count_paths(kind, n).to_string()).collect();
        println!("{kind:?}: {}", counts.join(", "));
    }

    let n = 8;
    for k in 1..=n / 2 {
        let m = n - 2 * k;
        let fat = Partition::fat_hook(k as i64, k as i64, m as i64).unwrap();
        println!(
            "n={n}, {m} flats, {k} ups: {} paths, f^{fat} = {}",
            count_riordan_by_steps(n, m, k)?,
            degree(&fat)
        );
    }

    for p in enumerate_paths(PathKind::Riordan, 6, 16)? {
        print!("{p} ");
    }
    println!();
    Ok(())
}
