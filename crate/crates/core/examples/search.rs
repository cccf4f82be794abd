//! Looking for new equal-sum shape sets, and tabulating even-length fat-hook sums.

use knapsack_degrees::search::{
    find_equal_sum_pairs, scan_even_l, ScanRow, SearchLimits, SearchPool,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 14;
    let pool = SearchPool::parse(n, "3part+fathook")?;
    let out = find_equal_sum_pairs(
        n,
        &pool,
        SearchLimits {
            max_side: 3,
            eval_cap: 1_000_000,
        },
    )?;
    println!(
        "{} shapes, {} subsets, {} identities",
        pool.len(),
        out.evaluated,
        out.identities.len()
    );
    for found in out.identities.iter().filter(|i| i.label.is_none()).take(10) {
        println!("  {}  [{}]", found.instance.equation(), found.sum);
    }

    println!("{}", ScanRow::csv_header());
    for row in scan_even_l(4, 7, 4)? {
        println!("{}", row.to_csv());
    }
    Ok(())
}
