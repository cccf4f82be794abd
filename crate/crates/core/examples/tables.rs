//! The three fixed tables, as printed by `knapsack table`.

use knapsack_degrees::identity::tables::{table, TABLE_IDS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in TABLE_IDS {
        print!("{}", table(id)?.to_text());
        println!();
    }
    Ok(())
}
