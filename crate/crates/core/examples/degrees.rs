//! Character degrees three ways: hook lengths, tableau enumeration, closed forms.
//!
//! cargo run --example degrees -- 5,5,1^10

use knapsack_degrees::degree::{
    degree, degree_fathook, degree_threepart, syt_enumerate, SYT_BOUND,
};
use knapsack_degrees::partition::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = std::env::args().nth(1).unwrap_or_else(|| "4,2,1".into());
    let lam: Partition = shape.parse()?;
    println!("f^{lam} = {}", degree(&lam));
    match syt_enumerate(&lam, SYT_BOUND) {
        Ok(count) => println!("  by listing tableaux: {count}"),
        Err(e) => println!("  listing skipped: {e}"),
    }
    println!(
        "  conjugate {} has the same degree: {}",
        lam.conjugate(),
        degree(&lam.conjugate())
    );

    // the two closed forms
    println!("f^(10,10) = {}", degree_threepart(10, 10, 0)?);
    println!("f^(14,14,1^7) = {}", degree_fathook(14, 14, 7)?);
    Ok(())
}
