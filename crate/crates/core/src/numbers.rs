//! Factorials and Catalan numbers over big integers.

use num_bigint::BigUint;
use num_traits::One;
use std::sync::{OnceLock, RwLock};

static FACTORIALS: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();

/// `n!`, cached.
pub fn factorial(n: usize) -> BigUint {
    let table = FACTORIALS.get_or_init(|| RwLock::new(vec![BigUint::one()]));
    if let Some(v) = table.read().unwrap().get(n) {
        return v.clone();
    }
    let mut t = table.write().unwrap();
    while t.len() <= n {
        let next = t.last().unwrap() * BigUint::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

/// `C(n) = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigUint {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}
