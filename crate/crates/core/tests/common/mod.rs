//! Reference implementations used only by the tests. Nothing here calls the hook length formula.
#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

thread_local! {
    static MEMO: RefCell<HashMap<Vec<usize>, BigUint>> = RefCell::new(HashMap::new());
}

/// `f^λ` by the branching rule: sum over the ways of removing a corner box.
pub fn f(parts: &[usize]) -> BigUint {
    let key: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    assert!(
        key.windows(2).all(|w| w[0] >= w[1]),
        "not a partition: {key:?}"
    );
    if key.iter().sum::<usize>() <= 1 {
        return BigUint::one();
    }
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let mut total = BigUint::zero();
    for i in 0..key.len() {
        if i + 1 == key.len() || key[i] > key[i + 1] {
            let mut child = key.clone();
            child[i] -= 1;
            total += f(&child);
        }
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// `f^λ` for signed parts, `0` when the parts do not form a partition.
pub fn fi(parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return BigInt::zero();
    }
    let v: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
    BigInt::from(f(&v))
}

/// `f^(a,b,1^t)`, `0` when this is not a partition.
pub fn fat(a: i64, b: i64, t: i64) -> BigInt {
    if t < 0 || b < 1 || a < b {
        return BigInt::zero();
    }
    let mut v = vec![a, b];
    v.extend(std::iter::repeat_n(1, t as usize));
    fi(&v)
}

/// Partitions of `n`, parts in decreasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Three-part partitions `(a, k, c)` of `n` with `c ≡ k` (`same`) or `c ≢ k` (mod 2).
pub fn x_set(n: i64, k: i64, same: bool) -> Vec<[i64; 3]> {
    (0..=k)
        .filter(|c| ((c - k) % 2 == 0) == same)
        .map(|c| [n - k - c, k, c])
        .filter(|p| p[0] >= k)
        .collect()
}

pub fn x_sum(n: i64, k: i64, same: bool) -> BigInt {
    x_set(n, k, same).iter().map(|p| fi(p)).sum()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Motzkin numbers by first-return decomposition.
pub fn motzkin(n: usize) -> Vec<BigUint> {
    let mut m = vec![BigUint::one()];
    for len in 1..=n {
        let mut v = m[len - 1].clone();
        for i in 0..len.saturating_sub(1) {
            v += &m[i] * &m[len - 2 - i];
        }
        m.push(v);
    }
    m
}

/// Riordan numbers: a first return `U M D` followed by a Riordan path.
pub fn riordan(n: usize) -> BigUint {
    let m = motzkin(n);
    let mut r = vec![BigUint::one()];
    for len in 1..=n {
        let mut v = BigUint::zero();
        for i in 0..len.saturating_sub(1) {
            v += &m[i] * &r[len - 2 - i];
        }
        r.push(v);
    }
    r[n].clone()
}

/// Closed form of the three-row degree with `1/j! = 0` for `j < 0`; divides exactly.
pub fn h(x: i64, y: i64, z: i64) -> BigInt {
    let inv = |j: i64| j >= 0;
    if x + y + z < 0 || !inv(x + 2) || !inv(y + 1) || !inv(z) {
        return BigInt::zero();
    }
    let num = BigInt::from(factorial((x + y + z) as u64)) * (x - y + 1) * (x - z + 2) * (y - z + 1);
    let den =
        BigInt::from(factorial((x + 2) as u64) * factorial((y + 1) as u64) * factorial(z as u64));
    assert!((&num % &den).is_zero());
    num / den
}
