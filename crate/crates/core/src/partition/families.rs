use super::{partitions, partitions_with_max_parts, Partition};
use crate::error::{Error, Result};

/// Selects `X1(n,k)` (third part congruent to `k` mod 2) or `X2(n,k)` (opposite parity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum XSetClass {
    Class1,
    Class2,
}

impl XSetClass {
    pub fn other(self) -> Self {
        match self {
            XSetClass::Class1 => XSetClass::Class2,
            XSetClass::Class2 => XSetClass::Class1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            XSetClass::Class1 => "X1",
            XSetClass::Class2 => "X2",
        }
    }
}

/// Three-part partitions `(λ1, k, λ3)` of `n` with `λ1 >= k >= λ3 >= 0`, filtered by the
/// parity of `λ3` against `k`. Ordered by decreasing `λ1`; empty when none exist.
pub fn x_set(n: usize, k: usize, class: XSetClass) -> Vec<Partition> {
    let want_same = class == XSetClass::Class1;
    (0..=k)
        .filter(|t| (t % 2 == k % 2) == want_same)
        .filter(|t| n >= k + t && n - k - t >= k)
        .map(|t| Partition::from_sorted(vec![n - k - t, k, t]))
        .collect()
}

/// All partitions of `n` with at most three nonzero parts.
pub fn three_part_partitions(n: usize) -> Vec<Partition> {
    partitions_with_max_parts(n, 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookFamily {
    /// Partitions with at most `p` nonzero parts, i.e. `H(p,0;n)`.
    AtMostParts(usize),
    /// `H(k,ℓ;n)`: partitions whose `(k+1)`-th part is at most `ℓ`.
    Hook { k: usize, l: usize },
    /// `H*(2,2;2m) = {(j, j, 2^(m-j)) : 2 <= j <= m}`.
    DoubleTwoStar,
}

/// The partitions of `n` in the requested family, lexicographically descending.
pub fn hook_family(n: usize, family: HookFamily) -> Result<Vec<Partition>> {
    Ok(match family {
        HookFamily::AtMostParts(p) => partitions_with_max_parts(n, p),
        HookFamily::Hook { k, l } => partitions(n)
            .into_iter()
            .filter(|lam| lam.part(k) <= l)
            .collect(),
        HookFamily::DoubleTwoStar => {
            if n % 2 == 1 {
                return Err(Error::Precondition(format!(
                    "H*(2,2;n) needs even n, got {n}"
                )));
            }
            let m = n / 2;
            (2..=m)
                .rev()
                .map(|j| {
                    let mut parts = vec![j, j];
                    parts.extend(std::iter::repeat_n(2, m - j));
                    Partition::from_sorted(parts)
                })
                .collect()
        }
    })
}
