//! Dyck, Motzkin and Riordan lattice paths: counts by dynamic programming and
//! exhaustive enumeration for cross-checking.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::degree::{degree, Degree};
use crate::error::{Error, Result};
use crate::partition::partitions_with_max_parts;

/// Default length bound for [`enumerate_paths`].
pub const ENUMERATION_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathKind {
    /// `U`/`D` steps; `n` is the semilength.
    Dyck,
    /// `U`/`F`/`D` steps; `n` is the length.
    Motzkin,
    /// Motzkin paths with no `F` step on the axis.
    Riordan,
}

impl std::str::FromStr for PathKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dyck" | "catalan" => Ok(PathKind::Dyck),
            "motzkin" => Ok(PathKind::Motzkin),
            "riordan" => Ok(PathKind::Riordan),
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}

// Declared in alphabetical order so paths sort lexicographically as strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    D,
    F,
    U,
}

impl Step {
    fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::F => 0,
            Step::D => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Whether the step sequence is a valid path of the given kind.
    pub fn is_valid(&self, kind: PathKind) -> bool {
        let mut height = 0i32;
        for &s in &self.0 {
            if s == Step::F
                && (kind == PathKind::Dyck || (kind == PathKind::Riordan && height == 0))
            {
                return false;
            }
            height += s.delta();
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    pub fn count(&self, step: Step) -> usize {
        self.0.iter().filter(|&&s| s == step).count()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

fn steps_of(kind: PathKind) -> &'static [Step] {
    match kind {
        PathKind::Dyck => &[Step::D, Step::U],
        _ => &[Step::D, Step::F, Step::U],
    }
}

fn length_of(kind: PathKind, n: usize) -> usize {
    if kind == PathKind::Dyck {
        2 * n
    } else {
        n
    }
}

/// Number of paths of the given kind, by dynamic programming over heights.
pub fn count_paths(kind: PathKind, n: usize) -> Degree {
    let len = length_of(kind, n);
    let mut ways = vec![BigUint::zero(); len + 2];
    ways[0] = BigUint::one();
    for _ in 0..len {
        let mut next = vec![BigUint::zero(); len + 2];
        for h in 0..=len {
            if ways[h].is_zero() {
                continue;
            }
            next[h + 1] += &ways[h];
            if h > 0 {
                next[h - 1] += &ways[h];
            }
            let flat_ok = match kind {
                PathKind::Dyck => false,
                PathKind::Motzkin => true,
                PathKind::Riordan => h > 0,
            };
            if flat_ok {
                next[h] += &ways[h];
            }
        }
        ways = next;
    }
    ways.swap_remove(0)
}

/// Riordan paths of length `n` with exactly `m` flat steps and `k` up steps.
///
/// Requires `m + 2k = n` and `0 <= m < n`; the count equals `f^(k,k,1^m)`.
pub fn count_riordan_by_steps(n: usize, m: usize, k: usize) -> Result<Degree> {
    if m + 2 * k != n || m >= n {
        return Err(Error::Precondition(format!(
            "need m + 2k = n and m < n; got n={n} m={m} k={k}"
        )));
    }
    // ways[h][f]: paths at height h having used f flats
    let mut ways = vec![vec![BigUint::zero(); m + 1]; n + 2];
    ways[0][0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![vec![BigUint::zero(); m + 1]; n + 2];
        for h in 0..=n {
            for f in 0..=m {
                let w = &ways[h][f];
                if w.is_zero() {
                    continue;
                }
                next[h + 1][f] += w;
                if h > 0 {
                    next[h - 1][f] += w;
                    if f < m {
                        next[h][f + 1] += w;
                    }
                }
            }
        }
        ways = next;
    }
    Ok(ways[0][m].clone())
}

/// All paths of the given kind, in lexicographic order of their step strings.
pub fn enumerate_paths(kind: PathKind, n: usize, bound: usize) -> Result<Vec<Path>> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    fn go(kind: PathKind, left: usize, height: usize, cur: &mut Vec<Step>, out: &mut Vec<Path>) {
        if left == 0 {
            if height == 0 {
                out.push(Path(cur.clone()));
            }
            return;
        }
        if height > left {
            return;
        }
        for &s in steps_of(kind) {
            let next = match s {
                Step::D if height == 0 => continue,
                Step::D => height - 1,
                Step::F if kind == PathKind::Riordan && height == 0 => continue,
                Step::F => height,
                Step::U => height + 1,
            };
            cur.push(s);
            go(kind, left - 1, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(kind, length_of(kind, n), 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Σ f^λ` over partitions of `n` with at most `max_rows` parts.
pub fn syt_row_bounded_count(n: usize, max_rows: usize) -> Degree {
    partitions_with_max_parts(n, max_rows)
        .iter()
        .map(degree)
        .sum()
}
