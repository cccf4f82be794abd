//! Integer partitions and Young-diagram geometry.

mod families;
mod rim_hook;

pub use families::{hook_family, three_part_partitions, x_set, HookFamily, XSetClass};
pub use rim_hook::{add_rim_hooks, SignedPartition};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from signed parts, trimming trailing zeros.
    ///
    /// Negative entries and sequences that are not weakly decreasing are rejected.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::NegativePart(p));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts.to_vec()));
        }
        Ok(Self::from_sorted(
            parts.iter().map(|&p| p as usize).collect(),
        ))
    }

    /// Same as [`Partition::new`] for unsigned parts.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The shape `(a, b, 1^t)`, or `None` unless `a >= b >= 1` and `t >= 0`.
    /// `(a, 0, 1^0)` is accepted as the one-row shape `(a)`.
    pub fn fat_hook(a: i64, b: i64, t: i64) -> Option<Self> {
        if t < 0 || b < 0 || a < b || (b == 0 && t > 0) {
            return None;
        }
        let mut parts = vec![a as usize, b as usize];
        parts.extend(std::iter::repeat_n(1, t as usize));
        Some(Self::from_sorted(parts))
    }

    /// The shape `(r, s, t)`, or `None` unless `r >= s >= t >= 0`.
    pub fn three_part(r: i64, s: i64, t: i64) -> Option<Self> {
        if t < 0 || s < t || r < s {
            return None;
        }
        Some(Self::from_sorted(vec![r as usize, s as usize, t as usize]))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// Hook lengths `h(i,j) = λ_i + λ'_j - i - j + 1`, one row per part.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.part(j) - i - 1).collect())
            .collect()
    }

    /// Whether this diagram contains `other` cellwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Number of distinct nonzero part sizes, which equals the number of removable corners.
    pub fn distinct_parts(&self) -> usize {
        let mut v = self.parts.clone();
        v.dedup();
        v.len()
    }

    /// The partition with one box removed from row `row`, if that leaves a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let p = self.part(row);
        if p == 0 || self.part(row + 1) == p {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Some(Self::from_sorted(parts))
    }

    /// All partitions obtained by removing one removable corner, lexicographically descending.
    pub fn branching_children(&self) -> Vec<Partition> {
        (0..self.len())
            .rev()
            .filter_map(|r| self.remove_box(r))
            .collect()
    }

    /// Display padded with zero parts up to `width` parts, e.g. `(21,11,0)`.
    pub fn display_padded(&self, width: usize) -> String {
        if self.len() >= width {
            return self.to_string();
        }
        let mut s = self.to_string();
        s.pop();
        for _ in self.len()..width {
            if s.len() > 1 {
                s.push(',');
            }
            s.push('0');
        }
        s.push(')');
        s
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_with_max_parts(n, n.max(1))
}

/// All partitions of `n` with at most `max_parts` nonzero parts, lexicographically descending.
pub fn partitions_with_max_parts(n: usize, max_parts: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            // remaining slots must be able to hold what is left
            if p * slots < rest {
                break;
            }
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones = self.parts.iter().rev().take_while(|&&p| p == 1).count();
        let head = &self.parts[..self.len() - if ones >= 2 { ones } else { 0 }];
        let mut items: Vec<String> = head.iter().map(|p| p.to_string()).collect();
        if ones >= 2 {
            items.push(format!("1^{ones}"));
        }
        write!(f, "({})", items.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `5,5,1^10` (parentheses optional, `^` repeats a part).
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::ShapeSyntax(s.to_string());
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (value, reps) = match tok.split_once('^') {
                Some((v, r)) => (v.trim(), r.trim().trim_matches(|c| c == '{' || c == '}')),
                None => (tok, "1"),
            };
            let value: i64 = value.parse().map_err(|_| bad())?;
            let reps: usize = reps.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(value, reps));
        }
        Partition::new(&parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn trims_trailing_zeros() {
        let lam = p(&[3, 1, 0]);
        assert_eq!(lam.parts(), &[3, 1]);
        assert_eq!(lam.size(), 4);
        assert_eq!(p(&[]).size(), 0);
        assert!(p(&[0, 0]).is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Partition::new(&[2, 3]),
            Err(Error::NotDecreasing(vec![2, 3]))
        );
        assert_eq!(Partition::new(&[2, -1]), Err(Error::NegativePart(-1)));
        assert!(Partition::new(&[3, 0, 1]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        let lam = p(&[4, 4, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![vec![3, 2], vec![2, 1]]);
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
        assert_eq!(p(&[3, 1, 1]).hook_lengths()[0], vec![5, 2, 1]);
    }

    #[test]
    fn first_row_hook_product_of_three_part_shapes() {
        // product of first-row hooks of (r,s,t) is (r+2)!/((r-t+2)(r-s+1))
        for (r, s, t) in [(5u64, 3, 1), (7, 7, 2), (6, 2, 2), (9, 4, 0)] {
            let lam = p(&[r as i64, s as i64, t as i64]);
            let prod: u64 = lam.hook_lengths()[0].iter().map(|&h| h as u64).product();
            let fact: u64 = (1..=r + 2).product();
            assert_eq!(prod, fact / ((r - t + 2) * (r - s + 1)), "{lam}");
        }
    }

    #[test]
    fn children() {
        assert_eq!(p(&[2, 2]).branching_children(), vec![p(&[2, 1])]);
        assert_eq!(p(&[3, 1]).branching_children(), vec![p(&[3]), p(&[2, 1])]);
        let lam: Partition = "6,5,1^8".parse().unwrap();
        let kids = lam.branching_children();
        let expected: Vec<Partition> = ["6,5,1^7", "6,4,1^8", "5,5,1^8"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(kids, expected);
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "5,5,1^10".parse().unwrap();
        assert_eq!(lam.size(), 20);
        assert_eq!(lam.to_string(), "(5,5,1^10)");
        assert_eq!("(9,1)".parse::<Partition>().unwrap().to_string(), "(9,1)");
        assert_eq!("1^20".parse::<Partition>().unwrap().to_string(), "(1^20)");
        assert_eq!("3,1^7".parse::<Partition>().unwrap().to_string(), "(3,1^7)");
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(p(&[21, 11]).display_padded(3), "(21,11,0)");
        assert_eq!(p(&[20]).display_padded(3), "(20,0,0)");
    }

    #[test]
    fn fat_hook_and_three_part_constructors() {
        assert_eq!(Partition::fat_hook(2, 2, 1), Some(p(&[2, 2, 1])));
        assert_eq!(Partition::fat_hook(10, 10, 0), Some(p(&[10, 10])));
        assert_eq!(Partition::fat_hook(11, 11, -2), None);
        assert_eq!(Partition::fat_hook(1, 0, 3), None);
        assert_eq!(Partition::three_part(5, 5, 3), Some(p(&[5, 5, 3])));
        assert_eq!(Partition::three_part(3, 5, 5), None);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        let four: Vec<String> = partitions_with_max_parts(4, 3)
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1^2)"]);
    }

    proptest::proptest! {
        #[test]
        fn children_count_matches_distinct_parts(n in 1usize..=12, idx in 0usize..1000) {
            let all = partitions(n);
            let lam = &all[idx % all.len()];
            proptest::prop_assert_eq!(lam.branching_children().len(), lam.distinct_parts());
        }

        #[test]
        fn conjugate_is_involution(n in 0usize..=20, idx in 0usize..1000) {
            let all = partitions(n);
            let lam = &all[idx % all.len()];
            proptest::prop_assert_eq!(&lam.conjugate().conjugate(), lam);
            proptest::prop_assert_eq!(lam.conjugate().size(), n);
        }
    }
}
