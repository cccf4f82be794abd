use super::Partition;

/// A partition carrying a sign from a hook-wrapping expansion.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SignedPartition {
    pub partition: Partition,
    pub sign: i8,
}

/// Every way of adding a connected rim `k`-hook to `mu`, signed by `(-1)^(leg length)`.
///
/// Works on first-column hook lengths (beta-numbers): adding a rim `k`-hook moves one
/// beta-number up by `k` into a free slot, and the leg length is the number of
/// beta-numbers jumped over. Output is lexicographically descending.
pub fn add_rim_hooks(mu: &Partition, k: usize) -> Vec<SignedPartition> {
    if k == 0 {
        return Vec::new();
    }
    let width = mu.len() + k;
    let beta: Vec<usize> = (0..width).map(|i| mu.part(i) + width - 1 - i).collect();
    let mut out: Vec<SignedPartition> = beta
        .iter()
        .filter(|&&b| !beta.contains(&(b + k)))
        .map(|&b| {
            let jumped = beta.iter().filter(|&&c| c > b && c < b + k).count();
            let mut moved: Vec<usize> = beta
                .iter()
                .map(|&c| if c == b { b + k } else { c })
                .collect();
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let parts = moved
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (width - 1 - i))
                .collect();
            SignedPartition {
                partition: Partition::from_sorted(parts),
                sign: if jumped % 2 == 0 { 1 } else { -1 },
            }
        })
        .collect();
    out.sort_by(|a, b| b.partition.cmp(&a.partition));
    out
}
