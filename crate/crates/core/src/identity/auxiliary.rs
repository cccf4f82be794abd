use num_bigint::BigInt;

use super::{
    evaluate, evaluate_degrees, IdentityId, IdentityInstance, Side, Term, VerificationReport,
};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The shapes `(k+j, k+j, 1^(m-2j))`, `0 <= j < len`, that are partitions.
pub fn l_sum_terms(len: usize, k: i64, m: i64) -> Vec<Partition> {
    (0..len as i64)
        .filter_map(|j| Partition::fat_hook(k + j, k + j, m - 2 * j))
        .collect()
}

/// `L_len(k, m)`.
pub fn l_sum(len: usize, k: i64, m: i64) -> BigInt {
    l_sum_terms(len, k, m)
        .iter()
        .map(|p| BigInt::from(degree(p)))
        .sum()
}

/// The closed forms available for `L_{2d+1}(k, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LRegion {
    /// `m <= k` and `m >= 4(d-1)`: three-row terms `(k+2r, k+2j, m-2(r+j))`.
    SmallM,
    /// `m >= k + 6d - 3`: three-row terms `(m-2(r+j+1), k+2r+1, k+2j+1)`.
    LargeM,
    /// `d = 1`, `m >= 4`: the three-case form.
    ThreeCase,
    /// `d = 2`, `m = k + δ` with `1 <= δ <= 8`.
    Intermediate,
}

impl LRegion {
    pub fn applies(self, d: i64, k: i64, m: i64) -> bool {
        match self {
            LRegion::SmallM => m <= k && m >= 4 * (d - 1),
            LRegion::LargeM => m >= k + 6 * d - 3,
            LRegion::ThreeCase => d == 1 && m >= 4,
            LRegion::Intermediate => d == 2 && (1..=8).contains(&(m - k)),
        }
    }

    fn id(self) -> IdentityId {
        match self {
            LRegion::SmallM => IdentityId::Thm42,
            LRegion::LargeM => IdentityId::Cor44,
            LRegion::ThreeCase => IdentityId::Lem23,
            LRegion::Intermediate => IdentityId::Ex41,
        }
    }

    /// Right side shapes as written, `None` where a shape is not a partition.
    fn rhs(self, d: i64, k: i64, m: i64) -> Vec<Option<Partition>> {
        let tp = Partition::three_part;
        let mut out = vec![Partition::fat_hook(k + 2 * d, k, m - 2 * d)];
        match self {
            LRegion::SmallM => {
                for r in 0..d {
                    for j in 0..=r {
                        out.push(tp(k + 2 * r, k + 2 * j, m - 2 * (r + j)));
                    }
                }
            }
            LRegion::LargeM => {
                for r in 0..d {
                    for j in 0..=r {
                        out.push(tp(m - 2 * (r + j + 1), k + 2 * r + 1, k + 2 * j + 1));
                    }
                }
            }
            LRegion::ThreeCase => {
                if m <= k {
                    out.push(tp(k, k, m));
                } else if m >= k + 3 {
                    out.push(tp(m - 2, k + 1, k + 1));
                }
            }
            LRegion::Intermediate => out.extend(match m - k {
                1 => [tp(k + 2, k, k - 1), tp(k + 2, k + 2, k - 3)],
                2 => [tp(k + 2, k, k), tp(k + 2, k + 2, k - 2)],
                3 => [tp(k + 1, k + 1, k + 1), tp(k + 2, k + 2, k - 1)],
                4 => [tp(k + 2, k + 2, k), None],
                5 => [tp(k + 3, k + 1, k + 1), None],
                6 => [tp(k + 4, k + 1, k + 1), tp(k + 2, k + 2, k + 2)],
                7 => [tp(k + 5, k + 1, k + 1), tp(k + 3, k + 3, k + 1)],
                _ => [tp(k + 6, k + 1, k + 1), tp(k + 4, k + 3, k + 1)],
            }),
        }
        out
    }

    fn regime(self, k: i64, m: i64) -> String {
        match self {
            LRegion::SmallM => "m <= k".into(),
            LRegion::LargeM => "m large".into(),
            LRegion::ThreeCase if m <= k => "m <= k".into(),
            LRegion::ThreeCase if m >= k + 3 => "m >= k+3".into(),
            LRegion::ThreeCase => "m = k+1 or k+2".into(),
            LRegion::Intermediate => format!("m = k+{}", m - k),
        }
    }
}

/// `L_{2d+1}(k, m)` against every closed form whose region contains `(d, k, m)`.
/// Shapes on either side that are not partitions are left out.
pub fn verify_l_identity(d: i64, k: i64, m: i64) -> Result<Vec<VerificationReport>> {
    if d < 0 || k < 2 || m < 2 {
        return Err(Error::Precondition(format!(
            "need d >= 0, k >= 2, m >= 2, got d={d}, k={k}, m={m}"
        )));
    }
    let regions: Vec<LRegion> = [
        LRegion::SmallM,
        LRegion::LargeM,
        LRegion::ThreeCase,
        LRegion::Intermediate,
    ]
    .into_iter()
    .filter(|r| r.applies(d, k, m))
    .collect();
    if regions.is_empty() {
        return Err(Error::NoRegion(format!("d={d}, k={k}, m={m}")));
    }
    let lhs = l_sum_terms(2 * d as usize + 1, k, m);
    Ok(regions
        .into_iter()
        .map(|region| {
            let mut inst = IdentityInstance::new(region.id())
                .param("d", d)
                .param("k", k)
                .param("m", m);
            if region == LRegion::Intermediate {
                inst = inst.param("delta", m - k);
            }
            for lam in &lhs {
                inst = inst.lhs(lam.clone());
            }
            for lam in region.rhs(d, k, m).into_iter().flatten() {
                inst = inst.rhs(lam);
            }
            evaluate_degrees(&inst, region.regime(k, m))
        })
        .collect())
}

/// `f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) = f^(k+1,k,1^(m-1))` for `k = m ± 1`.
pub fn verify_prop_2_4(k: i64, m: i64) -> Result<VerificationReport> {
    if (k - m).abs() != 1 || k < 1 || m < 2 {
        return Err(Error::Precondition(format!(
            "need k = m ± 1, k >= 1, m >= 2, got k={k}, m={m}"
        )));
    }
    let mut inst = IdentityInstance::new(IdentityId::Prop24)
        .param("k", k)
        .param("m", m);
    for lam in [
        Partition::fat_hook(k, k, m),
        Partition::fat_hook(k + 1, k + 1, m - 2),
    ]
    .into_iter()
    .flatten()
    {
        inst = inst.lhs(lam);
    }
    if let Some(lam) = Partition::fat_hook(k + 1, k, m - 1) {
        inst = inst.rhs(lam);
    }
    Ok(evaluate_degrees(
        &inst,
        if k > m { "k = m+1" } else { "k = m-1" },
    ))
}

/// `Σ_{j=0}^{2d} h1(k+j, k+j; m-2j) = h1(k+2d, k; m-2d) + Σ_{r<d} Σ_{j<=r} h(k+2r, k+2j, m-2(r+j))`,
/// evaluated with `1/j! = 0` for negative `j`.
pub fn verify_analytic_4_5(d: i64, k: i64, m: i64) -> Result<VerificationReport> {
    if d < 0 {
        return Err(Error::Precondition(format!("need d >= 0, got {d}")));
    }
    let mut inst = IdentityInstance::new(IdentityId::Eq45)
        .param("d", d)
        .param("k", k)
        .param("m", m);
    for j in 0..=2 * d {
        inst.push(Term::h1(Side::L, 1, [k + j, k + j, m - 2 * j]));
    }
    inst.push(Term::h1(Side::R, 1, [k + 2 * d, k, m - 2 * d]));
    for r in 0..d {
        for j in 0..=r {
            inst.push(Term::h(Side::R, 1, [k + 2 * r, k + 2 * j, m - 2 * (r + j)]));
        }
    }
    evaluate(&inst, "analytic")
}
