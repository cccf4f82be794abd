//! Exploratory searches: equal-sum pairs of partition sets and the even-length `L_d` scan.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::degree::{degree, Degree};
use crate::error::{Error, Result};
use crate::identity::{
    evaluate, l_sum, verify_theorem_1_4, IdentityId, IdentityInstance, Param, Side, TermKind,
    VerificationReport,
};
use crate::partition::{partitions, three_part_partitions, Partition};

/// Default hard cap on enumerated subsets.
pub const DEFAULT_EVAL_CAP: u64 = 10_000_000;
/// Default per-side subset size cap.
pub const DEFAULT_MAX_SIDE: usize = 8;

const PRIME: u64 = (1 << 61) - 1;

/// Candidate families a pool can be built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PoolFamily {
    /// Partitions with at most three parts.
    ThreePart,
    /// `(k,k,1^t)` and `(k+1,k,1^t)`.
    FatHook,
    /// Partitions with at most `p` parts.
    HookBounded(usize),
}

impl std::str::FromStr for PoolFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3part" => Ok(PoolFamily::ThreePart),
            "fathook" => Ok(PoolFamily::FatHook),
            _ => s
                .strip_prefix("rows")
                .and_then(|p| p.parse().ok())
                .map(PoolFamily::HookBounded)
                .ok_or_else(|| Error::UnknownId(format!("pool family {s}"))),
        }
    }
}

/// Deduplicated candidates with precomputed degrees.
#[derive(Clone, Debug)]
pub struct SearchPool {
    pub candidates: Vec<(Partition, Degree)>,
}

impl SearchPool {
    pub fn from_partitions(parts: impl IntoIterator<Item = Partition>) -> Self {
        let set: BTreeSet<Partition> = parts.into_iter().collect();
        let mut list: Vec<Partition> = set.into_iter().collect();
        list.reverse();
        let candidates = list.into_par_iter().map(|p| {
            let d = degree(&p);
            (p, d)
        });
        SearchPool {
            candidates: candidates.collect(),
        }
    }

    /// Union of the given families at size `n`.
    pub fn families(n: usize, families: &[PoolFamily]) -> Self {
        let mut all = Vec::new();
        for f in families {
            match f {
                PoolFamily::ThreePart => all.extend(three_part_partitions(n)),
                PoolFamily::FatHook => {
                    for k in 1..=n / 2 {
                        all.extend(Partition::fat_hook(
                            k as i64,
                            k as i64,
                            n as i64 - 2 * k as i64,
                        ));
                        all.extend(Partition::fat_hook(
                            k as i64 + 1,
                            k as i64,
                            n as i64 - 2 * k as i64 - 1,
                        ));
                    }
                }
                PoolFamily::HookBounded(p) => {
                    all.extend(partitions(n).into_iter().filter(|lam| lam.len() <= *p))
                }
            }
        }
        Self::from_partitions(all)
    }

    /// Three-part partitions together with the fat hooks `(k,k,1^t)` and `(k+1,k,1^t)`.
    pub fn standard(n: usize) -> Self {
        Self::families(n, &[PoolFamily::ThreePart, PoolFamily::FatHook])
    }

    /// Parses `3part+fathook`-style descriptions.
    pub fn parse(n: usize, spec: &str) -> Result<Self> {
        let families: Vec<PoolFamily> = spec.split('+').map(str::parse).collect::<Result<_>>()?;
        Ok(Self::families(n, &families))
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Largest number of partitions on either side.
    pub max_side: usize,
    /// Hard cap on the number of subsets enumerated.
    pub eval_cap: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_side: DEFAULT_MAX_SIDE,
            eval_cap: DEFAULT_EVAL_CAP,
        }
    }
}

/// One equal-sum pair of disjoint sets.
#[derive(Clone, Debug)]
pub struct FoundIdentity {
    pub instance: IdentityInstance,
    pub sum: BigUint,
    /// Known family this pair belongs to, or `None`.
    pub label: Option<String>,
}

impl FoundIdentity {
    pub fn total_terms(&self) -> usize {
        self.instance.lhs_terms.len() + self.instance.rhs_terms.len()
    }

    /// Re-evaluates both sides exactly.
    pub fn verify(&self) -> VerificationReport {
        let regime = self.label.clone().unwrap_or_else(|| "unlabelled".into());
        evaluate(&self.instance, regime).expect("degree terms always evaluate")
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub identities: Vec<FoundIdentity>,
    /// Subsets enumerated.
    pub evaluated: u64,
    /// Set when the cap stopped the enumeration early; results are then partial.
    pub truncated: bool,
}

/// Number of subsets of size `1..=s` of an `n`-set, saturating.
fn subset_count(n: usize, s: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u128 = 1;
    for i in 1..=s.min(n) {
        c = c * (n + 1 - i) as u128 / i as u128;
        total = total.saturating_add(c.min(u64::MAX as u128) as u64);
    }
    total
}

/// Enumerates subsets in order of size, then lexicographically by index, as bit masks.
fn enumerate_masks(n: usize, max_size: usize, cap: u64) -> (Vec<u128>, bool) {
    let mut out = Vec::with_capacity(subset_count(n, max_size).min(cap) as usize);
    let mut stack: Vec<usize> = Vec::new();
    for size in 1..=max_size.min(n) {
        stack.clear();
        stack.extend(0..size);
        loop {
            if out.len() as u64 >= cap {
                return (out, true);
            }
            out.push(stack.iter().fold(0u128, |m, &i| m | (1 << i)));
            // next combination
            let mut i = size;
            while i > 0 && stack[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            stack[i - 1] += 1;
            for j in i..size {
                stack[j] = stack[j - 1] + 1;
            }
        }
    }
    (out, false)
}

/// Disjoint nonempty subset pairs of the pool with equal degree sums.
///
/// Subsets up to `limits.max_side` elements are fingerprinted by their degree sum modulo
/// `2^61 - 1`, sorted, and matched within equal fingerprints; every match is confirmed with
/// exact arithmetic. Pairs are reported once (unordered), ranked by total number of terms
/// and then by the largest degree involved.
pub fn find_equal_sum_pairs(
    n: usize,
    pool: &SearchPool,
    limits: SearchLimits,
) -> Result<SearchOutcome> {
    if pool.is_empty() {
        return Err(Error::Precondition("empty search pool".into()));
    }
    if pool.len() > 128 {
        return Err(Error::BoundExceeded {
            size: pool.len(),
            bound: 128,
        });
    }
    let residues: Vec<u64> = pool
        .candidates
        .iter()
        .map(|(_, d)| (d % BigUint::from(PRIME)).to_u64().expect("below 2^61"))
        .collect();
    let (masks, truncated) = enumerate_masks(pool.len(), limits.max_side, limits.eval_cap);
    let mut keyed: Vec<(u64, u128)> = masks
        .par_iter()
        .map(|&m| {
            let fp = bits(m).fold(0u64, |acc, i| (acc + residues[i]) % PRIME);
            (fp, m)
        })
        .collect();
    keyed.par_sort_unstable();

    let groups: Vec<&[(u64, u128)]> = keyed
        .chunk_by(|a, b| a.0 == b.0)
        .filter(|g| g.len() > 1)
        .collect();
    let exact_sum = |m: u128| -> BigUint { bits(m).map(|i| &pool.candidates[i].1).sum() };
    let mut found: Vec<(u128, u128, BigUint)> = groups
        .par_iter()
        .flat_map_iter(|g| {
            let mut by_sum: HashMap<BigUint, Vec<u128>> = HashMap::new();
            for &(_, m) in g.iter() {
                by_sum.entry(exact_sum(m)).or_default().push(m);
            }
            let mut out = Vec::new();
            for (sum, ms) in by_sum {
                for (i, &a) in ms.iter().enumerate() {
                    for &b in &ms[i + 1..] {
                        if a & b == 0 {
                            let (x, y) = if a < b { (a, b) } else { (b, a) };
                            out.push((x, y, sum.clone()));
                        }
                    }
                }
            }
            out
        })
        .collect();
    found.sort_unstable();
    found.dedup();

    let known = KnownFamilies::new(n);
    let mut identities: Vec<FoundIdentity> = found
        .into_iter()
        .map(|(a, b, sum)| {
            let side = |m: u128| -> Vec<Partition> {
                bits(m).map(|i| pool.candidates[i].0.clone()).collect()
            };
            let (l, r) = (side(a), side(b));
            let label = known.label(&l, &r);
            let mut inst = IdentityInstance::new(IdentityId::Search).param("n", n as i64);
            if let Some(lab) = &label {
                inst = inst.param_value("label", Param::Text(lab.clone()));
            }
            for p in l {
                inst = inst.lhs(p);
            }
            for p in r {
                inst = inst.rhs(p);
            }
            FoundIdentity {
                instance: inst,
                sum,
                label,
            }
        })
        .collect();
    let max_degree = |f: &FoundIdentity| -> BigUint {
        f.instance
            .terms()
            .filter_map(|t| match &t.kind {
                TermKind::Degree(p) => Some(degree(p)),
                _ => None,
            })
            .max()
            .unwrap_or_default()
    };
    identities.sort_by_cached_key(|f| (f.total_terms(), max_degree(f), f.instance.equation()));
    Ok(SearchOutcome {
        identities,
        evaluated: masks.len() as u64,
        truncated,
    })
}

fn bits(m: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| m >> i & 1 == 1)
}

/// Known identity families at one size, keyed by their two sides as sets.
struct KnownFamilies {
    known: HashMap<(Vec<Partition>, Vec<Partition>), String>,
}

impl KnownFamilies {
    fn new(n: usize) -> Self {
        let mut known = HashMap::new();
        let mut add = |l: Vec<Partition>, r: Vec<Partition>, label: String| {
            let (mut l, mut r) = (l, r);
            l.sort();
            r.sort();
            known.insert((l.clone(), r.clone()), label.clone());
            known.insert((r, l), label);
        };
        for k in 0..=n / 2 {
            for rep in verify_theorem_1_4(n, k).into_iter().flatten() {
                let label = format!("{} n={n} k={k}", rep.instance.id);
                add(
                    rep.instance.partitions(Side::L),
                    rep.instance.partitions(Side::R),
                    label,
                );
            }
        }
        KnownFamilies { known }
    }

    fn label(&self, l: &[Partition], r: &[Partition]) -> Option<String> {
        let (mut ls, mut rs) = (l.to_vec(), r.to_vec());
        ls.sort();
        rs.sort();
        if let Some(lab) = self.known.get(&(ls, rs)) {
            return Some(lab.clone());
        }
        if l.len() == 1 && r.len() == 1 && l[0].conjugate() == r[0] {
            return Some("conjugate".into());
        }
        None
    }
}

/// The `X`-set instances of the knapsack identities at `n` with two nonempty disjoint sides,
/// as (left, right) shape lists.
pub fn knapsack_instances(n: usize) -> Vec<(Vec<Partition>, Vec<Partition>)> {
    (0..=n / 2)
        .flat_map(|k| verify_theorem_1_4(n, k).into_iter().flatten())
        .map(|rep| {
            (
                rep.instance.partitions(Side::L),
                rep.instance.partitions(Side::R),
            )
        })
        .filter(|(l, r)| !l.is_empty() && !r.is_empty() && l.iter().all(|p| !r.contains(p)))
        .collect()
}

/// One row of the even-length scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub d: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub l_value: BigUint,
    /// The fat hook `(k+a, k, 1^(m-a))` subtracted, if any.
    pub probe: Option<String>,
    pub residual: String,
    /// Sums of at most two three-row degrees of size `2k+m` equal to the residual.
    pub matches: Vec<String>,
}

fn serialize_biguint<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl ScanRow {
    pub fn csv_header() -> &'static str {
        "d,L_d,probe,residual,match"
    }

    pub fn to_csv(&self) -> String {
        let m = if self.matches.is_empty() {
            "no candidate".to_string()
        } else {
            self.matches.join(" | ")
        };
        format!(
            "{},{},\"{}\",{},\"{}\"",
            self.d,
            self.l_value,
            self.probe.clone().unwrap_or_default(),
            self.residual,
            m
        )
    }
}

/// `L_d(k, m)` for even `d <= d_max`, probed against `(k+a, k, 1^(m-a))` for even `a <= d`
/// and matched against sums of at most two three-row degrees. Informational only.
pub fn scan_even_l(k: i64, m: i64, d_max: usize) -> Result<Vec<ScanRow>> {
    if k < 2 || m < 2 {
        return Err(Error::Precondition(format!(
            "need k, m >= 2, got k={k}, m={m}"
        )));
    }
    let n = (2 * k + m) as usize;
    let rows3: Vec<(Partition, BigUint)> = three_part_partitions(n)
        .into_iter()
        .map(|p| {
            let d = degree(&p);
            (p, d)
        })
        .collect();
    let mut combos: HashMap<BigUint, Vec<String>> = HashMap::new();
    for (i, (p, dp)) in rows3.iter().enumerate() {
        combos.entry(dp.clone()).or_default().push(format!("f^{p}"));
        for (q, dq) in &rows3[i + 1..] {
            combos
                .entry(dp + dq)
                .or_default()
                .push(format!("f^{p} + f^{q}"));
        }
    }
    let mut out = Vec::new();
    for d in (0..=d_max).step_by(2) {
        let l = l_sum(d, k, m);
        let l = l.to_biguint().expect("sum of degrees");
        if d == 0 {
            out.push(ScanRow {
                d,
                l_value: l,
                probe: None,
                residual: "0".into(),
                matches: vec!["empty sum".into()],
            });
            continue;
        }
        let mut any = false;
        for a in (0..=d as i64).step_by(2) {
            let Some(probe) = Partition::fat_hook(k + a, k, m - a) else {
                continue;
            };
            let pd = degree(&probe);
            if pd > l {
                continue;
            }
            any = true;
            let residual = &l - &pd;
            let matches = if residual == BigUint::default() {
                vec!["exact".into()]
            } else {
                combos.get(&residual).cloned().unwrap_or_default()
            };
            out.push(ScanRow {
                d,
                l_value: l.clone(),
                probe: Some(format!("f^{probe}")),
                residual: residual.to_string(),
                matches,
            });
        }
        if !any {
            let matches = combos.get(&l).cloned().unwrap_or_default();
            out.push(ScanRow {
                d,
                l_value: l.clone(),
                probe: None,
                residual: l.to_string(),
                matches,
            });
        }
    }
    Ok(out)
}
