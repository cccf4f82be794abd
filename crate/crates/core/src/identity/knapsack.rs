use num_bigint::BigInt;
use rayon::prelude::*;

use super::{
    evaluate, evaluate_degrees, IdentityId, IdentityInstance, Param, Side, Term, VerificationReport,
};
use crate::error::{Error, Result};
use crate::partition::{three_part_partitions, x_set, Partition, XSetClass};
use crate::paths::{count_paths, PathKind};

/// `true` when the two equations trade their `X1`/`X2` sides: `k > ⌈n/3⌉` and `k ≢ n (mod 2)`.
pub fn swapped_regime(n: usize, k: usize) -> bool {
    k > n.div_ceil(3) && k % 2 != n % 2
}

fn regime(n: usize, k: usize) -> &'static str {
    if swapped_regime(n, k) {
        "k large, parity switched"
    } else if k <= n.div_ceil(3) {
        "k small"
    } else {
        "k large, same parity"
    }
}

fn fat(a: usize, b: usize, t: i64) -> Option<Partition> {
    Partition::fat_hook(a as i64, b as i64, t)
}

/// Both knapsack equations at `(n, k)`: the first has right side
/// `f^(k,k,1^(n-2k)) + f^(k+1,k+1,1^(n-2k-2))`, the second `f^(k+1,k,1^(n-2k-1))`.
/// The left sides are `X1` and `X2` respectively, or the other way round in the swapped
/// regime. Right-side shapes that are not partitions are left out.
pub fn verify_theorem_1_4(n: usize, k: usize) -> Result<[VerificationReport; 2]> {
    if n == 0 || k > n / 2 {
        return Err(Error::Precondition(format!(
            "need n >= 1 and 0 <= k <= n/2, got n={n}, k={k}"
        )));
    }
    let (first, second) = if swapped_regime(n, k) {
        (XSetClass::Class2, XSetClass::Class1)
    } else {
        (XSetClass::Class1, XSetClass::Class2)
    };
    let m = n as i64 - 2 * k as i64;
    let build = |id, class: XSetClass, rhs: Vec<Option<Partition>>| {
        let mut inst = IdentityInstance::new(id)
            .param("n", n as i64)
            .param("k", k as i64)
            .param_value("lhs_set", Param::Text(class.label().into()));
        for lam in x_set(n, k, class) {
            inst = inst.lhs(lam);
        }
        for lam in rhs.into_iter().flatten() {
            inst = inst.rhs(lam);
        }
        evaluate_degrees(&inst, regime(n, k))
    };
    Ok([
        build(
            IdentityId::Thm14Eq1,
            first,
            vec![fat(k, k, m), fat(k + 1, k + 1, m - 2)],
        ),
        build(IdentityId::Thm14Eq2, second, vec![fat(k + 1, k, m - 1)]),
    ])
}

/// Per-`k` refinement and grand totals of the Riordan identity at `n`.
#[derive(Clone, Debug)]
pub struct RiordanRefinement {
    /// First-equation reports for every `k ≡ n (mod 2)`, `0 <= k <= n/2`.
    pub per_k: Vec<VerificationReport>,
    /// Equal-parity three-part sum against `R(n)`, then the fat-hook sum against `R(n)`.
    pub totals: [VerificationReport; 2],
    /// Whether the per-`k` sides re-sum to the two grand sums.
    pub bookkeeping_agrees: bool,
}

impl RiordanRefinement {
    pub fn pass(&self) -> bool {
        self.bookkeeping_agrees && self.per_k.iter().chain(&self.totals).all(|r| r.pass)
    }

    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.per_k.iter().chain(&self.totals)
    }
}

pub fn verify_riordan_refinement(n: usize) -> Result<RiordanRefinement> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let per_k: Vec<VerificationReport> = (0..=n / 2)
        .filter(|k| k % 2 == n % 2)
        .map(|k| verify_theorem_1_4(n, k).map(|[a, _]| a))
        .collect::<Result<_>>()?;
    let r = BigInt::from(count_paths(PathKind::Riordan, n));
    let label = format!("R({n})");

    let mut x = IdentityInstance::new(IdentityId::Thm13)
        .param("n", n as i64)
        .param_value("side", Param::Text("X".into()));
    for lam in three_part_partitions(n) {
        let p = |i| lam.part(i) % 2;
        if p(0) == p(1) && p(1) == p(2) {
            x = x.lhs(lam);
        }
    }
    x.push(Term::count(Side::R, label.clone(), r.clone()));
    let mut y = IdentityInstance::new(IdentityId::Thm13)
        .param("n", n as i64)
        .param_value("side", Param::Text("Y".into()));
    for k in 1..=n / 2 {
        y = y.lhs(fat(k, k, n as i64 - 2 * k as i64).expect("k >= 1 gives a fat hook"));
    }
    y.push(Term::count(Side::R, label, r));
    let totals = [
        evaluate_degrees(&x, "X total"),
        evaluate_degrees(&y, "Y total"),
    ];

    let lhs: BigInt = per_k.iter().map(|r| &r.lhs_value).sum();
    let rhs: BigInt = per_k.iter().map(|r| &r.rhs_value).sum();
    let bookkeeping_agrees = lhs == totals[0].lhs_value && rhs == totals[1].lhs_value;
    let mut out = RiordanRefinement {
        per_k,
        totals,
        bookkeeping_agrees,
    };
    if !bookkeeping_agrees {
        out.totals[1].notes.push(format!(
            "per-k sides sum to {lhs} and {rhs}; grand sums are {} and {}",
            out.totals[0].lhs_value, out.totals[1].lhs_value
        ));
    }
    Ok(out)
}

/// The first equation in the `h` form at `(n, k)` with `m = n - 2k`:
/// `f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) = Σ_{j=0}^{⌊k/2⌋} h(m+2j, k, k-2j)`.
///
/// Returns the `h`-form report; when `k <= ⌈n/3⌉` or `k ≡ n (mod 2)` it is followed by a
/// report that the `h` terms outside partitions sum to zero and by the reduced report
/// against `X1(n,k)`.
pub fn verify_theorem_4_7(n: usize, k: usize) -> Result<Vec<VerificationReport>> {
    if k == 0 || n < 2 * k + 2 {
        return Err(Error::Precondition(format!(
            "need k >= 1 and m = n - 2k >= 2, got n={n}, k={k}"
        )));
    }
    let m = (n - 2 * k) as i64;
    let ki = k as i64;
    let lhs = |inst: IdentityInstance| {
        inst.param("n", n as i64)
            .param("k", ki)
            .lhs(fat(k, k, m).expect("fat hook"))
            .lhs(fat(k + 1, k + 1, m - 2).expect("fat hook"))
    };
    let args: Vec<[i64; 3]> = (0..=ki / 2).map(|j| [m + 2 * j, ki, ki - 2 * j]).collect();
    let is_partition = |a: &[i64; 3]| a[0] >= a[1];

    let mut hform =
        lhs(IdentityInstance::new(IdentityId::Thm47)).param_value("form", Param::Text("h".into()));
    for a in &args {
        hform.push(Term::h(Side::R, 1, *a));
    }
    let mut out = vec![evaluate(&hform, "h form")?];
    if k <= n.div_ceil(3) || k % 2 == n % 2 {
        let mut residual = IdentityInstance::new(IdentityId::Thm47)
            .param("n", n as i64)
            .param("k", ki)
            .param_value("form", Param::Text("residual".into()));
        for a in args.iter().filter(|a| !is_partition(a)) {
            residual.push(Term::h(Side::L, 1, *a));
        }
        out.push(evaluate(&residual, "non-partition h terms")?);
        let mut reduced = lhs(IdentityInstance::new(IdentityId::Thm47))
            .param_value("form", Param::Text("X1".into()));
        for lam in x_set(n, k, XSetClass::Class1) {
            reduced = reduced.rhs(lam);
        }
        out.push(evaluate_degrees(&reduced, regime(n, k)));
    }
    Ok(out)
}

/// How the boxes removed from one row of an `X` set line up with an `X` set of size `n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchRow {
    /// 1, 2 or 3.
    pub row: usize,
    /// The partitions obtained, in the order of the source set.
    pub removed: Vec<Partition>,
    pub k: usize,
    pub class: XSetClass,
    /// Members of `x_set(n-1, k, class)` that do not arise.
    pub missing: Vec<Partition>,
}

impl BranchRow {
    pub fn describe(&self, n: usize) -> String {
        let base = format!(
            "row {}: {}({},{})",
            self.row,
            self.class.label(),
            n - 1,
            self.k
        );
        if self.missing.is_empty() {
            base
        } else {
            let m: Vec<String> = self.missing.iter().map(|p| p.to_string()).collect();
            format!("{base} missing {}", m.join(", "))
        }
    }
}

/// Splits the branching of `x_set(n,k,class)` by row and identifies each row's result as an
/// `X` set of size `n-1` with at most one member missing.
pub fn branching_rows(n: usize, k: usize, class: XSetClass) -> Result<Vec<BranchRow>> {
    let source = x_set(n, k, class);
    if source.is_empty() {
        return Err(Error::Precondition(format!(
            "{}({n},{k}) is empty",
            class.label()
        )));
    }
    (0..3)
        .map(|row| {
            let removed: Vec<Partition> = source
                .iter()
                .filter_map(|lam| remove_padded(lam, row))
                .collect();
            let candidates = match row {
                0 => [(k, class), (k, class.other())],
                1 => [(k - 1, class.other()), (k - 1, class)],
                _ => [(k, class.other()), (k, class)],
            };
            candidates
                .into_iter()
                .find_map(|(k2, c2)| {
                    let target = x_set(n - 1, k2, c2);
                    let all_found = removed.iter().all(|p| target.contains(p));
                    let missing: Vec<Partition> = target
                        .into_iter()
                        .filter(|p| !removed.contains(p))
                        .collect();
                    (all_found && missing.len() <= 1).then(|| BranchRow {
                        row: row + 1,
                        removed: removed.clone(),
                        k: k2,
                        class: c2,
                        missing,
                    })
                })
                .ok_or_else(|| Error::Identification {
                    row: row + 1,
                    detail: format!(
                        "{} partitions from {}({n},{k})",
                        removed.len(),
                        class.label()
                    ),
                })
        })
        .collect()
}

/// Removes a box from row `row` of a partition viewed as having three rows.
fn remove_padded(lam: &Partition, row: usize) -> Option<Partition> {
    let mut parts = [lam.part(0), lam.part(1), lam.part(2)];
    if parts[row] == 0 || (row < 2 && parts[row] - 1 < parts[row + 1]) {
        return None;
    }
    parts[row] -= 1;
    Some(Partition::from_parts(parts.to_vec()).expect("still decreasing"))
}

/// Branching decomposition with its per-row identification.
#[derive(Clone, Debug)]
pub struct BranchDecomposition {
    pub rows: Vec<BranchRow>,
    /// `Σ_{X} f^λ` against `Σ_rows (Σ_{X'} f^μ − f^missing)`.
    pub report: VerificationReport,
}

pub fn verify_branching_decomposition(
    n: usize,
    k: usize,
    class: XSetClass,
) -> Result<BranchDecomposition> {
    if k == 0 || n < 2 {
        return Err(Error::Precondition(format!(
            "need k >= 1 and n >= 2, got n={n}, k={k}"
        )));
    }
    let rows = branching_rows(n, k, class)?;
    let mut inst = IdentityInstance::new(IdentityId::Branch)
        .param("n", n as i64)
        .param("k", k as i64)
        .param_value("class", Param::Text(class.label().into()));
    for lam in x_set(n, k, class) {
        inst = inst.lhs(lam);
    }
    for row in &rows {
        for lam in x_set(n - 1, row.k, row.class) {
            inst = inst.rhs(lam);
        }
        for lam in &row.missing {
            inst.push(Term::degree(Side::R, -1, lam.clone()));
        }
    }
    let descr: Vec<String> = rows.iter().map(|r| r.describe(n)).collect();
    let report = evaluate_degrees(&inst, descr.join("; "));
    Ok(BranchDecomposition { rows, report })
}

/// Both equations for every `(n, k)` in the ranges, in `(n, k)` order.
pub fn sweep_theorem_1_4(ns: std::ops::RangeInclusive<usize>) -> Vec<VerificationReport> {
    let pairs: Vec<(usize, usize)> = ns.flat_map(|n| (1..=n / 2).map(move |k| (n, k))).collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(n, k)| verify_theorem_1_4(n, k).expect("k in range"))
        .collect()
}
