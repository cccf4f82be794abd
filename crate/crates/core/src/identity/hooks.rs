use num_bigint::BigInt;

use super::{
    evaluate_degrees, IdentityId, IdentityInstance, Param, Side, Term, VerificationReport,
};
use crate::error::{Error, Result};
use crate::numbers::catalan;
use crate::partition::{add_rim_hooks, hook_family, HookFamily, Partition};

/// `Σ ± f^λ` over all ways of adding a rim `k`-hook to `μ`, against `0`.
///
/// Needs `k >= 2`: the signed sum is a character vanishing off elements with a `k`-cycle,
/// and for `k = 1` the identity has one. There the sum is `(|μ|+1) f^μ` instead.
pub fn verify_hook_wrap(mu: &Partition, k: usize) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "hook wrapping needs k >= 2, got {k}"
        )));
    }
    let mut inst = IdentityInstance::new(IdentityId::HookWrap)
        .param_value("mu", Param::Shape(mu.clone()))
        .param("k", k as i64);
    for s in add_rim_hooks(mu, k) {
        inst.push(Term::degree(Side::L, s.sign, s.partition));
    }
    Ok(evaluate_degrees(&inst, "alternating"))
}

/// `Σ_{H*(2,2;2m)} f^λ = Σ_{H(4,0;2m-2)} f^λ`, then the right side against `C_{m-1} C_m`.
pub fn verify_regev(m: usize) -> Result<[VerificationReport; 2]> {
    if m < 2 {
        return Err(Error::Precondition(format!("need m >= 2, got {m}")));
    }
    let star = hook_family(2 * m, HookFamily::DoubleTwoStar)?;
    let four = hook_family(2 * m - 2, HookFamily::AtMostParts(4))?;
    let mut a = IdentityInstance::new(IdentityId::Regev).param("m", m as i64);
    for lam in star {
        a = a.lhs(lam);
    }
    let mut b = IdentityInstance::new(IdentityId::Regev).param("m", m as i64);
    for lam in four {
        a = a.rhs(lam.clone());
        b = b.lhs(lam);
    }
    b.push(Term::count(
        Side::R,
        format!("C({})C({})", m - 1, m),
        BigInt::from(catalan(m - 1) * catalan(m)),
    ));
    Ok([
        evaluate_degrees(&a, "sizes 2m and 2m-2"),
        evaluate_degrees(&b, "Catalan product"),
    ])
}

/// Tableaux with at most four rows against `C_{⌊(n+1)/2⌋} C_{⌈(n+1)/2⌉}`.
pub fn verify_four_row_count(n: usize) -> Result<VerificationReport> {
    let mut inst = IdentityInstance::new(IdentityId::FourRow).param("n", n as i64);
    for lam in hook_family(n, HookFamily::AtMostParts(4))? {
        inst = inst.lhs(lam);
    }
    let (a, b) = (n.div_ceil(2), (n + 2) / 2);
    inst.push(Term::count(
        Side::R,
        format!("C({a})C({b})"),
        BigInt::from(catalan(a) * catalan(b)),
    ));
    Ok(evaluate_degrees(&inst, "at most four rows"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn wrap_examples() {
        let r = verify_hook_wrap(&p("3,1"), 6).unwrap();
        assert!(r.pass);
        assert_eq!(
            r.instance.equation(),
            "f^(9,1) - f^(6,4) + f^(4,4,2) - f^(3,3,2,1^2) + f^(3,2,2,1^3) - f^(3,1^7) = 0"
        );
        let r = verify_hook_wrap(&Partition::empty(), 3).unwrap();
        assert_eq!(r.instance.equation(), "f^(3) - f^(2,1) + f^(1^3) = 0");
        assert!(verify_hook_wrap(&p("1"), 1).is_err());
        // a single box has no leg, so every sign is +
        let ones: BigInt = add_rim_hooks(&p("2,1"), 1)
            .iter()
            .map(|s| BigInt::from(crate::degree(&s.partition)))
            .sum();
        assert_eq!(ones, BigInt::from(4 * 2));
    }

    #[test]
    fn regev_small() {
        let [a, b] = verify_regev(2).unwrap();
        assert!(a.pass && b.pass);
        assert_eq!(a.lhs_value, BigInt::from(2));
        let [a, b] = verify_regev(3).unwrap();
        assert_eq!(a.lhs_value, BigInt::from(10));
        assert!(a.pass && b.pass);
    }

    #[test]
    fn four_rows() {
        for n in 0..=12 {
            assert!(verify_four_row_count(n).unwrap().pass, "n={n}");
        }
    }
}
