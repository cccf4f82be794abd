//! Machine-checked replays of the hook-formula proofs behind the auxiliary identities.
//!
//! Each certificate builds closed forms as [`FactorialQuotient`]s, reduces the relevant
//! ratios to rational functions, and compares them by cross-multiplication. Every check
//! records the reduced difference polynomial, which must be `0`. A small numeric layer
//! evaluates the same identities on concrete shapes with exact integers.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use super::{
    closed_form_symbol, ratio, Affine, FactorialQuotient, MultiPoly, RationalFunction, SymShape,
};
use crate::degree::{degree, h_analytic};
use crate::partition::Partition;

/// One symbolic equality together with its reduced difference.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicCheck {
    pub name: String,
    pub difference: String,
    pub pass: bool,
}

/// One exact integer spot check.
#[derive(Clone, Debug, Serialize)]
pub struct NumericCheck {
    pub label: String,
    #[serde(serialize_with = "crate::identity::serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::identity::serialize_bigint")]
    pub rhs: BigInt,
    pub pass: bool,
}

/// Outcome of one certificate.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub id: &'static str,
    pub title: &'static str,
    pub vars: Vec<&'static str>,
    /// Change of variables used, if any (e.g. `k = m + 2u`).
    pub substitution: Option<&'static str>,
    pub checks: Vec<SymbolicCheck>,
    pub numeric: Vec<NumericCheck>,
}

impl CertificateReport {
    fn new(id: &'static str, title: &'static str, vars: &[&'static str]) -> Self {
        CertificateReport {
            id,
            title,
            vars: vars.to_vec(),
            substitution: None,
            checks: Vec::new(),
            numeric: Vec::new(),
        }
    }

    pub fn symbolic_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn numeric_pass(&self) -> bool {
        self.numeric.iter().all(|c| c.pass)
    }

    pub fn pass(&self) -> bool {
        self.symbolic_pass() && self.numeric_pass()
    }

    /// Number of checks whose difference is not identically zero.
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
            + self.numeric.iter().filter(|c| !c.pass).count()
    }

    fn equal(&mut self, name: &str, lhs: &RationalFunction, rhs: &RationalFunction) {
        let diff = lhs.difference_numerator(rhs);
        self.checks.push(SymbolicCheck {
            name: name.to_string(),
            difference: diff.display(&self.vars),
            pass: diff.is_zero(),
        });
    }

    fn vanishes(&mut self, name: &str, f: &RationalFunction, var: usize, value: &MultiPoly) {
        let zero = RationalFunction::constant(f.nvars(), 0);
        self.equal(name, &f.substitute(var, value), &zero);
    }

    fn fails(&mut self, name: &str, detail: String) {
        self.checks.push(SymbolicCheck {
            name: name.to_string(),
            difference: detail,
            pass: false,
        });
    }

    fn numeric(&mut self, label: String, lhs: BigInt, rhs: BigInt) {
        let pass = lhs == rhs;
        self.numeric.push(NumericCheck {
            label,
            lhs,
            rhs,
            pass,
        });
    }

    /// The report in the shared verification JSON layout. `lhs` counts failing checks and
    /// `rhs` is `0`, so `pass` agrees with `lhs == rhs`.
    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> = self
            .vars
            .iter()
            .map(|v| (v.to_string(), Value::String("symbolic".into())))
            .collect();
        json!({
            "id": self.id,
            "params": params,
            "lhs": self.failures().to_string(),
            "rhs": "0",
            "pass": self.pass(),
            "regime": "symbolic",
            "terms": [],
            "substitution": self.substitution,
            "checks": self.checks,
            "numeric": self.numeric,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} [{}] vars=[{}]{}: {}\n",
            self.id,
            self.title,
            self.vars.join(","),
            self.substitution
                .map(|s| format!(" with {s}"))
                .unwrap_or_default(),
            if self.pass() { "PASS" } else { "FAIL" }
        );
        for c in &self.checks {
            out += &format!(
                "  {} {}: difference {}\n",
                mark(c.pass),
                c.name,
                c.difference
            );
        }
        for c in &self.numeric {
            out += &format!("  {} {}: {} = {}\n", mark(c.pass), c.label, c.lhs, c.rhs);
        }
        out
    }
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "ok  "
    } else {
        "FAIL"
    }
}

fn shape(s: &str, vars: &[&str]) -> FactorialQuotient {
    closed_form_symbol(&SymShape::parse(s, vars).expect("certificate shapes are well formed"))
}

fn quotient(
    vars: &[&str],
    factorials: &[(&str, i32)],
    num: &[&str],
    den: &[&str],
) -> FactorialQuotient {
    let n = vars.len();
    let product = |fs: &[&str]| {
        fs.iter().fold(MultiPoly::one(n), |acc, f| {
            acc * Affine::parse(f, vars).expect("well formed").poly()
        })
    };
    let facts: Vec<(Affine, i32)> = factorials
        .iter()
        .map(|(f, e)| (Affine::parse(f, vars).expect("well formed"), *e))
        .collect();
    FactorialQuotient::new(&facts, RationalFunction::new(product(num), product(den)))
}

fn rational(vars: &[&str], coeff: i64, num: &[&str], den: &[&str]) -> RationalFunction {
    quotient(vars, &[], num, den).poly_part() * &RationalFunction::constant(vars.len(), coeff)
}

/// Sum of `sign · a_i / base`; records a failed check if some ratio has mismatched content.
fn signed_ratio_sum(
    report: &mut CertificateReport,
    terms: &[(i64, &FactorialQuotient)],
    base: &FactorialQuotient,
) -> Option<RationalFunction> {
    let n = base.nvars();
    let mut acc = RationalFunction::constant(n, 0);
    for (sign, t) in terms {
        match ratio(t, base) {
            Ok(r) => acc = &acc + &(&r * &RationalFunction::constant(n, *sign)),
            Err(e) => {
                report.fails("factorial content", e.to_string());
                return None;
            }
        }
    }
    Some(acc)
}

fn checked_ratio(
    report: &mut CertificateReport,
    a: &FactorialQuotient,
    b: &FactorialQuotient,
) -> Option<RationalFunction> {
    signed_ratio_sum(report, &[(1, a)], b)
}

fn fh(a: i64, b: i64, t: i64) -> BigInt {
    Partition::fat_hook(a, b, t)
        .map(|p| BigInt::from(degree(&p)))
        .unwrap_or_default()
}

fn tp(r: i64, s: i64, t: i64) -> BigInt {
    Partition::three_part(r, s, t)
        .map(|p| BigInt::from(degree(&p)))
        .unwrap_or_default()
}

/// Integer values of `f(k,k,1^m) + f(k+1,k+1,1^(m-2)) + f(k+2,k+2,1^(m-4)) - f(k+2,k,1^(m-2))`.
pub fn delta3_value(k: i64, m: i64) -> BigInt {
    fh(k, k, m) + fh(k + 1, k + 1, m - 2) + fh(k + 2, k + 2, m - 4) - fh(k + 2, k, m - 2)
}

/// The right side of the three-term identity at `(k, m)`: `f(k,k,m)`, `0` or `f(m-2,k+1,k+1)`.
pub fn delta3_expected(k: i64, m: i64) -> BigInt {
    if m <= k {
        tp(k, k, m)
    } else if m >= k + 3 {
        tp(m - 2, k + 1, k + 1)
    } else {
        BigInt::default()
    }
}

/// The three-term sum `L(k,m)` minus `f(k+2,k,1^(m-2))`, reduced against `f(k,k,1^m)`.
pub fn certify_lemma_2_3() -> CertificateReport {
    const V: [&str; 2] = ["k", "m"];
    let mut r = CertificateReport::new("lem2.3", "three fat hooks against two terms", &V);
    let f0 = shape("k,k,1^m", &V);
    let f1 = shape("k+1,k+1,1^(m-2)", &V);
    let f2 = shape("k+2,k+2,1^(m-4)", &V);
    let g = shape("k+2,k,1^(m-2)", &V);

    if let Some(q) = checked_ratio(&mut r, &g, &f0) {
        let want = rational(&V, 3, &["k+m", "m-1", "m"], &["k+1", "k+2", "k+m-2"]);
        r.equal("f(k+2,k,1^(m-2)) / f(k,k,1^m)", &q, &want);
    }
    let delta = quotient(
        &V,
        &[("2k+m", 1), ("k+1", -1), ("k+2", -1), ("m", -1)],
        &["k-m+1", "k-m+2"],
        &[],
    );
    if let Some(d) = signed_ratio_sum(&mut r, &[(1, &f0), (1, &f1), (1, &f2), (-1, &g)], &f0) {
        let want = rational(
            &V,
            1,
            &["k-m+1", "k-m+2", "k+m", "k+m+1"],
            &["k", "k+1", "k+1", "k+2"],
        );
        r.equal("delta / f(k,k,1^m) factors", &d, &want);
        if let Some(dd) = checked_ratio(&mut r, &delta, &f0) {
            r.equal("delta closed form", &d, &dd);
        }
    }
    let one = RationalFunction::constant(2, 1);
    if let Some(q) = checked_ratio(&mut r, &shape("k,k,m", &V), &delta) {
        r.equal("f(k,k,m) equals delta", &q, &one);
    }
    if let Some(q) = checked_ratio(&mut r, &shape("m-2,k+1,k+1", &V), &delta) {
        r.equal("f(m-2,k+1,k+1) equals delta", &q, &one);
    }
    let k = MultiPoly::var(2, 0);
    for c in [1, 2] {
        let at = &k + &MultiPoly::constant(2, c);
        r.vanishes(
            &format!("delta vanishes at m=k+{c}"),
            delta.poly_part(),
            1,
            &at,
        );
    }

    for (k, m) in [(14, 7), (11, 13), (7, 21)] {
        r.numeric(
            format!("delta(k={k},m={m})"),
            delta3_value(k, m),
            delta3_expected(k, m),
        );
    }
    r
}

/// The two-against-one boundary identity for `k = m ± 1`.
pub fn certify_prop_2_4() -> CertificateReport {
    const V: [&str; 2] = ["k", "m"];
    let mut r = CertificateReport::new("prop2.4", "two fat hooks against one at k = m ± 1", &V);
    let f0 = shape("k,k,1^m", &V);
    let f1 = shape("k+1,k+1,1^(m-2)", &V);
    let g = shape("k+1,k,1^(m-1)", &V);
    let closed = quotient(
        &V,
        &[("2k+m", 1), ("k+1", -1), ("k", -1), ("m", -1)],
        &["k-m-1", "k-m+1"],
        &["k+m-1", "k+m+1"],
    );
    if let (Some(d), Some(c)) = (
        signed_ratio_sum(&mut r, &[(1, &f0), (1, &f1), (-1, &g)], &f0),
        checked_ratio(&mut r, &closed, &f0),
    ) {
        r.equal("difference closed form", &d, &c);
    }
    let k = MultiPoly::var(2, 0);
    for (c, label) in [(1, "m=k+1"), (-1, "m=k-1")] {
        let at = &k + &MultiPoly::constant(2, c);
        r.vanishes(
            &format!("difference vanishes at {label}"),
            closed.poly_part(),
            1,
            &at,
        );
    }
    for (k, m) in [(3, 2), (9, 8), (5, 6)] {
        r.numeric(
            format!(
                "f({k},{k},1^{m}) + f({},{},1^{}) = f({},{k},1^{})",
                k + 1,
                k + 1,
                m - 2,
                k + 1,
                m - 1
            ),
            fh(k, k, m) + fh(k + 1, k + 1, m - 2),
            fh(k + 1, k, m - 1),
        );
    }
    r
}

/// Four fat hooks with alternating signs against `f(l,k,m)`.
pub fn certify_lemma_4_3() -> CertificateReport {
    const V: [&str; 3] = ["l", "k", "m"];
    let mut r = CertificateReport::new("lem4.3", "three rows as four signed fat hooks", &V);
    let base = shape("l,k,m", &V);
    let t1 = shape("l,k,1^m", &V);
    let t2 = shape("l,k+2,1^(m-2)", &V);
    let t3 = shape("l+2,k,1^(m-2)", &V);
    let t4 = shape("l+2,k+2,1^(m-4)", &V);
    if let Some(q) = checked_ratio(&mut r, &t1, &base) {
        let want = rational(
            &V,
            1,
            &["l+1", "l+2", "k", "k+1"],
            &["k+m", "l+m+1", "l-m+2", "k-m+1"],
        );
        r.equal("f(l,k,1^m) / f(l,k,m)", &q, &want);
    }
    if let Some(s) = signed_ratio_sum(&mut r, &[(1, &t1), (-1, &t2), (-1, &t3), (1, &t4)], &base) {
        r.equal(
            "signed ratio sum is 1",
            &s,
            &RationalFunction::constant(3, 1),
        );
    }
    for (l, k, m) in [(6, 4, 4), (7, 5, 4), (9, 6, 5)] {
        r.numeric(
            format!("f({l},{k},{m})"),
            tp(l, k, m),
            fh(l, k, m) - fh(l, k + 2, m - 2) - fh(l + 2, k, m - 2) + fh(l + 2, k + 2, m - 4),
        );
    }
    r
}

/// `h(x,y,z) = h(z-2,x+1,y+1)`.
pub fn certify_h_swap() -> CertificateReport {
    const V: [&str; 3] = ["x", "y", "z"];
    let mut r = CertificateReport::new("hswap", "h(x,y,z) = h(z-2,x+1,y+1)", &V);
    let a = shape("x,y,z", &V);
    let b = shape("z-2,x+1,y+1", &V);
    if let Some(q) = checked_ratio(&mut r, &a, &b) {
        r.equal(
            "h(x,y,z) / h(z-2,x+1,y+1)",
            &q,
            &RationalFunction::constant(3, 1),
        );
    }
    let lhs = rational(&V, 1, &["x-y+1", "x-z+2", "y-z+1"], &[]);
    let rhs = rational(&V, 1, &["z-x-2", "z-y-1", "x-y+1"], &[]);
    r.equal("polynomial parts", &lhs, &rhs);
    let h = |x, y, z| {
        h_analytic(x, y, z)
            .map(|v| v.to_integer())
            .unwrap_or_default()
    };
    for (x, y, z) in [(2, 2, 2), (4, 2, 8), (4, 8, 8), (1, 7, -3)] {
        r.numeric(
            format!("h({x},{y},{z}) = h({},{},{})", z - 2, x + 1, y + 1),
            h(x, y, z),
            h(z - 2, x + 1, y + 1),
        );
    }
    r
}

/// `s(u-1-j) = -s(j)` for `s(j) = h(m+2j, k, k-2j)` with `k = m + 2u`.
pub fn certify_s_symmetry() -> CertificateReport {
    const V: [&str; 3] = ["u", "m", "j"];
    let mut r = CertificateReport::new("ssym", "s((k-m)/2-1-j) = -s(j)", &V);
    r.substitution = Some("k = m + 2u");
    // k = m+2u throughout
    let s = quotient(
        &V,
        &[
            ("3m+4u", 1),
            ("m+2j+2", -1),
            ("m+2u+1", -1),
            ("m+2u-2j", -1),
        ],
        &["2j-2u+1", "4j-2u+2", "2j+1"],
        &[],
    );
    let h = shape("m+2j,m+2u,m+2u-2j", &V);
    if let Some(q) = checked_ratio(&mut r, &h, &s) {
        r.equal(
            "s(j) = h(m+2j,k,k-2j)",
            &q,
            &RationalFunction::constant(3, 1),
        );
    }
    let reflected = shape("m+2u-2-2j,m+2u,m+2j+2", &V);
    if let Some(q) = checked_ratio(&mut r, &reflected, &s) {
        r.equal("s(u-1-j) / s(j)", &q, &RationalFunction::constant(3, -1));
    }
    let hv = |x, y, z| {
        h_analytic(x, y, z)
            .map(|v| v.to_integer())
            .unwrap_or_default()
    };
    r.numeric(
        "h(4,8,8) + h(6,8,6)".into(),
        hv(4, 8, 8) + hv(6, 8, 6),
        BigInt::default(),
    );
    r.numeric("h(3,5,5)".into(), hv(3, 5, 5), BigInt::default());
    r.numeric(
        "h(2,12,12) + h(10,12,4)".into(),
        hv(2, 12, 12) + hv(10, 12, 4),
        BigInt::default(),
    );
    r
}

/// All certificates in a fixed order.
pub fn certify_all() -> Vec<CertificateReport> {
    vec![
        certify_lemma_2_3(),
        certify_prop_2_4(),
        certify_lemma_4_3(),
        certify_h_swap(),
        certify_s_symmetry(),
    ]
}

/// Certificate ids accepted by [`certify_by_id`].
pub const CERTIFICATE_IDS: [&str; 5] = ["lem2.3", "prop2.4", "lem4.3", "hswap", "ssym"];

pub fn certify_by_id(id: &str) -> Option<CertificateReport> {
    Some(match id {
        "lem2.3" => certify_lemma_2_3(),
        "prop2.4" => certify_prop_2_4(),
        "lem4.3" => certify_lemma_4_3(),
        "hswap" => certify_h_swap(),
        "ssym" => certify_s_symmetry(),
        _ => return None,
    })
}
