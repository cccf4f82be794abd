//! Exact numeric verification of the degree identities, one structured report per instance.
//!
//! An [`IdentityInstance`] lists signed terms on each side; [`evaluate`] computes every term
//! exactly and produces a [`VerificationReport`]. The builders in the submodules construct
//! instances for each identity family and evaluate them.

mod auxiliary;
mod hooks;
mod knapsack;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::degree::{degree, h1_analytic, h_analytic};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub use auxiliary::{
    l_sum, l_sum_terms, verify_analytic_4_5, verify_l_identity, verify_prop_2_4, LRegion,
};
pub use hooks::{verify_four_row_count, verify_hook_wrap, verify_regev};
pub use knapsack::{
    branching_rows, swapped_regime, sweep_theorem_1_4, verify_branching_decomposition,
    verify_riordan_refinement, verify_theorem_1_4, verify_theorem_4_7, BranchDecomposition,
    BranchRow, RiordanRefinement,
};

/// Serializes a big integer as a decimal string.
pub fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Identity family tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Thm13,
    Thm14Eq1,
    Thm14Eq2,
    Lem23,
    Prop24,
    Thm42,
    Cor44,
    Ex41,
    Eq45,
    Thm47,
    HookWrap,
    Regev,
    Branch,
    FourRow,
    Search,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::Thm13,
        IdentityId::Thm14Eq1,
        IdentityId::Thm14Eq2,
        IdentityId::Lem23,
        IdentityId::Prop24,
        IdentityId::Thm42,
        IdentityId::Cor44,
        IdentityId::Ex41,
        IdentityId::Eq45,
        IdentityId::Thm47,
        IdentityId::HookWrap,
        IdentityId::Regev,
        IdentityId::Branch,
        IdentityId::FourRow,
        IdentityId::Search,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm13 => "thm1.3",
            IdentityId::Thm14Eq1 => "thm1.4-eq1",
            IdentityId::Thm14Eq2 => "thm1.4-eq2",
            IdentityId::Lem23 => "lem2.3",
            IdentityId::Prop24 => "prop2.4",
            IdentityId::Thm42 => "thm4.2",
            IdentityId::Cor44 => "cor4.4",
            IdentityId::Ex41 => "ex4.1",
            IdentityId::Eq45 => "eq4.5",
            IdentityId::Thm47 => "thm4.7",
            IdentityId::HookWrap => "hookwrap",
            IdentityId::Regev => "regev",
            IdentityId::Branch => "branch",
            IdentityId::FourRow => "fourrow",
            IdentityId::Search => "search",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    L,
    R,
}

/// What a term evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermKind {
    /// `f^λ`
    Degree(Partition),
    /// `h(x,y,z)` at integer arguments.
    H([i64; 3]),
    /// `h1(x,y;z)` at integer arguments.
    H1([i64; 3]),
    /// A precomputed count such as a path count or a Catalan product.
    Count { label: String, value: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub side: Side,
    pub sign: i8,
    pub kind: TermKind,
}

impl Term {
    pub fn degree(side: Side, sign: i8, lam: Partition) -> Self {
        Term {
            side,
            sign,
            kind: TermKind::Degree(lam),
        }
    }

    pub fn h(side: Side, sign: i8, args: [i64; 3]) -> Self {
        Term {
            side,
            sign,
            kind: TermKind::H(args),
        }
    }

    pub fn h1(side: Side, sign: i8, args: [i64; 3]) -> Self {
        Term {
            side,
            sign,
            kind: TermKind::H1(args),
        }
    }

    pub fn count(side: Side, label: impl Into<String>, value: impl Into<BigInt>) -> Self {
        Term {
            side,
            sign: 1,
            kind: TermKind::Count {
                label: label.into(),
                value: value.into(),
            },
        }
    }

    /// Unsigned value of the term.
    pub fn value(&self) -> Result<BigInt> {
        Ok(match &self.kind {
            TermKind::Degree(lam) => degree(lam).into(),
            TermKind::H([x, y, z]) => h_analytic(*x, *y, *z)?.to_integer(),
            TermKind::H1([x, y, z]) => h1_analytic(*x, *y, *z)?.to_integer(),
            TermKind::Count { value, .. } => value.clone(),
        })
    }

    /// Shape as written in identities, e.g. `f^(5,5,1^10)` or `h(4,8,8)`.
    pub fn shape(&self) -> String {
        self.shape_padded(0)
    }

    /// Like [`Term::shape`], padding partitions with zero parts up to `width`.
    pub fn shape_padded(&self, width: usize) -> String {
        match &self.kind {
            TermKind::Degree(lam) if width > lam.len() => {
                format!("f^{}", lam.display_padded(width))
            }
            TermKind::Degree(lam) => format!("f^{lam}"),
            TermKind::H([x, y, z]) => format!("h({x},{y},{z})"),
            TermKind::H1([x, y, z]) => format!("h1({x},{y};{z})"),
            TermKind::Count { label, .. } => label.clone(),
        }
    }

    fn shape_json(&self) -> Value {
        match &self.kind {
            TermKind::Degree(lam) => json!(lam.parts()),
            TermKind::H(a) => json!(a),
            TermKind::H1(a) => json!(a),
            TermKind::Count { .. } => json!([]),
        }
    }

    fn kind_label(&self) -> &'static str {
        match self.kind {
            TermKind::Degree(_) => "f",
            TermKind::H(_) => "h",
            TermKind::H1(_) => "h1",
            TermKind::Count { .. } => "count",
        }
    }
}

/// Parameter values of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Shape(Partition),
    Text(String),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Shape(p) => write!(f, "{p}"),
            Param::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub id: IdentityId,
    pub params: BTreeMap<String, Param>,
    pub lhs_terms: Vec<Term>,
    pub rhs_terms: Vec<Term>,
}

impl IdentityInstance {
    pub fn new(id: IdentityId) -> Self {
        IdentityInstance {
            id,
            params: BTreeMap::new(),
            lhs_terms: Vec::new(),
            rhs_terms: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: i64) -> Self {
        self.params.insert(name.to_string(), Param::Int(value));
        self
    }

    pub fn param_value(mut self, name: &str, value: Param) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn int_param(&self, name: &str) -> Option<i64> {
        match self.params.get(name) {
            Some(Param::Int(v)) => Some(*v),
            _ => None,
        }
    }

    /// Adds `+f^λ` on the left.
    pub fn lhs(mut self, lam: Partition) -> Self {
        self.lhs_terms.push(Term::degree(Side::L, 1, lam));
        self
    }

    /// Adds `+f^λ` on the right.
    pub fn rhs(mut self, lam: Partition) -> Self {
        self.rhs_terms.push(Term::degree(Side::R, 1, lam));
        self
    }

    pub fn push(&mut self, term: Term) {
        match term.side {
            Side::L => self.lhs_terms.push(term),
            Side::R => self.rhs_terms.push(term),
        }
    }

    /// The partitions of the degree terms on one side.
    pub fn partitions(&self, side: Side) -> Vec<Partition> {
        let terms = match side {
            Side::L => &self.lhs_terms,
            Side::R => &self.rhs_terms,
        };
        terms
            .iter()
            .filter_map(|t| match &t.kind {
                TermKind::Degree(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.lhs_terms.iter().chain(&self.rhs_terms)
    }

    /// `f^(..) + f^(..) = f^(..)`, with `0` for an empty side.
    pub fn equation(&self) -> String {
        self.equation_padded(0)
    }

    pub fn equation_padded(&self, width: usize) -> String {
        format!(
            "{} = {}",
            side_text(&self.lhs_terms, width),
            side_text(&self.rhs_terms, width)
        )
    }
}

fn side_text(terms: &[Term], width: usize) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.sign < 0) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&t.shape_padded(width));
    }
    out
}

/// Outcome of evaluating one instance. `pass` holds exactly when the two sides agree.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub instance: IdentityInstance,
    pub lhs_value: BigInt,
    pub rhs_value: BigInt,
    pub pass: bool,
    /// Every term with its unsigned value, left side first.
    pub term_breakdown: Vec<(Term, BigInt)>,
    pub regime: String,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn id(&self) -> IdentityId {
        self.instance.id
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Sum of the signed breakdown values on one side.
    pub fn resum(&self, side: Side) -> BigInt {
        self.term_breakdown
            .iter()
            .filter(|(t, _)| t.side == side)
            .map(|(t, v)| if t.sign < 0 { -v } else { v.clone() })
            .sum()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .term_breakdown
            .iter()
            .map(|(t, v)| {
                let mut o = json!({
                    "side": t.side,
                    "sign": t.sign,
                    "shape": t.shape_json(),
                    "value": v.to_string(),
                });
                if !matches!(t.kind, TermKind::Degree(_)) {
                    o["kind"] = json!(t.kind_label());
                    o["label"] = json!(t.shape());
                }
                o
            })
            .collect();
        let mut out = json!({
            "id": self.instance.id.as_str(),
            "params": self.instance.params,
            "lhs": self.lhs_value.to_string(),
            "rhs": self.rhs_value.to_string(),
            "pass": self.pass,
            "regime": self.regime,
            "terms": terms,
        });
        if !self.notes.is_empty() {
            out["notes"] = json!(self.notes);
        }
        out
    }

    /// One line: id, parameters, equation, values, verdict.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self
            .instance
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut out = format!(
            "{} [{}] {}: {} = {} ({}) {}",
            self.instance.id,
            params.join(", "),
            self.instance.equation(),
            self.lhs_value,
            self.rhs_value,
            self.regime,
            if self.pass { "PASS" } else { "FAIL" },
        );
        for n in &self.notes {
            out.push_str("\n  note: ");
            out.push_str(n);
        }
        out
    }
}

/// Evaluates both sides exactly.
pub fn evaluate(
    instance: &IdentityInstance,
    regime: impl Into<String>,
) -> Result<VerificationReport> {
    let mut breakdown = Vec::with_capacity(instance.lhs_terms.len() + instance.rhs_terms.len());
    let (mut lhs, mut rhs) = (BigInt::zero(), BigInt::zero());
    for t in instance.terms() {
        let v = t.value()?;
        let signed = if t.sign < 0 { -&v } else { v.clone() };
        match t.side {
            Side::L => lhs += signed,
            Side::R => rhs += signed,
        }
        breakdown.push((t.clone(), v));
    }
    Ok(VerificationReport {
        instance: instance.clone(),
        pass: lhs == rhs,
        lhs_value: lhs,
        rhs_value: rhs,
        term_breakdown: breakdown,
        regime: regime.into(),
        notes: Vec::new(),
    })
}

/// [`evaluate`] for instances made only of degrees and counts, which cannot fail.
pub(crate) fn evaluate_degrees(
    instance: &IdentityInstance,
    regime: impl Into<String>,
) -> VerificationReport {
    evaluate(instance, regime).expect("degree terms always evaluate")
}
