use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{MultiPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::numbers::factorial;

/// Integer affine form `Σ c_i v_i + c_0` over a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl Affine {
    pub fn new(coeffs: &[i64], constant: i64) -> Self {
        Affine {
            coeffs: coeffs.to_vec(),
            constant,
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Affine {
            coeffs: vec![0; nvars],
            constant: c,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![0; nvars];
        coeffs[i] = 1;
        Affine {
            coeffs,
            constant: 0,
        }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.coeffs, self.constant)
    }

    pub fn shifted(&self, c: i64) -> Self {
        Affine {
            coeffs: self.coeffs.clone(),
            constant: self.constant + c,
        }
    }

    pub fn eval(&self, point: &[i64]) -> i64 {
        self.coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .sum::<i64>()
            + self.constant
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Parses expressions such as `2k+m-3` over the named variables.
    pub fn parse(s: &str, names: &[&str]) -> Result<Self> {
        let bad = || Error::ShapeSyntax(s.to_string());
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let src = src.trim_start_matches('(').trim_end_matches(')');
        if src.is_empty() {
            return Err(bad());
        }
        let mut out = Affine::constant(names.len(), 0);
        let mut rest = src;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
            let (coef, var) = term.split_at(digits);
            let var = var.trim_start_matches('*');
            let coef: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            if var.is_empty() {
                if digits == 0 {
                    return Err(bad());
                }
                out.constant += sign * coef;
            } else {
                let i = names.iter().position(|n| *n == var).ok_or_else(bad)?;
                out.coeffs[i] += sign * coef;
            }
        }
        Ok(out)
    }
}

/// Product of shifted factorials of linear forms times a rational function.
///
/// Factors sharing a linear form are merged: every factorial is rewritten relative to the
/// smallest shift seen for its form, and the ratio `(L+c)!/(L+b)!` goes into the
/// polynomial part as `∏_{i=b+1}^{c} (L+i)`.
#[derive(Clone, Debug)]
pub struct FactorialQuotient {
    /// linear part of the form -> (base shift, net exponent)
    factors: BTreeMap<Vec<i64>, (i64, i32)>,
    poly_part: RationalFunction,
    nvars: usize,
}

impl FactorialQuotient {
    /// `∏ (arg)!^exponent · poly_part`.
    pub fn new(factorials: &[(Affine, i32)], poly_part: RationalFunction) -> Self {
        let nvars = poly_part.nvars();
        let mut fq = FactorialQuotient {
            factors: BTreeMap::new(),
            poly_part,
            nvars,
        };
        for (arg, e) in factorials {
            fq.push(arg, *e);
        }
        fq
    }

    fn push(&mut self, arg: &Affine, exponent: i32) {
        assert_eq!(arg.nvars(), self.nvars);
        if exponent == 0 {
            return;
        }
        if arg.is_constant() {
            assert!(
                arg.constant >= 0,
                "factorial of negative constant {}",
                arg.constant
            );
            let f = RationalFunction::from_poly(MultiPoly::constant(
                self.nvars,
                factorial(arg.constant as usize),
            ));
            self.poly_part = multiply_power(&self.poly_part, &f, exponent);
            return;
        }
        let entry = self
            .factors
            .entry(arg.coeffs.clone())
            .or_insert((arg.constant, 0));
        let (base, net) = *entry;
        let form = Affine::new(&arg.coeffs, 0);
        if arg.constant >= base {
            // (L+c)! = (L+base)! · rising(L, base, c)
            let r = rising(&form, base, arg.constant);
            *entry = (base, net + exponent);
            self.poly_part = multiply_power(&self.poly_part, &r, exponent);
        } else {
            // move the base down: (L+base)!^net = (L+c)!^net · rising(L, c, base)^net
            let r = rising(&form, arg.constant, base);
            *entry = (arg.constant, net + exponent);
            self.poly_part = multiply_power(&self.poly_part, &r, net);
        }
        if self.factors[&arg.coeffs].1 == 0 {
            self.factors.remove(&arg.coeffs);
        }
    }

    pub fn poly_part(&self) -> &RationalFunction {
        &self.poly_part
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Remaining factorials as `(argument, exponent)`.
    pub fn factorials(&self) -> Vec<(Affine, i32)> {
        self.factors
            .iter()
            .map(|(c, &(b, e))| (Affine::new(c, b), e))
            .collect()
    }

    /// Whether all factorials have cancelled.
    pub fn is_pure(&self) -> bool {
        self.factors.is_empty()
    }

    /// Value at an integer point; `None` if a factorial argument is negative or a
    /// denominator vanishes.
    pub fn eval(&self, point: &[i64]) -> Option<BigRational> {
        let big: Vec<BigInt> = point.iter().map(|&x| x.into()).collect();
        let mut v = self.poly_part.eval(&big)?;
        for (arg, e) in self.factorials() {
            let a = arg.eval(point);
            if a < 0 {
                return None;
            }
            let f = BigRational::from_integer(factorial(a as usize).into());
            for _ in 0..e.unsigned_abs() {
                v = if e > 0 { v * &f } else { v / &f };
            }
        }
        Some(v)
    }
}

/// `∏_{i=from+1}^{to} (form + i)` for `from <= to`.
fn rising(form: &Affine, from: i64, to: i64) -> RationalFunction {
    let p = (from + 1..=to).fold(MultiPoly::one(form.nvars()), |acc, i| {
        acc * form.shifted(i).poly()
    });
    RationalFunction::from_poly(p)
}

fn multiply_power(acc: &RationalFunction, f: &RationalFunction, e: i32) -> RationalFunction {
    let mut out = acc.clone();
    for _ in 0..e.unsigned_abs() {
        out = if e > 0 { &out * f } else { &out / f };
    }
    out
}

/// `a / b` as a rational function; fails unless the factorial content cancels completely.
pub fn ratio(a: &FactorialQuotient, b: &FactorialQuotient) -> Result<RationalFunction> {
    let mut q = a.clone();
    for (arg, e) in b.factorials() {
        q.push(&arg, -e);
    }
    q.poly_part = &q.poly_part / &b.poly_part;
    if !q.is_pure() {
        let left: Vec<String> = q
            .factorials()
            .iter()
            .map(|(a, e)| format!("{a:?}^{e}"))
            .collect();
        return Err(Error::FactorialContent(left.join(", ")));
    }
    Ok(q.poly_part)
}

/// A shape whose entries are affine in the certificate variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymShape {
    /// `(a, b, 1^t)`
    FatHook { a: Affine, b: Affine, t: Affine },
    /// `(r, s, t)`
    ThreePart { r: Affine, s: Affine, t: Affine },
}

impl SymShape {
    pub fn fat_hook(a: Affine, b: Affine, t: Affine) -> Self {
        SymShape::FatHook { a, b, t }
    }

    pub fn three_part(r: Affine, s: Affine, t: Affine) -> Self {
        SymShape::ThreePart { r, s, t }
    }

    /// Parses `k+2, k, 1^(m-2)` (fat hook) or `l, k, m` (three parts).
    pub fn parse(s: &str, names: &[&str]) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let items: Vec<&str> = split_top_level(body);
        let unsupported = || Error::Precondition(format!("unsupported shape family: {s}"));
        if items.len() != 3 {
            return Err(unsupported());
        }
        let a = Affine::parse(items[0], names)?;
        let b = Affine::parse(items[1], names)?;
        match items[2].trim().strip_prefix("1^") {
            Some(tail) => Ok(SymShape::fat_hook(a, b, Affine::parse(tail, names)?)),
            None => Ok(SymShape::three_part(a, b, Affine::parse(items[2], names)?)),
        }
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl fmt::Display for SymShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymShape::FatHook { a, b, t } => write!(f, "({a:?}, {b:?}, 1^{t:?})"),
            SymShape::ThreePart { r, s, t } => write!(f, "({r:?}, {s:?}, {t:?})"),
        }
    }
}

/// The hook-length closed form of `f^shape`.
///
/// Fat hooks: `(a+b+t)! (a-b+1) / ((a+t+1)(b+t) a! (b-1)! t!)`.
/// Three rows: `(r+s+t)! (r-s+1)(r-t+2)(s-t+1) / ((r+2)! (s+1)! t!)`.
pub fn closed_form_symbol(shape: &SymShape) -> FactorialQuotient {
    let sum3 = |x: &Affine, y: &Affine, z: &Affine| Affine {
        coeffs: x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .zip(&z.coeffs)
            .map(|((a, b), c)| a + b + c)
            .collect(),
        constant: x.constant + y.constant + z.constant,
    };
    let diff = |x: &Affine, y: &Affine, c: i64| Affine {
        coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a - b).collect(),
        constant: x.constant - y.constant + c,
    };
    let plus = |x: &Affine, y: &Affine, c: i64| Affine {
        coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect(),
        constant: x.constant + y.constant + c,
    };
    match shape {
        SymShape::FatHook { a, b, t } => {
            let poly = RationalFunction::new(
                diff(a, b, 1).poly(),
                plus(a, t, 1).poly() * plus(b, t, 0).poly(),
            );
            FactorialQuotient::new(
                &[
                    (sum3(a, b, t), 1),
                    (a.clone(), -1),
                    (b.shifted(-1), -1),
                    (t.clone(), -1),
                ],
                poly,
            )
        }
        SymShape::ThreePart { r, s, t } => {
            let poly = RationalFunction::from_poly(
                diff(r, s, 1).poly() * diff(r, t, 2).poly() * diff(s, t, 1).poly(),
            );
            FactorialQuotient::new(
                &[
                    (sum3(r, s, t), 1),
                    (r.shifted(2), -1),
                    (s.shifted(1), -1),
                    (t.clone(), -1),
                ],
                poly,
            )
        }
    }
}

impl FactorialQuotient {
    /// `1` as a factorial quotient.
    pub fn one(nvars: usize) -> Self {
        Self::new(&[], RationalFunction::constant(nvars, 1))
    }

    pub fn is_one(&self) -> bool {
        self.is_pure() && self.poly_part == RationalFunction::constant(self.nvars, 1)
    }
}

impl PartialEq for FactorialQuotient {
    fn eq(&self, other: &Self) -> bool {
        ratio(self, other).is_ok_and(|r| r == RationalFunction::constant(self.nvars, 1))
    }
}
