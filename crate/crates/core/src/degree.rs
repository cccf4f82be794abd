//! Character degrees `f^λ`: hook length formula, closed forms for fat hooks and
//! three-row shapes, a brute-force tableau counter, and the analytic extensions
//! `h` and `h1` at integer arguments.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::factorial;
use crate::partition::Partition;

/// Exact degree of an irreducible character.
pub type Degree = BigUint;

/// Default size bound for [`syt_enumerate`].
pub const SYT_BOUND: usize = 14;

static DEGREES: OnceLock<RwLock<HashMap<Partition, Degree>>> = OnceLock::new();

/// `f^λ` by the hook length formula, memoized.
pub fn degree(lam: &Partition) -> Degree {
    let cache = DEGREES.get_or_init(Default::default);
    if let Some(d) = cache.read().unwrap().get(lam) {
        return d.clone();
    }
    let d = degree_uncached(lam);
    cache.write().unwrap().insert(lam.clone(), d.clone());
    d
}

/// `f^λ = n! / ∏ h(i,j)` without touching the cache.
pub fn degree_uncached(lam: &Partition) -> Degree {
    let hooks: BigUint = lam
        .hook_lengths()
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
    let (q, r) = factorial(lam.size()).div_rem(&hooks);
    assert!(r.is_zero(), "hook product does not divide n! for {lam}");
    q
}

/// Degree of a shape written as signed parts, zero when the parts are not a partition.
pub fn degree_of(parts: &[i64]) -> Degree {
    Partition::new(parts)
        .map(|p| degree(&p))
        .unwrap_or_default()
}

/// Closed form for `f^(a,b,1^t)`, `a >= b >= 1`, `t >= 0`.
pub fn degree_fathook(a: i64, b: i64, t: i64) -> Result<Degree> {
    if !(a >= b && b >= 1 && t >= 0) {
        return Err(Error::Precondition(format!(
            "fat hook needs a >= b >= 1, t >= 0; got ({a},{b},{t})"
        )));
    }
    let (a, b, t) = (a as usize, b as usize, t as usize);
    let num = factorial(a + b + t) * BigUint::from(a - b + 1);
    let den = BigUint::from((a + t + 1) * (b + t)) * factorial(a) * factorial(b - 1) * factorial(t);
    Ok(exact_div(num, den))
}

/// Closed form for `f^(r,s,t)`, `r >= s >= t >= 0`.
pub fn degree_threepart(r: i64, s: i64, t: i64) -> Result<Degree> {
    if !(r >= s && s >= t && t >= 0) {
        return Err(Error::Precondition(format!(
            "three-part shape needs r >= s >= t >= 0; got ({r},{s},{t})"
        )));
    }
    let (r, s, t) = (r as usize, s as usize, t as usize);
    let num = factorial(r + s + t) * BigUint::from((r - s + 1) * (r - t + 2) * (s - t + 1));
    let den = factorial(r + 2) * factorial(s + 1) * factorial(t);
    Ok(exact_div(num, den))
}

fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form is not integral");
    q
}

/// Counts standard Young tableaux of shape `lam` by backtracking over fillings.
pub fn syt_enumerate(lam: &Partition, bound: usize) -> Result<Degree> {
    if lam.size() > bound {
        return Err(Error::BoundExceeded {
            size: lam.size(),
            bound,
        });
    }
    fn place(shape: &[usize], filled: &mut [usize], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut count = 0;
        for i in 0..shape.len() {
            let fits = filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]);
            if fits {
                filled[i] += 1;
                count += place(shape, filled, left - 1);
                filled[i] -= 1;
            }
        }
        count
    }
    let mut filled = vec![0; lam.len()];
    Ok(BigUint::from(place(lam.parts(), &mut filled, lam.size())))
}

/// Exact value of `h` or `h1`; integral at integer arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnalyticValue(BigRational);

impl AnalyticValue {
    fn new(value: BigRational) -> Self {
        assert!(
            value.is_integer(),
            "analytic value {value} is not an integer"
        );
        AnalyticValue(value)
    }

    pub fn zero() -> Self {
        AnalyticValue(BigRational::zero())
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn to_integer(&self) -> BigInt {
        self.0.to_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for AnalyticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `1/j!` with `1/j! = 0` for negative `j`.
fn recip_factorial(j: i64) -> BigRational {
    if j < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), factorial(j as usize).into())
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `h(x,y,z) = (x+y+z)!/((x+2)!(y+1)!z!) · (x-y+1)(x-z+2)(y-z+1)`.
///
/// Reciprocal factorials vanish at negative arguments; `x+y+z < 0` is rejected.
/// Agrees with `f^(x,y,z)` whenever `(x,y,z)` is a partition.
pub fn h_analytic(x: i64, y: i64, z: i64) -> Result<AnalyticValue> {
    let total = x + y + z;
    if total < 0 {
        return Err(Error::NegativeTotal(total));
    }
    let value = BigRational::from_integer(factorial(total as usize).into())
        * recip_factorial(x + 2)
        * recip_factorial(y + 1)
        * recip_factorial(z)
        * int((x - y + 1) * (x - z + 2) * (y - z + 1));
    Ok(AnalyticValue::new(value))
}

/// `h1(x,y;r) = (x+y+r)!/(x!(y-1)!r!) · (x-y+1)/((x+r+1)(y+r))`.
///
/// Agrees with `f^(x,y,1^r)` whenever that is a partition. The points
/// `x+r+1 = 0` and `y+r = 0` are rejected as singular.
pub fn h1_analytic(x: i64, y: i64, r: i64) -> Result<AnalyticValue> {
    let total = x + y + r;
    if total < 0 {
        return Err(Error::NegativeTotal(total));
    }
    if x + r + 1 == 0 || y + r == 0 {
        return Err(Error::Singular(format!("h1({x},{y};{r})")));
    }
    let value = BigRational::from_integer(factorial(total as usize).into())
        * recip_factorial(x)
        * recip_factorial(y - 1)
        * recip_factorial(r)
        * BigRational::new((x - y + 1).into(), ((x + r + 1) * (y + r)).into());
    Ok(AnalyticValue::new(value))
}
