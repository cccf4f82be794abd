use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::MultiPoly;

/// Quotient of two integer polynomials.
///
/// Stored with the integer content of numerator and denominator cancelled and the
/// denominator's leading coefficient positive. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        Self::new(p, MultiPoly::one(n))
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    /// Product of linear factors over product of linear factors, each given as
    /// `(coefficients, constant)`.
    pub fn from_linear_factors(nvars: usize, num: &[(&[i64], i64)], den: &[(&[i64], i64)]) -> Self {
        let prod = |fs: &[(&[i64], i64)]| {
            fs.iter().fold(MultiPoly::one(nvars), |acc, (c, k)| {
                acc * MultiPoly::linear(c, *k)
            })
        };
        Self::new(prod(num), prod(den))
    }

    fn normalize(&mut self) {
        let n = self.num.nvars();
        if self.num.is_zero() {
            self.den = MultiPoly::one(n);
            return;
        }
        let g = self.num.content().gcd(&self.den.content());
        let sign = if self
            .den
            .leading_coefficient()
            .is_some_and(|c| c.is_negative())
        {
            -1
        } else {
            1
        };
        let g = g * BigInt::from(sign);
        self.num = self.num.div_exact(&g);
        self.den = self.den.div_exact(&g);
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerator of `self - other` after cross-multiplication, content removed.
    /// Zero exactly when the two rational functions are equal.
    pub fn difference_numerator(&self, other: &RationalFunction) -> MultiPoly {
        let d = &(&self.num * &other.den) - &(&other.num * &self.den);
        if d.is_zero() {
            d
        } else {
            let c = d.content();
            d.div_exact(&c)
        }
    }

    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Self {
        Self::new(
            self.num.substitute(var, value),
            self.den.substitute(var, value),
        )
    }

    /// Value at an integer point; `None` where the denominator vanishes.
    pub fn eval(&self, point: &[BigInt]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(BigRational::new(self.num.eval(point), d))
        }
    }

    pub fn display(&self, names: &[&str]) -> String {
        if self.den.degree() == Some(0)
            && self
                .den
                .leading_coefficient()
                .is_some_and(|c| c == &BigInt::from(1))
        {
            return self.num.display(names);
        }
        format!(
            "({}) / ({})",
            self.num.display(names),
            self.den.display(names)
        )
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.difference_numerator(other).is_zero()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::new(-&self.num, self.den.clone())
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}
