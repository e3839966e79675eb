//! Exact coefficient field: rationals and univariate rational functions.
//!
//! A [`Scalar`] is an element of `Q(q)` or `Q(α)` kept in lowest terms with a
//! monic denominator, so structural equality is field equality. Constants carry
//! no variable and combine freely with either field; mixing `q` with `α`
//! outside of constants is an error.

mod poly;

pub use poly::Poly;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{self, Expr};

pub type Rational = BigRational;

/// The indeterminate of a rational function field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    Alpha,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Alpha => "alpha",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "q" => Some(Var::Q),
            "alpha" | "α" => Some(Var::Alpha),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    var: Option<Var>,
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    /// Builds `num/den` and reduces it to canonical form.
    pub fn from_parts(var: Var, num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(Some(var), num, den))
    }

    fn canonical(var: Option<Var>, num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::with_monic_den(var, num, den)
    }

    fn with_monic_den(var: Option<Var>, num: Poly, den: Poly) -> Scalar {
        let lc = den.leading().expect("nonzero denominator").clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        let var = if num.is_constant() && den.is_constant() {
            None
        } else {
            var
        };
        Scalar { var, num, den }
    }

    pub fn zero() -> Scalar {
        Scalar {
            var: None,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar {
            var: None,
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Self::from_rational(Rational::new(n.into(), d.into()))
    }

    /// The indeterminate itself.
    pub fn var(v: Var) -> Scalar {
        Scalar {
            var: Some(v),
            num: Poly::monomial(Rational::one(), 1),
            den: Poly::one(),
        }
    }

    /// `v^k` for any integer `k`; negative powers become `1/v^|k|`.
    pub fn var_pow(v: Var, k: i64) -> Scalar {
        let mono = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        match k {
            0 => Scalar::one(),
            k if k > 0 => Scalar {
                var: Some(v),
                num: mono,
                den: Poly::one(),
            },
            _ => Scalar {
                var: Some(v),
                num: Poly::one(),
                den: mono,
            },
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Scalar {
        Self::var_pow(Var::Q, k)
    }

    pub fn variable(&self) -> Option<Var> {
        self.var
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value if this scalar is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.var.is_none() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn join_var(a: Option<Var>, b: Option<Var>) -> Result<Option<Var>> {
        match (a, b) {
            (Some(x), Some(y)) if x != y => Err(Error::VariableMismatch(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        let var = Self::join_var(self.var, rhs.var)?;
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Ok(Self::with_monic_den(var, num, Poly::one()));
            }
            return Ok(Self::canonical(var, num, self.den.clone()));
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Ok(Self::canonical(var, num, &self.den * &rhs.den))
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        let var = Self::join_var(self.var, rhs.var)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Scalar::zero());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Ok(Self::with_monic_den(var, &self.num * &rhs.num, Poly::one()));
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        Ok(Self::with_monic_den(var, num, den))
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_mul(&rhs.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.var, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, value: &Rational) -> Result<Rational> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(Error::Pole(value.to_string()));
        }
        Ok(self.num.eval(value) / d)
    }

    /// Substitutes a rational for the variable `v`; other scalars are unchanged.
    pub fn substitute(&self, v: Var, value: &Rational) -> Result<Scalar> {
        if self.var == Some(v) {
            Ok(Scalar::from_rational(self.eval(value)?))
        } else {
            Ok(self.clone())
        }
    }

    /// `[2]_q = q + q^{-1}`.
    pub fn q_bracket2() -> Scalar {
        &Scalar::q_pow(1) + &Scalar::q_pow(-1)
    }

    /// `1/(q - q^{-1})`.
    pub fn inv_q_minus_qinv() -> Scalar {
        (&Scalar::q_pow(1) - &Scalar::q_pow(-1))
            .inverse()
            .expect("q - 1/q is nonzero")
    }

    /// Parses the textual scalar form, e.g. `(q^2 + 1)/(q)` or `-3/4`.
    pub fn parse(text: &str) -> Result<Scalar> {
        let e = expr::parse(text)?;
        Self::from_expr(&e)
    }

    pub(crate) fn from_expr(e: &Expr) -> Result<Scalar> {
        match e {
            Expr::Int(n) => Ok(Scalar::from_rational(Rational::from_integer(n.clone()))),
            Expr::Ident(name) => Var::from_name(name)
                .map(Scalar::var)
                .ok_or_else(|| Error::Parse(format!("unknown scalar symbol `{name}`"))),
            Expr::Neg(a) => Ok(-&Self::from_expr(a)?),
            Expr::Add(a, b) => Self::from_expr(a)?.try_add(&Self::from_expr(b)?),
            Expr::Sub(a, b) => Self::from_expr(a)?.try_add(&-&Self::from_expr(b)?),
            Expr::Mul(a, b) => Self::from_expr(a)?.try_mul(&Self::from_expr(b)?),
            Expr::Div(a, b) => Self::from_expr(a)?.try_div(&Self::from_expr(b)?),
            Expr::Pow(a, k) => Self::from_expr(a)?.pow(*k as i64),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        Scalar::parse(s)
    }
}

/// Parses an integer or `p/q` rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(text).map_err(|_| bad())?,
        )),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    /// Panics if the operands live in different fields.
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_add(&-rhs).expect("scalar subtraction")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            var: self.var,
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a polynomial in descending powers, e.g. `3*q^2 - 1`.
pub fn format_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if mono.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", fmt_rational(&mag), mono));
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.map(Var::name).unwrap_or("q");
        if self.den.is_one() {
            write!(f, "{}", format_poly(&self.num, v))
        } else {
            write!(f, "({})/({})", format_poly(&self.num, v), format_poly(&self.den, v))
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::var(Var::Q)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn additive_inverse() {
        assert!((&q() + &-q()).is_zero());
    }

    #[test]
    fn q_plus_q_inverse_common_denominator() {
        let s = &q() + &Scalar::q_pow(-1);
        assert_eq!(s.to_string(), "(q^2 + 1)/(q)");
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let s = &Scalar::inv_q_minus_qinv() + &Scalar::zero();
        assert_eq!(s.to_string(), "(q)/(q^2 - 1)");
        assert_eq!(s.eval(&r(2, 1)).unwrap(), r(2, 3));
    }

    #[test]
    fn q_times_q_inverse() {
        assert!((&q() * &Scalar::q_pow(-1)).is_one());
    }

    #[test]
    fn bracket_product_expands() {
        let a = &q() + &Scalar::q_pow(-1);
        let b = &q() - &Scalar::q_pow(-1);
        let p = &a * &b;
        assert_eq!(p.to_string(), "(q^4 - 1)/(q^2)");
        assert_eq!(p.eval(&r(2, 1)).unwrap(), r(15, 4));
    }

    #[test]
    fn two_times_half() {
        assert!((&Scalar::from_int(2) * &Scalar::ratio(1, 2)).is_one());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Scalar::q_pow(2).eval(&r(3, 1)).unwrap(), r(9, 1));
        assert_eq!(Scalar::inv_q_minus_qinv().eval(&r(2, 1)).unwrap(), r(2, 3));
        let inv_q = Scalar::q_pow(-1);
        assert!(matches!(inv_q.eval(&r(0, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = Scalar::var(Var::Alpha);
        assert!(matches!(q().try_add(&a), Err(Error::VariableMismatch(..))));
        assert!(matches!(q().try_mul(&a), Err(Error::VariableMismatch(..))));
        // constants mix with either field
        assert!(a.try_add(&Scalar::from_int(3)).is_ok());
    }

    #[test]
    fn textual_round_trip() {
        for s in ["0", "-3/4", "3*q^2 - 1", "(q^2 + 1)/(q)", "(-q)/(q^2 - 1)", "(1/2*q + 3)/(q^3)"] {
            assert_eq!(Scalar::parse(s).unwrap().to_string(), s);
        }
        let a = Scalar::parse("alpha^2 - 1/2").unwrap();
        assert_eq!(a.variable(), Some(Var::Alpha));
        assert_eq!(a.to_string(), "alpha^2 - 1/2");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), r(3, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), r(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
