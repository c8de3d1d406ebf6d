//! Exact polynomials in `u = q⁻¹` over arbitrary-precision integers.
//!
//! Every deformed quantity in this crate (weight polynomials, deformed
//! partition counts, deformed Kostant functions) lives in `ℤ[u]`. The three
//! classical specializations are evaluations: `q = ∞` is `u = 0`, `q = 1` is
//! `u = 1` and `q = -1` is `u = -1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial `c₀ + c₁u + c₂u² + …` with big-integer coefficients.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

/// Evaluation points used throughout: the three classical limits and any
/// rational value of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    /// `u = 0`, the `q → ∞` limit.
    QInfinity,
    /// `u = 1`.
    QOne,
    /// `u = -1`.
    QMinusOne,
    Rational(BigRational),
}

impl EvalPoint {
    pub fn value(&self) -> BigRational {
        match self {
            EvalPoint::QInfinity => BigRational::zero(),
            EvalPoint::QOne => BigRational::one(),
            EvalPoint::QMinusOne => -BigRational::one(),
            EvalPoint::Rational(r) => r.clone(),
        }
    }
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `c·uᵉ`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `u`.
    pub fn u() -> Self {
        Self::monomial(1, 1)
    }

    /// `1 - u`, i.e. `1 - q⁻¹`.
    pub fn one_minus_u() -> Self {
        Self::from_i64s(&[1, -1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `uⁱ` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when the polynomial does not depend on `u`.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// `self^e`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(1-u)^e`.
    pub fn one_minus_u_pow(e: u32) -> Self {
        Self::one_minus_u().pow(e)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `uᵉ`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// `self += c · other`, in place.
    pub fn add_scaled(&mut self, other: &QPoly, c: &BigInt) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        self.normalize();
    }

    /// `self += uᵉ · other`, in place.
    pub fn add_shifted(&mut self, other: &QPoly, e: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + e;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (a, b) in self.coeffs[e..].iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.normalize();
    }

    /// `self -= uᵉ · other`, in place.
    pub fn sub_shifted(&mut self, other: &QPoly, e: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + e;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (a, b) in self.coeffs[e..].iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &EvalPoint) -> BigRational {
        match point {
            EvalPoint::QInfinity => BigRational::from_integer(self.constant_term()),
            EvalPoint::QOne => BigRational::from_integer(self.eval_int(&BigInt::one())),
            EvalPoint::QMinusOne => BigRational::from_integer(self.eval_int(&-BigInt::one())),
            EvalPoint::Rational(x) => {
                let mut acc = BigRational::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * x + BigRational::from_integer(c.clone());
                }
                acc
            }
        }
    }

    /// Exact value at an integer point (Horner).
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at `u = 0` (the `q → ∞` limit).
    pub fn at_q_infinity(&self) -> BigInt {
        self.constant_term()
    }

    /// Value at `u = 1`.
    pub fn at_q_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `u = -1`.
    pub fn at_q_minus_one(&self) -> BigInt {
        self.eval_int(&-BigInt::one())
    }

    /// Divides by `(1-u)` once, returning `None` when `p(1) ≠ 0`.
    fn div_one_minus_u(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        // Synthetic division by (u - 1): p = (u - 1)·s + p(1).
        let n = self.coeffs.len();
        let mut s = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry = &carry + &self.coeffs[i];
            s[i - 1] = carry.clone();
        }
        let rem = carry + &self.coeffs[0];
        if !rem.is_zero() {
            return None;
        }
        // p / (1 - u) = -s
        Some(QPoly::from_coeffs(s.into_iter().map(|c| -c).collect()))
    }

    /// Returns `s` with `self = (1-u)^r · s`, or [`Error::NotDivisible`].
    pub fn exact_div_pow_one_minus_u(&self, r: u32) -> Result<QPoly> {
        let mut cur = self.clone();
        for step in 0..r {
            cur = cur.div_one_minus_u().ok_or_else(|| Error::NotDivisible {
                power: r,
                achieved: step,
                poly: self.to_string(),
            })?;
        }
        Ok(cur)
    }

    /// Largest `r` with `(1-u)^r | self`; `None` for the zero polynomial.
    pub fn one_minus_u_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        let mut r = 0;
        while let Some(next) = cur.div_one_minus_u() {
            cur = next;
            r += 1;
        }
        Some(r)
    }

    /// Multiplies by `(1 - c·u^e)` in place.
    pub fn mul_one_minus_monomial(&mut self, c: &BigInt, e: usize) {
        let t = self.shift(e).scale(c);
        *self -= &t;
    }
}

impl fmt::Display for QPoly {
    /// Human-readable form, highest degree first: `276u^2 - 24u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "u")?,
                1 => write!(f, "{mag}u")?,
                _ if unit => write!(f, "u^{i}")?,
                _ => write!(f, "{mag}u^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.sub_shifted(rhs, 0);
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::from_coeffs(vec![c])
    }
}

/// Wire form: `{"var":"u","coeffs":["c0","c1",...]}` with decimal strings.
#[derive(Serialize, Deserialize)]
struct QPolyWire {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyWire {
            var: "u".to_string(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = QPolyWire::deserialize(d)?;
        if wire.var != "u" {
            return Err(D::Error::custom(format!("unexpected variable {:?}", wire.var)));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&p(&[1, -1]) * &p(&[1, -1]), p(&[1, -2, 1]));
        assert_eq!(&p(&[3, 0, 2]) + &QPoly::zero(), p(&[3, 0, 2]));
        assert_eq!(&p(&[0, -1]) * &p(&[0, -1]), p(&[0, 0, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), QPoly::zero());
        assert!((&p(&[1, 2]) - &p(&[1, 2])).coeffs().is_empty());
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn evaluations() {
        let eps5 = p(&[0, -1, 2]);
        assert_eq!(eps5.at_q_minus_one(), BigInt::from(3));
        assert_eq!(eps5.at_q_infinity(), BigInt::zero());
        assert_eq!(eps5.at_q_one(), BigInt::one());
        let half = EvalPoint::Rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(eps5.eval(&half), BigRational::zero());
        assert_eq!(QPoly::one().eval(&half), BigRational::one());
        assert_eq!(QPoly::one().eval(&EvalPoint::QMinusOne), BigRational::one());
    }

    #[test]
    fn one_minus_u_division() {
        let x = QPoly::one_minus_u_pow(2).scale(&BigInt::from(276));
        assert_eq!(x.exact_div_pow_one_minus_u(2).unwrap(), QPoly::constant(276));
        assert!(matches!(
            p(&[0, -1, 2]).exact_div_pow_one_minus_u(1),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(QPoly::zero().exact_div_pow_one_minus_u(5).unwrap(), QPoly::zero());
        assert_eq!(x.one_minus_u_valuation(), Some(2));
    }

    #[test]
    fn display_and_json() {
        let e = p(&[0, -24, 276]);
        assert_eq!(e.to_string(), "276u^2 - 24u");
        assert_eq!(p(&[-1, 1]).to_string(), "u - 1");
        let js = serde_json::to_string(&e).unwrap();
        assert_eq!(js, r#"{"var":"u","coeffs":["0","-24","276"]}"#);
        let back: QPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<QPoly>(r#"{"var":"q","coeffs":["1"]}"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(|v| QPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), num in -5i64..6, den in 1i64..5) {
            let pts = [
                EvalPoint::QInfinity,
                EvalPoint::QOne,
                EvalPoint::QMinusOne,
                EvalPoint::Rational(BigRational::new(num.into(), den.into())),
            ];
            let prod = &a * &b;
            for x in &pts {
                prop_assert_eq!(prod.eval(x), a.eval(x) * b.eval(x));
            }
        }

        #[test]
        fn division_remultiplies(a in arb_poly(), r in 0u32..4) {
            let p = &a * &QPoly::one_minus_u_pow(r);
            let s = p.exact_div_pow_one_minus_u(r).unwrap();
            prop_assert_eq!(&s * &QPoly::one_minus_u_pow(r), p);
        }

        #[test]
        fn divisibility_matches_valuation(a in arb_poly(), r in 0u32..4) {
            let ok = a.exact_div_pow_one_minus_u(r).is_ok();
            let expected = match a.one_minus_u_valuation() {
                None => true,
                Some(v) => v >= r,
            };
            prop_assert_eq!(ok, expected);
        }
    }
}
