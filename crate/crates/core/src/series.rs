//! Power series in one main variable truncated at a fixed degree, with
//! polynomial coefficients in `z` over the rationals.
//!
//! A series of order `N` is known modulo `t^(N+1)`. Binary operations take
//! the smaller order and `d_t` lowers it by one, so a result never claims
//! more precision than its inputs carry.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::zpoly::{rat, ZPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// `coeffs.len() == order + 1`
    coeffs: Vec<ZPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ZPolynomial::zero(); order + 1],
        }
    }

    pub fn constant(c: ZPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ZPolynomial::one(), order)
    }

    /// The main variable itself.
    pub fn var(order: usize) -> Self {
        Self::monomial(ZPolynomial::one(), 1, order)
    }

    /// `c t^k`
    pub fn monomial(c: ZPolynomial, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<ZPolynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, ZPolynomial::zero());
        TruncatedSeries { coeffs }
    }

    /// A polynomial in two variables, `t` (index `t`) and `z` (index `z`).
    pub fn from_mpoly(p: &MPoly, t: usize, z: usize, order: usize) -> Self {
        Self::from_coeffs(p.to_z_coefficients(t, z), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &ZPolynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ZPolynomial] {
        &self.coeffs
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZPolynomial::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![ZPolynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplies every coefficient by a polynomial in `z`.
    pub fn mul_z(&self, p: &ZPolynomial) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiplies by `t^k`; the order grows by `k`.
    pub fn mul_t_power(&self, k: usize) -> Self {
        let mut coeffs = vec![ZPolynomial::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonUnit)?;
        let inv0 = c0.recip();
        let order = self.order();
        let mut out: Vec<ZPolynomial> = Vec::with_capacity(order + 1);
        out.push(ZPolynomial::constant(inv0.clone()));
        for n in 1..=order {
            let mut acc = ZPolynomial::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &out[n - k]);
                }
            }
            out.push(acc.scale(&-&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn div_by_unit(&self, unit: &Self) -> Result<Self> {
        Ok(self.mul(&unit.inverse()?))
    }

    /// `self(g(t))`; `g` must have no constant term.
    pub fn compose_in_t(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("inner series has a constant term".into()));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&g).add(&Self::constant(c.clone(), order));
        }
        Ok(acc)
    }

    /// `z -> z + c` in every coefficient.
    pub fn substitute_z_shift(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p.shift(c)).collect(),
        }
    }

    /// Evaluates every coefficient at `z = c`.
    pub fn eval_z(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| ZPolynomial::constant(p.eval(c))).collect(),
        }
    }

    /// Derivative in the main variable; the order drops by one.
    pub fn d_t(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::InvalidArgument("derivative of an order-0 series".into()));
        }
        Ok(TruncatedSeries {
            coeffs: (1..self.coeffs.len())
                .map(|n| self.coeffs[n].scale(&rat(n as u64)))
                .collect(),
        })
    }

    pub fn d_z(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(ZPolynomial::derivative).collect(),
        }
    }

    /// Evaluates the polynomial `sum_i p_i(z) X^i`, given by its
    /// coefficient series, at `X = self` by Horner's rule.
    pub fn horner(coeffs: &[TruncatedSeries], x: &Self) -> Self {
        let order = coeffs.iter().map(Self::order).min().unwrap_or(x.order()).min(x.order());
        coeffs.iter().rev().fold(Self::zero(order), |acc, c| acc.mul(x).add(c))
    }

    /// JSON: one array per power, each listing the `z` coefficients as
    /// decimal rational strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|p| Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for TruncatedSeries {
    /// Sparse listing `c * t^n * z^k`, one term per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.coeffs.iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    writeln!(f, "{c} * t^{n} * z^{k}")?;
                }
            }
        }
        write!(f, "O(t^{})", self.order() + 1)
    }
}

/// `[t^n z^k]` as a rational, zero when out of range.
pub fn coefficient(s: &TruncatedSeries, n: usize, k: usize) -> BigRational {
    if n > s.order() {
        return BigRational::zero();
    }
    s.coeff(n).coeff(k)
}

/// `sum_{n <= order} c^n t^n`.
pub fn geometric(c: &BigRational, order: usize) -> TruncatedSeries {
    let mut p = BigRational::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        coeffs.push(ZPolynomial::constant(p.clone()));
        p *= c;
    }
    TruncatedSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(order: usize) -> TruncatedSeries {
        TruncatedSeries::var(order)
    }

    #[test]
    fn geometric_series_by_division() {
        let one_minus_t = TruncatedSeries::one(8).sub(&t(8));
        let q = t(8).div_by_unit(&one_minus_t).unwrap();
        let expected = geometric(&BigRational::one(), 8).sub(&TruncatedSeries::one(8));
        assert_eq!(q, expected);
        assert_eq!(t(8).inverse(), Err(Error::NonUnit));
        let z = TruncatedSeries::constant(ZPolynomial::from_ints([0, 1]), 3);
        assert_eq!(z.inverse(), Err(Error::NonUnit));
    }

    #[test]
    fn inverse_round_trip() {
        let x = TruncatedSeries::from_coeffs(
            vec![
                ZPolynomial::from_ints([3]),
                ZPolynomial::from_ints([1, -2]),
                ZPolynomial::from_ints([0, 0, 5]),
            ],
            6,
        );
        assert_eq!(x.mul(&x.inverse().unwrap()), TruncatedSeries::one(6));
    }

    #[test]
    fn order_bookkeeping() {
        let a = TruncatedSeries::one(5);
        let b = TruncatedSeries::one(3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.d_t().unwrap().order(), 4);
        assert_eq!(t(2).mul_t_power(3).order(), 5);
        assert!(TruncatedSeries::one(0).d_t().is_err());
    }

    #[test]
    fn composition() {
        // 1/(1-t) composed with 2t
        let g = t(5).scale(&rat(2));
        let c = geometric(&BigRational::one(), 5).compose_in_t(&g).unwrap();
        assert_eq!(c, geometric(&rat(2), 5));
        assert!(c.compose_in_t(&TruncatedSeries::one(5)).is_err());
    }
}
