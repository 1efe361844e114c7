//! Dense univariate polynomials in `z` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::formulas::binomial_u;

/// `coeffs[i]` is the coefficient of `z^i`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPolynomial {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl ZPolynomial {
    pub fn zero() -> Self {
        ZPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c z^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPolynomial { coeffs }
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(coeffs.into_iter().map(|c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Integer coefficients, if all are integers.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    /// `p(z + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (z + c)^i
            let mut cpow = BigRational::one();
            for j in (0..=i).rev() {
                out[j] += a * &cpow * rat(binomial_u(i, j));
                cpow *= c;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as u64))
                .collect(),
        )
    }

    /// Multiplies by `z^k`.
    pub fn mul_z_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }
}

impl Add for &ZPolynomial {
    type Output = ZPolynomial;
    fn add(self, rhs: &ZPolynomial) -> ZPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ZPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPolynomial {
    type Output = ZPolynomial;
    fn sub(self, rhs: &ZPolynomial) -> ZPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ZPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ZPolynomial {
    type Output = ZPolynomial;
    fn mul(self, rhs: &ZPolynomial) -> ZPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ZPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPolynomial::new(out)
    }
}

impl Neg for &ZPolynomial {
    type Output = ZPolynomial;
    fn neg(self) -> ZPolynomial {
        ZPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ZPolynomial {
            type Output = ZPolynomial;
            fn $m(self, rhs: ZPolynomial) -> ZPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = ZPolynomial::from_ints([1, 1]); // 1 + z
        let q = &p * &p;
        assert_eq!(q, ZPolynomial::from_ints([1, 2, 1]));
        assert_eq!(&q - &q, ZPolynomial::zero());
        assert_eq!(q.degree(), Some(2));
        assert_eq!(q.eval(&rat(2)), rat(9));
        assert_eq!(q.derivative(), ZPolynomial::from_ints([2, 2]));
        assert_eq!(ZPolynomial::from_ints([0, 0, 0]).degree(), None);
    }

    #[test]
    fn shift_matches_table_two() {
        // a_3(z) = 1 + 6z + 6z^2; a_3(z + 1) = 13 + 18z + 6z^2
        let a3 = ZPolynomial::from_ints([1, 6, 6]);
        assert_eq!(a3.shift(&rat(1)), ZPolynomial::from_ints([13, 18, 6]));
        assert_eq!(a3.shift(&rat(1)).shift(&rat(-1)), a3);
    }

    #[test]
    fn display() {
        assert_eq!(ZPolynomial::from_ints([1, -1, 3]).to_string(), "1 - z + 3*z^2");
        assert_eq!(ZPolynomial::zero().to_string(), "0");
    }
}
