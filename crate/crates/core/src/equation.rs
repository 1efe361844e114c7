//! Polynomial equations `P(t, z, X) = 0` and their series roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::formulas::binomial_u;
use crate::mpoly::MPoly;
use crate::series::TruncatedSeries;
use crate::zpoly::ZPolynomial;

/// Text of the quartic annihilating `A(t, z)`.
pub const QUARTIC_TABLE: &str = include_str!("../data/quartic.txt");
/// SHA-256 of [`QUARTIC_TABLE`].
pub const QUARTIC_SHA256: &str = "429c73a720fe412ef89b6299943b9988301a43d1bcd1d8f4eada5bd079e1cabb";

/// A polynomial in `t`, `z`, `X` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialEquation {
    /// `(deg_t, deg_z, deg_X) -> coefficient`, no zero entries.
    terms: std::collections::BTreeMap<(u32, u32, u32), BigInt>,
}

/// Largest degree accepted in an exponent table.
pub const MAX_TABLE_DEGREE: u32 = 256;

impl PolynomialEquation {
    /// Parses an exponent table: one `deg_t deg_z deg_X coefficient` per
    /// line, `#` starts a comment, blank lines are ignored. Repeated
    /// monomials add up.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut terms = std::collections::BTreeMap::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = body.split_whitespace().collect();
            if !fields.is_empty() {
                if fields.len() != 4 {
                    return Err(Error::parse(offset, "expected four fields"));
                }
                let mut degs = [0u32; 3];
                for (d, f) in degs.iter_mut().zip(&fields) {
                    *d = f
                        .parse()
                        .ok()
                        .filter(|&d| d <= MAX_TABLE_DEGREE)
                        .ok_or_else(|| Error::parse(offset, format!("bad degree {f:?}")))?;
                }
                let c: BigInt = fields[3]
                    .parse()
                    .map_err(|_| Error::parse(offset, format!("bad coefficient {:?}", fields[3])))?;
                let slot = terms.entry((degs[0], degs[1], degs[2])).or_insert_with(BigInt::zero);
                *slot += c;
            }
            offset += line.len();
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(PolynomialEquation { terms })
    }

    /// The quartic `P(t, z, X)` from the bundled table, after checking its
    /// checksum.
    pub fn quartic() -> Result<Self> {
        let actual = hex(&Sha256::digest(QUARTIC_TABLE.as_bytes()));
        if actual != QUARTIC_SHA256 {
            return Err(Error::Checksum {
                expected: QUARTIC_SHA256.into(),
                actual,
            });
        }
        Self::parse_table(QUARTIC_TABLE)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    /// As a polynomial in the variables `(t, z, X)`.
    pub fn to_mpoly(&self) -> MPoly {
        let mut p = MPoly::zero(3);
        for (&(a, b, c), k) in &self.terms {
            p.add_term(vec![a, b, c], BigRational::from_integer(k.clone()));
        }
        p
    }

    /// `P(t, z + c, X)`.
    pub fn z_shift(&self, c: i64) -> Self {
        let mut terms = std::collections::BTreeMap::new();
        let c = BigInt::from(c);
        for (&(a, b, x), k) in &self.terms {
            // k z^b -> k sum_j C(b, j) c^(b - j) z^j
            for j in 0..=b {
                let v = k * BigInt::from(binomial_u(b as usize, j as usize)) * c.pow(b - j);
                *terms.entry((a, j, x)).or_insert_with(BigInt::zero) += v;
            }
        }
        terms.retain(|_, v: &mut BigInt| !v.is_zero());
        PolynomialEquation { terms }
    }

    /// `dP / dX`.
    pub fn d_x(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&(_, _, x), _)| x > 0)
            .map(|(&(a, b, x), k)| ((a, b, x - 1), k * BigInt::from(x)))
            .collect();
        PolynomialEquation { terms }
    }

    /// Coefficient series of `X^i`, `i = 0..=deg_X`.
    fn x_coefficients(&self, order: usize) -> Vec<TruncatedSeries> {
        let deg = self.terms.keys().map(|k| k.2).max().unwrap_or(0) as usize;
        let mut cols = vec![vec![ZPolynomial::zero(); order + 1]; deg + 1];
        for (&(a, b, x), k) in &self.terms {
            if a as usize <= order {
                let col = &mut cols[x as usize][a as usize];
                *col = &*col + &ZPolynomial::monomial(BigRational::from_integer(k.clone()), b as usize);
            }
        }
        cols.into_iter()
            .map(|c| TruncatedSeries::from_coeffs(c, order))
            .collect()
    }

    /// `P(t, z, x)` for a series `x`.
    pub fn eval(&self, x: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::horner(&self.x_coefficients(x.order()), x)
    }

    /// `P(t(s), z, X(s))` for series `t(s)` and `X(s)` in a new variable `s`.
    pub fn eval_parametrized(&self, t: &TruncatedSeries, x: &TruncatedSeries) -> TruncatedSeries {
        let order = t.order().min(x.order());
        let deg_t = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let deg_x = self.terms.keys().map(|k| k.2).max().unwrap_or(0);
        let tp: Vec<_> = powers(t, deg_t, order);
        let xp: Vec<_> = powers(x, deg_x, order);
        let mut acc = TruncatedSeries::zero(order);
        for (&(a, b, c), k) in &self.terms {
            let mono = ZPolynomial::monomial(BigRational::from_integer(k.clone()), b as usize);
            acc = acc.add(&tp[a as usize].mul(&xp[c as usize]).mul_z(&mono));
        }
        acc
    }

    /// The unique root `X` with `X(0, z) = 0`, modulo `t^(order+1)`, by
    /// Newton iteration with doubling precision. The result is checked by
    /// substitution before it is returned.
    pub fn newton_solve(&self, order: usize) -> Result<TruncatedSeries> {
        let at_origin = |eq: &Self, x_deg: u32| -> ZPolynomial {
            eq.terms
                .iter()
                .filter(|(&(a, _, x), _)| a == 0 && x == x_deg)
                .fold(ZPolynomial::zero(), |acc, (&(_, b, _), k)| {
                    &acc + &ZPolynomial::monomial(BigRational::from_integer(k.clone()), b as usize)
                })
        };
        if !at_origin(self, 0).is_zero() {
            return Err(Error::InvalidArgument("P(0, z, 0) is not zero".into()));
        }
        let slope = at_origin(self, 1);
        if slope.as_constant().is_none_or(|c| c.is_zero()) {
            return Err(Error::SingularJacobian);
        }
        let dp = self.d_x();
        let mut x = TruncatedSeries::zero(order);
        let mut prec = 1;
        loop {
            let p = prec.min(order);
            let xt = x.truncate(p);
            let step = self.eval(&xt).div_by_unit(&dp.eval(&xt))?;
            x = TruncatedSeries::from_coeffs(xt.sub(&step).coeffs().to_vec(), order);
            if p == order {
                break;
            }
            prec = 2 * prec + 1;
        }
        // one more step settles the last doubling; the residual must vanish
        for _ in 0..2 {
            if self.eval(&x).is_zero() {
                return Ok(x);
            }
            x = x.sub(&self.eval(&x).div_by_unit(&dp.eval(&x))?);
        }
        if self.eval(&x).is_zero() {
            Ok(x)
        } else {
            Err(Error::InvalidArgument("Newton iteration did not converge".into()))
        }
    }
}

fn powers(s: &TruncatedSeries, max: u32, order: usize) -> Vec<TruncatedSeries> {
    let s = s.truncate(order);
    let mut out = vec![TruncatedSeries::one(order)];
    for _ in 0..max {
        out.push(out.last().unwrap().mul(&s));
    }
    out
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// The series `t = s / ((s + 1)(s z + 1)^3)` and `X = s - z s^2 - z s^3`.
pub fn parametrization(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let s = TruncatedSeries::var(order);
    let one = TruncatedSeries::one(order);
    let z = ZPolynomial::from_ints([0, 1]);
    let sz1 = one.add(&s.mul_z(&z));
    let den = one.add(&s).mul(&sz1.pow(3));
    let t = s.div_by_unit(&den)?;
    let s2 = s.mul(&s);
    let x = s.sub(&s2.mul_z(&z)).sub(&s2.mul(&s).mul_z(&z));
    Ok((t, x))
}

/// Whether the parametrization annihilates `P` modulo `s^(order+1)`.
pub fn verify_parametrization(eq: &PolynomialEquation, order: usize) -> Result<bool> {
    let (t, x) = parametrization(order)?;
    Ok(eq.eval_parametrized(&t, &x).is_zero())
}

/// `A(t, z)` modulo `t^(order+1)` from the quartic.
pub fn a_series(order: usize) -> Result<TruncatedSeries> {
    PolynomialEquation::quartic()?.newton_solve(order)
}

/// `B(t, z) = A(t, z + 1)` as the root of `P(t, z + 1, X)`.
pub fn b_series(order: usize) -> Result<TruncatedSeries> {
    PolynomialEquation::quartic()?.z_shift(1).newton_solve(order)
}

/// Specializes `z` to a constant in the equation.
pub fn specialize_z(eq: &PolynomialEquation, z: i64) -> PolynomialEquation {
    let shifted = eq.z_shift(z);
    let terms = shifted.terms.into_iter().filter(|((_, b, _), _)| *b == 0).collect();
    PolynomialEquation { terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_poly;

    const TZX: [char; 3] = ['t', 'z', 'X'];

    fn printed(src: &str) -> MPoly {
        parse_poly(src, &TZX).unwrap()
    }

    #[test]
    fn checksum_and_parse() {
        let p = PolynomialEquation::quartic().unwrap();
        assert_eq!(p.terms().count(), 34);
        assert!(PolynomialEquation::parse_table("1 2 3").is_err());
        assert!(PolynomialEquation::parse_table("1 2 3 x").is_err());
        assert!(PolynomialEquation::parse_table("-1 2 3 4").is_err());
        let q = PolynomialEquation::parse_table("# c\n1 0 0 2\n1 0 0 -2\n\n0 0 1 1 # X\n").unwrap();
        assert_eq!(q.terms().count(), 1);
    }

    #[test]
    fn printed_specializations() {
        let p = PolynomialEquation::quartic().unwrap();
        let z0 = specialize_z(&p, 0).to_mpoly();
        assert_eq!(z0, printed("-(t-1)^3X - t(t-1)^2"));
        let z1 = specialize_z(&p, 1).to_mpoly();
        assert_eq!(
            z1,
            printed("t^3X^4 + t^2(4t+3)X^3 + t(6t^2+17t+3)X^2 + (4t^3+25t^2-14t+1)X + t^3+11t^2-t")
        );
    }

    #[test]
    fn shifted_form_matches_printed() {
        let b = PolynomialEquation::quartic().unwrap().z_shift(1).to_mpoly();
        let expected = printed(
            "t^3(z+1)^6X^4 \
             + t^2(z+1)^4(tz^2+8tz+4t+3)X^3 \
             + t(z+1)^2(6t^2z^3+27t^2z^2+24t^2z+2tz^2+6t^2-2tz+17t+3)X^2 \
             + (12t^3z^4+44t^3z^3+51t^3z^2-10t^2z^3+24t^3z-4t^2z^2+4t^3+28t^2z+tz^2+25t^2-10tz-14t+1)X \
             + t(8t^2z^3+12t^2z^2+6t^2z-tz^2+t^2+8tz+11t-1)",
        );
        assert_eq!(b, expected);
    }

    #[test]
    fn newton_small() {
        let a = a_series(5).unwrap();
        assert_eq!(a.coeff(4), &ZPolynomial::from_ints([1, 12, 33, 22]));
        assert_eq!(a.coeff(0), &ZPolynomial::zero());
        let p = PolynomialEquation::parse_table("0 0 1 0\n1 0 0 1").unwrap();
        assert_eq!(p.newton_solve(3), Err(Error::SingularJacobian));
    }

    #[test]
    fn specializations_of_the_root() {
        let a = a_series(7).unwrap();
        let at1 = a.eval_z(&crate::zpoly::rat(1));
        let ones: Vec<_> = (1..=6).map(|n| at1.coeff(n).coeff(0)).collect();
        let expected: Vec<_> = [1, 3, 13, 68, 399, 2530].map(crate::zpoly::rat).to_vec();
        assert_eq!(ones, expected);
        let at0 = a.eval_z(&crate::zpoly::rat(0));
        for n in 1..=7 {
            assert_eq!(at0.coeff(n).coeff(0), crate::zpoly::rat(1));
        }
    }

    #[test]
    fn parametrization_vanishes() {
        let p = PolynomialEquation::quartic().unwrap();
        assert!(verify_parametrization(&p, 8).unwrap());
    }
}
