//! Series defined by `S = t phi(S)` and their coefficients by Lagrange
//! inversion.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::zpoly::{rat, ZPolynomial};

/// `phi` is given by its coefficients in `s`: `phi = sum_i phi[i] s^i`.
fn check_phi(phi: &[ZPolynomial]) -> Result<()> {
    if phi.first().is_none_or(ZPolynomial::is_zero) {
        return Err(Error::NonUnit);
    }
    Ok(())
}

fn phi_series(phi: &[ZPolynomial], order: usize) -> Vec<TruncatedSeries> {
    phi.iter()
        .map(|c| TruncatedSeries::constant(c.clone(), order))
        .collect()
}

/// The solution of `S = t phi(S)` modulo `t^(order+1)`, by fixed-point
/// iteration; each round fixes one more coefficient.
///
/// `phi(0)` must be nonzero but need not be a unit of `Q[z]`; no division
/// takes place.
pub fn lagrange_solve(phi: &[ZPolynomial], order: usize) -> Result<TruncatedSeries> {
    check_phi(phi)?;
    let coeffs = phi_series(phi, order);
    let t = TruncatedSeries::var(order);
    let mut s = TruncatedSeries::zero(order);
    for _ in 0..order {
        s = t.mul(&TruncatedSeries::horner(&coeffs, &s));
    }
    Ok(s)
}

/// `[t^n z^k] S^r = (r/n) [s^(n-r) z^k] phi(s)^n` for `n >= 1`.
pub fn lagrange_coeff(phi: &[ZPolynomial], n: usize, k: usize, r: usize) -> Result<BigRational> {
    check_phi(phi)?;
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    if r > n {
        return Ok(BigRational::zero());
    }
    let deg = n - r;
    let p = TruncatedSeries::from_coeffs(phi.to_vec(), deg).pow(n as u32);
    Ok(p.coeff(deg).coeff(k) * rat(r as u64) / rat(n as u64))
}

/// `phi = (s + 1)(s z + 1)^3`, whose solution parametrizes `A`.
pub fn parametrization_phi() -> Vec<ZPolynomial> {
    // (1 + s)(1 + 3zs + 3z^2 s^2 + z^3 s^3)
    let z = |c: &[i64]| ZPolynomial::from_ints(c.iter().copied());
    vec![z(&[1]), z(&[1, 3]), z(&[0, 3, 3]), z(&[0, 0, 3, 1]), z(&[0, 0, 0, 1])]
}

/// `A = S - z S^2 - z S^3` from the solution for [`parametrization_phi`].
pub fn a_from_parametrization(order: usize) -> Result<TruncatedSeries> {
    let s = lagrange_solve(&parametrization_phi(), order)?;
    let z = ZPolynomial::from_ints([0, 1]);
    let s2 = s.mul(&s);
    Ok(s.sub(&s2.mul_z(&z)).sub(&s2.mul(&s).mul_z(&z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::binomial;

    #[test]
    fn parametrization_series() {
        let s = lagrange_solve(&parametrization_phi(), 6).unwrap();
        assert_eq!(s.coeff(1), &ZPolynomial::one());
        assert_eq!(s.coeff(2), &ZPolynomial::from_ints([1, 3]));
        assert_eq!(s.coeff(3), &ZPolynomial::from_ints([1, 9, 12]));
    }

    #[test]
    fn quartic_phi_without_z() {
        // (1 + s)^4
        let phi: Vec<_> = [1, 4, 6, 4, 1].map(|c| ZPolynomial::from_ints([c])).to_vec();
        let s = lagrange_solve(&phi, 8).unwrap();
        for r in 1..=3 {
            let sr = s.pow(r as u32);
            for n in 1..=8usize {
                let expected = BigRational::from_integer(binomial(4 * n as i64, n as i64 - r as i64)) * rat(r as u64)
                    / rat(n as u64);
                assert_eq!(lagrange_coeff(&phi, n, 0, r).unwrap(), expected);
                assert_eq!(sr.coeff(n).coeff(0), expected, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn matches_newton_root() {
        let a = a_from_parametrization(9).unwrap();
        assert_eq!(a, crate::equation::a_series(9).unwrap());
    }

    #[test]
    fn rejects_zero_phi0() {
        let phi = vec![ZPolynomial::zero(), ZPolynomial::one()];
        assert_eq!(lagrange_solve(&phi, 3), Err(Error::NonUnit));
        assert_eq!(lagrange_coeff(&[], 3, 0, 1), Err(Error::NonUnit));
    }
}
