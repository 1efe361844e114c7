//! Closed-form product formulas and the identities relating them.
//!
//! Every division is checked to be exact. Binomials vanish outside
//! `0 <= q <= p`, negative `p` included.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::report::Check;

/// `C(p, q)`, zero when `q < 0`, `p < 0` or `q > p`.
pub fn binomial(p: i64, q: i64) -> BigInt {
    if p < 0 || q < 0 || q > p {
        return BigInt::zero();
    }
    BigInt::from(binomial_u(p as usize, q as usize))
}

pub fn binomial_u(p: usize, q: usize) -> BigUint {
    if q > p {
        return BigUint::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigUint::one();
    for i in 0..q {
        // acc = C(p, i) here, so the division is exact
        acc = acc * BigUint::from(p - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn exact_div(num: BigInt, den: BigInt) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: "0".into(),
        });
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

pub fn exact_div_u(num: BigUint, den: BigUint) -> Result<BigUint> {
    exact_div(num.into(), den.into()).map(|q| q.to_biguint().expect("nonnegative"))
}

fn require_positive(n: i64) -> Result<()> {
    if n <= 0 {
        Err(Error::NonPositive(n))
    } else {
        Ok(())
    }
}

/// Number of intervals of `Tam(n)` with `des(s) + asc(t) = k`:
/// `2 / (n (n + 1)) C(n + 1, k + 2) C(3n, k)`.
pub fn a_formula(n: i64, k: i64) -> Result<BigInt> {
    require_positive(n)?;
    let num = 2 * binomial(n + 1, k + 2) * binomial(3 * n, k);
    exact_div(num, BigInt::from(n * (n + 1)))
}

/// Number of `k`-dimensional faces of the diagonal of the `(n-1)`-dimensional
/// associahedron: `2 / ((3n + 1)(3n + 2)) C(n - 1, k) C(4n + 1 - k, n + 1)`.
pub fn b_formula(n: i64, k: i64) -> Result<BigInt> {
    require_positive(n)?;
    let num = 2 * binomial(n - 1, k) * binomial(4 * n + 1 - k, n + 1);
    exact_div(num, BigInt::from((3 * n + 1) * (3 * n + 2)))
}

/// `sum_l a(n, l) C(l, k)`.
pub fn b_from_a(n: i64, k: i64) -> Result<BigInt> {
    (k.max(0)..n).try_fold(BigInt::zero(), |acc, l| Ok(acc + a_formula(n, l)? * binomial(l, k)))
}

/// Total number of intervals of `Tam(n)`.
pub fn interval_count(n: i64) -> Result<BigInt> {
    b_formula(n, 0)
}

/// Number of synchronized intervals of `Tam(n)`.
pub fn synchronized_count(n: i64) -> Result<BigInt> {
    a_formula(n, n - 1)
}

/// Intervals with `ell(s) = ell`: the product formula
/// `(i - 1)(4n - 2i + 1)! / ((3n - i + 2)! (n - i + 1)!) C(2i, i)` at
/// `i = ell + 2`. Zero outside `0 <= ell < n`.
pub fn refined_ell_formula(n: i64, ell: i64) -> Result<BigInt> {
    require_positive(n)?;
    if ell < 0 || ell >= n {
        return Ok(BigInt::zero());
    }
    let i = ell + 2;
    let num = BigInt::from(i - 1) * BigInt::from(factorial((4 * n - 2 * i + 1) as usize)) * binomial(2 * i, i);
    let den = factorial((3 * n - i + 2) as usize) * factorial((n - i + 1) as usize);
    exact_div(num, den.into())
}

/// Synchronized intervals with `des(s) = p`: the product formula
/// `(n + q - 1)! (2n - q)! / (q! (n + 1 - q)! (2q - 1)! (2n - 2q + 1)!)` at
/// `q = p + 1`. Zero outside `0 <= p < n`.
pub fn separated_formula(n: i64, p: i64) -> Result<BigInt> {
    require_positive(n)?;
    if p < 0 || p >= n {
        return Ok(BigInt::zero());
    }
    let q = p + 1;
    let f = |x: i64| factorial(x as usize);
    let num = f(n + q - 1) * f(2 * n - q);
    let den = f(q) * f(n + 1 - q) * f(2 * q - 1) * f(2 * n - 2 * q + 1);
    exact_div(num.into(), den.into())
}

/// Both sides of `sum_{l=k}^{n-1} C(n+1, l+2) C(r, l) C(l, k)
/// = n(n+1) / ((r+1)(r+2)) C(n-1, k) C(r+n+1-k, n+1)`.
pub fn chu_vandermonde_sides(n: i64, k: i64, r: i64) -> Result<(BigInt, BigInt)> {
    let lhs: BigInt = (k.max(0)..n)
        .map(|l| binomial(n + 1, l + 2) * binomial(r, l) * binomial(l, k))
        .sum();
    let num = BigInt::from(n * (n + 1)) * binomial(n - 1, k) * binomial(r + n + 1 - k, n + 1);
    let rhs = exact_div(num, BigInt::from((r + 1) * (r + 2)))?;
    Ok((lhs, rhs))
}

pub fn chu_vandermonde_check(n: i64, k: i64, r: i64) -> Result<bool> {
    let (l, r) = chu_vandermonde_sides(n, k, r)?;
    Ok(l == r)
}

/// The specializations of `a` and the equal forms of the synchronized count.
pub fn specialization_suite(n: i64) -> Result<Vec<Check>> {
    require_positive(n)?;
    let a = |k| a_formula(n, k);
    let mut checks = vec![
        Check::equal(format!("n={n}: a(n,0) = 1"), &a(0)?, &BigInt::one()),
        Check::equal(format!("n={n}: a(n,1) = n(n-1)"), &a(1)?, &BigInt::from(n * (n - 1))),
        Check::equal(
            format!("n={n}: a(n,n-3) = C(3n,n-3)"),
            &a(n - 3)?,
            &binomial(3 * n, n - 3),
        ),
    ];
    let two_over_n = exact_div(2 * binomial(3 * n, n - 2), BigInt::from(n));
    checks.push(match two_over_n {
        Ok(v) => Check::equal(format!("n={n}: a(n,n-2) = 2/n C(3n,n-2)"), &a(n - 2)?, &v),
        Err(e) => Check::fail(format!("n={n}: a(n,n-2) = 2/n C(3n,n-2)"), e.to_string()),
    });
    let sync = [
        a(n - 1)?,
        exact_div(2 * binomial(3 * n, n), BigInt::from((n + 1) * (2 * n + 1)))?,
        exact_div(2 * binomial(3 * n + 2, n + 1), BigInt::from((3 * n + 1) * (3 * n + 2)))?,
        b_formula(n, n - 1)?,
    ];
    checks.push(Check::from_bool(
        format!("n={n}: synchronized count forms agree"),
        sync.iter().all(|v| *v == sync[0]),
        || format!("{sync:?}"),
    ));
    let total: BigInt = (0..n).map(a).sum::<Result<BigInt>>()?;
    checks.push(Check::equal(
        format!("n={n}: sum_l a(n,l) = b(n,0)"),
        &total,
        &b_formula(n, 0)?,
    ));
    Ok(checks)
}

/// The two-term relations satisfied by `x(n, k) = a(n, k)`:
/// `k(k+2) x(n,k) = (3n+1-k)(n-k) x(n,k-1)` and
/// `(3n-k-2)(3n-k-1)(3n-k)(n-k-1) x(n,k) = 3n(n-1)(3n-1)(3n-2) x(n-1,k)`.
/// Checked for `1 <= k <= n - 1 < max_n`.
pub fn two_term_recurrence_check(max_n: i64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            let lhs = BigInt::from(k * (k + 2)) * a_formula(n, k)?;
            let rhs = BigInt::from((3 * n + 1 - k) * (n - k)) * a_formula(n, k - 1)?;
            if lhs != rhs {
                checks.push(Check::fail("relation in k", format!("n={n} k={k}: {lhs} != {rhs}")));
            }
            let lhs = BigInt::from((3 * n - k - 2) * (3 * n - k - 1) * (3 * n - k) * (n - k - 1)) * a_formula(n, k)?;
            let rhs = BigInt::from(3 * n * (n - 1) * (3 * n - 1) * (3 * n - 2)) * a_formula(n - 1, k)?;
            if lhs != rhs {
                checks.push(Check::fail("relation in n", format!("n={n} k={k}: {lhs} != {rhs}")));
            }
        }
    }
    if checks.is_empty() {
        checks.push(Check::pass(format!("two-term relations for n <= {max_n}")));
    }
    Ok(checks)
}

/// Alternating sum `sum_k (-1)^k b(n, k)`, which is 1.
pub fn euler_characteristic(fvector: &[BigInt]) -> BigInt {
    fvector
        .iter()
        .enumerate()
        .map(|(k, f)| if k % 2 == 0 { f.clone() } else { -f })
        .sum()
}

/// `|x|` for a signed value known to be a count.
pub fn to_count(x: &BigInt) -> BigUint {
    x.abs().to_biguint().expect("absolute value")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64, k: i64) -> i64 {
        a_formula(n, k).unwrap().try_into().unwrap()
    }

    fn b(n: i64, k: i64) -> i64 {
        b_formula(n, k).unwrap().try_into().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(a(3, 1), 6);
        assert_eq!(a(9, 8), 49335);
        assert_eq!(a(5, 7), 0);
        assert_eq!(a(5, -1), 0);
        assert_eq!(b(4, 2), 99);
        assert_eq!(b(9, 0), 857956);
        assert_eq!(b(5, 4), 91);
        assert!(a_formula(0, 0).is_err());
        assert!(b_formula(-3, 0).is_err());
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial_u(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn refined_examples() {
        assert_eq!(refined_ell_formula(5, 3).unwrap(), BigInt::from(84));
        assert_eq!(refined_ell_formula(5, 0).unwrap(), BigInt::from(68));
        assert_eq!(separated_formula(7, 3).unwrap(), BigInt::from(900));
        assert_eq!(separated_formula(9, 0).unwrap(), BigInt::one());
        assert_eq!(separated_formula(9, 4).unwrap(), BigInt::from(20449));
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert!(matches!(
            exact_div(BigInt::from(7), BigInt::from(2)),
            Err(Error::InexactDivision { .. })
        ));
        assert!(exact_div(BigInt::from(7), BigInt::zero()).is_err());
    }

    #[test]
    fn two_term_spot_values() {
        assert_eq!(8 * 9 * 10 * a(4, 2), 23760);
        assert_eq!(3 * 4 * 3 * 11 * 10 * a(3, 2), 23760);
        assert_eq!(3 * a(2, 1), 6 * a(2, 0));
        assert!(two_term_recurrence_check(20).unwrap().iter().all(|c| c.passed));
    }
}
