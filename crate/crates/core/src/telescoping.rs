//! The order-two recurrence in `n` satisfied by `a_n(z) = sum_k a(n, k) z^k`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::formulas::{a_formula, b_formula};
use crate::mpoly::{parse_poly, MPoly};
use crate::report::Check;
use crate::zpoly::{rat, ZPolynomial};

const NZ: [char; 2] = ['n', 'z'];

pub const ETA2: &str = "3(3n+7)(n+3)(3n+8)(n^2z^2-6n^2z+2nz^2-27n^2-12nz-54n-30)";

pub const ETA1: &str = "-(2n+3)(2n^4z^5-21n^4z^4+12n^3z^5+108n^4z^3-126n^3z^4+22n^2z^5\
-378n^4z^2+648n^3z^3-231n^2z^4+12nz^5-3078n^4z-2268n^3z^2+1188n^2z^3-126nz^4\
-729n^4-18468n^3z-4188n^2z^2+648nz^3-4374n^3-39078n^2z-2358nz^2-10449n^2\
-34128nz-11664n-10080z-5040)";

pub const ETA0: &str = "3n(z-1)^4(3n+2)(3n+1)(n^2z^2-6n^2z+4nz^2-27n^2-24nz+3z^2-108n-18z-111)";

/// Leading coefficient of the recurrence for `b_n(z)`.
pub const ETA2_B: &str = "3(3n+7)(n+3)(3n+8)(n^2z^2-4n^2z+2nz^2-32n^2-8nz-64n-30)";

/// `[eta_0, eta_1, eta_2]` as polynomials in `(n, z)`.
pub fn etas() -> Result<[MPoly; 3]> {
    Ok([parse_poly(ETA0, &NZ)?, parse_poly(ETA1, &NZ)?, parse_poly(ETA2, &NZ)?])
}

/// `z -> z + 1`.
pub fn shift_z(p: &MPoly) -> Result<MPoly> {
    Ok(p.substitute(1, &parse_poly("z+1", &NZ)?))
}

/// `p(n, z)` at a fixed `n`, as a polynomial in `z`.
fn at_n(p: &MPoly, n: i64) -> ZPolynomial {
    let fixed = p.substitute(0, &MPoly::constant(2, rat(n)));
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (e, c) in fixed.terms() {
        let k = e[1] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, rat(0));
        }
        coeffs[k] += c;
    }
    ZPolynomial::new(coeffs)
}

fn row(f: fn(i64, i64) -> Result<BigInt>, n: i64) -> Result<ZPolynomial> {
    let c: Vec<BigInt> = (0..n).map(|k| f(n, k)).collect::<Result<_>>()?;
    Ok(ZPolynomial::from_ints(c))
}

/// `sum_i eta_i(n) x_{n+i}(z)` together with the largest degree among its
/// three summands.
pub fn residual(etas: &[MPoly; 3], f: fn(i64, i64) -> Result<BigInt>, n: i64) -> Result<(ZPolynomial, usize)> {
    let mut acc = ZPolynomial::zero();
    let mut deg = 0;
    for (i, eta) in etas.iter().enumerate() {
        let term = &at_n(eta, n) * &row(f, n + i as i64)?;
        deg = deg.max(term.degree().unwrap_or(0));
        acc = &acc + &term;
    }
    Ok((acc, deg))
}

/// Checks the recurrence for `a_n(z)` and, with `z -> z + 1` applied to the
/// coefficients, for `b_n(z)`, over `n = 1..=max_n`.
pub fn telescoped_recurrence_check(max_n: i64) -> Result<Vec<Check>> {
    let a_side = etas()?;
    let b_side = [shift_z(&a_side[0])?, shift_z(&a_side[1])?, shift_z(&a_side[2])?];
    let mut checks = vec![Check::equal(
        "shifted leading coefficient equals the printed one",
        &b_side[2],
        &parse_poly(ETA2_B, &NZ)?,
    )];
    for (side, e, f) in [
        ("a", &a_side, a_formula as fn(i64, i64) -> _),
        ("b", &b_side, b_formula),
    ] {
        for n in 1..=max_n {
            let (r, deg) = residual(e, f, n)?;
            checks.push(Check::from_bool(
                format!("{side}-side residual n={n}"),
                r.is_zero(),
                || format!("residual {r}"),
            ));
            checks.push(Check::from_bool(
                format!("{side}-side degree bound n={n}"),
                deg as i64 <= n + 6,
                || format!("degree {deg}"),
            ));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_vanishes() {
        let checks = telescoped_recurrence_check(12).unwrap();
        assert_eq!(checks.len(), 1 + 2 * 2 * 12);
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn perturbed_recurrence_fails() {
        let mut e = etas().unwrap();
        e[0] = e[0].add(&MPoly::one(2));
        let (r, _) = residual(&e, a_formula, 3).unwrap();
        assert!(!r.is_zero());
    }
}
