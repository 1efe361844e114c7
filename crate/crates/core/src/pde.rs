//! Three linear partial differential operators annihilating `A(t, z)`.

use crate::error::Result;
use crate::mpoly::parse_poly;
use crate::report::Check;
use crate::series::TruncatedSeries;

/// `(coefficient, a, b)` stands for `coefficient * d_t^a d_z^b`.
pub type Operator = &'static [(&'static str, u32, u32)];

pub const P1: Operator = &[
    ("18", 0, 0),
    ("-18t(tz-t+1)", 1, 0),
    ("-z(4tz^3-22tz^2+36tz-18t-45)", 0, 1),
    ("tz(2tz^3-11tz^2+9t-9)", 1, 1),
    ("-2z^2(tz^3-5tz^2+7tz-3t-6)", 0, 2),
];

pub const P2: Operator = &[
    ("24", 0, 0),
    ("-24t(tz-t+1)", 1, 0),
    ("-4tz^4+20tz^3-37tz^2+30tz-9t+54z+9", 0, 1),
    ("t^2(2tz^3-11tz^2+9t-9)", 2, 0),
    ("-z(2tz^4-9tz^3+15tz^2-11tz+3t-13z-3)", 0, 2),
];

pub const P3: Operator = &[
    ("12t(tz^4+18tz^3+198tz^2-486tz-9z^2-243t+243)", 0, 0),
    (
        "12t^2z^2(10t^2z^4-110t^2z^3+334t^2z^2-378t^2z-tz^2+144t^2-108tz+333t+9)",
        1,
        0,
    ),
    (
        "432t^3z^7-4536t^3z^6+14256t^3z^5-60t^2z^6-18414t^3z^4+672t^2z^5+7128t^3z^3\
         -6102t^2z^4+5508t^3z^2+28080t^2z^3-5832t^3z-22680t^2z^2+432tz^3+1458t^3\
         -11664t^2z-3240tz^2-4374t^2+17496tz+4374t-1458",
        0,
        1,
    ),
    (
        "2z(189t^3z^7-1890t^3z^6+5670t^3z^5-26t^2z^6-6831t^3z^4+273t^2z^5+1809t^3z^3\
         -2889t^2z^4+3240t^3z^2+11124t^2z^3-2916t^3z-4698t^2z^2+270tz^3+729t^3\
         -3645t^2z-1458tz^2-2187t^2+6561tz+2187t-729)",
        0,
        2,
    ),
    (
        "z^2(2tz^3-11tz^2+9t-9)(27t^2z^4-108t^2z^3+162t^2z^2-4tz^3-108t^2z+18tz^2\
         +27t^2-216tz-54t+27)",
        0,
        3,
    ),
];

pub const OPERATORS: [(&str, Operator); 3] = [("p1", P1), ("p2", P2), ("p3", P3)];

/// Applies an operator to a series; the result has the order of the highest
/// `t`-derivative taken.
pub fn apply(op: Operator, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let mut acc: Option<TruncatedSeries> = None;
    for &(coef, a, b) in op {
        let c = parse_poly(coef, &['t', 'z'])?;
        let mut d = f.clone();
        for _ in 0..a {
            d = d.d_t()?;
        }
        for _ in 0..b {
            d = d.d_z();
        }
        let term = TruncatedSeries::from_mpoly(&c, 0, 1, d.order()).mul(&d);
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term),
        });
    }
    Ok(acc.unwrap_or_else(|| TruncatedSeries::zero(f.order())))
}

/// Applies `p1`, `p2`, `p3` to `A` computed to `order` and checks that each
/// result vanishes.
pub fn verify_pde(order: usize) -> Result<Vec<Check>> {
    let a = crate::equation::a_series(order)?;
    OPERATORS
        .iter()
        .map(|&(name, op)| {
            let r = apply(op, &a)?;
            Ok(Check::from_bool(
                format!("{name} annihilates A mod t^{}", r.order() + 1),
                r.is_zero(),
                || format!("first nonzero coefficient at t^{}", r.first_nonzero().unwrap_or(0)),
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zpoly::ZPolynomial;

    #[test]
    fn operators_annihilate_a() {
        for c in verify_pde(12).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let a = crate::equation::a_series(12).unwrap();
        let bumped = a.add(&TruncatedSeries::monomial(ZPolynomial::one(), 3, 12));
        assert!(!apply(P1, &bumped).unwrap().is_zero());
    }
}
