//! The trivariate generating function of intervals by canopy agreements and
//! the algebraic system that determines it.
//!
//! `F = sum f(i, j, k) u^i v^j w^k` where `i` counts positions where both
//! canopies are `-`, `j` those where both are `+` and `k` those where the
//! lower canopy is `-` and the upper is `+`. An interval of size `n` has
//! total degree `n - 1`.

use num_rational::BigRational;

use crate::error::Result;
use crate::formulas::binomial;
use crate::lagrange::{lagrange_coeff, lagrange_solve};
use crate::lattice::TamariLattice;
use crate::mpoly::{parse_poly, MPoly};
use crate::poset::Budget;
use crate::report::Check;
use crate::series::TruncatedSeries;
use crate::zpoly::{rat, ZPolynomial};

const UVW: [char; 3] = ['u', 'v', 'w'];

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

fn mul_upto(a: &MPoly, b: &MPoly, deg: u32) -> MPoly {
    a.mul_truncated(b, &|e| total_degree(e) <= deg)
}

/// `F` from enumerated canopy triples, sizes `1..=degree+1`.
pub fn enumerated_f(degree: usize, budget: Budget) -> Result<MPoly> {
    let mut f = MPoly::zero(3);
    for n in 1..=degree + 1 {
        let table = TamariLattice::new(n, budget)?.canopy_triples(budget, 1)?;
        for (key, count) in table.cells() {
            let e = key.iter().map(|&x| x as u32).collect();
            f.add_term(e, BigRational::from_integer(count.clone().into()));
        }
    }
    Ok(f)
}

/// `(U, V)` up to total degree `degree`.
pub fn solve_uv(degree: u32) -> Result<(MPoly, MPoly)> {
    let p = |s: &str| parse_poly(s, &UVW);
    let one = MPoly::one(3);
    let (u, v, w) = (p("u")?, p("v")?, p("w")?);
    let (mut uu, mut vv) = (MPoly::zero(3), MPoly::zero(3));
    for _ in 0..=degree {
        let op = one.add(&uu);
        let oq = one.add(&vv);
        let nu = mul_upto(
            &mul_upto(&v.add(&mul_upto(&w, &uu, degree)), &op, degree),
            &mul_upto(&oq, &oq, degree),
            degree,
        );
        let nv = mul_upto(
            &mul_upto(&u.add(&mul_upto(&w, &vv, degree)), &oq, degree),
            &mul_upto(&op, &op, degree),
            degree,
        );
        uu = nu;
        vv = nv;
    }
    Ok((uu, vv))
}

/// `1 / (1 + x)` for `x` without constant term, modulo total degree `deg`.
fn inverse_one_plus(x: &MPoly, deg: u32) -> MPoly {
    let mut acc = MPoly::one(3);
    let mut pow = MPoly::one(3);
    let minus_x = x.neg();
    for _ in 0..deg {
        pow = mul_upto(&pow, &minus_x, deg);
        acc = acc.add(&pow);
    }
    acc
}

/// `uU + vV + wUV - UV / ((1+U)(1+V))` modulo total degree `deg`.
pub fn uv_f_from_system(uu: &MPoly, vv: &MPoly, deg: u32) -> Result<MPoly> {
    let p = |s: &str| parse_poly(s, &UVW);
    let uv = mul_upto(uu, vv, deg);
    let den = mul_upto(&inverse_one_plus(uu, deg), &inverse_one_plus(vv, deg), deg);
    Ok(mul_upto(&p("u")?, uu, deg)
        .add(&mul_upto(&p("v")?, vv, deg))
        .add(&mul_upto(&p("w")?, &uv, deg))
        .sub(&mul_upto(&uv, &den, deg)))
}

/// `t F(tz, tz, t)` as a series of the given order.
pub fn specialize_f(f: &MPoly, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![ZPolynomial::zero(); order + 1];
    for (e, c) in f.terms() {
        let n = total_degree(e) as usize + 1;
        if n <= order {
            let k = (e[0] + e[1]) as usize;
            coeffs[n] = &coeffs[n] + &ZPolynomial::monomial(c.clone(), k);
        }
    }
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// `phi = (z + s)(1 + s)^3`.
pub fn s_phi() -> Vec<ZPolynomial> {
    let c = |v: &[i64]| ZPolynomial::from_ints(v.iter().copied());
    vec![c(&[0, 1]), c(&[1, 3]), c(&[3, 3]), c(&[3, 1]), c(&[1])]
}

/// `[t^n z^k] S^r = (r/n) C(n, k) C(3n, k - r)`.
pub fn s_power_coeff(n: i64, k: i64, r: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k) * binomial(3 * n, k - r)) * rat(r) / rat(n)
}

/// The system to total degree `degree`, the identity for `uvF`, the
/// specialization to `A` and the one-variable system for `S`.
pub fn fusy_humbert_check(degree: usize, budget: Budget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let f = enumerated_f(degree, budget)?;
    let deg = degree as u32 + 2;
    let (uu, vv) = solve_uv(deg)?;

    // U and V are fixed points to the working degree
    let p = |s: &str| parse_poly(s, &UVW);
    let one = MPoly::one(3);
    let rhs_u = mul_upto(
        &mul_upto(&p("v")?.add(&mul_upto(&p("w")?, &uu, deg)), &one.add(&uu), deg),
        &mul_upto(&one.add(&vv), &one.add(&vv), deg),
        deg,
    );
    checks.push(Check::equal("U solves its equation", &uu, &rhs_u));
    let vv_swapped = swap_uv(&vv);
    checks.push(Check::equal("V is U with u and v exchanged", &uu, &vv_swapped));

    let lhs = mul_upto(&p("uv")?, &f, deg);
    let rhs = uv_f_from_system(&uu, &vv, deg)?;
    checks.push(Check::from_bool(
        format!("uvF identity to total degree {deg}"),
        lhs == rhs,
        || format!("difference {}", rhs.sub(&lhs).display(&UVW)),
    ));

    let order = degree + 1;
    let a = crate::equation::a_series(order)?;
    checks.push(Check::equal(
        format!("A = tF(tz,tz,t) mod t^{}", order + 1),
        &specialize_f(&f, order),
        &a,
    ));

    let sorder = order.max(8);
    let s = lagrange_solve(&s_phi(), sorder)?;
    let z = ZPolynomial::from_ints([0, 1]);
    let one_s = TruncatedSeries::one(sorder);
    let rhs_s = TruncatedSeries::var(sorder)
        .mul(&TruncatedSeries::constant(z.clone(), sorder).add(&s))
        .mul(&one_s.add(&s).pow(3));
    checks.push(Check::equal("S = t(z+S)(1+S)^3", &s, &rhs_s));

    let a = crate::equation::a_series(sorder)?;
    let t = TruncatedSeries::var(sorder);
    let z2 = ZPolynomial::from_ints([0, 0, 1]);
    let lhs = t.mul(&a).mul_z(&z2);
    let s2 = s.mul(&s);
    let rhs = t
        .mul(&s)
        .mul_z(&z.scale(&rat(2)))
        .add(&t.mul(&s2))
        .sub(&s2.div_by_unit(&one_s.add(&s).pow(2))?);
    checks.push(Check::equal("tz^2 A = 2tzS + tS^2 - S^2/(1+S)^2", &lhs, &rhs));
    let deriv = lhs.d_t()?;
    let expected = s.mul_z(&z.scale(&rat(2))).add(&s2);
    checks.push(Check::equal(
        "d/dt (tz^2 A) = 2zS + S^2",
        &deriv,
        &expected.truncate(deriv.order()),
    ));

    let phi = s_phi();
    let mut bad = Vec::new();
    for r in 1..=2u32 {
        let sr = s.pow(r);
        for n in 1..=8usize {
            for k in 0..=n {
                let want = s_power_coeff(n as i64, k as i64, r as i64);
                let got = sr.coeff(n).coeff(k);
                let lag = lagrange_coeff(&phi, n, k, r as usize)?;
                if got != want || lag != want {
                    bad.push(format!("r={r} n={n} k={k}: {got} vs {want}"));
                }
            }
        }
    }
    checks.push(Check::from_bool("coefficients of S and S^2", bad.is_empty(), || {
        bad.join("; ")
    }));
    Ok(checks)
}

fn swap_uv(p: &MPoly) -> MPoly {
    let mut out = MPoly::zero(3);
    for (e, c) in p.terms() {
        out.add_term(vec![e[1], e[0], e[2]], c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_matches_enumeration() {
        for c in fusy_humbert_check(4, Budget::unlimited()).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_f() {
        let f = enumerated_f(1, Budget::unlimited()).unwrap();
        // n = 1: one interval, no canopy; n = 2: three intervals
        assert_eq!(f.coeff(&[0, 0, 0]), rat(1));
        assert_eq!(f.coeff(&[1, 0, 0]) + f.coeff(&[0, 1, 0]) + f.coeff(&[0, 0, 1]), rat(3));
    }
}
