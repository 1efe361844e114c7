//! The quadratic equation with one catalytic variable satisfied by the
//! interval generating function, checked on enumerated data.
//!
//! Variables are `(t, u, z)`: `t` marks size, `z` marks `des(s) + asc(t)`
//! and `u` marks `ell(s)`.

use crate::error::Result;
use crate::lattice::TamariLattice;
use crate::mpoly::{parse_poly, MPoly};
use crate::poset::Budget;
use crate::report::Check;
use crate::zpoly::rat;

const T: usize = 0;
const U: usize = 1;
const TUZ: [char; 3] = ['t', 'u', 'z'];

/// `A_u` and `A°_u` (intervals whose upper tree has `ell = 0`) for sizes
/// `1..=order`.
#[derive(Debug, Clone)]
pub struct CatalyticData {
    pub order: usize,
    pub a_u: MPoly,
    pub a0_u: MPoly,
}

impl CatalyticData {
    pub fn enumerate(order: usize, budget: Budget) -> Result<Self> {
        let mut a_u = MPoly::zero(3);
        let mut a0_u = MPoly::zero(3);
        for n in 1..=order {
            let lattice = TamariLattice::new(n, budget)?;
            lattice.for_each_interval(budget, |iv| {
                let e = vec![n as u32, iv.lower.ell as u32, iv.k() as u32];
                a_u.add_term(e.clone(), rat(1));
                if iv.upper.ell == 0 {
                    a0_u.add_term(e, rat(1));
                }
            })?;
        }
        Ok(CatalyticData { order, a_u, a0_u })
    }

    fn trunc(&self, p: &MPoly) -> MPoly {
        let order = self.order as u32;
        p.truncate(&|e| e[T] <= order)
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let order = self.order as u32;
        a.mul_truncated(b, &|e| e[T] <= order)
    }

    /// `A_1`, still as a polynomial in three variables.
    pub fn a_1(&self) -> MPoly {
        self.a_u.substitute(U, &MPoly::one(3))
    }

    /// `(u-1) A_u - t (u - 1 + u(u+z-1) A_u - z A_1)(1 + u z A_u)`.
    pub fn main_residual(&self) -> Result<MPoly> {
        let p = |s: &str| parse_poly(s, &TUZ);
        let (a, a1) = (&self.a_u, &self.a_1());
        let left = self.mul(&p("u-1")?, a);
        let first = p("u-1")?
            .add(&self.mul(&p("u(u+z-1)")?, a))
            .sub(&self.mul(&p("z")?, a1));
        let second = MPoly::one(3).add(&self.mul(&p("uz")?, a));
        let right = self.mul(&p("t")?, &self.mul(&first, &second));
        Ok(self.trunc(&left.sub(&right)))
    }

    /// `A_u - A°_u - u z A°_u A_u`.
    pub fn split_residual(&self) -> Result<MPoly> {
        let uz = parse_poly("uz", &TUZ)?;
        let prod = self.mul(&self.mul(&uz, &self.a0_u), &self.a_u);
        Ok(self.a_u.sub(&self.a0_u).sub(&prod))
    }

    /// `(u-1) A°_u - t((u-1) + z(u A_u - A_1) + u(u-1) A_u)`.
    pub fn indecomposable_residual(&self) -> Result<MPoly> {
        let p = |s: &str| parse_poly(s, &TUZ);
        let left = self.mul(&p("u-1")?, &self.a0_u);
        let inner = p("u-1")?
            .add(&self.mul(&p("z")?, &self.mul(&p("u")?, &self.a_u).sub(&self.a_1())))
            .add(&self.mul(&p("u(u-1)")?, &self.a_u));
        Ok(self.trunc(&left.sub(&self.mul(&p("t")?, &inner))))
    }

    /// The right-hand side of the main equation at `u = 1`.
    pub fn right_side_at_one(&self) -> Result<MPoly> {
        let p = |s: &str| parse_poly(s, &TUZ);
        let (a, a1) = (&self.a_u, &self.a_1());
        let first = p("u-1")?
            .add(&self.mul(&p("u(u+z-1)")?, a))
            .sub(&self.mul(&p("z")?, a1));
        let second = MPoly::one(3).add(&self.mul(&p("uz")?, a));
        let right = self.mul(&p("t")?, &self.mul(&first, &second));
        Ok(right.substitute(U, &MPoly::one(3)))
    }
}

fn describe(r: &MPoly) -> String {
    match r.terms().next() {
        Some((e, c)) => format!("coefficient of t^{} u^{} z^{} is {c}", e[0], e[1], e[2]),
        None => String::new(),
    }
}

/// The catalytic identities modulo `t^(order+1)`.
pub fn catalytic_equation_check(order: usize, budget: Budget) -> Result<Vec<Check>> {
    let data = CatalyticData::enumerate(order, budget)?;
    let residuals = [
        ("quadratic equation", data.main_residual()?),
        ("split by the last component", data.split_residual()?),
        ("indecomposable part", data.indecomposable_residual()?),
        ("right side vanishes at u=1", data.right_side_at_one()?),
    ];
    let mut checks: Vec<Check> = residuals
        .iter()
        .map(|(name, r)| Check::from_bool(format!("{name} mod t^{}", order + 1), r.is_zero(), || describe(r)))
        .collect();
    // at u = 1 every interval contributes, so A_1 at z = 1 counts intervals
    let total: num_rational::BigRational = data
        .a_1()
        .terms()
        .filter(|(e, _)| e[T] as usize == order)
        .map(|(_, c)| c.clone())
        .sum();
    let expected = crate::formulas::interval_count(order as i64)?;
    checks.push(Check::equal(
        format!("A_1 at z=1 has {expected} intervals of size {order}"),
        &total,
        &num_rational::BigRational::from_integer(expected.clone()),
    ));
    Ok(checks)
}
