//! Named verification suites. Each returns a [`SuiteReport`] whose checks
//! carry the first counterexample on failure.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::catalytic::catalytic_equation_check;
use crate::diagonal::{
    decomposition_report, diagonal_fvector, diagonal_fvector_direct, internal_fvector, internal_fvector_by_trees,
    internal_fvector_direct, Mode,
};
use crate::equation::{a_series, b_series, verify_parametrization, PolynomialEquation};
use crate::error::{Error, Result};
use crate::formulas::{
    a_formula, b_formula, binomial, chu_vandermonde_sides, euler_characteristic, interval_count, specialization_suite,
    two_term_recurrence_check,
};
use crate::fusy_humbert::fusy_humbert_check;
use crate::lagrange::a_from_parametrization;
use crate::lattice::TamariLattice;
use crate::paths::{dyck_to_tree, tree_to_dyck};
use crate::pde::verify_pde;
use crate::poset::Budget;
use crate::report::{Check, SuiteReport};
use crate::series::TruncatedSeries;
use crate::telescoping::telescoped_recurrence_check;
use crate::trees::{agree, all_trees, canopy_by, tamari_leq, CanopyRule};
use crate::zpoly::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    OrderOracle,
    Canopy,
    Dyck,
    Catalytic,
    Polynomial,
    Pde,
    Telescoped,
    ChuVandermonde,
    Euler,
    FusyHumbert,
    Decompositions,
    InternalCross,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::OrderOracle,
        Suite::Canopy,
        Suite::Dyck,
        Suite::Catalytic,
        Suite::Polynomial,
        Suite::Pde,
        Suite::Telescoped,
        Suite::ChuVandermonde,
        Suite::Euler,
        Suite::FusyHumbert,
        Suite::Decompositions,
        Suite::InternalCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OrderOracle => "order-oracle",
            Suite::Canopy => "canopy",
            Suite::Dyck => "dyck",
            Suite::Catalytic => "catalytic",
            Suite::Polynomial => "polynomial",
            Suite::Pde => "pde",
            Suite::Telescoped => "telescoped",
            Suite::ChuVandermonde => "chu-vandermonde",
            Suite::Euler => "euler",
            Suite::FusyHumbert => "fusy-humbert",
            Suite::Decompositions => "decompositions",
            Suite::InternalCross => "internal-cross",
        }
    }

    /// Default size bound `n` (or truncation order / total degree).
    pub fn default_size(self) -> usize {
        match self {
            Suite::OrderOracle | Suite::Dyck => 6,
            Suite::Canopy | Suite::Euler => 7,
            Suite::Catalytic => 7,
            Suite::Polynomial => 10,
            Suite::Pde => 12,
            Suite::Telescoped => 12,
            Suite::ChuVandermonde => 30,
            Suite::FusyHumbert => 6,
            Suite::Decompositions => 4,
            Suite::InternalCross => 5,
        }
    }

    pub fn run(self, params: &Params) -> Result<SuiteReport> {
        let size = params.size.unwrap_or_else(|| self.default_size());
        let b = params.budget;
        let checks = match self {
            Suite::OrderOracle => order_oracle(size, b, params.threads)?,
            Suite::Canopy => canopy(size, b)?,
            Suite::Dyck => dyck(size)?,
            Suite::Catalytic => catalytic_equation_check(size, b)?,
            Suite::Polynomial => polynomial(size, b)?,
            Suite::Pde => verify_pde(size)?,
            Suite::Telescoped => {
                let mut c = telescoped_recurrence_check(size as i64)?;
                c.extend(two_term_recurrence_check(20)?);
                c
            }
            Suite::ChuVandermonde => chu_vandermonde(size as i64)?,
            Suite::Euler => euler(size, b)?,
            Suite::FusyHumbert => fusy_humbert_check(size, b)?,
            Suite::Decompositions => decompositions(size, params.mode, b)?,
            Suite::InternalCross => internal_cross(size, b)?,
        };
        Ok(SuiteReport::new(self.name(), checks))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Params {
    /// Overrides [`Suite::default_size`].
    pub size: Option<usize>,
    /// Restricts the decompositions suite to one mode.
    pub mode: Option<Mode>,
    pub budget: Budget,
    pub threads: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            size: None,
            mode: None,
            budget: Budget::default(),
            threads: 1,
        }
    }
}

fn big(x: &num_bigint::BigUint) -> BigInt {
    BigInt::from(x.clone())
}

fn order_oracle(max_n: usize, budget: Budget, threads: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let lat = TamariLattice::new(n, budget)?;
        let trees = lat.trees();
        let len = trees.len();
        let mut leq = vec![false; len * len];
        let mut mismatch = None;
        for i in 0..len {
            for j in 0..len {
                let fast = tamari_leq(&trees[i], &trees[j])?;
                leq[i * len + j] = fast;
                if mismatch.is_none() && fast != lat.leq_by_rotations(i, j) {
                    mismatch = Some(format!("{} vs {}", trees[i], trees[j]));
                }
            }
        }
        checks.push(Check::from_bool(
            format!("n={n}: order test equals rotation closure"),
            mismatch.is_none(),
            || mismatch.unwrap_or_default(),
        ));
        let reflexive = (0..len).all(|i| leq[i * len + i]);
        let antisymmetric = (0..len).all(|i| (0..len).all(|j| i == j || !(leq[i * len + j] && leq[j * len + i])));
        let transitive = (0..len)
            .all(|i| (0..len).all(|j| !leq[i * len + j] || (0..len).all(|k| !leq[j * len + k] || leq[i * len + k])));
        checks.push(Check::from_bool(
            format!("n={n}: partial order axioms"),
            reflexive && antisymmetric && transitive,
            || format!("reflexive={reflexive} antisymmetric={antisymmetric} transitive={transitive}"),
        ));
        let bad = trees
            .iter()
            .find(|t| t.des().ok().zip(t.asc().ok()).map(|(d, a)| d + a) != Some(n - 1));
        checks.push(Check::from_bool(
            format!("n={n}: des + asc = n - 1"),
            bad.is_none(),
            || bad.map(|t| t.to_string()).unwrap_or_default(),
        ));
        let hist = lat.interval_histogram(budget, threads)?;
        let table: Vec<BigInt> = (0..n).map(|k| big(&hist.get(&[k]))).collect();
        let formula: Vec<BigInt> = (0..n).map(|k| a_formula(n as i64, k as i64)).collect::<Result<_>>()?;
        checks.push(Check::equal(
            format!("n={n}: interval histogram equals the formula"),
            &table,
            &formula,
        ));
        checks.push(Check::equal(
            format!("n={n}: interval count"),
            &big(&hist.total()),
            &interval_count(n as i64)?,
        ));
    }
    Ok(checks)
}

fn canopy(max_n: usize, budget: Budget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let rules = [
        CanopyRule::RightLeaf,
        CanopyRule::OrientedPath,
        CanopyRule::EmptyRightSubtree,
        CanopyRule::NonemptyLeftSubtree,
    ];
    for n in 1..=max_n {
        let lat = TamariLattice::new(n, budget)?;
        let bad = lat.trees().iter().find(|t| {
            let c = t.canopy().expect("nonempty");
            rules.iter().any(|&r| canopy_by(t, r) != c)
        });
        checks.push(Check::from_bool(
            format!("n={n}: canopy characterizations agree"),
            bad.is_none(),
            || bad.map(|t| t.to_string()).unwrap_or_default(),
        ));
        let mut monotone = None;
        let mut agreements = None;
        lat.for_each_interval(budget, |iv| {
            let (s, t) = (lat.tree(iv.s), lat.tree(iv.t));
            let (cs, ct) = (s.canopy().expect("nonempty"), t.canopy().expect("nonempty"));
            if monotone.is_none() && !cs.leq(&ct) {
                monotone = Some(format!("{s} <= {t}"));
            }
            if agreements.is_none() && agree(s, t).ok() != Some(iv.k()) {
                agreements = Some(format!("{s} <= {t}"));
            }
        })?;
        checks.push(Check::from_bool(
            format!("n={n}: canopy is monotone on intervals"),
            monotone.is_none(),
            || monotone.unwrap_or_default(),
        ));
        checks.push(Check::from_bool(
            format!("n={n}: canopy agreements equal des(s) + asc(t)"),
            agreements.is_none(),
            || agreements.unwrap_or_default(),
        ));
    }
    Ok(checks)
}

fn dyck(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let mut bad: Vec<String> = Vec::new();
        for t in all_trees(n) {
            let p = tree_to_dyck(&t);
            if dyck_to_tree(&p)? != t {
                bad.push(format!("round trip {t}"));
            }
            if p.valleys() != t.asc()? || p.double_falls() != t.des()? || p.contacts() != t.ell() {
                bad.push(format!("statistics {t} -> {p}"));
            }
            let mut via_trees: Vec<_> = t.rotations_up().iter().map(tree_to_dyck).collect();
            let mut via_paths = p.covers_up();
            via_trees.sort();
            via_paths.sort();
            if via_trees != via_paths {
                bad.push(format!("covers {t}"));
            }
            if bad.len() > 3 {
                break;
            }
        }
        checks.push(Check::from_bool(
            format!("n={n}: Dyck bijection"),
            bad.is_empty(),
            || bad.join("; "),
        ));
    }
    Ok(checks)
}

fn polynomial(order: usize, budget: Budget) -> Result<Vec<Check>> {
    let p = PolynomialEquation::quartic()?;
    let a = a_series(order)?;
    let mut checks = vec![Check::from_bool(
        format!("P(t,z,A) = 0 mod t^{}", order + 1),
        p.eval(&a).is_zero(),
        String::new,
    )];
    checks.push(Check::from_bool(
        format!("parametrization annihilates P mod s^{}", order + 3),
        verify_parametrization(&p, order + 2)?,
        String::new,
    ));
    checks.push(Check::equal(
        format!("A(t,z+1) equals the root of P(t,z+1,X) mod t^{}", order + 1),
        &a.substitute_z_shift(&rat(1)),
        &b_series(order)?,
    ));
    checks.push(Check::equal(
        "A = S - zS^2 - zS^3 from the parametrization",
        &a_from_parametrization(order)?,
        &a,
    ));
    let at0 = a.eval_z(&rat(0));
    let geometric =
        TruncatedSeries::var(order).div_by_unit(&TruncatedSeries::one(order).sub(&TruncatedSeries::var(order)))?;
    checks.push(Check::equal("A(t,0) = t/(1-t)", &at0, &geometric));
    let mut bad = Vec::new();
    for n in 1..=order as i64 {
        for k in 0..n {
            let got = a.coeff(n as usize).coeff(k as usize);
            if got != num_rational::BigRational::from_integer(a_formula(n, k)?) {
                bad.push(format!("a({n},{k})"));
            }
        }
    }
    checks.push(Check::from_bool(
        "series coefficients equal the formula",
        bad.is_empty(),
        || bad.join(", "),
    ));
    // enumeration agrees with both for the sizes that are cheap to list
    let enumerated = 7.min(order);
    let mut bad = Vec::new();
    for n in 1..=enumerated {
        let hist = TamariLattice::new(n, budget)?.interval_histogram(budget, 1)?;
        for k in 0..n {
            if num_rational::BigRational::from_integer(big(&hist.get(&[k]))) != a.coeff(n).coeff(k) {
                bad.push(format!("a({n},{k})"));
            }
        }
    }
    checks.push(Check::from_bool(
        format!("series coefficients equal the enumeration for n <= {enumerated}"),
        bad.is_empty(),
        || bad.join(", "),
    ));
    Ok(checks)
}

fn chu_vandermonde(max: i64) -> Result<Vec<Check>> {
    let mut bad = Vec::new();
    for n in 0..=max {
        for k in 0..=max {
            for r in 0..=max {
                let (l, rhs) = chu_vandermonde_sides(n, k, r)?;
                if l != rhs {
                    bad.push(format!("(n,k,r)=({n},{k},{r}): {l} != {rhs}"));
                }
            }
        }
    }
    let mut checks = vec![Check::from_bool(
        format!("generalized identity on the grid n,k,r <= {max}"),
        bad.is_empty(),
        || bad.iter().take(5).cloned().collect::<Vec<_>>().join("; "),
    )];
    let mut bad = Vec::new();
    for n in 1..=10i64 {
        // r = 3n, k = 0: the left side is sum_l C(n+1, l+2) C(3n, l)
        let (l, _) = chu_vandermonde_sides(n, 0, 3 * n)?;
        let direct: BigInt = (0..n).map(|ell| binomial(n + 1, ell + 2) * binomial(3 * n, ell)).sum();
        // and equals n(n+1)/2 times the number of intervals
        let scaled = b_formula(n, 0)? * BigInt::from(n * (n + 1) / 2);
        if l != direct || l != scaled {
            bad.push(format!("n={n}: {l} vs {direct} vs {scaled}"));
        }
    }
    checks.push(Check::from_bool("r = 3n instances", bad.is_empty(), || bad.join(", ")));
    for n in 1..=12 {
        checks.extend(specialization_suite(n)?);
    }
    Ok(checks)
}

fn euler(max_n: usize, budget: Budget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let lat = TamariLattice::new(n, budget)?;
        let f: Vec<BigInt> = diagonal_fvector(&lat, budget)?.iter().map(big).collect();
        let b: Vec<BigInt> = (0..n as i64).map(|k| b_formula(n as i64, k)).collect::<Result<_>>()?;
        checks.push(Check::equal(
            format!("n={n}: diagonal f-vector equals the formula"),
            &f,
            &b,
        ));
        checks.push(Check::equal(
            format!("n={n}: alternating sum"),
            &euler_characteristic(&f),
            &BigInt::from(1),
        ));
    }
    Ok(checks)
}

fn decompositions(n: usize, mode: Option<Mode>, budget: Budget) -> Result<Vec<Check>> {
    let lat = TamariLattice::new(n, budget)?;
    let f: Vec<u64> = diagonal_fvector(&lat, budget)?
        .iter()
        .map(|x| u64::try_from(x).unwrap_or(u64::MAX))
        .collect();
    let modes: Vec<Mode> = mode.map_or(Mode::ALL.to_vec(), |m| vec![m]);
    let mut checks = Vec::new();
    for m in modes {
        let r = decomposition_report(&lat, m, budget)?;
        checks.push(Check::equal(
            format!("n={n} {}: fibers sum to the f-vector", m.name()),
            &r.fvector,
            &f,
        ));
        match m {
            Mode::MinMax if n >= 2 => {
                let first = r
                    .non_boolean()
                    .next()
                    .map(|f| format!("{} {} {:?}", f.s, f.t, f.polynomial));
                checks.push(Check::from_bool(
                    format!("n={n} {}: some fiber is not boolean (expected)", m.name()),
                    !r.all_boolean,
                    || "all fibers boolean".into(),
                ));
                if let Some(first) = first {
                    checks.push(Check::pass(format!(
                        "n={n} {}: first non-boolean fiber {first}",
                        m.name()
                    )));
                }
            }
            _ => {
                let first = r
                    .non_boolean()
                    .next()
                    .map(|f| format!("{} {} {:?}", f.s, f.t, f.polynomial));
                checks.push(Check::from_bool(
                    format!("n={n} {}: every fiber is boolean", m.name()),
                    r.all_boolean,
                    || first.unwrap_or_default(),
                ));
            }
        }
        if m == Mode::MaxMin {
            let mut bad = None;
            lat.for_each_interval(budget, |iv| {
                let (s, t) = (lat.tree(iv.s).to_string(), lat.tree(iv.t).to_string());
                let fiber = r.fibers.iter().find(|f| f.s == s && f.t == t);
                if bad.is_none() && fiber.and_then(|f| f.boolean) != Some((0, iv.k())) {
                    bad = Some(format!("{s} {t}"));
                }
            })?;
            checks.push(Check::from_bool(
                format!("n={n} max-min: fiber over (s,t) has rank des(s) + asc(t)"),
                bad.is_none(),
                || bad.unwrap_or_default(),
            ));
        }
    }
    Ok(checks)
}

fn internal_cross(max_n: usize, budget: Budget) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let lat = TamariLattice::new(n, budget)?;
        let formula = internal_fvector(&lat, budget)?;
        checks.push(Check::equal(
            format!("n={n}: internal faces by statistics and by edge ranges"),
            &formula,
            &internal_fvector_direct(&lat, budget)?,
        ));
        checks.push(Check::equal(
            format!("n={n}: internal faces by statistics and by contracted trees"),
            &formula,
            &internal_fvector_by_trees(&lat, budget)?,
        ));
        if n <= 6 {
            if let Some(direct) = diagonal_fvector_direct(&lat, budget)? {
                checks.push(Check::equal(
                    format!("n={n}: diagonal faces listed directly"),
                    &direct,
                    &diagonal_fvector(&lat, budget)?,
                ));
            } else {
                checks.push(Check::fail(
                    format!("n={n}: diagonal faces listed directly"),
                    "duplicate face",
                ));
            }
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let size = match s {
                Suite::Polynomial | Suite::Pde | Suite::Catalytic => 6,
                Suite::ChuVandermonde => 8,
                Suite::Telescoped => 4,
                Suite::FusyHumbert => 3,
                _ => 3,
            };
            let r = s
                .run(&Params {
                    size: Some(size),
                    ..Params::default()
                })
                .unwrap();
            assert!(r.passed, "{s}: {:?}", r.first_failure());
        }
    }
}
