//! Sparse multivariate polynomials over the rationals, and a parser for
//! polynomial expressions such as `3t^2(z+1)^4 - 12tz`.
//!
//! Variables are single letters; juxtaposition is multiplication.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::zpoly::{rat, ZPolynomial};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;
/// Largest number of terms a parsed expression may expand to.
pub const MAX_TERMS: usize = 200_000;
const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable with index `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.mul_truncated(other, &|_| true)
    }

    /// Product keeping only monomials accepted by `keep`.
    pub fn mul_truncated(&self, other: &MPoly, keep: &dyn Fn(&[u32]) -> bool) -> MPoly {
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if keep(&e) {
                    *acc.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly {
            nvars: self.nvars,
            terms: acc,
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Drops monomials rejected by `keep`.
    pub fn truncate(&self, keep: &dyn Fn(&[u32]) -> bool) -> MPoly {
        let mut out = self.clone();
        out.terms.retain(|e, _| keep(e));
        out
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut e2 = e.clone();
                e2[var] -= 1;
                out.add_term(e2, c * rat(e[var]));
            }
        }
        out
    }

    /// Substitutes the value `value` for variable `var`; the variable stays
    /// in the variable list with exponent zero.
    pub fn substitute(&self, var: usize, value: &MPoly) -> MPoly {
        let max = self.degree_in(var).unwrap_or(0);
        let mut powers = vec![Self::one(self.nvars)];
        for _ in 0..max {
            powers.push(powers.last().unwrap().mul(value));
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            let mut mono = Self::zero(self.nvars);
            mono.add_term(e2, c.clone());
            out = out.add(&mono.mul(&powers[e[var] as usize]));
        }
        out
    }

    /// Collects the polynomial as `sum_i p_i(z) x^i` for a polynomial in
    /// two variables `(x, z)`.
    pub fn to_z_coefficients(&self, x: usize, z: usize) -> Vec<ZPolynomial> {
        let deg = self.degree_in(x).unwrap_or(0) as usize;
        let mut out = vec![BTreeMap::<usize, BigRational>::new(); deg + 1];
        for (e, c) in &self.terms {
            for (i, &d) in e.iter().enumerate() {
                assert!(i == x || i == z || d == 0, "stray variable");
            }
            *out[e[x] as usize]
                .entry(e[z] as usize)
                .or_insert_with(BigRational::zero) += c;
        }
        out.into_iter()
            .map(|m| {
                let len = m.keys().max().map_or(0, |k| k + 1);
                let mut v = vec![BigRational::zero(); len];
                for (k, c) in m {
                    v[k] = c;
                }
                ZPolynomial::new(v)
            })
            .collect()
    }

    pub fn display<'a>(&'a self, vars: &'a [char]) -> impl fmt::Display + 'a {
        Displayed { p: self, vars }
    }
}

struct Displayed<'a> {
    p: &'a MPoly,
    vars: &'a [char],
}

impl fmt::Display for Displayed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.p.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            let constant = e.iter().all(|&d| d == 0);
            if !a.is_one() || constant {
                write!(f, "{a}")?;
            }
            for (v, &d) in self.vars.iter().zip(e) {
                match d {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{d}")?,
                }
            }
        }
        Ok(())
    }
}

/// Parses a polynomial expression over the single-letter variables `vars`.
///
/// Grammar: `expr = ['+'|'-'] term (('+'|'-') term)*`,
/// `term = factor (['*'] factor)*`, `factor = atom ['^' digits]`,
/// `atom = digits | letter | '(' expr ')'`. Whitespace is ignored.
pub fn parse_poly(src: &str, vars: &[char]) -> Result<MPoly> {
    let mut p = Parser {
        chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
        vars,
        end: src.len(),
    };
    let out = p.expr(0)?;
    if p.pos != p.chars.len() {
        return Err(Error::parse(p.offset(), "unexpected character"));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [char],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn check_size(&self, p: &MPoly) -> Result<()> {
        if p.len() > MAX_TERMS {
            Err(Error::parse(self.offset(), "expression expands to too many terms"))
        } else {
            Ok(())
        }
    }

    fn expr(&mut self, depth: usize) -> Result<MPoly> {
        if depth > MAX_DEPTH {
            return Err(Error::parse(self.offset(), "nesting too deep"));
        }
        let n = self.vars.len();
        let mut acc = MPoly::zero(n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let term = self.term(depth)?;
            acc = if sign < 0 { acc.sub(&term) } else { acc.add(&term) };
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn term(&mut self, depth: usize) -> Result<MPoly> {
        let mut acc = self.factor(depth)?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || c.is_alphabetic() => {}
                _ => break,
            }
            let f = self.factor(depth)?;
            acc = acc.mul(&f);
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn factor(&mut self, depth: usize) -> Result<MPoly> {
        let base = self.atom(depth)?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.offset();
        let digits = self.digits().ok_or_else(|| Error::parse(start, "expected exponent"))?;
        let k: u32 = digits
            .parse()
            .ok()
            .filter(|&k| k <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(start, "exponent too large"))?;
        let mut acc = MPoly::one(self.vars.len());
        for _ in 0..k {
            acc = acc.mul(&base);
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn atom(&mut self, depth: usize) -> Result<MPoly> {
        let n = self.vars.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr(depth + 1)?;
                if self.peek() != Some(')') {
                    return Err(Error::parse(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().expect("digit");
                let v: BigInt = digits.parse().expect("digits");
                Ok(MPoly::constant(n, BigRational::from_integer(v)))
            }
            Some(c) => match self.vars.iter().position(|&v| v == c) {
                Some(i) => {
                    self.pos += 1;
                    Ok(MPoly::var(n, i))
                }
                None => Err(Error::parse(self.offset(), format!("unknown symbol {c:?}"))),
            },
            None => Err(Error::parse(self.offset(), "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TZ: [char; 2] = ['t', 'z'];

    #[test]
    fn implicit_multiplication_and_powers() {
        let p = parse_poly("3t^2z - tz(z+1)", &TZ).unwrap();
        let q = parse_poly("3*t^2*z - t*z^2 - t*z", &TZ).unwrap();
        assert_eq!(p, q);
        assert_eq!(
            parse_poly("(z+1)^2", &TZ).unwrap(),
            parse_poly("z^2 + 2z + 1", &TZ).unwrap()
        );
        assert_eq!(
            parse_poly("-(t-1)^3", &TZ).unwrap(),
            parse_poly("1 - 3t + 3t^2 - t^3", &TZ).unwrap()
        );
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "t +", "x", "(t", "t^", "t^999", "t)", "2^^3"] {
            assert!(parse_poly(bad, &TZ).is_err(), "{bad}");
        }
    }

    #[test]
    fn derivative_and_substitution() {
        let p = parse_poly("t^3 z + 2t", &TZ).unwrap();
        assert_eq!(p.derivative(0), parse_poly("3t^2z + 2", &TZ).unwrap());
        let z1 = MPoly::constant(2, BigRational::one());
        assert_eq!(p.substitute(1, &z1), parse_poly("t^3 + 2t", &TZ).unwrap());
        assert_eq!(p.display(&TZ).to_string(), "2t + t^3z");
    }
}
