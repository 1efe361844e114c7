//! Point evaluations: `a 8 5`, `a(8,5)`, `intervals 7`, `m-intervals 3 4`.

use std::fmt;

use num_bigint::BigInt;
use tamari::formulas::{a_formula, b_formula, interval_count, synchronized_count};
use tamari::paths::m_tamari_interval_formula;
use tamari::{Error, Result};

/// Arguments are capped so a stray huge number cannot allocate gigabytes of
/// factorials.
pub const MAX_ARGUMENT: i64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expr {
    /// Intervals of `Tam(n)` with `des(s) + asc(t) = k`.
    A {
        n: i64,
        k: i64,
    },
    /// Faces of dimension `k` of the diagonal of the `(n-1)`-associahedron.
    B {
        n: i64,
        k: i64,
    },
    Intervals {
        n: i64,
    },
    Synchronized {
        n: i64,
    },
    /// Intervals of `Tam(m, n)`.
    MIntervals {
        m: i64,
        n: i64,
    },
}

const FUNCTIONS: [(&str, usize); 5] = [("a", 2), ("b", 2), ("intervals", 1), ("sync", 1), ("m-intervals", 2)];

fn parse_int(s: &str, offset: usize) -> Result<i64> {
    let v: i64 = s
        .parse()
        .map_err(|_| Error::parse(offset, format!("expected an integer, found {s:?}")))?;
    if v.abs() > MAX_ARGUMENT {
        return Err(Error::parse(offset, format!("argument {v} exceeds {MAX_ARGUMENT}")));
    }
    Ok(v)
}

impl Expr {
    /// Accepts `name arg arg` and `name(arg, arg)`.
    pub fn parse(s: &str) -> Result<Expr> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        let name_end = trimmed
            .find(|c: char| c.is_whitespace() || c == '(')
            .unwrap_or(trimmed.len());
        let name = &trimmed[..name_end];
        let mut rest = trimmed[name_end..].trim_start();
        let mut base = lead + trimmed.len() - rest.len();
        if let Some(inner) = rest.strip_prefix('(') {
            rest = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(lead + trimmed.len(), "missing ')'"))?;
            base += 1;
        }
        let mut args = Vec::new();
        let mut pos = 0;
        for piece in rest.split(|c: char| c == ',' || c.is_whitespace()) {
            if !piece.is_empty() {
                args.push(parse_int(piece, base + pos)?);
            }
            pos += piece.len() + 1;
        }
        let arity = FUNCTIONS
            .iter()
            .find(|(f, _)| *f == name)
            .map(|&(_, a)| a)
            .ok_or_else(|| Error::parse(lead, format!("unknown function {name:?}")))?;
        if args.len() != arity {
            return Err(Error::parse(
                base,
                format!("{name} takes {arity} argument(s), got {}", args.len()),
            ));
        }
        Ok(match name {
            "a" => Expr::A { n: args[0], k: args[1] },
            "b" => Expr::B { n: args[0], k: args[1] },
            "intervals" => Expr::Intervals { n: args[0] },
            "sync" => Expr::Synchronized { n: args[0] },
            _ => Expr::MIntervals { m: args[0], n: args[1] },
        })
    }

    pub fn eval(self) -> Result<BigInt> {
        match self {
            Expr::A { n, k } => a_formula(n, k),
            Expr::B { n, k } => b_formula(n, k),
            Expr::Intervals { n } => interval_count(n),
            Expr::Synchronized { n } => synchronized_count(n),
            Expr::MIntervals { m, n } => {
                let m = usize::try_from(m).map_err(|_| Error::InvalidArgument(format!("m = {m} is negative")))?;
                let n = usize::try_from(n).map_err(|_| Error::NonPositive(n))?;
                Ok(m_tamari_interval_formula(m, n)?.into())
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Expr::A { n, k } => write!(f, "a({n},{k})"),
            Expr::B { n, k } => write!(f, "b({n},{k})"),
            Expr::Intervals { n } => write!(f, "intervals({n})"),
            Expr::Synchronized { n } => write!(f, "sync({n})"),
            Expr::MIntervals { m, n } => write!(f, "m-intervals({m},{n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> String {
        Expr::parse(s).unwrap().eval().unwrap().to_string()
    }

    #[test]
    fn both_spellings() {
        assert_eq!(eval("a 8 5"), "42504");
        assert_eq!(eval("a(8, 5)"), "42504");
        assert_eq!(eval(" b(6,0) "), "2530");
        assert_eq!(eval("intervals 7"), "16965");
        assert_eq!(eval("m-intervals 3 4"), "3685");
        assert_eq!(eval("sync 4"), "22");
    }

    #[test]
    fn display_round_trips() {
        for s in ["a(3,1)", "b(4,2)", "intervals(5)", "sync(2)", "m-intervals(2,3)"] {
            assert_eq!(Expr::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_malformed() {
        for s in [
            "",
            "a",
            "a 1",
            "a 1 2 3",
            "c 1 2",
            "a(1,2",
            "a x 2",
            "intervals 9999999",
        ] {
            assert!(Expr::parse(s).is_err(), "{s}");
        }
        assert!(Expr::parse("intervals 0").unwrap().eval().is_err());
    }
}
