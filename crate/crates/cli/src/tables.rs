//! The printed tables, rebuilt from enumeration or from the closed forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use tamari::diagonal::{diagonal_fvector, diagonal_fvector_by_dims, internal_fvector};
use tamari::formulas::{a_formula, b_formula, binomial_u, refined_ell_formula, separated_formula};
use tamari::lattice::TamariLattice;
use tamari::paths::{m_tamari_interval_formula, MTamari};
use tamari::{Budget, Error, Grid, Result, StatTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    A,
    B,
    Internal,
    MIntervals,
    MStats,
    RefinedEll,
    RefinedPq,
    FaceDims,
}

impl TableName {
    pub const ALL: [TableName; 8] = [
        TableName::A,
        TableName::B,
        TableName::Internal,
        TableName::MIntervals,
        TableName::MStats,
        TableName::RefinedEll,
        TableName::RefinedPq,
        TableName::FaceDims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableName::A => "a",
            TableName::B => "b",
            TableName::Internal => "internal",
            TableName::MIntervals => "m-intervals",
            TableName::MStats => "m-stats",
            TableName::RefinedEll => "refined-ell",
            TableName::RefinedPq => "refined-pq",
            TableName::FaceDims => "face-dims",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableName::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown table {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Source {
    #[default]
    Enumeration,
    Formula,
}

#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub source: Source,
    /// refined-ell: split each row by `k`.
    pub by_k: bool,
    /// refined-ell with `by_k`, refined-pq: apply the binomial transform in `k`.
    pub binomial: bool,
    /// refined-pq: only synchronized intervals, by `des(s)`.
    pub synchronized: bool,
    pub budget: Budget,
    pub threads: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            max_n: None,
            max_m: None,
            source: Source::Enumeration,
            by_k: false,
            binomial: false,
            synchronized: false,
            budget: Budget::default(),
            threads: 1,
        }
    }
}

impl TableOptions {
    /// The range of the printed table.
    fn default_max_n(&self, name: TableName) -> usize {
        match name {
            TableName::A | TableName::B => 9,
            TableName::Internal => 7,
            TableName::MIntervals => 5,
            TableName::MStats => 4,
            TableName::RefinedEll if self.by_k => 5,
            TableName::RefinedEll => 9,
            TableName::RefinedPq if self.synchronized => 9,
            TableName::RefinedPq | TableName::FaceDims => 5,
        }
    }
}

fn int(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

fn k_columns(max_n: usize) -> Vec<String> {
    (0..max_n).map(|k| k.to_string()).collect()
}

fn needs_formula(name: TableName) -> Result<()> {
    Err(Error::InvalidArgument(format!("table {name} has no closed form")))
}

/// Builds a table. `progress` receives one line per finished size.
pub fn build(name: TableName, opts: &TableOptions, progress: &mut dyn FnMut(&str)) -> Result<Grid> {
    let max_n = opts.max_n.unwrap_or_else(|| opts.default_max_n(name));
    if max_n == 0 {
        return Err(Error::InvalidArgument("the size range must include n >= 1".into()));
    }
    let formula = opts.source == Source::Formula;
    let (budget, threads) = (opts.budget, opts.threads);
    let lattice = |n: usize| -> Result<TamariLattice> { TamariLattice::new(n, budget) };
    let mut grid;
    match name {
        TableName::A | TableName::B => {
            grid = Grid::new("n\\k", k_columns(max_n)).with_sums(name == TableName::A, false);
            for n in 1..=max_n {
                let row: Vec<BigInt> = if formula {
                    let f = if name == TableName::A { a_formula } else { b_formula };
                    (0..n as i64).map(|k| f(n as i64, k)).collect::<Result<_>>()?
                } else if name == TableName::A {
                    let h = lattice(n)?.interval_histogram(budget, threads)?;
                    (0..n).map(|k| int(&h.get(&[k]))).collect()
                } else {
                    diagonal_fvector(&lattice(n)?, budget)?.iter().map(int).collect()
                };
                grid.push_row(n, row.into_iter().map(Some).collect());
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::Internal => {
            if formula {
                needs_formula(name)?;
            }
            grid = Grid::new("n\\k", k_columns(max_n)).with_sums(true, false);
            for n in 1..=max_n {
                let row = internal_fvector(&lattice(n)?, budget)?;
                grid.push_row(n, row.iter().map(|x| Some(int(x))).collect());
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::MIntervals => {
            let max_m = opts.max_m.unwrap_or(6);
            grid = Grid::new("n\\m", (1..=max_m).map(|m| m.to_string()).collect());
            for n in 1..=max_n {
                let mut row = Vec::new();
                for m in 1..=max_m {
                    let v = if formula {
                        m_tamari_interval_formula(m, n)?
                    } else {
                        BigUint::from(MTamari::new(m, n, budget)?.interval_count(budget)?)
                    };
                    row.push(Some(int(&v)));
                }
                grid.push_row(n, row);
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::MStats => {
            if formula {
                needs_formula(name)?;
            }
            let max_m = opts.max_m.unwrap_or(6);
            let mut rows = Vec::new();
            for m in 1..=max_m {
                for n in 1..=max_n {
                    let h = MTamari::new(m, n, budget)?.interval_stats(budget)?.histogram();
                    rows.push((format!("{m},{n}"), h));
                }
                progress(&format!("table {name}: m={m} done"));
            }
            let width = rows.iter().map(|(_, h)| h.len()).max().unwrap_or(0);
            grid = Grid::new("m,n\\k", k_columns(width)).with_sums(true, false);
            for (label, h) in rows {
                grid.push_row(label, h.iter().map(|x| Some(int(x))).collect());
            }
        }
        TableName::RefinedEll if !opts.by_k => {
            grid = Grid::new("n\\ell", k_columns(max_n)).with_sums(true, false);
            for n in 1..=max_n {
                let row: Vec<BigInt> = if formula {
                    (0..n as i64)
                        .map(|l| refined_ell_formula(n as i64, l))
                        .collect::<Result<_>>()?
                } else {
                    let t = lattice(n)?.refined_by_ell(budget, threads)?.marginal(0);
                    (0..n).map(|l| int(&t.get(&[l]))).collect()
                };
                grid.push_row(n, row.into_iter().map(Some).collect());
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::RefinedEll => {
            if formula {
                needs_formula(name)?;
            }
            grid = Grid::new("n,i\\k", k_columns(max_n)).with_sums(!opts.binomial, false);
            for n in 1..=max_n {
                let t = lattice(n)?.refined_by_ell(budget, threads)?;
                push_split_rows(&mut grid, n, &t, opts.binomial);
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::RefinedPq if opts.synchronized => {
            grid = Grid::new("n\\p", k_columns(max_n)).with_sums(true, false);
            for n in 1..=max_n {
                let row: Vec<BigInt> = if formula {
                    (0..n as i64)
                        .map(|p| separated_formula(n as i64, p))
                        .collect::<Result<_>>()?
                } else {
                    let t = lattice(n)?.refined_by_des_asc(budget, threads)?;
                    (0..n).map(|p| int(&t.get(&[p, n - 1 - p]))).collect()
                };
                grid.push_row(n, row.into_iter().map(Some).collect());
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::RefinedPq if opts.binomial => {
            if formula {
                needs_formula(name)?;
            }
            grid = Grid::new("n,p\\k", k_columns(max_n));
            for n in 1..=max_n {
                // faces by des(s) = p and dimension k: sum C(des(s) + asc(t), k)
                let t = lattice(n)?.refined_by_des_asc(budget, threads)?;
                let mut by_p = StatTable::new(n, vec!["p", "k"]);
                for (key, c) in t.cells() {
                    for k in 0..=key[0] + key[1] {
                        by_p.add(&[key[0], k], c * binomial_u(key[0] + key[1], k));
                    }
                }
                for p in 0..n {
                    grid.push_row(
                        format!("{n},{p}"),
                        (0..n).map(|k| Some(int(&by_p.get(&[p, k])))).collect(),
                    );
                }
                push_block_sum(&mut grid, n);
                progress(&format!("table {name}: n={n} done"));
            }
        }
        TableName::RefinedPq | TableName::FaceDims => {
            if formula {
                needs_formula(name)?;
            }
            grid = Grid::new("n,p\\q", k_columns(max_n));
            for n in 1..=max_n {
                let lat = lattice(n)?;
                let t = if name == TableName::FaceDims {
                    diagonal_fvector_by_dims(&lat, budget)?
                } else {
                    lat.refined_by_des_asc(budget, threads)?
                };
                for p in 0..n {
                    grid.push_row(
                        format!("{n},{p}"),
                        (0..n - p).map(|q| Some(int(&t.get(&[p, q])))).collect(),
                    );
                }
                progress(&format!("table {name}: n={n} done"));
            }
        }
    }
    Ok(grid)
}

/// Rows `(n, i)` of a table keyed by `(i, k)`, optionally binomially
/// transformed in `k`.
fn push_split_rows(grid: &mut Grid, n: usize, t: &StatTable, transform: bool) {
    for i in 0..n {
        let row: Vec<BigUint> = (0..n).map(|k| t.get(&[i, k])).collect();
        let row = if transform {
            (0..n)
                .map(|k| (k..n).map(|l| &row[l] * binomial_u(l, k)).sum::<BigUint>())
                .collect()
        } else {
            row
        };
        grid.push_row(format!("{n},{i}"), row.iter().map(|x| Some(int(x))).collect());
    }
    push_block_sum(grid, n);
}

/// Closes the block of the last `n` rows with their column sums.
fn push_block_sum(grid: &mut Grid, n: usize) {
    let block = &grid.rows[grid.rows.len() - n..];
    let sums = (0..grid.columns.len())
        .map(|c| {
            let cells: Vec<&BigInt> = block.iter().filter_map(|(_, r)| r[c].as_ref()).collect();
            (!cells.is_empty()).then(|| cells.into_iter().sum())
        })
        .collect();
    grid.push_row(format!("{n},sum"), sums);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv(name: TableName, opts: TableOptions) -> String {
        build(name, &opts, &mut |_| {}).unwrap().to_csv()
    }

    #[test]
    fn small_a_table() {
        let opts = TableOptions {
            max_n: Some(3),
            ..Default::default()
        };
        assert_eq!(
            csv(TableName::A, opts),
            "n\\k,0,1,2,sum\n1,1,,,1\n2,1,2,,3\n3,1,6,6,13\n"
        );
        let formula = TableOptions {
            source: Source::Formula,
            ..opts
        };
        assert_eq!(csv(TableName::A, formula), csv(TableName::A, opts));
    }

    #[test]
    fn names_round_trip() {
        for t in TableName::ALL {
            assert_eq!(t.name().parse::<TableName>().unwrap(), t);
        }
        assert!("c".parse::<TableName>().is_err());
    }

    #[test]
    fn no_formula_for_internal() {
        let opts = TableOptions {
            max_n: Some(2),
            source: Source::Formula,
            ..Default::default()
        };
        assert!(build(TableName::Internal, &opts, &mut |_| {}).is_err());
    }
}
