//! Statistic histograms and their tabular export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};

/// Counts indexed by a tuple of statistic values, for one size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub n: usize,
    pub axes: Vec<&'static str>,
    cells: BTreeMap<Vec<usize>, BigUint>,
}

impl StatTable {
    pub fn new(n: usize, axes: Vec<&'static str>) -> Self {
        StatTable {
            n,
            axes,
            cells: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, key: &[usize], count: impl Into<BigUint>) {
        debug_assert_eq!(key.len(), self.axes.len());
        let count = count.into();
        if count.is_zero() {
            return;
        }
        *self.cells.entry(key.to_vec()).or_default() += count;
    }

    pub fn get(&self, key: &[usize]) -> BigUint {
        self.cells.get(key).cloned().unwrap_or_default()
    }

    pub fn cells(&self) -> impl Iterator<Item = (&[usize], &BigUint)> {
        self.cells.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn total(&self) -> BigUint {
        self.cells.values().sum()
    }

    /// Adds every cell of `other` into `self`. Associative and commutative.
    pub fn merge(&mut self, other: &StatTable) {
        assert_eq!(self.axes, other.axes, "merging tables over different statistics");
        for (k, v) in &other.cells {
            *self.cells.entry(k.clone()).or_default() += v;
        }
    }

    /// Sums out every axis except `axis`.
    pub fn marginal(&self, axis: usize) -> StatTable {
        let mut out = StatTable::new(self.n, vec![self.axes[axis]]);
        for (k, v) in &self.cells {
            out.add(&[k[axis]], v.clone());
        }
        out
    }

    /// Dense histogram of a one-axis table, trailing zeros removed.
    pub fn histogram(&self) -> Vec<BigUint> {
        assert_eq!(self.axes.len(), 1, "histogram of a multi-axis table");
        let len = self.cells.keys().map(|k| k[0] + 1).max().unwrap_or(0);
        let mut out = vec![BigUint::zero(); len];
        for (k, v) in &self.cells {
            out[k[0]] = v.clone();
        }
        out
    }

    pub fn histogram_u64(&self) -> Vec<u64> {
        self.histogram()
            .iter()
            .map(|v| u64::try_from(v).expect("count fits in u64"))
            .collect()
    }
}

/// A rectangular table with labelled rows and columns and possibly empty
/// cells, laid out like the printed tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<Option<BigInt>>)>,
    pub sum_column: bool,
    pub sum_row: bool,
}

impl Grid {
    pub fn new(corner: &str, columns: Vec<String>) -> Self {
        Grid {
            corner: corner.to_string(),
            columns,
            rows: Vec::new(),
            sum_column: false,
            sum_row: false,
        }
    }

    pub fn with_sums(mut self, column: bool, row: bool) -> Self {
        self.sum_column = column;
        self.sum_row = row;
        self
    }

    pub fn push_row(&mut self, label: impl ToString, cells: Vec<Option<BigInt>>) {
        assert!(cells.len() <= self.columns.len());
        let mut cells = cells;
        cells.resize(self.columns.len(), None);
        self.rows.push((label.to_string(), cells));
    }

    fn row_sum(cells: &[Option<BigInt>]) -> BigInt {
        cells.iter().flatten().sum()
    }

    fn column_sums(&self) -> Vec<Option<BigInt>> {
        (0..self.columns.len())
            .map(|c| {
                let mut present = self.rows.iter().filter_map(|(_, cells)| cells[c].as_ref()).peekable();
                present.peek()?;
                Some(present.sum())
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.corner);
        for c in &self.columns {
            write!(out, ",{c}").unwrap();
        }
        if self.sum_column {
            out.push_str(",sum");
        }
        out.push('\n');
        let mut write_row = |label: &str, cells: &[Option<BigInt>], sum: Option<BigInt>| {
            out.push_str(label);
            for cell in cells {
                out.push(',');
                if let Some(v) = cell {
                    write!(out, "{v}").unwrap();
                }
            }
            if let Some(s) = sum {
                write!(out, ",{s}").unwrap();
            }
            out.push('\n');
        };
        for (label, cells) in &self.rows {
            let sum = self.sum_column.then(|| Self::row_sum(cells));
            write_row(label, cells, sum);
        }
        if self.sum_row {
            let mut line = self.column_sums();
            // the corner of the two sums is left empty
            if self.sum_column {
                line.push(None);
            }
            write_row("sum", &line, None);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let cell = |c: &Option<BigInt>| c.as_ref().map_or(Value::Null, |v| Value::String(v.to_string()));
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(label, cells)| {
                let mut row = json!({
                    "label": label,
                    "cells": cells.iter().map(cell).collect::<Vec<_>>(),
                });
                if self.sum_column {
                    row["sum"] = Value::String(Self::row_sum(cells).to_string());
                }
                row
            })
            .collect();
        let mut doc = json!({
            "corner": self.corner,
            "columns": self.columns,
            "rows": rows,
        });
        if self.sum_row {
            doc["column_sums"] = Value::Array(self.column_sums().iter().map(cell).collect());
        }
        doc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_marginals_and_merge() {
        let mut a = StatTable::new(3, vec!["i", "k"]);
        a.add(&[0, 1], 2u32);
        a.add(&[1, 1], 3u32);
        a.add(&[1, 2], 0u32);
        let mut b = StatTable::new(3, vec!["i", "k"]);
        b.add(&[0, 1], 1u32);
        a.merge(&b);
        assert_eq!(a.get(&[0, 1]), BigUint::from(3u32));
        assert_eq!(a.total(), BigUint::from(6u32));
        assert_eq!(a.marginal(1).histogram_u64(), vec![0, 6]);
        assert_eq!(a.marginal(0).histogram_u64(), vec![3, 3]);
    }

    #[test]
    fn grid_csv_layout() {
        let mut g = Grid::new("n\\k", vec!["0".into(), "1".into()]).with_sums(true, false);
        g.push_row(1, vec![Some(1.into())]);
        g.push_row(2, vec![Some(1.into()), Some(2.into())]);
        assert_eq!(g.to_csv(), "n\\k,0,1,sum\n1,1,,1\n2,1,2,3\n");
        let j = g.to_json();
        assert_eq!(j["rows"][1]["cells"][1], "2");
        assert_eq!(j["rows"][0]["cells"][1], Value::Null);
    }

    #[test]
    fn grid_sum_row() {
        let mut g = Grid::new("i\\k", vec!["0".into(), "1".into()]).with_sums(true, true);
        g.push_row(0, vec![Some(0.into()), Some(1.into())]);
        g.push_row(1, vec![Some(1.into()), Some(1.into())]);
        assert_eq!(g.to_csv(), "i\\k,0,1,sum\n0,0,1,1\n1,1,1,2\nsum,1,2,\n");
    }
}
