//! The Tamari lattice on binary trees of a fixed size, with its interval
//! enumeration and statistic histograms.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poset::{Budget, Hasse};
use crate::stats::StatTable;
use crate::trees::{all_trees, BinaryTree};

/// Per-worker histogram keyed by statistic values.
type Counts = HashMap<Vec<usize>, u64>;

/// Per-tree statistics, computed once per lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    pub des: usize,
    pub asc: usize,
    pub ell: usize,
    /// Bit `j` set iff canopy entry `j + 1` is `-`.
    pub canopy_minus: u64,
}

/// One interval `s <= t` as handed to interval callbacks.
#[derive(Debug, Clone, Copy)]
pub struct IntervalRef<'a> {
    pub s: usize,
    pub t: usize,
    pub lower: &'a TreeStats,
    pub upper: &'a TreeStats,
}

impl IntervalRef<'_> {
    /// `des(s) + asc(t)`, the number of canopy agreements.
    pub fn k(&self) -> usize {
        self.lower.des + self.upper.asc
    }
}

/// `Tam(n)` with trees indexed in canonical order.
#[derive(Debug, Clone)]
pub struct TamariLattice {
    n: usize,
    trees: Vec<BinaryTree>,
    index: HashMap<BinaryTree, u32>,
    stats: Vec<TreeStats>,
    hasse: Hasse,
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32);
    for i in 0..n {
        c = c * (2 * (2 * i as u64 + 1)) / (i as u64 + 2);
    }
    c
}

impl TamariLattice {
    pub fn new(n: usize, budget: Budget) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Tam(n) needs n >= 1".into()));
        }
        if n > 63 {
            return Err(Error::InvalidArgument("canopy bitmask supports n <= 64".into()));
        }
        let count = u64::try_from(catalan(n)).unwrap_or(u64::MAX);
        budget.check("trees", count)?;
        let trees = all_trees(n);
        let index: HashMap<BinaryTree, u32> = trees.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
        let stats = trees.iter().map(tree_stats).collect();
        let up = trees
            .iter()
            .map(|t| t.rotations_up().iter().map(|u| index[u]).collect())
            .collect();
        Ok(TamariLattice {
            n,
            trees,
            index,
            stats,
            hasse: Hasse::from_up_covers(up),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[BinaryTree] {
        &self.trees
    }

    pub fn tree(&self, i: usize) -> &BinaryTree {
        &self.trees[i]
    }

    pub fn index_of(&self, t: &BinaryTree) -> Option<usize> {
        self.index.get(t).map(|&i| i as usize)
    }

    pub fn stats(&self, i: usize) -> &TreeStats {
        &self.stats[i]
    }

    pub fn hasse(&self) -> &Hasse {
        &self.hasse
    }

    /// Order test by reachability in the rotation digraph. Slow; used as the
    /// reference for [`crate::trees::tamari_leq`].
    pub fn leq_by_rotations(&self, s: usize, t: usize) -> bool {
        self.hasse.up_set(s).contains(&(t as u32))
    }

    /// Calls `f` once for every interval.
    pub fn for_each_interval<F>(&self, budget: Budget, mut f: F) -> Result<u64>
    where
        F: FnMut(IntervalRef<'_>),
    {
        self.hasse.for_each_interval(budget, |s, t| {
            f(IntervalRef {
                s,
                t,
                lower: &self.stats[s],
                upper: &self.stats[t],
            })
        })
    }

    /// Histogram of intervals keyed by `key`, optionally split by upper tree
    /// across `threads` workers. The result does not depend on `threads`.
    pub fn interval_table<K>(
        &self,
        axes: Vec<&'static str>,
        key: K,
        budget: Budget,
        threads: usize,
    ) -> Result<StatTable>
    where
        K: Fn(&IntervalRef<'_>) -> Vec<usize> + Sync,
    {
        let threads = threads.clamp(1, self.len().max(1));
        let chunk = self.len().div_ceil(threads);
        let parts: Vec<Result<(Counts, u64)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let range = (w * chunk).min(self.len())..((w + 1) * chunk).min(self.len());
                    let key = &key;
                    scope.spawn(move || {
                        let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
                        let mut f = |s: usize, t: usize| {
                            let iv = IntervalRef {
                                s,
                                t,
                                lower: &self.stats[s],
                                upper: &self.stats[t],
                            };
                            *counts.entry(key(&iv)).or_default() += 1;
                        };
                        let seen = self.hasse.for_each_interval_in(range, budget, &mut f)?;
                        Ok((counts, seen))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut table = StatTable::new(self.n, axes);
        let mut total = 0u64;
        for part in parts {
            let (counts, seen) = part?;
            total += seen;
            budget.check("intervals", total)?;
            for (k, v) in counts {
                table.add(&k, v);
            }
        }
        Ok(table)
    }

    /// Histogram of `des(s) + asc(t)`.
    pub fn interval_histogram(&self, budget: Budget, threads: usize) -> Result<StatTable> {
        self.interval_table(vec!["k"], |iv| vec![iv.k()], budget, threads)
    }

    /// Histogram over `(ell(s), des(s) + asc(t))`.
    pub fn refined_by_ell(&self, budget: Budget, threads: usize) -> Result<StatTable> {
        self.interval_table(vec!["ell", "k"], |iv| vec![iv.lower.ell, iv.k()], budget, threads)
    }

    /// Histogram over `(des(s), asc(t))`.
    pub fn refined_by_des_asc(&self, budget: Budget, threads: usize) -> Result<StatTable> {
        self.interval_table(
            vec!["des", "asc"],
            |iv| vec![iv.lower.des, iv.upper.asc],
            budget,
            threads,
        )
    }

    /// Histogram over the canopy triple `(both -, both +, - in s and + in t)`.
    pub fn canopy_triples(&self, budget: Budget, threads: usize) -> Result<StatTable> {
        let mask = (1u64 << (self.n - 1)) - 1;
        self.interval_table(
            vec!["minus", "plus", "mixed"],
            move |iv| {
                let (a, b) = (iv.lower.canopy_minus, iv.upper.canopy_minus);
                vec![
                    (a & b).count_ones() as usize,
                    (!a & !b & mask).count_ones() as usize,
                    (a & !b).count_ones() as usize,
                ]
            },
            budget,
            threads,
        )
    }
}

fn tree_stats(t: &BinaryTree) -> TreeStats {
    let canopy = t.canopy().expect("nonempty tree");
    let canopy_minus = canopy
        .0
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == crate::trees::Sign::Minus)
        .fold(0u64, |acc, (j, _)| acc | 1 << j);
    TreeStats {
        des: t.des().expect("nonempty tree"),
        asc: t.asc().expect("nonempty tree"),
        ell: t.ell(),
        canopy_minus,
    }
}
