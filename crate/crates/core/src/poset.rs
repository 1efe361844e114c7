//! Finite posets given by their Hasse diagram on indices `0..len`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Default limit on enumerated elements or intervals.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Upper bound on the work an exhaustive operation may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidArgument("budget must be positive".into()));
        }
        Ok(Budget(limit))
    }

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.0
    }

    pub fn check(&self, what: &'static str, amount: u64) -> Result<()> {
        if amount > self.0 {
            Err(Error::BudgetExceeded { what, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

/// Hasse diagram with both cover directions.
#[derive(Debug, Clone)]
pub struct Hasse {
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
}

impl Hasse {
    /// Builds the diagram from the upper covers of every element.
    pub fn from_up_covers(up: Vec<Vec<u32>>) -> Self {
        let mut down = vec![Vec::new(); up.len()];
        for (i, covers) in up.iter().enumerate() {
            for &j in covers {
                down[j as usize].push(i as u32);
            }
        }
        Hasse { up, down }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn up(&self, i: usize) -> &[u32] {
        &self.up[i]
    }

    pub fn down(&self, i: usize) -> &[u32] {
        &self.down[i]
    }

    /// Elements reachable upwards from `i`, including `i`.
    pub fn up_set(&self, i: usize) -> Vec<u32> {
        bfs(&self.up, i)
    }

    /// Calls `f(s, t)` for every interval `s <= t`, grouped by `t` in index
    /// order. The down-set of each `t` is found by backward search, so the
    /// work is proportional to the number of intervals.
    pub fn for_each_interval<F>(&self, budget: Budget, mut f: F) -> Result<u64>
    where
        F: FnMut(usize, usize),
    {
        self.for_each_interval_in(0..self.len(), budget, &mut f)
    }

    /// Same as [`Hasse::for_each_interval`] restricted to upper elements in `tops`.
    pub fn for_each_interval_in<F>(&self, tops: std::ops::Range<usize>, budget: Budget, f: &mut F) -> Result<u64>
    where
        F: FnMut(usize, usize),
    {
        let mut stamp = vec![u32::MAX; self.len()];
        let mut queue = VecDeque::new();
        let mut count = 0u64;
        for t in tops {
            stamp[t] = t as u32;
            queue.push_back(t as u32);
            while let Some(s) = queue.pop_front() {
                count += 1;
                budget.check("intervals", count)?;
                f(s as usize, t);
                for &d in &self.down[s as usize] {
                    if stamp[d as usize] != t as u32 {
                        stamp[d as usize] = t as u32;
                        queue.push_back(d);
                    }
                }
            }
        }
        Ok(count)
    }
}

fn bfs(adj: &[Vec<u32>], start: usize) -> Vec<u32> {
    let mut seen = vec![false; adj.len()];
    let mut out = vec![start as u32];
    seen[start] = true;
    let mut head = 0;
    while head < out.len() {
        let cur = out[head] as usize;
        head += 1;
        for &next in &adj[cur] {
            if !seen[next as usize] {
                seen[next as usize] = true;
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_intervals() {
        // 0 < 1 < 2
        let h = Hasse::from_up_covers(vec![vec![1], vec![2], vec![]]);
        let mut pairs = vec![];
        let count = h
            .for_each_interval(Budget::default(), |s, t| pairs.push((s, t)))
            .unwrap();
        assert_eq!(count, 6);
        assert_eq!(h.up_set(0).len(), 3);
        assert_eq!(h.down(2), &[1]);
    }

    #[test]
    fn budget_is_enforced() {
        let h = Hasse::from_up_covers(vec![vec![1], vec![2], vec![]]);
        let err = h.for_each_interval(Budget::new(5).unwrap(), |_, _| {}).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                what: "intervals",
                limit: 5
            }
        );
        assert!(Budget::new(0).is_err());
    }
}
