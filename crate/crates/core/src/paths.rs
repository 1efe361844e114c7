//! Dyck paths and the m-Tamari lattices on north/east paths.
//!
//! A path is a word in an up step (`U` or `N`) and a down step (`D` or
//! `E`). With parameter `m`, every prefix has at most `m` down steps per up
//! step and the whole path has exactly `m` per up step. Dyck paths are the
//! case `m = 1` written with `U`/`D`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poset::{Budget, Hasse};
use crate::stats::StatTable;
use crate::trees::BinaryTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    /// `U` / `D`
    Dyck,
    /// `N` / `E`
    NorthEast,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
    m: usize,
    alphabet: Alphabet,
}

impl LatticePath {
    /// Validates `steps` against parameter `m`.
    pub fn new(steps: Vec<Step>, m: usize, alphabet: Alphabet) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        if alphabet == Alphabet::Dyck && m != 1 {
            return Err(Error::InvalidArgument("Dyck paths have m = 1".into()));
        }
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => m as i64,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::parse(i, "path goes below the line"));
            }
        }
        if height != 0 {
            return Err(Error::parse(steps.len(), "path does not end on the line"));
        }
        Ok(LatticePath { steps, m, alphabet })
    }

    pub fn dyck(steps: Vec<Step>) -> Result<Self> {
        Self::new(steps, 1, Alphabet::Dyck)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Number of up steps.
    pub fn n(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    /// Down step followed by an up step.
    pub fn valleys(&self) -> usize {
        self.count_factor(Step::Down, Step::Up)
    }

    /// Two consecutive down steps.
    pub fn double_falls(&self) -> usize {
        self.count_factor(Step::Down, Step::Down)
    }

    fn count_factor(&self, a: Step, b: Step) -> usize {
        self.steps.windows(2).filter(|w| w[0] == a && w[1] == b).count()
    }

    /// Points on the base line strictly between the two endpoints.
    pub fn contacts(&self) -> usize {
        let mut height = 0i64;
        let mut count = 0;
        for s in &self.steps[..self.steps.len().saturating_sub(1)] {
            height += match s {
                Step::Up => self.m as i64,
                Step::Down => -1,
            };
            if height == 0 {
                count += 1;
            }
        }
        count
    }

    /// Paths covering `self`: for every down step followed by an up step,
    /// move the down step past the excursion that starts at the up step,
    /// i.e. the shortest factor with `m` down steps per up step.
    pub fn covers_up(&self) -> Vec<LatticePath> {
        let m = self.m as i64;
        let mut out = Vec::new();
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i] != Step::Down || self.steps[i + 1] != Step::Up {
                continue;
            }
            let mut balance = 0i64;
            let mut end = i + 1;
            for (j, s) in self.steps.iter().enumerate().skip(i + 1) {
                balance += match s {
                    Step::Up => m,
                    Step::Down => -1,
                };
                if balance == 0 {
                    end = j;
                    break;
                }
            }
            let mut steps = self.steps.clone();
            steps[i..=end].rotate_left(1);
            out.push(LatticePath {
                steps,
                m: self.m,
                alphabet: self.alphabet,
            });
        }
        out
    }

    /// Parses a word in `U`/`D` (then `m` must be 1) or `N`/`E`.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let s = s.trim();
        let mut steps = Vec::with_capacity(s.len());
        let mut alphabet = None;
        for (i, c) in s.char_indices() {
            let (step, a) = match c {
                'U' => (Step::Up, Alphabet::Dyck),
                'D' => (Step::Down, Alphabet::Dyck),
                'N' => (Step::Up, Alphabet::NorthEast),
                'E' => (Step::Down, Alphabet::NorthEast),
                _ => return Err(Error::parse(i, format!("unexpected character {c:?}"))),
            };
            if *alphabet.get_or_insert(a) != a {
                return Err(Error::parse(i, "mixed step alphabets"));
            }
            steps.push(step);
        }
        Self::new(steps, m, alphabet.unwrap_or(Alphabet::NorthEast))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (up, down) = match self.alphabet {
            Alphabet::Dyck => ('U', 'D'),
            Alphabet::NorthEast => ('N', 'E'),
        };
        for s in &self.steps {
            write!(f, "{}", if *s == Step::Up { up } else { down })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self}, m={})", self.m)
    }
}

/// The contour bijection: `pi(node(L, R)) = pi(L) U pi(R) D`.
pub fn tree_to_dyck(t: &BinaryTree) -> LatticePath {
    fn walk(t: &BinaryTree, out: &mut Vec<Step>) {
        if let (Some(l), Some(r)) = (t.left(), t.right()) {
            walk(l, out);
            out.push(Step::Up);
            walk(r, out);
            out.push(Step::Down);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    walk(t, &mut steps);
    LatticePath {
        steps,
        m: 1,
        alphabet: Alphabet::Dyck,
    }
}

/// Inverse of [`tree_to_dyck`]; `m` must be 1.
pub fn dyck_to_tree(p: &LatticePath) -> Result<BinaryTree> {
    if p.m != 1 {
        return Err(Error::InvalidArgument("only m = 1 paths encode binary trees".into()));
    }
    // Reading left to right, a stack of pending left parts; each U pushes the
    // tree built so far and each D closes node(left, right).
    let mut stack: Vec<BinaryTree> = Vec::new();
    let mut cur = BinaryTree::empty();
    for s in &p.steps {
        match s {
            Step::Up => {
                stack.push(cur);
                cur = BinaryTree::empty();
            }
            Step::Down => {
                let left = stack.pop().expect("validated path");
                cur = BinaryTree::node(left, cur);
            }
        }
    }
    Ok(cur)
}

/// Fuss-Catalan number `C((m + 1) n, n) / (m n + 1)`.
pub fn fuss_catalan(m: usize, n: usize) -> BigUint {
    crate::formulas::binomial_u((m + 1) * n, n) / BigUint::from(m * n + 1)
}

/// All elements of `Tam(m, n)` in lexicographic order (`N < E`).
pub fn m_tamari_elements(m: usize, n: usize, budget: Budget) -> Result<Vec<LatticePath>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let count = u64::try_from(fuss_catalan(m, n)).unwrap_or(u64::MAX);
    budget.check("paths", count)?;
    let alphabet = if m == 1 { Alphabet::Dyck } else { Alphabet::NorthEast };
    let mut out = Vec::with_capacity(count as usize);
    let mut steps = Vec::with_capacity((m + 1) * n);
    fn rec(m: usize, n: usize, ups: usize, downs: usize, steps: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if ups == n && downs == m * n {
            out.push(steps.clone());
            return;
        }
        if ups < n {
            steps.push(Step::Up);
            rec(m, n, ups + 1, downs, steps, out);
            steps.pop();
        }
        if downs < m * ups {
            steps.push(Step::Down);
            rec(m, n, ups, downs + 1, steps, out);
            steps.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, n, 0, 0, &mut steps, &mut raw);
    out.extend(raw.into_iter().map(|steps| LatticePath { steps, m, alphabet }));
    Ok(out)
}

/// `Tam(m, n)` with its Hasse diagram.
#[derive(Debug, Clone)]
pub struct MTamari {
    pub m: usize,
    pub n: usize,
    elements: Vec<LatticePath>,
    hasse: Hasse,
}

impl MTamari {
    pub fn new(m: usize, n: usize, budget: Budget) -> Result<Self> {
        let elements = m_tamari_elements(m, n, budget)?;
        let index: std::collections::HashMap<&LatticePath, u32> =
            elements.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let up = elements
            .iter()
            .map(|p| p.covers_up().iter().map(|q| index[q]).collect())
            .collect();
        let hasse = Hasse::from_up_covers(up);
        Ok(MTamari { m, n, elements, hasse })
    }

    pub fn elements(&self) -> &[LatticePath] {
        &self.elements
    }

    pub fn hasse(&self) -> &Hasse {
        &self.hasse
    }

    pub fn interval_count(&self, budget: Budget) -> Result<u64> {
        self.hasse.for_each_interval(budget, |_, _| {})
    }

    /// Histogram of `k = (elements covered by the lower end) + (elements
    /// covering the upper end)` over all intervals.
    pub fn interval_stats(&self, budget: Budget) -> Result<StatTable> {
        let mut counts = vec![0u64; 2 * self.elements.len().max(1)];
        let h = &self.hasse;
        h.for_each_interval(budget, |s, t| {
            counts[h.down(s).len() + h.up(t).len()] += 1;
        })?;
        let mut table = StatTable::new(self.n, vec!["k"]);
        for (k, c) in counts.into_iter().enumerate() {
            table.add(&[k], c);
        }
        Ok(table)
    }
}

/// Closed form for the number of intervals of `Tam(m, n)`:
/// `(m + 1) / (n (m n + 1)) C((m + 1)^2 n + m, n - 1)`.
pub fn m_tamari_interval_formula(m: usize, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let num = BigUint::from(m + 1) * crate::formulas::binomial_u((m + 1) * (m + 1) * n + m, n - 1);
    let den = BigUint::from(n * (m * n + 1));
    crate::formulas::exact_div_u(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::all_trees;

    fn path(s: &str) -> LatticePath {
        LatticePath::parse(s, 1).unwrap()
    }

    #[test]
    fn contour_examples() {
        assert_eq!(tree_to_dyck(&BinaryTree::single()).to_string(), "UD");
        let p = tree_to_dyck(&BinaryTree::left_comb(2));
        assert_eq!(p.to_string(), "UDUD");
        assert_eq!((p.valleys(), p.double_falls(), p.contacts()), (1, 0, 1));
        let q = tree_to_dyck(&BinaryTree::right_comb(3));
        assert_eq!(q.to_string(), "UUUDDD");
        assert_eq!((q.valleys(), q.double_falls(), q.contacts()), (0, 2, 0));
    }

    #[test]
    fn inverse_contour() {
        for n in 0..6 {
            for t in all_trees(n) {
                assert_eq!(dyck_to_tree(&tree_to_dyck(&t)).unwrap(), t);
            }
        }
    }

    #[test]
    fn cover_moves() {
        assert_eq!(path("UDUD").covers_up(), vec![path("UUDD")]);
        assert!(path("UUDD").covers_up().is_empty());
        let p = LatticePath::parse("NENEE", 2);
        assert!(p.is_err());
        let p = LatticePath::parse("NEENEE", 2).unwrap();
        assert_eq!(p.covers_up()[0].to_string(), "NENEEE");
    }

    #[test]
    fn parse_errors() {
        assert!(LatticePath::parse("DU", 1).is_err());
        assert!(LatticePath::parse("UDNE", 1).is_err());
        assert!(LatticePath::parse("UUD", 1).is_err());
        assert!(LatticePath::parse("UUDD", 2).is_err());
        assert!(LatticePath::parse("x", 1).is_err());
        assert_eq!(LatticePath::parse("", 3).unwrap().n(), 0);
    }

    #[test]
    fn element_counts() {
        assert_eq!(m_tamari_elements(1, 3, Budget::default()).unwrap().len(), 5);
        assert_eq!(m_tamari_elements(2, 3, Budget::default()).unwrap().len(), 12);
        let t = MTamari::new(2, 3, Budget::default()).unwrap();
        assert_eq!(t.interval_count(Budget::default()).unwrap(), 58);
        assert_eq!(m_tamari_interval_formula(2, 3).unwrap(), BigUint::from(58u32));
        assert!(m_tamari_elements(3, 6, Budget::new(100).unwrap()).is_err());
    }
}
