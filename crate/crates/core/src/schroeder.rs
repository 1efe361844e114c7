//! Schröder trees: faces of the associahedron.
//!
//! A Schröder tree with `n + 1` leaves indexes a face of the
//! `(n - 1)`-dimensional associahedron; binary trees are its vertices and
//! the corolla is the whole polytope.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trees::{BinaryTree, MAX_PARSE_DEPTH};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchroederTree {
    Leaf,
    /// At least two children.
    Node(Vec<SchroederTree>),
}

impl SchroederTree {
    pub fn node(children: Vec<SchroederTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::InvalidArgument(
                "internal nodes need at least two children".into(),
            ));
        }
        Ok(SchroederTree::Node(children))
    }

    /// The corolla with `leaves` leaves, or a leaf if `leaves == 1`.
    pub fn corolla(leaves: usize) -> Self {
        if leaves <= 1 {
            SchroederTree::Leaf
        } else {
            SchroederTree::Node(vec![SchroederTree::Leaf; leaves])
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            SchroederTree::Leaf => 1,
            SchroederTree::Node(c) => c.iter().map(Self::leaves).sum(),
        }
    }

    /// `n`, the number of nodes of its binary refinements.
    pub fn n(&self) -> usize {
        self.leaves() - 1
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            SchroederTree::Leaf => 0,
            SchroederTree::Node(c) => 1 + c.iter().map(Self::internal_nodes).sum::<usize>(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.n() - self.internal_nodes()
    }

    pub fn is_binary(&self) -> bool {
        match self {
            SchroederTree::Leaf => true,
            SchroederTree::Node(c) => c.len() == 2 && c.iter().all(Self::is_binary),
        }
    }

    pub fn from_binary(t: &BinaryTree) -> Self {
        from_binary_contracting(t, &|_| false)
    }

    /// Refinement replacing each `p`-ary node by a left comb.
    pub fn min_tree(&self) -> BinaryTree {
        self.refine(false)
    }

    /// Refinement replacing each `p`-ary node by a right comb.
    pub fn max_tree(&self) -> BinaryTree {
        self.refine(true)
    }

    fn refine(&self, right: bool) -> BinaryTree {
        let SchroederTree::Node(children) = self else {
            return BinaryTree::empty();
        };
        let parts: Vec<BinaryTree> = children.iter().map(|c| c.refine(right)).collect();
        if right {
            let mut it = parts.into_iter().rev();
            let last = it.next().expect("two children");
            it.fold(last, |acc, p| BinaryTree::node(p, acc))
        } else {
            let mut it = parts.into_iter();
            let first = it.next().expect("two children");
            it.fold(first, BinaryTree::node)
        }
    }

    /// Leaf ranges `(first, last)` of the non-root internal nodes.
    pub fn internal_ranges(&self) -> Vec<(usize, usize)> {
        fn walk(t: &SchroederTree, offset: usize, root: bool, out: &mut Vec<(usize, usize)>) -> usize {
            match t {
                SchroederTree::Leaf => 1,
                SchroederTree::Node(children) => {
                    let mut width = 0;
                    for c in children {
                        width += walk(c, offset + width, false, out);
                    }
                    if !root {
                        out.push((offset, offset + width - 1));
                    }
                    width
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, true, &mut out);
        out.sort_unstable();
        out
    }

    /// The Schröder trees with two internal nodes obtained by contracting all
    /// internal edges but one. These are the facets containing this face.
    pub fn two_node_contractions(&self) -> Vec<SchroederTree> {
        let leaves = self.leaves();
        self.internal_ranges()
            .into_iter()
            .map(|r| two_node_tree(leaves, r))
            .collect()
    }

    /// All Schröder trees with `leaves` leaves, in canonical order.
    pub fn all(leaves: usize) -> Vec<SchroederTree> {
        let mut by_leaves: Vec<Vec<SchroederTree>> = vec![vec![], vec![SchroederTree::Leaf]];
        for m in 2..=leaves {
            let mut level = Vec::new();
            // sequences of at least two subtrees with m leaves in total
            let mut seqs: Vec<(usize, Vec<SchroederTree>)> = vec![(0, vec![])];
            while let Some((used, seq)) = seqs.pop() {
                if used == m {
                    if seq.len() >= 2 {
                        level.push(SchroederTree::Node(seq));
                    }
                    continue;
                }
                for (first, trees) in by_leaves.iter().enumerate().take(m - used + 1).skip(1) {
                    if first == m {
                        continue;
                    }
                    for c in trees {
                        let mut next = seq.clone();
                        next.push(c.clone());
                        seqs.push((used + first, next));
                    }
                }
            }
            level.sort();
            by_leaves.push(level);
        }
        by_leaves.get(leaves).cloned().unwrap_or_default()
    }
}

/// The Schröder tree with two internal nodes whose lower node spans the
/// leaves `lo..=hi`.
pub fn two_node_tree(leaves: usize, (lo, hi): (usize, usize)) -> SchroederTree {
    let mut root = Vec::with_capacity(leaves - (hi - lo));
    root.extend(std::iter::repeat_n(SchroederTree::Leaf, lo));
    root.push(SchroederTree::corolla(hi - lo + 1));
    root.extend(std::iter::repeat_n(SchroederTree::Leaf, leaves - 1 - hi));
    SchroederTree::Node(root)
}

/// Converts a binary tree, contracting the edge above every node whose
/// inorder label (from 0) satisfies `contracted`.
pub fn from_binary_contracting(t: &BinaryTree, contracted: &dyn Fn(usize) -> bool) -> SchroederTree {
    fn children(t: &BinaryTree, offset: usize, contracted: &dyn Fn(usize) -> bool, out: &mut Vec<SchroederTree>) {
        let (l, r) = (t.left().expect("node"), t.right().expect("node"));
        let label = offset + l.size();
        for (c, c_offset) in [(l, offset), (r, label + 1)] {
            if c.is_empty() {
                out.push(SchroederTree::Leaf);
                continue;
            }
            let c_label = c_offset + c.left().expect("node").size();
            if contracted(c_label) {
                children(c, c_offset, contracted, out);
            } else {
                let mut sub = Vec::new();
                children(c, c_offset, contracted, &mut sub);
                out.push(SchroederTree::Node(sub));
            }
        }
    }
    if t.is_empty() {
        return SchroederTree::Leaf;
    }
    let mut root = Vec::new();
    children(t, 0, contracted, &mut root);
    SchroederTree::Node(root)
}

impl fmt::Display for SchroederTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchroederTree::Leaf => Ok(()),
            SchroederTree::Node(children) => {
                f.write_str("(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for SchroederTree {
    type Err = Error;

    /// Parses `(c1,...,cp)` with `p >= 2`; a leaf is written as nothing,
    /// `.` or `·`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut pos = 0;
        let tree = parse_schroeder(s, &mut pos, 0)?;
        if pos != s.len() {
            return Err(Error::parse(pos, "trailing input"));
        }
        Ok(tree)
    }
}

fn parse_schroeder(s: &str, pos: &mut usize, depth: usize) -> Result<SchroederTree> {
    if depth > MAX_PARSE_DEPTH {
        return Err(Error::parse(*pos, "nesting too deep"));
    }
    let rest = &s[*pos..];
    if rest.starts_with('.') {
        *pos += 1;
        return Ok(SchroederTree::Leaf);
    }
    if rest.starts_with('·') {
        *pos += '·'.len_utf8();
        return Ok(SchroederTree::Leaf);
    }
    if !rest.starts_with('(') {
        return Ok(SchroederTree::Leaf);
    }
    let open = *pos;
    *pos += 1;
    let mut children = vec![parse_schroeder(s, pos, depth + 1)?];
    loop {
        match s.as_bytes().get(*pos) {
            Some(b',') => {
                *pos += 1;
                children.push(parse_schroeder(s, pos, depth + 1)?);
            }
            Some(b')') => {
                *pos += 1;
                break;
            }
            _ => return Err(Error::parse(*pos, "expected ',' or ')'")),
        }
    }
    if children.len() < 2 {
        return Err(Error::parse(open, "internal node with fewer than two children"));
    }
    Ok(SchroederTree::Node(children))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{all_trees, tamari_leq};

    fn st(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    #[test]
    fn counts_are_super_catalan() {
        let counts: Vec<usize> = (1..=6).map(|l| SchroederTree::all(l).len()).collect();
        assert_eq!(counts, [1, 1, 3, 11, 45, 197]);
    }

    #[test]
    fn binary_refinements() {
        for t in all_trees(4) {
            let f = SchroederTree::from_binary(&t);
            assert!(f.is_binary());
            assert_eq!(f.dimension(), 0);
            assert_eq!(f.min_tree(), t);
            assert_eq!(f.max_tree(), t);
        }
        let c = SchroederTree::corolla(5);
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.min_tree(), BinaryTree::left_comb(4));
        assert_eq!(c.max_tree(), BinaryTree::right_comb(4));
    }

    #[test]
    fn min_below_max() {
        for f in SchroederTree::all(5) {
            assert!(tamari_leq(&f.min_tree(), &f.max_tree()).unwrap());
            assert_eq!(f.internal_nodes() - 1, f.n() - 1 - f.dimension());
        }
    }

    #[test]
    fn contractions() {
        assert!(SchroederTree::corolla(4).two_node_contractions().is_empty());
        let t = SchroederTree::from_binary(&BinaryTree::left_comb(3));
        let c = t.two_node_contractions();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.internal_nodes() == 2 && x.leaves() == 4));
        assert_eq!(two_node_tree(4, (1, 2)), st("(,(,),)"));
    }

    #[test]
    fn contract_by_labels() {
        // left comb on 3 nodes: labels 0 (deepest), 1, 2 (root)
        let t = BinaryTree::left_comb(3);
        assert_eq!(from_binary_contracting(&t, &|l| l == 1), st("((,),,)"));
        assert_eq!(from_binary_contracting(&t, &|_| true), SchroederTree::corolla(4));
    }

    #[test]
    fn format() {
        assert_eq!(st("(,)"), SchroederTree::corolla(2));
        assert_eq!(st("(.,·)"), SchroederTree::corolla(2));
        assert_eq!(SchroederTree::corolla(3).to_string(), "(,,)");
        for f in SchroederTree::all(5) {
            assert_eq!(st(&f.to_string()), f);
        }
        assert!("(())".parse::<SchroederTree>().is_err());
        assert!("(,".parse::<SchroederTree>().is_err());
        assert!("(,))".parse::<SchroederTree>().is_err());
        assert_eq!(st(""), SchroederTree::Leaf);
    }
}
