//! Plane binary trees as elements of the Tamari lattice.
//!
//! Nodes carry implicit inorder labels `1..=n`. Labels are recomputed on
//! demand (see [`Shape`]) and never stored, so rotations cannot corrupt them.
//! Edges are oriented towards the root: the edge above a right child goes
//! from a larger label to a smaller one (a descent), the edge above a left
//! child from a smaller label to a larger one (an ascent).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximal nesting depth accepted by the string parsers.
pub const MAX_PARSE_DEPTH: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Node {
    left: BinaryTree,
    right: BinaryTree,
    size: usize,
}

/// A plane binary tree. The empty tree has no node.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryTree(Option<Arc<Node>>);

impl BinaryTree {
    pub fn empty() -> Self {
        BinaryTree(None)
    }

    /// The tree `Y` with a single node.
    pub fn single() -> Self {
        Self::node(Self::empty(), Self::empty())
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        let size = 1 + left.size() + right.size();
        BinaryTree(Some(Arc::new(Node { left, right, size })))
    }

    /// Left comb on `n` nodes: the minimum of the Tamari lattice.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Self::empty(), |acc, _| Self::node(acc, Self::empty()))
    }

    /// Right comb on `n` nodes: the maximum of the Tamari lattice.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(Self::empty(), |acc, _| Self::node(Self::empty(), acc))
    }

    pub fn size(&self) -> usize {
        self.0.as_ref().map_or(0, |node| node.size)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        self.0.as_ref().map(|node| &node.left)
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        self.0.as_ref().map(|node| &node.right)
    }

    fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        self.0.as_ref().map(|node| (&node.left, &node.right))
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyTree)
        } else {
            Ok(())
        }
    }

    /// Number of descents: edges `i -> j` with `i > j`, i.e. right children.
    /// Equals the number of trees covered by `self`.
    pub fn des(&self) -> Result<usize> {
        self.require_nonempty()?;
        Ok(self.count_edges(Side::Right))
    }

    /// Number of ascents: edges `i -> j` with `i < j`, i.e. left children.
    /// Equals the number of trees covering `self`.
    pub fn asc(&self) -> Result<usize> {
        self.require_nonempty()?;
        Ok(self.count_edges(Side::Left))
    }

    fn count_edges(&self, side: Side) -> usize {
        match self.children() {
            None => 0,
            Some((l, r)) => {
                let here = match side {
                    Side::Left => usize::from(!l.is_empty()),
                    Side::Right => usize::from(!r.is_empty()),
                };
                here + l.count_edges(side) + r.count_edges(side)
            }
        }
    }

    /// Trees covering `self`: one right rotation `(y(A,B),C) -> y(A,(B,C))`
    /// at each node with a nonempty left subtree.
    pub fn rotations_up(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        self.collect_rotations(Side::Left, &mut out);
        out
    }

    /// Trees covered by `self`: one left rotation `(A,y(B,C)) -> y((A,B),C)`
    /// at each node with a nonempty right subtree.
    pub fn rotations_down(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        self.collect_rotations(Side::Right, &mut out);
        out
    }

    fn collect_rotations(&self, pivot: Side, out: &mut Vec<BinaryTree>) {
        let Some((l, r)) = self.children() else {
            return;
        };
        match pivot {
            Side::Left => {
                if let Some((a, b)) = l.children() {
                    out.push(Self::node(a.clone(), Self::node(b.clone(), r.clone())));
                }
            }
            Side::Right => {
                if let Some((b, c)) = r.children() {
                    out.push(Self::node(Self::node(l.clone(), b.clone()), c.clone()));
                }
            }
        }
        let mut below = Vec::new();
        l.collect_rotations(pivot, &mut below);
        out.extend(below.drain(..).map(|l2| Self::node(l2, r.clone())));
        r.collect_rotations(pivot, &mut below);
        out.extend(below.into_iter().map(|r2| Self::node(l.clone(), r2)));
    }

    /// Sizes of the right subtrees of the nodes, listed in inorder.
    ///
    /// A right rotation only grows one entry, and the Tamari order is the
    /// componentwise order on these vectors.
    pub fn right_subtree_sizes(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.push_right_sizes(&mut out);
        out
    }

    fn push_right_sizes(&self, out: &mut Vec<usize>) {
        if let Some((l, r)) = self.children() {
            l.push_right_sizes(out);
            out.push(r.size());
            r.push_right_sizes(out);
        }
    }

    /// Length of the left branch: node-to-node edges on the path from the
    /// root to the leftmost leaf. Zero for `Y` and for the empty tree.
    pub fn ell(&self) -> usize {
        let mut count = 0;
        let mut cur = self;
        while let Some(l) = cur.left() {
            if l.is_empty() {
                break;
            }
            count += 1;
            cur = l;
        }
        count
    }

    /// `S / S'`: grafts the root of `self` on the leftmost leaf of `onto`.
    pub fn graft_left(&self, onto: &BinaryTree) -> BinaryTree {
        match onto.children() {
            None => self.clone(),
            Some((l, r)) => Self::node(self.graft_left(l), r.clone()),
        }
    }

    /// `S' \ S`: grafts the root of `self` on the rightmost leaf of `onto`.
    pub fn graft_right(&self, onto: &BinaryTree) -> BinaryTree {
        match onto.children() {
            None => self.clone(),
            Some((l, r)) => Self::node(l.clone(), self.graft_right(r)),
        }
    }

    /// Nodes on the left branch, from the root downwards.
    fn left_branch(&self) -> Vec<&BinaryTree> {
        let mut out = Vec::new();
        let mut cur = self;
        while !cur.is_empty() {
            out.push(cur);
            cur = cur.left().expect("nonempty");
        }
        out
    }

    /// Replaces the subtree at depth `depth` on the left branch by the empty tree.
    fn cut_left_branch(&self, depth: usize) -> BinaryTree {
        if depth == 0 {
            return Self::empty();
        }
        let (l, r) = self.children().expect("cut below a leaf");
        Self::node(l.cut_left_branch(depth - 1), r.clone())
    }

    /// Every grafting decomposition `S = S_0 / ... / S_k` of `self`, as the
    /// list of components `[S_0, ..., S_k]`. There are `2^ell` of them.
    pub fn grafting_decompositions(&self) -> Vec<Vec<BinaryTree>> {
        if self.is_empty() {
            return vec![];
        }
        let ell = self.ell();
        let branch = self.left_branch();
        (0u64..1 << ell)
            .map(|mask| {
                // bit i set: cut the edge between branch[i] and branch[i + 1]
                let mut cuts: Vec<usize> = (0..ell).filter(|i| mask >> i & 1 == 1).collect();
                cuts.reverse();
                let mut parts = Vec::with_capacity(cuts.len() + 1);
                let mut upper = ell + 1;
                for &c in cuts.iter().chain(std::iter::once(&usize::MAX)) {
                    let top = if c == usize::MAX { 0 } else { c + 1 };
                    parts.push(branch[top].cut_left_branch(upper - top));
                    upper = top;
                }
                parts
            })
            .collect()
    }

    /// Flattened view with inorder labels, parents and subtree ranges.
    pub fn shape(&self) -> Shape {
        Shape::new(self)
    }

    /// Canopy vector, using the empty-right-subtree characterization.
    pub fn canopy(&self) -> Result<CanopyVector> {
        self.require_nonempty()?;
        Ok(canopy_by(self, CanopyRule::EmptyRightSubtree))
    }

    /// Lexicographic on (left, right); callers have already compared sizes.
    fn cmp_same_size(&self, other: &Self) -> Ordering {
        match (self.children(), other.children()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some((l1, r1)), Some((l2, r2))) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Left,
    Right,
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.cmp_same_size(other))
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `s <= t` in the Tamari lattice.
pub fn tamari_leq(s: &BinaryTree, t: &BinaryTree) -> Result<bool> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    let (a, b) = (s.right_subtree_sizes(), t.right_subtree_sizes());
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// All binary trees with `n` nodes, in increasing canonical order.
pub fn all_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::empty()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for k in 0..m {
            for l in &by_size[k] {
                for r in &by_size[m - 1 - k] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(n)
}

/// The unique maximal common grafting decomposition of an interval `s <= t`:
/// pairs `(S_i, T_i)` with `n(S_i) = n(T_i)`, `S = S_0 / ... / S_l`,
/// `T = T_0 / ... / T_l` and `l = ell(t)`.
pub fn decompose_interval(s: &BinaryTree, t: &BinaryTree) -> Result<Vec<(BinaryTree, BinaryTree)>> {
    if !tamari_leq(s, t)? {
        return Err(Error::NotAnInterval);
    }
    if t.is_empty() {
        return Ok(vec![]);
    }
    let t_branch = t.left_branch();
    let s_branch = s.left_branch();
    let ell = t_branch.len() - 1;
    let mut out = Vec::with_capacity(ell + 1);
    // walk both left branches bottom-up, matching cumulative sizes
    let mut s_prev: Option<usize> = None;
    let mut cumulative_prev = 0usize;
    for depth in (0..=ell).rev() {
        let t_part = BinaryTree::node(BinaryTree::empty(), t_branch[depth].right().unwrap().clone());
        let cumulative = t_branch[depth].size();
        let s_depth = s_branch
            .iter()
            .position(|node| node.size() == cumulative)
            .ok_or(Error::NotAnInterval)?;
        let s_part = match s_prev {
            None => s_branch[s_depth].clone(),
            Some(prev) => s_branch[s_depth].cut_left_branch(prev - s_depth),
        };
        debug_assert_eq!(s_part.size(), cumulative - cumulative_prev);
        out.push((s_part, t_part));
        s_prev = Some(s_depth);
        cumulative_prev = cumulative;
    }
    Ok(out)
}

/// Inverse of [`decompose_interval`]: grafts the components back together.
pub fn reassemble(parts: &[(BinaryTree, BinaryTree)]) -> (BinaryTree, BinaryTree) {
    parts
        .iter()
        .fold((BinaryTree::empty(), BinaryTree::empty()), |(s, t), (si, ti)| {
            (s.graft_left(si), t.graft_left(ti))
        })
}

/// Per-node data for a tree, indexed by inorder label minus one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub parent: Vec<Option<usize>>,
    /// Inclusive inorder range `(lo, hi)` covered by each subtree.
    pub range: Vec<(usize, usize)>,
    pub root: Option<usize>,
}

impl Shape {
    fn new(tree: &BinaryTree) -> Self {
        let n = tree.size();
        let mut shape = Shape {
            left: vec![None; n],
            right: vec![None; n],
            parent: vec![None; n],
            range: vec![(0, 0); n],
            root: None,
        };
        shape.root = shape.fill(tree, 0, None);
        shape
    }

    fn fill(&mut self, tree: &BinaryTree, offset: usize, parent: Option<usize>) -> Option<usize> {
        let (l, r) = tree.children()?;
        let label = offset + l.size();
        self.parent[label] = parent;
        self.range[label] = (offset, offset + tree.size() - 1);
        self.left[label] = self.fill(l, offset, Some(label));
        self.right[label] = self.fill(r, label + 1, Some(label));
        Some(label)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Descent edges, identified by their lower endpoint (a right child).
    pub fn descent_nodes(&self) -> Vec<usize> {
        self.right.iter().flatten().copied().collect()
    }

    /// Ascent edges, identified by their lower endpoint (a left child).
    pub fn ascent_nodes(&self) -> Vec<usize> {
        self.left.iter().flatten().copied().collect()
    }

    pub fn is_ancestor(&self, ancestor: usize, mut node: usize) -> bool {
        while let Some(p) = self.parent[node] {
            if p == ancestor {
                return true;
            }
            node = p;
        }
        false
    }
}

/// A canopy entry. `Minus < Plus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanopyVector(pub Vec<Sign>);

impl CanopyVector {
    pub fn count(&self, sign: Sign) -> usize {
        self.0.iter().filter(|&&s| s == sign).count()
    }

    /// Componentwise comparison under `- <= +`.
    pub fn leq(&self, other: &CanopyVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for CanopyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

/// The equivalent characterizations of a `-` canopy entry at position `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanopyRule {
    /// Leaf `j + 1` is a right leaf.
    RightLeaf,
    /// There is an oriented path from node `j` to node `j + 1`.
    OrientedPath,
    /// Node `j` has an empty right subtree.
    EmptyRightSubtree,
    /// Node `j + 1` has a nonempty left subtree.
    NonemptyLeftSubtree,
}

pub fn canopy_by(tree: &BinaryTree, rule: CanopyRule) -> CanopyVector {
    let n = tree.size();
    if n == 0 {
        return CanopyVector(vec![]);
    }
    let shape = tree.shape();
    let minus: Vec<bool> = match rule {
        CanopyRule::RightLeaf => {
            let mut is_right = Vec::with_capacity(n + 1);
            push_leaf_sides(tree, false, &mut is_right);
            // leaves are numbered 1..=n+1; entry j (1-based) looks at leaf j+1
            (1..n).map(|j| is_right[j]).collect()
        }
        CanopyRule::OrientedPath => (0..n - 1).map(|j| shape.is_ancestor(j + 1, j)).collect(),
        CanopyRule::EmptyRightSubtree => (0..n - 1).map(|j| shape.right[j].is_none()).collect(),
        CanopyRule::NonemptyLeftSubtree => (1..n).map(|j| shape.left[j].is_some()).collect(),
    };
    CanopyVector(
        minus
            .into_iter()
            .map(|m| if m { Sign::Minus } else { Sign::Plus })
            .collect(),
    )
}

fn push_leaf_sides(tree: &BinaryTree, is_right: bool, out: &mut Vec<bool>) {
    match tree.children() {
        None => out.push(is_right),
        Some((l, r)) => {
            push_leaf_sides(l, false, out);
            push_leaf_sides(r, true, out);
        }
    }
}

/// Number of positions where the canopies of `s` and `t` coincide.
pub fn agree(s: &BinaryTree, t: &BinaryTree) -> Result<usize> {
    if s.size() != t.size() {
        return Err(Error::SizeMismatch(s.size(), t.size()));
    }
    if s.is_empty() {
        return Ok(0);
    }
    let (a, b) = (s.canopy()?, t.canopy()?);
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x == y).count())
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => Ok(()),
            Some((l, r)) if l.is_empty() && r.is_empty() => f.write_str("()"),
            Some((l, r)) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("BinaryTree(empty)")
        } else {
            write!(f, "BinaryTree({self})")
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    /// Parses `"" | "." | "·" | "()" | "(L,R)"`, where either side of
    /// `(L,R)` may be omitted for an empty subtree.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "." || trimmed == "·" {
            return Ok(BinaryTree::empty());
        }
        let bytes = trimmed.as_bytes();
        let mut pos = 0;
        let tree = parse_binary(bytes, &mut pos, 0)?;
        if pos != bytes.len() {
            return Err(Error::parse(pos, "trailing input"));
        }
        Ok(tree)
    }
}

fn parse_binary(bytes: &[u8], pos: &mut usize, depth: usize) -> Result<BinaryTree> {
    if depth > MAX_PARSE_DEPTH {
        return Err(Error::parse(*pos, "nesting too deep"));
    }
    if bytes.get(*pos) != Some(&b'(') {
        return Ok(BinaryTree::empty());
    }
    *pos += 1;
    if bytes.get(*pos) == Some(&b')') {
        *pos += 1;
        return Ok(BinaryTree::single());
    }
    let left = parse_binary(bytes, pos, depth + 1)?;
    if bytes.get(*pos) != Some(&b',') {
        return Err(Error::parse(*pos, "expected ','"));
    }
    *pos += 1;
    let right = parse_binary(bytes, pos, depth + 1)?;
    if bytes.get(*pos) != Some(&b')') {
        return Err(Error::parse(*pos, "expected ')'"));
    }
    *pos += 1;
    Ok(BinaryTree::node(left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, VecDeque};

    fn y() -> BinaryTree {
        BinaryTree::single()
    }

    fn tree(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn single_node_statistics() {
        assert_eq!(y().des(), Ok(0));
        assert_eq!(y().asc(), Ok(0));
        assert!(y().rotations_up().is_empty());
        assert!(y().rotations_down().is_empty());
        assert_eq!(y().ell(), 0);
    }

    #[test]
    fn empty_tree_rejected() {
        assert_eq!(BinaryTree::empty().des(), Err(Error::EmptyTree));
        assert_eq!(BinaryTree::empty().asc(), Err(Error::EmptyTree));
        assert_eq!(BinaryTree::empty().canopy(), Err(Error::EmptyTree));
    }

    #[test]
    fn combs() {
        let lc = BinaryTree::left_comb(3);
        assert_eq!((lc.des(), lc.asc()), (Ok(0), Ok(2)));
        let balanced = BinaryTree::node(y(), y());
        assert_eq!((balanced.des(), balanced.asc()), (Ok(1), Ok(1)));
        assert_eq!(BinaryTree::left_comb(2).rotations_up(), vec![BinaryTree::right_comb(2)]);
        assert_eq!(BinaryTree::left_comb(5).ell(), 4);
    }

    #[test]
    fn rotation_closure_reaches_all_five_trees() {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([BinaryTree::left_comb(3)]);
        while let Some(t) = queue.pop_front() {
            if seen.insert(t.clone()) {
                queue.extend(t.rotations_up());
            }
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn leq_basics() {
        for n in 1..6 {
            let (lo, hi) = (BinaryTree::left_comb(n), BinaryTree::right_comb(n));
            assert_eq!(tamari_leq(&lo, &hi), Ok(true));
            assert_eq!(tamari_leq(&lo, &lo), Ok(true));
        }
        assert_eq!(
            tamari_leq(&y(), &BinaryTree::left_comb(2)),
            Err(Error::SizeMismatch(1, 2))
        );
        let pairs = all_trees(3)
            .iter()
            .flat_map(|s| all_trees(3).into_iter().map(move |t| (s.clone(), t)))
            .filter(|(s, t)| tamari_leq(s, t).unwrap())
            .count();
        assert_eq!(pairs, 13);
    }

    #[test]
    fn canopy_examples() {
        assert!(BinaryTree::right_comb(5)
            .canopy()
            .unwrap()
            .0
            .iter()
            .all(|&s| s == Sign::Plus));
        assert_eq!(BinaryTree::left_comb(2).canopy().unwrap().0, vec![Sign::Minus]);
        let t = BinaryTree::right_comb(4);
        assert_eq!(agree(&t, &t), Ok(3));
    }

    #[test]
    fn grafting() {
        assert_eq!(y().graft_left(&y()), BinaryTree::left_comb(2));
        assert_eq!(y().graft_right(&y()), BinaryTree::right_comb(2));
        for t in all_trees(5) {
            let decomps = t.grafting_decompositions();
            assert_eq!(decomps.len(), 1 << t.ell());
            for parts in decomps {
                assert!(parts.iter().all(|p| !p.is_empty()));
                let back = parts.iter().fold(BinaryTree::empty(), |acc, p| acc.graft_left(p));
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn decompose_trivial_cases() {
        assert_eq!(decompose_interval(&y(), &y()), Ok(vec![(y(), y())]));
        let t = BinaryTree::right_comb(4);
        let s = BinaryTree::left_comb(4);
        assert_eq!(decompose_interval(&s, &t).unwrap().len(), 1);
        assert_eq!(decompose_interval(&t, &s), Err(Error::NotAnInterval));
    }

    #[test]
    fn format_round_trip() {
        assert_eq!(y().to_string(), "()");
        assert_eq!(BinaryTree::left_comb(2).to_string(), "((),)");
        assert_eq!(BinaryTree::right_comb(2).to_string(), "(,())");
        assert_eq!(tree("(,)"), y());
        assert_eq!(tree(""), BinaryTree::empty());
        assert_eq!(tree("·"), BinaryTree::empty());
        for t in all_trees(4) {
            assert_eq!(tree(&t.to_string()), t);
        }
        assert!("(()".parse::<BinaryTree>().is_err());
        assert!("()x".parse::<BinaryTree>().is_err());
    }

    #[test]
    fn canonical_order_is_sorted_generation_order() {
        let trees = all_trees(5);
        assert!(trees.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_trees(0), vec![BinaryTree::empty()]);
    }
}
