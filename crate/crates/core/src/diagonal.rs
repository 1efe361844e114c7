//! Faces of the cellular diagonal of the associahedron.
//!
//! The faces are the pairs `(F, G)` of faces of the associahedron with
//! `max(F) <= min(G)`. They are generated fiberwise: over an interval
//! `s <= t`, contract any set of descent edges of `s` to get `F` and any set
//! of ascent edges of `t` to get `G`.
//!
//! A face is internal when `F` and `G` lie in no common facet. Facets are
//! the Schröder trees with two internal nodes, so it is enough to compare
//! the two-node contractions of `F` and `G`; containment in a common proper
//! face implies containment in a common facet.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::formulas::binomial;
use crate::lattice::TamariLattice;
use crate::poset::Budget;
use crate::schroeder::{from_binary_contracting, SchroederTree};
use crate::stats::StatTable;
use crate::trees::{BinaryTree, Shape};

/// A face `(f, g)` of the diagonal, with the interval it lies over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalFace {
    pub f: SchroederTree,
    pub g: SchroederTree,
    pub dim: usize,
    /// Index of `max(f)` in the lattice.
    pub s: usize,
    /// Index of `min(g)` in the lattice.
    pub t: usize,
    /// Descent edges of `s` contracted in `f`, by lower node label.
    pub contracted_s: Vec<usize>,
    /// Ascent edges of `t` contracted in `g`, by lower node label.
    pub contracted_t: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct EdgeClassification {
    pub free: usize,
    pub tied: usize,
    pub constrained: usize,
}

/// Per-edge verdicts for an interval, edges identified by lower node label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeKinds {
    pub s_descents: Vec<(usize, EdgeKind)>,
    pub t_ascents: Vec<(usize, EdgeKind)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Free,
    Tied,
    Constrained,
}

/// Shapes of all trees of a lattice.
pub struct DiagonalContext<'a> {
    pub lattice: &'a TamariLattice,
    shapes: Vec<Shape>,
}

impl<'a> DiagonalContext<'a> {
    pub fn new(lattice: &'a TamariLattice) -> Self {
        let shapes = lattice.trees().iter().map(BinaryTree::shape).collect();
        DiagonalContext { lattice, shapes }
    }

    pub fn shape(&self, i: usize) -> &Shape {
        &self.shapes[i]
    }

    /// Classifies the descent edges of `s` and ascent edges of `t`.
    ///
    /// Contracting all edges of a tree but the one above node `c` leaves the
    /// two-node Schröder tree determined by the subtree range of `c`, so two
    /// edges give the same contraction iff their lower nodes span the same
    /// range.
    pub fn edge_kinds(&self, s: usize, t: usize) -> EdgeKinds {
        let (ss, ts) = (&self.shapes[s], &self.shapes[t]);
        let side = |shape: &Shape| -> HashMap<(usize, usize), bool> {
            // range -> is a right child (descent)
            (0..shape.len())
                .filter_map(|c| {
                    let p = shape.parent[c]?;
                    Some((shape.range[c], shape.right[p] == Some(c)))
                })
                .collect()
        };
        let (s_side, t_side) = (side(ss), side(ts));
        let kind = |matched: Option<&bool>, same: bool| match matched {
            None => EdgeKind::Free,
            Some(&d) if d == same => EdgeKind::Tied,
            Some(_) => EdgeKind::Constrained,
        };
        EdgeKinds {
            s_descents: ss
                .descent_nodes()
                .into_iter()
                .map(|c| (c, kind(t_side.get(&ss.range[c]), true)))
                .collect(),
            t_ascents: ts
                .ascent_nodes()
                .into_iter()
                .map(|c| (c, kind(s_side.get(&ts.range[c]), false)))
                .collect(),
        }
    }

    /// Counts of free and tied edges over both trees, and of constrained
    /// pairs (each counted once).
    pub fn classify_edges(&self, s: usize, t: usize) -> EdgeClassification {
        let kinds = self.edge_kinds(s, t);
        let mut out = EdgeClassification::default();
        let mut constrained_t = 0;
        for (_, k) in &kinds.s_descents {
            match k {
                EdgeKind::Free => out.free += 1,
                EdgeKind::Tied => out.tied += 1,
                EdgeKind::Constrained => out.constrained += 1,
            }
        }
        for (_, k) in &kinds.t_ascents {
            match k {
                EdgeKind::Free => out.free += 1,
                EdgeKind::Tied => out.tied += 1,
                EdgeKind::Constrained => constrained_t += 1,
            }
        }
        debug_assert_eq!(out.constrained, constrained_t);
        out
    }

    /// Calls `f` on every face over the interval `(s, t)`.
    pub fn for_each_face_over<F: FnMut(&DiagonalFace)>(&self, s: usize, t: usize, f: &mut F) {
        let (ss, ts) = (&self.shapes[s], &self.shapes[t]);
        let (ds, at) = (ss.descent_nodes(), ts.ascent_nodes());
        let (tree_s, tree_t) = (self.lattice.tree(s), self.lattice.tree(t));
        for xmask in 0u64..1 << ds.len() {
            let xs = subset(&ds, xmask);
            let face_f = from_binary_contracting(tree_s, &|c| xs.contains(&c));
            for ymask in 0u64..1 << at.len() {
                let ys = subset(&at, ymask);
                let face_g = from_binary_contracting(tree_t, &|c| ys.contains(&c));
                f(&DiagonalFace {
                    f: face_f.clone(),
                    g: face_g,
                    dim: xs.len() + ys.len(),
                    s,
                    t,
                    contracted_s: xs.clone(),
                    contracted_t: ys,
                });
            }
        }
    }

    /// Calls `f` on every face of the diagonal; fails once more than
    /// `budget` faces would be produced.
    pub fn for_each_face<F: FnMut(&DiagonalFace)>(&self, budget: Budget, mut f: F) -> Result<u64> {
        let mut faces = 0u64;
        let mut pairs = Vec::new();
        self.lattice
            .for_each_interval(budget, |iv| pairs.push((iv.s, iv.t, iv.k())))?;
        for &(_, _, k) in &pairs {
            faces += 1u64 << k;
        }
        budget.check("faces", faces)?;
        for (s, t, _) in pairs {
            self.for_each_face_over(s, t, &mut f);
        }
        Ok(faces)
    }

    /// Whether the face obtained by contracting `xs` in `s` and `ys` in `t`
    /// is internal: no uncontracted edge of `s` spans the same range as an
    /// uncontracted edge of `t`.
    pub fn is_internal(&self, s: usize, t: usize, xs: &[usize], ys: &[usize]) -> bool {
        let (ss, ts) = (&self.shapes[s], &self.shapes[t]);
        let kept = |shape: &Shape, contracted: &[usize]| -> HashSet<(usize, usize)> {
            (0..shape.len())
                .filter(|&c| shape.parent[c].is_some() && !contracted.contains(&c))
                .map(|c| shape.range[c])
                .collect()
        };
        kept(ss, xs).is_disjoint(&kept(ts, ys))
    }
}

fn subset(items: &[usize], mask: u64) -> Vec<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &c)| c)
        .collect()
}

fn to_vec(counts: BTreeMap<usize, BigUint>, n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); n];
    for (k, v) in counts {
        if k >= out.len() {
            out.resize(k + 1, BigUint::zero());
        }
        out[k] = v;
    }
    out
}

/// `f`-vector of the diagonal from interval statistics:
/// entry `k` is the sum over intervals of `C(des(s) + asc(t), k)`.
pub fn diagonal_fvector(lattice: &TamariLattice, budget: Budget) -> Result<Vec<BigUint>> {
    let hist = lattice.interval_histogram(budget, 1)?.histogram();
    let n = lattice.n();
    Ok((0..n)
        .map(|k| {
            hist.iter()
                .enumerate()
                .map(|(l, c)| c * crate::formulas::binomial_u(l, k))
                .sum()
        })
        .collect())
}

/// `f`-vector of the diagonal by explicit face generation, also checking
/// that no face is produced twice. Returns `None` on a duplicate.
pub fn diagonal_fvector_direct(lattice: &TamariLattice, budget: Budget) -> Result<Option<Vec<BigUint>>> {
    let ctx = DiagonalContext::new(lattice);
    let mut seen = HashSet::new();
    let mut duplicate = false;
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    ctx.for_each_face(budget, |face| {
        if !seen.insert((face.f.clone(), face.g.clone())) {
            duplicate = true;
        }
        *counts.entry(face.dim).or_default() += 1u32;
    })?;
    Ok((!duplicate).then(|| to_vec(counts, lattice.n())))
}

/// Faces counted by `(dim f, dim g)`.
pub fn diagonal_fvector_by_dims(lattice: &TamariLattice, budget: Budget) -> Result<StatTable> {
    let pq = lattice.refined_by_des_asc(budget, 1)?;
    let mut out = StatTable::new(lattice.n(), vec!["dim f", "dim g"]);
    for (key, count) in pq.cells() {
        let (des, asc) = (key[0], key[1]);
        for p in 0..=des {
            for q in 0..=asc {
                let c = crate::formulas::binomial_u(des, p) * crate::formulas::binomial_u(asc, q);
                out.add(&[p, q], count * c);
            }
        }
    }
    Ok(out)
}

/// Internal faces by dimension, from the edge classification:
/// `sum_i 2^i C(cons, i) C(free, k - tied - 2 cons + i)` per interval.
pub fn internal_fvector(lattice: &TamariLattice, budget: Budget) -> Result<Vec<BigUint>> {
    let ctx = DiagonalContext::new(lattice);
    let mut by_class: HashMap<EdgeClassification, u64> = HashMap::new();
    lattice.for_each_interval(budget, |iv| {
        *by_class.entry(ctx.classify_edges(iv.s, iv.t)).or_default() += 1;
    })?;
    let n = lattice.n() as i64;
    let mut out = vec![BigInt::zero(); n as usize];
    for (c, count) in by_class {
        let (free, tied, cons) = (c.free as i64, c.tied as i64, c.constrained as i64);
        for (k, slot) in out.iter_mut().enumerate() {
            let k = k as i64;
            let mut term = BigInt::zero();
            for i in 0..=cons {
                term += (BigInt::one() << i as usize) * binomial(cons, i) * binomial(free, k - tied - 2 * cons + i);
            }
            *slot += term * count;
        }
    }
    Ok(out.iter().map(crate::formulas::to_count).collect())
}

/// Internal faces by dimension, testing every face for a common facet.
pub fn internal_fvector_direct(lattice: &TamariLattice, budget: Budget) -> Result<Vec<BigUint>> {
    let ctx = DiagonalContext::new(lattice);
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    ctx.for_each_face(budget, |face| {
        if ctx.is_internal(face.s, face.t, &face.contracted_s, &face.contracted_t) {
            *counts.entry(face.dim).or_default() += 1u32;
        }
    })?;
    Ok(to_vec(counts, lattice.n()))
}

/// Same as [`internal_fvector_direct`], comparing the two-node contraction
/// sets of the Schröder trees themselves rather than edge ranges.
pub fn internal_fvector_by_trees(lattice: &TamariLattice, budget: Budget) -> Result<Vec<BigUint>> {
    let ctx = DiagonalContext::new(lattice);
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    ctx.for_each_face(budget, |face| {
        let a: HashSet<SchroederTree> = face.f.two_node_contractions().into_iter().collect();
        if face.g.two_node_contractions().iter().all(|c| !a.contains(c)) {
            *counts.entry(face.dim).or_default() += 1u32;
        }
    })?;
    Ok(to_vec(counts, lattice.n()))
}

/// Which vertex of a face pair is used to group faces into fibers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "min-min")]
    MinMin,
    #[serde(rename = "max-min")]
    MaxMin,
    #[serde(rename = "min-max")]
    MinMax,
    #[serde(rename = "max-max")]
    MaxMax,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::MinMin, Mode::MaxMin, Mode::MinMax, Mode::MaxMax];

    pub fn name(self) -> &'static str {
        match self {
            Mode::MinMin => "min-min",
            Mode::MaxMin => "max-min",
            Mode::MinMax => "min-max",
            Mode::MaxMax => "max-max",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn vertex(self, face: &DiagonalFace) -> (BinaryTree, BinaryTree) {
        let f = if matches!(self, Mode::MinMin | Mode::MinMax) {
            face.f.min_tree()
        } else {
            face.f.max_tree()
        };
        let g = if matches!(self, Mode::MinMax | Mode::MaxMax) {
            face.g.max_tree()
        } else {
            face.g.min_tree()
        };
        (f, g)
    }
}

/// Fiber of a decomposition with its dimension-generating polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub s: String,
    pub t: String,
    /// Coefficient of `x^d` at index `d`.
    pub polynomial: Vec<u64>,
    /// `(d0, r)` when the polynomial is `x^d0 (1 + x)^r`.
    pub boolean: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub mode: Mode,
    pub fibers: Vec<Fiber>,
    /// Sum of the fiber polynomials.
    pub fvector: Vec<u64>,
    pub all_boolean: bool,
}

impl DecompositionReport {
    pub fn non_boolean(&self) -> impl Iterator<Item = &Fiber> {
        self.fibers.iter().filter(|f| f.boolean.is_none())
    }
}

/// Recognizes `x^d0 (1 + x)^r`.
pub fn boolean_shape(poly: &[u64]) -> Option<(usize, usize)> {
    let d0 = poly.iter().position(|&c| c != 0)?;
    let last = poly.iter().rposition(|&c| c != 0)?;
    let r = last - d0;
    let row: Vec<u64> = (0..=r)
        .map(|i| u64::try_from(crate::formulas::binomial_u(r, i)).unwrap_or(u64::MAX))
        .collect();
    (poly[d0..=last] == row[..]).then_some((d0, r))
}

pub fn decomposition_report(lattice: &TamariLattice, mode: Mode, budget: Budget) -> Result<DecompositionReport> {
    let ctx = DiagonalContext::new(lattice);
    let mut fibers: BTreeMap<(BinaryTree, BinaryTree), Vec<u64>> = BTreeMap::new();
    let mut fvector = vec![0u64; lattice.n()];
    ctx.for_each_face(budget, |face| {
        let poly = fibers.entry(mode.vertex(face)).or_default();
        if poly.len() <= face.dim {
            poly.resize(face.dim + 1, 0);
        }
        poly[face.dim] += 1;
        fvector[face.dim] += 1;
    })?;
    let fibers: Vec<Fiber> = fibers
        .into_iter()
        .map(|((s, t), polynomial)| Fiber {
            s: s.to_string(),
            t: t.to_string(),
            boolean: boolean_shape(&polynomial),
            polynomial,
        })
        .collect();
    let all_boolean = fibers.iter().all(|f| f.boolean.is_some());
    Ok(DecompositionReport {
        n: lattice.n(),
        mode,
        fibers,
        fvector,
        all_boolean,
    })
}

/// Export record for one face.
#[derive(Debug, Clone, Serialize)]
pub struct FaceRecord {
    pub f: String,
    pub g: String,
    pub dim: usize,
    pub internal: bool,
    pub assigned_vertex_per_mode: BTreeMap<&'static str, (String, String)>,
}

pub fn face_records(lattice: &TamariLattice, budget: Budget) -> Result<Vec<FaceRecord>> {
    let ctx = DiagonalContext::new(lattice);
    let mut out = Vec::new();
    ctx.for_each_face(budget, |face| {
        let assigned = Mode::ALL
            .iter()
            .map(|m| {
                let (a, b) = m.vertex(face);
                (m.name(), (a.to_string(), b.to_string()))
            })
            .collect();
        out.push(FaceRecord {
            f: face.f.to_string(),
            g: face.g.to_string(),
            dim: face.dim,
            internal: ctx.is_internal(face.s, face.t, &face.contracted_s, &face.contracted_t),
            assigned_vertex_per_mode: assigned,
        });
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(n: usize) -> TamariLattice {
        TamariLattice::new(n, Budget::default()).unwrap()
    }

    fn u64s(v: Vec<BigUint>) -> Vec<u64> {
        v.iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn fvectors() {
        assert_eq!(u64s(diagonal_fvector(&lat(1), Budget::default()).unwrap()), [1]);
        assert_eq!(u64s(diagonal_fvector(&lat(2), Budget::default()).unwrap()), [3, 2]);
        let direct = diagonal_fvector_direct(&lat(3), Budget::default()).unwrap().unwrap();
        assert_eq!(u64s(direct), [13, 18, 6]);
    }

    #[test]
    fn single_node_classification() {
        let l = lat(1);
        let ctx = DiagonalContext::new(&l);
        assert_eq!(ctx.classify_edges(0, 0), EdgeClassification::default());
    }

    #[test]
    fn internal_small() {
        assert_eq!(u64s(internal_fvector(&lat(2), Budget::default()).unwrap()), [1, 2]);
        assert_eq!(
            u64s(internal_fvector_direct(&lat(3), Budget::default()).unwrap()),
            [3, 8, 6]
        );
        assert_eq!(
            u64s(internal_fvector(&lat(4), Budget::default()).unwrap()),
            [12, 42, 51, 22]
        );
    }

    #[test]
    fn boolean_shapes() {
        assert_eq!(boolean_shape(&[0, 1, 2, 1]), Some((1, 2)));
        assert_eq!(boolean_shape(&[1]), Some((0, 0)));
        assert_eq!(boolean_shape(&[1, 1, 1]), None);
        assert_eq!(boolean_shape(&[]), None);
    }

    #[test]
    fn max_min_fibers_are_intervals() {
        let l = lat(3);
        let r = decomposition_report(&l, Mode::MaxMin, Budget::default()).unwrap();
        assert_eq!(r.fibers.len(), 13);
        assert!(r.all_boolean);
        assert_eq!(r.fvector, [13, 18, 6]);
    }
}
