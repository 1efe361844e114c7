use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tamari::equation::PolynomialEquation;
use tamari::formulas::{a_formula, b_formula, b_from_a, interval_count};
use tamari::mpoly::{parse_poly, MPoly};
use tamari::paths::{dyck_to_tree, tree_to_dyck, LatticePath};
use tamari::schroeder::SchroederTree;
use tamari::{decompose_interval, reassemble, tamari_leq, BinaryTree};

/// A random tree with `n` nodes, left sizes uniform at each node.
fn random_tree(n: usize, rng: &mut StdRng) -> BinaryTree {
    if n == 0 {
        return BinaryTree::empty();
    }
    let left = rng.gen_range(0..n);
    let l = random_tree(left, rng);
    BinaryTree::node(l, random_tree(n - 1 - left, rng))
}

fn tree() -> impl Strategy<Value = BinaryTree> {
    (1usize..=40, any::<u64>()).prop_map(|(n, seed)| random_tree(n, &mut StdRng::seed_from_u64(seed)))
}

/// `s` and a tree reached from it by up to `steps` random upward rotations.
fn interval() -> impl Strategy<Value = (BinaryTree, BinaryTree)> {
    (tree(), any::<u64>(), 0usize..12).prop_map(|(s, seed, steps)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut t = s.clone();
        for _ in 0..steps {
            let ups = t.rotations_up();
            if ups.is_empty() {
                break;
            }
            t = ups[rng.gen_range(0..ups.len())].clone();
        }
        (s, t)
    })
}

proptest! {
    #[test]
    fn tree_text_round_trips(t in tree()) {
        prop_assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t);
    }

    #[test]
    fn descents_and_ascents_split_the_edges(t in tree()) {
        prop_assert_eq!(t.des().unwrap() + t.asc().unwrap(), t.size() - 1);
    }

    #[test]
    fn rotations_go_up(t in tree()) {
        for u in t.rotations_up() {
            prop_assert!(tamari_leq(&t, &u).unwrap());
            prop_assert!(!tamari_leq(&u, &t).unwrap());
            prop_assert!(t.canopy().unwrap().leq(&u.canopy().unwrap()));
        }
    }

    #[test]
    fn dyck_statistics(t in tree()) {
        let p = tree_to_dyck(&t);
        prop_assert_eq!(dyck_to_tree(&p).unwrap(), t.clone());
        prop_assert_eq!(p.valleys(), t.asc().unwrap());
        prop_assert_eq!(p.double_falls(), t.des().unwrap());
        prop_assert_eq!(p.contacts(), t.ell());
        prop_assert_eq!(LatticePath::parse(&p.to_string(), 1).unwrap(), p);
    }

    #[test]
    fn schroeder_text_round_trips(t in tree()) {
        let s = SchroederTree::from_binary(&t);
        prop_assert_eq!(s.to_string().parse::<SchroederTree>().unwrap(), s.clone());
        prop_assert_eq!(s.min_tree(), t.clone());
        prop_assert_eq!(s.max_tree(), t);
    }

    #[test]
    fn interval_decomposition_reassembles((s, t) in interval()) {
        prop_assert!(tamari_leq(&s, &t).unwrap());
        let parts = decompose_interval(&s, &t).unwrap();
        prop_assert_eq!(parts.len(), t.ell() + 1);
        for (a, b) in &parts {
            prop_assert_eq!(a.size(), b.size());
        }
        prop_assert_eq!(reassemble(&parts), (s, t));
    }

    #[test]
    fn polynomial_text_round_trips(terms in prop::collection::vec((0u32..5, 0u32..5, 0u32..5, -50i64..50), 0..10)) {
        let mut p = MPoly::zero(3);
        for (a, b, c, k) in terms {
            p.add_term(vec![a, b, c], BigRational::from_integer(k.into()));
        }
        let vars = ['t', 'z', 'X'];
        prop_assert_eq!(parse_poly(&p.display(&vars).to_string(), &vars).unwrap(), p);
    }

    #[test]
    fn parsers_reject_or_accept_without_panicking(s in "\\PC{0,40}") {
        let _ = s.parse::<BinaryTree>();
        let _ = s.parse::<SchroederTree>();
        let _ = LatticePath::parse(&s, 2);
        let _ = parse_poly(&s, &['t', 'z']);
        let _ = PolynomialEquation::parse_table(&s);
    }

    #[test]
    fn row_sums_and_binomial_transform(n in 1i64..60) {
        let total: BigInt = (0..n).map(|k| a_formula(n, k).unwrap()).sum();
        prop_assert_eq!(total, interval_count(n).unwrap());
        for k in [0, n / 2, n - 1] {
            prop_assert_eq!(b_from_a(n, k).unwrap(), b_formula(n, k).unwrap());
        }
    }
}

#[test]
fn comb_trees_bound_the_lattice() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 1..30 {
        let (lo, hi) = (BinaryTree::left_comb(n), BinaryTree::right_comb(n));
        let (bottom, top) = if tamari_leq(&lo, &hi).unwrap() {
            (lo, hi)
        } else {
            (hi, lo)
        };
        for _ in 0..20 {
            let t = random_tree(n, &mut rng);
            assert!(tamari_leq(&bottom, &t).unwrap() && tamari_leq(&t, &top).unwrap(), "{t}");
        }
    }
}

#[test]
fn table_parser_sums_repeats_and_reports_offsets() {
    let eq = PolynomialEquation::parse_table("# c\n1 0 0 2\n1 0 0 -2\n0 1 1 3\n").unwrap();
    assert_eq!(eq.terms().count(), 1);
    match PolynomialEquation::parse_table("0 0 0 1\n1 2 x 1\n") {
        Err(tamari::Error::Parse { pos, .. }) => assert_eq!(pos, 8),
        other => panic!("{other:?}"),
    }
}
