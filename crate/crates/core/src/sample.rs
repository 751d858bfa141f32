//! Seeded random instances for the property suites.
//!
//! Values are drawn from small grids of rationals so that exact ties, which
//! carry all the interesting structure, show up often.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rational::{int, ratio, Rational};
use crate::set::ElementSet;
use crate::treespace::{pair_count, DissimilarityMap, EdgeWeighting, EquidistantTree, Node};
use crate::weights::WeightVector;
use crate::Result;

/// A rational `p/q` with `|p| <= span * q` and `q` in `1..=4`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, span: i64) -> Rational {
    let q = rng.gen_range(1..=4);
    let p = rng.gen_range(-span * q..=span * q);
    ratio(p, q)
}

/// A non-negative rational drawn from a coarse grid of `levels` values.
pub fn grid_rational<R: Rng + ?Sized>(rng: &mut R, levels: i64) -> Rational {
    ratio(rng.gen_range(0..levels.max(1)), 2)
}

pub fn random_weights<R: Rng + ?Sized>(rng: &mut R, n: usize) -> WeightVector {
    let span = rng.gen_range(1..=3);
    WeightVector::new((0..n).map(|_| random_rational(rng, span)).collect())
}

/// Symmetric dissimilarity with zero diagonal and heavily tied entries.
pub fn random_dissimilarity<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<DissimilarityMap> {
    let levels = rng.gen_range(2..=5);
    let values = (0..pair_count(n))
        .map(|_| grid_rational(rng, levels))
        .collect();
    DissimilarityMap::from_pairs(n, values)
}

/// Arbitrary weighting of the edges of `K_n`, signs allowed.
pub fn random_edge_weighting<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<EdgeWeighting> {
    let span = rng.gen_range(1..=2);
    EdgeWeighting::new(
        n,
        (0..pair_count(n))
            .map(|_| random_rational(rng, span))
            .collect(),
    )
}

/// Random equidistant tree on leaves `1..=n`.
///
/// Vertices are created level by level; a level may merge several disjoint
/// groups at once, which produces tied heights. The lowest level's height is
/// sometimes negative.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<EquidistantTree> {
    let mut clusters: Vec<Node> = (1..=n).map(Node::leaf).collect();
    let mut height = if rng.gen_bool(0.3) {
        -random_positive(rng)
    } else {
        random_positive(rng)
    };
    while clusters.len() > 1 {
        clusters.shuffle(rng);
        let mut groups = Vec::new();
        let mut rest = clusters.len();
        loop {
            let size = if rest >= 3 && rng.gen_bool(0.2) { 3 } else { 2 };
            if size > rest {
                break;
            }
            groups.push(size);
            rest -= size;
            if !(rest >= 2 && rng.gen_bool(0.35)) {
                break;
            }
        }
        let mut next = Vec::new();
        let mut drained = clusters.drain(..);
        for size in groups {
            let children: Vec<Node> = drained.by_ref().take(size).collect();
            next.push(Node::internal(height.clone(), children));
        }
        next.extend(drained);
        clusters = next;
        height += random_positive(rng);
    }
    EquidistantTree::new(clusters.pop().expect("at least one cluster"))
}

fn random_positive<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(1..=6), rng.gen_range(1..=3))
}

/// Same unranked topology as `tree` with fresh heights.
///
/// With `keep_order` the relative order of the heights, ties included, is
/// preserved, so the ranked topology is unchanged as well.
pub fn reheight<R: Rng + ?Sized>(
    rng: &mut R,
    tree: &EquidistantTree,
    keep_order: bool,
) -> Result<EquidistantTree> {
    let root = if keep_order {
        let mut levels: Vec<Rational> = tree
            .internal_vertices()
            .into_iter()
            .map(|(_, h)| h.clone())
            .collect();
        levels.sort();
        levels.dedup();
        let mut value = if rng.gen_bool(0.3) {
            -random_positive(rng)
        } else {
            random_positive(rng)
        };
        let mut fresh = Vec::with_capacity(levels.len());
        for _ in &levels {
            fresh.push(value.clone());
            value += random_positive(rng);
        }
        map_heights(tree.root(), &|h| {
            let position = levels.binary_search(h).expect("height is listed");
            fresh[position].clone()
        })
    } else {
        free_heights(rng, tree.root())
    };
    EquidistantTree::new(root)
}

fn map_heights(node: &Node, f: &dyn Fn(&Rational) -> Rational) -> Node {
    match node {
        Node::Leaf(i) => Node::leaf(*i),
        Node::Internal { height, children } => Node::internal(
            f(height),
            children.iter().map(|c| map_heights(c, f)).collect(),
        ),
    }
}

fn free_heights<R: Rng + ?Sized>(rng: &mut R, node: &Node) -> Node {
    match node {
        Node::Leaf(i) => Node::leaf(*i),
        Node::Internal { children, .. } => {
            let children: Vec<Node> = children.iter().map(|c| free_heights(rng, c)).collect();
            let internal_below = children
                .iter()
                .filter(|c| matches!(c, Node::Internal { .. }))
                .map(Node::height)
                .max();
            let height = match internal_below {
                Some(h) => h + grid_step(rng),
                None => int(rng.gen_range(-1..=2)),
            };
            Node::internal(height, children)
        }
    }
}

fn grid_step<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    int(rng.gen_range(1..=2))
}

/// Each element of `1..=n` independently with probability one half.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ElementSet {
    (1..=n).filter(|_| rng.gen_bool(0.5)).collect()
}
