//! Minimum spanning trees of a weighted `K_n`, enumerated two independent ways.
//!
//! Trees are edge sets over the elements `1..=C(n,2)` of `M(K_n)`.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::set::ElementSet;

use super::dissimilarity::{pair_index, EdgeWeighting};

/// Largest `n` for which brute force over all `n^(n-2)` trees is attempted.
pub const BRUTE_FORCE_MAX_N: usize = 8;

/// Cap on the number of minimum spanning trees returned.
pub const TREE_BUDGET: usize = 1_000_000;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..=n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// `n - 1` edges without a cycle.
pub fn is_spanning_tree(w: &EdgeWeighting, edges: ElementSet) -> bool {
    if edges.len() + 1 != w.n() {
        return false;
    }
    let mut uf = UnionFind::new(w.n());
    edges.iter().all(|e| {
        let (a, b) = w.endpoints(e);
        uf.union(a, b)
    })
}

/// Every labelled spanning tree of `K_n`, decoded from Prüfer sequences.
pub fn all_spanning_trees(n: usize) -> Result<Vec<ElementSet>> {
    Ok(spanning_trees(n)?.to_vec())
}

static DECODED: [OnceLock<Vec<ElementSet>>; BRUTE_FORCE_MAX_N + 1] =
    [const { OnceLock::new() }; BRUTE_FORCE_MAX_N + 1];

fn spanning_trees(n: usize) -> Result<&'static [ElementSet]> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "brute-force spanning tree enumeration is limited to n <= {BRUTE_FORCE_MAX_N}"
        )));
    }
    if n < 2 {
        return Ok(&[ElementSet::EMPTY]);
    }
    Ok(DECODED[n].get_or_init(|| {
        let len = n - 2;
        let total = n.pow(len as u32);
        let mut trees = Vec::with_capacity(total);
        let mut seq = vec![1usize; len];
        for _ in 0..total {
            trees.push(decode_prufer(n, &seq));
            for slot in seq.iter_mut().rev() {
                if *slot < n {
                    *slot += 1;
                    break;
                }
                *slot = 1;
            }
        }
        trees
    }))
}

fn decode_prufer(n: usize, seq: &[usize]) -> ElementSet {
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = ElementSet::EMPTY;
    for &v in seq {
        let leaf = (1..=n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges = edges.with(pair_index(n, leaf, v) + 1);
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    edges.with(pair_index(n, rest[0], rest[1]) + 1)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The weights times a common denominator, when everything stays small
/// enough that sums of up to 63 of them cannot overflow.
fn integer_weights(w: &EdgeWeighting) -> Option<Vec<i128>> {
    const BOUND: i128 = 1 << 96;
    let mut common: i128 = 1;
    for r in w.as_slice() {
        let d = r.denom().to_i128()?;
        common = common.checked_mul(d / gcd(common, d))?;
    }
    w.as_slice()
        .iter()
        .map(|r| {
            let v = r
                .numer()
                .to_i128()?
                .checked_mul(common / r.denom().to_i128()?)?;
            (v.abs() < BOUND).then_some(v)
        })
        .collect()
}

fn cheapest<K: Ord + Clone>(
    trees: &[ElementSet],
    weight: impl Fn(ElementSet) -> K,
) -> Vec<ElementSet> {
    let weights: Vec<K> = trees.iter().map(|&t| weight(t)).collect();
    let best = weights
        .iter()
        .min()
        .expect("K_n has a spanning tree")
        .clone();
    let mut out: Vec<ElementSet> = trees
        .iter()
        .zip(weights)
        .filter(|(_, wt)| *wt == best)
        .map(|(&t, _)| t)
        .collect();
    out.sort_unstable();
    out
}

/// Minimum-weight trees by comparing the weight of every spanning tree.
pub fn min_spanning_trees_bruteforce(w: &EdgeWeighting) -> Result<Vec<ElementSet>> {
    let trees = spanning_trees(w.n())?;
    Ok(match integer_weights(w) {
        Some(scaled) => cheapest(trees, |t| t.iter().map(|e| scaled[e - 1]).sum::<i128>()),
        None => cheapest(trees, |t| {
            t.iter().map(|e| w.weight(e).clone()).sum::<Rational>()
        }),
    })
}

/// Minimum spanning trees by cycle breaking: starting from `K_n`, repeatedly
/// delete a maximum-weight edge of some cycle, over every possible sequence of
/// choices.
///
/// Edges are visited heaviest first. Each edge is either deleted, which is
/// allowed only when it is a maximum edge of a cycle in the current graph
/// (its endpoints stay joined by edges no heavier than it), or kept for good,
/// which is allowed only while the kept edges stay acyclic.
pub fn min_spanning_trees_reverse_delete(w: &EdgeWeighting) -> Result<Vec<ElementSet>> {
    let n = w.n();
    let mut order: Vec<usize> = (1..=w.edge_count()).collect();
    order.sort_by(|&a, &b| w.weight(b).cmp(w.weight(a)).then(a.cmp(&b)));
    let mut search = CycleBreaking {
        w,
        order,
        found: Vec::new(),
    };
    search.visit(0, ElementSet::full(w.edge_count()), ElementSet::EMPTY)?;
    let mut found = search.found;
    debug_assert!(found.iter().all(|t| t.len() + 1 == n));
    found.sort_unstable();
    Ok(found)
}

struct CycleBreaking<'a> {
    w: &'a EdgeWeighting,
    order: Vec<usize>,
    found: Vec<ElementSet>,
}

impl CycleBreaking<'_> {
    fn visit(&mut self, step: usize, present: ElementSet, kept: ElementSet) -> Result<()> {
        let Some(&edge) = self.order.get(step) else {
            self.found.push(present);
            if self.found.len() > TREE_BUDGET {
                return Err(Error::ResourceLimit(format!(
                    "more than {TREE_BUDGET} minimum spanning trees"
                )));
            }
            return Ok(());
        };
        let (a, b) = self.w.endpoints(edge);
        let limit = self.w.weight(edge);
        let lighter: ElementSet = present
            .without(edge)
            .iter()
            .filter(|&f| self.w.weight(f) <= limit)
            .collect();
        if self.connected(lighter, a, b) {
            self.visit(step + 1, present.without(edge), kept)?;
        }
        if !self.connected(kept, a, b) {
            self.visit(step + 1, present, kept.with(edge))?;
        }
        Ok(())
    }

    fn connected(&self, edges: ElementSet, a: usize, b: usize) -> bool {
        let mut uf = UnionFind::new(self.w.n());
        for e in edges {
            let (x, y) = self.w.endpoints(e);
            uf.union(x, y);
        }
        uf.find(a) == uf.find(b)
    }
}

/// Minimum spanning trees by cycle breaking, cross-checked against brute
/// force whenever `n <= BRUTE_FORCE_MAX_N`.
pub fn all_min_spanning_trees(w: &EdgeWeighting) -> Result<Vec<ElementSet>> {
    let trees = min_spanning_trees_reverse_delete(w)?;
    if w.n() <= BRUTE_FORCE_MAX_N {
        let check = min_spanning_trees_bruteforce(w)?;
        if check != trees {
            return Err(Error::Inconsistent(format!(
                "cycle breaking found {} minimum spanning trees, brute force {}",
                trees.len(),
                check.len()
            )));
        }
    }
    Ok(trees)
}
