//! The lattice of flats, built rank by rank from the closure oracle.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Default cap on the number of flats generated.
pub const DEFAULT_FLAT_BUDGET: usize = 1_000_000;

/// Flats of a matroid ordered by rank (then by packed bits), with cover relations.
///
/// Index 0 is the bottom `closure({})`; the last index is the top `[n]`.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    n: usize,
    rank: usize,
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<ElementSet, usize>,
}

pub fn lattice_of_flats(m: &Matroid) -> Result<FlatLattice> {
    lattice_of_flats_within(m, DEFAULT_FLAT_BUDGET)
}

pub fn lattice_of_flats_within(m: &Matroid, budget: usize) -> Result<FlatLattice> {
    let mut levels: Vec<Vec<ElementSet>> = vec![vec![m.closure_of(ElementSet::EMPTY)]];
    let mut covers: Vec<(ElementSet, ElementSet)> = Vec::new();
    let mut total = 1;
    for _ in 0..m.full_rank() {
        let mut next: Vec<ElementSet> = Vec::new();
        let mut seen: HashMap<ElementSet, ()> = HashMap::new();
        for &flat in levels.last().expect("at least the bottom level") {
            let mut above = Vec::new();
            for e in m.ground().difference(flat) {
                if above.iter().any(|g: &ElementSet| g.contains(e)) {
                    continue;
                }
                let g = m.closure_of(flat.with(e));
                above.push(g);
                covers.push((flat, g));
                if seen.insert(g, ()).is_none() {
                    next.push(g);
                    total += 1;
                    if total > budget {
                        return Err(Error::ResourceLimit(format!(
                            "lattice of flats exceeds {budget} elements"
                        )));
                    }
                }
            }
        }
        next.sort_unstable();
        levels.push(next);
    }

    let mut flats = Vec::with_capacity(total);
    let mut ranks = Vec::with_capacity(total);
    for (k, level) in levels.iter().enumerate() {
        flats.extend_from_slice(level);
        ranks.extend(std::iter::repeat_n(k, level.len()));
    }
    let index: HashMap<ElementSet, usize> =
        flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut up = vec![Vec::new(); flats.len()];
    let mut down = vec![Vec::new(); flats.len()];
    for (lo, hi) in covers {
        let (a, b) = (index[&lo], index[&hi]);
        up[a].push(b);
        down[b].push(a);
    }
    for list in up.iter_mut().chain(down.iter_mut()) {
        list.sort_unstable();
        list.dedup();
    }
    Ok(FlatLattice {
        n: m.ground_size(),
        rank: m.full_rank(),
        flats,
        ranks,
        up,
        down,
        index,
    })
}

impl FlatLattice {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn flat(&self, id: usize) -> ElementSet {
        self.flats[id]
    }

    pub fn rank_of(&self, id: usize) -> usize {
        self.ranks[id]
    }

    pub fn index_of(&self, flat: ElementSet) -> Option<usize> {
        self.index.get(&flat).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    /// Flats covering `id`.
    pub fn covers_above(&self, id: usize) -> &[usize] {
        &self.up[id]
    }

    /// Flats covered by `id`.
    pub fn covers_below(&self, id: usize) -> &[usize] {
        &self.down[id]
    }

    /// Number of flats of each rank `0..=r`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ranks[i] == 1).collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.flats[a].is_subset(self.flats[b])
    }

    /// Intersection of flats is a flat.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&self.flats[a].intersection(self.flats[b])]
    }

    /// Least flat containing both.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let union = self.flats[a].union(self.flats[b]);
        (0..self.len())
            .find(|&i| union.is_subset(self.flats[i]))
            .expect("top contains every flat")
    }

    /// Flats `x` with `a <= x <= b`, in lattice order.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.leq(a, x) && self.leq(x, b))
            .collect()
    }

    /// `mu(bottom, x)` for every flat, by `mu(0, x) = -sum_{0 <= y < x} mu(0, y)`.
    pub fn mobius_from_bottom(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        mu[0] = 1;
        for x in 1..self.len() {
            let fx = self.flats[x];
            mu[x] = -(0..x)
                .filter(|&y| self.flats[y].is_proper_subset(fx))
                .map(|y| mu[y])
                .sum::<i64>();
        }
        mu
    }
}

/// `(-1)^r mu(0, 1)`: the number of spheres in the wedge.
pub fn mobius_hat(lattice: &FlatLattice) -> i64 {
    let mu = lattice.mobius_from_bottom()[lattice.top()];
    if lattice.rank().is_multiple_of(2) {
        mu
    } else {
        -mu
    }
}
