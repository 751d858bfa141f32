//! Matroids on `{1, .., n}` behind a single rank oracle.
//!
//! Every backing (graphic, uniform, linear over the rationals, explicit
//! bases, minors and direct sums) answers `rank` exactly; closure, loops,
//! bases and minors are all derived from that one function.

use std::sync::{Arc, OnceLock};

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::rational::Rational;
use crate::set::{binomial, ElementSet, MAX_ELEMENTS};

/// Default cap on `C(n, r)` for basis enumeration.
pub const DEFAULT_SUBSET_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    backing: Backing,
    /// Bases, filled in on first enumeration.
    bases: OnceLock<BasisFamily>,
}

#[derive(Debug, Clone)]
enum Backing {
    Graphic(Graph),
    Uniform,
    Linear(Vec<Vec<Rational>>),
    Bases(BasisFamily),
    /// `(base | labels) / contracted`, relabelled so that element `i` is `labels[i - 1]`.
    Minor {
        base: Arc<Matroid>,
        labels: Vec<usize>,
        contracted: ElementSet,
        contracted_rank: usize,
    },
    DirectSum(Arc<Matroid>, Arc<Matroid>),
}

#[derive(Debug, Clone)]
struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Endpoints renumbered densely to `0..touched`.
    dense: Vec<(usize, usize)>,
    touched: usize,
}

impl Graph {
    fn rank(&self, subset: ElementSet) -> usize {
        let mut parent: Vec<usize> = (0..self.touched).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for e in subset {
            let (u, v) = self.dense[e - 1];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                rank += 1;
            }
        }
        rank
    }
}

/// A family of equal-size subsets, kept sorted and deduplicated so that
/// equality of families is plain slice equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisFamily {
    rank: usize,
    bases: Vec<ElementSet>,
}

impl BasisFamily {
    /// Rejects families whose members differ in size. An empty family is
    /// allowed here and has the stated `rank`.
    pub fn new(rank: usize, bases: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let mut bases: Vec<ElementSet> = bases.into_iter().collect();
        if let Some(b) = bases.iter().find(|b| b.len() != rank) {
            return Err(invalid(format!(
                "basis {b} has {} elements, expected {rank}",
                b.len()
            )));
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(BasisFamily { rank, bases })
    }

    fn from_sorted(rank: usize, bases: Vec<ElementSet>) -> Self {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        BasisFamily { rank, bases }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.bases.binary_search(&set).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.bases.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementSet] {
        &self.bases
    }

    /// Union of all members.
    pub fn support(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(ElementSet::EMPTY, |acc, &b| acc.union(b))
    }

    pub fn satisfies_exchange(&self) -> bool {
        exchange_holds(&self.bases, |s| self.contains(s))
    }
}

/// Checks the basis-exchange axiom: for all `B1, B2` and `e` in `B1 \ B2`
/// there is `f` in `B2 \ B1` with `B1 - e + f` in the family.
pub fn verify_basis_exchange(family: &[ElementSet]) -> Result<bool> {
    if let Some(first) = family.first() {
        if family.iter().any(|b| b.len() != first.len()) {
            return Err(invalid("basis family mixes subset sizes"));
        }
    }
    let mut sorted = family.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(exchange_holds(&sorted, |s| {
        sorted.binary_search(&s).is_ok()
    }))
}

fn exchange_holds(family: &[ElementSet], contains: impl Fn(ElementSet) -> bool) -> bool {
    family.iter().all(|&b1| {
        family.iter().all(|&b2| {
            b1.difference(b2).iter().all(|e| {
                b2.difference(b1)
                    .iter()
                    .any(|f| contains(b1.without(e).with(f)))
            })
        })
    })
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("ground set must be non-empty"));
    }
    if n > MAX_ELEMENTS {
        return Err(invalid(format!(
            "ground set of size {n} exceeds the supported maximum {MAX_ELEMENTS}"
        )));
    }
    Ok(())
}

impl Matroid {
    /// Graphic matroid of a multigraph with vertices `1..=vertex_count`.
    /// Element `i` is the `i`-th edge; self-loops become matroid loops.
    pub fn graphic(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(invalid("graphic matroid needs at least one edge"));
        }
        check_ground(edges.len())?;
        let mut renumber = std::collections::HashMap::new();
        let mut dense = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > vertex_count {
                    return Err(invalid(format!(
                        "edge endpoint {x} outside vertices 1..={vertex_count}"
                    )));
                }
            }
            let next = renumber.len();
            let du = *renumber.entry(u).or_insert(next);
            let next = renumber.len();
            let dv = *renumber.entry(v).or_insert(next);
            dense.push((du, dv));
        }
        let graph = Graph {
            vertex_count,
            edges: edges.to_vec(),
            dense,
            touched: renumber.len(),
        };
        let rank = graph.rank(ElementSet::full(edges.len()));
        Ok(Matroid {
            bases: OnceLock::new(),
            n: edges.len(),
            rank,
            backing: Backing::Graphic(graph),
        })
    }

    /// `M(K_n)` with edges in lexicographic order `(1,2), (1,3), .., (n-1,n)`.
    pub fn complete_graph(vertices: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 1..=vertices {
            for j in i + 1..=vertices {
                edges.push((i, j));
            }
        }
        Matroid::graphic(vertices, &edges)
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        if rank > n {
            return Err(invalid(format!(
                "uniform matroid U({rank},{n}) needs r <= n"
            )));
        }
        Ok(Matroid {
            bases: OnceLock::new(),
            n,
            rank,
            backing: Backing::Uniform,
        })
    }

    /// Column matroid of a `d x n` matrix given row by row.
    pub fn linear(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        check_ground(n)?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("matrix rows have different lengths"));
        }
        let all: Vec<usize> = (0..n).collect();
        let rank = linalg::column_rank(&rows, &all);
        Ok(Matroid {
            bases: OnceLock::new(),
            n,
            rank,
            backing: Backing::Linear(rows),
        })
    }

    /// Matroid given by its bases; the exchange axiom is checked here.
    pub fn from_bases(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        check_ground(n)?;
        let rank = bases
            .first()
            .ok_or_else(|| invalid("basis family must be non-empty"))?
            .len();
        let full = ElementSet::full(n);
        if let Some(b) = bases.iter().find(|b| !b.is_subset(full)) {
            return Err(invalid(format!("basis {b} is not a subset of 1..={n}")));
        }
        let family = BasisFamily::new(rank, bases)?;
        if !family.satisfies_exchange() {
            return Err(invalid("basis family violates the exchange axiom"));
        }
        Ok(Matroid {
            bases: OnceLock::new(),
            n,
            rank,
            backing: Backing::Bases(family),
        })
    }

    /// Wraps a family already known to be a matroid's bases.
    pub(crate) fn from_trusted_bases(n: usize, family: BasisFamily) -> Self {
        debug_assert!(!family.is_empty());
        Matroid {
            bases: OnceLock::new(),
            n,
            rank: family.rank(),
            backing: Backing::Bases(family),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> &'static str {
        match self.backing {
            Backing::Graphic(_) => "graphic",
            Backing::Uniform => "uniform",
            Backing::Linear(_) => "linear",
            Backing::Bases(_) => "bases",
            Backing::Minor { .. } => "minor",
            Backing::DirectSum(..) => "direct-sum",
        }
    }

    /// Vertex count and edge list for graphic matroids.
    pub fn graph(&self) -> Option<(usize, &[(usize, usize)])> {
        match &self.backing {
            Backing::Graphic(g) => Some((g.vertex_count, &g.edges)),
            _ => None,
        }
    }

    pub fn check_subset(&self, subset: ElementSet) -> Result<()> {
        if subset.is_subset(self.ground()) {
            Ok(())
        } else {
            Err(invalid(format!(
                "subset {subset} is not contained in 1..={}",
                self.n
            )))
        }
    }

    pub fn rank(&self, subset: ElementSet) -> Result<usize> {
        self.check_subset(subset)?;
        Ok(self.rank_of(subset))
    }

    /// Rank without the range check; `subset` must lie in the ground set.
    pub(crate) fn rank_of(&self, subset: ElementSet) -> usize {
        match &self.backing {
            Backing::Graphic(g) => g.rank(subset),
            Backing::Uniform => subset.len().min(self.rank),
            Backing::Linear(rows) => {
                let cols: Vec<usize> = subset.iter().map(|e| e - 1).collect();
                linalg::column_rank(rows, &cols)
            }
            Backing::Bases(family) => family
                .iter()
                .map(|b| b.intersection(subset).len())
                .max()
                .unwrap_or(0),
            Backing::Minor {
                base,
                labels,
                contracted,
                contracted_rank,
            } => {
                let mapped: ElementSet = subset.iter().map(|e| labels[e - 1]).collect();
                base.rank_of(mapped.union(*contracted)) - contracted_rank
            }
            Backing::DirectSum(left, right) => {
                let n1 = left.n;
                let low = subset.intersection(ElementSet::full(n1));
                let high = ElementSet::from_bits(subset.bits() >> n1);
                left.rank_of(low) + right.rank_of(high)
            }
        }
    }

    pub fn is_independent(&self, subset: ElementSet) -> Result<bool> {
        Ok(self.rank(subset)? == subset.len())
    }

    pub fn closure(&self, subset: ElementSet) -> Result<ElementSet> {
        self.check_subset(subset)?;
        Ok(self.closure_of(subset))
    }

    pub(crate) fn closure_of(&self, subset: ElementSet) -> ElementSet {
        let base = self.rank_of(subset);
        self.ground()
            .difference(subset)
            .iter()
            .filter(|&e| self.rank_of(subset.with(e)) == base)
            .fold(subset, ElementSet::with)
    }

    pub fn is_flat(&self, subset: ElementSet) -> Result<bool> {
        Ok(self.closure(subset)? == subset)
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> ElementSet {
        self.ground()
            .iter()
            .filter(|&e| self.rank_of(ElementSet::singleton(e)) == 0)
            .collect()
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// `M | S`, with `S`'s elements relabelled `1..=|S|` in increasing order.
    pub fn restrict(&self, subset: ElementSet) -> Result<Matroid> {
        self.minor(subset, ElementSet::EMPTY)
    }

    /// `M / S` on the complement of `S`, relabelled `1..=n-|S|` in increasing order.
    pub fn contract(&self, subset: ElementSet) -> Result<Matroid> {
        self.check_subset(subset)?;
        self.minor(self.ground().difference(subset), subset)
    }

    /// `(M | keep.union(contracted)) / contracted` on the elements of `keep`.
    pub fn minor(&self, keep: ElementSet, contracted: ElementSet) -> Result<Matroid> {
        self.check_subset(keep)?;
        self.check_subset(contracted)?;
        if !keep.intersection(contracted).is_empty() {
            return Err(invalid("kept and contracted sets overlap"));
        }
        if keep.is_empty() {
            return Err(invalid("a minor needs a non-empty ground set"));
        }
        let contracted_rank = self.rank_of(contracted);
        let rank = self.rank_of(keep.union(contracted)) - contracted_rank;
        Ok(Matroid {
            bases: OnceLock::new(),
            n: keep.len(),
            rank,
            backing: Backing::Minor {
                base: Arc::new(self.clone()),
                labels: keep.to_vec(),
                contracted,
                contracted_rank,
            },
        })
    }

    /// `M1 (+) M2` with `M2`'s elements shifted to `n1+1..=n1+n2`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        check_ground(self.n + other.n)?;
        Ok(Matroid {
            bases: OnceLock::new(),
            n: self.n + other.n,
            rank: self.rank + other.rank,
            backing: Backing::DirectSum(Arc::new(self.clone()), Arc::new(other.clone())),
        })
    }

    /// All bases, using the default enumeration budget.
    pub fn enumerate_bases(&self) -> Result<BasisFamily> {
        self.enumerate_bases_within(DEFAULT_SUBSET_BUDGET)
    }

    /// All bases, failing if `C(n, r)` exceeds `budget`.
    pub fn enumerate_bases_within(&self, budget: u128) -> Result<BasisFamily> {
        if let Backing::Bases(family) = &self.backing {
            return Ok(family.clone());
        }
        let candidates = binomial(self.n, self.rank);
        if candidates > budget {
            return Err(Error::ResourceLimit(format!(
                "C({}, {}) = {candidates} candidate bases exceeds budget {budget}",
                self.n, self.rank
            )));
        }
        let family = self.bases.get_or_init(|| {
            let mut bases: Vec<ElementSet> = self
                .ground()
                .subsets_of_size(self.rank)
                .filter(|&s| self.rank_of(s) == self.rank)
                .collect();
            bases.sort_unstable();
            BasisFamily::from_sorted(self.rank, bases)
        });
        Ok(family.clone())
    }

    /// Same ground set size and the same bases.
    pub fn same_bases(&self, other: &Matroid) -> Result<bool> {
        Ok(self.n == other.n
            && self.rank == other.rank
            && self.enumerate_bases()? == other.enumerate_bases()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_elements(v.iter().copied())
    }

    // K_4 on A,B,C,D = 1..4; edges AB, AC, AD, BC, BD, CD = elements 1..6.
    const AB: usize = 1;
    const AC: usize = 2;
    const BC: usize = 4;
    const CD: usize = 6;

    fn k4() -> Matroid {
        Matroid::complete_graph(4).unwrap()
    }

    /// Spanning-tree count by brute force over edge subsets (independent of
    /// the union-find rank): a subset of `n-1` edges spans iff a BFS from
    /// vertex 1 reaches every vertex.
    fn spanning_tree_count(vertices: usize, edges: &[(usize, usize)]) -> usize {
        let m = edges.len();
        (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize == vertices - 1)
            .filter(|mask| {
                let mut seen = vec![false; vertices + 1];
                let mut stack = vec![1];
                seen[1] = true;
                while let Some(x) = stack.pop() {
                    for (i, &(u, v)) in edges.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            for (a, b) in [(u, v), (v, u)] {
                                if a == x && !seen[b] {
                                    seen[b] = true;
                                    stack.push(b);
                                }
                            }
                        }
                    }
                }
                seen[1..].iter().all(|&s| s)
            })
            .count()
    }

    #[test]
    fn graphic_examples() {
        let m = k4();
        assert_eq!(m.full_rank(), 3);
        let edges: Vec<(usize, usize)> = m.graph().unwrap().1.to_vec();
        assert_eq!(spanning_tree_count(4, &edges), 16);
        assert_eq!(m.enumerate_bases().unwrap().len(), 16);

        let path = Matroid::graphic(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.full_rank(), 2);
        assert_eq!(path.enumerate_bases().unwrap().len(), 1);

        let k3 = Matroid::complete_graph(3).unwrap();
        assert_eq!(k3.full_rank(), 2);
        assert_eq!(k3.enumerate_bases().unwrap().len(), 3);
    }

    #[test]
    fn graphic_rejects_bad_input() {
        assert!(matches!(
            Matroid::graphic(3, &[]),
            Err(Error::InvalidInput(_))
        ));
        assert!(Matroid::graphic(3, &[(1, 4)]).is_err());
        assert!(Matroid::graphic(3, &[(0, 1)]).is_err());
    }

    #[test]
    fn multigraph_parallel_edges_and_self_loops() {
        let m = Matroid::graphic(2, &[(1, 2), (1, 2), (2, 2)]).unwrap();
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.loops(), set(&[3]));
        assert_eq!(m.closure(set(&[1])).unwrap(), set(&[1, 2, 3]));
    }

    #[test]
    fn uniform_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.enumerate_bases().unwrap().len(), 6);
        assert_eq!(u24.rank(set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(u24.closure(set(&[1])).unwrap(), set(&[1]));

        let u03 = Matroid::uniform(0, 3).unwrap();
        let b = u03.enumerate_bases().unwrap();
        assert_eq!(b.as_slice(), &[ElementSet::EMPTY]);
        assert_eq!(u03.loops(), ElementSet::full(3));

        assert_eq!(
            Matroid::uniform(3, 3)
                .unwrap()
                .enumerate_bases()
                .unwrap()
                .len(),
            1
        );
        assert!(matches!(
            Matroid::uniform(4, 3),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn linear_examples() {
        let m = Matroid::linear(vec![
            vec![int(1), int(0), int(0), int(1)],
            vec![int(0), int(1), int(0), int(1)],
            vec![int(0), int(0), int(1), int(0)],
        ])
        .unwrap();
        assert_eq!(m.rank(set(&[1, 2, 4])).unwrap(), 2);

        let zero_col = Matroid::linear(vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(zero_col.loops(), set(&[2]));

        let id = Matroid::linear(vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        assert!(id.same_bases(&Matroid::uniform(3, 3).unwrap()).unwrap());
        assert!(Matroid::linear(vec![vec![int(1)], vec![]]).is_err());
        assert!(Matroid::linear(vec![]).is_err());
    }

    #[test]
    fn rank_and_closure_examples() {
        let m = k4();
        assert_eq!(m.rank(m.ground()).unwrap(), 3);
        assert_eq!(m.rank(set(&[AB, AC, BC])).unwrap(), 2);
        assert_eq!(m.closure(set(&[AB, AC])).unwrap(), set(&[AB, AC, BC]));
        assert_eq!(m.closure(ElementSet::EMPTY).unwrap(), ElementSet::EMPTY);
        assert!(m.loops().is_empty());
        assert!(matches!(m.rank(set(&[7])), Err(Error::InvalidInput(_))));
        assert!(m.closure(set(&[9])).is_err());
    }

    #[test]
    fn explicit_bases() {
        let m = Matroid::from_bases(4, vec![set(&[1, 2]), set(&[1, 3])]).unwrap();
        assert_eq!(m.loops(), set(&[4]));
        assert_eq!(m.closure(ElementSet::EMPTY).unwrap(), set(&[4]));
        assert!(Matroid::from_bases(4, vec![set(&[1, 2]), set(&[3, 4])]).is_err());
        assert!(Matroid::from_bases(4, vec![]).is_err());
        assert!(Matroid::from_bases(4, vec![set(&[1, 2]), set(&[1])]).is_err());
        assert!(Matroid::from_bases(2, vec![set(&[3])]).is_err());
    }

    #[test]
    fn exchange_axiom_examples() {
        assert!(verify_basis_exchange(&[set(&[1, 2]), set(&[2, 3]), set(&[1, 3])]).unwrap());
        assert!(!verify_basis_exchange(&[set(&[1, 2]), set(&[3, 4])]).unwrap());
        assert!(verify_basis_exchange(&[set(&[5, 9])]).unwrap());
        assert!(matches!(
            verify_basis_exchange(&[set(&[1]), set(&[1, 2])]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn minors_and_sums() {
        let m = k4();
        let tri = m.restrict(set(&[AB, AC, BC])).unwrap();
        assert_eq!(tri.full_rank(), 2);
        assert!(tri
            .same_bases(&Matroid::complete_graph(3).unwrap())
            .unwrap());

        assert!(m
            .contract(ElementSet::EMPTY)
            .unwrap()
            .same_bases(&m)
            .unwrap());

        let u12 = Matroid::uniform(1, 2).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert_eq!(sum.ground_size(), 4);
        assert_eq!(sum.full_rank(), 2);
        assert_eq!(
            sum.enumerate_bases().unwrap().as_slice(),
            &[set(&[1, 3]), set(&[2, 3]), set(&[1, 4]), set(&[2, 4])]
        );

        // Contracting AB in K_4 leaves a triangle with two doubled edges: 8 trees.
        let contracted = m.contract(set(&[AB])).unwrap();
        assert_eq!(contracted.full_rank(), 2);
        assert_eq!(contracted.enumerate_bases().unwrap().len(), 8);
        // AC and BC become parallel after contracting AB.
        assert_eq!(contracted.rank(set(&[AC - 1, BC - 1])).unwrap(), 1);
        assert_eq!(contracted.rank(set(&[CD - 1])).unwrap(), 1);

        assert!(m.restrict(set(&[7])).is_err());
        assert!(m.minor(set(&[1, 2]), set(&[2])).is_err());
    }

    #[test]
    fn enumeration_budget() {
        let m = Matroid::uniform(10, 40).unwrap();
        assert!(matches!(m.enumerate_bases(), Err(Error::ResourceLimit(_))));
        assert_eq!(
            Matroid::uniform(2, 5)
                .unwrap()
                .enumerate_bases_within(10)
                .unwrap()
                .len(),
            10
        );
        assert!(Matroid::uniform(2, 5)
            .unwrap()
            .enumerate_bases_within(9)
            .is_err());
    }
}
