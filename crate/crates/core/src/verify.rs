//! Executable property suites used by `bergman verify`.
//!
//! Each suite runs a family of checks and reports, per check, how many cases
//! were examined and how many failed. Randomized suites draw from a
//! `ChaCha8Rng` seeded by [`Options::seed`].

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bergman::{
    coarse_cells, diamond_equivalence, lattice_of_flats, maximal_flags, mobius_hat,
    order_complex_fine, valid_flags,
};
use crate::error::{invalid, Error, Result};
use crate::matroid::{verify_basis_exchange, Matroid};
use crate::rational::{int, ratio};
use crate::sample;
use crate::set::ElementSet;
use crate::treespace::{
    delta_to_weights, is_ultrametric, membership_cycle, membership_mst, membership_triangle,
    min_spanning_trees_bruteforce, min_spanning_trees_reverse_delete, ranked_topology,
    topology_from_min_bases, tree_to_ultrametric, ultrametric_to_tree, unranked_topology,
    EquidistantTree, Node, BRUTE_FORCE_MAX_N,
};
use crate::weights::{
    decompose_minors, flag_of, in_bergman_fan, is_flag_of_flats, is_valid_flag,
    min_bases_bruteforce, min_bases_greedy, min_bases_of_flag, sum_of_minors, Flag, WeightVector,
};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    UltrametricMembership,
    MobiusPartition,
    GreedyOracle,
    Euler,
    FlagsOfFlats,
    Diamond,
    RoundTrip,
    Cells,
    MstOracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::UltrametricMembership,
        Suite::MobiusPartition,
        Suite::GreedyOracle,
        Suite::Euler,
        Suite::FlagsOfFlats,
        Suite::Diamond,
        Suite::RoundTrip,
        Suite::Cells,
        Suite::MstOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::UltrametricMembership => "theorem-4.5",
            Suite::MobiusPartition => "mobius-partition",
            Suite::GreedyOracle => "greedy-oracle",
            Suite::Euler => "euler",
            Suite::FlagsOfFlats => "theorem-3.4",
            Suite::Diamond => "theorem-3.7",
            Suite::RoundTrip => "round-trip",
            Suite::Cells => "cells",
            Suite::MstOracle => "mst-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites. Unset values fall back to per-suite defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub n: Option<usize>,
    pub max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n: None,
            max_n: None,
            samples: None,
            seed: DEFAULT_SEED,
        }
    }
}

impl Options {
    fn samples(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// `--n` if given, else the default range; everything must lie in `allowed`.
    fn sizes(
        &self,
        default: &[usize],
        allowed: std::ops::RangeInclusive<usize>,
    ) -> Result<Vec<usize>> {
        let sizes = match self.n {
            Some(n) => vec![n],
            None => default.to_vec(),
        };
        check_range("n", &sizes, &allowed)?;
        Ok(sizes)
    }

    fn max_n(&self, default: usize, allowed: std::ops::RangeInclusive<usize>) -> Result<usize> {
        let max_n = self.max_n.unwrap_or(default);
        check_range("max-n", &[max_n], &allowed)?;
        Ok(max_n)
    }
}

fn check_range(
    flag: &str,
    values: &[usize],
    allowed: &std::ops::RangeInclusive<usize>,
) -> Result<()> {
    match values.iter().find(|v| !allowed.contains(v)) {
        Some(v) => Err(invalid(format!(
            "--{flag} {v} is outside the supported range {}..={}",
            allowed.start(),
            allowed.end()
        ))),
        None => Ok(()),
    }
}

/// Outcome of one invariant over many cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "passed": self.passed(),
            "cases": self.cases,
            "failures": self.failures,
        });
        if let Some(detail) = &self.first_failure {
            v["first_failure"] = json!(detail);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }

    fn check(&mut self, name: &str) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(Check::new(name));
        self.checks.last_mut().expect("just pushed")
    }
}

pub fn run(suite: Suite, options: &Options) -> Result<Report> {
    let mut report = Report {
        suite,
        checks: Vec::new(),
    };
    match suite {
        Suite::UltrametricMembership => ultrametric_membership(options, &mut report)?,
        Suite::MobiusPartition => mobius_partition(options, &mut report)?,
        Suite::GreedyOracle => greedy_oracle(options, &mut report)?,
        Suite::Euler => euler(&mut report)?,
        Suite::FlagsOfFlats => flags_of_flats(&mut report)?,
        Suite::Diamond => diamond(&mut report)?,
        Suite::RoundTrip => round_trip(options, &mut report)?,
        Suite::Cells => cells(options, &mut report)?,
        Suite::MstOracle => mst_oracle(options, &mut report)?,
    }
    Ok(report)
}

/// Small matroids covering every backing, with and without loops.
pub fn fixtures() -> Result<Vec<(&'static str, Matroid)>> {
    Ok(vec![
        ("K4", Matroid::complete_graph(4)?),
        ("K5", Matroid::complete_graph(5)?),
        ("U(2,4)", Matroid::uniform(2, 4)?),
        ("U(2,5)", Matroid::uniform(2, 5)?),
        ("U(3,5)", Matroid::uniform(3, 5)?),
        ("U(3,3)", Matroid::uniform(3, 3)?),
        ("linear", linear_fixture()?),
        (
            "multigraph",
            Matroid::graphic(3, &[(1, 2), (1, 2), (2, 3), (3, 3), (1, 3)])?,
        ),
    ])
}

/// Columns e1, e2, e3, e1+e2, e2+e3, e1+e2+e3, 2e3 over the rationals.
pub fn linear_fixture() -> Result<Matroid> {
    let rows = [
        [1, 0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 1, 1, 0],
        [0, 0, 1, 0, 1, 1, 2],
    ];
    Matroid::linear(
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    )
}

fn ultrametric_membership(options: &Options, report: &mut Report) -> Result<()> {
    let samples = options.samples(200);
    let mut rng = options.rng();
    for n in options.sizes(&[4, 5, 6], 3..=7)? {
        let kn = Matroid::complete_graph(n)?;
        for k in 0..2 * samples {
            let delta = if k < samples {
                sample::random_dissimilarity(&mut rng, n)?
            } else {
                tree_to_ultrametric(&sample::random_tree(&mut rng, n)?)
            };
            let w = delta_to_weights(&delta)?;
            let ultra = is_ultrametric(&delta);
            let answers = [
                ("triangle", membership_triangle(&w)),
                ("cycle", membership_cycle(&w)?),
                ("mst", membership_mst(&w)?),
                ("bergman-fan", in_bergman_fan(&kn, &w.to_weight_vector())?),
            ];
            if ultra {
                report
                    .check("ultrametric-instances")
                    .record(true, String::new);
            } else {
                report
                    .check("non-ultrametric-instances")
                    .record(true, String::new);
            }
            for (name, answer) in answers {
                report
                    .check(&format!("ultrametric-iff-{name}"))
                    .record(answer == ultra, || {
                        format!(
                            "n={n} {name}={answer} ultrametric={ultra} d={:?}",
                            pairs(&delta)
                        )
                    });
            }
        }
        for _ in 0..samples {
            let w = sample::random_edge_weighting(&mut rng, n)?;
            let t = membership_triangle(&w);
            let c = membership_cycle(&w)?;
            let m = membership_mst(&w)?;
            report
                .check("predicates-agree-on-arbitrary-weights")
                .record(t == c && c == m, || {
                    format!("n={n} triangle={t} cycle={c} mst={m}")
                });
        }
    }
    Ok(())
}

fn pairs(delta: &crate::treespace::DissimilarityMap) -> Vec<String> {
    delta
        .pair_values()
        .iter()
        .map(ToString::to_string)
        .collect()
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Bell numbers by the Bell triangle.
fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 1..n {
        let mut next = vec![*row.last().expect("nonempty row")];
        for v in &row {
            let last = *next.last().expect("nonempty row");
            next.push(last + v);
        }
        row = next;
    }
    *row.last().expect("nonempty row")
}

fn mobius_partition(options: &Options, report: &mut Report) -> Result<()> {
    let max_n = options.max_n(6, 3..=8)?;
    for n in 3..=max_n {
        let lattice = lattice_of_flats(&Matroid::complete_graph(n)?)?;
        let count = lattice.len();
        report
            .check("flat-count-is-bell-number")
            .record(count == bell(n), || {
                format!("n={n}: {count} flats, expected {}", bell(n))
            });
        let mu = mobius_hat(&lattice);
        report
            .check("mobius-hat-is-factorial")
            .record(mu == factorial(n - 1), || format!("n={n}: mobius hat {mu}"));
    }
    Ok(())
}

fn greedy_oracle(options: &Options, report: &mut Report) -> Result<()> {
    let samples = options.samples(200);
    let mut rng = options.rng();
    for (name, m) in fixtures()? {
        for _ in 0..samples {
            let w = sample::random_weights(&mut rng, m.ground_size());
            let greedy = min_bases_greedy(&m, &w)?;
            let brute = min_bases_bruteforce(&m, &w)?;
            report
                .check("greedy-equals-bruteforce")
                .record(greedy == brute, || format!("{name} w={:?}", strings(&w)));
            report
                .check("basis-exchange")
                .record(verify_basis_exchange(greedy.as_slice())?, || {
                    format!("{name} w={:?}", strings(&w))
                });
            let flag = flag_of(&w)?;
            report
                .check("flag-filter-equals-greedy")
                .record(min_bases_of_flag(&m, &flag)? == greedy, || {
                    format!("{name} flag {flag}")
                });
            let other = same_class(&mut rng, &flag);
            report
                .check("weight-class-well-defined")
                .record(min_bases_greedy(&m, &other)? == greedy, || {
                    format!("{name} w={:?} w'={:?}", strings(&w), strings(&other))
                });
        }
    }
    Ok(())
}

fn strings(w: &WeightVector) -> Vec<String> {
    w.as_slice().iter().map(ToString::to_string).collect()
}

/// A random weight vector whose flag is `flag`.
fn same_class<R: Rng>(rng: &mut R, flag: &Flag) -> WeightVector {
    let mut level = sample::random_rational(rng, 3);
    let mut weights = vec![int(0); flag.ground_size()];
    for layer in flag.layers() {
        for e in layer.iter() {
            weights[e - 1] = level.clone();
        }
        level += ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
    }
    WeightVector::new(weights)
}

fn euler(report: &mut Report) -> Result<()> {
    for (name, m) in fixtures()? {
        if !m.is_loopless() || m.full_rank() < 2 {
            continue;
        }
        let r = m.full_rank();
        let complex = order_complex_fine(&m)?;
        let mu = mobius_hat(&lattice_of_flats(&m)?);
        let chi = complex.reduced_euler();
        let sign = if r % 2 == 0 { 1 } else { -1 };
        report
            .check("reduced-euler-equals-signed-mobius")
            .record(chi == sign * mu, || {
                format!("{name}: euler {chi}, mobius hat {mu}")
            });
        report.check("pure-of-dimension-r-minus-2").record(
            complex.is_pure() && complex.dimension() == Some(r - 2),
            || format!("{name}: dimension {:?}", complex.dimension()),
        );
    }
    Ok(())
}

/// Distinct flags of all weight vectors with entries in `0..levels`.
pub fn flags_of_integer_weights(n: usize, levels: i64) -> Result<BTreeSet<Flag>> {
    let mut flags = BTreeSet::new();
    let mut digits = vec![0i64; n];
    loop {
        flags.insert(flag_of(&WeightVector::from_ints(&digits))?);
        let Some(k) = digits.iter().position(|&d| d + 1 < levels) else {
            break;
        };
        digits[k] += 1;
        digits[..k].iter_mut().for_each(|d| *d = 0);
    }
    Ok(flags)
}

fn flags_of_flats(report: &mut Report) -> Result<()> {
    let matroids = [
        ("K4", Matroid::complete_graph(4)?),
        ("U(2,4)", Matroid::uniform(2, 4)?),
        ("U(3,5)", Matroid::uniform(3, 5)?),
    ];
    for (name, m) in matroids {
        for flag in flags_of_integer_weights(m.ground_size(), 4)? {
            let valid = is_valid_flag(&m, &flag)?;
            let flats = is_flag_of_flats(&m, &flag)?;
            let closed = flag
                .sets()
                .iter()
                .all(|&f| m.closure(f).map(|c| c == f).unwrap_or(false));
            report
                .check("valid-iff-flag-of-flats")
                .record(valid == flats && flats == closed, || {
                    format!("{name} {flag}")
                });
            if valid {
                report.check("valid-flags-seen").record(true, String::new);
            }
            let family = min_bases_of_flag(&m, &flag)?;
            let minors = decompose_minors(&m, &flag)?;
            let product: usize = minors
                .iter()
                .map(|minor| minor.matroid.enumerate_bases().map(|b| b.len()))
                .product::<Result<usize>>()?;
            report
                .check("product-law")
                .record(family.len() == product, || {
                    format!("{name} {flag}: {} vs {product}", family.len())
                });
            report
                .check("direct-sum-of-minors")
                .record(sum_of_minors(&minors)? == family, || {
                    format!("{name} {flag}")
                });
            report.check("representative-weights").record(
                min_bases_bruteforce(&m, &flag.representative_weights())? == family,
                || format!("{name} {flag}"),
            );
        }
    }
    Ok(())
}

fn diamond(report: &mut Report) -> Result<()> {
    let matroids = [
        ("K4", Matroid::complete_graph(4)?),
        ("U(3,5)", Matroid::uniform(3, 5)?),
        ("U(2,4)", Matroid::uniform(2, 4)?),
    ];
    for (name, m) in matroids {
        let maximal = maximal_flags(&m)?;
        let mut merged = DisjointSets::new(maximal.len());
        for a in 0..maximal.len() {
            for b in a + 1..maximal.len() {
                let differing = (0..maximal[a].sets().len())
                    .filter(|&k| maximal[a].sets()[k] != maximal[b].sets()[k])
                    .count();
                if differing != 1 {
                    continue;
                }
                let d = diamond_equivalence(&m, &maximal[a], &maximal[b])?;
                report
                    .check("four-conditions-agree")
                    .record(d.all_agree(), || {
                        format!("{name} {} / {}: {d:?}", maximal[a], maximal[b])
                    });
                if d.same_matroid {
                    merged.union(a, b);
                }
            }
        }
        let index: BTreeMap<&Flag, usize> =
            maximal.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut from_cells: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cell in coarse_cells(&m)? {
            let mut members: Vec<usize> = cell
                .member_flags
                .iter()
                .filter_map(|f| index.get(f).copied())
                .collect();
            if !members.is_empty() {
                members.sort_unstable();
                from_cells.insert(members);
            }
        }
        let from_diamonds = merged.classes();
        report
            .check("coarse-merge-is-diamond-closure")
            .record(from_cells == from_diamonds, || {
                format!("{name}: {from_cells:?} vs {from_diamonds:?}")
            });
        let all = valid_flags(&m)?;
        report.check("every-valid-flag-is-valid").record(
            all.iter().all(|f| is_valid_flag(&m, f).unwrap_or(false)),
            || name.to_string(),
        );
    }
    Ok(())
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        self.0[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra.max(rb)] = ra.min(rb);
    }

    fn classes(&mut self) -> BTreeSet<Vec<usize>> {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.0.len() {
            let root = self.find(x);
            groups.entry(root).or_default().push(x);
        }
        groups.into_values().collect()
    }
}

fn round_trip(options: &Options, report: &mut Report) -> Result<()> {
    let samples = options.samples(500);
    let max_n = options.max_n(7, 2..=MAX_TREE_LEAVES)?;
    let mut rng = options.rng();
    for _ in 0..samples {
        let n = rng.gen_range(2..=max_n);
        let tree = sample::random_tree(&mut rng, n)?;
        let delta = tree_to_ultrametric(&tree);
        let back = ultrametric_to_tree(&delta)?;
        report.check("tree-distance-tree").record(back == tree, || {
            format!("{} became {}", tree.to_newick(4), back.to_newick(4))
        });
        report
            .check("ranked-topology-preserved")
            .record(ranked_topology(&back) == ranked_topology(&tree), || {
                tree.to_newick(4)
            });
        report
            .check("distance-tree-distance")
            .record(tree_to_ultrametric(&back) == delta, || tree.to_newick(4));
        if ranked_topology(&tree).has_ties() {
            report.check("tied-instances").record(true, String::new);
        }
        if tree.internal_vertices().iter().any(|(_, h)| **h < int(0)) {
            report
                .check("negative-height-instances")
                .record(true, String::new);
        }
    }
    Ok(())
}

const MAX_TREE_LEAVES: usize = 11;

fn cells(options: &Options, report: &mut Report) -> Result<()> {
    let samples = options.samples(200);
    let mut rng = options.rng();
    for n in options.sizes(&[4, 5], 3..=6)? {
        let kn = Matroid::complete_graph(n)?;
        let facts = |tree: &EquidistantTree, report: &mut Report| -> Result<_> {
            let w = delta_to_weights(&tree_to_ultrametric(tree))?.to_weight_vector();
            let bases = min_bases_greedy(&kn, &w)?;
            let recovered = topology_from_min_bases(n, &bases)?;
            let unranked = unranked_topology(tree);
            report
                .check("topology-from-min-bases")
                .record(recovered == unranked, || tree.to_newick(4));
            Ok((unranked, ranked_topology(tree), bases, flag_of(&w)?))
        };
        for k in 0..samples {
            let first = sample::random_tree(&mut rng, n)?;
            let second = match k % 3 {
                0 => sample::random_tree(&mut rng, n)?,
                1 => sample::reheight(&mut rng, &first, false)?,
                _ => sample::reheight(&mut rng, &first, true)?,
            };
            let a = facts(&first, report)?;
            let b = facts(&second, report)?;
            let describe = || format!("{} vs {}", first.to_newick(4), second.to_newick(4));
            report
                .check("unranked-iff-same-min-bases")
                .record((a.0 == b.0) == (a.2 == b.2), describe);
            report
                .check("ranked-iff-same-flag")
                .record((a.1 == b.1) == (a.3 == b.3), describe);
        }
    }
    tied_balanced_instance(report)
}

/// Two cherries `{1,2}` and `{3,4}` joined at the same height: the flag of
/// the resulting weighting has a single proper flat, two disjoint edges of
/// `K_4`, which is a degree-two vertex of the fine complex.
fn tied_balanced_instance(report: &mut Report) -> Result<()> {
    let half = ratio(1, 2);
    let tree = EquidistantTree::new(Node::internal(
        int(1),
        vec![
            Node::internal(half.clone(), vec![Node::leaf(1), Node::leaf(2)]),
            Node::internal(half, vec![Node::leaf(3), Node::leaf(4)]),
        ],
    ))?;
    let k4 = Matroid::complete_graph(4)?;
    let w = delta_to_weights(&tree_to_ultrametric(&tree))?.to_weight_vector();
    let flag = flag_of(&w)?;
    let disjoint_edges = ElementSet::from_elements([1, 6]);
    let complex = order_complex_fine(&k4)?;
    let degree = complex
        .vertices()
        .iter()
        .position(|&v| v == disjoint_edges)
        .map(|id| {
            complex
                .edges()
                .iter()
                .filter(|&&(a, b)| a == id || b == id)
                .count()
        });
    report.check("tied-balanced-instance").record(
        ranked_topology(&tree).has_ties()
            && flag.interior() == [disjoint_edges]
            && in_bergman_fan(&k4, &w)?
            && degree == Some(2),
        || format!("flag {flag}, degree {degree:?}"),
    );
    Ok(())
}

fn mst_oracle(options: &Options, report: &mut Report) -> Result<()> {
    let samples = options.samples(200);
    let max_n = options.max_n(6, 2..=BRUTE_FORCE_MAX_N)?;
    let mut rng = options.rng();
    for n in 2..=max_n {
        for k in 0..samples {
            let w = if k % 2 == 0 {
                sample::random_edge_weighting(&mut rng, n)?
            } else {
                delta_to_weights(&tree_to_ultrametric(&sample::random_tree(&mut rng, n)?))?
            };
            let brute: HashSet<ElementSet> =
                min_spanning_trees_bruteforce(&w)?.into_iter().collect();
            let fast: HashSet<ElementSet> =
                min_spanning_trees_reverse_delete(&w)?.into_iter().collect();
            report
                .check("reverse-delete-equals-bruteforce")
                .record(brute == fast, || {
                    format!(
                        "n={n} w={:?}",
                        w.as_slice()
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                    )
                });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Options {
        Options {
            samples: Some(10),
            ..Options::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(
            (1..=7).map(bell).collect::<Vec<_>>(),
            vec![1, 2, 5, 15, 52, 203, 877]
        );
    }

    #[test]
    fn integer_weight_flags() {
        // ordered set partitions of 3 elements into at most 2 blocks: 1 + 6
        assert_eq!(flags_of_integer_weights(3, 2).unwrap().len(), 7);
        // all 13 ordered set partitions of 3 elements
        assert_eq!(flags_of_integer_weights(3, 3).unwrap().len(), 13);
    }

    #[test]
    fn every_suite_passes_quickly() {
        for suite in Suite::ALL {
            let report = run(suite, &quick()).unwrap();
            assert!(report.passed(), "{}", report.to_json());
            assert!(
                report.checks.iter().all(|c| c.cases > 0),
                "{}",
                report.to_json()
            );
        }
    }

    #[test]
    fn out_of_range_sizes_are_rejected() {
        let opts = Options {
            n: Some(12),
            ..quick()
        };
        assert!(run(Suite::UltrametricMembership, &opts).is_err());
        let opts = Options {
            max_n: Some(20),
            ..quick()
        };
        assert!(run(Suite::MobiusPartition, &opts).is_err());
    }
}
