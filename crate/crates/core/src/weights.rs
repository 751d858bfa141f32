//! Weight vectors, the flags of their level sets, and the matroid `M_w` of
//! minimum-weight bases.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::matroid::{BasisFamily, Matroid};
use crate::rational::{int, Rational};
use crate::set::ElementSet;

/// One exact rational weight per ground-set element; entry `i` weighs element `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Self {
        WeightVector(weights)
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        WeightVector(weights.iter().map(|&w| int(w)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight of element `e` (1-indexed).
    pub fn weight(&self, e: usize) -> &Rational {
        &self.0[e - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn total(&self, set: ElementSet) -> Rational {
        set.iter()
            .fold(Rational::zero(), |acc, e| acc + &self.0[e - 1])
    }

    fn check_against(&self, m: &Matroid) -> Result<()> {
        if self.len() != m.ground_size() {
            return Err(invalid(format!(
                "weight vector has length {}, matroid has {} elements",
                self.len(),
                m.ground_size()
            )));
        }
        Ok(())
    }
}

/// A strictly increasing chain `{} = F_0 < F_1 < .. < F_{k+1} = [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    n: usize,
    sets: Vec<ElementSet>,
}

impl Flag {
    /// Validates a complete chain, including the empty first and full last entries.
    pub fn new(n: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if sets.first() != Some(&ElementSet::EMPTY) {
            return Err(invalid("a flag must start with the empty set"));
        }
        if sets.last() != Some(&ElementSet::full(n)) || n == 0 {
            return Err(invalid(format!(
                "a flag must end with the ground set 1..={n}"
            )));
        }
        if let Some(w) = sets.windows(2).find(|w| !w[0].is_proper_subset(w[1])) {
            return Err(invalid(format!(
                "{} is not strictly contained in {}",
                w[0], w[1]
            )));
        }
        Ok(Flag { n, sets })
    }

    /// Builds the flag `{} < chain.. < [n]` from its interior sets.
    pub fn from_interior(n: usize, interior: &[ElementSet]) -> Result<Self> {
        let mut sets = Vec::with_capacity(interior.len() + 2);
        sets.push(ElementSet::EMPTY);
        sets.extend_from_slice(interior);
        sets.push(ElementSet::full(n));
        Flag::new(n, sets)
    }

    /// The one-step flag `{} < [n]`.
    pub fn trivial(n: usize) -> Self {
        Flag {
            n,
            sets: vec![ElementSet::EMPTY, ElementSet::full(n)],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// All sets including `F_0` and `F_{k+1}`.
    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    /// `F_1, .., F_k`.
    pub fn interior(&self) -> &[ElementSet] {
        &self.sets[1..self.sets.len() - 1]
    }

    /// `F_i \ F_{i-1}` for `i = 1..=k+1`.
    pub fn layers(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.sets.windows(2).map(|w| w[1].difference(w[0]))
    }

    pub fn is_trivial(&self) -> bool {
        self.sets.len() == 2
    }

    /// The flag with `F_index` dropped; `index` must name an interior set.
    pub fn without(&self, index: usize) -> Result<Flag> {
        if index == 0 || index + 1 >= self.sets.len() {
            return Err(invalid(format!(
                "index {index} is not an interior position"
            )));
        }
        let mut sets = self.sets.clone();
        sets.remove(index);
        Ok(Flag { n: self.n, sets })
    }

    /// Weight `i - 1` on layer `i`: an integer vector in this flag's weight class.
    pub fn representative_weights(&self) -> WeightVector {
        let mut w = vec![Rational::zero(); self.n];
        for (i, layer) in self.layers().enumerate() {
            for e in layer {
                w[e - 1] = int(i as i64);
            }
        }
        WeightVector(w)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The chain of level sets of `w`, in increasing order of weight.
pub fn flag_of(w: &WeightVector) -> Result<Flag> {
    let n = w.len();
    if n == 0 {
        return Err(invalid("empty weight vector"));
    }
    if n > crate::set::MAX_ELEMENTS {
        return Err(invalid(format!("weight vector of length {n} is too long")));
    }
    let mut levels: Vec<&Rational> = w.0.iter().collect();
    levels.sort();
    levels.dedup();
    let mut sets = vec![ElementSet::EMPTY];
    for level in levels {
        let below: ElementSet = (1..=n).filter(|&e| w.weight(e) <= level).collect();
        sets.push(below);
    }
    Ok(Flag { n, sets })
}

/// Every possible output of the greedy algorithm: grow an independent set by
/// adding a minimum-weight element that keeps it independent, branching over
/// all tied choices.
pub fn min_bases_greedy(m: &Matroid, w: &WeightVector) -> Result<BasisFamily> {
    w.check_against(m)?;
    let r = m.full_rank();
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    let mut stack = vec![ElementSet::EMPTY];
    while let Some(current) = stack.pop() {
        if current.len() == r {
            found.push(current);
            continue;
        }
        let addable: Vec<usize> = m
            .ground()
            .difference(current)
            .iter()
            .filter(|&e| m.rank_of(current.with(e)) == current.len() + 1)
            .collect();
        let Some(lightest) = addable.iter().map(|&e| w.weight(e)).min() else {
            continue;
        };
        for &e in &addable {
            if w.weight(e) == lightest {
                let next = current.with(e);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    BasisFamily::new(r, found)
}

/// Minimum-weight bases by exhaustive comparison over all bases.
pub fn min_bases_bruteforce(m: &Matroid, w: &WeightVector) -> Result<BasisFamily> {
    w.check_against(m)?;
    let all = m.enumerate_bases()?;
    let weighted: Vec<(Rational, ElementSet)> = all.iter().map(|b| (w.total(b), b)).collect();
    let best = weighted.iter().map(|(t, _)| t).min().cloned();
    BasisFamily::new(
        all.rank(),
        weighted
            .into_iter()
            .filter(|(t, _)| Some(t) == best.as_ref())
            .map(|(_, b)| b),
    )
}

fn check_flag(m: &Matroid, flag: &Flag) -> Result<()> {
    if flag.ground_size() != m.ground_size() {
        return Err(invalid(format!(
            "flag on {} elements used with a matroid on {}",
            flag.ground_size(),
            m.ground_size()
        )));
    }
    Ok(())
}

/// Bases of `M` meeting every `F_i` in `r(F_i)` elements.
pub fn min_bases_of_flag(m: &Matroid, flag: &Flag) -> Result<BasisFamily> {
    check_flag(m, flag)?;
    let targets: Vec<(ElementSet, usize)> =
        flag.interior().iter().map(|&f| (f, m.rank_of(f))).collect();
    let all = m.enumerate_bases()?;
    BasisFamily::new(
        all.rank(),
        all.iter()
            .filter(|b| targets.iter().all(|&(f, r)| b.intersection(f).len() == r)),
    )
}

/// The matroid `M_F` as an explicit basis family on the same ground set.
pub fn matroid_of_flag(m: &Matroid, flag: &Flag) -> Result<Matroid> {
    let family = min_bases_of_flag(m, flag)?;
    Ok(Matroid::from_trusted_bases(m.ground_size(), family))
}

/// One summand `(M | F_i) / F_{i-1}`, remembering which original elements it lives on.
#[derive(Debug, Clone)]
pub struct LayerMinor {
    /// Original labels of the minor's elements `1..=|layer|`, in increasing order.
    pub elements: ElementSet,
    pub matroid: Matroid,
}

/// `[(M | F_i) / F_{i-1}]` for `i = 1..=k+1`.
pub fn decompose_minors(m: &Matroid, flag: &Flag) -> Result<Vec<LayerMinor>> {
    check_flag(m, flag)?;
    flag.sets()
        .windows(2)
        .map(|w| {
            let layer = w[1].difference(w[0]);
            Ok(LayerMinor {
                elements: layer,
                matroid: m.minor(layer, w[0])?,
            })
        })
        .collect()
}

/// Direct sum of the minors, with bases translated back to original labels.
pub fn sum_of_minors(minors: &[LayerMinor]) -> Result<BasisFamily> {
    let mut iter = minors.iter();
    let first = iter.next().ok_or_else(|| invalid("no minors to sum"))?;
    let mut sum = first.matroid.clone();
    let mut labels: Vec<usize> = first.elements.to_vec();
    for minor in iter {
        sum = sum.direct_sum(&minor.matroid)?;
        labels.extend(minor.elements.iter());
    }
    let bases = sum.enumerate_bases()?;
    BasisFamily::new(
        bases.rank(),
        bases
            .iter()
            .map(|b| b.iter().map(|e| labels[e - 1]).collect()),
    )
}

/// A flag is valid when `M_F` has no loops.
pub fn is_valid_flag(m: &Matroid, flag: &Flag) -> Result<bool> {
    let family = min_bases_of_flag(m, flag)?;
    Ok(family.support() == m.ground())
}

/// Every set of the flag is closed in `M`.
pub fn is_flag_of_flats(m: &Matroid, flag: &Flag) -> Result<bool> {
    check_flag(m, flag)?;
    Ok(flag.sets().iter().all(|&f| m.closure_of(f) == f))
}

/// `w` lies in the Bergman fan of `M`.
pub fn in_bergman_fan(m: &Matroid, w: &WeightVector) -> Result<bool> {
    w.check_against(m)?;
    is_valid_flag(m, &flag_of(w)?)
}
