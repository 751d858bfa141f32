//! Subsets of a ground set `{1, .., n}` with `n <= 64`, packed into a `u64`.
//!
//! Element `e` lives in bit `e - 1`. The packed word is the canonical form:
//! equality, hashing and ordering all go through it.

use std::fmt;

/// Largest ground set this crate can represent.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    /// Panics if an element is outside `1..=64`; use [`ElementSet::try_from_elements`]
    /// for unchecked input.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, e| acc.with(e))
    }

    /// Builds a subset of `{1, .., n}`, rejecting out-of-range elements.
    pub fn try_from_elements<I: IntoIterator<Item = usize>>(
        n: usize,
        elements: I,
    ) -> crate::Result<Self> {
        let mut set = ElementSet::EMPTY;
        for e in elements {
            if e == 0 || e > n {
                return Err(crate::error::invalid(format!(
                    "element {e} outside ground set 1..={n}"
                )));
            }
            set = set.with(e);
        }
        Ok(set)
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | ElementSet::singleton(e).0)
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !ElementSet::singleton(e).0)
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of size `k` of `self`, in increasing packed order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        let members = self.to_vec();
        KSubsets::new(members.len(), k).map(move |idx| {
            ElementSet(
                idx.iter()
                    .fold(0u64, |acc, &i| acc | 1u64 << (members[i] - 1)),
            )
        })
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Lexicographic `k`-combinations of `0..n` as index vectors.
struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
