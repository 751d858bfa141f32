use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::rational::Rational;
use crate::set::MAX_ELEMENTS;
use crate::weights::WeightVector;

/// Number of unordered pairs `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}` (1-indexed leaves, `i != j`) in the
/// lexicographic order `(1,2), (1,3), .., (n-1,n)`; 0-based.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, index: usize) -> (usize, usize) {
    let mut rest = index;
    for i in 1..n {
        let row = n - i;
        if rest < row {
            return (i, i + 1 + rest);
        }
        rest -= row;
    }
    panic!("pair index {index} out of range for n = {n}");
}

/// A symmetric map on `[n] x [n]` with zero diagonal. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DissimilarityMap {
    n: usize,
    values: Vec<Rational>,
}

impl DissimilarityMap {
    /// From a full square matrix; rejects asymmetry and non-zero diagonals.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(invalid("dissimilarity map needs at least one leaf"));
        }
        if n > MAX_ELEMENTS {
            return Err(invalid(format!("{n} leaves exceeds the supported maximum")));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(invalid(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                rows[i].len()
            )));
        }
        let mut values = Vec::with_capacity(pair_count(n));
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(invalid(format!(
                    "diagonal entry d({0},{0}) is not zero",
                    i + 1
                )));
            }
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(invalid(format!(
                        "d({},{}) != d({},{})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                values.push(rows[i][j].clone());
            }
        }
        Ok(DissimilarityMap { n, values })
    }

    /// From the upper-triangle values in lexicographic pair order.
    pub fn from_pairs(n: usize, values: Vec<Rational>) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(invalid(format!("unsupported leaf count {n}")));
        }
        if values.len() != pair_count(n) {
            return Err(invalid(format!(
                "{} pair values given, {n} leaves need {}",
                values.len(),
                pair_count(n)
            )));
        }
        Ok(DissimilarityMap { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d(i, j)` for 1-indexed leaves.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        if i == j {
            Rational::zero()
        } else {
            self.values[pair_index(self.n, i, j)].clone()
        }
    }

    pub fn pair_values(&self) -> &[Rational] {
        &self.values
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// A weight on each edge of `K_n`, edges in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeWeighting {
    n: usize,
    weights: Vec<Rational>,
}

impl EdgeWeighting {
    pub fn new(n: usize, weights: Vec<Rational>) -> Result<Self> {
        if n < 2 {
            return Err(invalid("K_n needs at least two vertices"));
        }
        if pair_count(n) > MAX_ELEMENTS {
            return Err(invalid(format!("K_{n} has too many edges")));
        }
        if weights.len() != pair_count(n) {
            return Err(invalid(format!(
                "edge weighting of K_{n} needs {} entries, got {}",
                pair_count(n),
                weights.len()
            )));
        }
        Ok(EdgeWeighting { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Weight of edge element `e` (1-indexed, as in `Matroid::complete_graph`).
    pub fn weight(&self, e: usize) -> &Rational {
        &self.weights[e - 1]
    }

    pub fn between(&self, i: usize, j: usize) -> &Rational {
        &self.weights[pair_index(self.n, i, j)]
    }

    /// Endpoints of edge element `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        pair_at(self.n, e - 1)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    pub fn to_weight_vector(&self) -> WeightVector {
        WeightVector::new(self.weights.clone())
    }
}

pub fn delta_to_weights(delta: &DissimilarityMap) -> Result<EdgeWeighting> {
    EdgeWeighting::new(delta.n, delta.values.clone())
}

pub fn weights_to_delta(w: &EdgeWeighting) -> DissimilarityMap {
    DissimilarityMap {
        n: w.n,
        values: w.weights.clone(),
    }
}

/// A triple of distinct leaves whose three distances have a unique maximum.
pub fn ultrametric_witness(delta: &DissimilarityMap) -> Option<(usize, usize, usize)> {
    let n = delta.n;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (a, b, c) = (delta.get(i, j), delta.get(i, k), delta.get(j, k));
                if !max_attained_twice(&a, &b, &c) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub(crate) fn max_attained_twice(a: &Rational, b: &Rational, c: &Rational) -> bool {
    let max = a.max(b).max(c);
    [a, b, c].iter().filter(|&&x| x == max).count() >= 2
}

/// Every triple of distinct leaves attains its maximum distance at least twice.
pub fn is_ultrametric(delta: &DissimilarityMap) -> bool {
    ultrametric_witness(delta).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn from_six(v: [Rational; 6]) -> DissimilarityMap {
        DissimilarityMap::from_pairs(4, v.to_vec()).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        assert_eq!(pair_index(4, 1, 2), 0);
        assert_eq!(pair_index(4, 3, 4), 5);
        assert_eq!(pair_index(4, 2, 1), 0);
        for n in 2..9 {
            for idx in 0..pair_count(n) {
                let (i, j) = pair_at(n, idx);
                assert_eq!(pair_index(n, i, j), idx);
            }
        }
    }

    #[test]
    fn construction_validates() {
        assert!(DissimilarityMap::new(vec![vec![int(0), int(1)], vec![int(2), int(0)]]).is_err());
        assert!(DissimilarityMap::new(vec![vec![int(1), int(1)], vec![int(1), int(0)]]).is_err());
        assert!(DissimilarityMap::new(vec![vec![int(0)], vec![int(0)]]).is_err());
        assert!(DissimilarityMap::new(vec![]).is_err());
        assert!(DissimilarityMap::from_pairs(4, vec![int(1); 5]).is_err());
        let d = DissimilarityMap::new(vec![vec![int(0), int(-3)], vec![int(-3), int(0)]]).unwrap();
        assert_eq!(d.get(2, 1), int(-3));
        assert_eq!(DissimilarityMap::new(d.rows()).unwrap(), d);
    }

    #[test]
    fn ultrametric_examples() {
        assert!(is_ultrametric(&from_six([
            int(2),
            int(2),
            int(2),
            int(2),
            int(2),
            int(2)
        ])));
        let tri = |a, b, c| DissimilarityMap::from_pairs(3, vec![int(a), int(b), int(c)]).unwrap();
        assert!(is_ultrametric(&tri(1, 2, 2)));
        assert!(!is_ultrametric(&tri(1, 2, 3)));
        assert_eq!(ultrametric_witness(&tri(1, 2, 3)), Some((1, 2, 3)));
        // The caterpillar map (2(1-x-y), 2(1-y), 2, 2(1-y), 2, 2) at x = y = 1/4.
        let x = ratio(1, 4);
        let y = ratio(1, 4);
        let one = int(1);
        let two = int(2);
        let f = from_six([
            &two * (&one - &x - &y),
            &two * (&one - &y),
            two.clone(),
            &two * (&one - &y),
            two.clone(),
            two.clone(),
        ]);
        assert_eq!(
            f.pair_values(),
            &[int(1), ratio(3, 2), int(2), ratio(3, 2), int(2), int(2)]
        );
        assert!(is_ultrametric(&f));
        // Negative values are allowed.
        assert!(is_ultrametric(&tri(-4, -1, -1)));
    }

    #[test]
    fn weights_round_trip() {
        let d = from_six([int(1), int(2), int(3), int(4), int(5), int(6)]);
        let w = delta_to_weights(&d).unwrap();
        assert_eq!(w.weight(1), &int(1));
        assert_eq!(w.weight(6), &int(6));
        assert_eq!(w.between(3, 4), &int(6));
        assert_eq!(w.endpoints(6), (3, 4));
        assert_eq!(weights_to_delta(&w), d);
        assert!(EdgeWeighting::new(4, vec![int(0); 5]).is_err());
        assert!(EdgeWeighting::new(1, vec![]).is_err());
        assert!(delta_to_weights(&DissimilarityMap::from_pairs(1, vec![]).unwrap()).is_err());
    }
}
