//! Three characterizations of the Bergman fan of `K_n`, each computed directly.

use crate::error::{Error, Result};
use crate::set::ElementSet;

use super::dissimilarity::{max_attained_twice, EdgeWeighting};
use super::spanning::all_min_spanning_trees;

/// Largest `n` for which every cycle of `K_n` is enumerated.
pub const CYCLE_ENUMERATION_MAX_N: usize = 9;

/// In every triangle the largest weight occurs at least twice.
pub fn membership_triangle(w: &EdgeWeighting) -> bool {
    let n = w.n();
    (1..=n).all(|a| {
        (a + 1..=n).all(|b| {
            (b + 1..=n)
                .all(|c| max_attained_twice(w.between(a, b), w.between(a, c), w.between(b, c)))
        })
    })
}

/// In every cycle the largest weight occurs at least twice. Enumerates each
/// simple cycle of `K_n` once (smallest vertex first, second vertex below the last).
pub fn membership_cycle(w: &EdgeWeighting) -> Result<bool> {
    let n = w.n();
    if n > CYCLE_ENUMERATION_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "cycle enumeration is limited to n <= {CYCLE_ENUMERATION_MAX_N}"
        )));
    }
    let mut path = Vec::with_capacity(n);
    for start in 1..=n {
        path.clear();
        path.push(start);
        if !cycles_ok(w, start, &mut path, ElementSet::singleton(start)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cycles_ok(w: &EdgeWeighting, start: usize, path: &mut Vec<usize>, used: ElementSet) -> bool {
    let last = *path.last().expect("path starts non-empty");
    if path.len() >= 3 && path[1] < last {
        let weights: Vec<_> = path
            .windows(2)
            .map(|p| w.between(p[0], p[1]))
            .chain(std::iter::once(w.between(last, start)))
            .collect();
        let max = weights.iter().max().expect("cycle has edges");
        if weights.iter().filter(|&&x| x == *max).count() < 2 {
            return false;
        }
    }
    for next in start + 1..=w.n() {
        if used.contains(next) {
            continue;
        }
        path.push(next);
        let ok = cycles_ok(w, start, path, used.with(next));
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Every edge lies in some minimum spanning tree.
pub fn membership_mst(w: &EdgeWeighting) -> Result<bool> {
    let covered = all_min_spanning_trees(w)?
        .into_iter()
        .fold(ElementSet::EMPTY, ElementSet::union);
    Ok(covered == ElementSet::full(w.edge_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, Rational};

    fn weighting(n: usize, w: &[i64]) -> EdgeWeighting {
        EdgeWeighting::new(n, w.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn all_three(w: &EdgeWeighting) -> [bool; 3] {
        [
            membership_triangle(w),
            membership_cycle(w).unwrap(),
            membership_mst(w).unwrap(),
        ]
    }

    #[test]
    fn k3_unique_max_fails_everywhere() {
        assert_eq!(all_three(&weighting(3, &[1, 2, 3])), [false; 3]);
    }

    #[test]
    fn constant_weights_pass_everywhere() {
        assert_eq!(all_three(&weighting(5, &[4; 10])), [true; 3]);
    }

    #[test]
    fn ultrametric_weights_pass() {
        let w = EdgeWeighting::new(
            4,
            vec![
                int(1),
                Rational::new(3.into(), 2.into()),
                int(2),
                Rational::new(3.into(), 2.into()),
                int(2),
                int(2),
            ],
        )
        .unwrap();
        assert_eq!(all_three(&w), [true; 3]);
    }

    #[test]
    fn four_cycle_with_unique_max_is_caught() {
        let w = weighting(4, &[1, 1, 1, 1, 1, 2]);
        assert_eq!(all_three(&w), [false; 3]);
    }

    /// Some cycle has a unique maximum iff some edge's endpoints are joined by
    /// strictly lighter edges.
    fn cycle_oracle(w: &EdgeWeighting) -> bool {
        let n = w.n();
        (1..=w.edge_count()).all(|e| {
            let (a, b) = w.endpoints(e);
            let mut seen = vec![false; n + 1];
            let mut stack = vec![a];
            seen[a] = true;
            while let Some(x) = stack.pop() {
                for f in 1..=w.edge_count() {
                    let (u, v) = w.endpoints(f);
                    if w.weight(f) < w.weight(e) && (u == x || v == x) {
                        let y = if u == x { v } else { u };
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            !seen[b]
        })
    }

    #[test]
    fn cycle_predicate_matches_lighter_path_oracle() {
        // Every weighting of K_4 with values in {0, 1, 2}.
        for code in 0..3usize.pow(6) {
            let values: Vec<i64> = (0..6).map(|k| (code / 3usize.pow(k)) as i64 % 3).collect();
            let w = weighting(4, &values);
            assert_eq!(
                membership_cycle(&w).unwrap(),
                cycle_oracle(&w),
                "{values:?}"
            );
        }
    }

    #[test]
    fn large_n_is_refused() {
        let w = weighting(10, &[1; 45]);
        assert!(matches!(membership_cycle(&w), Err(Error::ResourceLimit(_))));
    }
}
