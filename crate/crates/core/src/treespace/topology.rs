//! Tree shapes with and without the order of internal heights.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};
use crate::matroid::BasisFamily;
use crate::rational::Rational;
use crate::set::ElementSet;

use super::dissimilarity::{pair_count, pair_index, EdgeWeighting};
use super::spanning::is_spanning_tree;
use super::tree::EquidistantTree;

/// A rooted leaf-labelled shape, stored as the leaf sets (clusters) of its
/// internal vertices. The root's cluster is `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnrankedTopology {
    n: usize,
    clusters: BTreeSet<ElementSet>,
}

/// A shape together with the weak order of its internal heights: clusters
/// grouped by height, lowest group first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankedTopology {
    n: usize,
    levels: Vec<BTreeSet<ElementSet>>,
}

impl UnrankedTopology {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clusters(&self) -> &BTreeSet<ElementSet> {
        &self.clusters
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.clusters.len()
    }

    /// Every internal vertex has exactly two children.
    pub fn is_binary(&self) -> bool {
        self.clusters.len() + 1 == self.n
    }
}

impl RankedTopology {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[BTreeSet<ElementSet>] {
        &self.levels
    }

    /// Forgets the height order.
    pub fn unranked(&self) -> UnrankedTopology {
        UnrankedTopology {
            n: self.n,
            clusters: self.levels.iter().flatten().copied().collect(),
        }
    }

    /// Some height is shared by two or more internal vertices.
    pub fn has_ties(&self) -> bool {
        self.levels.iter().any(|l| l.len() > 1)
    }
}

pub fn unranked_topology(tree: &EquidistantTree) -> UnrankedTopology {
    UnrankedTopology {
        n: tree.n(),
        clusters: tree
            .internal_vertices()
            .into_iter()
            .map(|(c, _)| c)
            .collect(),
    }
}

pub fn ranked_topology(tree: &EquidistantTree) -> RankedTopology {
    let mut by_height: BTreeMap<&Rational, BTreeSet<ElementSet>> = BTreeMap::new();
    for (cluster, height) in tree.internal_vertices() {
        by_height.entry(height).or_default().insert(cluster);
    }
    RankedTopology {
        n: tree.n(),
        levels: by_height.into_values().collect(),
    }
}

/// Which edges of the triangle `{a, b, c}` are maximal, decided only from
/// membership in the family of minimum spanning trees.
fn triangle_maxima(
    shape: &EdgeWeighting,
    family: &BasisFamily,
    a: usize,
    b: usize,
    c: usize,
) -> Result<[bool; 3]> {
    let n = shape.n();
    let edges = [
        pair_index(n, a, b) + 1,
        pair_index(n, a, c) + 1,
        pair_index(n, b, c) + 1,
    ];
    let mut maxima = [false; 3];
    for (k, &e) in edges.iter().enumerate() {
        let tree = family
            .iter()
            .find(|t| t.contains(e))
            .ok_or_else(|| invalid(format!("edge {e} lies in no minimum spanning tree")))?;
        let others = [edges[(k + 1) % 3], edges[(k + 2) % 3]];
        let swapped = others
            .iter()
            .map(|&f| tree.without(e).with(f))
            .find(|&t| is_spanning_tree(shape, t))
            .ok_or_else(|| invalid("no edge swap in a triangle yields a spanning tree"))?;
        maxima[k] = family.contains(swapped);
    }
    Ok(maxima)
}

/// Recovers the tree shape from the minimum spanning trees of an ultrametric
/// weighting of `K_n`.
///
/// For each triangle the edge-swap test finds its maximal edges; two maxima
/// single out the leaf that branched off first, three mean the triple is
/// unresolved. The shape is then assembled top-down: at a cluster, leaves
/// joined by some resolved triple inside it fall into the same child.
pub fn topology_from_min_bases(n: usize, family: &BasisFamily) -> Result<UnrankedTopology> {
    if n < 2 || pair_count(n) > crate::set::MAX_ELEMENTS {
        return Err(invalid(format!("unsupported leaf count {n}")));
    }
    if family.is_empty() || family.rank() != n - 1 {
        return Err(invalid("family is not a set of spanning trees of K_n"));
    }
    let shape = EdgeWeighting::new(n, vec![Rational::default(); pair_count(n)])?;
    if let Some(t) = family.iter().find(|&t| !is_spanning_tree(&shape, t)) {
        return Err(invalid(format!("{t} is not a spanning tree of K_{n}")));
    }
    // closer[a][b] lists every c with ab|c.
    let mut closer: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n + 1]; n + 1];
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let [ab, ac, bc] = triangle_maxima(&shape, family, a, b, c)?;
                let cherry = match (ab, ac, bc) {
                    (true, true, true) => None,
                    (false, true, true) => Some((a, b, c)),
                    (true, false, true) => Some((a, c, b)),
                    (true, true, false) => Some((b, c, a)),
                    _ => {
                        return Err(invalid(format!(
                            "triangle ({a}, {b}, {c}) does not have two maximal edges"
                        )))
                    }
                };
                if let Some((x, y, z)) = cherry {
                    closer[x][y].push(z);
                    closer[y][x].push(z);
                }
            }
        }
    }
    let mut clusters = BTreeSet::new();
    let mut pending = vec![ElementSet::full(n)];
    while let Some(cluster) = pending.pop() {
        clusters.insert(cluster);
        let members = cluster.to_vec();
        let mut component: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &x in &members {
            for &y in &members {
                if x < y && closer[x][y].iter().any(|&z| cluster.contains(z)) {
                    let (rx, ry) = (find(&mut component, x), find(&mut component, y));
                    component[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        let mut children: BTreeMap<usize, ElementSet> = BTreeMap::new();
        for &x in &members {
            let root = find(&mut component, x);
            let entry = children.entry(root).or_default();
            *entry = entry.with(x);
        }
        if children.len() < 2 {
            return Err(invalid(format!(
                "triple data leaves cluster {cluster} unsplit"
            )));
        }
        pending.extend(children.into_values().filter(|c| c.len() >= 2));
    }
    Ok(UnrankedTopology { n, clusters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::rational::{int, ratio};
    use crate::treespace::{delta_to_weights, ultrametric_to_tree, DissimilarityMap};
    use crate::weights::{flag_of, min_bases_of_flag};

    fn min_bases(delta: &DissimilarityMap) -> BasisFamily {
        let m = Matroid::complete_graph(delta.n()).unwrap();
        let w = delta_to_weights(delta).unwrap().to_weight_vector();
        min_bases_of_flag(&m, &flag_of(&w).unwrap()).unwrap()
    }

    fn clusters(v: &[&[usize]]) -> BTreeSet<ElementSet> {
        v.iter()
            .map(|c| ElementSet::from_elements(c.iter().copied()))
            .collect()
    }

    #[test]
    fn caterpillar_from_min_bases() {
        let d = DissimilarityMap::from_pairs(
            4,
            vec![int(1), ratio(3, 2), int(2), ratio(3, 2), int(2), int(2)],
        )
        .unwrap();
        let topo = topology_from_min_bases(4, &min_bases(&d)).unwrap();
        assert_eq!(
            topo.clusters(),
            &clusters(&[&[1, 2], &[1, 2, 3], &[1, 2, 3, 4]])
        );
        let tree = ultrametric_to_tree(&d).unwrap();
        assert_eq!(topo, unranked_topology(&tree));
        let ranked = ranked_topology(&tree);
        assert_eq!(ranked.levels().len(), 3);
        assert!(!ranked.has_ties());
        assert!(topo.is_binary());
    }

    #[test]
    fn all_trees_give_the_star() {
        let m = Matroid::complete_graph(5).unwrap();
        let all = m.enumerate_bases().unwrap();
        let topo = topology_from_min_bases(5, &all).unwrap();
        assert_eq!(topo.clusters(), &clusters(&[&[1, 2, 3, 4, 5]]));
    }

    #[test]
    fn balanced_tied_versus_untied() {
        let tied =
            DissimilarityMap::from_pairs(4, vec![int(1), int(2), int(2), int(2), int(2), int(1)])
                .unwrap();
        let untied = DissimilarityMap::from_pairs(
            4,
            vec![int(1), int(2), int(2), int(2), int(2), ratio(1, 2)],
        )
        .unwrap();
        let (t1, t2) = (
            ultrametric_to_tree(&tied).unwrap(),
            ultrametric_to_tree(&untied).unwrap(),
        );
        assert_eq!(unranked_topology(&t1), unranked_topology(&t2));
        assert_ne!(ranked_topology(&t1), ranked_topology(&t2));
        assert!(ranked_topology(&t1).has_ties());
        assert_eq!(ranked_topology(&t1).unranked(), unranked_topology(&t1));
        let from_bases = topology_from_min_bases(4, &min_bases(&tied)).unwrap();
        assert_eq!(
            from_bases.clusters(),
            &clusters(&[&[1, 2], &[3, 4], &[1, 2, 3, 4]])
        );
    }

    #[test]
    fn rejects_families_that_are_not_m_omega() {
        // The single path 1-2-3-4 is the unique minimum for a non-ultrametric weighting.
        let path = BasisFamily::new(3, [ElementSet::from_elements([1, 4, 6])]).unwrap();
        assert!(topology_from_min_bases(4, &path).is_err());
        let wrong_rank = BasisFamily::new(2, [ElementSet::from_elements([1, 2])]).unwrap();
        assert!(topology_from_min_bases(4, &wrong_rank).is_err());
    }
}
