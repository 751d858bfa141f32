//! The coarse subdivision (cells of equal `M_F`) and the diamond criterion
//! for when two adjacent maximal cells share a matroid.

use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Result};
use crate::matroid::{BasisFamily, Matroid};
use crate::set::ElementSet;
use crate::weights::{min_bases_of_flag, Flag};

use super::complex::{order_complex_fine, SimplicialComplex};

/// Valid flags that all induce the same minimum-basis matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseCell {
    pub member_flags: Vec<Flag>,
    pub signature: BasisFamily,
}

impl CoarseCell {
    /// Dimension of the largest fine cell inside (interior length minus one).
    pub fn dimension(&self) -> usize {
        self.member_flags
            .iter()
            .map(|f| f.interior().len() - 1)
            .max()
            .unwrap_or(0)
    }
}

/// Every non-trivial valid flag of `M`: the faces of the fine complex.
pub fn valid_flags(m: &Matroid) -> Result<Vec<Flag>> {
    let complex = order_complex_fine(m)?;
    complex
        .faces()
        .iter()
        .map(|f| complex.face_flag(f))
        .collect()
}

/// Flags with one flat in every rank `0..=r`.
pub fn maximal_flags(m: &Matroid) -> Result<Vec<Flag>> {
    let complex = order_complex_fine(m)?;
    complex
        .maximal_faces()
        .iter()
        .map(|f| complex.face_flag(f))
        .collect()
}

/// Groups all valid flags by their basis family. Cells are ordered by
/// dimension, then by their first member flag.
pub fn coarse_cells(m: &Matroid) -> Result<Vec<CoarseCell>> {
    let complex = order_complex_fine(m)?;
    coarse_cells_of(m, &complex)
}

pub fn coarse_cells_of(m: &Matroid, complex: &SimplicialComplex) -> Result<Vec<CoarseCell>> {
    let mut groups: HashMap<BasisFamily, Vec<Flag>> = HashMap::new();
    for face in complex.faces() {
        let flag = complex.face_flag(&face)?;
        let signature = min_bases_of_flag(m, &flag)?;
        groups.entry(signature).or_default().push(flag);
    }
    let mut cells: Vec<CoarseCell> = groups
        .into_iter()
        .map(|(signature, mut member_flags)| {
            member_flags.sort();
            CoarseCell {
                member_flags,
                signature,
            }
        })
        .collect();
    cells.sort_by(|a, b| {
        a.dimension()
            .cmp(&b.dimension())
            .then_with(|| a.member_flags[0].cmp(&b.member_flags[0]))
    });
    Ok(cells)
}

/// The 1-skeleton of a coarse subdivision of a 1-dimensional complex:
/// nodes are the 0-dimensional cells, edges the 1-dimensional ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellGraph {
    /// Cell index of each node.
    pub nodes: Vec<usize>,
    /// Endpoints as node positions, one per 1-dimensional cell.
    pub edges: Vec<(usize, usize)>,
}

pub fn coarse_graph(cells: &[CoarseCell]) -> Result<CellGraph> {
    if cells.iter().any(|c| c.dimension() > 1) {
        return Err(invalid(
            "coarse graph needs a complex of dimension at most 1",
        ));
    }
    let nodes: Vec<usize> = (0..cells.len())
        .filter(|&i| cells[i].dimension() == 0)
        .collect();
    // Each vertex flag belongs to exactly one cell.
    let mut owner: HashMap<ElementSet, usize> = HashMap::new();
    for (i, cell) in cells.iter().enumerate() {
        for flag in &cell.member_flags {
            if let [v] = flag.interior() {
                owner.insert(*v, i);
            }
        }
    }
    let position: HashMap<usize, usize> = nodes.iter().enumerate().map(|(p, &c)| (c, p)).collect();
    let mut edges = Vec::new();
    for (i, cell) in cells.iter().enumerate().filter(|(_, c)| c.dimension() == 1) {
        let ends: BTreeSet<usize> = cell
            .member_flags
            .iter()
            .filter(|f| f.interior().len() == 2)
            .flat_map(|f| f.interior().to_vec())
            .map(|v| owner[&v])
            .filter(|&c| c != i)
            .collect();
        let ends: Vec<usize> = ends.into_iter().collect();
        let [a, b] = ends[..] else {
            return Err(invalid(format!(
                "1-cell {i} has {} boundary cells",
                ends.len()
            )));
        };
        let (Some(&pa), Some(&pb)) = (position.get(&a), position.get(&b)) else {
            return Err(invalid(format!(
                "1-cell {i} is bounded by a non-vertex cell"
            )));
        };
        edges.push((pa.min(pb), pa.max(pb)));
    }
    edges.sort_unstable();
    Ok(CellGraph { nodes, edges })
}

/// The four conditions compared for two adjacent maximal flags `F`, `F'`
/// that differ only at position `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondReport {
    pub index: usize,
    /// `M_F = M_F'`.
    pub same_matroid: bool,
    /// `M_F = M_{F - F_i}`.
    pub same_as_coarser: bool,
    /// `F_i ∪ F'_i = F_{i+1}`.
    pub union_is_next: bool,
    /// `[F_{i-1}, F_{i+1}]` has exactly two middle elements.
    pub interval_is_diamond: bool,
}

impl DiamondReport {
    pub fn all_agree(&self) -> bool {
        let c = self.same_matroid;
        c == self.same_as_coarser && c == self.union_is_next && c == self.interval_is_diamond
    }
}

fn check_maximal_flag(m: &Matroid, flag: &Flag) -> Result<()> {
    if flag.ground_size() != m.ground_size() || flag.sets().len() != m.full_rank() + 1 {
        return Err(invalid(format!(
            "{flag} is not a maximal flag of this matroid"
        )));
    }
    for (k, &f) in flag.sets().iter().enumerate() {
        if m.closure_of(f) != f || m.rank_of(f) != k {
            return Err(invalid(format!("{f} is not a flat of rank {k}")));
        }
    }
    Ok(())
}

pub fn diamond_equivalence(m: &Matroid, f: &Flag, g: &Flag) -> Result<DiamondReport> {
    check_maximal_flag(m, f)?;
    check_maximal_flag(m, g)?;
    let differing: Vec<usize> = (0..f.sets().len())
        .filter(|&k| f.sets()[k] != g.sets()[k])
        .collect();
    let [i] = differing[..] else {
        return Err(invalid(format!(
            "flags differ in {} positions, adjacent flags differ in exactly one",
            differing.len()
        )));
    };
    let (below, above) = (f.sets()[i - 1], f.sets()[i + 1]);
    let mf = min_bases_of_flag(m, f)?;
    let mg = min_bases_of_flag(m, g)?;
    let coarser = min_bases_of_flag(m, &f.without(i)?)?;
    let middle: BTreeSet<ElementSet> = above
        .difference(below)
        .iter()
        .map(|e| m.closure_of(below.with(e)))
        .collect();
    Ok(DiamondReport {
        index: i,
        same_matroid: mf == mg,
        same_as_coarser: mf == coarser,
        union_is_next: f.sets()[i].union(g.sets()[i]) == above,
        interval_is_diamond: middle.len() == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_elements(v.iter().copied())
    }

    fn k4() -> Matroid {
        Matroid::complete_graph(4).unwrap()
    }

    #[test]
    fn diamond_through_disjoint_edges() {
        // AB=1, CD=6: [{}, {AB,CD}] = {{}, AB, CD, ABCD} is a diamond.
        let f = Flag::from_interior(6, &[set(&[1]), set(&[1, 6])]).unwrap();
        let g = Flag::from_interior(6, &[set(&[6]), set(&[1, 6])]).unwrap();
        let report = diamond_equivalence(&k4(), &f, &g).unwrap();
        assert_eq!(report.index, 1);
        assert!(report.same_matroid && report.same_as_coarser);
        assert!(report.union_is_next && report.interval_is_diamond);
    }

    #[test]
    fn no_diamond_through_a_triangle() {
        let tri = set(&[1, 2, 4]);
        let f = Flag::from_interior(6, &[set(&[1]), tri]).unwrap();
        let g = Flag::from_interior(6, &[set(&[2]), tri]).unwrap();
        let report = diamond_equivalence(&k4(), &f, &g).unwrap();
        assert!(!report.same_matroid && !report.same_as_coarser);
        assert!(!report.union_is_next && !report.interval_is_diamond);
        assert!(report.all_agree());
    }

    #[test]
    fn u22_pair() {
        let m = Matroid::uniform(2, 2).unwrap();
        let f = Flag::from_interior(2, &[set(&[1])]).unwrap();
        let g = Flag::from_interior(2, &[set(&[2])]).unwrap();
        let report = diamond_equivalence(&m, &f, &g).unwrap();
        assert!(report.same_matroid && report.all_agree());
    }

    #[test]
    fn rejects_non_adjacent_or_non_maximal() {
        let m = k4();
        let f = Flag::from_interior(6, &[set(&[1]), set(&[1, 6])]).unwrap();
        let far = Flag::from_interior(6, &[set(&[2]), set(&[2, 5])]).unwrap();
        assert!(diamond_equivalence(&m, &f, &far).is_err());
        assert!(diamond_equivalence(&m, &f, &f).is_err());
        let short = Flag::from_interior(6, &[set(&[1])]).unwrap();
        assert!(diamond_equivalence(&m, &f, &short).is_err());
        let not_flats = Flag::from_interior(6, &[set(&[1]), set(&[1, 2])]).unwrap();
        assert!(diamond_equivalence(&m, &f, &not_flats).is_err());
    }

    #[test]
    fn k4_coarse_cells() {
        let cells = coarse_cells(&k4()).unwrap();
        let vertices = cells.iter().filter(|c| c.dimension() == 0).count();
        let edges = cells.iter().filter(|c| c.dimension() == 1).count();
        assert_eq!((vertices, edges), (10, 15));
        let merged: Vec<&CoarseCell> = cells.iter().filter(|c| c.member_flags.len() > 1).collect();
        assert_eq!(merged.len(), 3);
        assert!(merged.iter().all(|c| c.member_flags.len() == 3));
        let graph = coarse_graph(&cells).unwrap();
        assert_eq!(graph.nodes.len(), 10);
        assert_eq!(graph.edges.len(), 15);
    }

    #[test]
    fn u23_has_three_singleton_cells() {
        let cells = coarse_cells(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(cells.len(), 3);
        assert!(cells.iter().all(|c| c.member_flags.len() == 1));
    }

    #[test]
    fn trivial_flag_is_never_a_cell() {
        let cells = coarse_cells(&k4()).unwrap();
        assert!(cells
            .iter()
            .flat_map(|c| &c.member_flags)
            .all(|f| !f.is_trivial()));
        assert!(
            coarse_cells(&Matroid::graphic(2, &[(1, 2), (2, 2)]).unwrap())
                .unwrap()
                .is_empty()
        );
    }
}
