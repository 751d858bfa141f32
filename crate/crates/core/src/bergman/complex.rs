//! The fine subdivision: order complex of the proper part of the lattice of flats.

use std::collections::HashSet;

use crate::error::Result;
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::weights::Flag;

use super::lattice::{lattice_of_flats, FlatLattice};

/// A simplicial complex stored by its facets. Vertex ids index `vertices`;
/// each facet is a strictly increasing id list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    vertices: Vec<ElementSet>,
    maximal_faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty(n: usize) -> Self {
        SimplicialComplex {
            n,
            vertices: Vec::new(),
            maximal_faces: Vec::new(),
        }
    }

    /// Ground-set size of the flats labelling the vertices.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[ElementSet] {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal_faces
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.maximal_faces.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        let dims: HashSet<usize> = self.maximal_faces.iter().map(Vec::len).collect();
        dims.len() <= 1
    }

    /// Every non-empty face, each listed once.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for facet in &self.maximal_faces {
            for mask in 1u64..(1u64 << facet.len()) {
                let face: Vec<usize> = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(face);
            }
        }
        let mut faces: Vec<Vec<usize>> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    /// `f_k` = number of `k`-dimensional faces, `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut f = vec![0; dim + 1];
        for face in self.faces() {
            f[face.len() - 1] += 1;
        }
        f
    }

    /// `sum_k (-1)^k f_k - 1`; the empty complex gives `-1`.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &fk)| if k % 2 == 0 { fk as i64 } else { -(fk as i64) })
            .sum::<i64>()
            - 1
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for facet in &self.maximal_faces {
            for w in facet.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (0..self.vertices.len()).all(|v| find(&mut parent, v) == root)
    }

    /// 1-faces, including those below higher-dimensional facets.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f[0], f[1]))
            .collect()
    }

    /// The flag `{} < F_a < F_b < .. < [n]` of a face.
    pub fn face_flag(&self, face: &[usize]) -> Result<Flag> {
        let interior: Vec<ElementSet> = face.iter().map(|&v| self.vertices[v]).collect();
        Flag::from_interior(self.n, &interior)
    }
}

/// The order complex of `L_M` minus bottom and top. Empty when `M` has
/// loops (no valid flags) or rank at most 1 (no proper part).
pub fn order_complex_fine(m: &Matroid) -> Result<SimplicialComplex> {
    if !m.is_loopless() || m.full_rank() <= 1 {
        return Ok(SimplicialComplex::empty(m.ground_size()));
    }
    Ok(order_complex_of_lattice(&lattice_of_flats(m)?))
}

/// Order complex of the proper part of a lattice; facets are maximal chains.
pub fn order_complex_of_lattice(lattice: &FlatLattice) -> SimplicialComplex {
    let n = lattice.ground_size();
    let r = lattice.rank();
    if r <= 1 {
        return SimplicialComplex::empty(n);
    }
    // Proper flats keep the lattice order; vertex id = lattice id - 1.
    let vertices: Vec<ElementSet> = lattice.flats()[1..lattice.top()].to_vec();
    let mut maximal_faces = Vec::new();
    let mut chain = Vec::with_capacity(r - 1);
    fn extend(
        lattice: &FlatLattice,
        r: usize,
        at: usize,
        chain: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        chain.push(at - 1);
        if lattice.rank_of(at) == r - 1 {
            out.push(chain.clone());
        } else {
            for &next in lattice.covers_above(at) {
                extend(lattice, r, next, chain, out);
            }
        }
        chain.pop();
    }
    for atom in lattice.atoms() {
        extend(lattice, r, atom, &mut chain, &mut maximal_faces);
    }
    maximal_faces.sort();
    SimplicialComplex {
        n,
        vertices,
        maximal_faces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_fine_complex() {
        let c = order_complex_fine(&Matroid::complete_graph(4).unwrap()).unwrap();
        assert_eq!(c.vertices().len(), 13);
        assert_eq!(c.maximal_faces().len(), 18);
        assert_eq!(c.f_vector(), vec![13, 18]);
        assert_eq!(c.dimension(), Some(1));
        assert!(c.is_pure());
        assert!(c.is_connected());
        assert_eq!(c.reduced_euler(), -6);
    }

    #[test]
    fn u23_is_three_points() {
        let c = order_complex_fine(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(c.f_vector(), vec![3]);
        assert_eq!(c.dimension(), Some(0));
        assert!(!c.is_connected());
        assert_eq!(c.reduced_euler(), 2);
    }

    #[test]
    fn u33_is_a_hexagon() {
        let c = order_complex_fine(&Matroid::uniform(3, 3).unwrap()).unwrap();
        assert_eq!(c.f_vector(), vec![6, 6]);
        assert!(c.is_connected());
        assert_eq!(c.reduced_euler(), -1);
        let mut degree = [0; 6];
        for (a, b) in c.edges() {
            degree[a] += 1;
            degree[b] += 1;
        }
        assert!(degree.iter().all(|&d| d == 2));
    }

    #[test]
    fn degenerate_cases_are_empty() {
        let rank_one = order_complex_fine(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert!(rank_one.is_empty());
        assert_eq!(rank_one.reduced_euler(), -1);
        assert_eq!(rank_one.dimension(), None);
        let looped = Matroid::graphic(3, &[(1, 2), (2, 3), (3, 3)]).unwrap();
        assert!(order_complex_fine(&looped).unwrap().is_empty());
    }

    #[test]
    fn single_vertex_has_zero_reduced_euler() {
        let c = SimplicialComplex {
            n: 1,
            vertices: vec![ElementSet::singleton(1)],
            maximal_faces: vec![vec![0]],
        };
        assert_eq!(c.reduced_euler(), 0);
    }

    #[test]
    fn faces_map_to_flags() {
        let c = order_complex_fine(&Matroid::complete_graph(4).unwrap()).unwrap();
        let flag = c.face_flag(&c.maximal_faces()[0]).unwrap();
        assert_eq!(flag.interior().len(), 2);
        assert_eq!(flag.sets().len(), 4);
    }
}
