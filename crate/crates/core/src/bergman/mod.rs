//! Lattice of flats, the fine and coarse subdivisions of the Bergman complex,
//! and their homotopy-type invariants.

mod coarse;
mod complex;
mod export;
mod lattice;

pub use coarse::{
    coarse_cells, coarse_cells_of, coarse_graph, diamond_equivalence, maximal_flags, valid_flags,
    CellGraph, CoarseCell, DiamondReport,
};
pub use complex::{order_complex_fine, order_complex_of_lattice, SimplicialComplex};
pub use export::{
    coarse_dot, coarse_json, complex_dot, complex_json, export_coarse, export_complex,
    lattice_json, ExportFormat,
};
pub(crate) use export::{flag_json, pretty};
pub use lattice::{
    lattice_of_flats, lattice_of_flats_within, mobius_hat, FlatLattice, DEFAULT_FLAT_BUDGET,
};
