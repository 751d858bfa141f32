//! JSON and Graphviz renderings of lattices, fine complexes and coarse cells.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::set::ElementSet;
use crate::weights::Flag;

use super::coarse::{coarse_graph, CoarseCell};
use super::complex::SimplicialComplex;
use super::lattice::FlatLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

pub(crate) fn flag_json(flag: &Flag) -> Value {
    Value::Array(flag.sets().iter().map(|s| json!(s.to_vec())).collect())
}

pub fn lattice_json(lattice: &FlatLattice) -> Value {
    let flats: Vec<Value> = (0..lattice.len())
        .map(|id| {
            json!({
                "id": id,
                "flat": lattice.flat(id).to_vec(),
                "rank": lattice.rank_of(id),
                "covers": lattice.covers_above(id),
            })
        })
        .collect();
    json!({ "rank": lattice.rank(), "flats": flats })
}

pub fn complex_json(complex: &SimplicialComplex) -> Value {
    let vertices: Vec<Value> = complex
        .vertices()
        .iter()
        .enumerate()
        .map(|(id, flat)| json!({ "id": id, "flat": flat.to_vec() }))
        .collect();
    json!({ "vertices": vertices, "maximal_faces": complex.maximal_faces() })
}

pub fn coarse_json(complex: &SimplicialComplex, cells: &[CoarseCell]) -> Value {
    let mut doc = complex_json(complex);
    let cells: Vec<Value> = cells
        .iter()
        .map(|c| {
            json!({
                "dimension": c.dimension(),
                "flags": c.member_flags.iter().map(flag_json).collect::<Vec<_>>(),
                "n_bases": c.signature.len(),
            })
        })
        .collect();
    doc["cells"] = Value::Array(cells);
    doc
}

fn label(flat: ElementSet) -> String {
    flat.to_string()
}

/// Graphviz `graph` for complexes of dimension at most 1.
pub fn complex_dot(complex: &SimplicialComplex) -> Result<String> {
    if complex.dimension().unwrap_or(0) > 1 {
        return Err(invalid("DOT export is limited to 1-dimensional complexes"));
    }
    let mut out = String::from("graph fine {\n");
    for (id, &flat) in complex.vertices().iter().enumerate() {
        writeln!(out, "  {id} [label=\"{}\"];", label(flat)).unwrap();
    }
    for (a, b) in complex.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Graphviz `graph` whose nodes are 0-dimensional coarse cells and whose
/// edges are 1-dimensional ones.
pub fn coarse_dot(cells: &[CoarseCell]) -> Result<String> {
    let graph = coarse_graph(cells)?;
    let mut out = String::from("graph coarse {\n");
    for (pos, &cell) in graph.nodes.iter().enumerate() {
        let flat = cells[cell]
            .member_flags
            .iter()
            .find_map(|f| match f.interior() {
                [v] => Some(*v),
                _ => None,
            })
            .unwrap_or(ElementSet::EMPTY);
        writeln!(out, "  {pos} [label=\"{}\"];", label(flat)).unwrap();
    }
    for (a, b) in &graph.edges {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn export_complex(complex: &SimplicialComplex, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(pretty(&complex_json(complex))),
        ExportFormat::Dot => complex_dot(complex),
    }
}

pub fn export_coarse(
    complex: &SimplicialComplex,
    cells: &[CoarseCell],
    format: ExportFormat,
) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(pretty(&coarse_json(complex, cells))),
        ExportFormat::Dot => coarse_dot(cells),
    }
}

pub(crate) fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bergman::{coarse_cells, order_complex_fine};
    use crate::matroid::Matroid;

    #[test]
    fn k4_fine_dot() {
        let c = order_complex_fine(&Matroid::complete_graph(4).unwrap()).unwrap();
        let dot = export_complex(&c, ExportFormat::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 13);
        assert_eq!(dot.matches(" -- ").count(), 18);
        assert!(dot.starts_with("graph fine {"));
    }

    #[test]
    fn empty_documents() {
        let c = order_complex_fine(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert_eq!(
            export_complex(&c, ExportFormat::Dot).unwrap(),
            "graph fine {\n}\n"
        );
        let v: Value =
            serde_json::from_str(&export_complex(&c, ExportFormat::Json).unwrap()).unwrap();
        assert_eq!(v, json!({"vertices": [], "maximal_faces": []}));
    }

    #[test]
    fn json_schema_and_determinism() {
        let m = Matroid::complete_graph(4).unwrap();
        let c = order_complex_fine(&m).unwrap();
        let cells = coarse_cells(&m).unwrap();
        let a = export_coarse(&c, &cells, ExportFormat::Json).unwrap();
        let b = export_coarse(
            &order_complex_fine(&m).unwrap(),
            &coarse_cells(&m).unwrap(),
            ExportFormat::Json,
        )
        .unwrap();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 13);
        assert_eq!(v["maximal_faces"].as_array().unwrap().len(), 18);
        assert_eq!(v["cells"].as_array().unwrap().len(), 25);
        assert_eq!(v["vertices"][0], json!({"id": 0, "flat": [1]}));
        let dot = export_coarse(&c, &cells, ExportFormat::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 10);
        assert_eq!(dot.matches(" -- ").count(), 15);
    }

    #[test]
    fn dot_refuses_higher_dimensions() {
        let c = order_complex_fine(&Matroid::complete_graph(5).unwrap()).unwrap();
        assert!(export_complex(&c, ExportFormat::Dot).is_err());
        assert!(export_complex(&c, ExportFormat::Json).is_ok());
        let cells = coarse_cells(&Matroid::uniform(4, 4).unwrap()).unwrap();
        assert!(coarse_dot(&cells).is_err());
    }
}
