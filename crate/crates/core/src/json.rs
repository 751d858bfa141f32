//! JSON wire formats for matroids, weights, flags, distance matrices and trees.
//!
//! Rationals travel as `"p/q"` strings; plain JSON integers are also accepted
//! on input. Every `parse_*` function takes untrusted text and reports
//! problems as errors, never panics.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matroid::{BasisFamily, Matroid};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::set::ElementSet;
use crate::treespace::{DissimilarityMap, EquidistantTree, Node};
use crate::weights::{Flag, WeightVector};

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalText::Text(s) => parse_rational(s),
            RationalText::Integer(v) => Ok(crate::rational::int(*v)),
        }
    }
}

fn rationals(row: &[RationalText]) -> Result<Vec<Rational>> {
    row.iter().map(RationalText::value).collect()
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum MatroidDoc {
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        r: usize,
        n: usize,
    },
    Linear {
        matrix: Vec<Vec<RationalText>>,
    },
    Bases {
        n: usize,
        bases: Vec<Vec<usize>>,
    },
}

fn decode<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    match decode::<MatroidDoc>(text)? {
        MatroidDoc::Graphic { vertices, edges } => Matroid::graphic(vertices, &edges),
        MatroidDoc::Uniform { r, n } => Matroid::uniform(r, n),
        MatroidDoc::Linear { matrix } => {
            let rows = matrix.iter().map(|r| rationals(r)).collect::<Result<_>>()?;
            Matroid::linear(rows)
        }
        MatroidDoc::Bases { n, bases } => {
            if n == 0 || n > crate::set::MAX_ELEMENTS {
                return Err(Error::InvalidInput(format!(
                    "unsupported ground set size {n}"
                )));
            }
            let family = bases
                .into_iter()
                .map(|b| ElementSet::try_from_elements(n, b))
                .collect::<Result<_>>()?;
            Matroid::from_bases(n, family)
        }
    }
}

pub fn parse_weights(text: &str) -> Result<WeightVector> {
    let raw: Vec<RationalText> = decode(text)?;
    Ok(WeightVector::new(rationals(&raw)?))
}

pub fn weights_json(w: &WeightVector) -> Value {
    Value::Array(
        w.as_slice()
            .iter()
            .map(|v| json!(format_rational(v)))
            .collect(),
    )
}

/// A flag on `1..=n` as an array of element arrays, `[]` first and `[1..n]` last.
pub fn parse_flag(text: &str, n: usize) -> Result<Flag> {
    let raw: Vec<Vec<usize>> = decode(text)?;
    if n == 0 || n > crate::set::MAX_ELEMENTS {
        return Err(Error::InvalidInput(format!(
            "unsupported ground set size {n}"
        )));
    }
    let sets = raw
        .into_iter()
        .map(|s| ElementSet::try_from_elements(n, s))
        .collect::<Result<_>>()?;
    Flag::new(n, sets)
}

pub fn flag_json(flag: &Flag) -> Value {
    crate::bergman::flag_json(flag)
}

pub fn bases_json(family: &BasisFamily) -> Value {
    Value::Array(family.iter().map(|b| json!(b.to_vec())).collect())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DistanceDoc {
    n: usize,
    d: Vec<Vec<RationalText>>,
}

pub fn parse_distance_matrix(text: &str) -> Result<DissimilarityMap> {
    let doc: DistanceDoc = decode(text)?;
    if doc.d.len() != doc.n {
        return Err(Error::InvalidInput(format!(
            "n = {} but the matrix has {} rows",
            doc.n,
            doc.d.len()
        )));
    }
    let rows = doc.d.iter().map(|r| rationals(r)).collect::<Result<_>>()?;
    DissimilarityMap::new(rows)
}

pub fn distance_json(delta: &DissimilarityMap) -> Value {
    let d: Vec<Vec<String>> = delta
        .rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    json!({ "n": delta.n(), "d": d })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NodeDoc {
    Leaf {
        leaf: usize,
    },
    Internal {
        height: RationalText,
        children: Vec<NodeDoc>,
    },
}

impl NodeDoc {
    fn build(&self) -> Result<Node> {
        match self {
            NodeDoc::Leaf { leaf } => Ok(Node::leaf(*leaf)),
            NodeDoc::Internal { height, children } => Ok(Node::internal(
                height.value()?,
                children
                    .iter()
                    .map(NodeDoc::build)
                    .collect::<Result<_>>()?,
            )),
        }
    }
}

pub fn parse_tree(text: &str) -> Result<EquidistantTree> {
    let doc: NodeDoc = decode(text)?;
    EquidistantTree::new(doc.build()?)
}

pub fn tree_json(tree: &EquidistantTree) -> Value {
    fn node(n: &Node) -> Value {
        match n {
            Node::Leaf(i) => json!({ "leaf": i }),
            Node::Internal { height, children } => json!({
                "height": format_rational(height),
                "children": children.iter().map(node).collect::<Vec<_>>(),
            }),
        }
    }
    node(tree.root())
}

/// Pretty-printed JSON followed by a newline.
pub fn to_text(value: &Value) -> String {
    crate::bergman::pretty(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::treespace::tree_to_ultrametric;

    #[test]
    fn matroid_variants() {
        let k4 = parse_matroid(
            r#"{"type":"graphic","vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
        )
        .unwrap();
        assert_eq!(k4.enumerate_bases().unwrap().len(), 16);
        let u = parse_matroid(r#"{"type":"uniform","r":2,"n":4}"#).unwrap();
        assert_eq!(u.full_rank(), 2);
        let lin = parse_matroid(r#"{"type":"linear","matrix":[["1","0","1/2"],["0",1,"-3/4"]]}"#)
            .unwrap();
        assert_eq!(lin.full_rank(), 2);
        let b = parse_matroid(r#"{"type":"bases","n":4,"bases":[[1,2],[1,3]]}"#).unwrap();
        assert_eq!(b.loops(), ElementSet::singleton(4));
    }

    #[test]
    fn malformed_matroids() {
        for bad in [
            "",
            "{}",
            r#"{"type":"graphic","vertices":2,"edges":[]}"#,
            r#"{"type":"graphic","vertices":2,"edges":[[1,3]]}"#,
            r#"{"type":"uniform","r":3,"n":2}"#,
            r#"{"type":"uniform","r":1,"n":2,"extra":1}"#,
            r#"{"type":"linear","matrix":[["1/0"]]}"#,
            r#"{"type":"linear","matrix":[[1.5]]}"#,
            r#"{"type":"bases","n":4,"bases":[[1,2],[3,4]]}"#,
            r#"{"type":"bases","n":4,"bases":[[1,9]]}"#,
            r#"{"type":"bases","n":0,"bases":[[]]}"#,
            r#"{"type":"bases","n":100,"bases":[[1]]}"#,
            r#"{"type":"matrix"}"#,
        ] {
            assert!(parse_matroid(bad).is_err(), "{bad} accepted");
        }
        assert!(matches!(parse_matroid("nope"), Err(Error::Parse(_))));
    }

    #[test]
    fn weights_and_flags() {
        let w = parse_weights(r#"["0","1/2",3,"-2"]"#).unwrap();
        assert_eq!(w.as_slice(), &[int(0), ratio(1, 2), int(3), int(-2)]);
        assert_eq!(parse_weights(&weights_json(&w).to_string()).unwrap(), w);
        assert!(parse_weights(r#"["x"]"#).is_err());

        let f = parse_flag("[[],[1,4],[1,2,4],[1,2,3,4,5]]", 5).unwrap();
        assert_eq!(f.interior().len(), 2);
        assert_eq!(
            flag_json(&f),
            json!([[], [1, 4], [1, 2, 4], [1, 2, 3, 4, 5]])
        );
        assert!(parse_flag("[[1],[1,2]]", 2).is_err());
        assert!(parse_flag("[[],[7],[1,2]]", 2).is_err());
    }

    #[test]
    fn distance_matrices() {
        let d =
            parse_distance_matrix(r#"{"n":3,"d":[[0,"1","2"],["1",0,"2"],["2","2",0]]}"#).unwrap();
        assert_eq!(d.get(1, 3), int(2));
        assert_eq!(
            parse_distance_matrix(&distance_json(&d).to_string()).unwrap(),
            d
        );
        assert!(parse_distance_matrix(r#"{"n":2,"d":[[0,1],[2,0]]}"#).is_err());
        assert!(parse_distance_matrix(r#"{"n":1000000000,"d":[[0]]}"#).is_err());
        assert!(parse_distance_matrix(r#"{"n":0,"d":[]}"#).is_err());
    }

    #[test]
    fn trees() {
        let text = r#"{"height":"1","children":[{"leaf":4},{"height":"1/2","children":[{"leaf":2},{"leaf":1},{"leaf":3}]}]}"#;
        let t = parse_tree(text).unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(
            tree_json(&t),
            json!({"height":"1","children":[{"height":"1/2","children":[{"leaf":1},{"leaf":2},{"leaf":3}]},{"leaf":4}]})
        );
        assert_eq!(parse_tree(&tree_json(&t).to_string()).unwrap(), t);
        assert_eq!(tree_to_ultrametric(&t).get(1, 4), int(2));
        for bad in [
            r#"{"leaf":1}"#,
            r#"{"height":"1","children":[{"leaf":1}]}"#,
            r#"{"height":"1","children":[{"leaf":1},{"leaf":99999999999}]}"#,
            r#"{"height":"1","children":[{"leaf":1},{"height":"2","children":[{"leaf":2},{"leaf":3}]}]}"#,
            r#"{"height":"x","children":[{"leaf":1},{"leaf":2}]}"#,
        ] {
            assert!(parse_tree(bad).is_err(), "{bad} accepted");
        }
    }
}
