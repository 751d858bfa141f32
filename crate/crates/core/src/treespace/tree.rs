//! Equidistant trees parameterized by internal-vertex heights.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::rational::{format_decimal, int, Rational};
use crate::set::{ElementSet, MAX_ELEMENTS};

use super::dissimilarity::{pair_count, ultrametric_witness, DissimilarityMap};

/// A vertex of a rooted leaf-labelled tree. Leaves sit at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(usize),
    Internal {
        height: Rational,
        children: Vec<Node>,
    },
}

impl Node {
    pub fn leaf(label: usize) -> Node {
        Node::Leaf(label)
    }

    pub fn internal(height: Rational, children: Vec<Node>) -> Node {
        Node::Internal { height, children }
    }

    /// Height of the vertex; 0 for leaves.
    pub fn height(&self) -> Rational {
        match self {
            Node::Leaf(_) => Rational::zero(),
            Node::Internal { height, .. } => height.clone(),
        }
    }

    pub fn leaves(&self) -> ElementSet {
        match self {
            Node::Leaf(i) => ElementSet::singleton(*i),
            Node::Internal { children, .. } => children
                .iter()
                .fold(ElementSet::EMPTY, |acc, c| acc.union(c.leaves())),
        }
    }

    fn smallest_leaf(&self) -> usize {
        match self {
            Node::Leaf(i) => *i,
            Node::Internal { children, .. } => children
                .iter()
                .map(Node::smallest_leaf)
                .min()
                .unwrap_or(usize::MAX),
        }
    }

    fn canonicalize(&mut self) {
        if let Node::Internal { children, .. } = self {
            children.iter_mut().for_each(Node::canonicalize);
            children.sort_by_key(Node::smallest_leaf);
        }
    }

    fn collect_internal<'a>(&'a self, out: &mut Vec<(ElementSet, &'a Rational)>) {
        if let Node::Internal { height, children } = self {
            out.push((self.leaves(), height));
            for c in children {
                c.collect_internal(out);
            }
        }
    }
}

/// A rooted tree on leaves `1..=n` with `n >= 2`, strictly decreasing heights
/// along internal edges, and unrestricted (possibly negative) leaf edges.
/// Children are kept sorted by their smallest leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquidistantTree {
    n: usize,
    root: Node,
}

impl EquidistantTree {
    pub fn new(root: Node) -> Result<Self> {
        let Node::Internal { .. } = root else {
            return Err(invalid("an equidistant tree needs at least two leaves"));
        };
        let mut labels = Vec::new();
        validate(&root, &mut labels)?;
        labels.sort_unstable();
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(invalid(format!("{n} leaves exceeds the supported maximum")));
        }
        if labels.iter().enumerate().any(|(i, &l)| l != i + 1) {
            return Err(invalid(format!(
                "leaf labels must be exactly 1..={n}, each once"
            )));
        }
        let mut root = root;
        root.canonicalize();
        Ok(EquidistantTree { n, root })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn root_height(&self) -> Rational {
        self.root.height()
    }

    /// `(leaf set, height)` of every internal vertex, root first.
    pub fn internal_vertices(&self) -> Vec<(ElementSet, &Rational)> {
        let mut out = Vec::new();
        self.root.collect_internal(&mut out);
        out
    }

    /// Newick string with decimal branch lengths. Lossy: rationals are rounded
    /// to `places` fractional digits.
    pub fn to_newick(&self, places: usize) -> String {
        fn write(node: &Node, parent: Option<&Rational>, places: usize, out: &mut String) {
            match node {
                Node::Leaf(i) => out.push_str(&i.to_string()),
                Node::Internal { children, .. } => {
                    out.push('(');
                    for (k, c) in children.iter().enumerate() {
                        if k > 0 {
                            out.push(',');
                        }
                        write(c, Some(&node.height()), places, out);
                    }
                    out.push(')');
                }
            }
            if let Some(p) = parent {
                out.push(':');
                out.push_str(&format_decimal(&(p - node.height()), places));
            }
        }
        let mut out = String::new();
        write(&self.root, None, places, &mut out);
        out.push(';');
        out
    }
}

fn validate(node: &Node, labels: &mut Vec<usize>) -> Result<()> {
    match node {
        Node::Leaf(i) => {
            if *i == 0 {
                return Err(invalid("leaf labels start at 1"));
            }
            labels.push(*i);
        }
        Node::Internal { height, children } => {
            if children.len() < 2 {
                return Err(invalid("every internal vertex needs at least two children"));
            }
            for c in children {
                if let Node::Internal { height: h, .. } = c {
                    if h >= height {
                        return Err(invalid(format!(
                            "internal edge from height {height} down to {h} is not positive"
                        )));
                    }
                }
                validate(c, labels)?;
                if labels.len() > MAX_ELEMENTS {
                    return Err(invalid("too many leaves"));
                }
            }
        }
    }
    Ok(())
}

/// `d(i, j) = 2 h(lca(i, j))`.
pub fn tree_to_ultrametric(tree: &EquidistantTree) -> DissimilarityMap {
    let n = tree.n;
    let mut values = vec![Rational::zero(); pair_count(n)];
    fn fill(node: &Node, n: usize, values: &mut [Rational]) {
        if let Node::Internal { height, children } = node {
            let twice = height * int(2);
            let parts: Vec<ElementSet> = children.iter().map(Node::leaves).collect();
            for (a, pa) in parts.iter().enumerate() {
                for pb in &parts[a + 1..] {
                    for i in pa.iter() {
                        for j in pb.iter() {
                            values[super::dissimilarity::pair_index(n, i, j)] = twice.clone();
                        }
                    }
                }
            }
            for c in children {
                fill(c, n, values);
            }
        }
    }
    fill(&tree.root, n, &mut values);
    DissimilarityMap::from_pairs(n, values).expect("pair count matches leaf count")
}

/// Single-linkage agglomeration at heights `d/2`. All clusters joined at the
/// same value merge in one step, so ties yield multifurcations or distinct
/// vertices at equal heights.
pub fn ultrametric_to_tree(delta: &DissimilarityMap) -> Result<EquidistantTree> {
    let n = delta.n();
    if n < 2 {
        return Err(invalid("an equidistant tree needs at least two leaves"));
    }
    if let Some((i, j, k)) = ultrametric_witness(delta) {
        return Err(Error::NotUltrametric { i, j, k });
    }
    let mut levels: BTreeMap<Rational, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            levels.entry(delta.get(i, j)).or_default().push((i, j));
        }
    }
    // Cluster id per leaf, and the node for each live cluster.
    let mut cluster_of: Vec<usize> = (0..=n).collect();
    let mut nodes: BTreeMap<usize, Node> = (1..=n).map(|i| (i, Node::Leaf(i))).collect();
    let two = int(2);
    for (value, pairs) in levels {
        let height = &value / &two;
        // Union the clusters linked at this level; the smallest id becomes the root.
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, j) in pairs {
            let (a, b) = (
                find(&mut parent, cluster_of[i]),
                find(&mut parent, cluster_of[j]),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let live: Vec<usize> = nodes.keys().copied().collect();
        for c in live {
            groups.entry(find(&mut parent, c)).or_default().push(c);
        }
        for (root, group) in groups {
            if group.len() < 2 {
                continue;
            }
            let children: Vec<Node> = group
                .iter()
                .map(|c| nodes.remove(c).expect("live cluster"))
                .collect();
            for leaf in 1..=n {
                if group.contains(&cluster_of[leaf]) {
                    cluster_of[leaf] = root;
                }
            }
            nodes.insert(root, Node::internal(height.clone(), children));
        }
    }
    let (_, root) = nodes.pop_first().expect("one cluster remains");
    if !nodes.is_empty() {
        return Err(Error::Inconsistent(
            "agglomeration left several clusters".into(),
        ));
    }
    EquidistantTree::new(root)
}
