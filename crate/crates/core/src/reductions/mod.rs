//! Gadget constructions mapping source problems (set cover, domination,
//! vertex cover) to secure connected domination, with forward witness
//! builders and converse extractors.
//!
//! Index layout is fixed per gadget: source vertices first (when the source
//! is a graph whose vertices survive), then gadget vertices in listing
//! order. Every artifact carries a label per vertex.

mod chordal_bipartite;
mod gc;
mod inapprox;
mod set_cover;
mod tree_convex;

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use chordal_bipartite::{extract_vertex_cover, scds_from_vertex_cover, vc_to_chordal_bipartite};
pub use gc::{gc_canonical_scds, gc_ds_transfer, gc_graph, Transfer};
pub use inapprox::{
    dom3_to_mscds_apx, dom_to_mscds_bipartite, dom_to_mscds_general, extract_ds_from_apx,
    extract_ds_from_inapprox,
};
pub use set_cover::{extract_set_cover, setcover_to_doubly_chordal};
pub use tree_convex::{dom_to_comb_convex, dom_to_star_convex, extract_ds_from_comb, extract_ds_from_star};

use crate::certify;
use crate::classes::{self, EliminationOrdering, TreeWitness};
use crate::error::{Error, Result};
use crate::exact::SetCoverInstance;
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

/// How the decision threshold transforms: `l = k_coeff·k + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamMap {
    Offset(usize),
    Affine { k_coeff: usize, constant: usize },
}

impl ParamMap {
    pub fn apply(&self, k: usize) -> usize {
        match *self {
            ParamMap::Offset(o) => k + o,
            ParamMap::Affine { k_coeff, constant } => k_coeff * k + constant,
        }
    }

    pub fn offset(&self) -> usize {
        match *self {
            ParamMap::Offset(o) => o,
            ParamMap::Affine { constant, .. } => constant,
        }
    }
}

impl Serialize for ParamMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Affine {
            constant: usize,
            k_coeff: usize,
        }
        let mut map = BTreeMap::new();
        match *self {
            ParamMap::Offset(o) => {
                map.insert("offset", serde_json::json!(o));
            }
            ParamMap::Affine { k_coeff, constant } => {
                map.insert("affine", serde_json::json!(Affine { constant, k_coeff }));
            }
        }
        map.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Elimination(EliminationOrdering),
    Tree(TreeWitness),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Witness::Elimination(o) => {
                let mut st = s.serialize_struct("Witness", 2)?;
                st.serialize_field("kind", "dpeo")?;
                st.serialize_field("order", &o.order)?;
                st.end()
            }
            Witness::Tree(t) => {
                let edges: Vec<[usize; 2]> = t.tree.edges().map(|(u, v)| [u, v]).collect();
                let mut st = s.serialize_struct("Witness", 3)?;
                st.serialize_field("edges", &edges)?;
                st.serialize_field("kind", &t.kind)?;
                st.serialize_field("nodes", &t.nodes)?;
                st.end()
            }
        }
    }
}

/// Source-side bookkeeping each extractor needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    SetCover(SetCoverInstance),
    StarConvex { source_n: usize },
    CombConvex { source_n: usize, left: Vec<usize> },
    ChordalBipartite { source: Graph },
    General { source_n: usize },
    BipartiteInapprox { source_n: usize },
    Apx { source_n: usize },
    Gc { source_n: usize },
}

impl Layout {
    pub fn name(&self) -> &'static str {
        match self {
            Layout::SetCover(_) => "setcover-doubly-chordal",
            Layout::StarConvex { .. } => "star-convex",
            Layout::CombConvex { .. } => "comb-convex",
            Layout::ChordalBipartite { .. } => "chordal-bipartite",
            Layout::General { .. } => "inapprox-general",
            Layout::BipartiteInapprox { .. } => "inapprox-bipartite",
            Layout::Apx { .. } => "apx",
            Layout::Gc { .. } => "gc",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    /// Gadget label per vertex index (`x_1`, `c_2`, `p`, `a_x`, …).
    pub labels: Vec<String>,
    pub param: ParamMap,
    pub witness: Option<Witness>,
    /// Vertices every SCDS of the gadget must contain (pendants, supports,
    /// cut vertices), used to prune the exact oracle.
    pub forced: VertexSet,
    /// Bipartition of the gadget for the bipartite families, tree side left.
    pub bipartition: Option<Bipartition>,
    pub layout: Layout,
}

impl ReductionArtifact {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        let idx = labels
            .iter()
            .map(|l| self.vertex(l).ok_or_else(|| Error::Invalid(format!("no vertex labelled {l}"))))
            .collect::<Result<Vec<_>>>()?;
        VertexSet::from_vertices(self.graph.n(), idx)
    }

    /// Runs the witness through its class validator.
    pub fn witness_valid(&self) -> Result<bool> {
        match &self.witness {
            None => Ok(true),
            Some(Witness::Elimination(o)) => classes::check_dpeo(&self.graph, o),
            Some(Witness::Tree(t)) => {
                let parts = self
                    .bipartition
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("tree witness without bipartition".into()))?;
                classes::validate_tree_convex(&self.graph, parts, t)
            }
        }
    }

    /// The JSON sidecar written next to the gadget's graph file.
    pub fn sidecar(&self) -> Sidecar<'_> {
        Sidecar {
            forced: &self.forced,
            kind: self.layout.name(),
            labels: self.labels.iter().enumerate().map(|(i, l)| (i, l.as_str())).collect(),
            param: self.param,
            witness: self.witness.as_ref(),
        }
    }

    fn check_scds(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.graph.n() || certify::is_scds(&self.graph, s).is_none() {
            return Err(Error::NotScds(s.to_string()));
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct Sidecar<'a> {
    pub forced: &'a VertexSet,
    pub kind: &'static str,
    pub labels: BTreeMap<usize, &'a str>,
    pub param: ParamMap,
    pub witness: Option<&'a Witness>,
}

/// Incremental builder used by every gadget.
struct GadgetBuilder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl GadgetBuilder {
    fn new() -> Self {
        Self {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn build(self) -> (Graph, Vec<String>) {
        let g = Graph::from_edge_list(self.labels.len(), &self.edges).expect("gadget edges are valid");
        (g, self.labels)
    }
}

/// Checks `parts` against `g` and that `g` is connected.
fn check_bipartite(g: &Graph, parts: &Bipartition) -> Result<()> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    if !parts.certifies(g) {
        return Err(Error::NotBipartite);
    }
    Ok(())
}

fn check_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("source graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Restricts a gadget set to the first `source_n` indices.
fn restrict(s: &VertexSet, source_n: usize) -> VertexSet {
    VertexSet::from_vertices(source_n, s.iter().filter(|&v| v < source_n)).unwrap()
}

/// Positions 1-based within the side each vertex belongs to.
fn side_ranks(parts: &Bipartition) -> Vec<(bool, usize)> {
    let n = parts.left.universe();
    let mut out = vec![(true, 0); n];
    for (i, v) in parts.left.iter().enumerate() {
        out[v] = (true, i + 1);
    }
    for (i, v) in parts.right.iter().enumerate() {
        out[v] = (false, i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_json() {
        assert_eq!(serde_json::to_string(&ParamMap::Offset(2)).unwrap(), r#"{"offset":2}"#);
        assert_eq!(
            serde_json::to_string(&ParamMap::Affine { k_coeff: 1, constant: 24 }).unwrap(),
            r#"{"affine":{"constant":24,"k_coeff":1}}"#
        );
        assert_eq!(ParamMap::Affine { k_coeff: 1, constant: 24 }.apply(1), 25);
    }
}
