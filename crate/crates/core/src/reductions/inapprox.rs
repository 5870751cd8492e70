use super::{check_bipartite, check_connected, restrict, GadgetBuilder, Layout, ParamMap, ReductionArtifact};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

fn copy_source(b: &mut GadgetBuilder, g: &Graph, name: impl Fn(usize) -> String) {
    for v in 0..g.n() {
        b.add(name(v));
    }
    for (u, v) in g.edges() {
        b.edge(u, v);
    }
}

/// `G` plus a universal vertex `w` carrying a pendant `z`.
pub fn dom_to_mscds_general(g: &Graph) -> Result<ReductionArtifact> {
    check_connected(g)?;
    let n = g.n();
    let mut b = GadgetBuilder::new();
    copy_source(&mut b, g, |v| format!("v_{}", v + 1));
    let w = b.add("w");
    let z = b.add("z");
    for v in 0..n {
        b.edge(w, v);
    }
    b.edge(w, z);
    let (graph, labels) = b.build();
    Ok(ReductionArtifact {
        forced: VertexSet::from_vertices(graph.n(), [w, z])?,
        graph,
        labels,
        param: ParamMap::Offset(2),
        witness: None,
        bipartition: None,
        layout: Layout::General { source_n: n },
    })
}

/// `G` plus `w_1, w_2, z_1, z_2`: `z_1` sees the left side, `w_1` the
/// right side, with `w_1–w_2`, `z_1–z_2` and `w_1–z_1`.
pub fn dom_to_mscds_bipartite(g: &Graph, parts: &Bipartition) -> Result<ReductionArtifact> {
    check_bipartite(g, parts)?;
    let n = g.n();
    let mut b = GadgetBuilder::new();
    let ranks = super::side_ranks(parts);
    copy_source(&mut b, g, |v| {
        let (left, rank) = ranks[v];
        format!("{}_{rank}", if left { "x" } else { "y" })
    });
    let w1 = b.add("w_1");
    let w2 = b.add("w_2");
    let z1 = b.add("z_1");
    let z2 = b.add("z_2");
    for v in parts.left.iter() {
        b.edge(z1, v);
    }
    for v in parts.right.iter() {
        b.edge(w1, v);
    }
    b.edge(w1, w2);
    b.edge(z1, z2);
    b.edge(w1, z1);
    let total = b.n();
    let (graph, labels) = b.build();
    let left = VertexSet::from_vertices(total, parts.left.iter().chain([w1, z2]))?;
    let right = VertexSet::from_vertices(total, parts.right.iter().chain([z1, w2]))?;
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Offset(4),
        witness: None,
        forced: VertexSet::from_vertices(total, [w1, w2, z1, z2])?,
        bipartition: Some(Bipartition { left, right }),
        layout: Layout::BipartiteInapprox { source_n: n },
    })
}

/// `S ∩ V` for either inapproximability gadget.
pub fn extract_ds_from_inapprox(art: &ReductionArtifact, s: &VertexSet) -> Result<VertexSet> {
    let source_n = match art.layout {
        Layout::General { source_n } | Layout::BipartiteInapprox { source_n } => source_n,
        ref other => {
            return Err(Error::Invalid(format!("expected an inapproximability gadget, got {}", other.name())))
        }
    };
    art.check_scds(s)?;
    Ok(restrict(s, source_n))
}

/// Every `v_i` gets a private path `v_i–x_i–y_i`, and the `x_i` are chained
/// `x_1–x_2–…–x_n`.
pub fn dom3_to_mscds_apx(g: &Graph) -> Result<ReductionArtifact> {
    check_connected(g)?;
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let n = g.n();
    let mut b = GadgetBuilder::new();
    copy_source(&mut b, g, |v| format!("v_{}", v + 1));
    let xs: Vec<usize> = (0..n).map(|i| b.add(format!("x_{}", i + 1))).collect();
    let ys: Vec<usize> = (0..n).map(|i| b.add(format!("y_{}", i + 1))).collect();
    for i in 0..n {
        b.edge(i, xs[i]);
        b.edge(xs[i], ys[i]);
    }
    for w in xs.windows(2) {
        b.edge(w[0], w[1]);
    }
    let total = b.n();
    let (graph, labels) = b.build();
    debug_assert!(graph.max_degree() <= 4);
    Ok(ReductionArtifact {
        forced: VertexSet::from_vertices(total, xs.iter().chain(&ys).copied())?,
        graph,
        labels,
        param: ParamMap::Offset(2 * n),
        witness: None,
        bipartition: None,
        layout: Layout::Apx { source_n: n },
    })
}

pub fn extract_ds_from_apx(art: &ReductionArtifact, s: &VertexSet) -> Result<VertexSet> {
    let Layout::Apx { source_n } = art.layout else {
        return Err(Error::Invalid(format!("expected an APX gadget, got {}", art.layout.name())));
    };
    art.check_scds(s)?;
    Ok(restrict(s, source_n))
}
