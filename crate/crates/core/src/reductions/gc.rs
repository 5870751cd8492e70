use super::{check_connected, restrict, GadgetBuilder, Layout, ParamMap, ReductionArtifact};
use crate::certify;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Layout: `v_i` (source), then the triangles `a_i, b_i, c_i`, then `x_i`.
fn a(n: usize, i: usize) -> usize {
    n + 3 * i
}
fn x(n: usize, i: usize) -> usize {
    4 * n + i
}

/// Each source vertex `v_i` gets a triangle `a_i b_i c_i` joined to it
/// through a new vertex `x_i` (edges `x_i–v_i`, `x_i–a_i`).
pub fn gc_graph(g: &Graph) -> Result<ReductionArtifact> {
    check_connected(g)?;
    let n = g.n();
    let mut b = GadgetBuilder::new();
    for v in 0..n {
        b.add(format!("v_{}", v + 1));
    }
    for (u, v) in g.edges() {
        b.edge(u, v);
    }
    for i in 0..n {
        let ai = b.add(format!("a_{}", i + 1));
        let bi = b.add(format!("b_{}", i + 1));
        let ci = b.add(format!("c_{}", i + 1));
        b.edge(ai, bi);
        b.edge(bi, ci);
        b.edge(ai, ci);
    }
    for i in 0..n {
        let xi = b.add(format!("x_{}", i + 1));
        b.edge(xi, i);
        b.edge(xi, a(n, i));
    }
    let total = b.n();
    let (graph, labels) = b.build();
    let forced = VertexSet::from_vertices(total, (0..n).flat_map(|i| [i, x(n, i), a(n, i)]))?;
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Offset(n),
        witness: None,
        forced,
        bipartition: None,
        layout: Layout::Gc { source_n: n },
    })
}

fn source_n(art: &ReductionArtifact) -> Result<usize> {
    match art.layout {
        Layout::Gc { source_n } => Ok(source_n),
        ref other => Err(Error::Invalid(format!("expected a GC gadget, got {}", other.name()))),
    }
}

/// `V ∪ X ∪ {a_i, b_i}`, certified.
pub fn gc_canonical_scds(art: &ReductionArtifact) -> Result<VertexSet> {
    let n = source_n(art)?;
    let s = VertexSet::from_vertices(
        art.graph.n(),
        (0..n).flat_map(|i| [i, x(n, i), a(n, i), a(n, i) + 1]),
    )?;
    if certify::is_scds(&art.graph, &s).is_none() {
        return Err(Error::NotScds(s.to_string()));
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transfer {
    ToGadget,
    FromGadget,
}

/// Moves a dominating set across the GC construction. Towards the gadget
/// every `a_i` is added; back from it each `x_i` becomes `v_i` and the
/// rest is dropped.
pub fn gc_ds_transfer(art: &ReductionArtifact, d: &VertexSet, direction: Transfer) -> Result<VertexSet> {
    let n = source_n(art)?;
    match direction {
        Transfer::ToGadget => {
            if d.universe() != n {
                return Err(Error::Invalid(format!("set has universe {}, source has {n}", d.universe())));
            }
            let (source, _) = art.graph.induced(&VertexSet::from_vertices(art.graph.n(), 0..n)?);
            if let Some(f) = certify::ds_failure(&source, d) {
                return Err(Error::NotDominating(f.vertex().unwrap_or(0)));
            }
            VertexSet::from_vertices(art.graph.n(), d.iter().chain((0..n).map(|i| a(n, i))))
        }
        Transfer::FromGadget => {
            if d.universe() != art.graph.n() {
                return Err(Error::Invalid(format!(
                    "set has universe {}, gadget has {}",
                    d.universe(),
                    art.graph.n()
                )));
            }
            if let Some(f) = certify::ds_failure(&art.graph, d) {
                return Err(Error::NotDominating(f.vertex().unwrap_or(0)));
            }
            let mut out = restrict(d, n);
            for i in (0..n).filter(|&i| d.contains(x(n, i))) {
                out.insert(i);
            }
            Ok(out)
        }
    }
}
