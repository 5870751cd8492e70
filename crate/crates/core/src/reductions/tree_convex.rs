use super::{check_bipartite, restrict, side_ranks, GadgetBuilder, Layout, ParamMap, ReductionArtifact, Witness};
use crate::classes::{TreeKind, TreeWitness};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

fn source_labels(b: &mut GadgetBuilder, parts: &Bipartition) {
    for (left, rank) in side_ranks(parts) {
        b.add(format!("{}_{rank}", if left { "a" } else { "b" }));
    }
}

/// Source vertices keep their indices; `a_x, a_y, b_x, b_y` follow. `a_x`
/// sees all of `B` plus `b_x, b_y`; `b_x` sees all of `A` plus `a_y`.
pub fn dom_to_star_convex(g: &Graph, parts: &Bipartition) -> Result<ReductionArtifact> {
    check_bipartite(g, parts)?;
    let n = g.n();
    let mut b = GadgetBuilder::new();
    source_labels(&mut b, parts);
    let a_x = b.add("a_x");
    let a_y = b.add("a_y");
    let b_x = b.add("b_x");
    let b_y = b.add("b_y");
    for (u, v) in g.edges() {
        b.edge(u, v);
    }
    for v in parts.right.iter() {
        b.edge(a_x, v);
    }
    for v in parts.left.iter() {
        b.edge(b_x, v);
    }
    b.edge(a_x, b_x);
    b.edge(a_x, b_y);
    b.edge(b_x, a_y);
    let total = b.n();
    let (graph, labels) = b.build();

    let left = VertexSet::from_vertices(total, parts.left.iter().chain([a_x, a_y]))?;
    let right = VertexSet::from_vertices(total, parts.right.iter().chain([b_x, b_y]))?;
    let star: Vec<(usize, usize)> = left.iter().filter(|&v| v != a_x).map(|v| (a_x, v)).collect();
    let tree = TreeWitness::new(total, left.clone(), &star, TreeKind::Star)?;
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Offset(4),
        witness: Some(Witness::Tree(tree)),
        forced: VertexSet::from_vertices(total, [a_x, a_y, b_x, b_y])?,
        bipartition: Some(Bipartition { left, right }),
        layout: Layout::StarConvex { source_n: n },
    })
}

/// Drops the four added vertices.
pub fn extract_ds_from_star(art: &ReductionArtifact, s: &VertexSet) -> Result<VertexSet> {
    let Layout::StarConvex { source_n } = art.layout else {
        return Err(Error::Invalid(format!("expected a star-convex gadget, got {}", art.layout.name())));
    };
    art.check_scds(s)?;
    Ok(restrict(s, source_n))
}

/// Source vertices, then `a'_{p+1..2p}`, `b'_{p+1..2p}`, `a_x`, `a_y`, `b_x`.
/// Each `a'` sees all of `B`, its own `b'` and `b_x`; `b_x` also sees all
/// of `A`, `a_x` and `a_y`.
pub fn dom_to_comb_convex(g: &Graph, parts: &Bipartition) -> Result<ReductionArtifact> {
    check_bipartite(g, parts)?;
    let n = g.n();
    let a_side = parts.left.to_vec();
    let p = a_side.len();
    let mut b = GadgetBuilder::new();
    source_labels(&mut b, parts);
    let a_prime: Vec<usize> = (p + 1..=2 * p).map(|i| b.add(format!("a'_{i}"))).collect();
    let b_prime: Vec<usize> = (p + 1..=2 * p).map(|i| b.add(format!("b'_{i}"))).collect();
    let a_x = b.add("a_x");
    let a_y = b.add("a_y");
    let b_x = b.add("b_x");
    for (u, v) in g.edges() {
        b.edge(u, v);
    }
    for i in 0..p {
        for bj in parts.right.iter() {
            b.edge(a_prime[i], bj);
        }
        b.edge(a_prime[i], b_prime[i]);
        b.edge(a_side[i], b_x);
        b.edge(a_prime[i], b_x);
    }
    b.edge(a_x, b_x);
    b.edge(a_y, b_x);
    let total = b.n();
    let (graph, labels) = b.build();

    let left = VertexSet::from_vertices(total, a_side.iter().chain(&a_prime).copied().chain([a_x, a_y]))?;
    let right = VertexSet::from_vertices(total, parts.right.iter().chain(b_prime.iter().copied()).chain([b_x]))?;
    let backbone: Vec<usize> = a_prime.iter().copied().chain([a_x]).collect();
    let mut edges: Vec<(usize, usize)> = backbone.windows(2).map(|w| (w[0], w[1])).collect();
    edges.extend(a_prime.iter().zip(&a_side).map(|(&ap, &a)| (ap, a)));
    edges.push((a_x, a_y));
    let tree = TreeWitness::new(total, left.clone(), &edges, TreeKind::Comb)?;
    let forced = VertexSet::from_vertices(
        total,
        a_prime.iter().chain(&b_prime).copied().chain([a_x, a_y, b_x]),
    )?;
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Offset(2 * p + 3),
        witness: Some(Witness::Tree(tree)),
        forced,
        bipartition: Some(Bipartition { left, right }),
        layout: Layout::CombConvex { source_n: n, left: a_side },
    })
}

/// `S ∩ V`.
pub fn extract_ds_from_comb(art: &ReductionArtifact, s: &VertexSet) -> Result<VertexSet> {
    let Layout::CombConvex { source_n, .. } = art.layout else {
        return Err(Error::Invalid(format!("expected a comb-convex gadget, got {}", art.layout.name())));
    };
    art.check_scds(s)?;
    Ok(restrict(s, source_n))
}
