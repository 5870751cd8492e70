use super::{check_connected, GadgetBuilder, Layout, ParamMap, ReductionArtifact};
use crate::certify;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

/// Vertex indices of the gadget built from a source graph with `n`
/// vertices and `m` edges.
struct Index {
    n: usize,
    m: usize,
}

impl Index {
    fn x(&self, i: usize) -> usize {
        i
    }
    fn y(&self, i: usize) -> usize {
        self.n + i
    }
    fn z(&self, i: usize) -> usize {
        2 * self.n + i
    }
    /// `slot` 0..6 selects `a, b, c, d, e, f`.
    fn block(&self, i: usize, slot: usize) -> usize {
        3 * self.n + 6 * i + slot
    }
    /// Edge `e` oriented forwards (`ij`) or backwards (`ji`); `slot` 0..4
    /// selects `p, q, r, s`.
    fn edge(&self, e: usize, backwards: bool, slot: usize) -> usize {
        9 * self.n + 8 * e + 4 * usize::from(backwards) + slot
    }
    fn t(&self) -> usize {
        9 * self.n + 8 * self.m
    }
    fn u(&self) -> usize {
        self.t() + 1
    }
    fn total(&self) -> usize {
        self.u() + 1
    }
}

fn pair(n: usize, i: usize, j: usize) -> String {
    if n >= 10 {
        format!("{},{}", i + 1, j + 1)
    } else {
        format!("{}{}", i + 1, j + 1)
    }
}

/// Each source vertex becomes a two-row ladder (`a b z d f` under
/// `x y c e`), each edge `ij` a pair of hooks `x_i–p–q`, `y_j–r–s` joined
/// by `p–r`, in both directions. `X ∪ Z` is complete to `Y`; `u` sees
/// `X ∪ Z`, `t` sees `Y`, and `t–u`.
pub fn vc_to_chordal_bipartite(g: &Graph) -> Result<ReductionArtifact> {
    check_connected(g)?;
    let (n, m) = (g.n(), g.m());
    let ix = Index { n, m };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut b = GadgetBuilder::new();
    for name in ["x", "y", "z"] {
        for i in 0..n {
            b.add(format!("{name}_{}", i + 1));
        }
    }
    for i in 0..n {
        for name in ["a", "b", "c", "d", "e", "f"] {
            b.add(format!("{name}_{}", i + 1));
        }
    }
    for &(i, j) in &edges {
        for (s, t) in [(i, j), (j, i)] {
            for name in ["p", "q", "r", "s"] {
                b.add(format!("{name}_{}", pair(n, s, t)));
            }
        }
    }
    b.add("t");
    b.add("u");
    debug_assert_eq!(b.n(), ix.total());

    for i in 0..n {
        let [a, bb, c, d, e, f] = std::array::from_fn(|s| ix.block(i, s));
        let (x, y, z) = (ix.x(i), ix.y(i), ix.z(i));
        for (u, v) in [(a, bb), (bb, z), (z, d), (d, f), (x, y), (y, c), (c, e), (bb, x), (z, y), (d, c)] {
            b.edge(u, v);
        }
    }
    for (e, &(i, j)) in edges.iter().enumerate() {
        for (backwards, (s, t)) in [(false, (i, j)), (true, (j, i))] {
            let [p, q, r, ss] = std::array::from_fn(|k| ix.edge(e, backwards, k));
            for (u, v) in [(ix.x(s), p), (p, q), (ix.y(t), r), (r, ss), (p, r)] {
                b.edge(u, v);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            b.edge(ix.x(i), ix.y(j));
            b.edge(ix.z(i), ix.y(j));
        }
        b.edge(ix.x(i), ix.u());
        b.edge(ix.z(i), ix.u());
        b.edge(ix.y(i), ix.t());
    }
    b.edge(ix.t(), ix.u());
    let (graph, labels) = b.build();

    let total = ix.total();
    let mut left = VertexSet::empty(total);
    let mut forced = VertexSet::empty(total);
    for i in 0..n {
        left.insert(ix.x(i));
        left.insert(ix.z(i));
        for s in [0, 2, 5] {
            left.insert(ix.block(i, s));
        }
        for s in 0..6 {
            forced.insert(ix.block(i, s));
        }
    }
    for e in 0..m {
        for backwards in [false, true] {
            left.insert(ix.edge(e, backwards, 1));
            left.insert(ix.edge(e, backwards, 2));
            for k in 0..4 {
                forced.insert(ix.edge(e, backwards, k));
            }
        }
    }
    left.insert(ix.t());
    forced.insert(ix.t());
    forced.insert(ix.u());
    let right = left.complement();
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Affine {
            k_coeff: 1,
            constant: 7 * n + 8 * m + 2,
        },
        witness: None,
        forced,
        bipartition: Some(Bipartition { left, right }),
        layout: Layout::ChordalBipartite { source: g.clone() },
    })
}

fn source_of(art: &ReductionArtifact) -> Result<&Graph> {
    match &art.layout {
        Layout::ChordalBipartite { source } => Ok(source),
        other => Err(Error::Invalid(format!("expected a chordal-bipartite gadget, got {}", other.name()))),
    }
}

/// All ladder and hook vertices, `x_i, y_i` for covered `i`, `z_i` for
/// the rest, and `t, u`. Certified before returning.
pub fn scds_from_vertex_cover(art: &ReductionArtifact, vc: &VertexSet) -> Result<VertexSet> {
    let g = source_of(art)?;
    let ix = Index { n: g.n(), m: g.m() };
    if vc.universe() != g.n() {
        return Err(Error::Invalid(format!("cover has universe {}, source has {}", vc.universe(), g.n())));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !vc.contains(u) && !vc.contains(v)) {
        return Err(Error::NotCover(u, v));
    }
    let mut s = art.forced.clone();
    for i in 0..g.n() {
        if vc.contains(i) {
            s.insert(ix.x(i));
            s.insert(ix.y(i));
        } else {
            s.insert(ix.z(i));
        }
    }
    if certify::is_scds(&art.graph, &s).is_none() {
        return Err(Error::NotScds(s.to_string()));
    }
    Ok(s)
}

/// Rewrites every ladder holding exactly one of `x_i, y_i` alongside `z_i`
/// so that it holds both, re-certifies, then reads off `{i : x_i, y_i ∈ S}`.
pub fn extract_vertex_cover(art: &ReductionArtifact, s: &VertexSet) -> Result<VertexSet> {
    let g = source_of(art)?;
    art.check_scds(s)?;
    let ix = Index { n: g.n(), m: g.m() };
    let mut w = s.clone();
    for i in 0..g.n() {
        let (x, y, z) = (ix.x(i), ix.y(i), ix.z(i));
        match (w.contains(x), w.contains(y), w.contains(z)) {
            (true, false, true) => w = w.swapped(z, y),
            (false, true, true) => w = w.swapped(z, x),
            _ => {}
        }
    }
    if w != *s && certify::is_scds(&art.graph, &w).is_none() {
        return Err(Error::NotScds(format!("normalized set {w}")));
    }
    let vc = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&i| w.contains(ix.x(i)) && w.contains(ix.y(i))),
    )?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| !vc.contains(u) && !vc.contains(v)) {
        return Err(Error::NotCover(u, v));
    }
    Ok(vc)
}
