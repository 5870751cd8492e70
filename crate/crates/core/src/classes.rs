//! Structural validators for the graph classes the reductions target.
//! These verify supplied witnesses; they do not search for them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

impl EliminationOrdering {
    pub fn new(n: usize, order: Vec<usize>) -> Result<Self> {
        let ord = Self { order };
        ord.positions(n)?;
        Ok(ord)
    }

    fn positions(&self, n: usize) -> Result<Vec<usize>> {
        let mut pos = vec![usize::MAX; n];
        if self.order.len() != n {
            return Err(Error::NotPermutation(n));
        }
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::NotPermutation(n));
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

/// Closed neighbourhood of `v` inside `G[{w : pos[w] >= from}]`.
fn later_closed(g: &Graph, pos: &[usize], from: usize, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| pos[u] >= from)
        .collect();
    out.push(v);
    out.sort_unstable();
    out
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// Each `v_i` is simplicial in `G[{v_i, …, v_n}]`.
pub fn check_peo(g: &Graph, ord: &EliminationOrdering) -> Result<bool> {
    let pos = ord.positions(g.n())?;
    Ok(ord
        .order
        .iter()
        .enumerate()
        .all(|(i, &v)| is_clique(g, &later_closed(g, &pos, i, v))))
}

/// Each `v_i` is simplicial and has a maximum neighbour in
/// `G[{v_i, …, v_n}]`.
pub fn check_dpeo(g: &Graph, ord: &EliminationOrdering) -> Result<bool> {
    let pos = ord.positions(g.n())?;
    Ok(ord.order.iter().enumerate().all(|(i, &v)| {
        let nv = later_closed(g, &pos, i, v);
        if !is_clique(g, &nv) {
            return false;
        }
        let closed: Vec<Vec<usize>> = nv.iter().map(|&w| later_closed(g, &pos, i, w)).collect();
        (0..nv.len()).any(|ui| closed.iter().all(|nw| is_sorted_subset(nw, &closed[ui])))
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeKind {
    Star,
    Comb,
    General,
}

/// A tree on a subset of the host graph's vertices (the tree side of a
/// bipartition), stored in the host's index space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWitness {
    pub tree: Graph,
    pub nodes: VertexSet,
    pub kind: TreeKind,
}

impl TreeWitness {
    pub fn new(n: usize, nodes: VertexSet, edges: &[(usize, usize)], kind: TreeKind) -> Result<Self> {
        let tree = Graph::from_edge_list(n, edges)?;
        Ok(Self { tree, nodes, kind })
    }

    /// Connected, acyclic, edges only among `nodes`, and shaped as `kind`.
    pub fn is_well_formed(&self) -> bool {
        let t = &self.tree;
        let k = self.nodes.len();
        let inside = t.edges().all(|(u, v)| self.nodes.contains(u) && self.nodes.contains(v));
        let tree = inside && t.m() + 1 == k && (k <= 1 || t.is_connected_within(&self.nodes));
        tree && match self.kind {
            TreeKind::General => true,
            TreeKind::Star => k <= 2 || self.nodes.iter().any(|c| t.degree(c) == k - 1),
            TreeKind::Comb => self.is_comb(),
        }
    }

    fn is_comb(&self) -> bool {
        let t = &self.tree;
        let k = self.nodes.len();
        if !k.is_multiple_of(2) || k == 0 {
            return false;
        }
        if k == 2 {
            return true;
        }
        let backbone: Vec<usize> = self.nodes.iter().filter(|&v| t.degree(v) >= 2).collect();
        if backbone.len() != k / 2 {
            return false;
        }
        let spine = VertexSet::from_vertices(t.n(), backbone.iter().copied()).unwrap();
        let path_like = backbone.iter().all(|&v| {
            let along = t.neighbors(v).iter().filter(|&&u| spine.contains(u)).count();
            let teeth = t.neighbors(v).iter().filter(|&&u| t.degree(u) == 1).count();
            along <= 2 && teeth == 1
        });
        path_like && t.is_connected_within(&spine)
    }
}

/// For every vertex on the non-tree side, its neighbourhood induces a
/// subtree of the witness tree.
pub fn validate_tree_convex(g: &Graph, parts: &Bipartition, w: &TreeWitness) -> Result<bool> {
    if w.tree.n() != g.n() || w.nodes != parts.left {
        return Err(Error::Invalid("tree witness does not span the tree side".into()));
    }
    if !w.is_well_formed() {
        return Ok(false);
    }
    Ok(parts.right.iter().all(|b| {
        let nb = VertexSet::from_vertices(g.n(), g.neighbors(b).iter().copied()).unwrap();
        nb.is_empty() || (nb.is_subset(&w.nodes) && w.tree.is_connected_within(&nb))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ChordalBipartiteVerdict {
    /// No chordless cycle of length `6..=bound` exists.
    Pass { bound: usize },
    /// A chordless cycle, starting from its smallest vertex.
    Fail { bound: usize, cycle: Vec<usize> },
}

impl ChordalBipartiteVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }
}

/// Exhaustive search for chordless cycles of length 6 up to `max_len`.
/// This is a bounded check, not full chordal-bipartite recognition.
pub fn chordal_bipartite_check_bounded(g: &Graph, max_len: usize) -> Result<ChordalBipartiteVerdict> {
    if max_len < 6 || !max_len.is_multiple_of(2) {
        return Err(Error::Invalid(format!("bound must be even and at least 6, got {max_len}")));
    }
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on_path = VertexSet::empty(g.n());
        on_path.insert(s);
        if let Some(cycle) = extend_induced(g, max_len, &mut path, &mut on_path) {
            return Ok(ChordalBipartiteVerdict::Fail { bound: max_len, cycle });
        }
    }
    Ok(ChordalBipartiteVerdict::Pass { bound: max_len })
}

/// Grows induced paths from `path[0]` through larger vertices; reports the
/// first closing chordless cycle of length at least 6.
fn extend_induced(
    g: &Graph,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || on_path.contains(w) {
            continue;
        }
        // w may only touch `last` and possibly the start.
        let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
        if inner.iter().any(|&x| g.has_edge(w, x)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            let len = path.len() + 1;
            if len >= 6 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(w);
            on_path.insert(w);
            if let Some(c) = extend_induced(g, max_len, path, on_path) {
                return Some(c);
            }
            on_path.remove(w);
            path.pop();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn ord(n: usize, o: &[usize]) -> EliminationOrdering {
        EliminationOrdering::new(n, o.to_vec()).unwrap()
    }

    #[test]
    fn peo() {
        assert!(check_peo(&complete(3), &ord(3, &[2, 0, 1])).unwrap());
        assert!(!check_peo(&cycle(4), &ord(4, &[0, 1, 2, 3])).unwrap());
        assert!(check_peo(&path(4), &ord(4, &[0, 3, 1, 2])).unwrap());
        assert!(!check_peo(&path(4), &ord(4, &[1, 0, 2, 3])).unwrap());
        assert_eq!(
            check_peo(&path(3), &EliminationOrdering { order: vec![0, 0, 1] }),
            Err(Error::NotPermutation(3))
        );
        assert!(EliminationOrdering::new(3, vec![0, 1]).is_err());
    }

    #[test]
    fn dpeo() {
        assert!(check_dpeo(&complete(3), &ord(3, &[1, 2, 0])).unwrap());
        assert!(!check_dpeo(&cycle(4), &ord(4, &[0, 1, 2, 3])).unwrap());
        assert!(check_dpeo(&path(4), &ord(4, &[0, 3, 1, 2])).unwrap());
    }

    #[test]
    fn dpeo_is_stricter_than_peo() {
        // Triangle 0-1-2 with a pendant on 1 and on 2: eliminating 0 first is
        // perfect, but 0 then has no maximum neighbour.
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let early = ord(5, &[0, 3, 4, 1, 2]);
        assert!(check_peo(&g, &early).unwrap());
        assert!(!check_dpeo(&g, &early).unwrap());
        assert!(check_dpeo(&g, &ord(5, &[3, 4, 0, 1, 2])).unwrap());
    }

    #[test]
    fn tree_convexity() {
        // C6 with left side {0,2,4} and the path tree 0-2-4: vertex 5 sees {0,4}.
        let c6 = cycle(6);
        let parts = c6.bipartition().unwrap();
        let w = TreeWitness::new(6, parts.left.clone(), &[(0, 2), (2, 4)], TreeKind::General).unwrap();
        assert!(!validate_tree_convex(&c6, &parts, &w).unwrap());
        // K_{3,3}-style neighbourhoods are always subtrees of a star.
        let k = complete_bipartite(3, 2);
        let parts = k.bipartition().unwrap();
        let star = TreeWitness::new(5, parts.left.clone(), &[(0, 1), (0, 2)], TreeKind::Star).unwrap();
        assert!(validate_tree_convex(&k, &parts, &star).unwrap());
        let wrong_side = TreeWitness::new(5, parts.right.clone(), &[(3, 4)], TreeKind::Star).unwrap();
        assert!(validate_tree_convex(&k, &parts, &wrong_side).is_err());
    }

    #[test]
    fn tree_shapes() {
        let nodes = VertexSet::full(6);
        let comb = TreeWitness::new(6, nodes.clone(), &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)], TreeKind::Comb)
            .unwrap();
        assert!(comb.is_well_formed());
        let not_comb =
            TreeWitness::new(6, nodes.clone(), &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)], TreeKind::Comb).unwrap();
        assert!(!not_comb.is_well_formed());
        let star = TreeWitness { kind: TreeKind::Star, ..not_comb };
        assert!(star.is_well_formed());
        let cyc = TreeWitness::new(6, nodes, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)], TreeKind::General).unwrap();
        assert!(!cyc.is_well_formed());
    }

    #[test]
    fn bounded_chordal_bipartite() {
        assert_eq!(
            chordal_bipartite_check_bounded(&cycle(6), 6).unwrap(),
            ChordalBipartiteVerdict::Fail { bound: 6, cycle: vec![0, 1, 2, 3, 4, 5] }
        );
        let chorded = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert_eq!(
            chordal_bipartite_check_bounded(&chorded, 6).unwrap(),
            ChordalBipartiteVerdict::Pass { bound: 6 }
        );
        assert!(chordal_bipartite_check_bounded(&cycle(8), 6).unwrap().passed());
        assert!(!chordal_bipartite_check_bounded(&cycle(8), 8).unwrap().passed());
        assert!(chordal_bipartite_check_bounded(&cycle(6), 7).is_err());
        assert_eq!(chordal_bipartite_check_bounded(&complete(3), 6), Err(Error::NotBipartite));
    }
}
