//! Chain graphs: recognition by degree sort plus containment check, and the
//! four-vertex-plus-pendants SCDS construction with an optimality report
//! against the exact oracle.
//!
//! The construction is always feasible but not always optimal: on `K_{2,2}`
//! and `K_{2,3}` it returns 4 vertices while the optimum is 3. The module
//! therefore reports the gap instead of claiming `γ_sc`.

use serde::Serialize;

use crate::certify;
use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

/// `N(x_1) ⊆ … ⊆ N(x_p)` and `N(y_1) ⊇ … ⊇ N(y_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

fn contained(g: &Graph, a: usize, b: usize) -> bool {
    g.degree(a) <= g.degree(b) && g.neighbors(a).iter().all(|&w| g.has_edge(b, w))
}

impl ChainOrdering {
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::empty(g.n());
        let all_distinct = self
            .x_order
            .iter()
            .chain(&self.y_order)
            .all(|&v| v < g.n() && seen.insert(v));
        all_distinct
            && seen.len() == g.n()
            && self.x_order.windows(2).all(|w| contained(g, w[0], w[1]))
            && self.y_order.windows(2).all(|w| contained(g, w[1], w[0]))
    }
}

/// Sorts the left side by ascending degree and the right side by
/// descending degree (ties by index), then verifies the containment
/// chain. `None` means `g` is not a chain graph.
pub fn chain_ordering(g: &Graph, parts: &Bipartition) -> Option<ChainOrdering> {
    let mut x_order = parts.left.to_vec();
    x_order.sort_by_key(|&v| (g.degree(v), v));
    let mut y_order = parts.right.to_vec();
    y_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let ord = ChainOrdering { x_order, y_order };
    ord.verify(g).then_some(ord)
}

/// `{y_1, y_2, x_{p-1}, x_p} ∪ P(G)`, or all vertices when one side has a
/// single vertex. The result is certified before it is returned.
pub fn chain_construction_scds(g: &Graph, ord: &ChainOrdering) -> Result<VertexSet> {
    if !ord.verify(g) {
        return Err(Error::Invalid("ordering is not a chain ordering of the graph".into()));
    }
    let (p, q) = (ord.x_order.len(), ord.y_order.len());
    let set = if p <= 1 || q <= 1 {
        g.vertices()
    } else {
        let (pendants, _) = g.pendant_and_support();
        let (y1, y2) = (ord.y_order[0], ord.y_order[1]);
        let (xp1, xp) = (ord.x_order[p - 2], ord.x_order[p - 1]);
        for v in pendants.iter() {
            let support = g.neighbors(v)[0];
            debug_assert!(
                if ord.x_order.contains(&v) { support == y1 } else { support == xp },
                "pendant {v} hangs off the wrong end of the chain"
            );
        }
        let mut s = pendants;
        for v in [y1, y2, xp1, xp] {
            s.insert(v);
        }
        s
    };
    if certify::is_scds(g, &set).is_none() {
        return Err(Error::NotScds(set.to_string()));
    }
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub construction_size: usize,
    pub exact_size: usize,
    pub gap: usize,
    /// Every vertex of the constructed set is a pendant or a support
    /// (with `n ≥ 3`), so no SCDS can be smaller and the gap must be 0.
    pub pendant_saturated: bool,
}

pub fn chain_optimality_report(
    g: &Graph,
    ord: &ChainOrdering,
    exact: &ExactSolver,
) -> Result<ChainReport> {
    let built = chain_construction_scds(g, ord)?;
    let best = exact.gamma_sc(g)?;
    let pendant_saturated = g.n() >= 3 && built.is_subset(&g.pendants_and_supports());
    Ok(ChainReport {
        exact_size: best.size,
        gap: built.len() - best.size,
        construction_size: built.len(),
        pendant_saturated,
    })
}
