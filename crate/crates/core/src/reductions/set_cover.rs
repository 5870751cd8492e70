use super::{GadgetBuilder, Layout, ParamMap, ReductionArtifact, Witness};
use crate::classes::EliminationOrdering;
use crate::error::{Error, Result};
use crate::exact::SetCoverInstance;
use crate::vertex_set::VertexSet;

/// Element vertices `x_i`, subset vertices `c_j`, then `p` and `q`. The
/// subset vertices plus `p` form a clique, `p` sees every element, and `q`
/// hangs off `p`.
pub fn setcover_to_doubly_chordal(inst: &SetCoverInstance) -> Result<ReductionArtifact> {
    if let Some(e) = inst.uncovered() {
        return Err(Error::InfeasibleCover(e));
    }
    let (n, m) = (inst.universe_size(), inst.family().len());
    let mut b = GadgetBuilder::new();
    let xs: Vec<usize> = (0..n).map(|i| b.add(format!("x_{}", i + 1))).collect();
    let cs: Vec<usize> = (0..m).map(|j| b.add(format!("c_{}", j + 1))).collect();
    let p = b.add("p");
    let q = b.add("q");
    for (j, subset) in inst.family().iter().enumerate() {
        for &e in subset {
            b.edge(xs[e], cs[j]);
        }
        for &c in &cs[j + 1..] {
            b.edge(cs[j], c);
        }
        b.edge(cs[j], p);
    }
    for &x in &xs {
        b.edge(x, p);
    }
    b.edge(p, q);
    let total = b.n();
    let (graph, labels) = b.build();
    let order = EliminationOrdering::new(total, (0..total).collect())?;
    Ok(ReductionArtifact {
        graph,
        labels,
        param: ParamMap::Offset(2),
        witness: Some(Witness::Elimination(order)),
        forced: VertexSet::from_vertices(total, [p, q])?,
        bipartition: None,
        layout: Layout::SetCover(inst.clone()),
    })
}

/// Subsets whose vertices lie in `s`, then for every element vertex in `s`
/// still uncovered, the smallest-index subset containing it.
pub fn extract_set_cover(art: &ReductionArtifact, s: &VertexSet) -> Result<Vec<usize>> {
    let Layout::SetCover(inst) = &art.layout else {
        return Err(Error::Invalid(format!("expected a set-cover gadget, got {}", art.layout.name())));
    };
    art.check_scds(s)?;
    let n = inst.universe_size();
    let m = inst.family().len();
    let mut chosen: Vec<usize> = (0..m).filter(|&j| s.contains(n + j)).collect();
    let mut covered = vec![false; n];
    for &j in &chosen {
        for &e in &inst.family()[j] {
            covered[e] = true;
        }
    }
    for i in (0..n).filter(|&i| s.contains(i)) {
        if covered[i] {
            continue;
        }
        let j = (0..m)
            .find(|&j| inst.family()[j].contains(&i))
            .ok_or(Error::InfeasibleCover(i))?;
        chosen.push(j);
        for &e in &inst.family()[j] {
            covered[e] = true;
        }
    }
    chosen.sort_unstable();
    debug_assert!(inst.is_cover(&chosen));
    Ok(chosen)
}
