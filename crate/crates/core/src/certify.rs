//! Verifiers for dominating, connected dominating and secure connected
//! dominating sets.
//!
//! The SCDS check avoids re-running a full connectivity test per swap:
//! with `S` already a CDS, the swap `(S \ {v}) ∪ {u}` stays connected iff
//! `u` touches every piece of `G[S] - v`, and those pieces are read off a
//! single depth-first search of `G[S]` (articulation structure).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Defender assignment proving a set is an SCDS: every outside vertex
/// maps to the neighbour in the set it swaps with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecurityCertificate {
    #[serde(serialize_with = "ser_defenders")]
    pub defenders: BTreeMap<usize, usize>,
    pub set: VertexSet,
}

fn ser_defenders<S: serde::Serializer>(
    map: &BTreeMap<usize, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(u, v)| (u, v.to_string())))
}

impl SecurityCertificate {
    /// Re-checks every entry by rebuilding the swapped set and running
    /// the plain CDS test on it.
    pub fn replay(&self, g: &Graph) -> bool {
        let outside = self.set.complement();
        outside.iter().all(|u| self.defenders.contains_key(&u))
            && self.defenders.len() == outside.len()
            && is_cds(g, &self.set)
            && self.defenders.iter().all(|(&u, &v)| {
                !self.set.contains(u)
                    && self.set.contains(v)
                    && g.has_edge(u, v)
                    && is_cds(g, &self.set.swapped(v, u))
            })
    }
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    first_undominated(g, s).is_none()
}

fn first_undominated(g: &Graph, s: &VertexSet) -> Option<usize> {
    (0..g.n()).find(|&v| !s.contains(v) && !g.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// Nonempty, induces a connected subgraph, and dominates.
pub fn is_cds(g: &Graph, s: &VertexSet) -> bool {
    g.is_connected_within(s) && is_dominating(g, s)
}

/// Returns the certificate with the smallest-index defender for every
/// outside vertex, or `None` if `s` is not an SCDS.
pub fn is_scds(g: &Graph, s: &VertexSet) -> Option<SecurityCertificate> {
    if !is_cds(g, s) {
        return None;
    }
    let oracle = SwapOracle::new(g, s);
    let mut defenders = BTreeMap::new();
    for u in (0..g.n()).filter(|&u| !s.contains(u)) {
        let v = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&v| s.contains(v) && oracle.swap_is_cds(v, u))?;
        defenders.insert(u, v);
    }
    Some(SecurityCertificate {
        defenders,
        set: s.clone(),
    })
}

/// Every valid defender of `u`. Errors if `u` lies inside `s`.
pub fn defenders_of(g: &Graph, s: &VertexSet, u: usize) -> Result<VertexSet> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if s.contains(u) {
        return Err(Error::InsideSet(u));
    }
    let mut out = VertexSet::empty(g.n());
    let candidates = g.neighbors(u).iter().copied().filter(|&v| s.contains(v));
    if is_cds(g, s) {
        let oracle = SwapOracle::new(g, s);
        candidates.filter(|&v| oracle.swap_is_cds(v, u)).for_each(|v| {
            out.insert(v);
        });
    } else {
        // The swap oracle assumes a connected dominating S.
        candidates.filter(|&v| is_cds(g, &s.swapped(v, u))).for_each(|v| {
            out.insert(v);
        });
    }
    Ok(out)
}

/// Why a set fails a certification, with the first offending vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", content = "vertex", rename_all = "snake_case")]
pub enum Failure {
    Empty,
    /// Smallest undominated vertex.
    Undominated(usize),
    /// Smallest member of the set unreachable from the set's minimum.
    Disconnected(usize),
    /// Smallest outside vertex with no valid defender.
    Undefended(usize),
}

impl Failure {
    pub fn vertex(&self) -> Option<usize> {
        match *self {
            Failure::Empty => None,
            Failure::Undominated(v) | Failure::Disconnected(v) | Failure::Undefended(v) => Some(v),
        }
    }
}

pub fn ds_failure(g: &Graph, s: &VertexSet) -> Option<Failure> {
    first_undominated(g, s).map(Failure::Undominated)
}

pub fn cds_failure(g: &Graph, s: &VertexSet) -> Option<Failure> {
    let Some(start) = s.first() else {
        return Some(Failure::Empty);
    };
    let comp = g
        .components_within(s)
        .into_iter()
        .find(|c| c.contains(&start))
        .unwrap();
    if comp.len() != s.len() {
        let reached = VertexSet::from_vertices(g.n(), comp).unwrap();
        let v = s.difference(&reached).first().unwrap();
        return Some(Failure::Disconnected(v));
    }
    ds_failure(g, s)
}

pub fn scds_failure(g: &Graph, s: &VertexSet) -> Option<Failure> {
    if let Some(f) = cds_failure(g, s) {
        return Some(f);
    }
    let oracle = SwapOracle::new(g, s);
    (0..g.n())
        .filter(|&u| !s.contains(u))
        .find(|&u| {
            !g.neighbors(u)
                .iter()
                .any(|&v| s.contains(v) && oracle.swap_is_cds(v, u))
        })
        .map(Failure::Undefended)
}

const UNSEEN: usize = usize::MAX;

/// Precomputed structure of a CDS `S` answering "is `(S \ {v}) ∪ {u}` a
/// CDS?" in time proportional to `deg(u) + deg(v)`.
struct SwapOracle<'a> {
    g: &'a Graph,
    size: usize,
    /// `|N[w] ∩ S|` for every vertex.
    dominators: Vec<usize>,
    /// DFS preorder index within `G[S]`, `UNSEEN` outside `S`.
    disc: Vec<usize>,
    /// Subtree sizes in the DFS tree.
    subtree: Vec<usize>,
    /// Children `c` of `v` with `low[c] >= disc[v]`, in preorder.
    separated: Vec<Vec<usize>>,
}

impl<'a> SwapOracle<'a> {
    fn new(g: &'a Graph, s: &VertexSet) -> Self {
        let n = g.n();
        let mut dominators = vec![0; n];
        for v in s.iter() {
            dominators[v] += 1;
            for &w in g.neighbors(v) {
                dominators[w] += 1;
            }
        }
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut subtree = vec![0; n];
        let mut separated = vec![Vec::new(); n];
        if let Some(root) = s.first() {
            let mut counter = 0;
            disc[root] = counter;
            low[root] = counter;
            subtree[root] = 1;
            counter += 1;
            // (vertex, parent, next neighbour position)
            let mut stack = vec![(root, UNSEEN, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, pos) = *top;
                if let Some(&w) = g.neighbors(v).get(pos) {
                    top.2 += 1;
                    if !s.contains(w) {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = counter;
                        low[w] = counter;
                        subtree[w] = 1;
                        counter += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        subtree[parent] += subtree[v];
                        if low[v] >= disc[parent] {
                            separated[parent].push(v);
                        }
                    }
                }
            }
        }
        Self {
            g,
            size: s.len(),
            dominators,
            disc,
            subtree,
            separated,
        }
    }

    fn in_set(&self, w: usize) -> bool {
        self.disc[w] != UNSEEN
    }

    /// Requires `v ∈ S`, `u ∉ S`, `uv ∈ E`.
    fn swap_is_cds(&self, v: usize, u: usize) -> bool {
        let g = self.g;
        // Domination: only closed neighbours of v lose a dominator.
        let lost = std::iter::once(v).chain(g.neighbors(v).iter().copied());
        for w in lost {
            if self.dominators[w] == 1 && w != u && !g.has_edge(u, w) {
                return false;
            }
        }
        if self.size == 1 {
            return true;
        }
        // Connectivity: u must touch every piece of G[S] - v.
        let pieces = &self.separated[v];
        let remainder = self.size - 1 - pieces.iter().map(|&c| self.subtree[c]).sum::<usize>();
        let needed = pieces.len() + usize::from(remainder > 0);
        let mut hit = vec![false; pieces.len() + 1];
        let mut hits = 0;
        let dv = self.disc[v];
        for &w in g.neighbors(u) {
            if w == v || !self.in_set(w) {
                continue;
            }
            let dw = self.disc[w];
            let mut slot = pieces.len();
            if dw > dv && dw < dv + self.subtree[v] {
                let idx = pieces.partition_point(|&c| self.disc[c] <= dw);
                if idx > 0 {
                    let c = pieces[idx - 1];
                    if dw < self.disc[c] + self.subtree[c] {
                        slot = idx - 1;
                    }
                }
            }
            if !hit[slot] {
                hit[slot] = true;
                hits += 1;
                if hits == needed {
                    return true;
                }
            }
        }
        hits == needed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn domination() {
        assert!(is_dominating(&path(3), &set(3, &[1])));
        assert!(!is_dominating(&path(3), &set(3, &[0])));
        assert!(is_dominating(&cycle(5), &set(5, &[0, 2])));
    }

    #[test]
    fn connected_domination() {
        assert!(is_cds(&cycle(4), &set(4, &[0, 1])));
        assert!(!is_cds(&cycle(4), &set(4, &[0, 2])));
        assert!(is_cds(&path(5), &set(5, &[1, 2, 3])));
        assert!(!is_cds(&Graph::empty(0), &set(0, &[])));
        assert!(!is_cds(&path(2), &set(2, &[])));
    }

    #[test]
    fn secure_connected_domination() {
        let cert = is_scds(&cycle(4), &set(4, &[0, 1, 2])).unwrap();
        assert_eq!(cert.defenders, BTreeMap::from([(3, 0)]));
        assert!(cert.replay(&cycle(4)));
        assert!(is_scds(&cycle(4), &set(4, &[0, 1])).is_none());
        let cert = is_scds(&complete(3), &set(3, &[0])).unwrap();
        assert_eq!(cert.defenders, BTreeMap::from([(1, 0), (2, 0)]));
        let all = is_scds(&path(3), &set(3, &[0, 1, 2])).unwrap();
        assert!(all.defenders.is_empty());
    }

    #[test]
    fn certificate_json_shape() {
        let cert = is_scds(&cycle(4), &set(4, &[0, 1, 2])).unwrap();
        assert_eq!(
            serde_json::to_string(&cert).unwrap(),
            r#"{"defenders":{"3":"0"},"set":[0,1,2]}"#
        );
    }

    #[test]
    fn defender_sets() {
        assert_eq!(defenders_of(&cycle(4), &set(4, &[0, 1, 2]), 3).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            defenders_of(&path(3), &set(3, &[0, 1, 2]), 1),
            Err(Error::InsideSet(1))
        );
        assert!(defenders_of(&star(3), &set(4, &[0, 2, 3]), 1).unwrap().is_empty());
    }

    #[test]
    fn failures() {
        assert_eq!(scds_failure(&cycle(4), &set(4, &[0, 1])), Some(Failure::Undefended(2)));
        assert_eq!(scds_failure(&cycle(4), &set(4, &[0, 2])), Some(Failure::Disconnected(2)));
        assert_eq!(scds_failure(&path(4), &set(4, &[0])), Some(Failure::Undominated(2)));
        assert_eq!(scds_failure(&path(3), &set(3, &[])), Some(Failure::Empty));
        assert_eq!(scds_failure(&cycle(4), &set(4, &[0, 1, 2])), None);
    }

    fn arb_connected() -> impl Strategy<Value = Graph> {
        (2usize..10, any::<u64>(), 0.0f64..0.7)
            .prop_map(|(n, seed, p)| crate::generate::random_connected(n, p, seed))
    }

    proptest! {
        #[test]
        fn fast_swap_matches_definition(g in arb_connected(), mask in any::<u32>()) {
            let n = g.n();
            let s = set(n, &(0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>());
            let naive = if is_cds(&g, &s) {
                (0..n).filter(|&u| !s.contains(u)).all(|u| {
                    g.neighbors(u).iter().any(|&v| s.contains(v) && is_cds(&g, &s.swapped(v, u)))
                })
            } else {
                false
            };
            let cert = is_scds(&g, &s);
            prop_assert_eq!(cert.is_some(), naive);
            if let Some(c) = cert {
                prop_assert!(c.replay(&g));
            }
            for u in (0..n).filter(|&u| !s.contains(u)) {
                let fast = defenders_of(&g, &s, u).unwrap();
                let slow: Vec<usize> = g.neighbors(u).iter().copied()
                    .filter(|&v| s.contains(v) && is_cds(&g, &s.swapped(v, u)))
                    .collect();
                prop_assert_eq!(fast.to_vec(), slow);
            }
        }

        #[test]
        fn full_vertex_set_is_secure(g in arb_connected()) {
            prop_assert!(is_scds(&g, &g.vertices()).is_some());
        }
    }
}
