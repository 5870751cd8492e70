//! Greedy domination heuristics and the two-stage SCDS approximation.
//!
//! `approx_scds` takes a connected dominating set `D_c` and adds a
//! dominating set `D` of the residual graph `G[V \ D_c]`. Every vertex left
//! outside `D_c ∪ D` has a neighbour in `D`, and swapping that neighbour
//! out keeps `D_c` intact, so the union is always secure. Its size is at
//! most `n ≤ (Δ + 1)·γ(G) ≤ (Δ + 1)·γ_sc(G)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::certify;
use crate::error::{Error, Result};
use crate::exact::ExactSolver;
use crate::graph::Graph;
use crate::reductions;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxOutcome {
    /// The ratio promise `Δ(G) + 1`.
    pub bound: usize,
    pub d: VertexSet,
    pub d_c: VertexSet,
    pub d_sc: VertexSet,
    pub delta: usize,
}

/// Lazy max-heap keyed by gain, ties to the smallest index. Gains never
/// increase, so a popped entry whose recorded gain is stale is re-pushed.
struct GainQueue {
    heap: BinaryHeap<(usize, Reverse<usize>)>,
}

impl GainQueue {
    fn new() -> Self {
        Self {
            heap: BinaryHeap::new(),
        }
    }

    fn push(&mut self, v: usize, gain: usize) {
        self.heap.push((gain, Reverse(v)));
    }

    /// Pops the best live vertex according to `gain`, skipping entries
    /// rejected by `alive`.
    fn pop_best(
        &mut self,
        alive: impl Fn(usize) -> bool,
        gain: impl Fn(usize) -> usize,
    ) -> Option<(usize, usize)> {
        while let Some((recorded, Reverse(v))) = self.heap.pop() {
            if !alive(v) {
                continue;
            }
            let current = gain(v);
            if current == recorded {
                return Some((v, current));
            }
            self.heap.push((current, Reverse(v)));
        }
        None
    }
}

fn newly_covered(g: &Graph, covered: &[bool], v: usize) -> usize {
    usize::from(!covered[v]) + g.neighbors(v).iter().filter(|&&u| !covered[u]).count()
}

fn cover(g: &Graph, covered: &mut [bool], v: usize) -> usize {
    let mut fresh = 0;
    for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
        if !covered[u] {
            covered[u] = true;
            fresh += 1;
        }
    }
    fresh
}

/// Classic greedy set-cover heuristic on closed neighbourhoods.
pub fn greedy_ds(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut covered = vec![false; n];
    let mut remaining = n;
    let mut chosen = VertexSet::empty(n);
    let mut queue = GainQueue::new();
    for v in 0..n {
        queue.push(v, g.degree(v) + 1);
    }
    while remaining > 0 {
        let (v, _) = queue
            .pop_best(|v| !chosen.contains(v), |v| newly_covered(g, &covered, v))
            .expect("an uncovered vertex always covers itself");
        chosen.insert(v);
        remaining -= cover(g, &mut covered, v);
    }
    chosen
}

/// Frontier-growth greedy CDS: seed with a maximum-degree vertex, then add
/// the frontier vertex that dominates the most new vertices.
pub fn greedy_cds(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let seed = (0..n)
        .max_by_key(|&v| (g.degree(v), Reverse(v)))
        .unwrap();
    let mut covered = vec![false; n];
    let mut set = VertexSet::empty(n);
    let mut queue = GainQueue::new();
    let add = |v: usize, covered: &mut Vec<bool>, set: &mut VertexSet, queue: &mut GainQueue| {
        set.insert(v);
        let before: Vec<usize> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .filter(|&u| !covered[u])
            .collect();
        let fresh = cover(g, covered, v);
        debug_assert_eq!(fresh, before.len());
        // Newly dominated vertices join the frontier.
        for u in before {
            if !set.contains(u) {
                queue.push(u, newly_covered(g, covered, u));
            }
        }
        fresh
    };
    let mut remaining = n - add(seed, &mut covered, &mut set, &mut queue);
    while remaining > 0 {
        let (v, gain) = queue
            .pop_best(|v| !set.contains(v), |v| newly_covered(g, &covered, v))
            .expect("connected graph has a useful frontier vertex");
        debug_assert!(gain > 0);
        remaining -= add(v, &mut covered, &mut set, &mut queue);
    }
    Ok(set)
}

/// Greedy CDS, then greedy DS of each residual component.
pub fn approx_scds(g: &Graph) -> Result<ApproxOutcome> {
    let d_c = greedy_cds(g)?;
    let residual = d_c.complement();
    let mut d = VertexSet::empty(g.n());
    for comp in g.components_within(&residual) {
        let members = VertexSet::from_vertices(g.n(), comp).unwrap();
        let (sub, map) = g.induced(&members);
        for v in greedy_ds(&sub).iter() {
            d.insert(map[v]);
        }
    }
    let d_sc = d_c.union(&d);
    debug_assert!(certify::is_scds(g, &d_sc).is_some());
    Ok(ApproxOutcome {
        bound: g.max_degree() + 1,
        d,
        d_c,
        d_sc,
        delta: g.max_degree(),
    })
}

/// Anything that produces an SCDS of a connected graph.
pub trait ScdsAlgorithm {
    fn solve(&self, g: &Graph) -> Result<VertexSet>;
}

impl<F> ScdsAlgorithm for F
where
    F: Fn(&Graph) -> Result<VertexSet>,
{
    fn solve(&self, g: &Graph) -> Result<VertexSet> {
        self(g)
    }
}

/// The two-stage approximation as an [`ScdsAlgorithm`].
pub struct ApproxScds;

impl ScdsAlgorithm for ApproxScds {
    fn solve(&self, g: &Graph) -> Result<VertexSet> {
        approx_scds(g).map(|o| o.d_sc)
    }
}

/// Dominating set via an SCDS algorithm: if a dominating set of size at
/// most `k` exists it is found exactly; otherwise the SCDS algorithm runs
/// on `G` plus a universal vertex `w` with pendant `z`, and the result is
/// restricted back to `V`.
pub fn dom_set_approx<A: ScdsAlgorithm + ?Sized>(
    g: &Graph,
    k: usize,
    solver: &A,
    exact: &ExactSolver,
) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::Precondition("threshold k must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(small) = exact.min_ds_at_most(g, k)? {
        return Ok(small.witness);
    }
    let art = reductions::dom_to_mscds_general(g)?;
    let s = solver.solve(&art.graph)?;
    VertexSet::from_vertices(g.n(), s.iter().filter(|&v| v < g.n()))
}
