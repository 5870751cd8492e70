//! Brute-force optimal solvers used as ground truth.
//!
//! Every solver enumerates candidate sets by increasing cardinality and,
//! within a cardinality, in lexicographic order of the free part, so the
//! first feasible candidate is a minimum and the lexicographically
//! smallest one. Layers may be scanned in parallel; the lowest-ranked hit
//! wins, which makes results independent of the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of candidate sets a search may examine.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// Largest vertex (or family) count the bitmask oracles accept.
pub const MAX_ORACLE_VERTICES: usize = 128;

const CHUNK: u128 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult<W = VertexSet> {
    pub size: usize,
    pub witness: W,
    /// Candidates examined in canonical order up to and including the witness.
    pub explored: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    family: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    /// Subsets are sorted and deduplicated; elements must lie in the universe.
    pub fn new(universe_size: usize, family: Vec<Vec<usize>>) -> Result<Self> {
        let mut family = family;
        for subset in &mut family {
            subset.sort_unstable();
            subset.dedup();
            if let Some(&e) = subset.iter().find(|&&e| e >= universe_size) {
                return Err(Error::VertexOutOfRange {
                    vertex: e,
                    n: universe_size,
                });
            }
        }
        Ok(Self {
            universe_size,
            family,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    /// First element not covered by any subset, if any.
    pub fn uncovered(&self) -> Option<usize> {
        let mut covered = vec![false; self.universe_size];
        for e in self.family.iter().flatten() {
            covered[*e] = true;
        }
        covered.iter().position(|c| !c)
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe_size];
        for &j in chosen {
            for &e in &self.family[j] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Bitmask view of a graph for the inner loops.
struct MaskGraph {
    open: Vec<u128>,
    closed: Vec<u128>,
    full: u128,
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl MaskGraph {
    fn new(g: &Graph) -> Result<Self> {
        check_size(g.n())?;
        let open: Vec<u128> = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
            .collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        Ok(Self {
            open,
            closed,
            full: full_mask(g.n()),
        })
    }

    fn dominates(&self, s: u128) -> bool {
        bits(s).fold(0, |acc, v| acc | self.closed[v]) == self.full
    }

    fn connected(&self, s: u128) -> bool {
        if s == 0 {
            return false;
        }
        let mut reach = s & s.wrapping_neg();
        let mut frontier = reach;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.open[v]) & s & !reach;
            reach |= next;
            frontier = next;
        }
        reach == s
    }

    fn is_cds(&self, s: u128) -> bool {
        self.connected(s) && self.dominates(s)
    }

    fn is_scds(&self, s: u128) -> bool {
        // Connectivity first: it is the cheap filter.
        if !self.connected(s) || !self.dominates(s) {
            return false;
        }
        bits(self.full & !s).all(|u| {
            bits(self.open[u] & s).any(|v| self.is_cds((s & !(1 << v)) | 1 << u))
        })
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_VERTICES,
        });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1; cancel before multiplying.
        let d = i as u128 + 1;
        let g = gcd(acc, d);
        acc = match (acc / g).checked_mul((n - i) as u128 / (d / g)) {
            Some(x) => x,
            None => return u128::MAX,
        };
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The `rank`-th `k`-combination of `0..f` in lexicographic order.
fn unrank(f: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        loop {
            let below = binomial(f - next - 1, k - slot - 1);
            if rank < below {
                break;
            }
            rank -= below;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Advances to the next combination in lexicographic order.
fn next_combination(c: &mut [usize], f: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < f - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Minimal-cardinality search over `forced ∪ X`, `X ⊆ free`, optionally
/// capped at `max_free` free elements.
fn search<P>(
    forced: u128,
    free: &[usize],
    max_free: Option<usize>,
    budget: u128,
    pred: P,
) -> Result<Option<(u128, u128)>>
where
    P: Fn(u128) -> bool + Sync,
{
    let f = free.len();
    let top = max_free.unwrap_or(f).min(f);
    let mut explored: u128 = 0;
    for k in 0..=top {
        let layer = binomial(f, k);
        let needed = explored.saturating_add(layer);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let chunks = layer.div_ceil(CHUNK);
        let hit = (0..chunks as u64).into_par_iter().find_map_first(|chunk| {
            let start = chunk as u128 * CHUNK;
            let end = (start + CHUNK).min(layer);
            let mut comb = unrank(f, k, start);
            let mut rank = start;
            loop {
                let mask = comb.iter().fold(forced, |m, &i| m | 1 << free[i]);
                if pred(mask) {
                    return Some((mask, rank));
                }
                rank += 1;
                if rank == end || !next_combination(&mut comb, f) {
                    return None;
                }
            }
        });
        if let Some((mask, rank)) = hit {
            return Ok(Some((mask, explored + rank + 1)));
        }
        explored += layer;
    }
    Ok(None)
}

fn to_set(n: usize, mask: u128) -> VertexSet {
    VertexSet::from_vertices(n, bits(mask)).unwrap()
}

fn to_result(n: usize, (mask, explored): (u128, u128)) -> ExactResult {
    ExactResult {
        size: mask.count_ones() as usize,
        witness: to_set(n, mask),
        explored,
    }
}

/// Exact solvers with a configurable candidate budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactSolver {
    pub budget: u128,
}

impl Default for ExactSolver {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl ExactSolver {
    pub fn with_budget(budget: u128) -> Self {
        Self { budget }
    }

    pub fn min_ds(&self, g: &Graph) -> Result<ExactResult> {
        let mg = MaskGraph::new(g)?;
        let free: Vec<usize> = (0..g.n()).collect();
        let hit = search(0, &free, None, self.budget, |s| mg.dominates(s))?;
        Ok(to_result(g.n(), hit.expect("V dominates")))
    }

    /// Smallest dominating set of size at most `k`, if one exists.
    pub fn min_ds_at_most(&self, g: &Graph, k: usize) -> Result<Option<ExactResult>> {
        let mg = MaskGraph::new(g)?;
        let free: Vec<usize> = (0..g.n()).collect();
        let hit = search(0, &free, Some(k), self.budget, |s| mg.dominates(s))?;
        Ok(hit.map(|h| to_result(g.n(), h)))
    }

    pub fn min_cds(&self, g: &Graph) -> Result<ExactResult> {
        require_connected(g)?;
        let mg = MaskGraph::new(g)?;
        let free: Vec<usize> = (0..g.n()).collect();
        let hit = search(0, &free, None, self.budget, |s| mg.is_cds(s))?;
        Ok(to_result(g.n(), hit.expect("V is a CDS of a connected graph")))
    }

    /// Minimum SCDS among supersets of `forced`.
    pub fn min_scds(&self, g: &Graph, forced: &VertexSet) -> Result<ExactResult> {
        require_connected(g)?;
        if forced.universe() != g.n() {
            return Err(Error::Invalid(format!(
                "forced set lives in a universe of {} vertices, graph has {}",
                forced.universe(),
                g.n()
            )));
        }
        let mg = MaskGraph::new(g)?;
        let forced_mask = forced.iter().fold(0u128, |m, v| m | 1 << v);
        let free: Vec<usize> = (0..g.n()).filter(|&v| !forced.contains(v)).collect();
        let hit = search(forced_mask, &free, None, self.budget, |s| mg.is_scds(s))?;
        Ok(to_result(g.n(), hit.expect("V is an SCDS of a connected graph")))
    }

    /// Minimum SCDS, pruning with `P(G) ∪ S(G)` when `n ≥ 3`.
    pub fn gamma_sc(&self, g: &Graph) -> Result<ExactResult> {
        self.min_scds(g, &forced_pendants(g))
    }

    pub fn min_vertex_cover(&self, g: &Graph) -> Result<ExactResult> {
        let _ = MaskGraph::new(g)?;
        let edges: Vec<u128> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
        let free: Vec<usize> = (0..g.n()).collect();
        let hit = search(0, &free, None, self.budget, |s| edges.iter().all(|&e| e & s != 0))?;
        Ok(to_result(g.n(), hit.expect("V covers every edge")))
    }

    pub fn min_set_cover(&self, inst: &SetCoverInstance) -> Result<ExactResult<Vec<usize>>> {
        check_size(inst.universe_size())?;
        check_size(inst.family().len())?;
        if let Some(e) = inst.uncovered() {
            return Err(Error::InfeasibleCover(e));
        }
        let masks: Vec<u128> = inst
            .family()
            .iter()
            .map(|s| s.iter().fold(0, |m, &e| m | 1 << e))
            .collect();
        let full = full_mask(inst.universe_size());
        let free: Vec<usize> = (0..masks.len()).collect();
        let (mask, explored) = search(0, &free, None, self.budget, |s| {
            bits(s).fold(0, |acc, j| acc | masks[j]) == full
        })?
        .expect("feasible instance");
        Ok(ExactResult {
            size: mask.count_ones() as usize,
            witness: bits(mask).collect(),
            explored,
        })
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `P(G) ∪ S(G)` for `n ≥ 3`, empty otherwise: the vertices every SCDS
/// of a connected graph on at least three vertices must contain.
pub fn forced_pendants(g: &Graph) -> VertexSet {
    if g.n() >= 3 {
        g.pendants_and_supports()
    } else {
        VertexSet::empty(g.n())
    }
}

pub fn min_ds(g: &Graph) -> Result<ExactResult> {
    ExactSolver::default().min_ds(g)
}

pub fn min_cds(g: &Graph) -> Result<ExactResult> {
    ExactSolver::default().min_cds(g)
}

pub fn min_scds(g: &Graph, forced: &VertexSet) -> Result<ExactResult> {
    ExactSolver::default().min_scds(g, forced)
}

pub fn min_vertex_cover(g: &Graph) -> Result<ExactResult> {
    ExactSolver::default().min_vertex_cover(g)
}

pub fn min_set_cover(inst: &SetCoverInstance) -> Result<ExactResult<Vec<usize>>> {
    ExactSolver::default().min_set_cover(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify;
    use crate::graph::named::*;

    fn empty(n: usize) -> VertexSet {
        VertexSet::empty(n)
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = unrank(5, 3, 0);
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 5) {
            all.push(c.clone());
        }
        assert_eq!(all.len() as u128, binomial(5, 3));
        for (r, comb) in all.iter().enumerate() {
            assert_eq!(&unrank(5, 3, r as u128), comb);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(binomial(128, 64), 23951146041928082866135587776380551750);
    }

    #[test]
    fn dominating_sets() {
        let r = min_ds(&path(3)).unwrap();
        assert_eq!((r.size, r.witness.to_vec()), (1, vec![1]));
        assert_eq!(min_ds(&cycle(4)).unwrap().size, 2);
        assert_eq!(min_ds(&cycle(5)).unwrap().size, 2);
    }

    #[test]
    fn connected_dominating_sets() {
        let r = min_cds(&path(5)).unwrap();
        assert_eq!((r.size, r.witness.to_vec()), (3, vec![1, 2, 3]));
        assert_eq!(min_cds(&complete(4)).unwrap().size, 1);
        assert_eq!(min_cds(&cycle(5)).unwrap().size, 3);
        assert_eq!(min_cds(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn secure_connected_dominating_sets() {
        let p3 = path(3);
        let r = min_scds(&p3, &p3.vertices()).unwrap();
        assert_eq!(r.size, 3);
        let r = min_scds(&cycle(4), &empty(4)).unwrap();
        assert_eq!((r.size, r.witness.to_vec()), (3, vec![0, 1, 2]));
        assert_eq!(min_scds(&cycle(5), &empty(5)).unwrap().size, 4);
        for n in 1..=6 {
            assert_eq!(min_scds(&complete(n), &empty(n)).unwrap().size, 1);
        }
        assert!(min_scds(&path(3), &empty(4)).is_err());
    }

    #[test]
    fn vertex_covers() {
        let r = min_vertex_cover(&path(3)).unwrap();
        assert_eq!((r.size, r.witness.to_vec()), (1, vec![1]));
        assert_eq!(min_vertex_cover(&cycle(5)).unwrap().size, 3);
        assert_eq!(min_vertex_cover(&complete(4)).unwrap().size, 3);
    }

    #[test]
    fn set_covers() {
        let inst = SetCoverInstance::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        let r = min_set_cover(&inst).unwrap();
        assert_eq!((r.size, r.witness), (1, vec![2]));
        let inst = SetCoverInstance::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(min_set_cover(&inst).unwrap().size, 2);
        let inst =
            SetCoverInstance::new(4, vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3]]).unwrap();
        let r = min_set_cover(&inst).unwrap();
        assert_eq!((r.size, r.witness), (2, vec![0, 1]));
        let bad = SetCoverInstance::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(min_set_cover(&bad), Err(Error::InfeasibleCover(2)));
    }

    #[test]
    fn budget_guard() {
        let g = cycle(12);
        let tight = ExactSolver::with_budget(100);
        assert!(matches!(tight.min_ds(&g), Err(Error::BudgetExceeded { .. })));
        assert!(ExactSolver::default().min_ds(&g).is_ok());
    }

    #[test]
    fn explored_counts_canonical_position() {
        // P3: layer 0 has one candidate, then {0} fails, {1} succeeds.
        assert_eq!(min_ds(&path(3)).unwrap().explored, 3);
    }

    #[test]
    fn parallel_matches_single_thread() {
        let g = crate::generate::random_connected(16, 0.2, 3);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let many = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
        let a = one.install(|| min_scds(&g, &forced_pendants(&g)).unwrap());
        let b = many.install(|| min_scds(&g, &forced_pendants(&g)).unwrap());
        assert_eq!(a, b);
        assert!(certify::is_scds(&g, &a.witness).is_some());
    }

    #[test]
    fn parameter_ordering_on_random_graphs() {
        for seed in 0..30 {
            let g = crate::generate::random_connected(7, 0.3, seed);
            let ds = min_ds(&g).unwrap().size;
            let cds = min_cds(&g).unwrap();
            let scds = min_scds(&g, &empty(7)).unwrap();
            assert!(ds <= cds.size && cds.size <= scds.size && scds.size <= 7);
            assert!(certify::is_cds(&g, &cds.witness));
            assert!(certify::is_scds(&g, &scds.witness).is_some());
            // One size smaller never works: spot-check by enumeration.
            for mask in 0u32..1 << 7 {
                if mask.count_ones() as usize == scds.size - 1 {
                    let s = VertexSet::from_vertices(7, (0..7).filter(|v| mask >> v & 1 == 1)).unwrap();
                    assert!(certify::is_scds(&g, &s).is_none());
                }
            }
            assert_eq!(scds, min_scds(&g, &forced_pendants(&g)).unwrap().with_explored(scds.explored));
        }
    }

    impl ExactResult {
        fn with_explored(mut self, explored: u128) -> Self {
            self.explored = explored;
            self
        }
    }
}
