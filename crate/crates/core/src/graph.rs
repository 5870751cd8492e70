//! Immutable simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
    max_degree: usize,
}

/// A two-colouring of a connected graph; vertex 0 is always on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; the result does not depend on edge order.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut m2 = 0;
        let mut max_degree = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
            max_degree = max_degree.max(list.len());
        }
        Ok(Self {
            adjacency,
            m: m2 / 2,
            max_degree,
        })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
            max_degree: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted open neighbourhood.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.n());
        s.insert(v);
        for &u in self.neighbors(v) {
            s.insert(u);
        }
        s
    }

    /// True iff every vertex is reachable from vertex 0 (vacuous for n ≤ 1).
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.is_connected_within(&self.vertices())
    }

    /// True iff the induced subgraph `G[s]` is connected and nonempty.
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = VertexSet::empty(self.n());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if s.contains(u) && seen.insert(u) {
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == s.len()
    }

    /// Connected components of `G[s]`, each listed in increasing order,
    /// components ordered by their smallest vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::empty(self.n());
        let mut comps = Vec::new();
        for start in s.iter() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if s.contains(u) && seen.insert(u) {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// `P(G)` (degree-one vertices) and `S(G)` (their unique neighbours).
    pub fn pendant_and_support(&self) -> (VertexSet, VertexSet) {
        let mut pendants = VertexSet::empty(self.n());
        let mut supports = VertexSet::empty(self.n());
        for v in 0..self.n() {
            if let [s] = self.neighbors(v) {
                pendants.insert(v);
                supports.insert(*s);
            }
        }
        (pendants, supports)
    }

    /// `P(G) ∪ S(G)`.
    pub fn pendants_and_supports(&self) -> VertexSet {
        let (p, s) = self.pendant_and_support();
        p.union(&s)
    }

    /// Two-colouring by breadth-first search from vertex 0; `None` if an
    /// odd cycle exists. Disconnected graphs are coloured component by
    /// component, each component's smallest vertex on the left.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &u in self.neighbors(v) {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::empty(n);
        let mut right = VertexSet::empty(n);
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(true) {
                right.insert(v);
            } else {
                left.insert(v);
            }
        }
        Some(Bipartition { left, right })
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// order. Returns the graph and the map from new to old indices.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.to_vec();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let adjacency: Vec<Vec<usize>> = old
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&u| s.contains(u))
                    .map(|&u| new_index[u])
                    .collect()
            })
            .collect();
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        (
            Graph {
                adjacency,
                m,
                max_degree,
            },
            old,
        )
    }
}

impl Bipartition {
    /// Checks the partition invariants against `g` by a direct edge scan.
    pub fn certifies(&self, g: &Graph) -> bool {
        self.left.universe() == g.n()
            && self.right.universe() == g.n()
            && self.left.intersection(&self.right).is_empty()
            && self.left.union(&self.right).len() == g.n()
            && g.edges()
                .all(|(u, v)| self.left.contains(u) != self.left.contains(v))
    }

    pub fn swap_sides(&self) -> Self {
        Self {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// `K_{p,q}` with the `p` side on `0..p`.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..p {
            for v in 0..q {
                edges.push((u, p + v));
            }
        }
        Graph::from_edge_list(p + q, &edges).unwrap()
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }

    /// Parses names like `P3`, `C4`, `K4`, `K1,4`.
    pub fn by_name(name: &str) -> Option<Graph> {
        let (head, rest) = name.split_at(1.min(name.len()));
        match head {
            "P" => rest.parse().ok().filter(|&n| n >= 1).map(path),
            "C" => rest.parse().ok().filter(|&n| n >= 3).map(cycle),
            "K" => match rest.split_once(',') {
                Some((p, q)) => Some(complete_bipartite(p.parse().ok()?, q.parse().ok()?)),
                None => rest.parse().ok().map(complete),
            },
            _ => None,
        }
    }
}
