//! Definition-level oracles that share no code with the library's
//! certifier or search: adjacency matrix, plain subset enumeration.
#![allow(dead_code)]

use scds::Graph;

pub struct Naive {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| s[v] || (0..self.n).any(|u| s[u] && self.adj[u][v]))
    }

    fn connected(&self, s: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| s[v]) else {
            return false;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if s[u] && self.adj[v][u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.n).all(|v| !s[v] || seen[v])
    }

    pub fn is_ds(&self, s: &[bool]) -> bool {
        self.dominating(s)
    }

    pub fn is_cds(&self, s: &[bool]) -> bool {
        self.connected(s) && self.dominating(s)
    }

    pub fn is_scds(&self, s: &[bool]) -> bool {
        self.is_cds(s)
            && (0..self.n).filter(|&u| !s[u]).all(|u| {
                (0..self.n).filter(|&v| s[v] && self.adj[u][v]).any(|v| {
                    let mut t = s.to_vec();
                    t[v] = false;
                    t[u] = true;
                    self.is_cds(&t)
                })
            })
    }

    fn min_by(&self, pred: impl Fn(&[bool]) -> bool) -> Option<usize> {
        assert!(self.n <= 20, "naive oracle is exponential");
        (0u32..1 << self.n)
            .filter_map(|mask| {
                let s: Vec<bool> = (0..self.n).map(|v| mask >> v & 1 == 1).collect();
                pred(&s).then_some(mask.count_ones() as usize)
            })
            .min()
    }

    pub fn gamma(&self) -> usize {
        self.min_by(|s| self.is_ds(s)).unwrap()
    }

    pub fn gamma_sc(&self) -> Option<usize> {
        self.min_by(|s| self.is_scds(s))
    }

    /// Every minimum SCDS, as membership vectors.
    pub fn all_minimum_scds(&self) -> Vec<Vec<bool>> {
        let Some(best) = self.gamma_sc() else {
            return Vec::new();
        };
        (0u32..1 << self.n)
            .filter(|m| m.count_ones() as usize == best)
            .map(|mask| (0..self.n).map(|v| mask >> v & 1 == 1).collect::<Vec<bool>>())
            .filter(|s| self.is_scds(s))
            .collect()
    }
}

/// Minimum vertex cover by plain enumeration.
pub fn naive_vertex_cover(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << g.n())
        .filter(|&mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Minimum set cover by plain enumeration over subfamilies.
pub fn naive_set_cover(n: usize, family: &[Vec<usize>]) -> Option<usize> {
    (0u32..1 << family.len())
        .filter(|&mask| {
            (0..n).all(|e| (0..family.len()).any(|j| mask >> j & 1 == 1 && family[j].contains(&e)))
        })
        .map(|m| m.count_ones() as usize)
        .min()
}
