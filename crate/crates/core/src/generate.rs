//! Seeded instance generators. All randomness comes from a ChaCha8 stream
//! seeded with the caller's `u64`, so outputs are identical across runs
//! and platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random recursive tree over a shuffled vertex
/// order, plus every remaining pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    let tree = Graph::from_edge_list(n, &edges).unwrap();
    let p = p.clamp(0.0, 1.0);
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random connected bipartite graph with sides `0..left` and
/// `left..left+right` (both nonempty): a random spanning tree across the
/// sides plus every remaining cross pair with probability `p`.
pub fn random_connected_bipartite(left: usize, right: usize, p: f64, seed: u64) -> Graph {
    assert!(left >= 1 && right >= 1, "both sides must be nonempty");
    let n = left + right;
    let mut rng = rng(seed);
    let is_left = |v: usize| v < left;
    let first_left = rng.gen_range(0..left);
    let first_right = left + rng.gen_range(0..right);
    let mut rest: Vec<usize> = (0..n).filter(|&v| v != first_left && v != first_right).collect();
    rest.shuffle(&mut rng);
    let mut placed_left = vec![first_left];
    let mut placed_right = vec![first_right];
    let mut edges = vec![(first_left, first_right)];
    for v in rest {
        if is_left(v) {
            let w = placed_right[rng.gen_range(0..placed_right.len())];
            edges.push((v, w));
            placed_left.push(v);
        } else {
            let w = placed_left[rng.gen_range(0..placed_left.len())];
            edges.push((v, w));
            placed_right.push(v);
        }
    }
    let tree = Graph::from_edge_list(n, &edges).unwrap();
    let p = p.clamp(0.0, 1.0);
    for u in 0..left {
        for v in left..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Chain graph from a nondecreasing left-degree sequence: `x_i` (vertex
/// `i`) is joined to the first `degrees[i]` right vertices `p..p+q`.
pub fn chain_from_degrees(q: usize, degrees: &[usize]) -> Graph {
    let p = degrees.len();
    let mut edges = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        for j in 0..d.min(q) {
            edges.push((i, p + j));
        }
    }
    Graph::from_edge_list(p + q, &edges).unwrap()
}

/// Random connected chain graph on `p` left and `q` right vertices. Left
/// degrees are drawn uniformly from `1..=q` and sorted; the last is raised
/// to `q` so that no right vertex is isolated.
pub fn random_chain(p: usize, q: usize, seed: u64) -> Graph {
    assert!(p >= 1 && q >= 1, "both sides must be nonempty");
    let mut rng = rng(seed);
    let mut degrees: Vec<usize> = (0..p).map(|_| rng.gen_range(1..=q)).collect();
    degrees.sort_unstable();
    degrees[p - 1] = q;
    chain_from_degrees(q, &degrees)
}

/// Every connected chain graph with the given side sizes, as degree
/// sequences (nondecreasing, values in `1..=q`, last equal to `q`).
pub fn all_chain_degree_sequences(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(p: usize, q: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == p {
            cur.push(q);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for d in lo..=q {
            cur.push(d);
            rec(p, q, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p >= 1 && q >= 1 {
        rec(p, q, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// All connected graphs on `n` labelled vertices with at most `max_m`
/// edges (brute force over edge subsets; intended for `n ≤ 5`).
pub fn all_connected_graphs(n: usize, max_m: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 20, "enumeration limited to n ≤ 6");
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() as usize > max_m {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
