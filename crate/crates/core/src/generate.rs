//! Seeded instance generators: random labeled trees, exhaustive labeled trees,
//! and random spread cacti.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest n accepted by [`labeled_trees`].
pub const MAX_ENUMERATED_TREE: usize = 8;

/// Decodes a Prüfer sequence over `0..n` (length n−2) into its labeled tree.
pub fn prufer_decode(n: usize, seq: &[Vertex]) -> Result<Graph> {
    if n < 2 || seq.len() + 2 != n || seq.iter().any(|&v| v >= n) {
        return Err(Error::Invalid(format!("not a Prüfer sequence for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    Graph::from_edges(n, &edges)
}

/// Uniform random labeled tree on `n ≥ 1` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match n {
        0 => Err(Error::Invalid("a tree needs at least one vertex".into())),
        1 => Ok(Graph::empty(1)),
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// All n^(n−2) labeled trees on `n ≤ 8` vertices, in lexicographic Prüfer order.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::Invalid("a tree needs at least one vertex".into()));
    }
    if n > MAX_ENUMERATED_TREE {
        return Err(Error::TooLarge { what: format!("labeled tree enumeration with n = {n}") });
    }
    let len = n.saturating_sub(2);
    let total = if n == 1 { 1 } else { n.pow(len as u32) };
    Ok((0..total).map(move |mut code| {
        if n == 1 {
            return Graph::empty(1);
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(n, &seq).expect("valid sequence")
    }))
}

/// Largest n accepted by [`labeled_graphs`].
pub const MAX_ENUMERATED_GRAPH: usize = 6;

/// All 2^(n(n−1)/2) labeled graphs on `n ≤ 6` vertices, connected or not.
/// Bit k of the index selects the k-th pair in lexicographic order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATED_GRAPH {
        return Err(Error::TooLarge { what: format!("labeled graph enumeration with n = {n}") });
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("distinct pairs")
    }))
}

/// Random connected graph: a uniform random spanning tree plus each other
/// pair independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Invalid("edge probability must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_with(n, &mut rng)?;
    let mut edges: Vec<(Vertex, Vertex)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random spread cactus on exactly `n` vertices with about `cycle_fraction`
/// of them on cycles of length 3 to 7.
pub fn random_spread_cactus(n: usize, cycle_fraction: f64, seed: u64) -> Result<Graph> {
    if n < 3 || !(0.0..=1.0).contains(&cycle_fraction) {
        return Err(Error::Invalid("need n ≥ 3 and a cycle fraction in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = (cycle_fraction * n as f64).round() as usize;
    let mut lengths = Vec::new();
    let mut used = 0;
    while budget - used >= 3 {
        let len = rng.gen_range(3..=(budget - used).min(7));
        lengths.push(len);
        used += len;
    }
    let k = n - used + lengths.len();
    let skeleton = random_tree_with(k, &mut rng)?;
    let mut hosts: Vec<usize> = (0..k).collect();
    hosts.shuffle(&mut rng);
    // members[s]: the vertices that skeleton node s expands into.
    let mut members: Vec<Vec<Vertex>> = (0..k).map(|s| vec![s]).collect();
    let mut next = k;
    let mut edges = Vec::with_capacity(n + lengths.len());
    for (&host, &len) in hosts.iter().zip(&lengths) {
        for _ in 1..len {
            members[host].push(next);
            next += 1;
        }
        let cyc = &members[host];
        for i in 0..len {
            edges.push((cyc[i], cyc[(i + 1) % len]));
        }
    }
    for (a, b) in skeleton.edges() {
        let x = *members[a].choose(&mut rng).unwrap();
        let y = *members[b].choose(&mut rng).unwrap();
        edges.push((x, y));
    }
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(&mut rng);
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().map(|(a, b)| (label[a], label[b])).collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_spread_cactus;
    use std::collections::HashSet;

    #[test]
    fn prufer_round_trip_examples() {
        let t = prufer_decode(6, &[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert!(prufer_decode(4, &[4, 0]).is_err());
    }

    #[test]
    fn counts_and_distinctness() {
        for (n, count) in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)] {
            let trees: Vec<Graph> = labeled_trees(n).unwrap().collect();
            assert_eq!(trees.len(), count);
            let distinct: HashSet<String> = trees.iter().map(Graph::to_edge_list).collect();
            assert_eq!(distinct.len(), count);
            assert!(trees.iter().all(Graph::is_tree));
        }
        assert!(labeled_trees(9).is_err());
    }

    #[test]
    fn graph_enumeration_counts() {
        let connected = [1, 1, 4, 38, 728, 26704];
        for n in 1..=6 {
            let all: Vec<Graph> = labeled_graphs(n).unwrap().collect();
            assert_eq!(all.len(), 1 << (n * (n - 1) / 2));
            assert_eq!(all.iter().filter(|g| g.is_connected()).count(), connected[n - 1]);
        }
        assert!(labeled_graphs(7).is_err());
    }

    #[test]
    fn random_graphs_are_connected() {
        for seed in 0..50 {
            let g = random_connected_graph(9, 0.3, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, random_connected_graph(9, 0.3, seed).unwrap());
        }
        assert!(random_connected_graph(5, 0.0, 3).unwrap().is_tree());
    }

    #[test]
    fn random_tree_contract() {
        assert_eq!(random_tree(1, 7).unwrap().n(), 1);
        for seed in 0..20 {
            let t = random_tree(3, seed).unwrap();
            assert!(t.is_tree() && (0..3).all(|v| t.degree(v) <= 2));
            assert_eq!(random_tree(30, seed).unwrap(), random_tree(30, seed).unwrap());
        }
    }

    #[test]
    fn cactus_contract() {
        for seed in 0..200 {
            let n = 3 + (seed as usize % 30);
            let f = (seed % 11) as f64 / 10.0;
            let g = random_spread_cactus(n, f, seed).unwrap();
            assert_eq!(g.n(), n);
            assert!(is_spread_cactus(&g), "{}", g.to_edge_list());
            assert_eq!(g, random_spread_cactus(n, f, seed).unwrap());
            if f == 0.0 {
                assert!(g.is_tree());
            }
        }
        assert!(random_spread_cactus(3, 1.0, 1).unwrap().is_complete());
    }
}
