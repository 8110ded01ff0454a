//! Standard named graphs.

use crate::graph::{Graph, Vertex};

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges(n, edges).expect("family construction yields a simple graph")
}

/// P_n, vertices in path order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// C_n for n ≥ 3, vertices in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// K_{r,s}: the first r vertices form one side.
pub fn complete_bipartite(r: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..r {
        for v in r..r + s {
            edges.push((u, v));
        }
    }
    build(r + s, &edges)
}

/// K_{1,k} with center 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    build(k + 1, &edges)
}

/// Center 0 with one leg per entry of `legs`, each leg a path of that many edges.
pub fn spider(legs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(next, &edges)
}

/// Outer 5-cycle 0..5, spokes i–(i+5), inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}
