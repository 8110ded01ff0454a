//! Immutable simple undirected graphs on the dense vertex set `0..n`.
//!
//! Neighbor lists are kept sorted, so every traversal in the crate visits
//! vertices in ascending order and tie-breaking downstream is deterministic.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};

pub type Vertex = usize;

/// Distance reported by [`bfs_distances`] for vertices in another component.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge {u} {v} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Invalid(format!("duplicate edge {u} {}", w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Builds from adjacency lists that are already symmetric and simple.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut total = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            total += list.len();
        }
        debug_assert!(total % 2 == 0);
        Graph { adj, m: total / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Canonical edge-list text: header `n m`, then one sorted `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.m);
        let _ = writeln!(out, "{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Subgraph induced by the vertices with `keep[v] == true`, relabelled
    /// in ascending order. Returns the graph and the map new index -> old index.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let origin: Vec<Vertex> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut relabel = vec![usize::MAX; self.n()];
        for (new, &old) in origin.iter().enumerate() {
            relabel[old] = new;
        }
        let adj = origin
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| relabel[w])
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), origin)
    }

    /// Removes the listed vertices; see [`Graph::induced_subgraph`] for the return value.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        self.induced_subgraph(&keep)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || bfs_distances(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n >= 1 && self.m == n * (n - 1) / 2
    }
}

/// Parses the canonical edge-list format.
///
/// The first non-comment line is the header `n m`; each following line is an
/// edge `u v`. Lines starting with `#` and blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut adj: Vec<Vec<Vertex>> = Vec::new();
    let mut edges = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields.next().and_then(|s| s.parse::<usize>().ok());
        let b = fields.next().and_then(|s| s.parse::<usize>().ok());
        let (a, b) = match (a, b, fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::Parse { line: line_no, kind: ParseErrorKind::Malformed }),
        };
        let Some((n, _)) = header else {
            header = Some((a, b));
            adj = vec![Vec::new(); a];
            continue;
        };
        for vertex in [a, b] {
            if vertex >= n {
                return Err(Error::Parse {
                    line: line_no,
                    kind: ParseErrorKind::OutOfRange { vertex, n },
                });
            }
        }
        if a == b {
            return Err(Error::Parse { line: line_no, kind: ParseErrorKind::SelfLoop { vertex: a } });
        }
        // Adjacency lists are short in practice; a linear scan keeps parsing allocation-free.
        if adj[a].contains(&b) {
            return Err(Error::Parse {
                line: line_no,
                kind: ParseErrorKind::DuplicateEdge { u: a, v: b },
            });
        }
        adj[a].push(b);
        adj[b].push(a);
        edges += 1;
    }

    let Some((_, declared)) = header else {
        return Err(Error::Parse { line: last_line.max(1), kind: ParseErrorKind::MissingHeader });
    };
    if declared != edges {
        return Err(Error::Parse {
            line: last_line,
            kind: ParseErrorKind::EdgeCount { declared, found: edges },
        });
    }
    Ok(Graph::from_adjacency(adj))
}

/// Breadth-first distances from `source`; [`UNREACHABLE`] marks other components.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs distance table (row per source). Quadratic memory; meant for small graphs.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|s| bfs_distances(g, s)).collect()
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut parts = Vec::new();
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut part = Vec::new();
        while let Some(u) = stack.pop() {
            part.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// A biconnected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A biconnected block with as many edges as vertices is a cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    /// Cyclic order of a cycle block, starting at its smallest vertex and
    /// continuing towards the smaller of that vertex's two cycle neighbors.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if !self.is_cycle() {
            return None;
        }
        let k = self.vertices.len();
        let pos = |v: Vertex| self.vertices.binary_search(&v).unwrap();
        let mut nbr = vec![[usize::MAX; 2]; k];
        for &(u, v) in &self.edges {
            for (a, b) in [(u, v), (v, u)] {
                let slot = &mut nbr[pos(a)];
                if slot[0] == usize::MAX {
                    slot[0] = b;
                } else {
                    slot[1] = b;
                }
            }
        }
        let start = self.vertices[0];
        let first = nbr[0][0].min(nbr[0][1]);
        let mut order = Vec::with_capacity(k);
        order.push(start);
        let (mut prev, mut cur) = (start, first);
        while cur != start {
            order.push(cur);
            let [a, b] = nbr[pos(cur)];
            let next = if a == prev { b } else { a };
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

/// Blocks, cut vertices and the block/cut-vertex incidence of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted.
    pub cut_vertices: Vec<Vertex>,
    /// Bipartite incidence `(block index, cut vertex)`.
    pub block_tree: Vec<(usize, Vertex)>,
}

impl BlockDecomposition {
    /// Indices of the blocks containing each vertex.
    pub fn blocks_of_vertices(&self, n: usize) -> Vec<Vec<usize>> {
        let mut of = vec![Vec::new(); n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in &block.vertices {
                of[v].push(b);
            }
        }
        of
    }
}

/// Biconnected components by the Hopcroft–Tarjan edge-stack method (iterative).
///
/// A single isolated vertex forms one edgeless block.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![Block { vertices: vec![0], edges: Vec::new() }],
            cut_vertices: Vec::new(),
            block_tree: Vec::new(),
        });
    }

    const UNSET: u32 = u32::MAX;
    #[derive(Clone, Copy)]
    struct Node {
        disc: u32,
        low: u32,
        parent: u32,
        next: u32,
    }
    let mut node = vec![Node { disc: UNSET, low: 0, parent: UNSET, next: 0 }; n];
    let mut stack: Vec<Vertex> = vec![0];
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();
    node[0].disc = 0;
    node[0].low = 0;
    let mut clock = 1u32;

    while let Some(&v) = stack.last() {
        let nv = node[v];
        if (nv.next as usize) < g.degree(v) {
            let w = g.neighbors(v)[nv.next as usize];
            node[v].next += 1;
            if w as u32 == nv.parent {
                continue;
            }
            let nw = node[w];
            if nw.disc == UNSET {
                edge_stack.push((v, w));
                node[w] = Node { disc: clock, low: clock, parent: v as u32, next: 0 };
                clock += 1;
                stack.push(w);
            } else if nw.disc < nv.disc {
                edge_stack.push((v, w));
                node[v].low = nv.low.min(nw.disc);
            }
            continue;
        }
        stack.pop();
        if nv.parent == UNSET {
            continue;
        }
        let p = nv.parent as usize;
        node[p].low = node[p].low.min(nv.low);
        if nv.low >= node[p].disc {
            let mut edges = Vec::new();
            while let Some(e) = edge_stack.pop() {
                edges.push((e.0.min(e.1), e.0.max(e.1)));
                if e == (p, v) {
                    break;
                }
            }
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            blocks.push(Block { vertices, edges });
        }
    }
    if clock as usize != n {
        return Err(Error::Disconnected);
    }

    blocks.sort_by_cached_key(|b| (b.vertices[0], b.vertices.get(1).copied().unwrap_or(0)));
    let mut count = vec![0usize; n];
    for block in &blocks {
        for &v in &block.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| count[v] >= 2).collect();
    let mut block_tree = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        for &v in &block.vertices {
            if count[v] >= 2 {
                block_tree.push((b, v));
            }
        }
    }
    Ok(BlockDecomposition { blocks, cut_vertices, block_tree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_smallest_graph() {
        let g = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = parse_edge_list("# header follows\n3 2\n\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g, families::path(3));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_edge_list("3 1\n0 3").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 2, kind: ParseErrorKind::OutOfRange { vertex: 3, n: 3 } }
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0").unwrap_err(),
            Error::Parse { line: 3, kind: ParseErrorKind::DuplicateEdge { .. } }
        ));
        assert!(matches!(
            parse_edge_list("3 1\n2 2").unwrap_err(),
            Error::Parse { line: 2, kind: ParseErrorKind::SelfLoop { vertex: 2 } }
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x").unwrap_err(),
            Error::Parse { line: 2, kind: ParseErrorKind::Malformed }
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1").unwrap_err(),
            Error::Parse { kind: ParseErrorKind::EdgeCount { declared: 2, found: 1 }, .. }
        ));
        assert!(matches!(
            parse_edge_list("# nothing\n").unwrap_err(),
            Error::Parse { kind: ParseErrorKind::MissingHeader, .. }
        ));
    }

    #[test]
    fn petersen_from_text() {
        let text = families::petersen().to_edge_list();
        let g = parse_edge_list(&text).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&families::path(3), 0), vec![0, 1, 2]);
        assert_eq!(bfs_distances(&families::cycle(6), 0)[3], 3);
        let p = families::petersen();
        for s in 0..10 {
            assert_eq!(bfs_distances(&p, s).into_iter().max(), Some(2));
        }
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&split, 0)[2], UNREACHABLE);
    }

    #[test]
    fn component_examples() {
        assert_eq!(connected_components(&families::path(5)).len(), 1);
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let sizes: Vec<usize> = connected_components(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
        assert_eq!(connected_components(&Graph::empty(4)).len(), 4);
    }

    #[test]
    fn blocks_of_a_tree_are_edges() {
        let t = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let bd = block_decomposition(&t).unwrap();
        assert_eq!(bd.blocks.len(), 5);
        assert!(bd.blocks.iter().all(Block::is_bridge));
        assert_eq!(bd.cut_vertices, vec![1, 3, 4]);
    }

    #[test]
    fn blocks_of_two_joined_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.blocks.len(), 3);
        assert_eq!(bd.blocks.iter().filter(|b| b.is_cycle()).count(), 2);
        assert_eq!(bd.blocks.iter().filter(|b| b.is_bridge()).count(), 1);
        assert_eq!(bd.cut_vertices, vec![2, 3]);
    }

    #[test]
    fn cycle_is_one_block() {
        let bd = block_decomposition(&families::cycle(5)).unwrap();
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.cut_vertices.is_empty());
        assert_eq!(bd.blocks[0].cycle_order().unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn disconnected_input_rejected() {
        assert_eq!(block_decomposition(&Graph::empty(2)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn canonical_serialization() {
        let g = Graph::from_edges(4, &[(3, 1), (0, 2), (2, 1)]).unwrap();
        assert_eq!(g.to_edge_list(), "4 3\n0 2\n1 2\n1 3\n");
    }
}
