//! Structural predicates and transformations: smoothing, subdivided stars,
//! end support vertices, spread cacti, heavy vertices, pendant territories
//! and boundary cycles.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, connected_components, BlockDecomposition, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingResult {
    pub graph: Graph,
    /// Original index of each surviving vertex.
    pub origin_map: Vec<Vertex>,
}

/// Smooths every degree-2 vertex.
///
/// Fails instead of creating a parallel edge, which happens exactly when a
/// degree-2 vertex sits on a triangle (so cycles are never reduced below C_3).
pub fn smooth(g: &Graph) -> Result<SmoothingResult> {
    let n = g.n();
    let mut adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<Vertex> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    while let Some(w) = queue.pop() {
        if !alive[w] || adj[w].len() != 2 {
            continue;
        }
        let (a, b) = (adj[w][0], adj[w][1]);
        if adj[a].contains(&b) {
            return Err(Error::SmoothingCollision { vertex: w });
        }
        for (x, y) in [(a, b), (b, a)] {
            let slot = adj[x].iter().position(|&z| z == w).unwrap();
            adj[x][slot] = y;
        }
        adj[w].clear();
        alive[w] = false;
    }
    let (graph, origin_map) = subgraph_from_lists(&adj, &alive);
    Ok(SmoothingResult { graph, origin_map })
}

/// Relabels the alive vertices of a mutable adjacency structure.
fn subgraph_from_lists(adj: &[Vec<Vertex>], alive: &[bool]) -> (Graph, Vec<Vertex>) {
    let origin: Vec<Vertex> = (0..adj.len()).filter(|&v| alive[v]).collect();
    let mut relabel = vec![usize::MAX; adj.len()];
    for (new, &old) in origin.iter().enumerate() {
        relabel[old] = new;
    }
    let lists = origin
        .iter()
        .map(|&old| adj[old].iter().filter(|&&w| alive[w]).map(|&w| relabel[w]).collect())
        .collect();
    (Graph::from_adjacency(lists), origin)
}

/// A tree with at most one vertex of degree three or more.
pub fn is_subdivided_star(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).filter(|&v| g.degree(v) >= 3).count() <= 1
}

pub fn leaves(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

fn leaf_neighbors(g: &Graph, v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&w| g.degree(w) == 1).count()
}

/// Support vertices adjacent to at least deg − 1 leaves, ascending.
pub fn end_support_vertices(t: &Graph) -> Result<Vec<Vertex>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::Invalid("end support vertices need a tree on at least 2 vertices".into()));
    }
    Ok((0..t.n())
        .filter(|&v| {
            let l = leaf_neighbors(t, v);
            l >= 1 && l + 1 >= t.degree(v)
        })
        .collect())
}

/// Connected, every block an edge or a cycle, no vertex on two cycles.
pub fn is_spread_cactus(g: &Graph) -> bool {
    block_decomposition(g).is_ok_and(|bd| blocks_are_spread(&bd, g.n()))
}

pub(crate) fn blocks_are_spread(bd: &BlockDecomposition, n: usize) -> bool {
    let mut on_cycle = vec![false; n];
    for block in &bd.blocks {
        if block.edges.len() <= 1 {
            continue;
        }
        if !block.is_cycle() {
            return false;
        }
        for &v in &block.vertices {
            if on_cycle[v] {
                return false;
            }
            on_cycle[v] = true;
        }
    }
    true
}

/// Number of independent cycles, m − n + (number of components).
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.m() + connected_components(g).len() - g.n()
}

/// Heavy vertices (degree ≥ 3) and the boundary heavy ones among them: those
/// whose removal leaves at most one component that is not a path.
///
/// Quadratic: one component scan per heavy vertex.
pub fn heavy_classification(g: &Graph) -> (Vec<Vertex>, Vec<Vertex>) {
    let heavy: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let boundary = heavy
        .iter()
        .copied()
        .filter(|&v| non_path_components_without(g, v) <= 1)
        .collect();
    (heavy, boundary)
}

/// Counts the components of G − v that are not paths.
fn non_path_components_without(g: &Graph, v: Vertex) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let (mut verts, mut degree_sum, mut max_deg) = (0usize, 0usize, 0usize);
        while let Some(u) = stack.pop() {
            verts += 1;
            let mut d = 0;
            for &w in g.neighbors(u) {
                if w == v {
                    continue;
                }
                d += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
            degree_sum += d;
            max_deg = max_deg.max(d);
        }
        if max_deg > 2 || degree_sum / 2 + 1 != verts {
            count += 1;
        }
    }
    count
}

/// P^v: v plus every vertex of degree ≤ 2 reachable from v without passing
/// through another heavy vertex. Sorted.
pub fn pendant_territory(g: &Graph, v: Vertex) -> Result<Vec<Vertex>> {
    if g.degree(v) < 3 {
        return Err(Error::NotHeavy { vertex: v });
    }
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut out = vec![v];
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] && g.degree(w) <= 2 {
                seen[w] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A cycle whose vertices, apart from at most one exit vertex, are leaf
/// supports, forced, or have no neighbor off the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCycle {
    /// v_1..v_n in cyclic order.
    pub cycle_vertices: Vec<Vertex>,
    /// 1-based positions of cycle vertices adjacent to a leaf.
    pub i_set: Vec<usize>,
    /// 1-based positions of forced cycle vertices.
    pub a_set: Vec<usize>,
    pub exit_vertex: Option<Vertex>,
}

/// The boundary cycle whose smallest vertex is minimal, if any.
pub fn find_boundary_cycle(g: &Graph, forced: &[Vertex]) -> Result<Option<BoundaryCycle>> {
    let bd = block_decomposition(g)?;
    let mut cycles: Vec<Vec<Vertex>> = bd.blocks.iter().filter_map(|b| b.cycle_order()).collect();
    if cycles.is_empty() {
        return Err(Error::Acyclic);
    }
    cycles.sort_by_key(|c| c[0]);
    let mut is_forced = vec![false; g.n()];
    for &v in forced {
        is_forced[v] = true;
    }
    let mut on_cycle = vec![false; g.n()];
    for cycle in cycles {
        for &v in &cycle {
            on_cycle[v] = true;
        }
        let mut i_set = Vec::new();
        let mut a_set = Vec::new();
        let mut exits = Vec::new();
        for (idx, &v) in cycle.iter().enumerate() {
            let support = g.neighbors(v).iter().any(|&w| g.degree(w) == 1);
            if support {
                i_set.push(idx + 1);
            }
            if is_forced[v] {
                a_set.push(idx + 1);
            }
            if !support && !is_forced[v] && g.neighbors(v).iter().any(|&w| !on_cycle[w]) {
                exits.push(v);
            }
        }
        for &v in &cycle {
            on_cycle[v] = false;
        }
        if exits.len() <= 1 {
            return Ok(Some(BoundaryCycle {
                cycle_vertices: cycle,
                i_set,
                a_set,
                exit_vertex: exits.first().copied(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families;
    use crate::graph::parse_edge_list;

    /// Canonical AHU string of a tree rooted at `root`.
    fn ahu(g: &Graph, root: Vertex, parent: Option<Vertex>) -> String {
        let mut kids: Vec<String> = g
            .neighbors(root)
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| ahu(g, w, Some(root)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    pub(crate) fn trees_isomorphic(a: &Graph, b: &Graph) -> bool {
        if a.n() != b.n() || !a.is_tree() || !b.is_tree() {
            return false;
        }
        let ca = ahu(a, 0, None);
        (0..b.n()).any(|r| ahu(b, r, None) == ca)
    }

    fn data(name: &str) -> Graph {
        let path = format!("{}/tests/data/{name}.edges", env!("CARGO_MANIFEST_DIR"));
        parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    #[test]
    fn smoothing_examples() {
        let sm = smooth(&data("tree_t30")).unwrap();
        assert!(trees_isomorphic(&sm.graph, &data("tree_t30_smoothed")));
        assert_eq!(smooth(&families::path(5)).unwrap().graph, families::path(2));
        let g = smooth(&data("unicyclic_g13")).unwrap();
        assert_eq!(g.graph.n(), 9);
        assert!(matches!(smooth(&families::cycle(5)), Err(Error::SmoothingCollision { .. })));
        assert_eq!(smooth(&families::path(1)).unwrap().graph.n(), 1);
    }

    #[test]
    fn smoothing_is_idempotent_on_t30() {
        let once = smooth(&data("tree_t30")).unwrap().graph;
        assert_eq!(smooth(&once).unwrap().graph, once);
    }

    #[test]
    fn subdivided_star_examples() {
        assert!(is_subdivided_star(&families::path(9)));
        assert!(is_subdivided_star(&families::spider(&[2, 2, 2, 2])));
        assert!(!is_subdivided_star(&families::cycle(4)));
        assert!(is_subdivided_star(&families::path(1)));
    }

    #[test]
    fn end_support_examples() {
        assert_eq!(end_support_vertices(&families::star(3)).unwrap(), vec![0]);
        let double = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(end_support_vertices(&double).unwrap(), vec![0, 1]);
        assert_eq!(end_support_vertices(&families::path(2)).unwrap(), vec![0, 1]);
        assert_eq!(end_support_vertices(&families::cycle(4)).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn spread_cactus_examples() {
        assert!(is_spread_cactus(&data("tree_t21")));
        let butterfly = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!is_spread_cactus(&butterfly));
        let joined = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        assert!(is_spread_cactus(&joined));
        assert!(!is_spread_cactus(&families::complete(4)));
    }

    #[test]
    fn heavy_examples() {
        let spider = families::spider(&[2, 2, 2]);
        assert_eq!(heavy_classification(&spider), (vec![0], vec![0]));
        assert_eq!(heavy_classification(&families::path(5)), (vec![], vec![]));
        // Outer branch vertices 4, 8, 13, 18 (1-based) each carry two leaves
        // and one long side; 6 has three non-path sides.
        let (heavy, boundary) = heavy_classification(&data("tree_t21"));
        assert_eq!(heavy, vec![3, 5, 7, 12, 17]);
        assert_eq!(boundary, vec![3, 7, 12, 17]);
    }

    #[test]
    fn territory_examples() {
        let spider = families::spider(&[2, 2, 2]);
        assert_eq!(pendant_territory(&spider, 0).unwrap().len(), 7);
        assert_eq!(pendant_territory(&families::star(3), 0).unwrap(), vec![0, 1, 2, 3]);
        let stars = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)])
            .unwrap();
        assert_eq!(pendant_territory(&stars, 0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(pendant_territory(&families::path(3), 1).unwrap_err(), Error::NotHeavy { vertex: 1 });
    }

    #[test]
    fn boundary_cycle_examples() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let bc = find_boundary_cycle(&paw, &[]).unwrap().unwrap();
        assert_eq!(bc.cycle_vertices, vec![0, 1, 2]);
        assert_eq!((bc.i_set, bc.a_set, bc.exit_vertex), (vec![1], vec![], None));

        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)],
        )
        .unwrap();
        let bc = find_boundary_cycle(&g, &[]).unwrap().unwrap();
        assert_eq!(bc.cycle_vertices, vec![0, 1, 2]);
        assert_eq!(bc.exit_vertex, Some(2));
        assert_eq!(find_boundary_cycle(&families::path(4), &[]).unwrap_err(), Error::Acyclic);
    }
}
