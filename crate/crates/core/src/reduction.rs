//! The gadget G → G′ relating 3-geodesic transversals of G to geodesic
//! transversals of G′.
//!
//! G′ adds a hub z adjacent to every vertex and two pendant vertices x, y on z.
//! They get indices n, n+1 and n+2 in the order x, y, z.

use crate::error::{Error, Result};
use crate::geodesics::is_geodesic_transversal;
use crate::graph::{Graph, Vertex};
use crate::oracle::is_three_geodesic_transversal;

/// Indices of x, y, z in `reduce_to_gt(g)`.
pub fn gadget_vertices(g: &Graph) -> (Vertex, Vertex, Vertex) {
    let n = g.n();
    (n, n + 1, n + 2)
}

pub fn reduce_to_gt(g: &Graph) -> Graph {
    let (x, y, z) = gadget_vertices(g);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.extend((0..g.n()).map(|i| (i, z)));
    edges.push((x, z));
    edges.push((y, z));
    Graph::from_edges(g.n() + 3, &edges).expect("gadget edges are simple")
}

/// Both sides of the equivalence for one subset `s` of V(g).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    /// `s` is a 3-geodesic transversal of g.
    pub forward: bool,
    /// `s ∪ {z}` is a geodesic transversal of G′.
    pub backward: bool,
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.forward == self.backward
    }
}

pub fn check_reduction_property(g: &Graph, s: &[Vertex]) -> Result<ReductionCheck> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Invalid(format!("vertex {v} out of range")));
    }
    let reduced = reduce_to_gt(g);
    let mut lifted = s.to_vec();
    lifted.push(gadget_vertices(g).2);
    Ok(ReductionCheck {
        forward: is_three_geodesic_transversal(g, s),
        backward: is_geodesic_transversal(&reduced, &lifted),
    })
}

/// Adjacent u, v with N[u] = N[v]. In G′ the edge uv is then a maximal
/// geodesic avoiding z that no 3-geodesic of g accounts for.
pub fn adjacent_closed_twins(g: &Graph) -> Option<(Vertex, Vertex)> {
    g.edges().find(|&(u, v)| {
        g.degree(u) == g.degree(v)
            && g.neighbors(u).iter().all(|&w| w == v || g.has_edge(v, w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::parse_edge_list;
    use crate::oracle::{gt_exact, three_gt_exact};

    fn data(name: &str) -> Graph {
        let path = format!("{}/tests/data/{name}.edges", env!("CARGO_MANIFEST_DIR"));
        parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    #[test]
    fn gadget_shape() {
        let k1 = reduce_to_gt(&families::path(1));
        assert_eq!((k1.n(), k1.m()), (4, 3));
        assert_eq!(k1.neighbors(3), &[0, 1, 2]);
        let p2 = reduce_to_gt(&families::path(2));
        assert_eq!((p2.n(), p2.m()), (5, 5));
        let g = data("reduction_g8");
        let r = reduce_to_gt(&g);
        assert_eq!((r.n(), r.m()), (11, g.m() + 10));
        assert_eq!(r.degree(10), 10);
        assert_eq!((r.degree(8), r.degree(9)), (1, 1));
    }

    #[test]
    fn path_examples() {
        let p3 = families::path(3);
        let both = |s: &[Vertex]| check_reduction_property(&p3, s).unwrap();
        assert_eq!(both(&[1]), ReductionCheck { forward: true, backward: true });
        assert_eq!(both(&[]), ReductionCheck { forward: false, backward: false });
        assert!(check_reduction_property(&p3, &[3]).is_err());
    }

    #[test]
    fn g8_with_optimal_three_transversal() {
        let g = data("reduction_g8");
        let s = three_gt_exact(&g).unwrap().witness;
        let check = check_reduction_property(&g, &s).unwrap();
        assert!(check.forward && check.backward);
        assert_eq!(gt_exact(&reduce_to_gt(&g)).unwrap().value, s.len() + 1);
    }

    #[test]
    fn twins_break_the_equivalence() {
        let k2 = families::path(2);
        assert_eq!(adjacent_closed_twins(&k2), Some((0, 1)));
        assert_eq!(
            check_reduction_property(&k2, &[]).unwrap(),
            ReductionCheck { forward: true, backward: false }
        );
        assert_eq!(gt_exact(&reduce_to_gt(&k2)).unwrap().value, 2);
        assert_eq!(adjacent_closed_twins(&families::cycle(5)), None);
    }

    #[test]
    fn trees_satisfy_both_identities() {
        for n in 3..=6 {
            for t in crate::generate::labeled_trees(n).unwrap() {
                let three = three_gt_exact(&t).unwrap();
                assert_eq!(gt_exact(&reduce_to_gt(&t)).unwrap().value, three.value + 1);
                assert!(check_reduction_property(&t, &three.witness).unwrap().holds());
                for mask in 0u32..1 << n {
                    let s: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    assert!(check_reduction_property(&t, &s).unwrap().holds());
                }
            }
        }
    }
}
