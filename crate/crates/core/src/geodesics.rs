//! Maximal geodesics, transversal checking and geodesic centrality.
//!
//! A u–v geodesic is maximal exactly when neither endpoint can be pushed
//! farther from the other one, so maximality is a property of the endpoint
//! pair and every geodesic between a maximal pair is maximal.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, Vertex, UNREACHABLE};

/// Default ceiling on the number of maximal geodesics an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Geodesic {
    pub vertices: Vec<Vertex>,
}

impl Geodesic {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

/// Flattened all-pairs distance table.
pub(crate) struct Distances {
    n: usize,
    d: Vec<u32>,
}

impl Distances {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        queue.push(w);
                    }
                }
            }
        }
        Distances { n, d }
    }

    #[inline]
    pub(crate) fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    /// No neighbor of `v` is farther from `u` than `v` is.
    #[inline]
    pub(crate) fn is_peak(&self, g: &Graph, u: Vertex, v: Vertex) -> bool {
        let duv = self.get(u, v);
        g.neighbors(v).iter().all(|&w| self.get(u, w) <= duv)
    }

    pub(crate) fn is_maximal(&self, g: &Graph, u: Vertex, v: Vertex) -> bool {
        self.get(u, v) != u32::MAX && self.is_peak(g, u, v) && self.is_peak(g, v, u)
    }
}

/// Number of shortest s–t paths and, per vertex, how many of them pass through it.
pub fn geodesic_counts(g: &Graph, s: Vertex, t: Vertex) -> Result<(BigUint, Vec<BigUint>)> {
    let ds = bfs_distances(g, s);
    if ds[t] == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    let dt = bfs_distances(g, t);
    let from_s = path_counts(g, &ds);
    let from_t = path_counts(g, &dt);
    let through = (0..g.n())
        .map(|v| {
            if ds[v] != UNREACHABLE && dt[v] != UNREACHABLE && ds[v] + dt[v] == ds[t] {
                &from_s[v] * &from_t[v]
            } else {
                BigUint::zero()
            }
        })
        .collect();
    Ok((from_s[t].clone(), through))
}

/// σ(source, v) for every v, given BFS distances from the source.
fn path_counts(g: &Graph, dist: &[usize]) -> Vec<BigUint> {
    let mut order: Vec<Vertex> = (0..g.n()).filter(|&v| dist[v] != UNREACHABLE).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut sigma = vec![BigUint::zero(); g.n()];
    for &v in &order {
        if dist[v] == 0 {
            sigma[v] = BigUint::one();
            continue;
        }
        let mut total = BigUint::zero();
        for &w in g.neighbors(v) {
            if dist[w] + 1 == dist[v] {
                total += &sigma[w];
            }
        }
        sigma[v] = total;
    }
    sigma
}

/// Whether every (equivalently, some) u–v geodesic is maximal.
pub fn is_maximal_pair(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let du = bfs_distances(g, u);
    let dv = bfs_distances(g, v);
    let d = du[v];
    if d == UNREACHABLE {
        return false;
    }
    g.neighbors(u).iter().all(|&w| dv[w] <= d) && g.neighbors(v).iter().all(|&w| du[w] <= d)
}

/// Calls `visit` with every u–v geodesic (as a vertex slice), in lexicographic order.
/// Stops early when `visit` returns false; returns whether it ran to completion.
pub(crate) fn for_each_geodesic(
    g: &Graph,
    dist: &Distances,
    u: Vertex,
    v: Vertex,
    mut visit: impl FnMut(&[Vertex]) -> bool,
) -> bool {
    let total = dist.get(u, v) as usize;
    let mut path = vec![u];
    let mut cursor = vec![0usize];
    loop {
        let cur = *path.last().unwrap();
        if cur == v {
            if !visit(&path) {
                return false;
            }
            path.pop();
            cursor.pop();
            if path.is_empty() {
                return true;
            }
            continue;
        }
        let step = path.len();
        let nbrs = g.neighbors(cur);
        let idx = cursor.last_mut().unwrap();
        let mut advanced = false;
        while *idx < nbrs.len() {
            let w = nbrs[*idx];
            *idx += 1;
            if dist.get(u, w) as usize == step && dist.get(w, v) as usize + step == total {
                path.push(w);
                cursor.push(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            path.pop();
            cursor.pop();
            if path.is_empty() {
                return true;
            }
        }
    }
}

/// All maximal geodesics, smaller endpoint first, ordered by endpoint pair and
/// then lexicographically. A single-vertex graph has the one trivial geodesic.
pub fn enumerate_maximal_geodesics(g: &Graph, cap: usize) -> Result<Vec<Geodesic>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(vec![Geodesic { vertices: vec![0] }]);
    }
    let dist = Distances::new(g);
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !dist.is_maximal(g, u, v) {
                continue;
            }
            let complete = for_each_geodesic(g, &dist, u, v, |p| {
                if out.len() == cap {
                    return false;
                }
                out.push(Geodesic { vertices: p.to_vec() });
                true
            });
            if !complete {
                return Err(Error::CapExceeded { cap });
            }
        }
    }
    Ok(out)
}

/// Whether `s` meets every maximal geodesic of `g`.
///
/// For each source a dynamic program over the shortest-path DAG tracks
/// whether some geodesic from it avoids `s`, so no path is ever listed. Vertices that are alone in their
/// component must be in `s`.
pub fn is_geodesic_transversal(g: &Graph, s: &[Vertex]) -> bool {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        if v < n {
            in_s[v] = true;
        }
    }
    if (0..n).any(|v| g.degree(v) == 0 && !in_s[v]) {
        return false;
    }
    let dist = Distances::new(g);
    let mut avoid = vec![false; n];
    let mut order: Vec<Vertex> = (0..n).collect();
    for u in 0..n {
        if in_s[u] || g.degree(u) == 0 {
            continue;
        }
        order.sort_by_key(|&v| dist.get(u, v));
        for &x in &order {
            let dx = dist.get(u, x);
            avoid[x] = if dx == 0 {
                true
            } else if dx == u32::MAX || in_s[x] {
                false
            } else {
                g.neighbors(x).iter().any(|&p| dist.get(u, p) + 1 == dx && avoid[p])
            };
        }
        for v in u + 1..n {
            if avoid[v] && dist.is_maximal(g, u, v) {
                return false;
            }
        }
    }
    true
}

/// Per-vertex geodesic centrality values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityProfile {
    /// Σ over unordered pairs {s,t} not containing v of σ_st(v)/σ_st.
    pub betweenness: Vec<BigRational>,
    /// Σ over the same pairs of σ_st(v).
    pub closeness: Vec<BigUint>,
    /// Number of maximal geodesics containing v, endpoints included.
    pub geo_load: Vec<u64>,
}

impl CentralityProfile {
    /// CSV with header `vertex,betweenness_num,betweenness_den,closeness,geo_load`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,betweenness_num,betweenness_den,closeness,geo_load\n");
        for v in 0..self.geo_load.len() {
            let b = &self.betweenness[v];
            let _ = writeln!(
                out,
                "{v},{},{},{},{}",
                b.numer(),
                b.denom(),
                self.closeness[v],
                self.geo_load[v]
            );
        }
        out
    }
}

/// Betweenness, closeness and geodesic load of every vertex.
///
/// All three come from products of path counts on the shortest-path DAG;
/// `cap` bounds the total number of maximal geodesics accounted for by geo_load.
pub fn centrality_profile(g: &Graph, cap: usize) -> Result<CentralityProfile> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(CentralityProfile {
            betweenness: vec![BigRational::zero()],
            closeness: vec![BigUint::zero()],
            geo_load: vec![1],
        });
    }
    let dist = Distances::new(g);
    let sigma: Vec<Vec<BigUint>> = (0..n)
        .map(|s| {
            let d: Vec<usize> = (0..n).map(|v| dist.get(s, v) as usize).collect();
            path_counts(g, &d)
        })
        .collect();

    let mut betweenness = vec![BigRational::zero(); n];
    let mut closeness = vec![BigUint::zero(); n];
    let mut load = vec![BigUint::zero(); n];
    let mut total_maximal = BigUint::zero();
    let cap_big = BigUint::from(cap);

    for s in 0..n {
        for t in s + 1..n {
            let dst = dist.get(s, t);
            let sst = &sigma[s][t];
            let maximal = dist.is_maximal(g, s, t);
            if maximal {
                total_maximal += sst;
                if total_maximal > cap_big {
                    return Err(Error::CapExceeded { cap });
                }
                load[s] += sst;
                load[t] += sst;
            }
            for v in 0..n {
                if v == s || v == t || dist.get(s, v) + dist.get(v, t) != dst {
                    continue;
                }
                let through = &sigma[s][v] * &sigma[t][v];
                betweenness[v] += BigRational::new(through.clone().into(), sst.clone().into());
                if maximal {
                    load[v] += &through;
                }
                closeness[v] += through;
            }
        }
    }
    let geo_load = load.iter().map(|x| x.to_u64().expect("bounded by cap")).collect();
    Ok(CentralityProfile { betweenness, closeness, geo_load })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Every simple path, used as an independent reference.
    fn all_paths(g: &Graph) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        fn extend(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            out.push(path.clone());
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if !path.contains(&w) {
                    path.push(w);
                    extend(g, path, out);
                    path.pop();
                }
            }
        }
        for s in 0..g.n() {
            extend(g, &mut vec![s], &mut out);
        }
        out
    }

    fn literal_maximal(g: &Graph) -> Vec<Vec<Vertex>> {
        let dist = Distances::new(g);
        let geos: Vec<Vec<Vertex>> = all_paths(g)
            .into_iter()
            .filter(|p| dist.get(p[0], *p.last().unwrap()) as usize == p.len() - 1)
            .collect();
        let is_sub = |a: &[Vertex], b: &[Vertex]| {
            b.len() > a.len()
                && b.windows(a.len()).any(|w| w == a || w.iter().rev().eq(a.iter()))
        };
        let mut max: Vec<Vec<Vertex>> = geos
            .iter()
            .filter(|p| !geos.iter().any(|q| is_sub(p, q)))
            .map(|p| if p[0] <= *p.last().unwrap() { p.clone() } else { p.iter().rev().copied().collect() })
            .collect();
        max.sort();
        max.dedup();
        max
    }

    #[test]
    fn counts_examples() {
        let (s, _) = geodesic_counts(&families::cycle(4), 0, 2).unwrap();
        assert_eq!(s, BigUint::from(2u32));
        let (s, through) = geodesic_counts(&families::complete_bipartite(2, 3), 0, 1).unwrap();
        assert_eq!(s, BigUint::from(3u32));
        assert_eq!(through[0], BigUint::from(3u32));
        assert_eq!(through[2], BigUint::one());
        let p = families::petersen();
        for u in 0..10 {
            for v in 0..10 {
                if u != v && !p.has_edge(u, v) {
                    assert_eq!(geodesic_counts(&p, u, v).unwrap().0, BigUint::one());
                }
            }
        }
    }

    #[test]
    fn maximal_pair_examples() {
        let c5 = families::cycle(5);
        assert!(is_maximal_pair(&c5, 0, 2));
        assert!(!is_maximal_pair(&c5, 0, 1));
        assert!(is_maximal_pair(&families::path(4), 0, 3));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_maximal_geodesics(&families::path(6), DEFAULT_CAP).unwrap().len(), 1);
        let c5 = enumerate_maximal_geodesics(&families::cycle(5), DEFAULT_CAP).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|p| p.length() == 2));
        assert_eq!(
            enumerate_maximal_geodesics(&families::petersen(), DEFAULT_CAP).unwrap().len(),
            30
        );
        assert_eq!(
            enumerate_maximal_geodesics(&families::path(1), DEFAULT_CAP).unwrap(),
            vec![Geodesic { vertices: vec![0] }]
        );
        assert_eq!(
            enumerate_maximal_geodesics(&families::petersen(), 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
    }

    #[test]
    fn enumeration_matches_literal_definition() {
        let graphs = [
            families::cycle(5),
            families::cycle(6),
            families::petersen(),
            families::complete_bipartite(2, 3),
            families::spider(&[1, 2, 3]),
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap(),
        ];
        for g in &graphs {
            let ours: Vec<Vec<Vertex>> = enumerate_maximal_geodesics(g, DEFAULT_CAP)
                .unwrap()
                .into_iter()
                .map(|p| p.vertices)
                .collect();
            let mut sorted = ours.clone();
            sorted.sort();
            assert_eq!(sorted, literal_maximal(g));
        }
    }

    #[test]
    fn transversal_examples() {
        assert!(is_geodesic_transversal(&families::petersen(), &[1, 3, 5, 9]));
        assert!(!is_geodesic_transversal(&families::path(2), &[]));
        assert!(!is_geodesic_transversal(&families::cycle(5), &[0, 1]));
        assert!(is_geodesic_transversal(&families::cycle(5), &[0, 2]));
        assert!(is_geodesic_transversal(&families::path(1), &[0]));
        assert!(!is_geodesic_transversal(&families::path(1), &[]));
    }

    #[test]
    fn centrality_examples() {
        let c5 = centrality_profile(&families::cycle(5), DEFAULT_CAP).unwrap();
        assert!(c5.geo_load.iter().all(|&x| x == 3));
        let star = centrality_profile(&families::star(3), DEFAULT_CAP).unwrap();
        assert_eq!(star.geo_load, vec![3, 2, 2, 2]);
        let p3 = centrality_profile(&families::path(3), DEFAULT_CAP).unwrap();
        assert_eq!(p3.betweenness[1], BigRational::one());
        assert_eq!(p3.closeness[1], BigUint::one());
        assert!(p3.to_csv().starts_with("vertex,betweenness_num,betweenness_den,closeness,geo_load\n0,0,1,0,1\n1,1,1,1,1\n"));
    }
}
