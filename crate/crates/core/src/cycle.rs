//! Cycles with pendant leaves: C_n(I) and its forced variant C_n(I, A).
//!
//! Positions are 1-based. In the realized graph, position i is vertex i − 1
//! and the leaf of the r-th support position (in increasing order) is vertex n + r.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::{Solver, TransversalResult};
use crate::ring::{self, Choice, Slot};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnIA {
    pub n: usize,
    /// Sorted support positions, each carrying one leaf.
    pub i_set: Vec<usize>,
    /// Sorted positions forced into the transversal.
    pub a_set: Vec<usize>,
}

impl CnIA {
    pub fn new(n: usize, mut i_set: Vec<usize>, mut a_set: Vec<usize>) -> Result<Self> {
        i_set.sort_unstable();
        i_set.dedup();
        a_set.sort_unstable();
        a_set.dedup();
        let inst = CnIA { n, i_set, a_set };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::Invalid(format!("cycle length {} is below 3", self.n)));
        }
        for (name, set) in [("leaf", &self.i_set), ("forced", &self.a_set)] {
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > self.n) {
                return Err(Error::Invalid(format!("{name} position {bad} outside 1..={}", self.n)));
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid(format!("{name} positions must be strictly increasing")));
            }
        }
        Ok(())
    }

    /// The cycle with its leaves as a concrete graph.
    pub fn realize(&self) -> Graph {
        let n = self.n;
        let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for (rank, &i) in self.i_set.iter().enumerate() {
            edges.push((i - 1, n + rank));
        }
        Graph::from_edges(n + self.i_set.len(), &edges).expect("cycle with leaves is simple")
    }

    /// Vertex of position `i` in [`CnIA::realize`].
    pub fn vertex_of(&self, i: usize) -> Vertex {
        i - 1
    }

    /// Leaf vertex hanging at position `i`, if any.
    pub fn leaf_of(&self, i: usize) -> Option<Vertex> {
        self.i_set.binary_search(&i).ok().map(|rank| self.n + rank)
    }

    fn slots(&self) -> Vec<Slot> {
        (1..=self.n)
            .map(|i| {
                if self.a_set.binary_search(&i).is_ok() {
                    Slot::forced()
                } else if self.i_set.binary_search(&i).is_ok() {
                    Slot::with_leaf()
                } else {
                    Slot::bare()
                }
            })
            .collect()
    }
}

/// Positive cyclic arc length from position `from` forward to `to`, in (0, n].
fn arc(n: usize, from: usize, to: usize) -> usize {
    let d = (to + n - from) % n;
    if d == 0 {
        n
    } else {
        d
    }
}

/// Positions j (1-based into I) whose neighbors i_{j−1}, i_{j+1} span an arc longer than ⌊n/2⌋ + 1.
pub fn lonely_indices(inst: &CnIA) -> Result<Vec<usize>> {
    let k = inst.i_set.len();
    if k == 0 {
        return Err(Error::Invalid("lonely indices need at least one support position".into()));
    }
    let i = &inst.i_set;
    let limit = inst.n / 2 + 1;
    Ok((0..k)
        .filter(|&j| arc(inst.n, i[(j + k - 1) % k], i[(j + 1) % k]) > limit)
        .map(|j| j + 1)
        .collect())
}

/// gt(C_n(I)) by the closed formula.
pub fn gt_cycle_leaves_value(n: usize, i_set: &[usize]) -> Result<usize> {
    let inst = CnIA::new(n, i_set.to_vec(), Vec::new())?;
    let k = inst.i_set.len();
    if k <= 3 {
        return Ok(2);
    }
    if k % 2 == 1 {
        return Ok((k + 1) / 2);
    }
    let lonely = lonely_indices(&inst)?;
    let odd = lonely.iter().any(|j| j % 2 == 1);
    let even = lonely.iter().any(|j| j % 2 == 0);
    Ok(if odd && even { k / 2 + 1 } else { k / 2 })
}

/// Segment-by-segment construction between consecutive forced positions.
///
/// Returns cycle positions (1-based). `a_set` must be nonempty. Indices past
/// the end of a segment are clamped to the segment's closing forced position.
pub fn forced_segment_construction(inst: &CnIA) -> Vec<usize> {
    let n = inst.n;
    let h = n / 2;
    let a = &inst.a_set;
    assert!(!a.is_empty(), "the segment construction needs a forced position");
    let t = a.len();
    let mut chosen: Vec<usize> = a.clone();
    for idx in 0..t {
        let start = a[idx];
        let len = arc(n, start, a[(idx + 1) % t]);
        // Offsets from `start`: j_0 = 0, the supports strictly inside, j_{k+1} = len.
        let mut offs = vec![0usize];
        let mut inner: Vec<usize> = inst
            .i_set
            .iter()
            .map(|&i| (i + n - start) % n)
            .filter(|&o| o > 0 && o < len)
            .collect();
        inner.sort_unstable();
        let k = inner.len();
        offs.extend(inner);
        offs.push(len);
        let j = |x: usize| offs[x.min(k + 1)];
        let mut add = |off: usize| chosen.push((start - 1 + off) % n + 1);
        if k % 2 == 1 {
            let bad = (1..=(k + 1) / 2).find(|&l| j(2 * l) - j(2 * l - 2) > h + 1);
            for l in 1..=(k - 1) / 2 {
                add(j(2 * l));
            }
            if let Some(m) = bad {
                add(j(2 * m - 2) + h + 1);
            }
        } else {
            let mut l = 0;
            while l <= k {
                if j(l + 2) - j(l) <= h + 1 {
                    add(j(l + 2));
                    l += 2;
                } else {
                    add(j(l) + h + 1);
                    if j(l + 1) - j(l) <= h + 1 {
                        add(j(l + 3));
                        l += 3;
                    } else {
                        add(j(l + 2));
                        l += 2;
                    }
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen.dedup();
    chosen
}

/// Exact minimum transversal of C_n(I) containing A, as realized-graph vertices.
pub fn exact_cn_ia(inst: &CnIA) -> Result<Vec<Vertex>> {
    inst.validate()?;
    let sol = ring::solve_free(&inst.slots()).expect("taking every cycle vertex is feasible");
    Ok(inst
        .slots()
        .iter()
        .zip(1..)
        .filter_map(|(_, i)| match sol.choices[i - 1] {
            Choice::In => Some(inst.vertex_of(i)),
            Choice::Closed => inst.leaf_of(i),
            _ => None,
        })
        .collect())
}

/// Minimum geodesic transversal of C_n(I) that contains the forced positions.
///
/// Without forced positions, each cycle position in turn (supports first) is
/// tried as a single forced vertex until the closed-formula value is reached;
/// some minimum transversal always contains a cycle vertex.
pub fn solve_cn_ia(inst: &CnIA) -> Result<TransversalResult> {
    inst.validate()?;
    let positions = if inst.a_set.is_empty() {
        let target = gt_cycle_leaves_value(inst.n, &inst.i_set)?;
        let others = (1..=inst.n).filter(|i| inst.i_set.binary_search(i).is_err());
        let mut best: Option<Vec<usize>> = None;
        for c in inst.i_set.iter().copied().chain(others) {
            let trial = CnIA { n: inst.n, i_set: inst.i_set.clone(), a_set: vec![c] };
            let found = forced_segment_construction(&trial);
            if best.as_ref().map_or(true, |b| found.len() < b.len()) {
                best = Some(found);
            }
            if best.as_ref().unwrap().len() <= target {
                break;
            }
        }
        best.expect("a cycle has at least three positions")
    } else {
        forced_segment_construction(inst)
    };
    let witness = positions.into_iter().map(|i| inst.vertex_of(i)).collect();
    Ok(TransversalResult::certify(&inst.realize(), witness, Solver::Cycle))
}
