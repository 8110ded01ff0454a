//! Linear-time minimum geodesic transversal of a tree.
//!
//! The tree is smoothed, then repeatedly the end support vertex of smallest
//! index is taken into the solution and deleted together with its leaves,
//! re-smoothing around the deletion each time.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::{Solver, TransversalResult};

/// Which smoothing passes the tree solver performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeOptions {
    /// Smooth the whole tree before the first selection.
    pub initial_smoothing: bool,
    /// Smooth vertices that drop to degree 2 after each deletion.
    pub resmoothing: bool,
}

impl Default for TreeOptions {
    fn default() -> Self {
        TreeOptions { initial_smoothing: true, resmoothing: true }
    }
}

/// gt(t) with a witness in the original vertex indices.
pub fn gt_tree(t: &Graph) -> Result<TransversalResult> {
    gt_tree_with(t, TreeOptions::default())
}

/// Same loop with both smoothing passes switched off. Not optimal in general.
pub fn gt_tree_without_smoothing(t: &Graph) -> Result<TransversalResult> {
    gt_tree_with(t, TreeOptions { initial_smoothing: false, resmoothing: false })
}

pub fn gt_tree_with(t: &Graph, options: TreeOptions) -> Result<TransversalResult> {
    if t.n() == 0 || t.m() + 1 != t.n() {
        return Err(Error::NotATree);
    }
    let witness = match t.n() {
        1 => vec![0],
        _ => Peeler::new(t).ok_or(Error::NotATree)?.run(options),
    };
    Ok(TransversalResult::certify(t, witness, Solver::Tree))
}

/// Mutable tree stored as half-edges in CSR order. Smoothing a vertex splices
/// its two half-edges out by re-pairing their mates, so nothing is reallocated.
struct Peeler {
    off: Vec<u32>,
    owner: Vec<u32>,
    mate: Vec<u32>,
    /// Original label of each local vertex; the heap orders by it.
    orig: Vec<u32>,
    half_alive: Vec<bool>,
    queued: Vec<bool>,
    alive: Vec<bool>,
    deg: Vec<u32>,
    leafcnt: Vec<u32>,
    remaining: usize,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
}

impl Peeler {
    /// Lays the tree out in breadth-first order from vertex 0 so that parents
    /// and children sit close in memory. Returns `None` if `t` is disconnected.
    fn new(t: &Graph) -> Option<Self> {
        let n = t.n();
        let mut orig = Vec::with_capacity(n);
        let mut local = vec![u32::MAX; n];
        let mut off = Vec::with_capacity(n + 1);
        let mut mate = vec![0u32; 2 * t.m()];
        orig.push(0u32);
        local[0] = 0;
        off.push(0u32);
        let mut total = t.degree(0) as u32;
        let mut i = 0;
        while i < orig.len() {
            let v = orig[i] as usize;
            let mut h = off[i] + u32::from(i > 0);
            for &w in t.neighbors(v) {
                if local[w] != u32::MAX {
                    continue;
                }
                local[w] = orig.len() as u32;
                orig.push(w as u32);
                off.push(total);
                mate[h as usize] = total;
                mate[total as usize] = h;
                total += t.degree(w) as u32;
                h += 1;
            }
            i += 1;
        }
        if orig.len() < n {
            return None;
        }
        off.push(total);
        let deg: Vec<u32> = (0..n).map(|i| off[i + 1] - off[i]).collect();
        let mut owner = Vec::with_capacity(total as usize);
        for (i, &d) in deg.iter().enumerate() {
            owner.extend(std::iter::repeat(i as u32).take(d as usize));
        }
        let leafcnt = (0..n)
            .map(|i| {
                (off[i]..off[i + 1]).filter(|&h| deg[owner[mate[h as usize] as usize] as usize] == 1).count() as u32
            })
            .collect();
        Some(Peeler {
            off,
            owner,
            mate,
            orig,
            half_alive: vec![true; total as usize],
            queued: vec![false; n],
            alive: vec![true; n],
            deg,
            leafcnt,
            remaining: n,
            heap: BinaryHeap::new(),
        })
    }

    fn halves(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        (self.off[v] as usize..self.off[v + 1] as usize).filter(|&h| self.half_alive[h])
    }

    fn head(&self, h: usize) -> Vertex {
        self.owner[self.mate[h] as usize] as Vertex
    }

    /// Queues `v` if it has just become an end support vertex.
    fn push(&mut self, v: Vertex) {
        if !self.queued[v] && self.is_end_support(v) {
            self.queued[v] = true;
            self.heap.push(Reverse((self.orig[v], v as u32)));
        }
    }

    fn is_end_support(&self, v: Vertex) -> bool {
        self.alive[v] && self.leafcnt[v] >= 1 && self.leafcnt[v] + 1 >= self.deg[v]
    }

    fn smooth_vertex(&mut self, w: Vertex) {
        if !self.alive[w] || self.deg[w] != 2 {
            return;
        }
        let (h1, h2) = {
            let mut it = self.halves(w);
            (it.next().unwrap(), it.next().unwrap())
        };
        let (m1, m2) = (self.mate[h1], self.mate[h2]);
        let (a, b) = (self.head(h1), self.head(h2));
        self.mate[m1 as usize] = m2;
        self.mate[m2 as usize] = m1;
        self.half_alive[h1] = false;
        self.half_alive[h2] = false;
        self.alive[w] = false;
        self.remaining -= 1;
        if self.deg[b] == 1 {
            self.leafcnt[a] += 1;
        }
        if self.deg[a] == 1 {
            self.leafcnt[b] += 1;
        }
        self.push(a);
        self.push(b);
    }

    /// Removes `p` and its leaf neighbors; returns the vertex that lost `p`, if any.
    fn delete_with_leaves(&mut self, p: Vertex) -> Option<Vertex> {
        let mut touched = None;
        for h in self.off[p] as usize..self.off[p + 1] as usize {
            if !self.half_alive[h] {
                continue;
            }
            let q = self.head(h);
            self.half_alive[h] = false;
            self.half_alive[self.mate[h] as usize] = false;
            if self.deg[q] == 1 {
                self.alive[q] = false;
                self.remaining -= 1;
                continue;
            }
            self.deg[q] -= 1;
            if self.deg[q] == 1 {
                let z = self.head(self.halves(q).next().unwrap());
                self.leafcnt[z] += 1;
                self.push(z);
            }
            self.push(q);
            touched = Some(q);
        }
        self.alive[p] = false;
        self.remaining -= 1;
        touched
    }

    fn run(mut self, options: TreeOptions) -> Vec<Vertex> {
        let n = self.alive.len();
        if options.initial_smoothing {
            for v in 0..n {
                if self.deg[v] == 2 {
                    self.smooth_vertex(v);
                }
            }
        }
        for v in 0..n {
            self.push(v);
        }
        let mut chosen = Vec::new();
        while self.remaining > 0 {
            let p = loop {
                let Reverse((_, top)) = self.heap.pop().expect("a nonempty tree has an end support vertex");
                if self.is_end_support(top as Vertex) {
                    break top as Vertex;
                }
            };
            chosen.push(self.orig[p] as Vertex);
            if let Some(w) = self.delete_with_leaves(p) {
                if options.resmoothing && self.deg[w] == 2 {
                    self.smooth_vertex(w);
                }
            }
        }
        chosen
    }
}
