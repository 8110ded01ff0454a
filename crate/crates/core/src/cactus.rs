//! Minimum geodesic transversals of spread cacti.
//!
//! The block-cut tree is rooted and every vertex v gets three costs for the
//! part of the graph below it: v in the transversal (`In`), v outside with no
//! hanging part still open towards v (`Closed`), and v outside with exactly one
//! open hanging part (`Open`). A vertex with nothing below it may also stay
//! outside as a bare endpoint (`Plain`). Bridges combine these costs directly;
//! cycles go through the ring program in [`crate::ring`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, BlockDecomposition, Graph, Vertex};
use crate::oracle::{Solver, TransversalResult};
use crate::ring::{self, Choice, RingSolution, Slot, INF};
use crate::structure::{blocks_are_spread, cyclomatic_number};

/// gt of a spread cactus with a witness.
pub fn gt_spread_cactus(g: &Graph) -> Result<TransversalResult> {
    let bd = block_decomposition(g)?;
    if !blocks_are_spread(&bd, g.n()) {
        return Err(Error::NotSpreadCactus);
    }
    if g.m() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2) {
        return Ok(TransversalResult::certify(g, vec![0], Solver::Cactus));
    }
    let witness = match bd.cut_vertices.first() {
        None => solve_single_cycle(&bd),
        Some(&r) => {
            let rooted = Rooted::at_vertex(g, &bd, r);
            let dp = Dp::compute(&rooted);
            let state = [Choice::In, Choice::Open, Choice::Closed]
                .into_iter()
                .min_by_key(|&c| dp.vertex_cost(r, c))
                .unwrap();
            dp.witness(&rooted, vec![Task::Vertex(r, state)])
        }
    };
    Ok(TransversalResult::certify(g, witness, Solver::Cactus))
}

/// gt of a connected graph with exactly one cycle, solved around the cycle.
pub fn gt_unicyclic(g: &Graph) -> Result<TransversalResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let found = cyclomatic_number(g);
    if found != 1 {
        return Err(Error::NotUnicyclic { found });
    }
    let bd = block_decomposition(g)?;
    let cycle = bd.blocks.iter().position(|b| b.is_cycle()).expect("one cycle block");
    let rooted = Rooted::at_block(g, &bd, cycle);
    let dp = Dp::compute(&rooted);
    let order = &rooted.rings[cycle];
    let slots: Vec<Slot> = order.iter().map(|&v| dp.slot(&rooted, v)).collect();
    let sol = ring::solve_free(&slots).expect("taking every cycle vertex is feasible");
    let tasks = order.iter().zip(&sol.choices).map(|(&v, &c)| Task::Vertex(v, c)).collect();
    let witness = dp.witness(&rooted, tasks);
    Ok(TransversalResult::certify(g, witness, Solver::Cactus))
}

/// Graphs with no cut vertex: a single edge or a single cycle.
fn solve_single_cycle(bd: &BlockDecomposition) -> Vec<Vertex> {
    let block = &bd.blocks[0];
    match block.cycle_order() {
        None => vec![block.vertices[0]],
        Some(order) => {
            let sol = ring::solve_free(&vec![Slot::bare(); order.len()]).unwrap();
            order.iter().zip(&sol.choices).filter(|(_, &c)| c == Choice::In).map(|(&v, _)| v).collect()
        }
    }
}

/// Block-cut tree rooted at a vertex or at a block.
struct Rooted<'a> {
    bd: &'a BlockDecomposition,
    /// Blocks in breadth-first order from the root.
    order: Vec<usize>,
    child_blocks: Vec<Vec<usize>>,
    /// Per cycle block, its vertices in cyclic order starting at the anchor
    /// (the parent vertex) and heading to the anchor's smaller cycle neighbor.
    rings: Vec<Vec<Vertex>>,
    /// Per block, the vertex it hangs from; `usize::MAX` for a root block.
    anchor: Vec<Vertex>,
}

impl<'a> Rooted<'a> {
    fn at_vertex(g: &Graph, bd: &'a BlockDecomposition, r: Vertex) -> Self {
        Self::build(g, bd, Err(r))
    }

    fn at_block(g: &Graph, bd: &'a BlockDecomposition, b: usize) -> Self {
        Self::build(g, bd, Ok(b))
    }

    fn build(g: &Graph, bd: &'a BlockDecomposition, root: std::result::Result<usize, Vertex>) -> Self {
        let n = g.n();
        let of = bd.blocks_of_vertices(n);
        let nb = bd.blocks.len();
        let mut seen = vec![false; nb];
        let mut anchor = vec![usize::MAX; nb];
        let mut child_blocks = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(nb);
        let mut queue = std::collections::VecDeque::new();
        match root {
            Err(r) => queue.push_back(r),
            Ok(b) => {
                seen[b] = true;
                order.push(b);
                queue.extend(bd.blocks[b].vertices.iter().copied());
            }
        }
        while let Some(v) = queue.pop_front() {
            for &b in &of[v] {
                if seen[b] {
                    continue;
                }
                seen[b] = true;
                anchor[b] = v;
                child_blocks[v].push(b);
                order.push(b);
                queue.extend(bd.blocks[b].vertices.iter().copied().filter(|&u| u != v));
            }
        }
        let rings = (0..nb)
            .map(|b| match bd.blocks[b].cycle_order() {
                None => Vec::new(),
                Some(cyc) if anchor[b] == usize::MAX => cyc,
                Some(cyc) => ring_from(&cyc, anchor[b]),
            })
            .collect();
        Rooted { bd, order, child_blocks, rings, anchor }
    }

    fn bridge_child(&self, b: usize) -> Vertex {
        let block = &self.bd.blocks[b];
        if block.vertices[0] == self.anchor[b] {
            block.vertices[1]
        } else {
            block.vertices[0]
        }
    }
}

/// Rotates a cyclic order to start at `start`, continuing towards its smaller neighbor.
fn ring_from(cyc: &[Vertex], start: Vertex) -> Vec<Vertex> {
    let k = cyc.len();
    let at = cyc.iter().position(|&v| v == start).unwrap();
    let fwd = cyc[(at + 1) % k];
    let bwd = cyc[(at + k - 1) % k];
    if fwd < bwd {
        (0..k).map(|i| cyc[(at + i) % k]).collect()
    } else {
        (0..k).map(|i| cyc[(at + k - i) % k]).collect()
    }
}

const MODE_IN: usize = 0;
const MODE_CLOSED: usize = 1;
const MODE_OPEN: usize = 2;


struct Dp {
    /// Per vertex: cost with the vertex in / closed / open (INF when impossible).
    vin: Vec<u64>,
    vclosed: Vec<u64>,
    vopen: Vec<u64>,
    childless: Vec<bool>,
    /// The child block kept open when the vertex is `Open`.
    open_child: Vec<usize>,
    /// Per block and mode (in / closed / open at the anchor): cost.
    bcost: Vec<[u64; 3]>,
    /// Cycle blocks: index into `rings` of the assignments realizing each mode.
    bring: Vec<usize>,
    rings: RingCache,
}

/// Ring solutions shared between cycles whose slots agree up to a per-slot
/// shift of all costs, which moves every assignment by the same amount.
#[derive(Default)]
struct RingCache {
    index: HashMap<Vec<Slot>, usize>,
    solved: Vec<[Option<RingSolution>; 3]>,
}

impl RingCache {
    /// Solutions for the three anchor modes and the shift to add to their costs.
    fn solve(&mut self, slots: &[Slot]) -> (usize, u64) {
        let mut shift = 0;
        let key: Vec<Slot> = slots
            .iter()
            .enumerate()
            .map(|(p, s)| {
                if p == 0 {
                    return Slot::bare();
                }
                let low = if s.plain { 0 } else { s.in_cost.min(s.open_cost).min(s.closed_cost) };
                shift += low;
                let down = |c: u64| if c >= INF { INF } else { c - low };
                Slot { in_cost: down(s.in_cost), open_cost: down(s.open_cost), closed_cost: down(s.closed_cost), plain: s.plain }
            })
            .collect();
        if let Some(&id) = self.index.get(&key) {
            return (id, shift);
        }
        let [closed, open] = ring::solve_anchored(&key);
        let inside = ring::solve_anchor_in(&key);
        let id = self.solved.len();
        self.solved.push([inside, closed, open]);
        self.index.insert(key, id);
        (id, shift)
    }
}

enum Task {
    Vertex(Vertex, Choice),
    Block(usize, usize),
}

impl Dp {
    fn compute(rooted: &Rooted) -> Self {
        let n = rooted.child_blocks.len();
        let nb = rooted.bd.blocks.len();
        let mut dp = Dp {
            vin: vec![INF; n],
            vclosed: vec![INF; n],
            vopen: vec![INF; n],
            childless: vec![false; n],
            open_child: vec![usize::MAX; n],
            bcost: vec![[INF; 3]; nb],
            bring: vec![usize::MAX; nb],
            rings: RingCache::default(),
        };
        for &b in rooted.order.iter().rev() {
            let block = &rooted.bd.blocks[b];
            if rooted.anchor[b] == usize::MAX {
                for &v in &block.vertices {
                    dp.finish_vertex(rooted, v);
                }
                continue;
            }
            if block.is_bridge() {
                let u = rooted.bridge_child(b);
                dp.finish_vertex(rooted, u);
                let plain = if dp.childless[u] { 0 } else { INF };
                dp.bcost[b] = [
                    dp.vin[u].min(dp.vclosed[u]).min(dp.vopen[u]).min(plain),
                    dp.vin[u].min(dp.vclosed[u]),
                    dp.vopen[u].min(plain),
                ];
            } else {
                let order = &rooted.rings[b];
                for &v in &order[1..] {
                    dp.finish_vertex(rooted, v);
                }
                let slots: Vec<Slot> = order.iter().map(|&v| dp.slot(rooted, v)).collect();
                let (id, shift) = dp.rings.solve(&slots);
                let cost = |s: &Option<RingSolution>| s.as_ref().map_or(INF, |s| s.cost + shift);
                let [i, c, o] = &dp.rings.solved[id];
                dp.bcost[b] = [cost(i), cost(c), cost(o)];
                dp.bring[b] = id;
            }
        }
        if let Some(&first) = rooted.order.first() {
            if rooted.anchor[first] != usize::MAX {
                dp.finish_vertex(rooted, rooted.anchor[first]);
            }
        }
        dp
    }

    fn finish_vertex(&mut self, rooted: &Rooted, v: Vertex) {
        let kids = &rooted.child_blocks[v];
        if kids.is_empty() {
            self.childless[v] = true;
            self.vin[v] = 1;
            return;
        }
        let mut vin = 1u64;
        let mut closed = 0u64;
        for &b in kids {
            let [i, c, _] = self.bcost[b];
            vin = (vin + i).min(INF);
            closed = (closed + c).min(INF);
        }
        let mut open = INF;
        if closed < INF {
            for &b in kids {
                let [_, c, o] = self.bcost[b];
                if o < INF && closed - c + o < open {
                    open = closed - c + o;
                    self.open_child[v] = b;
                }
            }
        }
        self.vin[v] = vin;
        self.vclosed[v] = closed;
        self.vopen[v] = open;
    }

    fn vertex_cost(&self, v: Vertex, c: Choice) -> u64 {
        match c {
            Choice::In => self.vin[v],
            Choice::Open => self.vopen[v],
            Choice::Closed => self.vclosed[v],
            Choice::Plain => {
                if self.childless[v] {
                    0
                } else {
                    INF
                }
            }
        }
    }

    fn slot(&self, _rooted: &Rooted, v: Vertex) -> Slot {
        Slot {
            in_cost: self.vin[v],
            open_cost: self.vopen[v],
            closed_cost: self.vclosed[v],
            plain: self.childless[v],
        }
    }

    /// Expands vertex states and block modes top-down into the chosen vertices.
    fn witness(&self, rooted: &Rooted, mut stack: Vec<Task>) -> Vec<Vertex> {
        let mut out = Vec::new();
        while let Some(task) = stack.pop() {
            match task {
                Task::Vertex(v, state) => {
                    if state == Choice::In {
                        out.push(v);
                    }
                    for &b in &rooted.child_blocks[v] {
                        let mode = match state {
                            Choice::In => MODE_IN,
                            Choice::Open if b == self.open_child[v] => MODE_OPEN,
                            _ => MODE_CLOSED,
                        };
                        stack.push(Task::Block(b, mode));
                    }
                }
                Task::Block(b, mode) => {
                    if rooted.bd.blocks[b].is_bridge() {
                        let u = rooted.bridge_child(b);
                        let allowed: &[Choice] = match mode {
                            MODE_IN => &[Choice::In, Choice::Closed, Choice::Open, Choice::Plain],
                            MODE_CLOSED => &[Choice::In, Choice::Closed],
                            _ => &[Choice::Open, Choice::Plain],
                        };
                        let best = allowed.iter().copied().min_by_key(|&c| self.vertex_cost(u, c)).unwrap();
                        stack.push(Task::Vertex(u, best));
                    } else {
                        let sol = self.rings.solved[self.bring[b]][mode].as_ref().expect("chosen mode is feasible");
                        for (&v, &c) in rooted.rings[b].iter().zip(&sol.choices).skip(1) {
                            stack.push(Task::Vertex(v, c));
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::parse_edge_list;
    use crate::oracle::gt_exact;

    fn data(name: &str) -> Graph {
        let path = format!("{}/tests/data/{name}.edges", env!("CARGO_MANIFEST_DIR"));
        parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    fn check(g: &Graph) {
        let r = gt_spread_cactus(g).unwrap();
        let o = gt_exact(g).unwrap();
        assert_eq!(r.value, o.value, "{}", g.to_edge_list());
        assert!(crate::geodesics::is_geodesic_transversal(g, &r.witness));
    }

    #[test]
    fn examples() {
        let bull = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(gt_spread_cactus(&bull).unwrap().value, 2);
        assert_eq!(gt_spread_cactus(&data("unicyclic_g13")).unwrap().value, 4);
        assert_eq!(gt_spread_cactus(&data("tree_t21")).unwrap().value, 4);
        let dumbbell = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)],
        )
        .unwrap();
        assert_eq!(gt_spread_cactus(&dumbbell).unwrap().value, gt_exact(&dumbbell).unwrap().value);
        assert_eq!(gt_exact(&dumbbell).unwrap().value, 3);
        assert_eq!(gt_spread_cactus(&families::cycle(9)).unwrap().value, 2);
        assert_eq!(gt_spread_cactus(&families::path(6)).unwrap().value, 1);
        assert_eq!(gt_spread_cactus(&families::complete(4)).unwrap_err(), Error::NotSpreadCactus);
    }

    #[test]
    fn agrees_with_oracle_on_hand_picked_cacti() {
        let graphs = [
            // triangle with a hanging star
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
            // square with a pendant P_3
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)]).unwrap(),
            // two squares joined through a middle vertex
            Graph::from_edges(
                9,
                &[(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (5, 8)],
            )
            .unwrap(),
            data("unicyclic_g13"),
        ];
        for g in &graphs {
            check(g);
        }
    }

    #[test]
    fn unicyclic_examples() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(gt_unicyclic(&paw).unwrap().value, 2);
        let c4p3 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(gt_unicyclic(&c4p3).unwrap().value, gt_exact(&c4p3).unwrap().value);
        assert_eq!(gt_unicyclic(&families::cycle(8)).unwrap().value, 2);
        assert_eq!(gt_unicyclic(&data("unicyclic_g13")).unwrap().value, 4);
        assert_eq!(gt_unicyclic(&families::path(4)).unwrap_err(), Error::NotUnicyclic { found: 0 });
    }

    #[test]
    fn random_cacti_match_oracle() {
        for seed in 0..600u64 {
            let n = 3 + (seed as usize % 10);
            let f = [0.3, 0.6, 1.0][seed as usize % 3];
            let g = crate::generate::random_spread_cactus(n, f, seed).unwrap();
            check(&g);
            if cyclomatic_number(&g) == 1 {
                assert_eq!(gt_unicyclic(&g).unwrap().value, gt_spread_cactus(&g).unwrap().value);
            }
        }
    }
}
