//! Exact dynamic program for one cycle whose vertices carry hanging parts.
//!
//! Every cycle position takes one of four states:
//! - `In`: the vertex is in the transversal;
//! - `Open`: it is not, and exactly one hanging part still has a peak that
//!   reaches it without meeting the transversal;
//! - `Closed`: it is not, and no hanging part is open;
//! - `Plain`: it has no hanging parts at all and is not in the transversal.
//!
//! With h = ⌊n/2⌋, a choice is feasible exactly when, walking along any
//! stretch of consecutive non-`In` positions, two `Open` positions are more
//! than h apart, and no `Open` or `Plain` position sits at distance exactly h
//! from a `Plain` one. The program walks the ring once per guess of the state
//! that wraps around from the last position to the first.

pub(crate) const INF: u64 = u64::MAX / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Choice {
    In,
    Open,
    Closed,
    Plain,
}

const CHOICES: [Choice; 4] = [Choice::In, Choice::Open, Choice::Closed, Choice::Plain];

/// Costs of the states a position may take; `INF` marks an unavailable state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Slot {
    pub in_cost: u64,
    pub open_cost: u64,
    pub closed_cost: u64,
    /// The vertex has no hanging parts, so `Plain` is available at cost 0.
    pub plain: bool,
}

impl Slot {
    pub(crate) fn bare() -> Self {
        Slot { in_cost: 1, open_cost: INF, closed_cost: INF, plain: true }
    }

    pub(crate) fn forced() -> Self {
        Slot { in_cost: 1, open_cost: INF, closed_cost: INF, plain: false }
    }

    pub(crate) fn with_leaf() -> Self {
        Slot { in_cost: 1, open_cost: 0, closed_cost: 1, plain: false }
    }

    fn cost(&self, c: Choice) -> u64 {
        match c {
            Choice::In => self.in_cost,
            Choice::Open => self.open_cost,
            Choice::Closed => self.closed_cost,
            Choice::Plain => {
                if self.plain {
                    0
                } else {
                    INF
                }
            }
        }
    }

    fn in_only(&self) -> bool {
        !self.plain && self.open_cost >= INF && self.closed_cost >= INF
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RingSolution {
    pub cost: u64,
    pub choices: Vec<Choice>,
}

struct Sweep {
    /// Per position, per state: (cost, previous state, choice).
    table: Vec<Vec<(u64, u32, Choice)>>,
}

impl Sweep {
    fn width(h: usize) -> usize {
        (h + 2) * (h + 2) * 2
    }

    fn encode(h: usize, a: usize, b: usize, o: usize) -> usize {
        (a * (h + 2) + b) * 2 + o
    }

    /// `a`: distance back to the last `In` (capped at h+1);
    /// `b`: distance back to the last `Open` since that `In` (h+1 = none);
    /// `o`: the anchor already sees an open peak in the forward direction.
    /// With `anchored`, position 0 is the anchor vertex, outside the
    /// transversal and not itself an endpoint.
    fn run(slots: &[Slot], start: (usize, usize), anchored: bool) -> Self {
        let n = slots.len();
        let h = n / 2;
        let cap = h + 1;
        let w = Self::width(h);
        let plain_at = |p: usize| -> bool {
            let q = (p + n - h) % n;
            slots[q].plain && !(anchored && q == 0)
        };
        let mut table = Vec::with_capacity(n);
        let mut cur = vec![INF; w];
        cur[Self::encode(h, start.0, start.1, 0)] = 0;
        for p in 0..n {
            let mut next = vec![(INF, u32::MAX, Choice::In); w];
            for (s, &cost) in cur.iter().enumerate() {
                if cost >= INF {
                    continue;
                }
                let o = s % 2;
                let a = (s / 2) / (h + 2);
                let b = (s / 2) % (h + 2);
                for choice in CHOICES {
                    let c = if anchored && p == 0 {
                        if choice != Choice::Closed {
                            continue;
                        }
                        0
                    } else {
                        slots[p].cost(choice)
                    };
                    if c >= INF {
                        continue;
                    }
                    let a2 = if choice == Choice::In { 0 } else { (a + 1).min(cap) };
                    let back_open = (b + 1).min(cap);
                    let b2 = match choice {
                        Choice::In => cap,
                        Choice::Open => 0,
                        _ => back_open,
                    };
                    let violates = match choice {
                        Choice::Open => back_open <= h || (a2 == cap && plain_at(p)),
                        Choice::Plain => back_open == h || (a2 == cap && plain_at(p)),
                        _ => false,
                    };
                    if violates {
                        continue;
                    }
                    let sees = anchored
                        && p >= 1
                        && p <= h
                        && a2 >= p
                        && (choice == Choice::Open || (choice == Choice::Plain && p == h));
                    let o2 = o | usize::from(sees);
                    let t = Self::encode(h, a2, b2, o2);
                    let total = cost + c;
                    if total < next[t].0 {
                        next[t] = (total, s as u32, choice);
                    }
                }
            }
            cur = next.iter().map(|x| x.0).collect();
            table.push(next);
        }
        Sweep { table }
    }

    fn trace(&self, mut s: usize) -> Vec<Choice> {
        let mut out = vec![Choice::In; self.table.len()];
        for p in (0..self.table.len()).rev() {
            let (_, prev, choice) = self.table[p][s];
            out[p] = choice;
            s = prev as usize;
        }
        out
    }
}

fn keep_better(best: &mut Option<RingSolution>, cost: u64, make: impl FnOnce() -> Vec<Choice>) {
    if cost < INF && best.as_ref().map_or(true, |b| cost < b.cost) {
        *best = Some(RingSolution { cost, choices: make() });
    }
}

/// Cheapest feasible assignment of a free-standing ring.
pub(crate) fn solve_free(slots: &[Slot]) -> Option<RingSolution> {
    let n = slots.len();
    debug_assert!(n >= 3);
    let h = n / 2;
    if let Some(r) = slots.iter().position(Slot::in_only) {
        // A ring starting at an `In` position does not depend on the wrap-around state.
        let rotated: Vec<Slot> = (0..n).map(|i| slots[(r + i) % n]).collect();
        let sweep = Sweep::run(&rotated, (0, h + 1), false);
        let last = sweep.table.last().unwrap();
        let (s, &(cost, _, _)) = last.iter().enumerate().min_by_key(|(_, x)| x.0).unwrap();
        if cost >= INF {
            return None;
        }
        let choices = sweep.trace(s);
        let mut unrotated = vec![Choice::In; n];
        for (i, c) in choices.into_iter().enumerate() {
            unrotated[(r + i) % n] = c;
        }
        return Some(RingSolution { cost, choices: unrotated });
    }
    let mut best = None;
    for a0 in 0..=h + 1 {
        for b0 in 0..=h + 1 {
            let sweep = Sweep::run(slots, (a0, b0), false);
            let s = Sweep::encode(h, a0, b0, 0);
            let cost = sweep.table[n - 1][s].0;
            keep_better(&mut best, cost, || sweep.trace(s));
        }
    }
    best
}

/// Ring hanging from an anchor at position 0 that is outside the transversal.
/// Position 0's slot is ignored. Returns the cheapest assignment whose ring
/// side is closed at the anchor, and the cheapest one where it is open.
pub(crate) fn solve_anchored(slots: &[Slot]) -> [Option<RingSolution>; 2] {
    let n = slots.len();
    debug_assert!(n >= 3);
    let h = n / 2;
    let plain_back = slots[n - h].plain;
    let mut best: [Option<RingSolution>; 2] = [None, None];
    for a0 in 0..=h + 1 {
        for b0 in 0..=h + 1 {
            let sweep = Sweep::run(slots, (a0, b0), true);
            let back_open = b0 + 1 <= h || (a0 >= h && plain_back);
            for o in 0..2 {
                let s = Sweep::encode(h, a0, b0, o);
                let cost = sweep.table[n - 1][s].0;
                let open = o == 1 || back_open;
                keep_better(&mut best[usize::from(open)], cost, || sweep.trace(s));
            }
        }
    }
    best
}

/// Ring hanging from an anchor at position 0 that is in the transversal.
/// Position 0's slot is ignored and costs nothing.
pub(crate) fn solve_anchor_in(slots: &[Slot]) -> Option<RingSolution> {
    let mut local = slots.to_vec();
    local[0] = Slot { in_cost: 0, open_cost: INF, closed_cost: INF, plain: false };
    solve_free(&local)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_cycles_need_two() {
        for n in 3..12 {
            let sol = solve_free(&vec![Slot::bare(); n]).unwrap();
            assert_eq!(sol.cost, 2, "C_{n}");
        }
    }

    #[test]
    fn net_needs_two() {
        assert_eq!(solve_free(&vec![Slot::with_leaf(); 3]).unwrap().cost, 2);
    }

    #[test]
    fn forced_position_is_kept() {
        let mut slots = vec![Slot::bare(); 6];
        slots[2] = Slot::forced();
        let sol = solve_free(&slots).unwrap();
        assert_eq!(sol.cost, 2);
        assert_eq!(sol.choices[2], Choice::In);
    }
}
