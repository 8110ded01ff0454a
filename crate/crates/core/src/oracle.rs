//! Exact exponential-time solvers for small instances.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesics::{for_each_geodesic, is_geodesic_transversal, Distances, DEFAULT_CAP};
use crate::graph::{Graph, Vertex};

/// Largest graph the oracle accepts.
pub const MAX_ORACLE_N: usize = 24;

/// Solver results on graphs up to this order are re-checked against the definition.
pub const VERIFY_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    Oracle,
    Tree,
    Cycle,
    Cactus,
}

impl std::fmt::Display for Solver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Solver::Oracle => "oracle",
            Solver::Tree => "tree",
            Solver::Cycle => "cycle",
            Solver::Cactus => "cactus",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalResult {
    pub value: usize,
    /// Sorted ascending.
    pub witness: Vec<Vertex>,
    pub solver: Solver,
    /// The witness was checked against every maximal geodesic.
    pub verified: bool,
}

impl TransversalResult {
    /// Packages a witness, checking it when `g` is small enough.
    pub fn certify(g: &Graph, mut witness: Vec<Vertex>, solver: Solver) -> Self {
        witness.sort_unstable();
        witness.dedup();
        let verified = g.n() <= VERIFY_LIMIT && is_geodesic_transversal(g, &witness);
        TransversalResult { value: witness.len(), witness, solver, verified }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Minimum hitting set of a family over `0..universe_size`.
///
/// Returns the size and the lexicographically smallest optimal set.
pub fn min_hitting_set(universe_size: usize, sets: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    min_hitting_set_forced(universe_size, sets, &[])
}

/// Like [`min_hitting_set`], restricted to supersets of `forced`.
/// The returned size counts the forced elements.
pub fn min_hitting_set_forced(
    universe_size: usize,
    sets: &[Vec<usize>],
    forced: &[usize],
) -> Result<(usize, Vec<usize>)> {
    if universe_size > 64 {
        return Err(Error::TooLarge { what: format!("universe of {universe_size} elements exceeds 64") });
    }
    let mut masks = Vec::with_capacity(sets.len());
    for set in sets {
        if set.is_empty() {
            return Err(Error::UnhittableSet);
        }
        let mut mask = 0u64;
        for &e in set {
            if e >= universe_size {
                return Err(Error::Invalid(format!("element {e} outside universe of size {universe_size}")));
            }
            mask |= 1 << e;
        }
        masks.push(mask);
    }
    let mut forced_mask = 0u64;
    for &e in forced {
        if e >= universe_size {
            return Err(Error::Invalid(format!("forced element {e} outside universe")));
        }
        forced_mask |= 1 << e;
    }
    let best = solve_masks(masks, forced_mask);
    Ok((best.count_ones() as usize, bits(best)))
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Drops sets hit by `forced`, duplicates and supersets; sorts by size.
fn reduce_family(mut masks: Vec<u64>, forced: u64) -> Vec<u64> {
    masks.retain(|&s| s & forced == 0);
    masks.sort_unstable_by_key(|&s| (s.count_ones(), s));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for s in masks {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept
}

/// Number of pairwise disjoint sets picked greedily (smallest first), or
/// `usize::MAX` when some set is empty.
fn packing_bound(sets: &[u64]) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &s in sets {
        if s == 0 {
            return usize::MAX;
        }
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn greedy_cover(sets: &[u64]) -> u64 {
    let mut chosen = 0u64;
    let mut unhit: Vec<u64> = sets.to_vec();
    while !unhit.is_empty() {
        let mut freq = [0u32; 64];
        for &s in &unhit {
            for e in bits(s) {
                freq[e] += 1;
            }
        }
        let e = (0..64).max_by_key(|&e| (freq[e], std::cmp::Reverse(e))).unwrap();
        chosen |= 1 << e;
        unhit.retain(|&s| s & (1 << e) == 0);
    }
    chosen
}

/// Branch and bound for the optimum size, then a lexicographic search for
/// the smallest witness of that size.
fn solve_masks(masks: Vec<u64>, forced: u64) -> u64 {
    let family = reduce_family(masks, forced);
    if family.is_empty() {
        return forced;
    }
    let mut best = greedy_cover(&family).count_ones() as usize;
    branch(&family, 0, 0, &mut best);
    let found = lex_search(&family, 0, 0, best).expect("an optimum of this size exists");
    found | forced
}

fn branch(unhit: &[u64], banned: u64, depth: usize, best: &mut usize) {
    if unhit.is_empty() {
        *best = (*best).min(depth);
        return;
    }
    let mut effective: Vec<u64> = unhit.iter().map(|&s| s & !banned).collect();
    effective.sort_unstable_by_key(|s| s.count_ones());
    let lb = packing_bound(&effective);
    if lb == usize::MAX || depth + lb.max(1) >= *best {
        return;
    }
    let pivot = effective[0];
    let mut banned = banned;
    for e in bits(pivot) {
        let bit = 1u64 << e;
        let rest: Vec<u64> = effective.iter().copied().filter(|&s| s & bit == 0).collect();
        branch(&rest, banned, depth + 1, best);
        banned |= bit;
    }
}

/// First hitting set of at most `budget` further elements, all above `floor`
/// bits, in lexicographic order of sorted element lists.
fn lex_search(unhit: &[u64], chosen: u64, floor: u32, budget: usize) -> Option<u64> {
    if unhit.is_empty() {
        return Some(chosen);
    }
    if budget == 0 {
        return None;
    }
    // Every unhit set still needs an element, so nothing past the smallest
    // maximum element can come first.
    let limit = unhit.iter().map(|&s| 63 - s.leading_zeros()).min().unwrap();
    let union = unhit.iter().fold(0u64, |acc, &s| acc | s);
    for e in floor..=limit {
        let bit = 1u64 << e;
        if union & bit == 0 {
            continue;
        }
        let above = if e == 63 { 0 } else { !0u64 << (e + 1) };
        let mut rest: Vec<u64> =
            unhit.iter().copied().filter(|&s| s & bit == 0).map(|s| s & above).collect();
        rest.sort_unstable_by_key(|s| s.count_ones());
        let lb = packing_bound(&rest);
        if lb == usize::MAX || lb > budget - 1 {
            continue;
        }
        if let Some(found) = lex_search(&rest, chosen | bit, e + 1, budget - 1) {
            return Some(found);
        }
    }
    None
}

/// Vertex masks of all maximal geodesics.
fn maximal_geodesic_masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let dist = Distances::new(g);
    let mut masks = Vec::new();
    let mut total = 0usize;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !dist.is_maximal(g, u, v) {
                continue;
            }
            let complete = for_each_geodesic(g, &dist, u, v, |p| {
                total += 1;
                if total > cap {
                    return false;
                }
                masks.push(p.iter().fold(0u64, |m, &x| m | (1 << x)));
                true
            });
            if !complete {
                return Err(Error::CapExceeded { cap });
            }
        }
    }
    Ok(masks)
}

fn check_oracle_input(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > MAX_ORACLE_N {
        return Err(Error::TooLarge {
            what: format!("oracle accepts at most {MAX_ORACLE_N} vertices, got {}", g.n()),
        });
    }
    Ok(())
}

/// gt(g) with the default enumeration cap.
pub fn gt_exact(g: &Graph) -> Result<TransversalResult> {
    gt_exact_with_cap(g, DEFAULT_CAP)
}

pub fn gt_exact_with_cap(g: &Graph, cap: usize) -> Result<TransversalResult> {
    gt_exact_forced(g, &[], cap)
}

/// Smallest geodesic transversal containing `forced`; the value counts `forced`.
pub fn gt_exact_forced(g: &Graph, forced: &[Vertex], cap: usize) -> Result<TransversalResult> {
    check_oracle_input(g)?;
    if let Some(&bad) = forced.iter().find(|&&v| v >= g.n()) {
        return Err(Error::Invalid(format!("forced vertex {bad} out of range")));
    }
    let forced_mask = forced.iter().fold(0u64, |m, &v| m | (1 << v));
    let masks = if g.n() == 1 { vec![1] } else { maximal_geodesic_masks(g, cap)? };
    let witness = bits(solve_masks(masks, forced_mask));
    let verified = is_geodesic_transversal(g, &witness);
    Ok(TransversalResult { value: witness.len(), witness, solver: Solver::Oracle, verified })
}

/// Vertex masks {u, w, v} of all 3-geodesics u–w–v.
fn three_geodesic_masks(g: &Graph) -> Vec<u64> {
    let mut masks = Vec::new();
    for w in 0..g.n() {
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                if !g.has_edge(u, v) {
                    masks.push((1 << u) | (1 << v) | (1 << w));
                }
            }
        }
    }
    masks
}

/// Whether `s` meets every 3-geodesic (induced path on three vertices).
pub fn is_three_geodesic_transversal(g: &Graph, s: &[Vertex]) -> bool {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    for w in 0..g.n() {
        if in_s[w] {
            continue;
        }
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                if !in_s[u] && !in_s[v] && !g.has_edge(u, v) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum set meeting every 3-geodesic. Graphs without one (complete graphs) give 0.
pub fn three_gt_exact(g: &Graph) -> Result<TransversalResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > 64 {
        return Err(Error::TooLarge { what: format!("3-geodesic oracle accepts at most 64 vertices, got {}", g.n()) });
    }
    let witness = bits(solve_masks(three_geodesic_masks(g), 0));
    let verified = is_three_geodesic_transversal(g, &witness);
    Ok(TransversalResult { value: witness.len(), witness, solver: Solver::Oracle, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Plain subset enumeration by increasing size, then lexicographic.
    fn brute_hitting(universe: usize, sets: &[u64]) -> u64 {
        let mut all: Vec<u64> = (0..1u64 << universe).collect();
        all.sort_by_key(|&m| (m.count_ones(), bits(m)));
        all.into_iter().find(|&m| sets.iter().all(|&s| s & m != 0)).unwrap()
    }

    #[test]
    fn hitting_set_examples() {
        assert_eq!(min_hitting_set(2, &[vec![0], vec![1]]).unwrap(), (2, vec![0, 1]));
        assert_eq!(min_hitting_set(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap().0, 2);
        assert_eq!(min_hitting_set(5, &[]).unwrap(), (0, vec![]));
        assert_eq!(min_hitting_set(2, &[vec![]]).unwrap_err(), Error::UnhittableSet);
    }

    #[test]
    fn hitting_set_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let universe = rng.gen_range(1..=9);
            let count = rng.gen_range(0..12);
            let sets: Vec<u64> = (0..count)
                .map(|_| loop {
                    let m = rng.gen_range(1..1u64 << universe) & rng.gen_range(1..1u64 << universe);
                    if m != 0 {
                        break m;
                    }
                })
                .collect();
            let lists: Vec<Vec<usize>> = sets.iter().map(|&s| bits(s)).collect();
            let (value, witness) = min_hitting_set(universe, &lists).unwrap();
            let expect = brute_hitting(universe, &sets);
            assert_eq!(value, expect.count_ones() as usize);
            assert_eq!(witness, bits(expect));
        }
    }

    #[test]
    fn golden_values() {
        assert_eq!(gt_exact(&families::petersen()).unwrap().value, 4);
        assert_eq!(gt_exact(&families::complete(5)).unwrap().value, 4);
        assert_eq!(gt_exact(&families::complete_bipartite(2, 3)).unwrap().value, 2);
        assert_eq!(gt_exact(&families::path(7)).unwrap().value, 1);
        assert_eq!(gt_exact(&families::cycle(7)).unwrap().value, 2);
        let r = gt_exact(&families::path(1)).unwrap();
        assert_eq!((r.value, r.witness, r.verified), (1, vec![0], true));
    }

    #[test]
    fn three_gt_examples() {
        assert_eq!(three_gt_exact(&families::path(3)).unwrap().value, 1);
        assert_eq!(three_gt_exact(&families::star(3)).unwrap().witness, vec![0]);
        assert_eq!(three_gt_exact(&families::cycle(6)).unwrap().value, 2);
        assert_eq!(three_gt_exact(&families::complete(4)).unwrap().value, 0);
    }

    #[test]
    fn forced_search() {
        let c6 = families::cycle(6);
        let r = gt_exact_forced(&c6, &[1], DEFAULT_CAP).unwrap();
        assert!(r.witness.contains(&1) && r.verified);
        assert_eq!(r.value, 2);
    }

    #[test]
    fn guardrails() {
        assert!(matches!(gt_exact(&families::path(25)), Err(Error::TooLarge { .. })));
        assert_eq!(gt_exact(&Graph::empty(2)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn serializes_to_flat_json() {
        let r = gt_exact(&families::cycle(5)).unwrap();
        assert_eq!(r.to_json(), r#"{"value":2,"witness":[0,2],"solver":"oracle","verified":true}"#);
    }
}
