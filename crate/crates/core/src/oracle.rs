//! Exhaustive search for ordered cycles, and exact `p_k` by sweeping powers.
//!
//! The search grows a path from the first anchor, one segment per anchor
//! gap, and only ever accepts the next required anchor. A "not found" answer
//! is a proof of non-existence. Graphs are limited to 64 vertices so vertex
//! sets fit in a `u64`; callers pass a smaller bound to cap running time.

use crate::error::{Error, Result};
use crate::graph::{power, Graph, DistanceTable};
use crate::par::{self, Exec};

/// Default size limit for single ordered-cycle queries.
pub const QUERY_MAX_N: usize = 24;
/// Default size limit for Hamiltonian sweeps over all anchor tuples.
pub const SWEEP_MAX_N: usize = 12;
const HARD_MAX_N: usize = 64;

struct Search<'a> {
    adj: Vec<u64>,
    anchors: &'a [usize],
    anchor_index: Vec<usize>,
    hamiltonian: bool,
    induced: bool,
    full: u64,
    path: Vec<usize>,
}

const NOT_ANCHOR: usize = usize::MAX;

fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Search<'_> {
    fn start(&self) -> usize {
        self.anchors[0]
    }

    /// Next anchor to reach, or the start once every anchor is placed.
    fn target(&self, next: usize) -> usize {
        self.anchors.get(next).copied().unwrap_or(self.start())
    }

    fn feasible(&self, cur: usize, used: u64, next: usize) -> bool {
        let free = self.full & !used;
        let mut reach = bit(cur);
        let mut frontier = bit(cur);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & free & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        if self.anchors[next.min(self.anchors.len())..].iter().any(|&a| reach & bit(a) == 0) {
            return false;
        }
        let start = self.start();
        if self.adj[start] & reach == 0 {
            return false;
        }
        if self.hamiltonian {
            if free & !reach != 0 {
                return false;
            }
            let ends = bit(cur) | bit(start);
            let mut rest = free;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.adj[v] & (free | ends)).count_ones() < 2 {
                    return false;
                }
            }
        }
        true
    }

    fn closes(&self, cur: usize, used: u64) -> bool {
        self.path.len() >= 3
            && self.adj[cur] & bit(self.start()) != 0
            && (!self.hamiltonian || used == self.full)
    }

    fn dfs(&mut self, cur: usize, used: u64, next: usize, segment: u64) -> bool {
        let k = self.anchors.len();
        if next == k && self.closes(cur, used) {
            return true;
        }
        if !self.feasible(cur, used, next) {
            return false;
        }
        let target = self.target(next);
        if self.induced && self.adj[cur] & bit(target) != 0 {
            // a shortest segment never detours past an adjacent target
            if next == k {
                return false;
            }
            return self.step(target, used, next, segment, cur);
        }
        let mut cand = self.adj[cur] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.step(v, used, next, segment, cur) {
                return true;
            }
        }
        false
    }

    fn step(&mut self, v: usize, used: u64, next: usize, segment: u64, cur: usize) -> bool {
        let idx = self.anchor_index[v];
        let is_target = idx != NOT_ANCHOR && idx == next;
        if idx != NOT_ANCHOR && !is_target {
            return false;
        }
        if self.induced && !is_target && self.adj[v] & segment & !bit(cur) != 0 {
            return false;
        }
        self.path.push(v);
        let found = if is_target {
            self.dfs(v, used | bit(v), next + 1, bit(v))
        } else {
            self.dfs(v, used | bit(v), next, segment | bit(v))
        };
        if !found {
            self.path.pop();
        }
        found
    }
}

/// Searches `g` for a cycle through `anchors` in order (a Hamiltonian one if
/// asked). Returns the cycle, starting at the first anchor, or `None` when
/// none exists.
pub fn oracle_cycle(
    g: &Graph,
    anchors: &[usize],
    hamiltonian: bool,
    max_n: usize,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let max = max_n.min(HARD_MAX_N);
    if n > max {
        return Err(Error::BoundExceeded { n, max });
    }
    if anchors.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut anchor_index = vec![NOT_ANCHOR; n];
    for (i, &a) in anchors.iter().enumerate() {
        g.check(a)?;
        if anchor_index[a] != NOT_ANCHOR {
            return Err(Error::DuplicateAnchor(a));
        }
        anchor_index[a] = i;
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | bit(w)))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let start = anchors[0];
    let mut s = Search {
        adj,
        anchors,
        anchor_index,
        hamiltonian,
        // shortcutting a segment keeps the cycle valid once it has >= 3 anchors
        induced: !hamiltonian && anchors.len() >= 3,
        full,
        path: vec![start],
    };
    let found = s.dfs(start, bit(start), 1, bit(start));
    Ok(found.then_some(s.path))
}

/// All anchor tuples over `0..n` up to rotation and reflection: the first
/// entry is the smallest, and for `k >= 3` the second is below the last.
pub fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    for first in 0..n {
        current.clear();
        current.push(first);
        extend_tuples(n, k, &mut current, &mut out);
    }
    out
}

fn extend_tuples(n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        if k < 3 || current[1] < current[k - 1] {
            out.push(current.clone());
        }
        return;
    }
    for v in current[0] + 1..n {
        if !current.contains(&v) {
            current.push(v);
            extend_tuples(n, k, current, out);
            current.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub power: usize,
    pub all_pass: bool,
    /// First tuple (in enumeration order) with no ordered Hamiltonian cycle.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub pk: usize,
    pub rows: Vec<SweepRow>,
}

/// Whether `h` has an ordered Hamiltonian cycle for every anchor tuple;
/// returns the first failing tuple otherwise.
pub fn first_failure(h: &Graph, k: usize, exec: Exec, max_n: usize) -> Result<Option<Vec<usize>>> {
    let tuples = ordered_tuples(h.n(), k);
    let hit = par::find_first(exec, &tuples, |tuple| match oracle_cycle(h, tuple, true, max_n) {
        Ok(Some(_)) => None,
        Ok(None) => Some(Ok(())),
        Err(e) => Some(Err(e)),
    });
    match hit {
        None => Ok(None),
        Some((i, Ok(()))) => Ok(Some(tuples[i].clone())),
        Some((_, Err(e))) => Err(e),
    }
}

/// Exact `p_k(g)`: the smallest `p` such that `g^p` has an ordered
/// Hamiltonian cycle for every sequence of `k` distinct vertices.
pub fn sweep_pk(g: &Graph, k: usize, exec: Exec, max_n: usize) -> Result<Sweep> {
    let n = g.n();
    let max = max_n.min(HARD_MAX_N);
    if n > max {
        return Err(Error::BoundExceeded { n, max });
    }
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!("k must be in 1..={n}, got {k}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // g^diameter is complete, and complete graphs on >= 3 vertices always pass
    let top = DistanceTable::with_exec(g, exec).diameter().max(1);
    let mut rows = Vec::new();
    for p in 1..=top {
        let h = power(g, p)?;
        let counterexample = first_failure(&h, k, exec, max)?;
        let all_pass = counterexample.is_none();
        rows.push(SweepRow {
            power: p,
            all_pass,
            counterexample,
        });
        if all_pass {
            return Ok(Sweep { pk: p, rows });
        }
    }
    Err(Error::Invariant(format!("g^{top} is complete but failed the sweep")))
}
