//! Growing an ordered cycle on a subtree into a Hamiltonian one.
//!
//! The starting point is a cycle in `U^p` for a subtree `U` of a tree `T`
//! that passes through a sequence of anchors in order, visits every leaf of
//! `U`, and gives each such leaf a cycle neighbor close enough to leave room
//! for later splices. [`saturate_subtree`] first absorbs the remaining
//! vertices of `U`; [`attach_components`] then hangs every component of
//! `T − E(U)` into the cycle, one at a time.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{invariant, Error, Result};
use crate::graph::Tree;
use crate::ham_paths::ham_path_minus_root;

/// A cycle (vertex list, closing edge implied) together with the anchors it
/// is required to visit in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedCycle {
    cycle: Vec<usize>,
    anchors: Vec<usize>,
}

impl OrderedCycle {
    pub fn new(cycle: Vec<usize>, anchors: Vec<usize>) -> Result<Self> {
        if cycle.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "a cycle needs at least 3 vertices, got {}",
                cycle.len()
            )));
        }
        let mut seen = HashMap::with_capacity(cycle.len());
        for (i, &v) in cycle.iter().enumerate() {
            if seen.insert(v, i).is_some() {
                return Err(Error::InvalidInput(format!("vertex {v} repeats in the cycle")));
            }
        }
        if !in_cyclic_order(&cycle, &anchors) {
            return Err(Error::InvalidInput(
                "anchors are missing from the cycle or out of order".into(),
            ));
        }
        Ok(OrderedCycle { cycle, anchors })
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn into_parts(self) -> (Vec<usize>, Vec<usize>) {
        (self.cycle, self.anchors)
    }

    fn neighbors_at(&self, i: usize) -> (usize, usize) {
        let len = self.cycle.len();
        (self.cycle[(i + len - 1) % len], self.cycle[(i + 1) % len])
    }
}

/// Whether `seq` consists of distinct vertices of `cycle` met in this order
/// when walking the cycle forward from some starting point.
pub fn in_cyclic_order(cycle: &[usize], seq: &[usize]) -> bool {
    let pos: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut idx = Vec::with_capacity(seq.len());
    for v in seq {
        match pos.get(v) {
            Some(&i) => idx.push(i),
            None => return false,
        }
    }
    let k = idx.len();
    if k <= 1 {
        return true;
    }
    let descents = (0..k).filter(|&i| idx[(i + 1) % k] <= idx[i]).count();
    descents == 1
}

fn leaf_ok(t: &Tree, u: &Tree, p: usize, x: usize, y: usize) -> bool {
    let d = t.distance(x, y);
    d + 2 <= p || (d + 1 == p && !u.is_leaf(y))
}

/// Checks that `c` lies in `U^p`, visits every leaf of `U`, and gives each
/// leaf of `U` a suitable cycle neighbor. The anchor order is guaranteed by
/// the type.
pub fn check_extension_conditions(
    u: &Tree,
    p: usize,
    c: &OrderedCycle,
) -> std::result::Result<(), String> {
    let cycle = c.cycle();
    if let Some(&v) = cycle.iter().find(|&&v| v >= u.universe() || !u.contains(v)) {
        return Err(format!("cycle vertex {v} is not in the subtree"));
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if u.distance(a, b) > p {
            return Err(format!("cycle edge {a}-{b} is longer than {p}"));
        }
    }
    let on_cycle: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for x in u.leaves() {
        let Some(&i) = on_cycle.get(&x) else {
            return Err(format!("leaf {x} is not on the cycle"));
        };
        let (prev, next) = c.neighbors_at(i);
        if !leaf_ok(u, u, p, x, prev) && !leaf_ok(u, u, p, x, next) {
            return Err(format!("leaf {x} has no close cycle neighbor"));
        }
    }
    Ok(())
}

/// Inserts every vertex of `u` missing from `c`, in ascending order, into the
/// first cycle edge whose tree path passes through it.
pub fn saturate_subtree(u: &Tree, p: usize, c: &OrderedCycle) -> Result<OrderedCycle> {
    if p < 3 {
        return Err(Error::Precondition(format!("power must be at least 3, got {p}")));
    }
    check_extension_conditions(u, p, c).map_err(Error::Precondition)?;
    let mut present = vec![false; u.universe()];
    let mut cycle = c.cycle().to_vec();
    for &v in &cycle {
        present[v] = true;
    }
    for &y in u.members() {
        if present[y] {
            continue;
        }
        let len = cycle.len();
        let slot = (0..len).find(|&i| {
            let (x, z) = (cycle[i], cycle[(i + 1) % len]);
            u.on_path(x, z, y)
        });
        let Some(i) = slot else {
            return Err(Error::Invariant(format!("no cycle edge spans missing vertex {y}")));
        };
        cycle.insert(i + 1, y);
        present[y] = true;
    }
    let out = OrderedCycle::new(cycle, c.anchors().to_vec())?;
    if let Err(msg) = check_extension_conditions(u, p, &out) {
        return Err(Error::Invariant(format!("saturated cycle: {msg}")));
    }
    Ok(out)
}

/// First common leaf of `U` and the current tree whose cycle neighbors are
/// both too far.
fn leaf_violation(t: &Tree, u: &Tree, p: usize, cycle: &[usize], in_tree: &[bool]) -> Option<usize> {
    let len = cycle.len();
    (0..len).map(|i| (i, cycle[i])).find_map(|(i, x)| {
        let tree_degree = t.neighbors(x).iter().filter(|&&w| in_tree[w]).count();
        if !u.is_leaf(x) || tree_degree != 1 {
            return None;
        }
        let prev = cycle[(i + len - 1) % len];
        let next = cycle[(i + 1) % len];
        (!leaf_ok(t, u, p, x, prev) && !leaf_ok(t, u, p, x, next)).then_some(x)
    })
}

/// Extends a Hamiltonian ordered cycle of `U^p` to one of `T^p` by splicing
/// in each component of `T − E(U)`, in ascending order of the vertex it
/// shares with `U`.
pub fn attach_components(t: &Tree, u: &Tree, p: usize, c: &OrderedCycle) -> Result<OrderedCycle> {
    if p < 3 {
        return Err(Error::Precondition(format!("power must be at least 3, got {p}")));
    }
    if u.universe() != t.universe() || u.members().iter().any(|&v| !t.contains(v)) {
        return Err(Error::Precondition("subtree is not contained in the tree".into()));
    }
    if c.len() != u.len() || c.cycle().iter().any(|&v| !u.contains(v)) {
        return Err(Error::Precondition("cycle is not Hamiltonian on the subtree".into()));
    }
    for i in 0..c.len() {
        let (a, b) = (c.cycle[i], c.cycle[(i + 1) % c.len()]);
        if t.distance(a, b) > p {
            return Err(Error::Precondition(format!("cycle edge {a}-{b} is longer than {p}")));
        }
    }
    let mut in_tree = vec![false; t.universe()];
    for &v in u.members() {
        in_tree[v] = true;
    }
    if let Some(x) = leaf_violation(t, u, p, c.cycle(), &in_tree) {
        return Err(Error::Precondition(format!("leaf {x} has no close cycle neighbor")));
    }

    let mut cycle = c.cycle().to_vec();
    for &a in u.members() {
        let outside: Vec<usize> = t.neighbors(a).iter().copied().filter(|&b| !u.contains(b)).collect();
        if outside.is_empty() {
            continue;
        }
        let mut members = vec![a];
        for b in outside {
            members.extend(t.component_avoiding(b, |x| u.contains(x)));
        }
        members.sort_unstable();
        let w = t.subtree(&members, a)?;
        let r = ham_path_minus_root(&w, a)?;
        invariant!(t.distance(a, r.first) == 1, "path into component of {a} starts too far");
        invariant!(t.distance(a, r.last) <= 2, "path into component of {a} ends too far");

        let len = cycle.len();
        let tree_degree = t.neighbors(a).iter().filter(|&&w| in_tree[w]).count();
        let (at, segment) = if tree_degree >= 2 {
            // a separates the current tree: splice across an edge that jumps over it
            let slot = (0..len).find(|&i| {
                let (x, z) = (cycle[i], cycle[(i + 1) % len]);
                x != a && z != a && t.on_path(x, z, a)
            });
            let Some(i) = slot else {
                return Err(Error::Invariant(format!("no cycle edge jumps over vertex {a}")));
            };
            let (x, z) = (cycle[i], cycle[(i + 1) % len]);
            let mut seg = r.path.clone();
            if t.distance(x, a) < t.distance(z, a) {
                seg.reverse();
            }
            (i, seg)
        } else {
            let i = cycle.iter().position(|&v| v == a).expect("subtree vertex on cycle");
            let prev = cycle[(i + len - 1) % len];
            let next = cycle[(i + 1) % len];
            if leaf_ok(t, u, p, a, prev) {
                (i + len - 1, r.path.clone())
            } else if leaf_ok(t, u, p, a, next) {
                let mut seg = r.path.clone();
                seg.reverse();
                (i, seg)
            } else {
                return Err(Error::Invariant(format!("leaf {a} lost its close cycle neighbor")));
            }
        };
        let i = at % len;
        let (x, z) = (cycle[i], cycle[(i + 1) % len]);
        let (first, last) = (segment[0], segment[segment.len() - 1]);
        invariant!(
            t.distance(x, first) <= p && t.distance(last, z) <= p,
            "splice of component at {a} between {x} and {z} exceeds distance {p}"
        );
        cycle.splice(i + 1..i + 1, segment);
        for &v in &members {
            in_tree[v] = true;
        }
        if let Some(x) = leaf_violation(t, u, p, &cycle, &in_tree) {
            return Err(Error::Invariant(format!(
                "leaf {x} lost its close cycle neighbor after attaching at {a} (power {p})"
            )));
        }
    }
    invariant!(cycle.len() == t.len(), "extended cycle misses vertices of the tree");
    OrderedCycle::new(cycle, c.anchors().to_vec())
}
