//! Direct constructions for powers of paths and cycles, and for hosts with a
//! known Hamiltonian cycle.
//!
//! [`path_ordered_hamiltonian`] takes 1-indexed labels `1..=n` along the
//! path; the cycle functions take 0-indexed positions along the cycle.
//! Certificates are always 0-indexed.

use crate::error::{invariant, Error, Result};
use crate::extension::in_cyclic_order;
use crate::general::{mark_anchors, MarkMode};
use crate::graph::Graph;
use crate::verify::{Construction, CycleCertificate};

fn check_labels(n: usize, anchors: &[usize], lo: usize, min_k: usize) -> Result<()> {
    let k = anchors.len();
    if k < min_k {
        return Err(Error::InvalidInput(format!("need at least {min_k} anchors, got {k}")));
    }
    if n < k {
        return Err(Error::TooFewVertices { needed: k, found: n });
    }
    let mut seen = vec![false; n + lo];
    for &a in anchors {
        if a < lo || a >= n + lo {
            return Err(Error::VertexOutOfRange { vertex: a, n });
        }
        if std::mem::replace(&mut seen[a], true) {
            return Err(Error::DuplicateAnchor(a));
        }
    }
    Ok(())
}

/// Hamiltonian cycle of `(P_n)^t`, `t = ⌊3k/2⌋ − 1`, through the anchors
/// (labels `1..=n`) in order.
pub fn path_ordered_hamiltonian(n: usize, anchors: &[usize]) -> Result<CycleCertificate> {
    check_labels(n, anchors, 1, 3)?;
    let k = anchors.len();
    let t = 3 * k / 2 - 1;
    let marking = mark_anchors(anchors, MarkMode::Path, t)?;

    let mut used = vec![false; n + 1];
    for &a in anchors {
        used[a] = true;
    }
    let mut cycle: Vec<usize> = Vec::with_capacity(n);
    for i in 0..k {
        let (a, b) = (anchors[i], anchors[(i + 1) % k]);
        cycle.push(a);
        let r = marking.labels[i];
        let interior: Vec<usize> = if a < b {
            (a + 1..b).filter(|x| x % t == r).collect()
        } else {
            (b + 1..a).rev().filter(|x| x % t == r).collect()
        };
        for y in interior {
            invariant!(!used[y], "label {y} lies in two segments or is an anchor");
            used[y] = true;
            cycle.push(y);
        }
    }

    // absorb the rest one vertex at a time next to a path neighbor already placed
    while cycle.len() < n {
        let z = (1..=n)
            .find(|&z| !used[z] && ((z > 1 && used[z - 1]) || (z < n && used[z + 1])))
            .expect("some missing label borders the cycle");
        let x = if z > 1 && used[z - 1] { z - 1 } else { z + 1 };
        let len = cycle.len();
        let i = cycle.iter().position(|&v| v == x).expect("x is placed");
        let w = cycle[(i + len - 1) % len];
        let y = cycle[(i + 1) % len];
        if w.abs_diff(z) <= t {
            cycle.insert(i, z);
        } else {
            invariant!(y.abs_diff(z) <= t, "label {z} fits next to neither side of {x}");
            cycle.insert(i + 1, z);
        }
        used[z] = true;
    }
    invariant!(in_cyclic_order(&cycle, anchors), "insertion broke the anchor order");
    Ok(CycleCertificate {
        n,
        power: t,
        cycle: cycle.into_iter().map(|v| v - 1).collect(),
        anchors: anchors.iter().map(|&v| v - 1).collect(),
        construction: Construction::Path,
    })
}

/// Distance between positions `a` and `b` on `C_n`.
fn cyc_dist(n: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Hamiltonian cycle of `(C_n)^3` through five anchors (positions `0..n`)
/// in order.
pub fn cycle5_ordered_hamiltonian(n: usize, anchors: &[usize]) -> Result<CycleCertificate> {
    if anchors.len() != 5 {
        return Err(Error::InvalidInput(format!("need exactly 5 anchors, got {}", anchors.len())));
    }
    check_labels(n, anchors, 0, 5)?;
    let mut w: Vec<usize> = anchors.to_vec();
    w.sort_unstable();
    let arc = |i: usize| (w[(i + 1) % 5] + n - w[i]) % n;
    let at = |i: usize, offset: usize| (w[i] + offset) % n;
    let a: Vec<usize> = (0..5).map(|i| if arc(i) % 3 == 2 { 2 } else { 1 }).collect();

    // skip[i]: path between w_i and w_{i+2}; step[i]: between w_i and w_{i+1}
    let mut owner = vec![usize::MAX; n];
    let mut skip: Vec<Vec<usize>> = Vec::with_capacity(5);
    for i in 0..5 {
        let (l, next) = (arc(i), arc((i + 1) % 5));
        let mut p = vec![w[i]];
        if l > a[i] {
            let last = l - a[i];
            p.extend((1..=last).filter(|j| j % 3 == last % 3).map(|j| at(i, j)));
        }
        p.extend((1..next).filter(|j| j % 3 == 1).map(|j| at((i + 1) % 5, j)));
        p.push(w[(i + 2) % 5]);
        for &v in &p[1..p.len() - 1] {
            invariant!(owner[v] == usize::MAX, "skip paths overlap at {v}");
            owner[v] = i;
        }
        skip.push(p);
    }
    let mut step: Vec<Vec<usize>> = Vec::with_capacity(5);
    for i in 0..5 {
        let mut p = vec![w[i]];
        p.extend((1..arc(i)).map(|j| at(i, j)).filter(|&v| owner[v] == usize::MAX));
        p.push(w[(i + 1) % 5]);
        step.push(p);
    }
    for p in skip.iter().chain(&step) {
        for h in p.windows(2) {
            invariant!(cyc_dist(n, h[0], h[1]) <= 3, "segment hop {}-{} exceeds 3", h[0], h[1]);
        }
    }

    let index_of = |v: usize| w.iter().position(|&x| x == v).expect("anchor");
    let mut cycle: Vec<usize> = Vec::with_capacity(n);
    for j in 0..5 {
        let (s, e) = (index_of(anchors[j]), index_of(anchors[(j + 1) % 5]));
        let path: Vec<usize> = if e == (s + 1) % 5 {
            step[s].clone()
        } else if s == (e + 1) % 5 {
            step[e].iter().rev().copied().collect()
        } else if e == (s + 2) % 5 {
            skip[s].clone()
        } else {
            skip[e].iter().rev().copied().collect()
        };
        cycle.extend_from_slice(&path[..path.len() - 1]);
    }

    let mut placed = vec![false; n];
    for &v in &cycle {
        placed[v] = true;
    }
    while cycle.len() < n {
        let z = (0..n)
            .find(|&z| !placed[z] && (placed[(z + n - 1) % n] || placed[(z + 1) % n]))
            .expect("some missing vertex borders the cycle");
        let u = if placed[(z + n - 1) % n] { (z + n - 1) % n } else { (z + 1) % n };
        let len = cycle.len();
        let i = cycle.iter().position(|&v| v == u).expect("u is placed");
        let pred = cycle[(i + len - 1) % len];
        let succ = cycle[(i + 1) % len];
        if cyc_dist(n, pred, z) <= 3 {
            cycle.insert(i, z);
        } else {
            invariant!(cyc_dist(n, succ, z) <= 3, "vertex {z} fits next to neither side of {u}");
            cycle.insert(i + 1, z);
        }
        placed[z] = true;
    }
    invariant!(in_cyclic_order(&cycle, anchors), "insertion broke the anchor order");
    Ok(CycleCertificate {
        n,
        power: 3,
        cycle,
        anchors: anchors.to_vec(),
        construction: Construction::Cycle5,
    })
}

/// Five-ordered Hamiltonian cycle of `g^3` for a graph with a known
/// Hamiltonian cycle `ham`.
pub fn host_five_ordered(g: &Graph, ham: &[usize], anchors: &[usize]) -> Result<CycleCertificate> {
    let n = g.n();
    if ham.len() != n || n < 3 {
        return Err(Error::InvalidInput(format!(
            "Hamiltonian cycle has {} vertices, graph has {n}",
            ham.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ham.iter().enumerate() {
        g.check(v)?;
        if pos[v] != usize::MAX {
            return Err(Error::InvalidInput(format!("vertex {v} repeats in the Hamiltonian cycle")));
        }
        pos[v] = i;
    }
    for i in 0..n {
        let (a, b) = (ham[i], ham[(i + 1) % n]);
        if !g.has_edge(a, b) {
            return Err(Error::InvalidInput(format!("{a}-{b} is not an edge of the graph")));
        }
    }
    for &v in anchors {
        g.check(v)?;
    }
    let relabeled: Vec<usize> = anchors.iter().map(|&v| pos[v]).collect();
    let inner = cycle5_ordered_hamiltonian(n, &relabeled).map_err(|e| match e {
        Error::DuplicateAnchor(p) => Error::DuplicateAnchor(ham[p]),
        other => other,
    })?;
    Ok(CycleCertificate {
        n,
        power: 3,
        cycle: inner.cycle.iter().map(|&p| ham[p]).collect(),
        anchors: anchors.to_vec(),
        construction: Construction::Host5,
    })
}

/// Vertices of `g` in path order if `g` is a path, starting from the
/// smaller end.
pub fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 || g.edge_count() + 1 != n || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1)?;
    walk_order(g, start)
}

/// Vertices of `g` in cyclic order if `g` is a cycle, starting at 0 and
/// moving to its smaller neighbor.
pub fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    walk_order(g, 0)
}

fn walk_order(g: &Graph, start: usize) -> Option<Vec<usize>> {
    let mut order = vec![start];
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| !seen[w]) {
        seen[next] = true;
        order.push(next);
        cur = next;
    }
    (order.len() == g.n()).then_some(order)
}

/// Path construction on any graph that is a path, with 0-indexed anchors.
pub fn path_host_ordered(g: &Graph, anchors: &[usize]) -> Result<CycleCertificate> {
    let order = path_order(g).ok_or_else(|| Error::Precondition("graph is not a path".into()))?;
    let mut label = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i + 1;
    }
    for &v in anchors {
        g.check(v)?;
    }
    let relabeled: Vec<usize> = anchors.iter().map(|&v| label[v]).collect();
    let inner = path_ordered_hamiltonian(g.n(), &relabeled).map_err(|e| match e {
        Error::DuplicateAnchor(l) => Error::DuplicateAnchor(order[l - 1]),
        other => other,
    })?;
    Ok(CycleCertificate {
        cycle: inner.cycle.iter().map(|&p| order[p]).collect(),
        anchors: anchors.to_vec(),
        ..inner
    })
}
