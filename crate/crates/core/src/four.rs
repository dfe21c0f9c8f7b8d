//! Four-ordered Hamiltonian cycles in `G^4`.
//!
//! The Steiner tree of four anchors has at most four leaves, all of them
//! anchors. [`classify_shape`] sorts it into one of five shapes and relabels
//! the anchors (rotating or reversing the sequence, which preserves cyclic
//! order up to orientation) so that a fixed recipe applies. [`tbar_cycle`]
//! runs the recipe, which walks the tree in hops of at most 4 and leaves
//! every leaf anchor next to a close cycle neighbor; [`attach_components`]
//! then absorbs the rest of the spanning tree.

use crate::error::{Error, Result};
use crate::extension::{attach_components, check_extension_conditions, in_cyclic_order, OrderedCycle};
use crate::general::check_anchors;
use crate::graph::{spanning_tree, steiner_subtree, Graph, Tree};
use crate::verify::{Construction, CycleCertificate};

const HOP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeCase {
    /// The tree is a path.
    TwoLeaves,
    /// Three leaves; the inner anchor sits at the branch vertex or on the
    /// branch of the first anchor.
    ThreeLeavesNear,
    /// Three leaves; the inner anchor sits strictly inside the branch of
    /// the second anchor.
    ThreeLeavesFar,
    /// Four leaves; anchors 1, 2 hang off one end of the spine, 3, 4 off the
    /// other (always used when the spine is a single vertex).
    FourLeavesParallel,
    /// Four leaves; anchors 1, 3 hang off one end of the spine, 2, 4 off the
    /// other.
    FourLeavesCrossed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeShape {
    pub case: ShapeCase,
    /// The anchors, rotated or reversed so that the case recipe applies.
    pub order: [usize; 4],
    /// Branch vertex of degree >= 3 (three and four leaves); the end of the
    /// spine near `order[0]` for four leaves. First leaf for a path.
    pub hub: usize,
    /// Other end of the spine (four leaves); equals `hub` otherwise.
    pub far_hub: usize,
    /// Spine length for four leaves; distance from `hub` to `order[3]` for
    /// three leaves; 0 for a path.
    pub m: usize,
}

fn rotate(a: [usize; 4], by: usize) -> [usize; 4] {
    [a[by % 4], a[(by + 1) % 4], a[(by + 2) % 4], a[(by + 3) % 4]]
}

/// The branch (tree path from `hub`) that contains `v`, identified by its
/// leaf, or `None` if `v == hub`.
fn branch_leaf(t: &Tree, hub: usize, v: usize, leaves: &[usize]) -> Option<usize> {
    if v == hub {
        return None;
    }
    leaves.iter().copied().find(|&l| t.on_path(hub, l, v))
}

pub fn classify_shape(tbar: &Tree, anchors: &[usize]) -> Result<TreeShape> {
    let order: [usize; 4] = anchors
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("need exactly 4 anchors, got {}", anchors.len())))?;
    for &v in &order {
        if v >= tbar.universe() || !tbar.contains(v) {
            return Err(Error::InvalidInput(format!("anchor {v} is not in the tree")));
        }
    }
    let leaves = tbar.leaves();
    if let Some(&l) = leaves.iter().find(|l| !order.contains(l)) {
        return Err(Error::Precondition(format!("leaf {l} is not an anchor")));
    }
    let hubs: Vec<usize> = tbar.members().iter().copied().filter(|&v| tbar.degree(v) >= 3).collect();
    match leaves.len() {
        2 => Ok(TreeShape {
            case: ShapeCase::TwoLeaves,
            order,
            hub: leaves[0],
            far_hub: leaves[0],
            m: 0,
        }),
        3 => {
            let v0 = hubs[0];
            let inner = (0..4).find(|&i| !leaves.contains(&order[i])).expect("one inner anchor");
            let mut o = rotate(order, inner + 1);
            let v4 = o[3];
            let on = branch_leaf(tbar, v0, v4, &leaves);
            let case = if on.is_none() || on == Some(o[0]) {
                ShapeCase::ThreeLeavesNear
            } else if on == Some(o[2]) {
                o = [o[2], o[1], o[0], o[3]];
                ShapeCase::ThreeLeavesNear
            } else {
                ShapeCase::ThreeLeavesFar
            };
            Ok(TreeShape {
                case,
                order: o,
                hub: v0,
                far_hub: v0,
                m: tbar.distance(v0, v4),
            })
        }
        4 => {
            if hubs.len() == 1 {
                return Ok(TreeShape {
                    case: ShapeCase::FourLeavesParallel,
                    order,
                    hub: hubs[0],
                    far_hub: hubs[0],
                    m: 0,
                });
            }
            let (ha, hb) = (hubs[0], hubs[1]);
            let side = |v: usize| tbar.distance(v, ha) < tbar.distance(v, hb);
            let mut o = order;
            let case = if side(o[1]) == side(o[0]) {
                ShapeCase::FourLeavesParallel
            } else if side(o[3]) == side(o[0]) {
                o = rotate(order, 3);
                ShapeCase::FourLeavesParallel
            } else {
                ShapeCase::FourLeavesCrossed
            };
            let (u0, um) = if side(o[0]) { (ha, hb) } else { (hb, ha) };
            Ok(TreeShape {
                case,
                order: o,
                hub: u0,
                far_hub: um,
                m: tbar.distance(u0, um),
            })
        }
        n => Err(Error::Precondition(format!("tree has {n} leaves, expected 2 to 4"))),
    }
}

/// Hamiltonian path of the square of the path `q`, from `q[0]` to `q[1]`:
/// even positions forward, then odd positions back.
fn zig(q: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = q.iter().copied().step_by(2).collect();
    let odd: Vec<usize> = q.iter().copied().skip(1).step_by(2).collect();
    out.extend(odd.into_iter().rev());
    out
}

/// Splits `r` at `v` into the part ending at `v` and the part starting there.
fn split_at_vertex(r: &[usize], v: usize) -> (Vec<usize>, Vec<usize>) {
    let i = r.iter().position(|&x| x == v).expect("vertex on path");
    (r[..=i].to_vec(), r[i..].to_vec())
}

struct Walk<'a> {
    t: &'a Tree,
    case: &'static str,
    seq: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Walk<'a> {
    fn new(t: &'a Tree, case: &'static str, start: usize) -> Self {
        let mut used = vec![false; t.universe()];
        used[start] = true;
        Walk {
            t,
            case,
            seq: vec![start],
            used,
        }
    }

    fn fail(&self, step: &str, msg: String) -> Error {
        Error::Invariant(format!("{} case, {step}: {msg}", self.case))
    }

    fn last(&self) -> usize {
        *self.seq.last().expect("walk is nonempty")
    }

    fn used(&self, v: usize) -> bool {
        self.used[v]
    }

    fn go(&mut self, v: usize, step: &str) -> Result<()> {
        if self.used[v] {
            return Err(self.fail(step, format!("vertex {v} already used")));
        }
        let d = self.t.distance(self.last(), v);
        if d > HOP {
            return Err(self.fail(step, format!("hop {}->{v} has length {d}", self.last())));
        }
        self.used[v] = true;
        self.seq.push(v);
        Ok(())
    }

    fn extend(&mut self, vs: &[usize], step: &str) -> Result<()> {
        vs.iter().try_for_each(|&v| self.go(v, step))
    }

    /// First unused spine vertex among the candidate indices.
    fn pick(&self, spine: &[usize], candidates: &[usize], step: &str) -> Result<usize> {
        candidates
            .iter()
            .copied()
            .find(|&i| i < spine.len() && !self.used(spine[i]))
            .ok_or_else(|| self.fail(step, format!("spine positions {candidates:?} are all used")))
    }

    /// Visits `spine[from]`, then moves `stride` positions at a time towards
    /// lower indices while the index exceeds `floor`.
    fn descend(&mut self, spine: &[usize], from: usize, stride: usize, floor: usize, step: &str) -> Result<usize> {
        let mut s = from;
        self.go(spine[s], step)?;
        while s > floor {
            s = s.saturating_sub(stride);
            self.go(spine[s], step)?;
        }
        Ok(s)
    }

    /// Visits `spine[from]`, then moves up while the index is below `ceil`.
    fn ascend(&mut self, spine: &[usize], from: usize, stride: usize, ceil: usize, step: &str) -> Result<usize> {
        let mut s = from;
        self.go(spine[s], step)?;
        while s < ceil {
            s += stride;
            self.go(spine[s], step)?;
        }
        Ok(s)
    }
}

fn path_case(t: &Tree, shape: &TreeShape) -> Result<Vec<usize>> {
    let leaves = t.leaves();
    let line = t.path(leaves[0], leaves[1])?;
    let len = line.len() - 1;
    let mut pos = vec![usize::MAX; t.universe()];
    for (i, &v) in line.iter().enumerate() {
        pos[v] = i;
    }
    let mut w: Vec<usize> = shape.order.to_vec();
    w.sort_by_key(|&v| pos[v]);
    let (a_pos, b_pos) = (pos[w[1]], pos[w[2]]);
    let d23 = (b_pos - a_pos) % 4;
    let (a, _, c, d) = path_parameters(d23);

    let class = |p: usize, r: usize| p % 4 == r % 4;
    let r14: Vec<usize> = (1..len).filter(|&p| p != a_pos && p != b_pos && class(p, a_pos + a)).collect();
    let r13: Vec<usize> = (1..b_pos).filter(|&p| p != a_pos && class(p, a_pos + c)).collect();
    let r24: Vec<usize> = (a_pos + 1..len).filter(|&p| p != b_pos && class(p, b_pos + 4 - d)).collect();
    let taken = |p: usize| r14.contains(&p) || r13.contains(&p) || r24.contains(&p);
    let rest = |lo: usize, hi: usize| -> Vec<usize> { (lo + 1..hi).filter(|&p| !taken(p)).collect() };
    let framed = |from: usize, mid: Vec<usize>, to: usize| {
        let mut v = vec![from];
        v.extend(mid);
        v.push(to);
        v
    };
    let ends = [0, a_pos, b_pos, len];
    let segment = |i: usize, j: usize| -> Vec<usize> {
        match (i, j) {
            (0, 1) => framed(0, rest(0, a_pos), a_pos),
            (1, 2) => framed(a_pos, rest(a_pos, b_pos), b_pos),
            (2, 3) => framed(b_pos, rest(b_pos, len), len),
            (0, 3) => framed(0, r14.clone(), len),
            (0, 2) => framed(0, r13.clone(), b_pos),
            (1, 3) => framed(a_pos, r24.clone(), len),
            _ => unreachable!("segments are indexed by increasing pairs"),
        }
    };
    let rank = |v: usize| ends.iter().position(|&e| e == pos[v]).expect("anchor position");
    let mut cycle = Vec::with_capacity(line.len());
    for j in 0..4 {
        let (s, e) = (rank(shape.order[j]), rank(shape.order[(j + 1) % 4]));
        let mut p = if s < e { segment(s, e) } else { segment(e, s) };
        if s > e {
            p.reverse();
        }
        p.pop();
        cycle.extend(p.into_iter().map(|q| line[q]));
    }
    let mut walk = Walk::new(t, "two leaves", cycle[0]);
    walk.extend(&cycle[1..], "linking segments")?;
    Ok(walk.seq)
}

/// Smallest `(a, b, c, d)` in `1..=3` with `a + b = d23`, `c != a`,
/// `d != b` and `c + d != d23` (mod 4).
pub fn path_parameters(d23: usize) -> (usize, usize, usize, usize) {
    let r = d23 % 4;
    for a in 1..=3 {
        for b in 1..=3 {
            if (a + b) % 4 != r {
                continue;
            }
            for c in (1..=3).filter(|&c| c != a) {
                if let Some(d) = (1..=3).find(|&d| d != b && (c + d) % 4 != r) {
                    return (a, b, c, d);
                }
            }
        }
    }
    unreachable!("parameters exist for every residue")
}

fn three_near(t: &Tree, shape: &TreeShape) -> Result<Vec<usize>> {
    let [v1, v2, v3, v4] = shape.order;
    let v0 = shape.hub;
    let p12 = t.path(v1, v2)?;
    let mut h = zig(&p12);
    let i2 = h.iter().position(|&x| x == v2).expect("v2 on H");
    let i4 = h.iter().position(|&x| x == v4).expect("v4 on H");
    if i4 < i2 {
        h[1..].reverse();
    }
    let i2 = h.iter().position(|&x| x == v2).expect("v2 on H");
    let i4 = h.iter().position(|&x| x == v4).expect("v4 on H");
    let branch3 = t.path(v0, v3)?;
    let r = zig(&branch3[1..]);

    let i0 = h.iter().position(|&x| x == v0).expect("v0 on H");
    let cut = if i0 > i2 && i0 <= i4 {
        i0
    } else {
        let p0 = p12.iter().position(|&x| x == v0).expect("v0 on P12");
        let (a, b) = (p12[p0 - 1], p12[p0 + 1]);
        let ia = h.iter().position(|&x| x == a).expect("on H");
        let ib = h.iter().position(|&x| x == b).expect("on H");
        let (iu, iw) = (ia.min(ib), ia.max(ib));
        if iw != iu + 1 || iu < i2 {
            return Err(Error::Invariant(format!(
                "three leaves near case: neighbors {a}, {b} of {v0} are not consecutive after {v2}"
            )));
        }
        iw
    };
    let mut walk = Walk::new(t, "three leaves near", v1);
    walk.extend(&h[1..cut], "along H to the splice point")?;
    walk.extend(&r, "through the third branch")?;
    walk.extend(&h[cut..], "back along H")?;
    Ok(walk.seq)
}

fn three_far(t: &Tree, shape: &TreeShape) -> Result<Vec<usize>> {
    let [v1, v2, v3, v4] = shape.order;
    let v0 = shape.hub;
    let m = shape.m;
    let b1 = t.path(v0, v1)?;
    let u = t.path(v0, v2)?;
    let b3 = t.path(v0, v3)?;
    let r1 = zig(&b1);
    let (a_part, b_part) = split_at_vertex(&r1, v1);
    let r2 = zig(&u[m + 1..]);
    let r3 = zig(&b3[1..]);
    let reserved = m.is_multiple_of(4);

    let mut w = Walk::new(t, "three leaves far", v1);
    if reserved {
        w.extend(&b_part[1..], "step 1")?;
    } else {
        let down: Vec<usize> = a_part.iter().rev().skip(1).copied().collect();
        w.extend(&down, "step 1")?;
    }
    if m >= 4 {
        let mut s = if reserved { 3 } else { 4 };
        loop {
            w.go(u[s], "step 2")?;
            if s + 3 >= m {
                break;
            }
            s += 4;
        }
    }
    w.extend(&r2, "step 3")?;
    if m >= 2 {
        let s = w.pick(&u, &[m - 1, m - 2], "step 4")?;
        w.descend(&u, s, 4, 3, "step 4")?;
    }
    w.extend(&r3, "step 5")?;
    if m >= 3 {
        let candidates: Vec<usize> = [0, 1, 2].into_iter().filter(|&i| i != 0 || !reserved).collect();
        let s = w.pick(&u, &candidates, "step 6")?;
        w.ascend(&u, s, 4, m.saturating_sub(4), "step 6")?;
    }
    w.go(v4, "step 7")?;
    if m >= 4 {
        let s = w.pick(&u, &[m - 1, m - 2, m - 3, m - 4], "step 8")?;
        w.descend(&u, s, 4, 3, "step 8")?;
    }
    if reserved {
        if w.last() != v0 {
            w.go(v0, "step 9")?;
        }
        w.extend(&a_part[1..a_part.len() - 1], "step 9")?;
    } else {
        let back: Vec<usize> = b_part.iter().rev().copied().collect();
        w.extend(&back[..back.len() - 1], "step 9")?;
    }
    Ok(w.seq)
}

fn four_parallel(t: &Tree, shape: &TreeShape) -> Result<Vec<usize>> {
    let [v1, v2, v3, v4] = shape.order;
    let (u0, um, m) = (shape.hub, shape.far_hub, shape.m);
    let spine = t.path(u0, um)?;
    let r1 = zig(&t.path(u0, v1)?);
    let (a_part, b_part) = split_at_vertex(&r1, v1);
    let mut r2 = zig(&t.path(u0, v2)?);
    r2.reverse();
    let r3 = zig(&t.path(um, v3)?[1..]);
    let r4 = zig(&t.path(um, v4)?[1..]);

    let mut w = Walk::new(t, "four leaves parallel", v1);
    let down: Vec<usize> = a_part.iter().rev().skip(1).copied().collect();
    w.extend(&down[..down.len() - 1], "step 1")?;
    w.extend(&r2, "step 2")?;
    if m >= 2 {
        w.ascend(&spine, 2, 2, m - 1, "step 3")?;
    }
    w.extend(&r3, "step 4")?;
    w.extend(&r4, "step 5")?;
    if m >= 1 {
        let s = w.pick(&spine, &[m, m - 1], "step 6")?;
        w.descend(&spine, s, 2, 1, "step 6")?;
    }
    let back: Vec<usize> = b_part.iter().rev().copied().collect();
    w.extend(&back[..back.len() - 1], "step 7")?;
    Ok(w.seq)
}

fn four_crossed(t: &Tree, shape: &TreeShape) -> Result<Vec<usize>> {
    let [v1, v2, v3, v4] = shape.order;
    let (u0, um, m) = (shape.hub, shape.far_hub, shape.m);
    let spine = t.path(u0, um)?;
    let r1 = zig(&t.path(u0, v1)?);
    let (a_part, b_part) = split_at_vertex(&r1, v1);
    let r2 = zig(&t.path(um, v2)?[1..]);
    let r3 = zig(&t.path(u0, v3)?[1..]);
    let r4 = zig(&t.path(um, v4)?[1..]);

    let mut w = Walk::new(t, "four leaves crossed", v1);
    let down: Vec<usize> = a_part.iter().rev().skip(1).copied().collect();
    w.extend(&down, "step 1")?;
    if m >= 4 {
        w.ascend(&spine, 4, 4, m - 3, "step 2")?;
    }
    w.extend(&r2, "step 3")?;
    if m >= 2 {
        let s = w.pick(&spine, &[m, m - 1], "step 4")?;
        w.descend(&spine, s, 4, 3, "step 4")?;
    }
    w.extend(&r3, "step 5")?;
    let end6 = if m >= 2 {
        let s = w.pick(&spine, &[1, 2], "step 6")?;
        Some(w.ascend(&spine, s, 4, m.saturating_sub(3), "step 6")?)
    } else {
        w.go(spine[1], "step 6")?;
        Some(1)
    };
    if m >= 3 && end6 == Some(m - 3) {
        w.extend(&r4, "step 7")?;
    } else {
        let rev: Vec<usize> = r4.iter().rev().copied().collect();
        w.extend(&rev, "step 7")?;
    }
    if m >= 3 {
        let s = w.pick(&spine, &[m, m - 1, m - 2, m - 3], "step 8")?;
        w.descend(&spine, s, 4, 3, "step 8")?;
    }
    let back: Vec<usize> = b_part.iter().rev().copied().collect();
    w.extend(&back[..back.len() - 1], "step 9")?;
    Ok(w.seq)
}

/// Places every tree vertex the recipe skipped into the first cycle edge
/// whose tree path passes through it.
fn absorb_leftovers(t: &Tree, cycle: &mut Vec<usize>) -> Result<()> {
    let mut placed = vec![false; t.universe()];
    for &v in cycle.iter() {
        placed[v] = true;
    }
    for &y in t.members() {
        if placed[y] {
            continue;
        }
        let len = cycle.len();
        let slot = (0..len).find(|&i| t.on_path(cycle[i], cycle[(i + 1) % len], y));
        let Some(i) = slot else {
            return Err(Error::Invariant(format!("no cycle edge spans skipped vertex {y}")));
        };
        cycle.insert(i + 1, y);
        placed[y] = true;
    }
    Ok(())
}

/// Checks that `c` is a Hamiltonian cycle of `tbar^4` and that every leaf
/// has a cycle neighbor within distance 2, or at distance 3 that is not a
/// leaf.
pub fn check_leaf_condition(tbar: &Tree, c: &OrderedCycle) -> std::result::Result<(), String> {
    if c.len() != tbar.len() {
        return Err(format!("cycle has {} vertices, tree has {}", c.len(), tbar.len()));
    }
    check_extension_conditions(tbar, HOP, c)
}

/// Hamiltonian cycle of `tbar^4` through the shape's anchors in their
/// original order.
pub fn tbar_cycle(tbar: &Tree, shape: &TreeShape, anchors: &[usize]) -> Result<OrderedCycle> {
    let mut cycle = match shape.case {
        ShapeCase::TwoLeaves => path_case(tbar, shape)?,
        ShapeCase::ThreeLeavesNear => three_near(tbar, shape)?,
        ShapeCase::ThreeLeavesFar => three_far(tbar, shape)?,
        ShapeCase::FourLeavesParallel => four_parallel(tbar, shape)?,
        ShapeCase::FourLeavesCrossed => four_crossed(tbar, shape)?,
    };
    let len = cycle.len();
    if len >= 2 && tbar.distance(cycle[len - 1], cycle[0]) > HOP {
        return Err(Error::Invariant(format!("{:?}: closing hop is too long", shape.case)));
    }
    absorb_leftovers(tbar, &mut cycle)?;
    if !in_cyclic_order(&cycle, anchors) {
        cycle.reverse();
    }
    let out = OrderedCycle::new(cycle, anchors.to_vec())
        .map_err(|e| Error::Invariant(format!("{:?}: {e}", shape.case)))?;
    check_leaf_condition(tbar, &out).map_err(|e| Error::Invariant(format!("{:?}: {e}", shape.case)))?;
    Ok(out)
}

pub fn four_ordered_hamiltonian(g: &Graph, anchors: &[usize]) -> Result<CycleCertificate> {
    if anchors.len() != 4 {
        return Err(Error::InvalidInput(format!("need exactly 4 anchors, got {}", anchors.len())));
    }
    check_anchors(g, anchors, 4)?;
    let tree = spanning_tree(g)?;
    let tbar = steiner_subtree(&tree, anchors)?;
    let shape = classify_shape(&tbar, anchors)?;
    let c = tbar_cycle(&tbar, &shape, anchors)?;
    let ham = attach_components(&tree, &tbar, HOP, &c)?;
    let (cycle, anchors) = ham.into_parts();
    Ok(CycleCertificate {
        n: g.n(),
        power: HOP,
        cycle,
        anchors,
        construction: Construction::Four,
    })
}
