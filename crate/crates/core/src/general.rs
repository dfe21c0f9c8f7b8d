//! Ordered cycles in `G^⌊3k/2⌋` and ordered Hamiltonian cycles in
//! `G^⌊3k/2⌋+1` for any connected graph.
//!
//! Every anchor gets a distinct label (a residue or a color) through the
//! marking procedure; the segment from anchor `i` to anchor `i + 1` then
//! only uses interior vertices carrying label `i`, which keeps segments
//! disjoint.

use std::collections::BTreeSet;

use crate::coloring::{build_color_map, colored_walk};
use crate::error::{invariant, Error, Result};
use crate::extension::{attach_components, check_extension_conditions, saturate_subtree, OrderedCycle};
use crate::graph::{spanning_tree, steiner_subtree, Graph, Tree};
use crate::verify::{Construction, CycleCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkMode {
    /// Keys are path labels; values are residues mod `t` in `0..t`. The
    /// smallest and largest key are handled after the others.
    Path,
    /// Keys are colors in `1..=t`, all handled at once.
    Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marking {
    /// Residue or color of each anchor.
    pub values: Vec<usize>,
    pub marked: Vec<bool>,
    /// Distinct values over all anchors.
    pub value_set: BTreeSet<usize>,
    pub unmarked: usize,
    /// Pairwise distinct label of each anchor.
    pub labels: Vec<usize>,
}

/// Smallest `t` for which marking `k` anchors is guaranteed to succeed.
pub fn required_labels(k: usize, mode: MarkMode) -> usize {
    match mode {
        MarkMode::Path => 3 * k / 2 - 1,
        MarkMode::Color => 3 * k / 2,
    }
}

pub fn mark_anchors(keys: &[usize], mode: MarkMode, t: usize) -> Result<Marking> {
    let k = keys.len();
    if k < 3 {
        return Err(Error::InvalidInput(format!("marking needs at least 3 anchors, got {k}")));
    }
    if t == 0 {
        return Err(Error::InvalidInput("label count must be positive".into()));
    }
    let values: Vec<usize> = match mode {
        MarkMode::Path => keys.iter().map(|&x| x % t).collect(),
        MarkMode::Color => {
            if let Some(&c) = keys.iter().find(|&&c| c == 0 || c > t) {
                return Err(Error::InvalidInput(format!("color {c} outside 1..={t}")));
            }
            keys.to_vec()
        }
    };

    let mut marked = vec![false; k];
    let unique_among = |i: usize, group: &[usize]| group.iter().all(|&j| j == i || values[j] != values[i]);
    match mode {
        MarkMode::Color => {
            let all: Vec<usize> = (0..k).collect();
            for (i, m) in marked.iter_mut().enumerate() {
                *m = unique_among(i, &all);
            }
        }
        MarkMode::Path => {
            let lo = (0..k).min_by_key(|&i| (keys[i], i)).expect("k >= 3");
            let hi = (0..k).max_by_key(|&i| (keys[i], i)).expect("k >= 3");
            let mut group: Vec<usize> = (0..k).filter(|&i| i != lo && i != hi).collect();
            for &i in &group {
                marked[i] = unique_among(i, &group);
            }
            for extreme in [lo, hi] {
                group.push(extreme);
                marked[extreme] = unique_among(extreme, &group);
            }
        }
    }

    let value_set: BTreeSet<usize> = values.iter().copied().collect();
    let unmarked = marked.iter().filter(|&&m| !m).count();
    if value_set.len() + unmarked > t {
        let msg = format!(
            "{} values plus {unmarked} unmarked anchors exceed {t} labels",
            value_set.len()
        );
        return Err(if t >= required_labels(k, mode) {
            Error::Invariant(msg)
        } else {
            Error::Precondition(msg)
        });
    }
    let pool: Vec<usize> = match mode {
        MarkMode::Path => (0..t).collect(),
        MarkMode::Color => (1..=t).collect(),
    };
    let mut free = pool.into_iter().filter(|v| !value_set.contains(v));
    let labels: Vec<usize> = (0..k)
        .map(|i| {
            if marked[i] {
                values[i]
            } else {
                free.next().expect("pool has room by the count check")
            }
        })
        .collect();
    invariant!(
        labels.iter().collect::<BTreeSet<_>>().len() == k,
        "labels {labels:?} are not distinct"
    );
    Ok(Marking {
        values,
        marked,
        value_set,
        unmarked,
        labels,
    })
}

/// Intermediate objects of the pipeline, kept for the Hamiltonian extension.
#[derive(Debug, Clone)]
pub struct OrderedBuild {
    pub tree: Tree,
    pub steiner: Tree,
    pub cycle: OrderedCycle,
    /// `⌊3k/2⌋`; the cycle lies in `G^power`.
    pub power: usize,
}

pub(crate) fn check_anchors(g: &Graph, anchors: &[usize], min_k: usize) -> Result<()> {
    if anchors.len() < min_k {
        return Err(Error::InvalidInput(format!(
            "need at least {min_k} anchors, got {}",
            anchors.len()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &v in anchors {
        g.check(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateAnchor(v));
        }
    }
    Ok(())
}

pub fn build_ordered_cycle(g: &Graph, anchors: &[usize]) -> Result<OrderedBuild> {
    check_anchors(g, anchors, 3)?;
    let k = anchors.len();
    let tree = spanning_tree(g)?;
    let steiner = steiner_subtree(&tree, anchors)?;
    let power = 3 * k / 2;
    // a Steiner tree smaller than t gets one color per vertex
    let colors = power.min(steiner.len());
    let cm = build_color_map(&steiner, colors)?;
    let keys: Vec<usize> = anchors.iter().map(|&v| cm.color(v)).collect();
    let marking = mark_anchors(&keys, MarkMode::Color, colors)?;

    let mut cycle = Vec::new();
    let mut interior_owner = vec![usize::MAX; g.n()];
    for i in 0..k {
        let (x, z) = (anchors[i], anchors[(i + 1) % k]);
        let walk = colored_walk(&steiner, &cm, x, z, marking.labels[i])?;
        for &y in &walk[1..walk.len() - 1] {
            invariant!(!anchors.contains(&y), "anchor {y} inside segment {i}");
            invariant!(
                interior_owner[y] == usize::MAX,
                "segments {} and {i} share vertex {y}",
                interior_owner[y]
            );
            interior_owner[y] = i;
        }
        cycle.extend_from_slice(&walk[..walk.len() - 1]);
    }
    let cycle = OrderedCycle::new(cycle, anchors.to_vec())?;
    Ok(OrderedBuild {
        tree,
        steiner,
        cycle,
        power,
    })
}

pub fn ordered_hamiltonian(g: &Graph, anchors: &[usize]) -> Result<CycleCertificate> {
    let build = build_ordered_cycle(g, anchors)?;
    let p = build.power + 1;
    if let Err(msg) = check_extension_conditions(&build.steiner, p, &build.cycle) {
        return Err(Error::Invariant(format!("ordered cycle before extension: {msg}")));
    }
    let full = saturate_subtree(&build.steiner, p, &build.cycle)?;
    let ham = attach_components(&build.tree, &build.steiner, p, &full)?;
    let (cycle, anchors) = ham.into_parts();
    Ok(CycleCertificate {
        n: g.n(),
        power: p,
        cycle,
        anchors,
        construction: Construction::General,
    })
}
