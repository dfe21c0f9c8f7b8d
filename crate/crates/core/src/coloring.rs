//! Tree colorings with short same-color walks.
//!
//! A [`ColorMap`] assigns each member of a tree one of `t` colors such that
//! every vertex sees all other colors close by (`reach`, the `i`-th entry at
//! distance at most `i + 1`) and, whenever its color class is shared, a
//! same-colored `twin` within distance `t`. These two properties are what
//! make [`colored_walk`] possible: between any two vertices there is a walk
//! of hops at most `t` whose interior vertices all carry one prescribed
//! color.
//!
//! The map is grown vertex by vertex in BFS order from the root. The first
//! `t` vertices get distinct colors; every later vertex inherits the color
//! of the last entry in its parent's reach list.

use std::collections::BTreeSet;

use crate::error::{invariant, Error, Result};
use crate::graph::Tree;

const NOT_MEMBER: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorMap {
    colors: usize,
    color: Vec<usize>,
    reach: Vec<Vec<usize>>,
    twin: Vec<Option<usize>>,
    position: Vec<usize>,
}

impl ColorMap {
    /// Number of colors `t`; colors are `1..=t`.
    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.color[v]
    }

    /// Witnesses `b_1(v), ..., b_{t-1}(v)`.
    pub fn reach(&self, v: usize) -> &[usize] {
        &self.reach[v]
    }

    /// Same-colored witness `b_t(v)`, if one was recorded.
    pub fn twin(&self, v: usize) -> Option<usize> {
        self.twin[v]
    }

    /// Position of `v` in the growth order; the first `t` positions form the
    /// seed subtree.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    fn is_seed(&self, v: usize) -> bool {
        self.position[v] < self.colors
    }

    /// First witness of `v` (reach list, then twin) colored `c`.
    fn witness_of_color(&self, v: usize, c: usize) -> Option<usize> {
        self.reach[v]
            .iter()
            .copied()
            .chain(self.twin[v])
            .find(|&w| self.color[w] == c)
    }
}

pub fn build_color_map(tree: &Tree, t: usize) -> Result<ColorMap> {
    if t == 0 {
        return Err(Error::InvalidInput("color count must be at least 1".into()));
    }
    if tree.len() < t {
        return Err(Error::TooFewVertices {
            needed: t,
            found: tree.len(),
        });
    }
    let n = tree.universe();
    let order = tree.bfs_order();
    let mut cm = ColorMap {
        colors: t,
        color: vec![0; n],
        reach: vec![Vec::new(); n],
        twin: vec![None; n],
        position: vec![NOT_MEMBER; n],
    };
    for (i, &v) in order.iter().enumerate() {
        cm.position[v] = i;
    }

    let seed = &order[..t];
    for (i, &v) in seed.iter().enumerate() {
        cm.color[v] = i + 1;
    }
    for &x in seed {
        let mut others: Vec<(usize, usize)> = seed
            .iter()
            .filter(|&&w| w != x)
            .map(|&w| (tree.distance(x, w), w))
            .collect();
        others.sort_unstable();
        cm.reach[x] = others.into_iter().map(|(_, w)| w).collect();
    }

    // each seed vertex starts its own class; index 0 is unused
    let mut class_size = vec![1usize; t + 1];
    class_size[0] = 0;
    for &x in &order[t..] {
        let y = tree.parent(x);
        let mut full = Vec::with_capacity(t);
        full.push(y);
        full.extend_from_slice(&cm.reach[y]);
        full.truncate(t);
        invariant!(full.len() == t, "parent {y} of {x} has a short witness list");
        let inherited = full[t - 1];
        let c = cm.color[inherited];
        cm.color[x] = c;
        cm.twin[x] = Some(inherited);
        full.truncate(t - 1);
        cm.reach[x] = full;
        if class_size[c] == 1 && cm.twin[inherited].is_none() {
            cm.twin[inherited] = Some(x);
        }
        class_size[c] += 1;
    }
    Ok(cm)
}

/// Checks both witness conditions for every member, using only the map and
/// tree distances. Returns the first violation.
pub fn check_color_map(tree: &Tree, cm: &ColorMap) -> std::result::Result<(), String> {
    let t = cm.colors;
    let mut class_size = vec![0usize; t + 1];
    for &v in tree.members() {
        let c = cm.color(v);
        if !(1..=t).contains(&c) {
            return Err(format!("vertex {v} has color {c} outside 1..={t}"));
        }
        class_size[c] += 1;
    }
    for &x in tree.members() {
        let reach = cm.reach(x);
        if reach.len() != t - 1 {
            return Err(format!("vertex {x} has {} witnesses, expected {}", reach.len(), t - 1));
        }
        for (i, &b) in reach.iter().enumerate() {
            if !tree.contains(b) || tree.distance(x, b) > i + 1 {
                return Err(format!("witness b_{}({x}) = {b} is too far", i + 1));
            }
        }
        let seen: BTreeSet<usize> = reach.iter().map(|&b| cm.color(b)).collect();
        if let Some(missing) = (1..=t).find(|&c| c != cm.color(x) && !seen.contains(&c)) {
            return Err(format!("witnesses of {x} miss color {missing}"));
        }
        if class_size[cm.color(x)] > 1 {
            match cm.twin(x) {
                Some(b)
                    if b != x
                        && tree.contains(b)
                        && tree.distance(x, b) <= t
                        && cm.color(b) == cm.color(x) => {}
                other => return Err(format!("vertex {x} has shared color but bad twin {other:?}")),
            }
        }
    }
    Ok(())
}

/// A walk `x = y_0, ..., y_l = z` of distinct vertices with every hop at
/// most `t`, every interior vertex colored `c`, and the first (last) hop at
/// most `t - 1` when `x` (`z`) is not colored `c`.
pub fn colored_walk(tree: &Tree, cm: &ColorMap, x: usize, z: usize, c: usize) -> Result<Vec<usize>> {
    for v in [x, z] {
        if !tree.contains(v) || cm.position.get(v).copied().unwrap_or(NOT_MEMBER) == NOT_MEMBER {
            return Err(Error::InvalidInput(format!("vertex {v} is not colored")));
        }
    }
    if x == z {
        return Err(Error::InvalidInput("walk endpoints must differ".into()));
    }
    if !(1..=cm.colors).contains(&c) {
        return Err(Error::InvalidInput(format!("color {c} outside 1..={}", cm.colors)));
    }

    // Repeatedly step from whichever endpoint was added to the tree later;
    // everything produced afterwards lies strictly earlier in the order.
    let mut front = vec![x];
    let mut back = vec![z];
    loop {
        let a = *front.last().unwrap();
        let b = *back.last().unwrap();
        if cm.is_seed(a) && cm.is_seed(b) {
            break;
        }
        let from_front = cm.position(a) > cm.position(b);
        let (cur, other) = if from_front { (a, b) } else { (b, a) };
        let Some(next) = cm.witness_of_color(cur, c) else {
            return Err(Error::Invariant(format!(
                "vertex {cur} has no witness of color {c}"
            )));
        };
        if next == other {
            break;
        }
        if from_front {
            front.push(next);
        } else {
            back.push(next);
        }
    }
    front.extend(back.into_iter().rev());
    if let Err(msg) = check_colored_walk(tree, cm, &front, x, z, c) {
        return Err(Error::Invariant(format!("colored walk {x}->{z} (color {c}): {msg}")));
    }
    Ok(front)
}

pub fn check_colored_walk(
    tree: &Tree,
    cm: &ColorMap,
    walk: &[usize],
    x: usize,
    z: usize,
    c: usize,
) -> std::result::Result<(), String> {
    let t = cm.colors;
    if walk.len() < 2 || walk[0] != x || walk[walk.len() - 1] != z {
        return Err(format!("walk {walk:?} does not run from {x} to {z}"));
    }
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    if distinct.len() != walk.len() {
        return Err(format!("walk {walk:?} repeats a vertex"));
    }
    for pair in walk.windows(2) {
        if tree.distance(pair[0], pair[1]) > t {
            return Err(format!("hop {}->{} exceeds {t}", pair[0], pair[1]));
        }
    }
    if let Some(&y) = walk[1..walk.len() - 1].iter().find(|&&y| cm.color(y) != c) {
        return Err(format!("interior vertex {y} has color {}", cm.color(y)));
    }
    if cm.color(x) != c && tree.distance(x, walk[1]) + 1 > t {
        return Err(format!("first hop from {x} exceeds {}", t - 1));
    }
    if cm.color(z) != c && tree.distance(walk[walk.len() - 2], z) + 1 > t {
        return Err(format!("last hop into {z} exceeds {}", t - 1));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_tree, rng};
    use crate::graph::Graph;
    use rand::Rng;

    fn tree(g: Graph) -> Tree {
        Tree::from_graph(g, 0).unwrap()
    }

    #[test]
    fn one_color() {
        let t = tree(random_tree(9, 4));
        let cm = build_color_map(&t, 1).unwrap();
        assert!(t.members().iter().all(|&v| cm.color(v) == 1));
        check_color_map(&t, &cm).unwrap();
    }

    #[test]
    fn as_many_colors_as_vertices() {
        let t = tree(Graph::path(6));
        let cm = build_color_map(&t, 6).unwrap();
        let colors: BTreeSet<usize> = (0..6).map(|v| cm.color(v)).collect();
        assert_eq!(colors.len(), 6);
        check_color_map(&t, &cm).unwrap();
        assert!(build_color_map(&t, 7).is_err());
        assert!(build_color_map(&t, 0).is_err());
    }

    #[test]
    fn maps_satisfy_both_conditions() {
        for seed in 0..150u64 {
            let n = 1 + (seed as usize * 7) % 50;
            let t = tree(random_tree(n, seed));
            for colors in 1..=9.min(n) {
                let cm = build_color_map(&t, colors).unwrap();
                check_color_map(&t, &cm).unwrap_or_else(|e| panic!("seed {seed} t {colors}: {e}"));
                assert_eq!(cm, build_color_map(&t, colors).unwrap());
            }
        }
    }

    #[test]
    fn trivial_walks() {
        let t = tree(Graph::path(5));
        let cm = build_color_map(&t, 5).unwrap();
        // every pair within distance 4 = t - 1: direct hop
        assert_eq!(colored_walk(&t, &cm, 0, 4, 2).unwrap(), vec![0, 4]);
        assert!(colored_walk(&t, &cm, 1, 1, 1).is_err());
        assert!(colored_walk(&t, &cm, 0, 1, 6).is_err());
    }

    #[test]
    fn sampled_walks_pass_checker() {
        let mut r = rng(77);
        for seed in 0..80u64 {
            let n = 2 + (seed as usize * 5) % 39;
            let t = tree(random_tree(n, 500 + seed));
            for colors in 1..=7.min(n) {
                let cm = build_color_map(&t, colors).unwrap();
                for _ in 0..30 {
                    let x = r.gen_range(0..n);
                    let z = r.gen_range(0..n);
                    if x == z {
                        continue;
                    }
                    let c = r.gen_range(1..=colors);
                    let w = colored_walk(&t, &cm, x, z, c).unwrap();
                    check_colored_walk(&t, &cm, &w, x, z, c).unwrap();
                }
            }
        }
    }
}
