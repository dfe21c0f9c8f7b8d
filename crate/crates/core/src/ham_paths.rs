//! Hamiltonian paths in cubes of trees.
//!
//! [`ham_path_cube`] splits the tree along the first edge of the `v1`–`v2`
//! path and recurses into both sides; the two partial paths are joined by a
//! hop of tree distance at most 3. [`ham_path_minus_root`] strings such paths
//! together over the components left after deleting one vertex.

use crate::error::{invariant, Error, Result};
use crate::graph::Tree;

/// Hamiltonian path of `t³` from `v1` to `v2` over the members of `t`.
pub fn ham_path_cube(t: &Tree, v1: usize, v2: usize) -> Result<Vec<usize>> {
    for v in [v1, v2] {
        if !t.contains(v) {
            return Err(Error::InvalidInput(format!("vertex {v} is not in the tree")));
        }
    }
    if t.len() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            found: t.len(),
        });
    }
    if v1 == v2 {
        return Err(Error::InvalidInput(
            "a Hamiltonian path on two or more vertices needs distinct endpoints".into(),
        ));
    }
    Ok(cube_path_over(t, t.members(), v1, v2))
}

/// Same construction restricted to a connected set of members. A one-vertex
/// set yields the one-vertex ("empty") path.
pub(crate) fn cube_path_over(t: &Tree, members: &[usize], v1: usize, v2: usize) -> Vec<usize> {
    const OUTSIDE: usize = usize::MAX;
    let mut region = vec![OUTSIDE; t.universe()];
    for &v in members {
        region[v] = 0;
    }
    let mut next_region = 1;
    let mut out = Vec::with_capacity(members.len());
    // (region id, region size, start, end); popped in output order
    let mut stack = vec![(0usize, members.len(), v1, v2)];
    let mut buf = Vec::new();
    while let Some((id, size, start, end)) = stack.pop() {
        if size == 1 {
            debug_assert_eq!(start, end);
            out.push(start);
            continue;
        }
        // first edge (start, w2) on the start-end path
        let w2 = next_on_path(t, start, end);

        let side1 = next_region;
        let side2 = next_region + 1;
        next_region += 2;
        let size1 = relabel(t, &mut region, &mut buf, start, id, side1, w2);
        let size2 = size - size1;
        relabel(t, &mut region, &mut buf, w2, id, side2, start);

        let lowest_neighbor = |v: usize, side: usize, region: &[usize]| {
            t.neighbors(v)
                .iter()
                .copied()
                .find(|&w| region[w] == side)
                .expect("side with two or more vertices has a neighbor")
        };
        // w1 = start, so u1 is a neighbor of start unless its side is trivial
        let u1 = if size1 > 1 {
            lowest_neighbor(start, side1, &region)
        } else {
            start
        };
        let u2 = if w2 != end || size2 == 1 {
            w2
        } else {
            lowest_neighbor(w2, side2, &region)
        };
        stack.push((side2, size2, u2, end));
        stack.push((side1, size1, start, u1));
    }
    out
}

fn next_on_path(t: &Tree, start: usize, end: usize) -> usize {
    let d = t.distance(start, end);
    t.neighbors(start)
        .iter()
        .copied()
        .find(|&w| t.distance(w, end) + 1 == d)
        .expect("start and end are connected")
}

/// Moves the part of region `from` reachable from `seed` without crossing
/// `avoid` into region `to`; returns its size.
fn relabel(
    t: &Tree,
    region: &mut [usize],
    buf: &mut Vec<usize>,
    seed: usize,
    from: usize,
    to: usize,
    avoid: usize,
) -> usize {
    buf.clear();
    buf.push(seed);
    region[seed] = to;
    let mut i = 0;
    while i < buf.len() {
        let u = buf[i];
        i += 1;
        for &w in t.neighbors(u) {
            if w != avoid && region[w] == from {
                region[w] = to;
                buf.push(w);
            }
        }
    }
    buf.len()
}

/// A Hamiltonian path of `W³ − removed` with its two endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedPath {
    pub path: Vec<usize>,
    /// First vertex; adjacent to the removed vertex.
    pub first: usize,
    /// Last vertex; within distance 2 of the removed vertex.
    pub last: usize,
}

/// Hamiltonian path through all members of `w` except `removed`. The
/// components of `w − removed` are visited in ascending order of their
/// smallest vertex, each entered at the neighbor of `removed`.
pub fn ham_path_minus_root(w: &Tree, removed: usize) -> Result<PuncturedPath> {
    if !w.contains(removed) {
        return Err(Error::InvalidInput(format!("vertex {removed} is not in the tree")));
    }
    if w.len() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            found: w.len(),
        });
    }
    let mut components: Vec<(usize, Vec<usize>)> = w
        .neighbors(removed)
        .iter()
        .map(|&c| (c, w.component_avoiding(c, |x| x == removed)))
        .collect();
    components.sort_by_key(|(_, comp)| comp[0]);

    let mut path = Vec::with_capacity(w.len() - 1);
    for (entry, comp) in &components {
        let exit = if comp.len() == 1 {
            *entry
        } else {
            *w.neighbors(*entry)
                .iter()
                .find(|&&x| x != removed)
                .expect("component with two or more vertices")
        };
        let segment = cube_path_over(w, comp, *entry, exit);
        if let (Some(&prev), Some(&next)) = (path.last(), segment.first()) {
            invariant!(
                w.distance(prev, next) <= 3,
                "component boundary hop {prev}->{next} exceeds distance 3"
            );
        }
        path.extend(segment);
    }
    let first = path[0];
    let last = *path.last().expect("nonempty");
    Ok(PuncturedPath { path, first, last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::random_tree;
    use crate::graph::{DistanceTable, Graph};

    fn tree(g: Graph) -> Tree {
        Tree::from_graph(g, 0).unwrap()
    }

    /// Independent check against BFS distances of the tree graph.
    fn check_cube_path(g: &Graph, path: &[usize], expected: &[usize]) {
        let dist = DistanceTable::new(g);
        let mut sorted = path.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, expected, "not a permutation: {path:?}");
        for pair in path.windows(2) {
            assert!(dist.get(pair[0], pair[1]) <= 3, "long hop in {path:?}");
        }
    }

    #[test]
    fn small_examples() {
        let t = tree(Graph::path(2));
        assert_eq!(ham_path_cube(&t, 0, 1).unwrap(), vec![0, 1]);
        let t = tree(Graph::path(3));
        assert_eq!(ham_path_cube(&t, 0, 1).unwrap(), vec![0, 2, 1]);
        assert!(ham_path_cube(&t, 1, 1).is_err());
        let single = tree(Graph::empty(1));
        assert!(ham_path_cube(&single, 0, 0).is_err());
    }

    #[test]
    fn all_endpoint_pairs_on_random_trees() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 9);
            let g = random_tree(n, seed);
            let t = tree(g.clone());
            let all: Vec<usize> = (0..n).collect();
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let p = ham_path_cube(&t, a, b).unwrap();
                    assert_eq!((p[0], *p.last().unwrap()), (a, b));
                    check_cube_path(&g, &p, &all);
                }
            }
        }
    }

    #[test]
    fn punctured_examples() {
        let t = tree(Graph::path(2));
        let r = ham_path_minus_root(&t, 0).unwrap();
        assert_eq!(r, PuncturedPath { path: vec![1], first: 1, last: 1 });
        let star = tree(Graph::star(4));
        let r = ham_path_minus_root(&star, 0).unwrap();
        assert_eq!(r.path, vec![1, 2, 3]);
        assert!(ham_path_minus_root(&tree(Graph::empty(1)), 0).is_err());
    }

    #[test]
    fn punctured_on_random_trees() {
        for seed in 0..60 {
            let n = 2 + (seed as usize % 11);
            let g = random_tree(n, 1000 + seed);
            let t = tree(g.clone());
            let dist = DistanceTable::new(&g);
            for removed in 0..n {
                let r = ham_path_minus_root(&t, removed).unwrap();
                let expected: Vec<usize> = (0..n).filter(|&v| v != removed).collect();
                check_cube_path(&g, &r.path, &expected);
                assert_eq!(dist.get(removed, r.first), 1);
                assert!(dist.get(removed, r.last) <= 2);
            }
        }
    }
}
