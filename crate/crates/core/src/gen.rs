//! Seeded graph generators and the `kind:args` spec strings used by the CLI.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn tree_from_pruefer(n: usize, code: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Ok(Graph::empty(n));
    }
    if code.len() != n - 2 {
        return Err(Error::InvalidInput(format!(
            "Prüfer code for {n} vertices must have length {}",
            n - 2
        )));
    }
    let mut degree = vec![1usize; n];
    for &c in code {
        if c >= n {
            return Err(Error::VertexOutOfRange { vertex: c, n });
        }
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    random_tree_with(n, &mut rng(seed))
}

pub fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(n, &code).expect("generated code is valid")
}

/// Random connected graph with exactly `m` edges: a random spanning tree
/// plus `m - (n - 1)` distinct extra edges.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    random_connected_with(n, m, &mut rng(seed))
}

pub fn random_connected_with<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max {
        return Err(Error::InvalidInput(format!(
            "cannot build a connected graph on {n} vertices with {m} edges"
        )));
    }
    let tree = random_tree_with(n, rng);
    let mut edges: HashSet<(usize, usize)> = tree.edges().collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    let extra = m - edges.len();
    edges.extend(missing.into_iter().take(extra));
    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    Graph::from_edges(n, list)
}

/// Random Hamiltonian graph: the cycle `0..n` plus `chords` random chords.
pub fn random_hamiltonian<R: Rng>(n: usize, chords: usize, rng: &mut R) -> Graph {
    let cycle = Graph::cycle(n);
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !cycle.has_edge(u, v))
        .collect();
    candidates.shuffle(rng);
    let edges = cycle.edges().chain(candidates.into_iter().take(chords));
    Graph::from_edges(n, edges).expect("valid edges")
}

/// `k` distinct vertices of `0..n` in random order.
pub fn random_anchors<R: Rng>(n: usize, k: usize, rng: &mut R) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

/// All labeled trees on `n` vertices up to isomorphism, one representative
/// per class (smallest Prüfer code first). Exponential; meant for n <= 9.
pub fn all_unlabeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let g = tree_from_pruefer(n, &code).expect("valid code");
        if seen.insert(canonical_tree_form(&g)) {
            out.push(g);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == code.len() {
                return out;
            }
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

/// Isomorphism-invariant encoding of a tree (AHU encoding rooted at the
/// center, taking the smaller encoding for bicentral trees).
pub fn canonical_tree_form(g: &Graph) -> String {
    let n = g.n();
    if n == 0 {
        return String::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode_rooted(g, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(g, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// A graph description such as `path:7` or `rand-conn:20:30:1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    RandTree { n: usize, seed: u64 },
    RandConn { n: usize, m: usize, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            GraphSpec::Path(n) => Graph::path(n),
            GraphSpec::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidInput("a cycle needs at least 3 vertices".into()));
                }
                Graph::cycle(n)
            }
            GraphSpec::Complete(n) => Graph::complete(n),
            GraphSpec::Star(n) => Graph::star(n),
            GraphSpec::RandTree { n, seed } => random_tree(n, seed),
            GraphSpec::RandConn { n, m, seed } => random_connected(n, m, seed)?,
        })
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| Error::Parse(format!("missing field {i} in generator spec {s:?}")))?
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad number in generator spec {s:?}: {e}")))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "generator spec {s:?} expects {} argument(s)",
                    k - 1
                )))
            }
        };
        match parts[0] {
            "path" => arity(2).and_then(|_| Ok(GraphSpec::Path(num(1)? as usize))),
            "cycle" => arity(2).and_then(|_| Ok(GraphSpec::Cycle(num(1)? as usize))),
            "complete" => arity(2).and_then(|_| Ok(GraphSpec::Complete(num(1)? as usize))),
            "star" => arity(2).and_then(|_| Ok(GraphSpec::Star(num(1)? as usize))),
            "rand-tree" => arity(3).and_then(|_| {
                Ok(GraphSpec::RandTree {
                    n: num(1)? as usize,
                    seed: num(2)?,
                })
            }),
            "rand-conn" => arity(4).and_then(|_| {
                Ok(GraphSpec::RandConn {
                    n: num(1)? as usize,
                    m: num(2)? as usize,
                    seed: num(3)?,
                })
            }),
            other => Err(Error::Parse(format!("unknown generator {other:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::RandTree { n, seed } => write!(f, "rand-tree:{n}:{seed}"),
            GraphSpec::RandConn { n, m, seed } => write!(f, "rand-conn:{n}:{m}:{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    #[test]
    fn pruefer_roundtrip_small() {
        // code [3, 3, 3] on 5 vertices: star centered at 3 plus edge to 4
        let g = tree_from_pruefer(5, &[3, 3, 3]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn random_trees_are_trees_and_seeded() {
        for n in 1..30 {
            let g = random_tree(n, n as u64);
            assert_eq!(g.edge_count() + 1, n.max(1));
            assert!(g.is_connected());
            assert_eq!(g, random_tree(n, n as u64));
        }
        assert!(Tree::from_graph(random_tree(12, 9), 0).is_ok());
    }

    #[test]
    fn random_connected_edge_count() {
        let g = random_connected(20, 30, 1).unwrap();
        assert_eq!(g.edge_count(), 30);
        assert!(g.is_connected());
        assert!(random_connected(5, 3, 0).is_err());
        assert!(random_connected(4, 7, 0).is_err());
    }

    #[test]
    fn unlabeled_tree_counts() {
        // OEIS A000055
        let counts: Vec<usize> = (1..=8).map(|n| all_unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("path:7".parse::<GraphSpec>().unwrap(), GraphSpec::Path(7));
        assert_eq!(
            "rand-conn:20:30:1".parse::<GraphSpec>().unwrap(),
            GraphSpec::RandConn { n: 20, m: 30, seed: 1 }
        );
        assert!("path".parse::<GraphSpec>().is_err());
        assert!("blob:3".parse::<GraphSpec>().is_err());
        assert!("rand-tree:3".parse::<GraphSpec>().is_err());
        let s: GraphSpec = "rand-tree:10:7".parse().unwrap();
        assert_eq!(s.to_string(), "rand-tree:10:7");
        assert_eq!(s.build().unwrap(), s.build().unwrap());
    }
}
