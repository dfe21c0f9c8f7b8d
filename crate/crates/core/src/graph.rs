//! Simple undirected graphs, rooted trees, hop distances and graph powers.
//!
//! Vertices are dense indices `0..n`. A [`Tree`] lives inside a vertex
//! universe `0..n` and may cover only part of it; this lets Steiner subtrees
//! and hanging components keep the vertex ids of the tree they came from.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Distance sentinel for vertices in a different component.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle `0-1-..-(n-1)-0`. For `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Star with center 0 and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        bfs_from(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    pub(crate) fn check(&self, v: usize) -> Result<()> {
        check_vertex(v, self.n())
    }
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

fn bfs_from(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `source`; [`UNREACHABLE`] for other components.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>> {
    g.check(source)?;
    Ok(bfs_from(g, source))
}

/// All-pairs hop distances, one BFS per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<usize>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        Self::with_exec(g, Exec::default())
    }

    pub fn with_exec(g: &Graph, exec: Exec) -> Self {
        let n = g.n();
        let rows = par::map_range(exec, n, |s| bfs_from(g, s));
        DistanceTable {
            n,
            dist: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// The `p`-th power: same vertices, `u ~ v` iff `1 <= d(u, v) <= p`.
pub fn power(g: &Graph, p: usize) -> Result<Graph> {
    power_with(g, p, Exec::default())
}

pub fn power_with(g: &Graph, p: usize, exec: Exec) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidPower(p));
    }
    let adj = par::map_range(exec, g.n(), |s| {
        bfs_from(g, s)
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d != 0 && d <= p)
            .map(|(v, _)| v)
            .collect::<Vec<_>>()
    });
    Ok(Graph { adj })
}

/// A tree spanning a connected subset of the vertex universe of a graph.
///
/// Vertices outside the member set are isolated in [`Tree::graph`] and have
/// no parent. Distances between members equal distances in any larger tree
/// containing this one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    members: Vec<usize>,
    in_tree: Vec<bool>,
    root: usize,
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl Tree {
    /// Interprets a whole graph as a tree rooted at `root`.
    pub fn from_graph(graph: Graph, root: usize) -> Result<Self> {
        graph.check(root)?;
        let n = graph.n();
        if graph.edge_count() + 1 != n {
            return Err(Error::InvalidInput(format!(
                "a tree on {n} vertices needs {} edges, found {}",
                n - 1,
                graph.edge_count()
            )));
        }
        Self::rooted(graph, (0..n).collect(), root)
    }

    /// Builds the rooted structure; `graph` must be a forest whose component
    /// containing `root` is exactly `members`.
    fn rooted(graph: Graph, members: Vec<usize>, root: usize) -> Result<Self> {
        let n = graph.n();
        let mut parent = vec![UNREACHABLE; n];
        let mut depth = vec![UNREACHABLE; n];
        let mut in_tree = vec![false; n];
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        depth[root] = 0;
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            in_tree[u] = true;
            for &w in graph.neighbors(u) {
                if w == parent[u] {
                    continue;
                }
                if depth[w] != UNREACHABLE {
                    return Err(Error::InvalidInput("edge set contains a cycle".into()));
                }
                parent[w] = u;
                depth[w] = depth[u] + 1;
                seen += 1;
                queue.push_back(w);
            }
        }
        if seen != members.len() || members.iter().any(|&v| !in_tree[v]) {
            return Err(Error::Disconnected);
        }
        Ok(Tree {
            graph,
            members,
            in_tree,
            root,
            parent,
            depth,
        })
    }

    /// The subtree induced by `members`, which must be connected in `self`.
    pub fn subtree(&self, members: &[usize], root: usize) -> Result<Tree> {
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.universe();
        let mut mask = vec![false; n];
        for &v in members {
            check_vertex(v, n)?;
            if !self.in_tree[v] {
                return Err(Error::InvalidInput(format!("vertex {v} is not in the tree")));
            }
            mask[v] = true;
        }
        if !mask[root] {
            return Err(Error::InvalidInput(format!("root {root} not among members")));
        }
        let edges = members.iter().flat_map(|&u| {
            let mask = &mask;
            self.graph
                .neighbors(u)
                .iter()
                .copied()
                .filter(move |&w| u < w && mask[w])
                .map(move |w| (u, w))
        });
        let graph = Graph::from_edges(n, edges)?;
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Self::rooted(graph, sorted, root)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Size of the vertex universe (not the member count).
    pub fn universe(&self) -> usize {
        self.graph.n()
    }

    /// Number of member vertices.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member vertices in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.in_tree.len() && self.in_tree[v]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent of `v`; the root maps to itself, non-members to [`UNREACHABLE`].
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.contains(v) && (self.len() == 1 || self.degree(v) == 1)
    }

    fn check_member(&self, v: usize) -> Result<()> {
        check_vertex(v, self.universe())?;
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("vertex {v} is not in the tree")))
        }
    }

    /// Tree distance between two members.
    pub fn distance(&self, mut u: usize, mut v: usize) -> usize {
        debug_assert!(self.contains(u) && self.contains(v));
        let mut d = 0;
        while self.depth[u] > self.depth[v] {
            u = self.parent[u];
            d += 1;
        }
        while self.depth[v] > self.depth[u] {
            v = self.parent[v];
            d += 1;
        }
        while u != v {
            u = self.parent[u];
            v = self.parent[v];
            d += 2;
        }
        d
    }

    /// Whether `y` lies on the tree path from `u` to `v` (endpoints included).
    pub fn on_path(&self, u: usize, v: usize, y: usize) -> bool {
        self.distance(u, y) + self.distance(y, v) == self.distance(u, v)
    }

    /// The unique path from `u` to `v`, both inclusive.
    pub fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_member(u)?;
        self.check_member(v)?;
        let (mut a, mut b) = (u, v);
        let mut front = vec![a];
        let mut back = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a];
            front.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b];
            back.push(b);
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
            front.push(a);
            back.push(b);
        }
        back.pop();
        front.extend(back.into_iter().rev());
        Ok(front)
    }

    /// Degree-one members; a single-vertex tree reports its only vertex.
    pub fn leaves(&self) -> Vec<usize> {
        if self.len() == 1 {
            return vec![self.root];
        }
        self.members
            .iter()
            .copied()
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// Members reachable from `start` without entering `blocked` vertices,
    /// in ascending order.
    pub(crate) fn component_avoiding(
        &self,
        start: usize,
        blocked: impl Fn(usize) -> bool,
    ) -> Vec<usize> {
        let mut seen = vec![false; self.universe()];
        let mut out = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < out.len() {
            let u = out[i];
            i += 1;
            for &w in self.neighbors(u) {
                if !seen[w] && !blocked(w) {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Members in BFS order from the root, neighbors ascending.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in self.neighbors(u) {
                if self.parent[w] == u && w != u {
                    queue.push_back(w);
                }
            }
        }
        order
    }
}

/// BFS spanning tree from vertex 0, neighbors visited in ascending order.
pub fn spanning_tree(g: &Graph) -> Result<Tree> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    let n = g.n();
    let mut visited = vec![false; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut queue = VecDeque::from([0]);
    visited[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !visited[w] {
                visited[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    if visited.iter().any(|&seen| !seen) {
        return Err(Error::Disconnected);
    }
    Tree::from_graph(Graph::from_edges(n, edges)?, 0)
}

/// Smallest subtree of `t` containing every vertex of `s`, rooted at the
/// smallest vertex of `s`.
pub fn steiner_subtree(t: &Tree, s: &[usize]) -> Result<Tree> {
    let Some(&root) = s.iter().min() else {
        return Err(Error::EmptySet);
    };
    let mut mask = vec![false; t.universe()];
    for &v in s {
        t.check_member(v)?;
        mask[v] = true;
    }
    for &v in s {
        for w in t.path(v, root)? {
            mask[w] = true;
        }
    }
    let members: Vec<usize> = (0..t.universe()).filter(|&v| mask[v]).collect();
    t.subtree(&members, root)
}

/// The unique `u`–`v` path in `t`.
pub fn tree_path(t: &Tree, u: usize, v: usize) -> Result<Vec<usize>> {
    t.path(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn bfs_on_path_and_disconnected() {
        let p3 = Graph::path(3);
        assert_eq!(bfs_distances(&p3, 0).unwrap(), vec![0, 1, 2]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&two, 0).unwrap();
        assert_eq!(d[0], 0);
        assert_eq!(d[2], UNREACHABLE);
        assert!(matches!(
            bfs_distances(&p3, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn power_examples() {
        let k4 = power(&Graph::path(4), 3).unwrap();
        assert_eq!(k4, Graph::complete(4));
        let g = Graph::cycle(7);
        assert_eq!(power(&g, 1).unwrap(), g);
        let c6 = power(&Graph::cycle(6), 2).unwrap();
        assert!((0..6).all(|v| c6.degree(v) == 4));
        assert_eq!(power(&g, 0), Err(Error::InvalidPower(0)));
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn spanning_tree_examples() {
        let t = spanning_tree(&Graph::path(5)).unwrap();
        assert_eq!(sorted_edges(t.graph()), sorted_edges(&Graph::path(5)));
        // C4: BFS from 0 takes 0-1, 0-3, then 1-2.
        let c4 = spanning_tree(&Graph::cycle(4)).unwrap();
        assert_eq!(sorted_edges(c4.graph()), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(c4.parents(), &[0, 0, 1, 0]);
        let k3 = spanning_tree(&Graph::complete(3)).unwrap();
        assert_eq!(sorted_edges(k3.graph()), vec![(0, 1), (0, 2)]);
        let disc = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree(&disc), Err(Error::Disconnected));
    }

    #[test]
    fn steiner_examples() {
        let t = Tree::from_graph(Graph::star(4), 0).unwrap();
        let all = steiner_subtree(&t, &[0, 1, 2, 3]).unwrap();
        assert_eq!(all.members(), t.members());
        let one = steiner_subtree(&t, &[2]).unwrap();
        assert_eq!(one.members(), &[2]);
        assert_eq!(one.leaves(), vec![2]);
        let ab = steiner_subtree(&t, &[1, 2]).unwrap();
        assert_eq!(ab.members(), &[0, 1, 2]);
        assert_eq!(ab.path(1, 2).unwrap(), vec![1, 0, 2]);
        assert_eq!(steiner_subtree(&t, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn tree_path_and_leaves() {
        let p = Tree::from_graph(Graph::path(4), 0).unwrap();
        assert_eq!(tree_path(&p, 2, 2).unwrap(), vec![2]);
        assert_eq!(tree_path(&p, 0, 3).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(tree_path(&p, 3, 1).unwrap(), vec![3, 2, 1]);
        assert_eq!(p.leaves(), vec![0, 3]);
        let star = Tree::from_graph(Graph::from_edges(4, [(1, 0), (1, 2), (1, 3)]).unwrap(), 0).unwrap();
        assert_eq!(tree_path(&star, 0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(star.leaves(), vec![0, 2, 3]);
        let two = Tree::from_graph(Graph::path(2), 1).unwrap();
        assert_eq!(two.leaves(), vec![0, 1]);
    }

    #[test]
    fn tree_rejects_non_trees() {
        assert!(Tree::from_graph(Graph::cycle(4), 0).is_err());
        let forest = Graph::from_edges(4, [(0, 1), (2, 3), (2, 3)]).unwrap();
        assert!(Tree::from_graph(forest, 0).is_err());
    }
}
