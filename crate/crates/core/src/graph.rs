//! Immutable simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks every member is below `n`.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::OutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Relates the vertices of an induced subgraph to those of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    to_parent: Vec<usize>,
}

impl VertexMap {
    /// Parent vertex of subgraph vertex `v`.
    pub fn parent(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    /// Subgraph vertex of parent vertex `v`, if it was kept.
    pub fn child(&self, v: usize) -> Option<usize> {
        self.to_parent.binary_search(&v).ok()
    }

    pub fn parents(&self) -> &[usize] {
        &self.to_parent
    }

    pub fn lift_all(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.to_parent[v]).collect()
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("valid bipartite graph")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    /// `count` disjoint copies of `self`.
    pub fn copies(&self, count: usize) -> Graph {
        (0..count).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&u| set.contains(u)).count()
    }

    /// Induced subgraph on `keep` together with the vertex correspondence.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        keep.check_range(self.order())?;
        let map = VertexMap { to_parent: keep.as_slice().to_vec() };
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|v| self.adj[v].iter().filter_map(|&u| map.child(u)).collect())
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((Graph { adj, m }, map))
    }

    /// `G - removed`, as an induced subgraph on the remaining vertices.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<(Graph, VertexMap), GraphError> {
        removed.check_range(self.order())?;
        self.induced_subgraph(&VertexSet::full(self.order()).difference(removed))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Components of `G - removed`, in parent labels.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut part = Vec::new();
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(VertexSet(part));
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Disjoint union; `other` is shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|ns| ns.iter().map(|&u| u + shift).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.order(), other.order());
        let mut adj = Vec::with_capacity(a + b);
        for ns in &self.adj {
            let mut list = ns.clone();
            list.extend(a..a + b);
            adj.push(list);
        }
        for ns in &other.adj {
            let mut list: Vec<usize> = (0..a).collect();
            list.extend(ns.iter().map(|&u| u + a));
            adj.push(list);
        }
        Graph { adj, m: self.m + other.m + a * b }
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Graph with the same vertex set and the given extra edges.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.order(), self.edges().chain(extra))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::complete(1).join(&Graph::complete(2).copies(2))
    }

    #[test]
    fn build_examples() {
        let g = Graph::new(0, []).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.size(), 0);

        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let chord = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let degrees: Vec<usize> = chord.vertices().map(|v| chord.degree(v)).collect();
        assert_eq!(degrees, vec![3, 2, 3, 2, 2]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::OutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, _) = Graph::complete(5).induced_subgraph(&VertexSet::from([0, 2, 4])).unwrap();
        assert_eq!(k3, Graph::complete(3));

        let (p3, map) = Graph::cycle(5).induced_subgraph(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(map.parent(2), 2);

        let (e, _) = Graph::petersen().induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.order(), 0);

        assert!(Graph::cycle(5).induced_subgraph(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::cycle(5).components().len(), 1);
        let two_k4 = Graph::complete(4).copies(2);
        let parts = two_k4.components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.len() == 4));
        assert_eq!(parts[0].first(), Some(0));

        let parts = bowtie().components_avoiding(&VertexSet::from([0]));
        assert_eq!(parts, vec![VertexSet::from([1, 2]), VertexSet::from([3, 4])]);
    }

    #[test]
    fn join_examples() {
        let wheel = Graph::complete(1).join(&Graph::cycle(4));
        assert_eq!(wheel.degree(0), 4);
        assert_eq!(wheel.size(), 8);

        let b = bowtie();
        assert_eq!(b.order(), 5);
        assert_eq!(b.size(), 6);
        assert_eq!(b.degree(0), 4);

        assert_eq!(Graph::empty(0).join(&Graph::complete(2)), Graph::complete(2));
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.size(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn complement_involution() {
        let p = Graph::petersen();
        assert_eq!(p.complement().complement(), p);
        assert_eq!(p.complement().size(), 45 - 15);
    }
}
