//! 2-factors: representation, verification, the gadget reduction to perfect
//! matching, and an exhaustive minimum-cycle search.

use serde::{Deserialize, Serialize};

use crate::bits::{adjacency_masks, count_components, full_mask, mask_iter};
use crate::error::{check_bound, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::maximum_matching;

/// Default vertex ceiling for the exhaustive minimum-cycle search.
pub const DEFAULT_ORACLE_BOUND: usize = 16;

/// Vertex-disjoint cycles; each cycle is stored in traversal order, which
/// also fixes its orientation (`v⁺` is the next entry, cyclically).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoFactor {
    pub cycles: Vec<Vec<usize>>,
}

impl TwoFactor {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        TwoFactor { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Vertices covered by the cycles.
    pub fn covered(&self) -> VertexSet {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Unordered edges `(u, v)` with `u < v`, sorted.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .cycles
            .iter()
            .flat_map(|c| {
                (0..c.len()).map(move |i| {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Checks that the cycles form a 2-factor of `G[vertices]`.
    pub fn verify_on(&self, g: &Graph, vertices: &VertexSet) -> bool {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n || seen[v] || !vertices.contains(v) {
                    return false;
                }
                seen[v] = true;
                count += 1;
                if !g.has_edge(v, cycle[(i + 1) % cycle.len()]) {
                    return false;
                }
            }
        }
        count == vertices.len()
    }

    /// Decomposes a 2-regular edge set into cycles: each cycle starts at its
    /// smallest vertex and first steps to the smaller of its two neighbors;
    /// cycles are listed by starting vertex.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Option<TwoFactor> {
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return None;
            }
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        if nbrs.iter().any(|l| !l.is_empty() && l.len() != 2) {
            return None;
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || nbrs[start].is_empty() {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut prev = start;
            let mut cur = nbrs[start][0].min(nbrs[start][1]);
            while cur != start {
                if seen[cur] {
                    return None;
                }
                seen[cur] = true;
                cycle.push(cur);
                let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
                prev = cur;
                cur = next;
            }
            if cycle.len() < 3 {
                return None;
            }
            cycles.push(cycle);
        }
        Some(TwoFactor { cycles })
    }

    /// The same cycles in canonical form (see [`TwoFactor::from_edges`]).
    pub fn canonical(&self, n: usize) -> Option<TwoFactor> {
        TwoFactor::from_edges(n, &self.edge_set())
    }

    /// Lifts subgraph labels to parent labels.
    pub fn lift(&self, to_parent: &[usize]) -> TwoFactor {
        TwoFactor {
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&v| to_parent[v]).collect())
                .collect(),
        }
    }
}

/// True iff `f` is a 2-factor of `g`.
pub fn verify_two_factor(g: &Graph, f: &TwoFactor) -> bool {
    f.verify_on(g, &VertexSet::full(g.order()))
}

/// The gadget graph reducing "has a 2-factor" to "has a perfect matching".
///
/// A vertex `v` of degree `d` becomes `d` edge-end nodes (one per incident
/// edge, in neighbor order) and `d - 2` core nodes, complete bipartite
/// between the two groups; each edge `uv` becomes one edge between its two
/// edge-end nodes.
#[derive(Clone, Debug)]
pub struct TutteGadget {
    pub graph: Graph,
    /// `ends[v][i]` is the node for the edge from `v` to its `i`-th neighbor.
    pub ends: Vec<Vec<usize>>,
    pub cores: Vec<Vec<usize>>,
    /// Vertices of degree below 2; when nonempty the gadget certifies nothing
    /// and the graph has no 2-factor.
    pub deficient: Vec<usize>,
}

impl TutteGadget {
    /// The original edge represented by a gadget edge between two edge-end
    /// nodes, if that is what `(a, b)` is.
    pub fn original_edge(&self, g: &Graph, a: usize, b: usize) -> Option<(usize, usize)> {
        let locate = |x: usize| {
            self.ends.iter().enumerate().find_map(|(v, ends)| {
                ends.iter().position(|&e| e == x).map(|i| (v, g.neighbors(v)[i]))
            })
        };
        let (u, nu) = locate(a)?;
        let (v, nv) = locate(b)?;
        (nu == v && nv == u).then(|| (u.min(v), u.max(v)))
    }
}

pub fn tutte_gadget(g: &Graph) -> TutteGadget {
    let mut next = 0;
    let mut ends = Vec::with_capacity(g.order());
    let mut cores = Vec::with_capacity(g.order());
    let mut deficient = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 2 {
            deficient.push(v);
        }
        let e: Vec<usize> = (next..next + d).collect();
        next += d;
        let c: Vec<usize> = (next..next + d.saturating_sub(2)).collect();
        next += c.len();
        ends.push(e);
        cores.push(c);
    }
    let mut edges = Vec::new();
    for v in g.vertices() {
        for &e in &ends[v] {
            edges.extend(cores[v].iter().map(|&c| (e, c)));
        }
        for (i, &u) in g.neighbors(v).iter().enumerate() {
            if u > v {
                let j = g.neighbors(u).binary_search(&v).expect("symmetric adjacency");
                edges.push((ends[v][i], ends[u][j]));
            }
        }
    }
    let graph = Graph::new(next, edges).expect("gadget edges are valid");
    TutteGadget { graph, ends, cores, deficient }
}

/// Finds a 2-factor through the gadget and maximum matching.
pub fn find_two_factor(g: &Graph) -> Result<Option<TwoFactor>> {
    if g.order() == 0 {
        return Ok(Some(TwoFactor::default()));
    }
    let gadget = tutte_gadget(g);
    if !gadget.deficient.is_empty() {
        return Ok(None);
    }
    let matching = maximum_matching(&gadget.graph);
    if 2 * matching.len() != gadget.graph.order() {
        return Ok(None);
    }
    let mate = matching.mate_of(gadget.graph.order());
    let mut selected = Vec::new();
    for v in g.vertices() {
        for (i, &u) in g.neighbors(v).iter().enumerate() {
            if u < v {
                continue;
            }
            let j = g.neighbors(u).binary_search(&v).expect("symmetric adjacency");
            if mate[gadget.ends[v][i]] == Some(gadget.ends[u][j]) {
                selected.push((v, u));
            }
        }
    }
    let factor = TwoFactor::from_edges(g.order(), &selected)
        .ok_or_else(|| Error::Internal("gadget matching is not 2-regular".into()))?;
    if !verify_two_factor(g, &factor) {
        return Err(Error::Internal("extracted 2-factor does not verify".into()));
    }
    Ok(Some(factor))
}

struct CoverSearch {
    adj: Vec<u64>,
    best: Option<(usize, Vec<Vec<usize>>)>,
    chosen: Vec<Vec<usize>>,
}

impl CoverSearch {
    fn bound(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |(b, _)| *b)
    }

    /// Covers `free` with cycles; the smallest free vertex anchors the next
    /// cycle.
    fn cover(&mut self, free: u64) {
        if free == 0 {
            if self.chosen.len() < self.bound() {
                self.best = Some((self.chosen.len(), self.chosen.clone()));
            }
            return;
        }
        // Every component of the free part needs its own cycle.
        if self.chosen.len() + count_components(&self.adj, free) >= self.bound() {
            return;
        }
        if mask_iter(free).any(|v| (self.adj[v] & free).count_ones() < 2) {
            return;
        }
        let root = free.trailing_zeros() as usize;
        let mut path = vec![root];
        self.extend(free, root, 1u64 << root, &mut path);
    }

    fn extend(&mut self, free: u64, root: usize, on_path: u64, path: &mut Vec<usize>) {
        let last = *path.last().expect("path is nonempty");
        let options = self.adj[last] & free & !on_path;
        // Close the cycle; `path[1] < last` keeps one orientation per cycle.
        if path.len() >= 3 && self.adj[last] >> root & 1 == 1 && path[1] < last {
            self.chosen.push(path.clone());
            self.cover(free & !on_path);
            self.chosen.pop();
        }
        for u in mask_iter(options) {
            // Only a strictly better cover matters.
            if self.chosen.len() + 1 >= self.bound() {
                return;
            }
            path.push(u);
            self.extend(free, root, on_path | 1 << u, path);
            path.pop();
        }
    }
}

/// A 2-factor with the fewest cycles, by exhaustive search; `Ok(None)` when
/// no 2-factor exists.
pub fn min_cycle_two_factor(g: &Graph, bound: usize) -> Result<Option<(TwoFactor, usize)>> {
    check_bound("min_cycle_two_factor", g.order(), bound.min(64))?;
    if g.order() == 0 {
        return Ok(Some((TwoFactor::default(), 0)));
    }
    let mut search = CoverSearch { adj: adjacency_masks(g), best: None, chosen: Vec::new() };
    search.cover(full_mask(g.order()));
    match search.best {
        None => Ok(None),
        Some((k, cycles)) => {
            let factor = TwoFactor::new(cycles)
                .canonical(g.order())
                .ok_or_else(|| Error::Internal("cycle cover is not 2-regular".into()))?;
            if !verify_two_factor(g, &factor) {
                return Err(Error::Internal("minimum cycle cover does not verify".into()));
            }
            Ok(Some((factor, k)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::complete(1).join(&Graph::complete(2).copies(2))
    }

    #[test]
    fn gadget_examples() {
        let c5 = Graph::cycle(5);
        let gadget = tutte_gadget(&c5);
        assert_eq!(gadget.graph.order(), 10);
        assert!(gadget.cores.iter().all(Vec::is_empty));
        assert_eq!(maximum_matching(&gadget.graph).len(), 5);

        let k4 = tutte_gadget(&Graph::complete(4));
        assert_eq!(k4.graph.order(), 16);
        assert_eq!(maximum_matching(&k4.graph).len(), 8);

        let b = tutte_gadget(&bowtie());
        assert!(b.deficient.is_empty());
        assert!(2 * maximum_matching(&b.graph).len() < b.graph.order());
    }

    #[test]
    fn gadget_size_formula() {
        let p = Graph::petersen();
        let gadget = tutte_gadget(&p);
        let expected: usize = p.vertices().map(|v| 2 * p.degree(v) - 2).sum();
        assert_eq!(gadget.graph.order(), expected);
        let (a, b) = (gadget.ends[0][0], gadget.ends[1][0]);
        assert_eq!(gadget.original_edge(&p, a, b), Some((0, 1)));
    }

    #[test]
    fn find_examples() {
        let c5 = Graph::cycle(5);
        let f = find_two_factor(&c5).unwrap().unwrap();
        assert_eq!(f.cycles, vec![vec![0, 1, 2, 3, 4]]);

        assert_eq!(find_two_factor(&bowtie()).unwrap(), None);

        let p = Graph::petersen();
        let f = find_two_factor(&p).unwrap().unwrap();
        assert!(verify_two_factor(&p, &f));
        // Petersen is non-Hamiltonian, so its 2-factors are two 5-cycles.
        assert_eq!(f.cycle_count(), 2);

        assert_eq!(find_two_factor(&Graph::path(4)).unwrap(), None);
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        assert!(verify_two_factor(&c5, &TwoFactor::new(vec![vec![0, 1, 2, 3, 4]])));
        assert!(!verify_two_factor(&c5, &TwoFactor::new(vec![vec![0, 1, 2]])));
        let k4 = Graph::complete(4);
        assert!(!verify_two_factor(&k4, &TwoFactor::new(vec![vec![0, 1], vec![2, 3]])));
        assert!(!verify_two_factor(&k4, &TwoFactor::new(vec![vec![0, 1, 2, 3], vec![0, 1, 2]])));
    }

    #[test]
    fn min_cycle_examples() {
        let (f, k) = min_cycle_two_factor(&Graph::cycle(5), 16).unwrap().unwrap();
        assert_eq!(k, 1);
        assert_eq!(f.cycles, vec![vec![0, 1, 2, 3, 4]]);

        let (f, k) = min_cycle_two_factor(&Graph::complete(4).copies(2), 16).unwrap().unwrap();
        assert_eq!(k, 2);
        assert!(f.cycles.iter().all(|c| c.len() == 4));

        assert_eq!(min_cycle_two_factor(&bowtie(), 16).unwrap(), None);
        assert!(matches!(
            min_cycle_two_factor(&Graph::complete(17), 16),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn canonical_decomposition() {
        let f = TwoFactor::from_edges(6, &[(3, 4), (4, 5), (5, 3), (0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(f.cycles, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(TwoFactor::from_edges(3, &[(0, 1), (1, 2)]).is_none());
    }
}
