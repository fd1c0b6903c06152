//! Vertex connectivity through unit-capacity max-flow on the split graph.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

/// Residual network where vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`
/// joined by a unit arc; graph edges become infinite-capacity arc pairs.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

const INF: i32 = i32::MAX / 4;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * g.order()],
        };
        for v in g.vertices() {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, INF);
            net.arc(2 * v + 1, 2 * u, INF);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Max number of internally vertex-disjoint s-t paths, stopping once
    /// `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            pred[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && pred[y] == usize::MAX {
                        pred[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = pred[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Vertices whose split arc crosses the residual cut reachable from `s`.
    fn cut_vertices(&self, s: usize) -> VertexSet {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([2 * s + 1]);
        seen[2 * s + 1] = true;
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.adj.len() / 2)
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .collect()
    }
}

/// A minimum vertex cut, or `None` for complete graphs (no cut exists).
pub fn minimum_vertex_cut(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    let mut best: Option<(usize, VertexSet)> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |(k, _)| *k);
            let mut net = SplitNetwork::new(g);
            let k = net.max_flow(s, t, limit);
            if k < limit || best.is_none() {
                best = Some((k, net.cut_vertices(s)));
            }
        }
    }
    best.map(|(_, cut)| cut)
}

/// κ(G): `n - 1` for complete graphs, 0 for disconnected or trivial graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    match minimum_vertex_cut(g) {
        Some(cut) => cut.len(),
        None => n - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest vertex set whose removal disconnects `g`, by subset search.
    fn brute_force_connectivity(g: &Graph) -> usize {
        let n = g.order();
        if n <= 1 {
            return 0;
        }
        let mut best = n - 1;
        for mask in 0u32..(1 << n) {
            let removed: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if removed.len() >= best || n - removed.len() < 2 {
                continue;
            }
            if g.components_avoiding(&removed).len() > 1 {
                best = removed.len();
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        let bowtie = Graph::complete(1).join(&Graph::complete(2).copies(2));
        assert_eq!(vertex_connectivity(&bowtie), 1);
        assert_eq!(brute_force_connectivity(&bowtie), 1);
        assert_eq!(vertex_connectivity(&Graph::petersen()), 3);
        assert_eq!(brute_force_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::complete(3).copies(2)), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), 0);
    }

    #[test]
    fn cut_separates() {
        let g = Graph::petersen();
        let cut = minimum_vertex_cut(&g).unwrap();
        assert_eq!(cut.len(), 3);
        assert!(g.components_avoiding(&cut).len() > 1);
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.2..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let k = vertex_connectivity(&g);
            assert_eq!(k, brute_force_connectivity(&g), "{g:?}");
            if n > 0 {
                assert!(k <= g.min_degree().unwrap());
            }
        }
    }
}
