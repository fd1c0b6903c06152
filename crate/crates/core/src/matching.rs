//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm with explicit base tracking, O(n^3)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges are in `g` and pairwise vertex-disjoint.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    pub fn mate_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in self.g.vertices() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut marked = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            marked[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if marked[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn solve(mut self) -> Vec<usize> {
        self.greedy();
        for v in self.g.vertices() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = Blossom::new(g).solve();
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &u)| u != NONE && v < u)
        .map(|(v, &u)| (v, u))
        .collect();
    Matching { edges }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * maximum_matching(g).len() == g.order()
}
