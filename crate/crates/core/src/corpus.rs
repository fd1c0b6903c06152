//! Exhaustive small-graph corpora, one graph per isomorphism class.
//!
//! Graphs on `n` vertices are obtained from graphs on `n - 1` vertices by
//! adding a vertex of maximum degree. Duplicates are removed by bucketing on
//! a colour-refinement invariant and testing isomorphism within a bucket.

use std::collections::HashMap;

use crate::error::{check_bound, Result};
use crate::graph::Graph;

pub const MAX_CORPUS_ORDER: usize = 10;

/// Known class counts: all graphs on `n` vertices, and connected ones.
pub const ALL_GRAPH_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];
pub const CONNECTED_GRAPH_COUNTS: [usize; 11] = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

#[derive(Clone, Copy, PartialEq, Eq)]
struct Small {
    n: usize,
    adj: [u16; 16],
}

impl Small {
    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = ((1u32 << self.n) - 1) as u16;
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    fn to_graph(self) -> Graph {
        let edges = (0..self.n).flat_map(|u| (u + 1..self.n).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v)));
        Graph::new(self.n, edges).expect("valid small graph")
    }

    /// Stable refined colouring plus a key that is equal for isomorphic graphs.
    fn refine(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.n;
        let mut colour: Vec<u32> = (0..n)
            .map(|v| {
                let tri: u32 = (0..n).filter(|&u| self.adj[v] >> u & 1 == 1).map(|u| (self.adj[u] & self.adj[v]).count_ones()).sum();
                (self.degree(v) << 8) | (tri / 2)
            })
            .collect();
        let mut key = Vec::new();
        let mut classes = 0;
        loop {
            let sigs: Vec<Vec<u32>> = (0..n)
                .map(|v| {
                    let mut s: Vec<u32> = (0..n).filter(|&u| self.adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                    s.sort_unstable();
                    s.insert(0, colour[v]);
                    s
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            colour = sigs.iter().map(|s| distinct.binary_search(s).expect("present") as u32).collect();
            key.push(u32::MAX);
            for s in &distinct {
                key.extend(s);
                key.push(sigs.iter().filter(|t| *t == s).count() as u32);
                key.push(u32::MAX - 1);
            }
            if distinct.len() == classes {
                break;
            }
            classes = distinct.len();
        }
        (colour, key)
    }
}

fn isomorphic(a: &Small, ca: &[u32], b: &Small, cb: &[u32]) -> bool {
    if a.n != b.n {
        return false;
    }
    let n = a.n;
    let mut order: Vec<usize> = (0..n).collect();
    let class_size = |c: u32| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (class_size(ca[v]), ca[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u16;

    #[allow(clippy::too_many_arguments)]
    fn go(a: &Small, ca: &[u32], b: &Small, cb: &[u32], order: &[usize], i: usize, map: &mut [usize], used: &mut u16) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..a.n {
            if *used >> w & 1 == 1 || cb[w] != ca[v] {
                continue;
            }
            let consistent = order[..i].iter().all(|&u| (a.adj[v] >> u & 1) == (b.adj[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if go(a, ca, b, cb, order, i + 1, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }
    go(a, ca, b, cb, &order, 0, &mut map, &mut used)
}

struct Dedup {
    graphs: Vec<Small>,
    colours: Vec<Vec<u32>>,
    buckets: HashMap<Vec<u32>, Vec<usize>>,
}

impl Dedup {
    fn new() -> Self {
        Dedup { graphs: Vec::new(), colours: Vec::new(), buckets: HashMap::new() }
    }

    fn insert(&mut self, g: Small) {
        let (colour, key) = g.refine();
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&g, &colour, &self.graphs[i], &self.colours[i])) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        self.colours.push(colour);
    }
}

/// Children of `parents` with one more vertex of maximum degree.
fn extend(parents: &[Small], connected_only: bool) -> Vec<Small> {
    let mut dedup = Dedup::new();
    for p in parents {
        let n = p.n;
        for mask in 0u16..(1 << n) {
            let d = mask.count_ones();
            let ok = (0..n).all(|v| p.degree(v) + (mask >> v & 1) as u32 <= d);
            if !ok {
                continue;
            }
            let mut child = *p;
            child.n = n + 1;
            child.adj[n] = mask;
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    child.adj[v] |= 1 << n;
                }
            }
            if connected_only && !child.connected() {
                continue;
            }
            dedup.insert(child);
        }
    }
    dedup.graphs
}

fn all_small(n: usize) -> Vec<Small> {
    let mut level = vec![Small { n: 0, adj: [0; 16] }];
    for _ in 0..n {
        level = extend(&level, false);
    }
    level
}

/// Every graph on `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("corpus", n, MAX_CORPUS_ORDER - 1)?;
    Ok(all_small(n).into_iter().map(Small::to_graph).collect())
}

/// Every connected graph on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("corpus", n, MAX_CORPUS_ORDER)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    Ok(extend(&all_small(n - 1), true).into_iter().map(Small::to_graph).collect())
}
