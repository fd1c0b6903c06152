//! Exact Hamiltonicity searches for the small components met by the
//! constructive routines.

use crate::bits::{adjacency_masks, flood, full_mask, mask_iter};
use crate::error::{check_bound, Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_HAMILTON_BOUND: usize = 24;

struct PathSearch<'a> {
    adj: &'a [u64],
    target: usize,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    /// `unvisited` excludes the current endpoint.
    fn go(&mut self, cur: usize, unvisited: u64) -> bool {
        if unvisited == 0 {
            return cur == self.target;
        }
        let t = self.target;
        if unvisited >> t & 1 == 0 {
            return false;
        }
        let avail = unvisited | 1 << cur;
        if flood(self.adj, cur, avail) != avail {
            return false;
        }
        // Vertices other than the target need two usable neighbors; a vertex
        // whose only spare neighbor is `cur` must come next.
        let mut forced = None;
        for u in mask_iter(unvisited) {
            let free = (self.adj[u] & avail).count_ones();
            let need = if u == t { 1 } else { 2 };
            if free < need {
                return false;
            }
            if u != t && free == 2 && self.adj[u] >> cur & 1 == 1 && (self.adj[u] & unvisited).count_ones() == 1 {
                if forced.is_some() {
                    return false;
                }
                forced = Some(u);
            }
        }
        let choices = match forced {
            Some(u) => 1 << u,
            None => self.adj[cur] & unvisited,
        };
        for next in mask_iter(choices) {
            if next == t && unvisited != 1 << t {
                continue;
            }
            self.path.push(next);
            if self.go(next, unvisited & !(1 << next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// A Hamilton path of `g` from `a` to `b` (`a != b`).
pub fn hamilton_path(g: &Graph, a: usize, b: usize, bound: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    check_bound("hamilton path", n, bound.min(64))?;
    if a >= n || b >= n || a == b {
        return Err(Error::Precondition(format!("endpoints {a}, {b} must be distinct vertices of a graph of order {n}")));
    }
    let adj = adjacency_masks(g);
    let mut search = PathSearch { adj: &adj, target: b, path: vec![a] };
    Ok(search.go(a, full_mask(n) & !(1 << a)).then_some(search.path))
}

/// A Hamilton cycle of `g`, starting at vertex 0; `None` for `n < 3`.
pub fn hamilton_cycle(g: &Graph, bound: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    check_bound("hamilton cycle", n, bound.min(64))?;
    if n < 3 || g.min_degree() < Some(2) {
        return Ok(None);
    }
    let adj = adjacency_masks(g);
    if flood(&adj, 0, full_mask(n)) != full_mask(n) {
        return Ok(None);
    }
    // Close through the largest neighbor of 0; every Hamilton cycle uses
    // some edge at 0, and fixing one keeps the search from revisiting
    // reversed cycles.
    for &w in g.neighbors(0).iter().rev() {
        let mut search = PathSearch { adj: &adj, target: w, path: vec![0] };
        if search.go(0, full_mask(n) & !1) {
            return Ok(Some(search.path));
        }
    }
    Ok(None)
}

/// Hamilton cycle of the subgraph induced by `keep`, in original labels.
pub fn hamilton_cycle_within(g: &Graph, keep: &VertexSet, bound: usize) -> Result<Option<Vec<usize>>> {
    let (h, map) = g.induced_subgraph(keep)?;
    Ok(hamilton_cycle(&h, bound)?.map(|c| map.lift_all(&c)))
}

/// Hamilton path of `G[keep]` between original vertices `a` and `b`.
pub fn hamilton_path_within(g: &Graph, keep: &VertexSet, a: usize, b: usize, bound: usize) -> Result<Option<Vec<usize>>> {
    let (h, map) = g.induced_subgraph(keep)?;
    let (Some(x), Some(y)) = (map.child(a), map.child(b)) else {
        return Err(Error::Precondition(format!("endpoints {a}, {b} must lie in {keep}")));
    };
    Ok(hamilton_path(&h, x, y, bound)?.map(|p| map.lift_all(&p)))
}

/// Every pair of distinct vertices is joined by a Hamilton path.
/// Graphs on at most one vertex qualify vacuously.
pub fn is_hamilton_connected(g: &Graph, bound: usize) -> Result<bool> {
    let n = g.order();
    check_bound("hamilton connectivity", n, bound.min(64))?;
    for a in 0..n {
        for b in a + 1..n {
            if hamilton_path(g, a, b, bound)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct LongestCycle<'a> {
    adj: &'a [u64],
    start: usize,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl LongestCycle<'_> {
    fn go(&mut self, cur: usize, allowed: u64) {
        if self.path.len() >= 3 && self.adj[cur] >> self.start & 1 == 1 && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let reach = flood(self.adj, cur, allowed | 1 << cur) & !(1 << cur);
        if self.path.len() + reach.count_ones() as usize <= self.best.len() {
            return;
        }
        for next in mask_iter(self.adj[cur] & allowed) {
            self.path.push(next);
            self.go(next, allowed & !(1 << next));
            self.path.pop();
        }
    }
}

/// A longest cycle of `g`, found exhaustively; `None` when `g` is a forest.
pub fn longest_cycle(g: &Graph, bound: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    check_bound("longest cycle", n, bound.min(64))?;
    if let Some(c) = hamilton_cycle(g, bound)? {
        return Ok(Some(c));
    }
    let adj = adjacency_masks(g);
    let mut best = Vec::new();
    // Each cycle is found from its smallest vertex.
    for start in 0..n {
        let allowed = full_mask(n) & !((1u64 << start << 1).wrapping_sub(1));
        if (n - start) <= best.len() {
            break;
        }
        let mut search = LongestCycle { adj: &adj, start, best: std::mem::take(&mut best), path: vec![start] };
        search.go(start, allowed);
        best = search.best;
    }
    Ok((!best.is_empty()).then_some(best))
}

/// A longest cycle `C` and whether it dominates (`G - V(C)` edgeless).
pub fn longest_dominating_cycle(g: &Graph, bound: usize) -> Result<(Vec<usize>, bool)> {
    let cycle = longest_cycle(g, bound)?.ok_or_else(|| Error::Precondition("graph is acyclic".into()))?;
    let on: VertexSet = cycle.iter().copied().collect();
    let dominating = g.edges().all(|(u, v)| on.contains(u) || on.contains(v));
    Ok((cycle, dominating))
}
