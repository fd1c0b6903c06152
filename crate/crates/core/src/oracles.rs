//! Naive reference implementations for cross-checking.
//!
//! Everything here works from adjacency queries on [`Graph`] alone and shares
//! no search code with the rest of the crate.

use crate::barrier::Barrier;
use crate::error::{check_bound, Result};
use crate::graph::{Graph, VertexSet};
use crate::two_factor::TwoFactor;

pub const INDEPENDENT_SET_BOUND: usize = 20;
pub const TWO_FACTOR_BOUND: usize = 14;
pub const BARRIER_BOUND: usize = 12;
pub const HAMILTON_BOUND: usize = 10;

fn independent_sets_from(g: &Graph, next: usize, current: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    f(current);
    for v in next..g.order() {
        if current.iter().all(|&u| !g.has_edge(u, v)) {
            current.push(v);
            independent_sets_from(g, v + 1, current, f);
            current.pop();
        }
    }
}

/// Calls `f` on every independent set, the empty set included, each once.
pub fn oracle_for_each_independent_set(g: &Graph, mut f: impl FnMut(&[usize])) -> Result<()> {
    check_bound("oracle_all_independent_sets", g.order(), INDEPENDENT_SET_BOUND)?;
    independent_sets_from(g, 0, &mut Vec::new(), &mut f);
    Ok(())
}

pub fn oracle_all_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    oracle_for_each_independent_set(g, |s| out.push(VertexSet::from(s.to_vec())))?;
    Ok(out)
}

pub fn oracle_independence_number(g: &Graph) -> Result<usize> {
    let mut best = 0;
    oracle_for_each_independent_set(g, |s| best = best.max(s.len()))?;
    Ok(best)
}

/// `σ_k(G)`; `None` when no independent `k`-set exists.
pub fn oracle_sigma(g: &Graph, k: usize) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    oracle_for_each_independent_set(g, |s| {
        if s.len() == k {
            let sum = s.iter().map(|&v| g.degree(v)).sum();
            best = Some(best.map_or(sum, |b| b.min(sum)));
        }
    })?;
    Ok(best)
}

/// Whether every nonempty independent set `I` has `|I| <= δ_G(I) - c`.
pub fn oracle_slack_holds(g: &Graph, c: usize) -> Result<bool> {
    let mut holds = true;
    oracle_for_each_independent_set(g, |s| {
        if let Some(delta) = s.iter().map(|&v| g.degree(v)).min() {
            holds &= s.len() + c <= delta;
        }
    })?;
    Ok(holds)
}

/// Maximum matching size by branching on the first unmatched vertex.
pub fn oracle_matching_size(g: &Graph) -> Result<usize> {
    fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.order()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    check_bound("oracle_matching_size", g.order(), INDEPENDENT_SET_BOUND)?;
    Ok(go(g, &mut vec![false; g.order()], 0))
}

/// Receives the chosen edges of each 2-regular subgraph; `false` stops.
type EdgeVisitor<'a> = dyn FnMut(&[(usize, usize)]) -> bool + 'a;

struct EdgeSubsets<'a> {
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
    /// Edges at each vertex not yet decided.
    open: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    visit: &'a mut EdgeVisitor<'a>,
}

impl EdgeSubsets<'_> {
    /// Returns false once the visitor asks to stop.
    fn go(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            if self.degree.iter().all(|&d| d == 2) {
                return (self.visit)(&self.chosen);
            }
            return true;
        }
        let (u, v) = self.edges[i];
        self.open[u] -= 1;
        self.open[v] -= 1;
        let mut keep_going = true;
        if self.degree[u] < 2 && self.degree[v] < 2 {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push((u, v));
            keep_going = self.go(i + 1);
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if keep_going && self.degree[u] + self.open[u] >= 2 && self.degree[v] + self.open[v] >= 2 {
            keep_going = self.go(i + 1);
        }
        self.open[u] += 1;
        self.open[v] += 1;
        keep_going
    }
}

fn for_each_two_regular(g: &Graph, visit: &mut EdgeVisitor<'_>) -> Result<()> {
    let n = g.order();
    check_bound("oracle_two_factors", n, TWO_FACTOR_BOUND)?;
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).collect();
    let open = (0..n).map(|v| g.degree(v)).collect();
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(());
    }
    EdgeSubsets { edges, degree: vec![0; n], open, chosen: Vec::new(), visit }.go(0);
    Ok(())
}

/// Calls `f` on every 2-factor in canonical form; `f` returns false to stop.
pub fn oracle_for_each_two_factor(g: &Graph, mut f: impl FnMut(TwoFactor) -> bool) -> Result<()> {
    let n = g.order();
    for_each_two_regular(g, &mut |edges| f(TwoFactor::from_edges(n, edges).expect("2-regular edge set")))
}

pub fn oracle_two_factors(g: &Graph) -> Result<Vec<TwoFactor>> {
    let mut out = Vec::new();
    oracle_for_each_two_factor(g, |f| {
        out.push(f);
        true
    })?;
    Ok(out)
}

pub fn oracle_has_two_factor(g: &Graph) -> Result<bool> {
    if g.order() == 0 {
        return Ok(true);
    }
    let mut found = false;
    oracle_for_each_two_factor(g, |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Fewest cycles over all 2-factors.
pub fn oracle_min_cycles(g: &Graph) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    oracle_for_each_two_factor(g, |f| {
        best = Some(best.map_or(f.cycle_count(), |b| b.min(f.cycle_count())));
        best != Some(1)
    })?;
    Ok(best)
}

/// `δ(S,T)` straight from the definition, with components found by an
/// explicit stack walk. `side[v]`: 0 rest, 1 in S, 2 in T.
fn naive_deficiency(g: &Graph, side: &[u8]) -> (i64, Vec<VertexSet>) {
    let n = g.order();
    let mut total = 0i64;
    for v in 0..n {
        match side[v] {
            1 => total += 2,
            2 => {
                total -= 2;
                total += g.neighbors(v).iter().filter(|&&u| side[u] != 1).count() as i64;
            }
            _ => {}
        }
    }
    let mut seen = vec![false; n];
    let mut odd = Vec::new();
    for start in 0..n {
        if side[start] != 0 || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if side[y] == 0 && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        let to_t: usize = comp.iter().map(|&x| g.neighbors(x).iter().filter(|&&y| side[y] == 2).count()).sum();
        if to_t % 2 == 1 {
            odd.push(VertexSet::from(comp));
        }
    }
    (total - odd.len() as i64, odd)
}

pub fn oracle_deficiency(g: &Graph, s: &VertexSet, t: &VertexSet) -> i64 {
    let mut side = vec![0u8; g.order()];
    for v in s.iter() {
        side[v] = 1;
    }
    for v in t.iter() {
        side[v] = 2;
    }
    naive_deficiency(g, &side).0
}

/// Calls `f` on every disjoint pair with `δ(S,T) <= -2`, enumerated as
/// base-3 labelings; `f` returns false to stop.
pub fn oracle_for_each_barrier(g: &Graph, mut f: impl FnMut(Barrier) -> bool) -> Result<()> {
    let n = g.order();
    check_bound("oracle_barriers", n, BARRIER_BOUND)?;
    let mut side = vec![0u8; n];
    loop {
        let (d, odd) = naive_deficiency(g, &side);
        if d <= -2 {
            let pick = |k: u8| -> VertexSet { (0..n).filter(|&v| side[v] == k).collect() };
            let b = Barrier { s: pick(1), t: pick(2), deficiency: d, odd_components: odd };
            if !f(b) {
                return Ok(());
            }
        }
        // Next labeling in base 3.
        let mut i = 0;
        while i < n && side[i] == 2 {
            side[i] = 0;
            i += 1;
        }
        if i == n {
            return Ok(());
        }
        side[i] += 1;
    }
}

pub fn oracle_barriers(g: &Graph) -> Result<Vec<Barrier>> {
    let mut out = Vec::new();
    oracle_for_each_barrier(g, |b| {
        out.push(b);
        true
    })?;
    Ok(out)
}

pub fn oracle_has_barrier(g: &Graph) -> Result<bool> {
    let mut found = false;
    oracle_for_each_barrier(g, |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Hamilton path from `a` to `b` by trying vertex orders.
pub fn oracle_hamilton_path(g: &Graph, a: usize, b: usize) -> Result<bool> {
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], b: usize) -> bool {
        if path.len() == g.order() {
            return *path.last().expect("nonempty") == b;
        }
        for v in 0..g.order() {
            if used[v] {
                continue;
            }
            used[v] = true;
            path.push(v);
            let ok = g.has_edge(path[path.len() - 2], v) && go(g, path, used, b);
            path.pop();
            used[v] = false;
            if ok {
                return true;
            }
        }
        false
    }
    let n = g.order();
    check_bound("oracle_hamilton_path", n, HAMILTON_BOUND)?;
    let mut used = vec![false; n];
    used[a] = true;
    Ok(go(g, &mut vec![a], &mut used, b))
}

pub fn oracle_hamilton_cycle(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Ok(false);
    }
    for &w in g.neighbors(0) {
        if oracle_hamilton_path(g, 0, w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_sets() {
        assert_eq!(oracle_all_independent_sets(&Graph::complete(3)).unwrap().len(), 4);
        assert_eq!(oracle_all_independent_sets(&Graph::cycle(4)).unwrap().len(), 7);
        assert_eq!(oracle_all_independent_sets(&Graph::empty(3)).unwrap().len(), 8);
        assert_eq!(oracle_independence_number(&Graph::petersen()).unwrap(), 4);
        assert_eq!(oracle_sigma(&Graph::complete(4), 2).unwrap(), None);
        assert_eq!(oracle_sigma(&Graph::cycle(5), 2).unwrap(), Some(4));
        assert!(!oracle_slack_holds(&Graph::cycle(5), 1).unwrap());
        assert!(oracle_slack_holds(&Graph::complete(5), 1).unwrap());
        assert!(oracle_all_independent_sets(&Graph::empty(21)).is_err());
    }

    #[test]
    fn two_factors() {
        assert_eq!(oracle_two_factors(&Graph::cycle(5)).unwrap().len(), 1);
        assert_eq!(oracle_two_factors(&Graph::complete(4)).unwrap().len(), 3);
        let bowtie = Graph::complete(1).join(&Graph::complete(2).copies(2));
        assert!(oracle_two_factors(&bowtie).unwrap().is_empty());
        // Two disjoint cycles need six vertices, so these are the 12 Hamilton cycles.
        assert_eq!(oracle_two_factors(&Graph::complete(5)).unwrap().len(), 12);
        assert_eq!(oracle_min_cycles(&Graph::complete(3).copies(2)).unwrap(), Some(2));
        assert_eq!(oracle_matching_size(&Graph::petersen()).unwrap(), 5);
    }

    #[test]
    fn barriers() {
        assert!(oracle_barriers(&Graph::cycle(5)).unwrap().is_empty());
        let k2 = oracle_barriers(&Graph::complete(2)).unwrap();
        assert!(k2.iter().any(|b| b.s.is_empty() && b.t == VertexSet::from([0])));
        assert!(k2.iter().any(|b| b.s.is_empty() && b.t == VertexSet::from([1])));
        let bowtie = Graph::complete(1).join(&Graph::complete(2).copies(2));
        let all = oracle_barriers(&bowtie).unwrap();
        assert_eq!(all.iter().map(Barrier::size).min(), Some(3));
    }

    #[test]
    fn hamilton() {
        assert!(oracle_hamilton_path(&Graph::complete(4), 0, 3).unwrap());
        assert!(!oracle_hamilton_path(&Graph::complete_bipartite(3, 3), 0, 1).unwrap());
        assert!(!oracle_hamilton_cycle(&Graph::petersen()).unwrap());
        assert!(oracle_hamilton_cycle(&Graph::cycle(6)).unwrap());
    }
}
