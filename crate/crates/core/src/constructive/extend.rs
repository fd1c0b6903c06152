//! One-vertex inclusion: splicing a vertex into a partial 2-factor, and the
//! greedy construction of a full 2-factor built on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::independence::{check_slack_condition, Slack, SlackVerdict};
use crate::two_factor::{verify_two_factor, TwoFactor};

/// Which splice produced the extended 2-factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpliceCase {
    /// `v` adjacent to some `x⁺`: insert `v` between `x` and `x⁺`.
    Insert,
    /// `x₁⁺x₂⁺` an edge on one cycle: reroute that cycle through `v`.
    Reroute,
    /// `x₁⁺x₂⁺` an edge between two cycles: merge them through `v`.
    Merge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub factor: TwoFactor,
    pub case: SpliceCase,
}

/// Extends a 2-factor `f` of `G - S` to one of `G - (S \ {v})`.
///
/// Requires the strict slack condition on `G` (checked here, exhaustively),
/// `v ∈ S`, and `|N(v) ∩ S| <= 1`.
pub fn extend_two_factor(g: &Graph, s: &VertexSet, f: &TwoFactor, v: usize) -> Result<Extension> {
    if let SlackVerdict::Violated(w) = check_slack_condition(g, Slack::Strict) {
        return Err(Error::Precondition(format!(
            "strict slack condition fails: |I| = {} with δ_G(I) = {} for I = {}",
            w.set.len(),
            w.delta,
            w.set
        )));
    }
    splice_vertex(g, s, f, v)
}

/// The splice step of [`extend_two_factor`] without the global slack check.
///
/// Local preconditions are still enforced. When no splice applies, the error
/// names the independent set `X⁺ ∪ {v}` that contradicts the slack condition.
pub fn splice_vertex(g: &Graph, s: &VertexSet, f: &TwoFactor, v: usize) -> Result<Extension> {
    let n = g.order();
    s.check_range(n)?;
    if !s.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is not in S = {s}")));
    }
    if g.degree_into(v, s) > 1 {
        return Err(Error::Precondition(format!("vertex {v} has more than one neighbor in S")));
    }
    let rest = VertexSet::full(n).difference(s);
    if !f.verify_on(g, &rest) {
        return Err(Error::Precondition("F is not a 2-factor of G - S".into()));
    }

    // (cycle index, position) of every covered vertex.
    let mut at = vec![(usize::MAX, 0); n];
    for (ci, cycle) in f.cycles.iter().enumerate() {
        for (p, &x) in cycle.iter().enumerate() {
            at[x] = (ci, p);
        }
    }
    let succ = |x: usize| {
        let (ci, p) = at[x];
        let c = &f.cycles[ci];
        c[(p + 1) % c.len()]
    };
    let xs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| !s.contains(x)).collect();

    for &x in &xs {
        if g.has_edge(v, succ(x)) {
            let (ci, p) = at[x];
            let mut cycles = f.cycles.clone();
            cycles[ci].insert(p + 1, v);
            return Ok(Extension { factor: TwoFactor::new(cycles), case: SpliceCase::Insert });
        }
    }

    let pairs = || {
        xs.iter()
            .enumerate()
            .flat_map(|(i, &a)| xs[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| g.has_edge(succ(a), succ(b)))
    };

    if let Some((x1, x2)) = pairs().find(|&(a, b)| at[a].0 == at[b].0) {
        let (ci, p1) = at[x1];
        let (_, p2) = at[x2];
        let c = &f.cycles[ci];
        let len = c.len();
        // x₁⁺ → x₂ forward, then v, then x₁ → x₂⁺ backward.
        let mut cycle = Vec::with_capacity(len + 1);
        let forward = (p2 + len - p1) % len;
        cycle.extend((1..=forward).map(|d| c[(p1 + d) % len]));
        cycle.push(v);
        let backward = (p1 + len - p2) % len;
        cycle.extend((0..backward).map(|d| c[(p1 + len - d) % len]));
        let mut cycles = f.cycles.clone();
        cycles[ci] = cycle;
        return Ok(Extension { factor: TwoFactor::new(cycles), case: SpliceCase::Reroute });
    }

    if let Some((x1, x2)) = pairs().next() {
        let (ca, p1) = at[x1];
        let (cb, p2) = at[x2];
        let (a, b) = (&f.cycles[ca], &f.cycles[cb]);
        // x₁⁺ → x₁ forward around the first cycle, v, x₂ → x₂⁺ backward
        // around the second.
        let mut cycle = Vec::with_capacity(a.len() + b.len() + 1);
        cycle.extend((1..=a.len()).map(|d| a[(p1 + d) % a.len()]));
        cycle.push(v);
        cycle.extend((0..b.len()).map(|d| b[(p2 + b.len() - d) % b.len()]));
        let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(f.cycles.len() - 1);
        for (ci, c) in f.cycles.iter().enumerate() {
            if ci == ca.min(cb) {
                cycles.push(std::mem::take(&mut cycle));
            } else if ci != ca.max(cb) {
                cycles.push(c.clone());
            }
        }
        return Ok(Extension { factor: TwoFactor::new(cycles), case: SpliceCase::Merge });
    }

    let witness: VertexSet = xs.iter().map(|&x| succ(x)).chain([v]).collect();
    Err(Error::Precondition(format!(
        "no splice applies for vertex {v}: {witness} is independent with |I| = {} and δ_G(I) <= {}, \
         so the strict slack condition cannot hold",
        witness.len(),
        g.degree(v)
    )))
}

/// A cycle of `G[within]` without chords, if `G[within]` has any cycle.
pub fn chordless_cycle(g: &Graph, within: &VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut found = None;
    'roots: for root in within.iter() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (x, ref mut idx)) = stack.last_mut() {
            if *idx == g.degree(x) {
                stack.pop();
                continue;
            }
            let y = g.neighbors(x)[*idx];
            *idx += 1;
            if !within.contains(y) || y == parent[x] {
                continue;
            }
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                stack.push((y, 0));
            } else if depth[y] < depth[x] {
                let mut cycle = vec![x];
                let mut z = x;
                while z != y {
                    z = parent[z];
                    cycle.push(z);
                }
                found = Some(cycle);
                break 'roots;
            }
        }
    }
    let mut cycle = found?;
    // Shortcut chords until none remain.
    'shrink: loop {
        let len = cycle.len();
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                if g.has_edge(cycle[i], cycle[j]) {
                    cycle = cycle[i..=j].to_vec();
                    continue 'shrink;
                }
            }
        }
        return Some(cycle);
    }
}

/// Builds a 2-factor by alternately peeling chordless cycles off the
/// uncovered set and splicing in vertices with at most one uncovered
/// neighbor, under the strict slack condition.
pub fn two_factor_via_extension(g: &Graph) -> Result<TwoFactor> {
    if let SlackVerdict::Violated(w) = check_slack_condition(g, Slack::Strict) {
        return Err(Error::Precondition(format!(
            "strict slack condition fails: I = {} has |I| = {} and δ_G(I) = {}",
            w.set,
            w.set.len(),
            w.delta
        )));
    }
    let mut uncovered = VertexSet::full(g.order());
    let mut factor = TwoFactor::default();
    let mut rounds = 0;
    while !uncovered.is_empty() {
        rounds += 1;
        debug_assert!(rounds <= g.order());
        if let Some(cycle) = chordless_cycle(g, &uncovered) {
            for &x in &cycle {
                uncovered.remove(x);
            }
            factor.cycles.push(cycle);
            continue;
        }
        // G[uncovered] is a forest: some vertex has at most one uncovered neighbor.
        let v = uncovered
            .iter()
            .find(|&v| g.degree_into(v, &uncovered) <= 1)
            .expect("a forest has a vertex of degree at most one");
        factor = splice_vertex(g, &uncovered, &factor, v)?.factor;
        uncovered.remove(v);
    }
    if !verify_two_factor(g, &factor) {
        return Err(Error::Internal("extension result does not verify".into()));
    }
    Ok(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn insert_into_k5() {
        let g = Graph::complete(5);
        let f = TwoFactor::new(vec![vec![0, 1, 2, 3]]);
        let e = extend_two_factor(&g, &VertexSet::from([4]), &f, 4).unwrap();
        assert_eq!(e.case, SpliceCase::Insert);
        assert_eq!(e.factor.cycles, vec![vec![0, 4, 1, 2, 3]]);
        assert!(verify_two_factor(&g, &e.factor));
    }

    #[test]
    fn insert_center_into_triangle() {
        // Center 0 joined to triangles {1,2,3} and {4,5,6}.
        let g = Graph::complete(1).join(&Graph::complete(3).copies(2));
        let f = TwoFactor::new(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let e = extend_two_factor(&g, &VertexSet::from([0]), &f, 0).unwrap();
        assert_eq!(e.case, SpliceCase::Insert);
        let mut sizes: Vec<usize> = e.factor.cycles.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 4]);
        assert!(verify_two_factor(&g, &e.factor));
    }

    #[test]
    fn merge_two_triangles() {
        // Triangles {0,1,2}, {3,4,5}; v = 6 adjacent to 0 and 3; X⁺ = {1, 4}
        // joined by an edge.
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3), (1, 4)])
            .unwrap();
        assert!(!check_slack_condition(&g, Slack::Strict).holds());
        let f = TwoFactor::new(vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(extend_two_factor(&g, &VertexSet::from([6]), &f, 6).is_err());
        let e = splice_vertex(&g, &VertexSet::from([6]), &f, 6).unwrap();
        assert_eq!(e.case, SpliceCase::Merge);
        assert_eq!(e.factor.cycle_count(), 1);
        assert_eq!(e.factor.cycles[0].len(), 7);
        assert!(verify_two_factor(&g, &e.factor));
    }

    #[test]
    fn reroute_within_cycle() {
        // Hexagon 0..5, v = 6 adjacent to 0 and 3, chord between 1 and 4.
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3), (1, 4)])
            .unwrap();
        let f = TwoFactor::new(vec![vec![0, 1, 2, 3, 4, 5]]);
        let e = splice_vertex(&g, &VertexSet::from([6]), &f, 6).unwrap();
        assert_eq!(e.case, SpliceCase::Reroute);
        assert_eq!(e.factor.cycle_count(), 1);
        assert!(verify_two_factor(&g, &e.factor));
    }

    #[test]
    fn no_case_reports_witness() {
        // Hexagon with v adjacent to 0 and 3 only: X⁺ ∪ {v} = {1, 4, 6} is independent.
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 3)]).unwrap();
        let f = TwoFactor::new(vec![vec![0, 1, 2, 3, 4, 5]]);
        let err = splice_vertex(&g, &VertexSet::from([6]), &f, 6).unwrap_err();
        assert!(err.to_string().contains("{1,4,6}"), "{err}");
    }

    #[test]
    fn local_preconditions() {
        let f = TwoFactor::new(vec![vec![0, 1, 2]]);
        let s = VertexSet::from([3, 4, 5]);
        assert!(splice_vertex(&Graph::complete(6), &s, &f, 3).is_err());
        let g = Graph::complete(5);
        assert!(splice_vertex(&g, &VertexSet::from([4]), &f, 4).is_err());
        assert!(splice_vertex(&g, &VertexSet::from([4]), &TwoFactor::new(vec![vec![0, 1, 2, 3]]), 3).is_err());
    }

    #[test]
    fn via_extension_examples() {
        let f = two_factor_via_extension(&Graph::complete(5)).unwrap();
        assert!(verify_two_factor(&Graph::complete(5), &f));

        let two_k4 = Graph::complete(4).copies(2);
        let f = two_factor_via_extension(&two_k4).unwrap();
        assert_eq!(f.cycle_count(), 2);
        assert!(f.cycles.iter().all(|c| c.len() == 4));

        assert!(matches!(two_factor_via_extension(&Graph::petersen()), Err(Error::Precondition(_))));
    }

    #[test]
    fn chordless_cycle_has_no_chords() {
        let g = Graph::complete(6);
        let c = chordless_cycle(&g, &VertexSet::full(6)).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(chordless_cycle(&Graph::path(5), &VertexSet::full(5)), None);
    }
}
