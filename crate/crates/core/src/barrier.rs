//! Tutte's 2-factor deficiency, barrier search and minimal barriers.
//!
//! For disjoint `S, T`:
//! `δ(S,T) = 2|S| - 2|T| + Σ_{v∈T} d_{G-S}(v) - h_G(S,T)`, where `h_G(S,T)`
//! counts components `D` of `G - (S ∪ T)` with `e(T, V(D))` odd. A pair with
//! negative deficiency is a barrier and certifies that no 2-factor exists.

use serde::{Deserialize, Serialize};

use crate::bits::{adjacency_masks, flood, for_each_combination, full_mask, mask_iter, mask_of, set_of};
use crate::error::{check_bound, Error, Result};
use crate::graph::{Graph, GraphError, VertexSet};

/// Default vertex ceiling for the exhaustive barrier search.
pub const DEFAULT_BARRIER_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barrier {
    pub s: VertexSet,
    pub t: VertexSet,
    pub deficiency: i64,
    pub odd_components: Vec<VertexSet>,
}

/// Components of `G - (S ∪ T)` split by the parity of `e(T, V(D))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentParity {
    pub odd: Vec<VertexSet>,
    pub even: Vec<VertexSet>,
}

fn check_pair(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<(), GraphError> {
    s.check_range(g.order())?;
    t.check_range(g.order())?;
    match s.iter().find(|&v| t.contains(v)) {
        Some(v) => Err(GraphError::Overlap(v)),
        None => Ok(()),
    }
}

/// Splits the components of `G - (S ∪ T)` into odd and even ones.
pub fn component_parity(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<ComponentParity, GraphError> {
    check_pair(g, s, t)?;
    let mut parity = ComponentParity { odd: Vec::new(), even: Vec::new() };
    for comp in g.components_avoiding(&s.union(t)) {
        let edges: usize = t.iter().map(|v| g.degree_into(v, &comp)).sum();
        if edges % 2 == 1 {
            parity.odd.push(comp);
        } else {
            parity.even.push(comp);
        }
    }
    Ok(parity)
}

/// Exact deficiency `δ(S,T)`.
pub fn deficiency(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<i64, GraphError> {
    let parity = component_parity(g, s, t)?;
    let degree_sum: usize = t.iter().map(|v| g.degree(v) - g.degree_into(v, s)).sum();
    Ok(2 * s.len() as i64 - 2 * t.len() as i64 + degree_sum as i64 - parity.odd.len() as i64)
}

impl Barrier {
    /// Validates `(S, T)` as a barrier and fills in the derived fields.
    pub fn new(g: &Graph, s: VertexSet, t: VertexSet) -> Result<Barrier> {
        let deficiency = deficiency(g, &s, &t)?;
        if deficiency > -2 {
            return Err(Error::Precondition(format!(
                "({s}, {t}) has deficiency {deficiency}, not a barrier"
            )));
        }
        let odd_components = component_parity(g, &s, &t)?.odd;
        Ok(Barrier { s, t, deficiency, odd_components })
    }

    /// Recomputes every field against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match Barrier::new(g, self.s.clone(), self.t.clone()) {
            Ok(b) => b == *self,
            Err(_) => false,
        }
    }

    pub fn size(&self) -> usize {
        self.s.len() + self.t.len()
    }
}

/// Mask-based evaluator shared by the exhaustive searches.
struct Evaluator {
    adj: Vec<u64>,
    all: u64,
}

impl Evaluator {
    fn new(g: &Graph) -> Self {
        Evaluator { adj: adjacency_masks(g), all: full_mask(g.order()) }
    }

    /// `δ(S,T)` when it is at most `-2`, `None` otherwise.
    ///
    /// Writing `Σ_{v∈T} d_{G-S}(v) = 2 e(T) + e(T, R)` with `R` the rest and
    /// using `h <= e(T, R)` gives `δ >= 2|S| - 2|T| + 2 e(T)`, so most pairs
    /// are rejected before any component is traced.
    #[inline]
    fn barrier_deficiency(&self, s: u64, t: u64) -> Option<i64> {
        let rest = self.all & !s & !t;
        let mut inner2 = 0i64; // 2 e(T)
        let mut cross = 0i64; // e(T, R)
        for v in mask_iter(t) {
            inner2 += (self.adj[v] & t).count_ones() as i64;
            cross += (self.adj[v] & rest).count_ones() as i64;
        }
        let base = 2 * s.count_ones() as i64 - 2 * t.count_ones() as i64 + inner2;
        if base > -2 {
            return None;
        }
        // h <= |R| as well.
        let h_max = cross.min(rest.count_ones() as i64);
        if base + cross - h_max > -2 {
            return None;
        }
        let mut h = 0i64;
        let mut left = rest;
        let mut touched = 0u64;
        for v in mask_iter(t) {
            touched |= self.adj[v] & rest;
        }
        left &= touched;
        while left != 0 {
            let comp = flood(&self.adj, left.trailing_zeros() as usize, rest);
            left &= !comp;
            let edges: u32 = mask_iter(t).map(|v| (self.adj[v] & comp).count_ones()).sum();
            h += (edges % 2) as i64;
        }
        let d = base + cross - h;
        (d <= -2).then_some(d)
    }
}

/// Outcome of a barrier search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BarrierSearch {
    Found(Barrier),
    /// Exhaustive search proved there is no barrier.
    NoneExists,
    /// Above the exhaustive bound and no heuristic candidate worked.
    Inconclusive,
}

impl BarrierSearch {
    pub fn barrier(&self) -> Option<&Barrier> {
        match self {
            BarrierSearch::Found(b) => Some(b),
            _ => None,
        }
    }
}

/// Searches all disjoint pairs `(S, T)` when `n <= bound`; larger graphs only
/// get structural candidates.
pub fn find_barrier(g: &Graph, bound: usize) -> BarrierSearch {
    let n = g.order();
    if n > bound.min(64) {
        return match heuristic_barrier(g) {
            Some(b) => BarrierSearch::Found(b),
            None => BarrierSearch::Inconclusive,
        };
    }
    let eval = Evaluator::new(g);
    let all = eval.all;
    let mut s: u64 = 0;
    loop {
        let free = all & !s;
        // Enumerate every subset T of `free`.
        let mut t: u64 = 0;
        loop {
            if eval.barrier_deficiency(s, t).is_some() {
                let b = Barrier::new(g, set_of(s), set_of(t)).expect("evaluator agrees with deficiency");
                return BarrierSearch::Found(b);
            }
            t = t.wrapping_sub(free) & free;
            if t == 0 {
                break;
            }
        }
        if s == all {
            break;
        }
        s = s.wrapping_sub(all) & all;
    }
    BarrierSearch::NoneExists
}

/// Candidates built from small vertex sets: `S` of size at most 2 and `T` the
/// vertices whose degree in `G - S` is at most 1.
fn heuristic_barrier(g: &Graph) -> Option<Barrier> {
    let n = g.order();
    let mut candidates: Vec<VertexSet> = vec![VertexSet::new()];
    candidates.extend((0..n).map(|v| VertexSet::from([v])));
    for u in 0..n {
        candidates.extend((u + 1..n).map(|v| VertexSet::from([u, v])));
    }
    for s in candidates {
        let t: VertexSet = g
            .vertices()
            .filter(|&v| !s.contains(v) && g.degree(v) - g.degree_into(v, &s) <= 1)
            .collect();
        if let Ok(b) = Barrier::new(g, s, t) {
            return Some(b);
        }
    }
    None
}

/// A barrier minimizing `|S ∪ T|`. Unions are scanned by size and then in
/// lexicographic order; within one union, `S` runs over subsets in
/// increasing bit order.
pub fn minimal_barrier(g: &Graph, bound: usize) -> Result<Barrier> {
    let n = g.order();
    check_bound("minimal_barrier", n, bound.min(64))?;
    let eval = Evaluator::new(g);
    for size in 1..=n {
        let mut found = None;
        for_each_combination(n, size, |union| {
            let mut s: u64 = 0;
            loop {
                if eval.barrier_deficiency(s, union & !s).is_some() {
                    found = Some((s, union & !s));
                    return false;
                }
                s = s.wrapping_sub(union) & union;
                if s == 0 {
                    return true;
                }
            }
        });
        if let Some((s, t)) = found {
            return Barrier::new(g, set_of(s), set_of(t));
        }
    }
    Err(Error::NoBarrier)
}

/// Every barrier of minimum `|S ∪ T|`.
pub fn all_minimal_barriers(g: &Graph, bound: usize) -> Result<Vec<Barrier>> {
    let n = g.order();
    check_bound("all_minimal_barriers", n, bound.min(64))?;
    let eval = Evaluator::new(g);
    for size in 1..=n {
        let mut found = Vec::new();
        for_each_combination(n, size, |union| {
            let mut s: u64 = 0;
            loop {
                if eval.barrier_deficiency(s, union & !s).is_some() {
                    found.push((s, union & !s));
                }
                s = s.wrapping_sub(union) & union;
                if s == 0 {
                    return true;
                }
            }
        });
        if !found.is_empty() {
            return found
                .into_iter()
                .map(|(s, t)| Barrier::new(g, set_of(s), set_of(t)))
                .collect();
        }
    }
    Err(Error::NoBarrier)
}

/// The four structural properties every minimal barrier should have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalBarrierProperties {
    /// T is independent.
    pub t_independent: bool,
    /// No edge joins T to an even component.
    pub even_components_untouched: bool,
    /// Each vertex of T sends at most one edge to each odd component.
    pub odd_components_single_edges: bool,
    /// |T| > |S|.
    pub t_larger_than_s: bool,
}

impl MinimalBarrierProperties {
    pub fn all(&self) -> bool {
        self.t_independent
            && self.even_components_untouched
            && self.odd_components_single_edges
            && self.t_larger_than_s
    }
}

pub fn check_minimal_barrier_properties(g: &Graph, b: &Barrier) -> Result<MinimalBarrierProperties> {
    if !b.verify(g) {
        return Err(Error::Precondition("not a valid barrier of this graph".into()));
    }
    let parity = component_parity(g, &b.s, &b.t)?;
    Ok(MinimalBarrierProperties {
        t_independent: g.is_independent(&b.t),
        even_components_untouched: parity
            .even
            .iter()
            .all(|d| b.t.iter().all(|v| g.degree_into(v, d) == 0)),
        odd_components_single_edges: parity
            .odd
            .iter()
            .all(|d| b.t.iter().all(|v| g.degree_into(v, d) <= 1)),
        t_larger_than_s: b.t.len() > b.s.len(),
    })
}

/// `δ(S,T)` through the mask evaluator, without the barrier cut-off.
/// Exposed for cross-checking against [`deficiency`].
pub fn deficiency_masked(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<i64, GraphError> {
    check_pair(g, s, t)?;
    let eval = Evaluator::new(g);
    let (s, t) = (mask_of(s), mask_of(t));
    let rest = eval.all & !s & !t;
    let mut total = 2 * s.count_ones() as i64 - 2 * t.count_ones() as i64;
    for v in mask_iter(t) {
        total += (eval.adj[v] & !s).count_ones() as i64;
    }
    let mut left = rest;
    while left != 0 {
        let comp = flood(&eval.adj, left.trailing_zeros() as usize, rest);
        left &= !comp;
        let edges: u32 = mask_iter(t).map(|v| (eval.adj[v] & comp).count_ones()).sum();
        total -= (edges % 2) as i64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::complete(1).join(&Graph::complete(2).copies(2))
    }

    #[test]
    fn deficiency_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(deficiency(&c5, &VertexSet::new(), &VertexSet::new()), Ok(0));
        assert_eq!(deficiency(&c5, &VertexSet::new(), &VertexSet::from([0])), Ok(0));
        let b = bowtie();
        assert_eq!(deficiency(&b, &VertexSet::from([0]), &VertexSet::from([1, 3])), Ok(-2));
        assert_eq!(
            deficiency(&b, &VertexSet::from([0]), &VertexSet::from([0, 1])),
            Err(GraphError::Overlap(0))
        );
    }

    #[test]
    fn find_examples() {
        assert_eq!(find_barrier(&Graph::cycle(5), DEFAULT_BARRIER_BOUND), BarrierSearch::NoneExists);

        let k2 = Graph::complete(2);
        let found = find_barrier(&k2, DEFAULT_BARRIER_BOUND);
        let b = found.barrier().unwrap();
        assert_eq!(b.deficiency, -2);
        assert!(b.verify(&k2));

        let found = find_barrier(&bowtie(), DEFAULT_BARRIER_BOUND);
        assert_eq!(found.barrier().unwrap().deficiency, -2);
    }

    #[test]
    fn minimal_examples() {
        let b = minimal_barrier(&Graph::complete(2), DEFAULT_BARRIER_BOUND).unwrap();
        assert_eq!(b.size(), 1);
        assert_eq!((b.s.len(), b.t.len()), (0, 1));
        let props = check_minimal_barrier_properties(&Graph::complete(2), &b).unwrap();
        assert!(props.all());

        let b = minimal_barrier(&bowtie(), DEFAULT_BARRIER_BOUND).unwrap();
        assert_eq!(b.size(), 3);
        assert_eq!(b.s, VertexSet::from([0]));
        assert_eq!(b.t, VertexSet::from([1, 3]));
        assert_eq!(b.odd_components, vec![VertexSet::from([2]), VertexSet::from([4])]);
        assert!(check_minimal_barrier_properties(&bowtie(), &b).unwrap().all());

        assert_eq!(minimal_barrier(&Graph::complete(4), DEFAULT_BARRIER_BOUND), Err(Error::NoBarrier));
    }

    #[test]
    fn non_minimal_barrier_can_break_independence() {
        // Search the bowtie for a barrier whose T is not independent.
        let g = bowtie();
        let mut found = None;
        for sm in 0u32..32 {
            for tm in 0u32..32 {
                if sm & tm != 0 {
                    continue;
                }
                let s: VertexSet = (0..5).filter(|&v| sm >> v & 1 == 1).collect();
                let t: VertexSet = (0..5).filter(|&v| tm >> v & 1 == 1).collect();
                if let Ok(b) = Barrier::new(&g, s, t) {
                    if !g.is_independent(&b.t) {
                        found = Some(b);
                    }
                }
            }
        }
        let b = found.expect("bowtie has a barrier with adjacent T vertices");
        assert!(!check_minimal_barrier_properties(&g, &b).unwrap().t_independent);
    }

    #[test]
    fn invalid_barrier_rejected() {
        let bogus = Barrier {
            s: VertexSet::new(),
            t: VertexSet::new(),
            deficiency: -2,
            odd_components: vec![],
        };
        assert!(check_minimal_barrier_properties(&Graph::complete(3), &bogus).is_err());
    }

    #[test]
    fn heuristic_above_bound() {
        // Pendant vertex: T = {leaf} is a barrier.
        let mut edges: Vec<_> = Graph::complete(14).edges().collect();
        edges.push((0, 14));
        let g = Graph::new(15, edges).unwrap();
        assert!(matches!(find_barrier(&g, 12), BarrierSearch::Found(_)));
        assert_eq!(find_barrier(&Graph::complete(15), 12), BarrierSearch::Inconclusive);
    }

    #[test]
    fn masked_matches_plain() {
        let g = Graph::petersen();
        for (s, t) in [
            (VertexSet::new(), VertexSet::from([0, 2, 4])),
            (VertexSet::from([1]), VertexSet::from([0, 5, 7, 9])),
            (VertexSet::from([1, 2, 3]), VertexSet::from([0, 4])),
        ] {
            assert_eq!(deficiency(&g, &s, &t), deficiency_masked(&g, &s, &t));
        }
    }
}
