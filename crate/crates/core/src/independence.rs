//! Exact independent-set machinery: α(G), σ_k(G), the slack conditions
//! `|I| <= δ_G(I) - c`, and the classical conditions they relax.

use serde::{Deserialize, Serialize};

use crate::bits::{adjacency_bits, Bits};
use crate::connectivity::vertex_connectivity;
use crate::graph::{Graph, VertexSet};

/// Which slack condition is checked: `|I| <= δ_G(I) - c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slack {
    /// c = 1: every independent set satisfies `|I| <= δ_G(I) - 1`.
    Strict,
    /// c = 0: every independent set satisfies `|I| <= δ_G(I)`.
    Weak,
}

impl Slack {
    pub fn c(self) -> usize {
        match self {
            Slack::Strict => 1,
            Slack::Weak => 0,
        }
    }
}

/// An independent set together with its minimum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSetWitness {
    pub set: VertexSet,
    pub delta: usize,
    /// `|I| - δ_G(I)`.
    pub slack: i64,
}

impl IndependentSetWitness {
    /// Builds the witness for a nonempty independent set; `None` otherwise.
    pub fn new(g: &Graph, set: VertexSet) -> Option<Self> {
        if set.is_empty() || set.check_range(g.order()).is_err() || !g.is_independent(&set) {
            return None;
        }
        let delta = set.iter().map(|v| g.degree(v)).min()?;
        let slack = set.len() as i64 - delta as i64;
        Some(IndependentSetWitness { set, delta, slack })
    }

    /// Whether this set breaks the slack condition `|I| <= δ_G(I) - c`.
    pub fn violates(&self, slack: Slack) -> bool {
        self.slack > -(slack.c() as i64)
    }

    /// Recomputes every field against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        IndependentSetWitness::new(g, self.set.clone()).as_ref() == Some(self)
    }
}

/// σ_k(G) with an attaining set; `value == None` encodes ∞ (α(G) < k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaValue {
    pub k: usize,
    pub value: Option<usize>,
    pub set: Option<VertexSet>,
}

impl SigmaValue {
    pub fn is_infinite(&self) -> bool {
        self.value.is_none()
    }

    /// `σ_k(G) >= bound`, treating ∞ as larger than everything.
    pub fn at_least(&self, bound: usize) -> bool {
        self.value.is_none_or(|v| v >= bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlackVerdict {
    Holds,
    Violated(IndependentSetWitness),
}

impl SlackVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SlackVerdict::Holds)
    }

    pub fn witness(&self) -> Option<&IndependentSetWitness> {
        match self {
            SlackVerdict::Holds => None,
            SlackVerdict::Violated(w) => Some(w),
        }
    }
}

/// Branch-and-bound search for independent sets inside a candidate pool.
struct IndependentSearch<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    /// Stop as soon as a set of this size is found.
    target: usize,
}

impl IndependentSearch<'_> {
    /// Greedy clique cover of `cand`; its size bounds α(G[cand]).
    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        let mut cliques: Vec<Bits> = Vec::new();
        'vertex: for v in cand.iter() {
            for common in cliques.iter_mut() {
                if common.contains(v) {
                    *common = common.and(&self.adj[v]);
                    continue 'vertex;
                }
            }
            cliques.push(self.adj[v].and(cand));
        }
        cliques.len()
    }

    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn run(&mut self, cand: Bits, current: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return;
        }
        if current.len() + self.clique_cover_bound(&cand) <= self.best.len() {
            return;
        }
        // Branch on the candidate with most neighbors among candidates;
        // smallest index wins ties.
        let (pivot, pivot_deg) = cand
            .iter()
            .map(|v| (v, self.adj[v].and_count(&cand)))
            .fold((usize::MAX, 0), |acc, (v, d)| {
                if acc.0 == usize::MAX || d > acc.1 {
                    (v, d)
                } else {
                    acc
                }
            });
        if pivot_deg == 0 {
            // Candidates are pairwise non-adjacent: take them all.
            let before = current.len();
            current.extend(cand.iter());
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(before);
            return;
        }
        let mut with = cand.and_not(&self.adj[pivot]);
        with.remove(pivot);
        current.push(pivot);
        self.run(with, current);
        current.pop();
        let mut without = cand;
        without.remove(pivot);
        self.run(without, current);
    }
}

fn search_independent(adj: &[Bits], cand: Bits, target: usize) -> Vec<usize> {
    let mut search = IndependentSearch { adj, best: Vec::new(), target };
    search.run(cand, &mut Vec::new());
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// A maximum independent set.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let adj = adjacency_bits(g);
    let cand = Bits::from_iter(g.order(), g.vertices());
    VertexSet::from_sorted_unchecked(search_independent(&adj, cand, usize::MAX))
}

/// α(G).
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

struct SigmaSearch<'a> {
    g: &'a Graph,
    adj: Vec<Bits>,
    /// Vertices sorted by (degree, index).
    order: Vec<usize>,
    k: usize,
    best: Option<(usize, Vec<usize>)>,
}

impl SigmaSearch<'_> {
    /// `pos` indexes into `order`; only later positions may be added.
    fn run(&mut self, pos: usize, cand: &Bits, current: &mut Vec<usize>, sum: usize) {
        if current.len() == self.k {
            if self.best.as_ref().is_none_or(|(b, _)| sum < *b) {
                self.best = Some((sum, current.clone()));
            }
            return;
        }
        let need = self.k - current.len();
        for i in pos..self.order.len() {
            let v = self.order[i];
            if !cand.contains(v) {
                continue;
            }
            // Remaining picks cost at least the next `need` degrees in order.
            let lower: usize = self.order[i..]
                .iter()
                .filter(|&&u| cand.contains(u))
                .take(need)
                .map(|&u| self.g.degree(u))
                .sum();
            if let Some((b, _)) = &self.best {
                if sum + lower >= *b {
                    return;
                }
            }
            let remaining = self.order[i..].iter().filter(|&&u| cand.contains(u)).count();
            if remaining < need {
                return;
            }
            let mut next = cand.and_not(&self.adj[v]);
            next.remove(v);
            current.push(v);
            self.run(i + 1, &next, current, sum + self.g.degree(v));
            current.pop();
        }
    }
}

/// σ_k(G): minimum degree sum over independent sets of exactly `k` vertices.
pub fn sigma_k(g: &Graph, k: usize) -> SigmaValue {
    assert!(k >= 1, "sigma_k needs k >= 1");
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut search = SigmaSearch { g, adj: adjacency_bits(g), order, k, best: None };
    let cand = Bits::from_iter(g.order(), g.vertices());
    search.run(0, &cand, &mut Vec::new(), 0);
    match search.best {
        Some((value, mut set)) => {
            set.sort_unstable();
            SigmaValue { k, value: Some(value), set: Some(VertexSet::from_sorted_unchecked(set)) }
        }
        None => SigmaValue { k, value: None, set: None },
    }
}

/// Decides whether every nonempty independent set `I` satisfies
/// `|I| <= δ_G(I) - c`.
///
/// A violating set is witnessed at its own minimum-degree member `v`, so it
/// suffices to look, for each `v`, for an independent set of size
/// `d(v) - c` among non-neighbors `u` with `d(u) >= d(v)`.
pub fn check_slack_condition(g: &Graph, slack: Slack) -> SlackVerdict {
    let adj = adjacency_bits(g);
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for &v in &order {
        let dv = g.degree(v);
        // |I| >= d(v) - c + 1, and I is nonempty.
        let size = (dv + 1).saturating_sub(slack.c()).max(1);
        let cand = Bits::from_iter(
            g.order(),
            g.vertices().filter(|&u| u != v && !adj[v].contains(u) && g.degree(u) >= dv),
        );
        if cand.count() + 1 < size {
            continue;
        }
        let others = search_independent(&adj, cand, size - 1);
        if others.len() + 1 >= size {
            let set: VertexSet = others.into_iter().take(size - 1).chain([v]).collect();
            let witness = IndependentSetWitness::new(g, set).expect("search yields independent sets");
            debug_assert_eq!(witness.delta, dv);
            return SlackVerdict::Violated(witness);
        }
    }
    SlackVerdict::Holds
}

/// The classical Hamiltonicity conditions relaxed by the slack conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalFlags {
    /// δ(G) >= |G|/2.
    pub dirac: bool,
    /// α(G) <= κ(G).
    pub chvatal_erdos: bool,
    pub alpha: usize,
    pub kappa: usize,
    /// When Dirac holds but the strict slack condition fails: the spanning
    /// balanced complete bipartite subgraph `(I, V - I)`.
    pub balanced_bipartite: Option<(VertexSet, VertexSet)>,
}

pub fn check_classical(g: &Graph) -> ClassicalFlags {
    let n = g.order();
    let dirac = n > 0 && 2 * g.min_degree().unwrap_or(0) >= n;
    let alpha = independence_number(g);
    let kappa = vertex_connectivity(g);
    let balanced_bipartite = if dirac {
        check_slack_condition(g, Slack::Strict).witness().and_then(|w| {
            let rest = VertexSet::full(n).difference(&w.set);
            let complete = w.set.iter().all(|v| g.degree(v) == rest.len());
            (2 * w.set.len() == n && complete).then(|| (w.set.clone(), rest))
        })
    } else {
        None
    };
    ClassicalFlags { dirac, chvatal_erdos: alpha <= kappa, alpha, kappa, balanced_bipartite }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<VertexSet>())
            .filter(|s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn mis_examples() {
        assert_eq!(max_independent_set(&Graph::complete(5)).len(), 1);
        assert_eq!(exhaustive_alpha(&Graph::cycle(5)), 2);
        assert_eq!(max_independent_set(&Graph::cycle(5)).len(), 2);
        assert_eq!(exhaustive_alpha(&Graph::petersen()), 4);
        let mis = max_independent_set(&Graph::petersen());
        assert_eq!(mis.len(), 4);
        assert!(Graph::petersen().is_independent(&mis));
        assert_eq!(max_independent_set(&Graph::empty(0)).len(), 0);
        assert_eq!(max_independent_set(&Graph::empty(70)).len(), 70);
    }

    #[test]
    fn sigma_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(sigma_k(&c5, 1).value, Some(2));
        assert_eq!(sigma_k(&c5, 2).value, Some(4));
        assert!(sigma_k(&c5, 3).is_infinite());
        let s = sigma_k(&Graph::petersen(), 4);
        assert_eq!(s.value, Some(12));
        assert!(Graph::petersen().is_independent(s.set.as_ref().unwrap()));
    }

    #[test]
    fn slack_examples() {
        assert!(check_slack_condition(&Graph::complete(5), Slack::Strict).holds());

        let w = check_slack_condition(&Graph::petersen(), Slack::Weak);
        let w = w.witness().unwrap();
        assert_eq!((w.set.len(), w.delta), (4, 3));
        assert!(w.verify(&Graph::petersen()));

        let k33 = Graph::complete_bipartite(3, 3);
        assert!(check_slack_condition(&k33, Slack::Weak).holds());
        let w = check_slack_condition(&k33, Slack::Strict);
        let w = w.witness().unwrap();
        assert_eq!((w.set.len(), w.delta), (3, 3));

        let w = check_slack_condition(&Graph::cycle(5), Slack::Strict);
        assert_eq!(w.witness().map(|w| (w.set.len(), w.delta)), Some((2, 2)));
    }

    #[test]
    fn isolated_vertex_violates_both() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        for slack in [Slack::Strict, Slack::Weak] {
            let v = check_slack_condition(&g, slack);
            let w = v.witness().unwrap();
            assert!(w.violates(slack));
            assert!(w.set.contains(2));
        }
    }

    #[test]
    fn classical_examples() {
        let c4 = Graph::cycle(4);
        let f = check_classical(&c4);
        assert!(f.dirac);
        let (i, rest) = f.balanced_bipartite.unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(rest.len(), 2);

        let f = check_classical(&Graph::petersen());
        assert!(!f.chvatal_erdos);
        assert_eq!((f.alpha, f.kappa), (4, 3));

        let f = check_classical(&Graph::complete(5));
        assert!(f.chvatal_erdos);
        assert!(check_slack_condition(&Graph::complete(5), Slack::Weak).holds());
    }
}
