//! 2-factors with few cycles: the cut-set pipeline for at most `k` cycles
//! and the toughness split for at most two.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::auxiliary::{build_auxiliary_h, cycle_through_s, respan_segment};
use super::extend::{splice_vertex, SpliceCase};
use super::hamilton::{hamilton_cycle, hamilton_cycle_within, is_hamilton_connected, longest_dominating_cycle};
use super::SearchBounds;
use crate::bits::{adjacency_masks, count_components, for_each_combination, full_mask, set_of};
use crate::error::{check_bound, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::independence::{check_slack_condition, sigma_k, Slack, SlackVerdict};
use crate::two_factor::{verify_two_factor, TwoFactor};

/// The step of the argument a hypothesis failure is attributed to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    SigmaBound,
    SlackCondition,
    CutSetExists,
    ComponentDegree,
    SingleCutVertex,
    ComponentCount,
    CycleThroughCut,
    Respanning,
    HamiltonCycle,
    Domination,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::SigmaBound => "degree-sum bound σ_{k+1}(G) >= n",
            Claim::SlackCondition => "strict slack condition",
            Claim::CutSetExists => "existence of a cut set S with ω(G-S) >= |S|+k-1",
            Claim::ComponentDegree => "δ(G-S) >= k with every component of order >= k+1",
            Claim::SingleCutVertex => "single cut vertex case",
            Claim::ComponentCount => "ω(G-S) = |S|+k-1 with |S| <= k+1",
            Claim::CycleThroughCut => "cycle through S in the auxiliary graph",
            Claim::Respanning => "segment respanning",
            Claim::HamiltonCycle => "Hamilton cycle under σ_2(G) >= n",
            Claim::Domination => "longest cycle dominates",
        })
    }
}

fn hypothesis(claim: Claim, detail: impl Into<String>, witness: Option<VertexSet>) -> Error {
    Error::Hypothesis { claim, detail: detail.into(), witness }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleSource {
    /// Hamilton cycle of a component of `G - S`.
    Component,
    /// Hamilton cycle of a component together with the single cut vertex.
    ComponentWithCutVertex,
    /// Hamilton cycle of `G[S ∪ V(G_a) ∪ V(G_b)]` for a two-vertex cut.
    CutWithTwoComponents,
    /// Hamilton cycle of the whole graph.
    Whole,
    /// A longest cycle.
    Longest,
}

/// One recorded step of a constructive run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    Hypotheses { k: usize, order: usize, sigma: Option<usize> },
    Toughness { tough: bool, cut: Option<VertexSet> },
    CutSetRejected { cut: VertexSet, reason: String },
    CutSet { cut: VertexSet, components: Vec<VertexSet>, hamilton_connected: Vec<bool> },
    /// Adds a cycle to the partial 2-factor.
    Cycle { cycle: Vec<usize>, source: CycleSource },
    /// Splices `vertex` into the partial 2-factor.
    Extend { vertex: usize, case: SpliceCase },
    /// Cut vertices in cycle order and the component between each and the next.
    CutCycle { cut: Vec<usize>, components: Vec<usize> },
    /// Segment `segment` now runs through component `component` along `path`.
    Respan { segment: usize, component: usize, path: Vec<usize> },
    /// Closes the respanned segments into one cycle.
    JoinSegments,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub steps: Vec<TraceStep>,
}

impl PipelineTrace {
    /// Rebuilds the 2-factor from the recorded steps alone.
    pub fn replay(&self, g: &Graph) -> Result<TwoFactor> {
        let mut factor = TwoFactor::default();
        let mut segments: Vec<Vec<usize>> = Vec::new();
        for step in &self.steps {
            match step {
                TraceStep::Cycle { cycle, .. } => factor.cycles.push(cycle.clone()),
                TraceStep::Extend { vertex, case } => {
                    let uncovered = VertexSet::full(g.order()).difference(&factor.covered());
                    let e = splice_vertex(g, &uncovered, &factor, *vertex)?;
                    if e.case != *case {
                        return Err(Error::Internal(format!("replayed splice of {vertex} took {:?}, trace says {case:?}", e.case)));
                    }
                    factor = e.factor;
                }
                TraceStep::Respan { segment, path, .. } => {
                    if *segment != segments.len() {
                        return Err(Error::Internal(format!("segment {segment} out of order")));
                    }
                    segments.push(path.clone());
                }
                TraceStep::JoinSegments => {
                    let cycle = segments.iter().flat_map(|p| p[..p.len() - 1].iter().copied()).collect();
                    factor.cycles.push(cycle);
                    segments.clear();
                }
                _ => {}
            }
        }
        if !verify_two_factor(g, &factor) {
            return Err(Error::Internal("replayed trace does not yield a 2-factor".into()));
        }
        Ok(factor)
    }

    /// One line per step.
    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("trace steps serialize"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub factor: TwoFactor,
    pub trace: PipelineTrace,
}

fn check_hypotheses(g: &Graph, k: usize, trace: &mut PipelineTrace) -> Result<()> {
    let n = g.order();
    let sigma = sigma_k(g, k + 1);
    trace.steps.push(TraceStep::Hypotheses { k, order: n, sigma: sigma.value });
    if !sigma.at_least(n) {
        return Err(hypothesis(
            Claim::SigmaBound,
            format!("σ_{}(G) = {} < {n}", k + 1, sigma.value.unwrap_or_default()),
            sigma.set,
        ));
    }
    if let SlackVerdict::Violated(w) = check_slack_condition(g, Slack::Strict) {
        return Err(hypothesis(
            Claim::SlackCondition,
            format!("|I| = {} > δ_G(I) - 1 = {}", w.set.len(), w.delta as i64 - 1),
            Some(w.set),
        ));
    }
    Ok(())
}

/// Cut sets `S` (`1 <= |S| <= max_size`) with `ω(G-S) >= |S| + surplus`,
/// by increasing size, then lexicographically.
fn cut_sets(g: &Graph, surplus: usize, max_size: usize, first_only: bool) -> Result<Vec<VertexSet>> {
    let n = g.order();
    check_bound("cut-set search", n, 64)?;
    let adj = adjacency_masks(g);
    let full = full_mask(n);
    let mut found = Vec::new();
    for size in 1..=max_size.min(n.saturating_sub(2)) {
        for_each_combination(n, size, |mask| {
            let omega = count_components(&adj, full & !mask);
            if omega >= 2 && omega >= size + surplus {
                found.push(set_of(mask));
                if first_only {
                    return false;
                }
            }
            true
        });
        if first_only && !found.is_empty() {
            break;
        }
    }
    Ok(found)
}

/// A cut set witnessing that `g` is not 1-tough (`ω(G-S) > |S|`), if any.
pub fn toughness_cut(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.order();
    // ω(G-S) <= n - |S|, so only |S| < n/2 can qualify.
    Ok(cut_sets(g, 1, n.saturating_sub(1) / 2, true)?.into_iter().next())
}

struct Run<'a> {
    g: &'a Graph,
    k: usize,
    bounds: SearchBounds,
    steps: Vec<TraceStep>,
}

impl Run<'_> {
    fn cycle_of(&mut self, keep: &VertexSet, source: CycleSource) -> Result<Option<Vec<usize>>> {
        let c = hamilton_cycle_within(self.g, keep, self.bounds.hamilton)?;
        if let Some(c) = &c {
            self.steps.push(TraceStep::Cycle { cycle: c.clone(), source });
        }
        Ok(c)
    }

    fn factor(&self) -> TwoFactor {
        let mut f = TwoFactor::default();
        for step in &self.steps {
            if let TraceStep::Cycle { cycle, .. } = step {
                f.cycles.push(cycle.clone());
            }
        }
        f
    }

    fn with_cut(&mut self, s: &VertexSet) -> Result<()> {
        let (g, k) = (self.g, self.k);
        let comps = g.components_avoiding(s);
        let size = s.len();
        let hamilton_connected = comps
            .iter()
            .map(|c| {
                let (h, _) = g.induced_subgraph(c)?;
                is_hamilton_connected(&h, self.bounds.hamilton)
            })
            .collect::<Result<Vec<bool>>>()?;
        self.steps.push(TraceStep::CutSet { cut: s.clone(), components: comps.clone(), hamilton_connected: hamilton_connected.clone() });

        let rest = VertexSet::full(g.order()).difference(s);
        if let Some(x) = rest.iter().find(|&x| g.degree_into(x, &rest) < k) {
            return Err(hypothesis(
                Claim::ComponentDegree,
                format!("vertex {x} has degree {} < {k} in G - S", g.degree_into(x, &rest)),
                Some(VertexSet::from([x])),
            ));
        }
        if let Some(c) = comps.iter().find(|c| c.len() < k + 1) {
            return Err(hypothesis(Claim::ComponentDegree, format!("component {c} has fewer than {} vertices", k + 1), Some(c.clone())));
        }
        if comps.len() != size + k - 1 {
            let claim = if size == 1 { Claim::SingleCutVertex } else { Claim::ComponentCount };
            return Err(hypothesis(claim, format!("ω(G - S) = {} but |S| + k - 1 = {}", comps.len(), size + k - 1), Some(s.clone())));
        }

        if size == 1 {
            return self.single_cut_vertex(s, &comps);
        }
        if size > k + 1 {
            return Err(hypothesis(Claim::ComponentCount, format!("|S| = {size} > k + 1 = {}", k + 1), Some(s.clone())));
        }
        if let Some(bad) = hamilton_connected.iter().position(|&hc| !hc) {
            if size != 2 {
                return Err(hypothesis(
                    Claim::ComponentCount,
                    format!("component {} is not Hamilton-connected while |S| = {size}", comps[bad]),
                    Some(comps[bad].clone()),
                ));
            }
            return self.two_cut_vertices(s, &comps);
        }
        self.respan(s)
    }

    fn single_cut_vertex(&mut self, s: &VertexSet, comps: &[VertexSet]) -> Result<()> {
        let v = s.first().expect("nonempty cut");
        let mut cycles = Vec::with_capacity(comps.len());
        for c in comps {
            cycles.push(hamilton_cycle_within(self.g, c, self.bounds.hamilton)?);
        }
        if cycles.iter().all(Option::is_some) {
            for c in cycles.into_iter().flatten() {
                self.steps.push(TraceStep::Cycle { cycle: c, source: CycleSource::Component });
            }
            let f = self.factor();
            let e = splice_vertex(self.g, s, &f, v)?;
            self.steps.push(TraceStep::Extend { vertex: v, case: e.case });
            return Ok(());
        }
        let a = cycles.iter().position(Option::is_none).expect("some component lacks a Hamilton cycle");
        if self.cycle_of(&comps[a].union(s), CycleSource::ComponentWithCutVertex)?.is_none() {
            return Err(hypothesis(
                Claim::SingleCutVertex,
                format!("neither component {} nor it with cut vertex {v} is Hamiltonian", comps[a]),
                Some(comps[a].clone()),
            ));
        }
        for (i, c) in cycles.into_iter().enumerate() {
            if i == a {
                continue;
            }
            match c {
                Some(c) => self.steps.push(TraceStep::Cycle { cycle: c, source: CycleSource::Component }),
                None => {
                    return Err(hypothesis(
                        Claim::SingleCutVertex,
                        format!("components {} and {} are both non-Hamiltonian", comps[a], comps[i]),
                        Some(comps[i].clone()),
                    ))
                }
            }
        }
        Ok(())
    }

    fn two_cut_vertices(&mut self, s: &VertexSet, comps: &[VertexSet]) -> Result<()> {
        let own: Vec<Option<Vec<usize>>> = comps
            .iter()
            .map(|c| hamilton_cycle_within(self.g, c, self.bounds.hamilton))
            .collect::<Result<_>>()?;
        for a in 0..comps.len() {
            for b in a + 1..comps.len() {
                let others_ok = own.iter().enumerate().all(|(i, c)| i == a || i == b || c.is_some());
                if !others_ok {
                    continue;
                }
                let keep = s.union(&comps[a]).union(&comps[b]);
                if self.cycle_of(&keep, CycleSource::CutWithTwoComponents)?.is_none() {
                    continue;
                }
                for (i, c) in own.iter().enumerate() {
                    if i != a && i != b {
                        let cycle = c.clone().expect("checked above");
                        self.steps.push(TraceStep::Cycle { cycle, source: CycleSource::Component });
                    }
                }
                return Ok(());
            }
        }
        Err(hypothesis(Claim::ComponentCount, format!("no pair of components of G - {s} closes into a Hamilton cycle with S"), Some(s.clone())))
    }

    fn respan(&mut self, s: &VertexSet) -> Result<()> {
        let g = self.g;
        let h = build_auxiliary_h(g, s)?;
        let Some(mut cycle) = cycle_through_s(&h) else {
            return Err(hypothesis(Claim::CycleThroughCut, format!("no cycle of the auxiliary graph contains all of {s}"), Some(s.clone())));
        };
        self.steps.push(TraceStep::CutCycle { cut: cycle.order.iter().map(|&i| h.cut[i]).collect(), components: cycle.right.clone() });
        for i in 0..cycle.order.len() {
            let Some((b, path)) = respan_segment(g, &h, &cycle, i, self.bounds.hamilton)? else {
                let (u, w) = (h.cut[cycle.order[i]], h.cut[cycle.order[(i + 1) % cycle.order.len()]]);
                return Err(hypothesis(Claim::Respanning, format!("no free component carries a spanning path from {u} to {w}"), Some(VertexSet::from([u, w]))));
            };
            cycle.right[i] = b;
            self.steps.push(TraceStep::Respan { segment: i, component: b, path });
        }
        self.steps.push(TraceStep::JoinSegments);
        for (j, c) in h.components.iter().enumerate() {
            if cycle.right.contains(&j) {
                continue;
            }
            if self.cycle_of(c, CycleSource::Component)?.is_none() {
                return Err(Error::Internal(format!("Hamilton-connected component {c} has no Hamilton cycle")));
            }
        }
        Ok(())
    }
}

fn finish(g: &Graph, steps: Vec<TraceStep>, max_cycles: usize) -> Result<Construction> {
    let trace = PipelineTrace { steps };
    let factor = trace.replay(g)?;
    if factor.cycle_count() > max_cycles {
        return Err(Error::Internal(format!("constructed {} cycles, expected at most {max_cycles}", factor.cycle_count())));
    }
    Ok(Construction { factor, trace })
}

/// Runs the cut-set construction for the fixed cut set `s`. Hypotheses on
/// `g` are assumed to have been checked.
fn run_with_cut(g: &Graph, k: usize, s: &VertexSet, bounds: SearchBounds, prefix: Vec<TraceStep>) -> Result<Construction> {
    let mut run = Run { g, k, bounds, steps: prefix };
    run.with_cut(s)?;
    finish(g, run.steps, k)
}

/// A 2-factor with at most `k` cycles for `k >= 1`, under `σ_{k+1}(G) >= n`,
/// the strict slack condition, and (for `k >= 2`) a cut set `S` with
/// `ω(G-S) >= |S| + k - 1`.
///
/// Cut sets are tried by increasing size. If a cut set fails a later step,
/// the failure is logged in the trace and the next one is tried.
pub fn two_factor_k_cycles(g: &Graph, k: usize, bounds: SearchBounds) -> Result<Construction> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut trace = PipelineTrace::default();
    check_hypotheses(g, k, &mut trace)?;
    if k == 1 {
        let Some(c) = hamilton_cycle(g, bounds.hamilton)? else {
            return Err(hypothesis(Claim::HamiltonCycle, "no Hamilton cycle", None));
        };
        trace.steps.push(TraceStep::Cycle { cycle: c, source: CycleSource::Whole });
        return finish(g, trace.steps, 1);
    }
    let candidates = cut_sets(g, k - 1, bounds.cut_set, false)?;
    if candidates.is_empty() {
        return Err(hypothesis(
            Claim::CutSetExists,
            format!("no S with |S| <= {} has ω(G-S) >= |S| + {}", bounds.cut_set, k - 1),
            None,
        ));
    }
    let mut last = None;
    let mut steps = trace.steps;
    for s in &candidates {
        match run_with_cut(g, k, s, bounds, steps.clone()) {
            Ok(c) => return Ok(c),
            Err(e @ Error::Hypothesis { .. }) => {
                steps.push(TraceStep::CutSetRejected { cut: s.clone(), reason: e.to_string() });
                last = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one candidate"))
}

/// A 2-factor with at most two cycles under `σ_3(G) >= n` and the strict
/// slack condition.
///
/// 1-tough graphs get a single cycle: a longest cycle, which must dominate,
/// with every leftover vertex spliced in. Otherwise the cut-set construction
/// runs with `k = 2` starting from the cut set that breaks toughness.
pub fn two_factor_le_two_cycles(g: &Graph, bounds: SearchBounds) -> Result<Construction> {
    let mut trace = PipelineTrace::default();
    check_hypotheses(g, 2, &mut trace)?;
    let cut = toughness_cut(g)?;
    trace.steps.push(TraceStep::Toughness { tough: cut.is_none(), cut: cut.clone() });
    if let Some(s) = cut {
        return match run_with_cut(g, 2, &s, bounds, trace.steps.clone()) {
            Ok(c) => Ok(c),
            Err(Error::Hypothesis { .. }) => two_factor_k_cycles(g, 2, bounds),
            Err(e) => Err(e),
        };
    }
    let (cycle, dominating) = longest_dominating_cycle(g, bounds.hamilton)?;
    let on: VertexSet = cycle.iter().copied().collect();
    if !dominating {
        let rest = VertexSet::full(g.order()).difference(&on);
        return Err(hypothesis(Claim::Domination, format!("a longest cycle of length {} leaves an edge uncovered", cycle.len()), Some(rest)));
    }
    trace.steps.push(TraceStep::Cycle { cycle: cycle.clone(), source: CycleSource::Longest });
    let mut factor = TwoFactor::new(vec![cycle]);
    let mut uncovered = VertexSet::full(g.order()).difference(&on);
    while let Some(v) = uncovered.first() {
        let e = splice_vertex(g, &uncovered, &factor, v)?;
        trace.steps.push(TraceStep::Extend { vertex: v, case: e.case });
        factor = e.factor;
        uncovered.remove(v);
    }
    finish(g, trace.steps, 1)
}
