//! Corpus-wide checks of the existence statements.

use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use twofactor::barrier::{find_barrier, BarrierSearch, DEFAULT_BARRIER_BOUND};
use twofactor::constructive::{two_factor_k_cycles, two_factor_le_two_cycles, two_factor_via_extension, Claim, Construction};
use twofactor::families::recognize_family;
use twofactor::independence::{check_slack_condition, sigma_k, Slack};
use twofactor::io::{emit_graph6, CertificateDocument, Payload};
use twofactor::oracles::{oracle_has_two_factor, oracle_min_cycles, oracle_sigma, oracle_slack_holds, TWO_FACTOR_BOUND};
use twofactor::two_factor::{find_two_factor, verify_two_factor};
use twofactor::{Error, Graph};

use crate::input::read_graph6_stream;
use crate::{Bounds, Input, Theorem, EXIT_INCONCLUSIVE, EXIT_NEGATIVE, EXIT_OK};

pub struct Options {
    pub theorem: Theorem,
    pub k: usize,
    pub jobs: usize,
    pub with_oracle: bool,
    pub all_verdicts: bool,
    pub bounds: Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// The hypothesis does not hold.
    Skipped,
    Ok,
    Violation,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub index: usize,
    pub graph6: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Phases {
    pub read_seconds: f64,
    pub evaluate_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub theorem: Theorem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub graphs: usize,
    pub hypothesis_met: usize,
    pub violations: usize,
    pub inconclusive: usize,
    pub phases: Phases,
    pub verdicts: Vec<Verdict>,
}

impl RunReport {
    pub fn exit_code(&self) -> u8 {
        if self.violations > 0 {
            EXIT_NEGATIVE
        } else if self.inconclusive > 0 {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }
}

struct Eval<'a> {
    g: &'a Graph,
    opts: &'a Options,
}

type Judged = (Outcome, Option<String>, Option<CertificateDocument>);

impl Eval<'_> {
    fn ok(&self, payload: Payload) -> Judged {
        (Outcome::Ok, None, Some(CertificateDocument::new(self.g, payload)))
    }

    /// A violation with the strongest certificate available: a barrier when
    /// the graph has no 2-factor, otherwise the bare reason.
    fn violation(&self, detail: String) -> Judged {
        let g = self.g;
        let payload = match find_two_factor(g) {
            Ok(None) => match find_barrier(g, self.opts.bounds.barrier_bound.max(DEFAULT_BARRIER_BOUND)) {
                BarrierSearch::Found(b) => Payload::barrier(&b),
                _ => Payload::None { reason: detail.clone() },
            },
            _ => Payload::None { reason: detail.clone() },
        };
        (Outcome::Violation, Some(detail), Some(CertificateDocument::new(g, payload)))
    }

    fn skipped(&self) -> Judged {
        (Outcome::Skipped, None, None)
    }

    /// Oracle cross-checks; `Some` describes the first disagreement.
    fn oracle_slack(&self, slack: Slack, production: bool) -> Option<String> {
        match oracle_slack_holds(self.g, slack.c()) {
            Ok(o) if o != production => Some(format!("oracle disagrees on slack condition c = {}", slack.c())),
            _ => None,
        }
    }

    fn oracle_existence(&self, production: bool) -> Option<String> {
        if self.g.order() > TWO_FACTOR_BOUND {
            return None;
        }
        match oracle_has_two_factor(self.g) {
            Ok(o) if o != production => Some(format!("oracle disagrees on 2-factor existence (oracle: {o})")),
            _ => None,
        }
    }

    fn oracle_cycles(&self, limit: usize) -> Option<String> {
        if self.g.order() > TWO_FACTOR_BOUND {
            return None;
        }
        match oracle_min_cycles(self.g) {
            Ok(Some(c)) if c <= limit => None,
            Ok(other) => Some(format!("oracle minimum cycle count {other:?} exceeds {limit}")),
            Err(_) => None,
        }
    }

    fn oracle_sigma(&self, k: usize) -> Option<String> {
        let production = sigma_k(self.g, k).value;
        match oracle_sigma(self.g, k) {
            Ok(o) if o != production => Some(format!("oracle disagrees on σ_{k}: {o:?} vs {production:?}")),
            _ => None,
        }
    }

    fn slack_statement(&self, slack: Slack) -> Judged {
        let g = self.g;
        let hypothesis = check_slack_condition(g, slack).holds();
        if self.opts.with_oracle {
            if let Some(d) = self.oracle_slack(slack, hypothesis) {
                return self.violation(d);
            }
        }
        if !hypothesis {
            return self.skipped();
        }
        let exists = match find_two_factor(g) {
            Ok(f) => f,
            Err(e) => return self.violation(e.to_string()),
        };
        if self.opts.with_oracle {
            if let Some(d) = self.oracle_existence(exists.is_some()) {
                return self.violation(d);
            }
        }
        match slack {
            Slack::Strict => match two_factor_via_extension(g) {
                Ok(f) if verify_two_factor(g, &f) => self.ok(Payload::two_factor(&f)),
                Ok(_) => self.violation("constructed 2-factor does not verify".into()),
                Err(e) => self.violation(e.to_string()),
            },
            Slack::Weak => match (exists, recognize_family(g)) {
                (Some(f), None) => self.ok(Payload::two_factor(&f)),
                (None, Some(d)) => self.ok(Payload::family_member(&d)),
                (Some(_), Some(_)) => self.violation("exceptional family member has a 2-factor".into()),
                (None, None) => self.violation("no 2-factor and not an exceptional family member".into()),
            },
        }
    }

    fn cycle_statement(&self, k: usize, result: Result<Construction, Error>) -> Judged {
        if self.opts.with_oracle {
            if let Some(d) = self.oracle_sigma(k + 1) {
                return self.violation(d);
            }
        }
        match result {
            Ok(c) if c.factor.cycle_count() <= k && verify_two_factor(self.g, &c.factor) => {
                if self.opts.with_oracle {
                    if let Some(d) = self.oracle_cycles(k) {
                        return self.violation(d);
                    }
                }
                (
                    Outcome::Ok,
                    None,
                    Some(CertificateDocument::new(self.g, Payload::two_factor(&c.factor)).with_trace(c.trace)),
                )
            }
            Ok(c) => self.violation(format!("construction returned {} cycles", c.factor.cycle_count())),
            Err(Error::Hypothesis { claim: Claim::SigmaBound | Claim::SlackCondition | Claim::CutSetExists, .. }) => {
                self.skipped()
            }
            Err(e @ Error::BoundExceeded { .. }) => (Outcome::Inconclusive, Some(e.to_string()), None),
            Err(e) => self.violation(e.to_string()),
        }
    }

    fn judge(&self) -> Judged {
        let bounds = self.opts.bounds.search();
        match self.opts.theorem {
            Theorem::StrictSlack => self.slack_statement(Slack::Strict),
            Theorem::WeakSlack => self.slack_statement(Slack::Weak),
            Theorem::KCycles => self.cycle_statement(self.opts.k, two_factor_k_cycles(self.g, self.opts.k, bounds)),
            Theorem::TwoCycles => self.cycle_statement(2, two_factor_le_two_cycles(self.g, bounds)),
        }
    }
}

pub fn evaluate(graphs: &[Graph], opts: &Options) -> Result<(Vec<Verdict>, f64)> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build().context("cannot start worker pool")?;
    let start = Instant::now();
    let verdicts = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                let (outcome, detail, certificate) = Eval { g, opts }.judge();
                Verdict { index, graph6: emit_graph6(g), outcome, detail, certificate }
            })
            .collect::<Vec<_>>()
    });
    Ok((verdicts, start.elapsed().as_secs_f64()))
}

pub fn report(graphs: &[Graph], opts: &Options, read_seconds: f64) -> Result<RunReport> {
    let (verdicts, evaluate_seconds) = evaluate(graphs, opts)?;
    let count = |o: Outcome| verdicts.iter().filter(|v| v.outcome == o).count();
    let violations = count(Outcome::Violation);
    let inconclusive = count(Outcome::Inconclusive);
    let hypothesis_met = verdicts.len() - count(Outcome::Skipped);
    let verdicts = if opts.all_verdicts {
        verdicts
    } else {
        verdicts.into_iter().filter(|v| matches!(v.outcome, Outcome::Violation | Outcome::Inconclusive)).collect()
    };
    Ok(RunReport {
        theorem: opts.theorem,
        k: (opts.theorem == Theorem::KCycles).then_some(opts.k),
        graphs: graphs.len(),
        hypothesis_met,
        violations,
        inconclusive,
        phases: Phases { read_seconds, evaluate_seconds },
        verdicts,
    })
}

pub fn run(input: &Input, opts: Options) -> Result<u8> {
    if opts.theorem == Theorem::KCycles && opts.k == 0 {
        anyhow::bail!("--k must be at least 1");
    }
    let start = Instant::now();
    let graphs = read_graph6_stream(input.path.as_deref())?;
    let read_seconds = start.elapsed().as_secs_f64();
    let report = report(&graphs, &opts, read_seconds)?;
    crate::out(&(serde_json::to_string_pretty(&report)? + "\n"))?;
    Ok(report.exit_code())
}
