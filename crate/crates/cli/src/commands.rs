use anyhow::{bail, Result};
use twofactor::barrier::{find_barrier, minimal_barrier, BarrierSearch};
use twofactor::constructive::{two_factor_k_cycles, two_factor_le_two_cycles, Claim};
use twofactor::corpus::connected_graphs;
use twofactor::families::{gen_family_member, gen_tightness_example, recognize_family};
use twofactor::independence::{check_classical, check_slack_condition, IndependentSetWitness, Slack, SlackVerdict};
use twofactor::io::{emit_certificate, emit_graph6, parse_graph6, CertificateDocument, Payload};
use twofactor::two_factor::{find_two_factor, min_cycle_two_factor};
use twofactor::{Error, Graph};

use crate::input::read_graph;
use crate::{oracle_bound, out, Bounds, Input, EXIT_INCONCLUSIVE, EXIT_NEGATIVE, EXIT_OK};

fn emit(g: &Graph, doc: CertificateDocument) -> Result<()> {
    out(&emit_certificate(&doc, g)?)
}

fn none(g: &Graph, reason: impl Into<String>) -> CertificateDocument {
    CertificateDocument::new(g, Payload::None { reason: reason.into() })
}

/// Bound overruns become exit code 3; anything else is a hard error.
fn inconclusive(g: &Graph, e: Error) -> Result<u8> {
    match e {
        Error::BoundExceeded { .. } => {
            emit(g, none(g, e.to_string()))?;
            Ok(EXIT_INCONCLUSIVE)
        }
        other => Err(other.into()),
    }
}

/// The certificate explaining why `g` has no 2-factor.
fn no_two_factor(g: &Graph, bound: usize) -> CertificateDocument {
    match find_barrier(g, bound) {
        BarrierSearch::Found(b) => CertificateDocument::new(g, Payload::barrier(&b)),
        _ => none(g, "no 2-factor; no barrier found within the search bound"),
    }
}

pub fn check(input: &Input, slack: Slack, classical: bool) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    if classical {
        eprintln!("{}", serde_json::to_string(&check_classical(&g))?);
    }
    match check_slack_condition(&g, slack) {
        SlackVerdict::Holds => {
            emit(&g, none(&g, format!("slack condition c = {} holds", slack.c())))?;
            Ok(EXIT_OK)
        }
        SlackVerdict::Violated(w) => {
            emit(&g, CertificateDocument::new(&g, Payload::violating_set(&w, slack)))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

pub fn two_factor(input: &Input, barrier_bound: usize) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    match find_two_factor(&g)? {
        Some(f) => {
            emit(&g, CertificateDocument::new(&g, Payload::two_factor(&f)))?;
            Ok(EXIT_OK)
        }
        None => {
            emit(&g, no_two_factor(&g, barrier_bound))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

pub fn min_cycles(input: &Input, limit: Option<usize>) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    let limit = match limit {
        Some(l) => l,
        None => oracle_bound().map_err(anyhow::Error::msg)?,
    };
    match min_cycle_two_factor(&g, limit) {
        Ok(Some((f, _))) => {
            emit(&g, CertificateDocument::new(&g, Payload::two_factor(&f)))?;
            Ok(EXIT_OK)
        }
        Ok(None) => {
            emit(&g, no_two_factor(&g, limit))?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => inconclusive(&g, e),
    }
}

pub fn barrier(input: &Input, minimal: bool, bound: usize) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    if let Some(f) = find_two_factor(&g)? {
        emit(&g, CertificateDocument::new(&g, Payload::two_factor(&f)))?;
        return Ok(EXIT_NEGATIVE);
    }
    if minimal {
        return match minimal_barrier(&g, bound) {
            Ok(b) => {
                emit(&g, CertificateDocument::new(&g, Payload::barrier(&b)))?;
                Ok(EXIT_OK)
            }
            Err(e) => inconclusive(&g, e),
        };
    }
    match find_barrier(&g, bound) {
        BarrierSearch::Found(b) => {
            emit(&g, CertificateDocument::new(&g, Payload::barrier(&b)))?;
            Ok(EXIT_OK)
        }
        _ => {
            emit(&g, none(&g, "no 2-factor; no barrier found within the search bound"))?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

/// `k = None` selects the at-most-two-cycles route.
pub fn k_cycles(input: &Input, k: Option<usize>, bounds: Bounds) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    let result = match k {
        Some(k) => two_factor_k_cycles(&g, k, bounds.search()),
        None => two_factor_le_two_cycles(&g, bounds.search()),
    };
    match result {
        Ok(c) => {
            emit(&g, CertificateDocument::new(&g, Payload::two_factor(&c.factor)).with_trace(c.trace))?;
            Ok(EXIT_OK)
        }
        Err(Error::Hypothesis { claim: Claim::SlackCondition, witness: Some(set), .. }) => {
            let w = IndependentSetWitness::new(&g, set).expect("pipeline reports independent sets");
            emit(&g, CertificateDocument::new(&g, Payload::violating_set(&w, Slack::Strict)))?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e @ Error::Hypothesis { .. }) => {
            emit(&g, none(&g, e.to_string()))?;
            Ok(EXIT_NEGATIVE)
        }
        Err(Error::Precondition(p)) => bail!("{p}"),
        Err(e) => inconclusive(&g, e),
    }
}

pub fn generate(family: Option<usize>, core: Option<String>, tightness: Option<usize>, connected: Option<usize>) -> Result<u8> {
    let graphs = match (family, tightness, connected) {
        (Some(ell), None, None) => {
            let core = match core {
                Some(text) => parse_graph6(text.trim().as_bytes())?,
                None => Graph::empty(ell.saturating_sub(1)),
            };
            vec![gen_family_member(ell, &core)?]
        }
        (None, Some(k), None) => {
            if k == 0 {
                bail!("--tightness needs k >= 1");
            }
            vec![gen_tightness_example(k)]
        }
        (None, None, Some(n)) => connected_graphs(n)?,
        _ => bail!("choose exactly one of --family, --tightness, --connected"),
    };
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&emit_graph6(g));
        out.push('\n');
    }
    crate::out(&out)?;
    Ok(EXIT_OK)
}

pub fn recognize(input: &Input) -> Result<u8> {
    let g = read_graph(input.path.as_deref())?;
    match recognize_family(&g) {
        Some(d) => {
            emit(&g, CertificateDocument::new(&g, Payload::family_member(&d)))?;
            Ok(EXIT_OK)
        }
        None => {
            emit(&g, none(&g, "not of the form H ∨ ℓK₂ with |H| = ℓ - 1"))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}
