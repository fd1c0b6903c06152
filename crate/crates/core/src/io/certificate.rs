use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{emit_graph6, FormatError};
use crate::barrier::Barrier;
use crate::constructive::PipelineTrace;
use crate::families::FamilyDecomposition;
use crate::graph::{Graph, VertexSet};
use crate::independence::{IndependentSetWitness, Slack};
use crate::two_factor::{verify_two_factor, TwoFactor};

pub const VERSION: &str = concat!("twofactor/", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    TwoFactor { cycles: Vec<Vec<usize>> },
    Barrier { s: VertexSet, t: VertexSet, deficiency: i64 },
    ViolatingSet { set: VertexSet, min_degree: usize, condition: Slack },
    FamilyMember { ell: usize, core: VertexSet, pairs: Vec<(usize, usize)> },
    /// No witness either way, e.g. a condition that holds or a search that
    /// stopped at its bound.
    None { reason: String },
}

impl Payload {
    pub fn two_factor(f: &TwoFactor) -> Self {
        Payload::TwoFactor { cycles: f.cycles.clone() }
    }

    pub fn barrier(b: &Barrier) -> Self {
        Payload::Barrier { s: b.s.clone(), t: b.t.clone(), deficiency: b.deficiency }
    }

    pub fn violating_set(w: &IndependentSetWitness, condition: Slack) -> Self {
        Payload::ViolatingSet { set: w.set.clone(), min_degree: w.delta, condition }
    }

    pub fn family_member(d: &FamilyDecomposition) -> Self {
        Payload::FamilyMember { ell: d.ell, core: d.core.clone(), pairs: d.pairs.clone() }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Payload::TwoFactor { .. } => "two-factor",
            Payload::Barrier { .. } => "barrier",
            Payload::ViolatingSet { .. } => "violating-set",
            Payload::FamilyMember { .. } => "family-member",
            Payload::None { .. } => "none",
        }
    }

    /// Re-derives the payload's claim from `g` alone.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Payload::TwoFactor { cycles } => verify_two_factor(g, &TwoFactor::new(cycles.clone())),
            Payload::Barrier { s, t, deficiency } => {
                Barrier::new(g, s.clone(), t.clone()).is_ok_and(|b| b.deficiency == *deficiency)
            }
            Payload::ViolatingSet { set, min_degree, condition } => IndependentSetWitness::new(g, set.clone())
                .is_some_and(|w| w.delta == *min_degree && w.violates(*condition)),
            Payload::FamilyMember { ell, core, pairs } => {
                FamilyDecomposition { ell: *ell, core: core.clone(), pairs: pairs.clone() }.verify(g)
            }
            Payload::None { .. } => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEcho {
    pub n: usize,
    pub m: usize,
    /// SHA-256 of the graph6 encoding, lowercase hex.
    pub hash: String,
}

impl GraphEcho {
    pub fn of(g: &Graph) -> Self {
        GraphEcho { n: g.order(), m: g.size(), hash: hex::encode(Sha256::digest(emit_graph6(g).as_bytes())) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    #[serde(flatten)]
    pub payload: Payload,
    pub graph: GraphEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<PipelineTrace>,
    pub version: String,
}

impl CertificateDocument {
    pub fn new(g: &Graph, payload: Payload) -> Self {
        CertificateDocument { payload, graph: GraphEcho::of(g), trace: None, version: VERSION.to_string() }
    }

    pub fn with_trace(mut self, trace: PipelineTrace) -> Self {
        self.trace = Some(trace);
        self
    }

    /// The echo matches `g`, the payload verifies, and any trace replays to
    /// the certified 2-factor.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.graph != GraphEcho::of(g) || !self.payload.verify(g) {
            return false;
        }
        match (&self.trace, &self.payload) {
            (None, _) => true,
            (Some(trace), Payload::TwoFactor { cycles }) => {
                trace.replay(g).is_ok_and(|f| f.cycles == *cycles)
            }
            (Some(_), _) => false,
        }
    }
}

/// Pretty JSON with a fixed key order. Refuses documents that do not verify
/// against `g`.
pub fn emit_certificate(doc: &CertificateDocument, g: &Graph) -> Result<String, FormatError> {
    if !doc.verify(g) {
        return Err(FormatError::Unverifiable(doc.payload.verdict()));
    }
    let mut text = serde_json::to_string_pretty(doc).expect("certificate serializes");
    text.push('\n');
    Ok(text)
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Certificate(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barrier::minimal_barrier;

    #[test]
    fn two_factor_round_trip() {
        let c5 = Graph::cycle(5);
        let doc = CertificateDocument::new(&c5, Payload::TwoFactor { cycles: vec![vec![0, 1, 2, 3, 4]] });
        let text = emit_certificate(&doc, &c5).unwrap();
        assert!(text.contains("\"verdict\": \"two-factor\""));
        assert!(text.find("\"verdict\"").unwrap() < text.find("\"graph\"").unwrap());
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, doc);
        assert!(back.verify(&c5));
        assert_eq!(emit_certificate(&back, &c5).unwrap(), text);
    }

    #[test]
    fn barrier_and_violating_set() {
        let bowtie = Graph::complete(1).join(&Graph::complete(2).copies(2));
        let b = minimal_barrier(&bowtie, 12).unwrap();
        let doc = CertificateDocument::new(&bowtie, Payload::barrier(&b));
        let back = parse_certificate(&emit_certificate(&doc, &bowtie).unwrap()).unwrap();
        assert!(matches!(back.payload, Payload::Barrier { deficiency: -2, .. }));

        let p = Graph::petersen();
        let w = IndependentSetWitness::new(&p, VertexSet::from([0, 2, 8, 9])).unwrap();
        let doc = CertificateDocument::new(&p, Payload::violating_set(&w, Slack::Strict));
        let text = emit_certificate(&doc, &p).unwrap();
        assert!(text.contains("\"min_degree\": 3"));
    }

    #[test]
    fn refuses_unverifiable() {
        let c5 = Graph::cycle(5);
        let bad = CertificateDocument::new(&c5, Payload::TwoFactor { cycles: vec![vec![0, 1, 2]] });
        assert!(matches!(emit_certificate(&bad, &c5), Err(FormatError::Unverifiable("two-factor"))));
        let doc = CertificateDocument::new(&Graph::complete(5), Payload::TwoFactor { cycles: vec![vec![0, 1, 2, 3, 4]] });
        assert!(emit_certificate(&doc, &c5).is_err());
    }
}
