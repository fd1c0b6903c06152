//! Constructive routines: vertex splicing, Hamiltonicity searches, and the
//! cut-set pipeline for 2-factors with few cycles.

mod auxiliary;
mod extend;
mod hamilton;
mod pipeline;

pub use auxiliary::{build_auxiliary_h, cycle_through_s, respan_segment, AuxiliaryBipartite, CutCycle};
pub use extend::{chordless_cycle, extend_two_factor, splice_vertex, two_factor_via_extension, Extension, SpliceCase};
pub use hamilton::{
    hamilton_cycle, hamilton_cycle_within, hamilton_path, hamilton_path_within, is_hamilton_connected, longest_cycle,
    longest_dominating_cycle, DEFAULT_HAMILTON_BOUND,
};
pub use pipeline::{
    toughness_cut, two_factor_k_cycles, two_factor_le_two_cycles, Claim, Construction, CycleSource, PipelineTrace,
    TraceStep,
};

pub const DEFAULT_CUT_SET_BOUND: usize = 8;

/// Ceilings for the exhaustive searches inside the pipelines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SearchBounds {
    /// Largest graph handed to a Hamiltonicity search.
    pub hamilton: usize,
    /// Largest cut set considered.
    pub cut_set: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { hamilton: DEFAULT_HAMILTON_BOUND, cut_set: DEFAULT_CUT_SET_BOUND }
    }
}
