//! Reconfiguration of `H`-models (minor embeddings) of a host graph `G`.
//!
//! An `H`-model labels every vertex of `G` with a vertex of `H` so that each
//! label class is nonempty and connected and every edge of `H` is realized
//! by an edge of `G` between the corresponding classes. Two models are
//! adjacent when they differ in the label of a single vertex. This crate
//! decides single steps, analyses the structure of models, builds and
//! searches the reconfiguration graph, and runs constructive planners that
//! emit step-by-step sequences between models.

pub mod campaign;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod model;
pub mod planner;
pub mod recon;
pub mod sequence;
pub mod vertex_set;

/// Largest host or target size; vertex sets are single `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

pub use campaign::{run_campaign, CampaignParams, CampaignReport, Verdict, CAMPAIGNS};
pub use error::{Error, Result};
pub use graph::{BlockTree, CanonicalForm, Graph};
pub use planner::{
    lift_sequence_through_split, plan_clique, plan_genwheel, plan_k2, plan_relabel_leafblock, plan_slurp_component,
    plan_slurp_siphon,
};
pub use model::{enumerate_models, EnumOptions, HModel, LemmaCheck, LemmaReport, Violation, DEFAULT_BUDGET};
pub use recon::{build_recon_graph, is_host, Condition, Diameter, ReconGraph, ReconSummary, StepVerdict};
pub use sequence::{ReconSequence, Step};
pub use vertex_set::VertexSet;
