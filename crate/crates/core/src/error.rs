use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::MAX_VERTICES)]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),

    #[error("label array has length {got}, host has {expected} vertices")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("label {label} out of range for a target on {k} vertices")]
    LabelOutOfRange { label: usize, k: usize },
    #[error("labels {0} and {1} are not adjacent in the target graph")]
    NotAnHEdge(usize, usize),
    #[error("not a model: {0}")]
    InvalidModel(Violation),
    #[error("vertex {vertex} already carries label {label}")]
    SameLabel { vertex: usize, label: usize },

    #[error("state space exceeds the budget of {budget} states")]
    StateSpaceExceeded { budget: u64 },
    #[error("target graph is not a minor of the host graph")]
    NotAMinor,
    #[error("model is not a node of this reconfiguration graph")]
    UnknownModel,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("precondition of {lemma} failed: {detail}")]
    PreconditionFailed { lemma: &'static str, detail: String },
    #[error("host graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not complete")]
    NotComplete,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a generalized wheel: {0}")]
    NotAGeneralizedWheel(String),
    #[error("could not lift step {step} through the split")]
    LiftFailed { step: usize },
    #[error("{planner} emitted an illegal step: {detail}")]
    PlanInvariant { planner: &'static str, detail: String },
    #[error("step {index} is illegal: {detail}")]
    IllegalStep { index: usize, detail: String },

    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("generalized wheel parts differ in size ({0} vs {1})")]
    PartSizeMismatch(usize, usize),
    #[error("generalized wheel part {0} is disconnected")]
    PartDisconnected(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn precondition(lemma: &'static str, detail: impl Into<String>) -> Self {
        Error::PreconditionFailed { lemma, detail: detail.into() }
    }
}
