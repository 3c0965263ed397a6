//! Drivers: load an instance, sharpen it step by step, write and replay
//! traces, and the analysis and brute-force oracle reports.

mod analyze;
mod instance;
mod oracle;
mod sharpen;
mod trace;

pub use analyze::{analyze, AnalysisReport, ContextSummary, EdgeAnalysis};
pub use instance::{
    from_input, load, parse, with_words, Caps, InputFile, InputOptions, ProblemInstance,
    DEFAULT_GROUP_CAP,
};
pub use oracle::{canonical_sharp_pairs, oracle, OracleReport, PairVerdict};
pub use sharpen::{current_diagram, non_sharp_edges, sharpen, sharpen_no_h3, Route, Step};
pub use trace::{replay, EdgeJson, ReplayReport, StepJson, TraceFile};

use thiserror::Error;

use crate::coxcore::CoxError;
use crate::deform::DeformError;
use crate::roots::RootsError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("S[{index}] is not a reflection: {reason}")]
    NotAReflection { index: usize, reason: String },
    #[error("the diagram of S contains a subset of type H3: {0:?}")]
    HasH3Subset(Vec<String>),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("input inconsistent: {0}")]
    InputInconsistent(String),
    #[error("trace does not replay: {0}")]
    Replay(String),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::CapExceeded(_) => 3,
            PipelineError::InputInconsistent(_) | PipelineError::Replay(_) => 4,
            _ => 2,
        }
    }
}

impl From<CoxError> for PipelineError {
    fn from(e: CoxError) -> Self {
        match e {
            CoxError::GroupTooLarge { .. } | CoxError::CapTooSmall { .. } => {
                PipelineError::CapExceeded(e.to_string())
            }
            other => PipelineError::InputInconsistent(other.to_string()),
        }
    }
}

impl From<RootsError> for PipelineError {
    fn from(e: RootsError) -> Self {
        match e {
            RootsError::CapTooSmall { .. } => PipelineError::CapExceeded(e.to_string()),
            other => PipelineError::InputInconsistent(other.to_string()),
        }
    }
}

impl From<DeformError> for PipelineError {
    fn from(e: DeformError) -> Self {
        match e {
            DeformError::Cox(c) => c.into(),
            DeformError::Roots(r) => r.into(),
            other => PipelineError::InputInconsistent(other.to_string()),
        }
    }
}
