//! Angle-deformations: the standard H3/H4 maps, special deformations, gluing,
//! and the inductive construction around an edge of label 5.

mod construct;
mod record;
mod verify;
mod words;

pub use construct::{
    angle_deformation, core_kind, k_def, k_mirror, k_special_deformation, sharpening_omega,
    standard_deformation, tame_deformation, theta_deformation, wild_deformation,
};
pub use record::{edge_key, merge, Deformation, EdgeImage};
pub use verify::{verify_deformation, Check, CheckStatus, Realization, VerificationReport};
pub use words::{CoreKind, H4Words, Roles, StandardWords, OMEGA_1, OMEGA_2, OMEGA_3};

use thiserror::Error;

use crate::coxcore::CoxError;
use crate::diagrams::DiagramError;
use crate::roots::RootsError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeformError {
    #[error("deformations disagree on their overlap: {0}")]
    IncompatibleOverlap(String),
    #[error("edge {0} lies in neither domain")]
    EdgeNotCovered(String),
    #[error("the edge is not a Theta-edge")]
    NotThetaEdge,
    #[error("{0} is not tame")]
    NotTame(String),
    #[error("wild vertices present: {0:?}")]
    NotAllTame(Vec<String>),
    #[error("K is not special: {0}")]
    NotASpecial(String),
    #[error("degree does not decrease ({before} -> {after})")]
    DegreeNotDecreasing { before: usize, after: usize },
    #[error("no tame witness for {0}")]
    MissingWitness(String),
    #[error("no sharpening word found")]
    NotFound,
    #[error("the pair is already sharp-angled")]
    AlreadySharp,
    #[error("internal invariant broken: {0}")]
    Invariant(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    Cox(#[from] CoxError),
}
