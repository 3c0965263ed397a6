//! Coxeter matrices, the geometric representation, words and group elements.

mod group;
mod linalg;
mod matrix;
mod reflection;
mod system;
mod word;

pub use group::{
    enumerate_group, enumerate_subgroup, enumerate_with, eval, find_in_subgroup, matrix_order,
    order_with_cap, GroupElement, Order, DEFAULT_ORDER_CAP,
};
pub use linalg::{neg_vector, unit_vector, Mat};
pub use matrix::{examples, CoxeterMatrix, Label};
pub use reflection::{
    coxeter_matrix_of, pair_label, reflection_from_conjugate, reflection_matrix,
    shortest_conjugate, ReflectionRecord, Root,
};
pub use system::{build_system, build_system_in, form_value, CoxeterSystem};
pub use word::{parse_roles, Word};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("product order exceeds the cap {cap} although the roots certify a finite order")]
    CapTooSmall { cap: u64 },
    #[error(transparent)]
    Field(#[from] AlgebraError),
}
