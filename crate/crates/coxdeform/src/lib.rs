//! Angle-deformations of reflection generating sets in Coxeter groups.
//!
//! Given a Coxeter system `(W, R)` and a Coxeter generating set `S` made of
//! reflections, the library finds the non-sharp-angled edges of `S`,
//! classifies them, and rewrites `S` step by step into a sharp-angled
//! generating set. Every step carries a certificate that is checked with
//! exact linear algebra in the geometric representation.

pub mod algebra;
pub mod coxcore;
pub mod deform;
pub mod diagrams;
pub mod pipeline;
pub mod roots;
