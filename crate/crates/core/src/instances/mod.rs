//! Worked instances: lambda calculus, first-order logic and CCS.

pub mod ccs;
pub mod fol;
pub mod lambda;

pub use ccs::CcsKit;
pub use fol::{eval_fol, eval_formula, FiniteModel, FolDomain, FolError, FolKit, FolValue};
pub use lambda::{LambdaError, LambdaKit};
