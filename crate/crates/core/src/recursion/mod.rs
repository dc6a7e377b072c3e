//! Generic recursion over terms: folds into substitution-, swapping- and
//! full-recursion models, semantic interpretation, sorted folds, binder
//! refreshing and skeletons.
//!
//! Folds traverse concrete terms. Their results are independent of binder
//! names exactly when the model obeys its laws, which [`check_model_laws`]
//! samples.
//!
//! Fresh induction in practice: to prove or compute something over `t` with
//! parameters `p`, first apply [`refresh_binders`] with `avoid` set to the
//! variables of `p`. Every binder met afterwards is fresh for the
//! parameters, so the abstraction case reduces to the body.

mod fold;
mod interpret;
mod laws;
pub mod models;
mod refresh;
mod skel;

pub use fold::{
    fold_fs, fold_fs_abs, fold_fs_sorted, fold_full, fold_full_abs, fold_swap, fold_swap_abs, FsModel, FullModel,
    SortedFoldError, SortedFsModel, SwapModel,
};
pub use interpret::{interpret, interpret_abs, BodyFn, SemDomain, Valuation, ValuationUndefined};
pub use laws::{
    check_model_laws, Counterexample, FsLaws, FullLaws, Law, LawReport, LawSubject, OperatorInstance, SwapLaws,
};
pub use refresh::{refresh_binders, refresh_binders_abs};
pub use skel::{skel, skel_abs, Tree};
