//! Many-sorted syntax with bindings.
//!
//! Raw terms over a binding signature, with freshness, swapping,
//! capture-avoiding and parallel substitution, alpha-equivalence, sort
//! checking and recursion principles into models and semantic domains.
//!
//! ```
//! use bindsyn::alpha::alpha_eq;
//! use bindsyn::instances::LambdaKit;
//! use bindsyn::subst::subst;
//!
//! let k = LambdaKit::new();
//! // (λx. x y)[z/y] = λx. x z
//! let y = k.lam("x", k.app(k.var("x"), k.var("y")));
//! let out = subst(&y, &k.var("z"), &"y".into(), k.varsort());
//! assert!(alpha_eq(&out, &k.lam("w", k.app(k.var("w"), k.var("z")))));
//! ```

pub mod alpha;
pub mod cli;
pub mod format;
pub mod instances;
pub mod recursion;
pub mod sexp;
pub mod signature;
pub mod sorting;
pub mod subst;
pub mod term;
pub mod testkit;

pub use alpha::{alpha_eq, alpha_eq_abs};
pub use signature::{validate_signature, OpSymId, RawSignature, Signature, SortId, VarSortId};
pub use term::{Abs, Term, VarName, VarRef};
