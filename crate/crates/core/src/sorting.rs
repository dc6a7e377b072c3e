//! Well-sortedness of terms against a signature.
//!
//! Sorts are synthesized bottom-up, so checking a term at a sort is
//! inference followed by comparison.

use std::fmt;

use crate::signature::{Index, OpSymId, Signature, SortId, VarSortId};
use crate::term::{Abs, Term};

/// One step from a node to one of its children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStep {
    Free(Index),
    Bound(Index),
    AbsBody,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathStep::Free(i) => write!(f, "(free {i})"),
            PathStep::Bound(j) => write!(f, "(bound {j})"),
            PathStep::AbsBody => f.write_str("body"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortFailure {
    UnknownOpSym(OpSymId),
    UnknownVarSort(VarSortId),
    ArityDomainMismatch {
        op: OpSymId,
        bound: bool,
        expected: Vec<Index>,
        found: Vec<Index>,
    },
    ChildSortMismatch {
        expected: SortId,
        found: SortId,
    },
    BinderVarSortMismatch {
        expected: VarSortId,
        found: VarSortId,
    },
    NotInBar {
        vs: VarSortId,
        sort: SortId,
    },
    /// The whole term is well-sorted, but not at the requested sort.
    WrongSort {
        expected: SortId,
        found: SortId,
    },
}

fn indices(ix: &[Index]) -> String {
    ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for SortFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortFailure::UnknownOpSym(op) => write!(f, "(unknown-op {op})"),
            SortFailure::UnknownVarSort(vs) => write!(f, "(unknown-varsort {vs})"),
            SortFailure::ArityDomainMismatch { op, bound, expected, found } => write!(
                f,
                "(arity-domain-mismatch {op} {} (expected {}) (found {}))",
                if *bound { "bound" } else { "free" },
                indices(expected),
                indices(found)
            ),
            SortFailure::ChildSortMismatch { expected, found } => {
                write!(f, "(child-sort-mismatch (expected {expected}) (found {found}))")
            }
            SortFailure::BinderVarSortMismatch { expected, found } => {
                write!(f, "(binder-varsort-mismatch (expected {expected}) (found {found}))")
            }
            SortFailure::NotInBar { vs, sort } => write!(f, "(not-in-bar {vs} {sort})"),
            SortFailure::WrongSort { expected, found } => {
                write!(f, "(wrong-sort (expected {expected}) (found {found}))")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortReport {
    Sorted(SortId),
    AbsSorted(VarSortId, SortId),
    Failure { path: Vec<PathStep>, reason: SortFailure },
}

impl SortReport {
    pub fn is_failure(&self) -> bool {
        matches!(self, SortReport::Failure { .. })
    }
}

impl fmt::Display for SortReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortReport::Sorted(s) => write!(f, "(sorted {s})"),
            SortReport::AbsSorted(vs, s) => write!(f, "(abs-sorted {vs} {s})"),
            SortReport::Failure { path, reason } => {
                f.write_str("(fail (path")?;
                for step in path {
                    write!(f, " {step}")?;
                }
                write!(f, ") {reason})")
            }
        }
    }
}

type Failure = (Vec<PathStep>, SortFailure);

fn fail<T>(reason: SortFailure) -> Result<T, Failure> {
    Err((Vec::new(), reason))
}

fn under<T>(step: PathStep, r: Result<T, Failure>) -> Result<T, Failure> {
    r.map_err(|(mut path, reason)| {
        path.insert(0, step);
        (path, reason)
    })
}

fn infer(sig: &Signature, t: &Term) -> Result<SortId, Failure> {
    match t {
        Term::Var(vs, _) => match sig.sort_of_var(vs) {
            Ok(s) => Ok(s.clone()),
            Err(_) => fail(SortFailure::UnknownVarSort(vs.clone())),
        },
        Term::Op(op, inp, binp) => {
            let Some(decl) = sig.op(op) else {
                return fail(SortFailure::UnknownOpSym(op.clone()));
            };
            if !inp.keys().eq(decl.arity.free.keys()) {
                return fail(SortFailure::ArityDomainMismatch {
                    op: op.clone(),
                    bound: false,
                    expected: decl.arity.free.keys().copied().collect(),
                    found: inp.keys().copied().collect(),
                });
            }
            if !binp.keys().eq(decl.arity.bound.keys()) {
                return fail(SortFailure::ArityDomainMismatch {
                    op: op.clone(),
                    bound: true,
                    expected: decl.arity.bound.keys().copied().collect(),
                    found: binp.keys().copied().collect(),
                });
            }
            for (i, child) in inp {
                let expected = &decl.arity.free[i];
                let found = under(PathStep::Free(*i), infer(sig, child))?;
                if &found != expected {
                    return under(
                        PathStep::Free(*i),
                        fail(SortFailure::ChildSortMismatch { expected: expected.clone(), found }),
                    );
                }
            }
            for (j, a) in binp {
                let (evs, es) = &decl.arity.bound[j];
                let r = if &a.vs != evs {
                    if sig.has_varsort(&a.vs) {
                        fail(SortFailure::BinderVarSortMismatch { expected: evs.clone(), found: a.vs.clone() })
                    } else {
                        fail(SortFailure::UnknownVarSort(a.vs.clone()))
                    }
                } else {
                    let body = infer(sig, &a.body).and_then(|found| {
                        if &found != es {
                            fail(SortFailure::ChildSortMismatch { expected: es.clone(), found })
                        } else {
                            Ok(())
                        }
                    });
                    under(PathStep::AbsBody, body)
                };
                under(PathStep::Bound(*j), r)?;
            }
            Ok(decl.result.clone())
        }
    }
}

fn infer_abs(sig: &Signature, a: &Abs) -> Result<(VarSortId, SortId), Failure> {
    if !sig.has_varsort(&a.vs) {
        return fail(SortFailure::UnknownVarSort(a.vs.clone()));
    }
    let s = under(PathStep::AbsBody, infer(sig, &a.body))?;
    match sig.is_in_bar(&a.vs, &s) {
        Ok(true) => Ok((a.vs.clone(), s)),
        _ => fail(SortFailure::NotInBar { vs: a.vs.clone(), sort: s }),
    }
}

/// Infers the sort of `t`, or reports the first failure with its path.
pub fn infer_sort(sig: &Signature, t: &Term) -> SortReport {
    match infer(sig, t) {
        Ok(s) => SortReport::Sorted(s),
        Err((path, reason)) => SortReport::Failure { path, reason },
    }
}

/// Sorts an abstraction: its body must be well-sorted at some `s` with
/// `(vs, s)` in the bound arity of some operation.
pub fn check_abs(sig: &Signature, a: &Abs) -> SortReport {
    match infer_abs(sig, a) {
        Ok((vs, s)) => SortReport::AbsSorted(vs, s),
        Err((path, reason)) => SortReport::Failure { path, reason },
    }
}

/// Checks `t` against an expected sort.
pub fn check_sort(sig: &Signature, s: &SortId, t: &Term) -> SortReport {
    match infer_sort(sig, t) {
        SortReport::Sorted(found) if &found != s => {
            SortReport::Failure { path: Vec::new(), reason: SortFailure::WrongSort { expected: s.clone(), found } }
        }
        other => other,
    }
}

pub fn wls(sig: &Signature, s: &SortId, t: &Term) -> bool {
    matches!(infer_sort(sig, t), SortReport::Sorted(found) if &found == s)
}

pub fn wls_abs(sig: &Signature, vs: &VarSortId, s: &SortId, a: &Abs) -> bool {
    matches!(check_abs(sig, a), SortReport::AbsSorted(fvs, fs) if &fvs == vs && &fs == s)
}
