use std::collections::BTreeMap;

use thiserror::Error;

use crate::signature::{Index, OpSymId, Signature, SortId, VarSortId};
use crate::sorting::{infer_sort, PathStep, SortReport};
use crate::term::{Abs, Term, VarName};

/// A target structure with term-like constructors, freshness and
/// substitution.
///
/// Folding a term into a model that satisfies the freshness, substitution and
/// renaming laws gives a result independent of binder names, commuting with
/// substitution and preserving freshness. Those laws are the implementor's
/// promise; [`check_model_laws`](super::check_model_laws) tests them.
pub trait FsModel {
    type T;
    type A;

    fn var(&self, vs: &VarSortId, x: &VarName) -> Self::T;
    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, Self::T>, binp: BTreeMap<Index, Self::A>) -> Self::T;
    fn abs(&self, vs: &VarSortId, x: &VarName, body: Self::T) -> Self::A;

    fn subst(&self, t: &Self::T, by: &Self::T, y: &VarName, ys: &VarSortId) -> Self::T;
    fn subst_abs(&self, a: &Self::A, by: &Self::T, y: &VarName, ys: &VarSortId) -> Self::A;

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &Self::T) -> bool;
    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &Self::A) -> bool;

    fn eq_t(&self, a: &Self::T, b: &Self::T) -> bool;
}

/// Like [`FsModel`], with swapping in place of substitution.
pub trait SwapModel {
    type T;
    type A;

    fn var(&self, vs: &VarSortId, x: &VarName) -> Self::T;
    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, Self::T>, binp: BTreeMap<Index, Self::A>) -> Self::T;
    fn abs(&self, vs: &VarSortId, x: &VarName, body: Self::T) -> Self::A;

    fn swap(&self, t: &Self::T, z1: &VarName, z2: &VarName, zs: &VarSortId) -> Self::T;
    fn swap_abs(&self, a: &Self::A, z1: &VarName, z2: &VarName, zs: &VarSortId) -> Self::A;

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &Self::T) -> bool;
    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &Self::A) -> bool;

    fn eq_t(&self, a: &Self::T, b: &Self::T) -> bool;
}

/// Full primitive recursion: `op`, freshness and substitution also see the
/// original terms and abstractions, not only their images.
pub trait FullModel {
    type T;
    type A;

    fn var(&self, vs: &VarSortId, x: &VarName) -> Self::T;
    fn op(
        &self,
        op: &OpSymId,
        inp: &BTreeMap<Index, Term>,
        inp_vals: BTreeMap<Index, Self::T>,
        binp: &BTreeMap<Index, Abs>,
        binp_vals: BTreeMap<Index, Self::A>,
    ) -> Self::T;
    fn abs(&self, vs: &VarSortId, x: &VarName, body: Self::T) -> Self::A;

    #[allow(clippy::too_many_arguments)]
    fn subst(&self, t: &Term, tv: &Self::T, by: &Term, byv: &Self::T, y: &VarName, ys: &VarSortId) -> Self::T;
    #[allow(clippy::too_many_arguments)]
    fn subst_abs(&self, a: &Abs, av: &Self::A, by: &Term, byv: &Self::T, y: &VarName, ys: &VarSortId) -> Self::A;

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &Term, tv: &Self::T) -> bool;
    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &Abs, av: &Self::A) -> bool;

    fn eq_t(&self, a: &Self::T, b: &Self::T) -> bool;
}

/// An [`FsModel`] whose carriers are sorted.
pub trait SortedFsModel: FsModel {
    fn wls_t(&self, s: &SortId, t: &Self::T) -> bool;
    fn wls_abs_t(&self, vs: &VarSortId, s: &SortId, a: &Self::A) -> bool;
}

pub fn fold_fs<M: FsModel>(m: &M, t: &Term) -> M::T {
    match t {
        Term::Var(vs, x) => m.var(vs, x),
        Term::Op(op, inp, binp) => {
            let inp = inp.iter().map(|(i, c)| (*i, fold_fs(m, c))).collect();
            let binp = binp.iter().map(|(j, a)| (*j, fold_fs_abs(m, a))).collect();
            m.op(op, inp, binp)
        }
    }
}

pub fn fold_fs_abs<M: FsModel>(m: &M, a: &Abs) -> M::A {
    m.abs(&a.vs, &a.x, fold_fs(m, &a.body))
}

pub fn fold_swap<M: SwapModel>(m: &M, t: &Term) -> M::T {
    match t {
        Term::Var(vs, x) => m.var(vs, x),
        Term::Op(op, inp, binp) => {
            let inp = inp.iter().map(|(i, c)| (*i, fold_swap(m, c))).collect();
            let binp = binp.iter().map(|(j, a)| (*j, fold_swap_abs(m, a))).collect();
            m.op(op, inp, binp)
        }
    }
}

pub fn fold_swap_abs<M: SwapModel>(m: &M, a: &Abs) -> M::A {
    m.abs(&a.vs, &a.x, fold_swap(m, &a.body))
}

pub fn fold_full<M: FullModel>(m: &M, t: &Term) -> M::T {
    match t {
        Term::Var(vs, x) => m.var(vs, x),
        Term::Op(op, inp, binp) => {
            let inp_vals = inp.iter().map(|(i, c)| (*i, fold_full(m, c))).collect();
            let binp_vals = binp.iter().map(|(j, a)| (*j, fold_full_abs(m, a))).collect();
            m.op(op, inp, inp_vals, binp, binp_vals)
        }
    }
}

pub fn fold_full_abs<M: FullModel>(m: &M, a: &Abs) -> M::A {
    m.abs(&a.vs, &a.x, fold_full(m, &a.body))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SortedFoldError {
    #[error("input term is not well-sorted: {0}")]
    IllSorted(SortReport),
    /// The model produced a value outside the sort of the folded subterm.
    #[error("model broke sort preservation at {path:?} (expected {expected})")]
    SortViolation { path: Vec<PathStep>, expected: String },
}

/// Folds a well-sorted term, checking at every node that the model value
/// belongs to the node's sort.
pub fn fold_fs_sorted<M: SortedFsModel>(sig: &Signature, m: &M, t: &Term) -> Result<M::T, SortedFoldError> {
    let sort = match infer_sort(sig, t) {
        SortReport::Sorted(s) => s,
        other => return Err(SortedFoldError::IllSorted(other)),
    };
    let mut path = Vec::new();
    sorted_term(sig, m, t, &sort, &mut path)
}

fn sorted_term<M: SortedFsModel>(
    sig: &Signature,
    m: &M,
    t: &Term,
    sort: &SortId,
    path: &mut Vec<PathStep>,
) -> Result<M::T, SortedFoldError> {
    let value = match t {
        Term::Var(vs, x) => m.var(vs, x),
        Term::Op(op, inp, binp) => {
            // infer_sort already succeeded on the root, so the lookups hold
            let decl = sig.op(op).expect("sort-checked");
            let mut vals = BTreeMap::new();
            for (i, c) in inp {
                path.push(PathStep::Free(*i));
                vals.insert(*i, sorted_term(sig, m, c, &decl.arity.free[i], path)?);
                path.pop();
            }
            let mut bvals = BTreeMap::new();
            for (j, a) in binp {
                let (vs, s) = &decl.arity.bound[j];
                path.push(PathStep::Bound(*j));
                path.push(PathStep::AbsBody);
                let body = sorted_term(sig, m, &a.body, s, path)?;
                path.pop();
                let av = m.abs(&a.vs, &a.x, body);
                if !m.wls_abs_t(vs, s, &av) {
                    return Err(SortedFoldError::SortViolation { path: path.clone(), expected: format!("({vs} {s})") });
                }
                path.pop();
                bvals.insert(*j, av);
            }
            m.op(op, vals, bvals)
        }
    };
    if m.wls_t(sort, &value) {
        Ok(value)
    } else {
        Err(SortedFoldError::SortViolation { path: path.clone(), expected: sort.to_string() })
    }
}
