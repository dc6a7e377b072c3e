//! Ready-made models for the generic folds.

use std::collections::BTreeMap;

use super::fold::{FsModel, FullModel, SwapModel};
use crate::alpha::{alpha_eq, alpha_eq_abs};
use crate::signature::{Index, OpSymId, VarSortId};
use crate::subst::{subst, subst_abs};
use crate::term::{self, swap_name, Abs, Term, VarName, VarRef, VarSet};

/// Free variables as a fold: `var` is a singleton, `op` a union and `abs`
/// removes the binder.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeVarsModel;

fn var_ref(vs: &VarSortId, x: &VarName) -> VarRef {
    VarRef { vs: vs.clone(), x: x.clone() }
}

fn union_all(inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
    inp.into_values().chain(binp.into_values()).flatten().collect()
}

fn remove(mut s: VarSet, vs: &VarSortId, x: &VarName) -> VarSet {
    s.remove(&var_ref(vs, x));
    s
}

fn subst_set(s: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
    let key = var_ref(ys, y);
    if s.contains(&key) {
        let mut out = s.clone();
        out.remove(&key);
        out.extend(by.iter().cloned());
        out
    } else {
        s.clone()
    }
}

fn swap_set(s: &VarSet, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarSet {
    s.iter().map(|v| VarRef { vs: v.vs.clone(), x: swap_name(&v.x, &v.vs, z1, z2, zs) }).collect()
}

impl FsModel for FreeVarsModel {
    type T = VarSet;
    type A = VarSet;

    fn var(&self, vs: &VarSortId, x: &VarName) -> VarSet {
        VarSet::from([var_ref(vs, x)])
    }

    fn op(&self, _: &OpSymId, inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
        union_all(inp, binp)
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: VarSet) -> VarSet {
        remove(body, vs, x)
    }

    fn subst(&self, t: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        subst_set(t, by, y, ys)
    }

    fn subst_abs(&self, a: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        subst_set(a, by, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &VarSet) -> bool {
        !t.contains(&var_ref(vs, x))
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &VarSet) -> bool {
        !a.contains(&var_ref(vs, x))
    }

    fn eq_t(&self, a: &VarSet, b: &VarSet) -> bool {
        a == b
    }
}

impl SwapModel for FreeVarsModel {
    type T = VarSet;
    type A = VarSet;

    fn var(&self, vs: &VarSortId, x: &VarName) -> VarSet {
        VarSet::from([var_ref(vs, x)])
    }

    fn op(&self, _: &OpSymId, inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
        union_all(inp, binp)
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: VarSet) -> VarSet {
        remove(body, vs, x)
    }

    fn swap(&self, t: &VarSet, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarSet {
        swap_set(t, z1, z2, zs)
    }

    fn swap_abs(&self, a: &VarSet, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarSet {
        swap_set(a, z1, z2, zs)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &VarSet) -> bool {
        !t.contains(&var_ref(vs, x))
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &VarSet) -> bool {
        !a.contains(&var_ref(vs, x))
    }

    fn eq_t(&self, a: &VarSet, b: &VarSet) -> bool {
        a == b
    }
}

/// Every term goes to `()`.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitModel;

impl FsModel for UnitModel {
    type T = ();
    type A = ();

    fn var(&self, _: &VarSortId, _: &VarName) {}
    fn op(&self, _: &OpSymId, _: BTreeMap<Index, ()>, _: BTreeMap<Index, ()>) {}
    fn abs(&self, _: &VarSortId, _: &VarName, _: ()) {}
    fn subst(&self, _: &(), _: &(), _: &VarName, _: &VarSortId) {}
    fn subst_abs(&self, _: &(), _: &(), _: &VarName, _: &VarSortId) {}

    fn fresh(&self, _: &VarSortId, _: &VarName, _: &()) -> bool {
        true
    }

    fn fresh_abs(&self, _: &VarSortId, _: &VarName, _: &()) -> bool {
        true
    }

    fn eq_t(&self, _: &(), _: &()) -> bool {
        true
    }
}

impl SwapModel for UnitModel {
    type T = ();
    type A = ();

    fn var(&self, _: &VarSortId, _: &VarName) {}
    fn op(&self, _: &OpSymId, _: BTreeMap<Index, ()>, _: BTreeMap<Index, ()>) {}
    fn abs(&self, _: &VarSortId, _: &VarName, _: ()) {}
    fn swap(&self, _: &(), _: &VarName, _: &VarName, _: &VarSortId) {}
    fn swap_abs(&self, _: &(), _: &VarName, _: &VarName, _: &VarSortId) {}

    fn fresh(&self, _: &VarSortId, _: &VarName, _: &()) -> bool {
        true
    }

    fn fresh_abs(&self, _: &VarSortId, _: &VarName, _: &()) -> bool {
        true
    }

    fn eq_t(&self, _: &(), _: &()) -> bool {
        true
    }
}

/// Rebuilds each term from the original inputs handed to `op`, so the fold
/// returns a term alpha-equivalent to its input.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityModel;

impl FullModel for IdentityModel {
    type T = Term;
    type A = Abs;

    fn var(&self, vs: &VarSortId, x: &VarName) -> Term {
        Term::Var(vs.clone(), x.clone())
    }

    fn op(
        &self,
        op: &OpSymId,
        inp: &BTreeMap<Index, Term>,
        _: BTreeMap<Index, Term>,
        binp: &BTreeMap<Index, Abs>,
        _: BTreeMap<Index, Abs>,
    ) -> Term {
        Term::Op(op.clone(), inp.clone(), binp.clone())
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: Term) -> Abs {
        Abs { vs: vs.clone(), x: x.clone(), body: Box::new(body) }
    }

    fn subst(&self, _: &Term, tv: &Term, _: &Term, byv: &Term, y: &VarName, ys: &VarSortId) -> Term {
        subst(tv, byv, y, ys)
    }

    fn subst_abs(&self, _: &Abs, av: &Abs, _: &Term, byv: &Term, y: &VarName, ys: &VarSortId) -> Abs {
        subst_abs(av, byv, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, _: &Term, tv: &Term) -> bool {
        term::fresh(vs, x, tv)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, _: &Abs, av: &Abs) -> bool {
        term::fresh_abs(vs, x, av)
    }

    fn eq_t(&self, a: &Term, b: &Term) -> bool {
        alpha_eq(a, b)
    }
}

impl IdentityModel {
    pub fn eq_a(&self, a: &Abs, b: &Abs) -> bool {
        alpha_eq_abs(a, b)
    }
}

/// The free inputs of the root, in index order; variables have none.
///
/// Needs the original subterms, so it is only expressible as full recursion.
#[derive(Debug, Clone, Copy, Default)]
pub struct ImmediateSubterms;

impl FullModel for ImmediateSubterms {
    type T = Vec<Term>;
    type A = ();

    fn var(&self, _: &VarSortId, _: &VarName) -> Vec<Term> {
        Vec::new()
    }

    fn op(
        &self,
        _: &OpSymId,
        inp: &BTreeMap<Index, Term>,
        _: BTreeMap<Index, Vec<Term>>,
        _: &BTreeMap<Index, Abs>,
        _: BTreeMap<Index, ()>,
    ) -> Vec<Term> {
        inp.values().cloned().collect()
    }

    fn abs(&self, _: &VarSortId, _: &VarName, _: Vec<Term>) {}

    fn subst(&self, t: &Term, _: &Vec<Term>, by: &Term, _: &Vec<Term>, y: &VarName, ys: &VarSortId) -> Vec<Term> {
        match subst(t, by, y, ys) {
            Term::Op(_, inp, _) => inp.into_values().collect(),
            Term::Var(..) => Vec::new(),
        }
    }

    fn subst_abs(&self, _: &Abs, _: &(), _: &Term, _: &Vec<Term>, _: &VarName, _: &VarSortId) {}

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &Term, _: &Vec<Term>) -> bool {
        term::fresh(vs, x, t)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &Abs, _: &()) -> bool {
        term::fresh_abs(vs, x, a)
    }

    fn eq_t(&self, a: &Vec<Term>, b: &Vec<Term>) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(s, t)| alpha_eq(s, t))
    }
}

/// Views an iterative model as a full-recursion one that ignores the
/// original arguments.
#[derive(Debug, Clone, Copy, Default)]
pub struct Lifted<M>(pub M);

impl<M: FsModel> FullModel for Lifted<M> {
    type T = M::T;
    type A = M::A;

    fn var(&self, vs: &VarSortId, x: &VarName) -> M::T {
        self.0.var(vs, x)
    }

    fn op(
        &self,
        op: &OpSymId,
        _: &BTreeMap<Index, Term>,
        inp_vals: BTreeMap<Index, M::T>,
        _: &BTreeMap<Index, Abs>,
        binp_vals: BTreeMap<Index, M::A>,
    ) -> M::T {
        self.0.op(op, inp_vals, binp_vals)
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: M::T) -> M::A {
        self.0.abs(vs, x, body)
    }

    fn subst(&self, _: &Term, tv: &M::T, _: &Term, byv: &M::T, y: &VarName, ys: &VarSortId) -> M::T {
        self.0.subst(tv, byv, y, ys)
    }

    fn subst_abs(&self, _: &Abs, av: &M::A, _: &Term, byv: &M::T, y: &VarName, ys: &VarSortId) -> M::A {
        self.0.subst_abs(av, byv, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, _: &Term, tv: &M::T) -> bool {
        self.0.fresh(vs, x, tv)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, _: &Abs, av: &M::A) -> bool {
        self.0.fresh_abs(vs, x, av)
    }

    fn eq_t(&self, a: &M::T, b: &M::T) -> bool {
        self.0.eq_t(a, b)
    }
}
