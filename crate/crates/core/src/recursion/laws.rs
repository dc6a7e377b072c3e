//! Runtime check of the model laws on generated terms.
//!
//! A fold is only meaningful on terms modulo alpha when the model satisfies
//! its laws. Those cannot be verified statically, so this harness samples
//! terms and reports counterexamples to three consequences: alpha-invariance,
//! commutation with the model's operator (substitution or swapping) and
//! freshness preservation.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};

use super::fold::{
    fold_fs, fold_fs_abs, fold_full, fold_full_abs, fold_swap, fold_swap_abs, FsModel, FullModel, SwapModel,
};
use crate::format::print_term;
use crate::signature::VarSortId;
use crate::subst::subst;
use crate::term::{swap, Abs, Term, VarName};
use crate::testkit::Generator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Law {
    AlphaInvariance,
    Commutation,
    FreshnessPreservation,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::AlphaInvariance => "alpha-invariance",
            Law::Commutation => "commutation",
            Law::FreshnessPreservation => "freshness-preservation",
        })
    }
}

/// Inputs for one commutation check: the fold of `x[by/y]` (substitution
/// models) or of `x[y <-> z]` (swapping models), both at varsort `ys`.
#[derive(Debug, Clone)]
pub struct OperatorInstance {
    pub x: Term,
    pub by: Term,
    pub y: VarName,
    pub z: VarName,
    pub ys: VarSortId,
}

/// A fold together with the operations its laws are stated in.
pub trait LawSubject {
    type T: Debug;
    type A;

    fn fold(&self, t: &Term) -> Self::T;
    fn fold_abs(&self, a: &Abs) -> Self::A;
    fn eq_t(&self, a: &Self::T, b: &Self::T) -> bool;
    fn fresh_t(&self, vs: &VarSortId, x: &VarName, t: &Term, v: &Self::T) -> bool;
    fn fresh_a(&self, vs: &VarSortId, x: &VarName, a: &Abs, v: &Self::A) -> bool;
    /// `None` when the fold commutes with the operator on this instance,
    /// otherwise a description of the two sides.
    fn commutation_failure(&self, inst: &OperatorInstance) -> Option<String>;
}

/// Laws of a substitution-based model.
pub struct FsLaws<'a, M>(pub &'a M);
/// Laws of a swapping-based model.
pub struct SwapLaws<'a, M>(pub &'a M);
/// Laws of a full-recursion model.
pub struct FullLaws<'a, M>(pub &'a M);

impl<M: FsModel> LawSubject for FsLaws<'_, M>
where
    M::T: Debug,
{
    type T = M::T;
    type A = M::A;

    fn fold(&self, t: &Term) -> M::T {
        fold_fs(self.0, t)
    }

    fn fold_abs(&self, a: &Abs) -> M::A {
        fold_fs_abs(self.0, a)
    }

    fn eq_t(&self, a: &M::T, b: &M::T) -> bool {
        self.0.eq_t(a, b)
    }

    fn fresh_t(&self, vs: &VarSortId, x: &VarName, _: &Term, v: &M::T) -> bool {
        self.0.fresh(vs, x, v)
    }

    fn fresh_a(&self, vs: &VarSortId, x: &VarName, _: &Abs, v: &M::A) -> bool {
        self.0.fresh_abs(vs, x, v)
    }

    fn commutation_failure(&self, inst: &OperatorInstance) -> Option<String> {
        let lhs = self.fold(&subst(&inst.x, &inst.by, &inst.y, &inst.ys));
        let rhs = self.0.subst(&self.fold(&inst.x), &self.fold(&inst.by), &inst.y, &inst.ys);
        (!self.eq_t(&lhs, &rhs)).then(|| format!("fold(subst) = {lhs:?}, model subst = {rhs:?}"))
    }
}

impl<M: SwapModel> LawSubject for SwapLaws<'_, M>
where
    M::T: Debug,
{
    type T = M::T;
    type A = M::A;

    fn fold(&self, t: &Term) -> M::T {
        fold_swap(self.0, t)
    }

    fn fold_abs(&self, a: &Abs) -> M::A {
        fold_swap_abs(self.0, a)
    }

    fn eq_t(&self, a: &M::T, b: &M::T) -> bool {
        self.0.eq_t(a, b)
    }

    fn fresh_t(&self, vs: &VarSortId, x: &VarName, _: &Term, v: &M::T) -> bool {
        self.0.fresh(vs, x, v)
    }

    fn fresh_a(&self, vs: &VarSortId, x: &VarName, _: &Abs, v: &M::A) -> bool {
        self.0.fresh_abs(vs, x, v)
    }

    fn commutation_failure(&self, inst: &OperatorInstance) -> Option<String> {
        let lhs = self.fold(&swap(&inst.x, &inst.y, &inst.z, &inst.ys));
        let rhs = self.0.swap(&self.fold(&inst.x), &inst.y, &inst.z, &inst.ys);
        (!self.eq_t(&lhs, &rhs)).then(|| format!("fold(swap) = {lhs:?}, model swap = {rhs:?}"))
    }
}

impl<M: FullModel> LawSubject for FullLaws<'_, M>
where
    M::T: Debug,
{
    type T = M::T;
    type A = M::A;

    fn fold(&self, t: &Term) -> M::T {
        fold_full(self.0, t)
    }

    fn fold_abs(&self, a: &Abs) -> M::A {
        fold_full_abs(self.0, a)
    }

    fn eq_t(&self, a: &M::T, b: &M::T) -> bool {
        self.0.eq_t(a, b)
    }

    fn fresh_t(&self, vs: &VarSortId, x: &VarName, t: &Term, v: &M::T) -> bool {
        self.0.fresh(vs, x, t, v)
    }

    fn fresh_a(&self, vs: &VarSortId, x: &VarName, a: &Abs, v: &M::A) -> bool {
        self.0.fresh_abs(vs, x, a, v)
    }

    fn commutation_failure(&self, inst: &OperatorInstance) -> Option<String> {
        let lhs = self.fold(&subst(&inst.x, &inst.by, &inst.y, &inst.ys));
        let xv = self.fold(&inst.x);
        let byv = self.fold(&inst.by);
        let rhs = self.0.subst(&inst.x, &xv, &inst.by, &byv, &inst.y, &inst.ys);
        (!self.eq_t(&lhs, &rhs)).then(|| format!("fold(subst) = {lhs:?}, model subst = {rhs:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub law: Law,
    pub case: usize,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] case {}: {}", self.law, self.case, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct LawReport {
    pub seed: u64,
    pub cases: usize,
    pub checks: BTreeMap<Law, usize>,
    pub failures: Vec<Counterexample>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, law: Law) -> bool {
        self.failures.iter().any(|c| c.law == law)
    }

    fn record(&mut self, law: Law, case: usize, failure: Option<String>) {
        *self.checks.entry(law).or_default() += 1;
        if let Some(detail) = failure {
            self.failures.push(Counterexample { law, case, detail });
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cases (seed {})", self.cases, self.seed)?;
        for (law, n) in &self.checks {
            write!(f, ", {law}: {n} checks")?;
        }
        for c in self.failures.iter().take(5) {
            write!(f, "\n  {c}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n  ... {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

/// Samples `n` cases from `gen` and checks the model laws on each.
pub fn check_model_laws<S: LawSubject>(subject: &S, gen: &mut Generator, n: usize) -> LawReport {
    assert!(n >= 1, "check_model_laws needs at least one case");
    let mut report = LawReport { seed: gen.config().seed, cases: n, ..LawReport::default() };
    let varsorts: Vec<VarSortId> = gen.config().var_pool.keys().cloned().collect();
    for case in 0..n {
        let x = gen.term();

        let variant = gen.alpha_variant(&x);
        let (fx, fv) = (subject.fold(&x), subject.fold(&variant));
        let failure = (!subject.eq_t(&fx, &fv))
            .then(|| format!("{} ~ {} but folds differ: {fx:?} vs {fv:?}", print_term(&x), print_term(&variant)));
        report.record(Law::AlphaInvariance, case, failure);

        let ys = gen.varsort();
        let by = gen.term_for_varsort(&ys);
        let (y, z) = (gen.name(&ys), gen.name(&ys));
        let inst = OperatorInstance { x: x.clone(), by, y, z, ys };
        let failure = subject.commutation_failure(&inst).map(|d| {
            format!(
                "x = {}, by = {}, y = {}, z = {}, varsort {}: {d}",
                print_term(&inst.x),
                print_term(&inst.by),
                inst.y,
                inst.z,
                inst.ys
            )
        });
        report.record(Law::Commutation, case, failure);

        let abs = Abs { vs: inst.ys.clone(), x: inst.y.clone(), body: Box::new(x.clone()) };
        let fabs = subject.fold_abs(&abs);
        for vs in &varsorts {
            for name in gen.config().var_pool[vs].clone() {
                if crate::term::fresh(vs, &name, &x) {
                    let failure = (!subject.fresh_t(vs, &name, &x, &fx))
                        .then(|| format!("({vs} {name}) fresh for {} but not for {fx:?}", print_term(&x)));
                    report.record(Law::FreshnessPreservation, case, failure);
                }
                if crate::term::fresh_abs(vs, &name, &abs) {
                    let failure = (!subject.fresh_a(vs, &name, &abs, &fabs)).then(|| {
                        format!("({vs} {name}) fresh for abstraction ({} {}) {}", abs.vs, abs.x, print_term(&x))
                    });
                    report.record(Law::FreshnessPreservation, case, failure);
                }
            }
        }
    }
    report
}
