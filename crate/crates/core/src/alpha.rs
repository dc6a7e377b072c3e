//! Alpha-equivalence by swapping with a fresh variable, its for-all-fresh
//! variant, and a nameless canonical form used as an independent check.

use std::collections::BTreeMap;

use crate::signature::{Index, OpSymId, VarSortId};
use crate::term::{free_vars, fresh_var, swap, Abs, Term, VarName, VarRef, VarSet};

pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    alpha_with(t1, t2, 1)
}

/// Abstractions are alpha-equal when their varsorts agree and the bodies
/// become alpha-equal after swapping each binder with a common fresh `y`.
pub fn alpha_eq_abs(a1: &Abs, a2: &Abs) -> bool {
    alpha_abs_with(a1, a2, 1)
}

/// Like [`alpha_eq`], but the abstraction clause must hold for `sample`
/// distinct fresh variables rather than a single one.
pub fn alpha_eq_forall(t1: &Term, t2: &Term, sample: usize) -> bool {
    assert!(sample >= 1, "alpha_eq_forall needs at least one sample");
    alpha_with(t1, t2, sample)
}

pub fn alpha_eq_abs_forall(a1: &Abs, a2: &Abs, sample: usize) -> bool {
    assert!(sample >= 1, "alpha_eq_abs_forall needs at least one sample");
    alpha_abs_with(a1, a2, sample)
}

fn alpha_with(t1: &Term, t2: &Term, sample: usize) -> bool {
    match (t1, t2) {
        (Term::Var(xs, x), Term::Var(ys, y)) => xs == ys && x == y,
        (Term::Op(d1, inp1, binp1), Term::Op(d2, inp2, binp2)) => {
            d1 == d2
                && inp1.len() == inp2.len()
                && binp1.len() == binp2.len()
                && inp1.iter().zip(inp2).all(|((i, c1), (j, c2))| i == j && alpha_with(c1, c2, sample))
                && binp1.iter().zip(binp2).all(|((i, a1), (j, a2))| i == j && alpha_abs_with(a1, a2, sample))
        }
        _ => false,
    }
}

fn alpha_abs_with(a1: &Abs, a2: &Abs, sample: usize) -> bool {
    if a1.vs != a2.vs {
        return false;
    }
    let mut avoid: VarSet = free_vars(&a1.body);
    avoid.extend(free_vars(&a2.body));
    avoid.insert(a1.binder());
    avoid.insert(a2.binder());
    for _ in 0..sample {
        let y = fresh_var(&a1.vs, &avoid);
        let b1 = swap(&a1.body, &y, &a1.x, &a1.vs);
        let b2 = swap(&a2.body, &y, &a2.x, &a2.vs);
        if !alpha_with(&b1, &b2, sample) {
            return false;
        }
        avoid.insert(VarRef { vs: a1.vs.clone(), x: y });
    }
    true
}

/// A term with bound occurrences replaced by binder distances.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalTerm {
    Free(VarSortId, VarName),
    /// Distance to the binding abstraction, innermost enclosing binder = 0.
    Bound(VarSortId, usize),
    Op(OpSymId, BTreeMap<Index, CanonicalTerm>, BTreeMap<Index, CanonicalAbs>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalAbs {
    pub vs: VarSortId,
    pub body: Box<CanonicalTerm>,
}

pub fn to_canonical(t: &Term) -> CanonicalTerm {
    canon(t, &mut Vec::new())
}

pub fn to_canonical_abs(a: &Abs) -> CanonicalAbs {
    canon_abs(a, &mut Vec::new())
}

fn canon<'a>(t: &'a Term, scope: &mut Vec<(&'a VarSortId, &'a VarName)>) -> CanonicalTerm {
    match t {
        Term::Var(vs, x) => match scope.iter().rev().position(|(bvs, bx)| *bvs == vs && *bx == x) {
            Some(d) => CanonicalTerm::Bound(vs.clone(), d),
            None => CanonicalTerm::Free(vs.clone(), x.clone()),
        },
        Term::Op(op, inp, binp) => CanonicalTerm::Op(
            op.clone(),
            inp.iter().map(|(i, c)| (*i, canon(c, scope))).collect(),
            binp.iter().map(|(j, a)| (*j, canon_abs(a, scope))).collect(),
        ),
    }
}

fn canon_abs<'a>(a: &'a Abs, scope: &mut Vec<(&'a VarSortId, &'a VarName)>) -> CanonicalAbs {
    scope.push((&a.vs, &a.x));
    let body = canon(&a.body, scope);
    scope.pop();
    CanonicalAbs { vs: a.vs.clone(), body: Box::new(body) }
}
