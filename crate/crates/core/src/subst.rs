//! Capture-avoiding substitution: unary, variable-for-variable and parallel.

use std::collections::BTreeMap;

use crate::signature::VarSortId;
use crate::term::{free_vars, fresh, fresh_var, Abs, Term, VarName, VarRef, VarSet};

/// A finite partial assignment of terms to variables. Variables outside the
/// domain are left in place by [`psubst`].
pub type Env = BTreeMap<VarRef, Term>;

/// Substitutes `by` for the free occurrences of `y` (at varsort `ys`) in `t`.
///
/// A binder is renamed only when it is not fresh for `by`; the replacement is
/// the least generated name avoiding the body, `by`, and both variables.
pub fn subst(t: &Term, by: &Term, y: &VarName, ys: &VarSortId) -> Term {
    match t {
        Term::Var(xs, x) => {
            if xs == ys && x == y {
                by.clone()
            } else {
                t.clone()
            }
        }
        Term::Op(op, inp, binp) => Term::Op(
            op.clone(),
            inp.iter().map(|(i, c)| (*i, subst(c, by, y, ys))).collect(),
            binp.iter().map(|(j, a)| (*j, subst_abs(a, by, y, ys))).collect(),
        ),
    }
}

pub fn subst_abs(a: &Abs, by: &Term, y: &VarName, ys: &VarSortId) -> Abs {
    if &a.vs == ys && &a.x == y {
        return a.clone();
    }
    if fresh(&a.vs, &a.x, by) {
        return Abs { vs: a.vs.clone(), x: a.x.clone(), body: Box::new(subst(&a.body, by, y, ys)) };
    }
    let mut avoid = free_vars(&a.body);
    avoid.extend(free_vars(by));
    avoid.insert(VarRef { vs: ys.clone(), x: y.clone() });
    avoid.insert(a.binder());
    let z = fresh_var(&a.vs, &avoid);
    let renamed = vsubst(&a.body, &z, &a.x, &a.vs);
    Abs { vs: a.vs.clone(), x: z, body: Box::new(subst(&renamed, by, y, ys)) }
}

/// Renames the free occurrences of `x` (at `xs`) in `t` to `z`.
pub fn vsubst(t: &Term, z: &VarName, x: &VarName, xs: &VarSortId) -> Term {
    subst(t, &Term::Var(xs.clone(), z.clone()), x, xs)
}

pub fn vsubst_abs(a: &Abs, z: &VarName, x: &VarName, xs: &VarSortId) -> Abs {
    subst_abs(a, &Term::Var(xs.clone(), z.clone()), x, xs)
}

/// Simultaneously replaces every free variable in the domain of `env`.
///
/// Every binder is renamed to a name fresh for the body, the free variables
/// of the range, and the domain, so neither capture nor substitution of a
/// bound occurrence can happen.
pub fn psubst(t: &Term, env: &Env) -> Term {
    let mut walker = ParallelSubst::new(env.clone());
    walker.term(t)
}

pub fn psubst_abs(a: &Abs, env: &Env) -> Abs {
    let mut walker = ParallelSubst::new(env.clone());
    walker.abs(a)
}

struct ParallelSubst {
    env: Env,
    // free variables of the range together with the domain
    occupied: VarSet,
}

impl ParallelSubst {
    fn new(env: Env) -> Self {
        let mut occupied = VarSet::new();
        for (k, v) in &env {
            occupied.insert(k.clone());
            occupied.extend(free_vars(v));
        }
        ParallelSubst { env, occupied }
    }

    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(vs, x) => {
                let key = VarRef { vs: vs.clone(), x: x.clone() };
                self.env.get(&key).cloned().unwrap_or_else(|| t.clone())
            }
            Term::Op(op, inp, binp) => Term::Op(
                op.clone(),
                inp.iter().map(|(i, c)| (*i, self.term(c))).collect(),
                binp.iter().map(|(j, a)| (*j, self.abs(a))).collect(),
            ),
        }
    }

    fn abs(&mut self, a: &Abs) -> Abs {
        let mut avoid = free_vars(&a.body);
        avoid.extend(self.occupied.iter().cloned());
        let z = fresh_var(&a.vs, &avoid);
        let binder = a.binder();
        let fresh_ref = VarRef { vs: a.vs.clone(), x: z.clone() };

        // Extend the assignment with binder -> z for the body, then restore.
        let previous = self.env.insert(binder.clone(), Term::Var(a.vs.clone(), z.clone()));
        let newly_occupied: Vec<VarRef> =
            [binder.clone(), fresh_ref].into_iter().filter(|v| self.occupied.insert(v.clone())).collect();
        let body = self.term(&a.body);
        for v in newly_occupied {
            self.occupied.remove(&v);
        }
        match previous {
            Some(p) => self.env.insert(binder, p),
            None => self.env.remove(&binder),
        };
        Abs { vs: a.vs.clone(), x: z, body: Box::new(body) }
    }
}

/// Monadic composition: `psubst(psubst(t, first), second)` equals
/// `psubst(t, env_comp(first, second))` up to alpha.
pub fn env_comp(first: &Env, second: &Env) -> Env {
    let mut out: Env = first.iter().map(|(k, v)| (k.clone(), psubst(v, second))).collect();
    for (k, v) in second {
        out.entry(k.clone()).or_insert_with(|| v.clone());
    }
    out
}
