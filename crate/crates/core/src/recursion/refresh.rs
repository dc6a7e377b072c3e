use std::collections::BTreeMap;

use crate::term::{free_vars, free_vars_abs, fresh_var, Abs, Term, VarName, VarRef, VarSet};

/// Renames every binder of `t` to a distinct generated name outside
/// `avoid` and the free variables of `t`.
///
/// The result is alpha-equivalent to `t`, and inside it every bound variable
/// is fresh for any parameter listed in `avoid`, so a traversal may assume
/// the variable convention without case analysis on binder clashes.
pub fn refresh_binders(t: &Term, avoid: &VarSet) -> Term {
    let mut taken = avoid.clone();
    taken.extend(free_vars(t));
    Refresher { taken, renaming: BTreeMap::new() }.term(t)
}

pub fn refresh_binders_abs(a: &Abs, avoid: &VarSet) -> Abs {
    let mut taken = avoid.clone();
    taken.extend(free_vars_abs(a));
    Refresher { taken, renaming: BTreeMap::new() }.abs(a)
}

struct Refresher {
    taken: VarSet,
    // innermost renaming per bound variable, restored on exit
    renaming: BTreeMap<VarRef, VarName>,
}

impl Refresher {
    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(vs, x) => {
                let key = VarRef { vs: vs.clone(), x: x.clone() };
                match self.renaming.get(&key) {
                    Some(z) => Term::Var(vs.clone(), z.clone()),
                    None => t.clone(),
                }
            }
            Term::Op(op, inp, binp) => Term::Op(
                op.clone(),
                inp.iter().map(|(i, c)| (*i, self.term(c))).collect(),
                binp.iter().map(|(j, a)| (*j, self.abs(a))).collect(),
            ),
        }
    }

    fn abs(&mut self, a: &Abs) -> Abs {
        let z = fresh_var(&a.vs, &self.taken);
        self.taken.insert(VarRef { vs: a.vs.clone(), x: z.clone() });
        let binder = a.binder();
        let outer = self.renaming.insert(binder.clone(), z.clone());
        let body = self.term(&a.body);
        match outer {
            Some(prev) => self.renaming.insert(binder, prev),
            None => self.renaming.remove(&binder),
        };
        Abs { vs: a.vs.clone(), x: z, body: Box::new(body) }
    }
}
