//! Raw terms (quasiterms): variables and operation applications over finite
//! maps of free inputs and abstractions. Alpha-equivalence is a separate
//! predicate; `==` on these types is raw structural equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::signature::{is_identifier, Index, OpSymId, VarSortId};

/// A variable name: either a user identifier or a generated name `g$k`.
///
/// User names order before generated ones; generated names order by `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarName {
    User(String),
    Generated(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid variable name `{0}`")]
pub struct VarNameError(pub String);

impl VarName {
    pub fn user(name: impl Into<String>) -> Result<Self, VarNameError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(VarName::User(name))
        } else {
            Err(VarNameError(name))
        }
    }

    pub fn is_generated(&self) -> bool {
        matches!(self, VarName::Generated(_))
    }
}

impl FromStr for VarName {
    type Err = VarNameError;

    fn from_str(s: &str) -> Result<Self, VarNameError> {
        if let Some(k) = s.strip_prefix("g$") {
            let canonical = !k.is_empty() && (k == "0" || !k.starts_with('0'));
            if canonical && k.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(k) = k.parse() {
                    return Ok(VarName::Generated(k));
                }
            }
            return Err(VarNameError(s.to_string()));
        }
        VarName::user(s)
    }
}

/// Panics on a malformed name; meant for literals.
impl From<&str> for VarName {
    fn from(s: &str) -> Self {
        match s.parse() {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarName::User(s) => f.write_str(s),
            VarName::Generated(k) => write!(f, "g${k}"),
        }
    }
}

/// A variable together with its varsort.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarRef {
    pub vs: VarSortId,
    pub x: VarName,
}

impl VarRef {
    pub fn new(vs: impl Into<VarSortId>, x: impl Into<VarName>) -> Self {
        VarRef { vs: vs.into(), x: x.into() }
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.vs, self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(VarSortId, VarName),
    Op(OpSymId, BTreeMap<Index, Term>, BTreeMap<Index, Abs>),
}

/// An abstraction binding `x` of varsort `vs` in `body`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Abs {
    pub vs: VarSortId,
    pub x: VarName,
    pub body: Box<Term>,
}

pub type VarSet = BTreeSet<VarRef>;

impl Term {
    pub fn var(vs: impl Into<VarSortId>, x: impl Into<VarName>) -> Term {
        Term::Var(vs.into(), x.into())
    }

    /// Operation with free inputs numbered `0..` and bound inputs numbered `0..`.
    pub fn op(op: impl Into<OpSymId>, inp: Vec<Term>, binp: Vec<Abs>) -> Term {
        Term::Op(op.into(), inp.into_iter().enumerate().collect(), binp.into_iter().enumerate().collect())
    }

    pub fn is_var(&self, vs: &VarSortId, x: &VarName) -> bool {
        matches!(self, Term::Var(ws, y) if ws == vs && y == x)
    }

    /// Number of `Var`, `Op` and `Abs` nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(..) => 1,
            Term::Op(_, inp, binp) => {
                1 + inp.values().map(Term::size).sum::<usize>()
                    + binp.values().map(|a| 1 + a.body.size()).sum::<usize>()
            }
        }
    }
}

impl Abs {
    pub fn new(vs: impl Into<VarSortId>, x: impl Into<VarName>, body: Term) -> Abs {
        Abs { vs: vs.into(), x: x.into(), body: Box::new(body) }
    }

    pub fn binder(&self) -> VarRef {
        VarRef { vs: self.vs.clone(), x: self.x.clone() }
    }
}

pub fn free_vars(t: &Term) -> VarSet {
    let mut acc = VarSet::new();
    collect_free(t, &mut Vec::new(), &mut acc);
    acc
}

pub fn free_vars_abs(a: &Abs) -> VarSet {
    let mut acc = VarSet::new();
    let mut bound = vec![(&a.vs, &a.x)];
    collect_free(&a.body, &mut bound, &mut acc);
    acc
}

fn collect_free<'a>(t: &'a Term, bound: &mut Vec<(&'a VarSortId, &'a VarName)>, acc: &mut VarSet) {
    match t {
        Term::Var(vs, x) => {
            if !bound.iter().any(|(bvs, bx)| *bvs == vs && *bx == x) {
                acc.insert(VarRef { vs: vs.clone(), x: x.clone() });
            }
        }
        Term::Op(_, inp, binp) => {
            for child in inp.values() {
                collect_free(child, bound, acc);
            }
            for a in binp.values() {
                bound.push((&a.vs, &a.x));
                collect_free(&a.body, bound, acc);
                bound.pop();
            }
        }
    }
}

/// Whether `y` of varsort `vs` has no free occurrence in `t`.
pub fn fresh(vs: &VarSortId, y: &VarName, t: &Term) -> bool {
    match t {
        Term::Var(xs, x) => !(xs == vs && x == y),
        Term::Op(_, inp, binp) => inp.values().all(|c| fresh(vs, y, c)) && binp.values().all(|a| fresh_abs(vs, y, a)),
    }
}

pub fn fresh_abs(vs: &VarSortId, y: &VarName, a: &Abs) -> bool {
    (&a.vs == vs && &a.x == y) || fresh(vs, y, &a.body)
}

/// Exchanges `z1` and `z2` at varsort `zs` in a single name.
pub fn swap_name(x: &VarName, xs: &VarSortId, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarName {
    if xs != zs {
        x.clone()
    } else if x == z1 {
        z2.clone()
    } else if x == z2 {
        z1.clone()
    } else {
        x.clone()
    }
}

/// Exchanges every occurrence of `z1` and `z2` at varsort `zs`, binding
/// positions included.
pub fn swap(t: &Term, z1: &VarName, z2: &VarName, zs: &VarSortId) -> Term {
    match t {
        Term::Var(xs, x) => Term::Var(xs.clone(), swap_name(x, xs, z1, z2, zs)),
        Term::Op(op, inp, binp) => Term::Op(
            op.clone(),
            inp.iter().map(|(i, c)| (*i, swap(c, z1, z2, zs))).collect(),
            binp.iter().map(|(j, a)| (*j, swap_abs(a, z1, z2, zs))).collect(),
        ),
    }
}

pub fn swap_abs(a: &Abs, z1: &VarName, z2: &VarName, zs: &VarSortId) -> Abs {
    Abs { vs: a.vs.clone(), x: swap_name(&a.x, &a.vs, z1, z2, zs), body: Box::new(swap(&a.body, z1, z2, zs)) }
}

/// The generated name `g$k` with the least `k` such that `(vs, g$k)` is not
/// in `avoid`.
pub fn fresh_var(vs: &VarSortId, avoid: &VarSet) -> VarName {
    let taken: BTreeSet<u64> = avoid
        .iter()
        .filter(|v| &v.vs == vs)
        .filter_map(|v| match v.x {
            VarName::Generated(k) => Some(k),
            VarName::User(_) => None,
        })
        .collect();
    let mut k = 0;
    while taken.contains(&k) {
        k += 1;
    }
    VarName::Generated(k)
}

/// Raw structural equality, binder names included.
pub fn eq_raw(t1: &Term, t2: &Term) -> bool {
    t1 == t2
}

/// Every variable name occurring anywhere in `t`, bound or free, per varsort.
pub fn all_vars(t: &Term) -> VarSet {
    fn go(t: &Term, acc: &mut VarSet) {
        match t {
            Term::Var(vs, x) => {
                acc.insert(VarRef { vs: vs.clone(), x: x.clone() });
            }
            Term::Op(_, inp, binp) => {
                inp.values().for_each(|c| go(c, acc));
                for a in binp.values() {
                    acc.insert(a.binder());
                    go(&a.body, acc);
                }
            }
        }
    }
    let mut acc = VarSet::new();
    go(t, &mut acc);
    acc
}
