use std::collections::BTreeMap;

use thiserror::Error;

use crate::signature::{Index, OpSymId, VarSortId};
use crate::term::{Abs, Term, VarName, VarRef};

/// A variable was interpreted but the valuation has no value for it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("valuation undefined at {0}")]
pub struct ValuationUndefined(pub VarRef);

/// Meaning of an abstraction body as a function of its bound variable.
pub type BodyFn<'a, D> = dyn Fn(&<D as SemDomain>::Dt) -> Result<<D as SemDomain>::Dt, <D as SemDomain>::Error> + 'a;

/// A semantic domain: operations are interpreted directly and binding is
/// interpreted as a meta-level function from `Dt` to `Dt`.
pub trait SemDomain {
    type Dt: Clone;
    type Da;
    type Error: From<ValuationUndefined>;

    fn op(
        &self,
        op: &OpSymId,
        inp: BTreeMap<Index, Self::Dt>,
        binp: BTreeMap<Index, Self::Da>,
    ) -> Result<Self::Dt, Self::Error>;

    /// Builds the meaning of an abstraction binding a `vs` variable from the
    /// function that interprets its body at each value of that variable.
    fn abs(&self, vs: &VarSortId, body: &BodyFn<'_, Self>) -> Result<Self::Da, Self::Error>;
}

/// An assignment of domain values to variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation<D> {
    values: BTreeMap<VarRef, D>,
}

impl<D> Default for Valuation<D> {
    fn default() -> Self {
        Valuation { values: BTreeMap::new() }
    }
}

impl<D: Clone> Valuation<D> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, v: &VarRef) -> Option<&D> {
        self.values.get(v)
    }

    pub fn insert(&mut self, v: VarRef, d: D) {
        self.values.insert(v, d);
    }

    pub fn with(mut self, v: VarRef, d: D) -> Self {
        self.insert(v, d);
        self
    }

    /// `self[(vs, x) <- d]`
    pub fn updated(&self, vs: &VarSortId, x: &VarName, d: D) -> Self {
        self.clone().with(VarRef { vs: vs.clone(), x: x.clone() }, d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarRef, &D)> {
        self.values.iter()
    }
}

impl<D> FromIterator<(VarRef, D)> for Valuation<D> {
    fn from_iter<I: IntoIterator<Item = (VarRef, D)>>(iter: I) -> Self {
        Valuation { values: iter.into_iter().collect() }
    }
}

pub fn interpret<D: SemDomain>(d: &D, rho: &Valuation<D::Dt>, t: &Term) -> Result<D::Dt, D::Error> {
    match t {
        Term::Var(vs, x) => {
            let key = VarRef { vs: vs.clone(), x: x.clone() };
            match rho.get(&key) {
                Some(v) => Ok(v.clone()),
                None => Err(ValuationUndefined(key).into()),
            }
        }
        Term::Op(op, inp, binp) => {
            let mut vals = BTreeMap::new();
            for (i, c) in inp {
                vals.insert(*i, interpret(d, rho, c)?);
            }
            let mut bvals = BTreeMap::new();
            for (j, a) in binp {
                bvals.insert(*j, interpret_abs(d, rho, a)?);
            }
            d.op(op, vals, bvals)
        }
    }
}

pub fn interpret_abs<D: SemDomain>(d: &D, rho: &Valuation<D::Dt>, a: &Abs) -> Result<D::Da, D::Error> {
    let body = |v: &D::Dt| interpret(d, &rho.updated(&a.vs, &a.x, v.clone()), &a.body);
    d.abs(&a.vs, &body)
}
