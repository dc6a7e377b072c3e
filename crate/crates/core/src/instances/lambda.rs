//! Untyped lambda calculus: one sort `lam`, varsort `vlam`, operations `App`
//! and `Lam`, with leftmost-outermost beta reduction.

use thiserror::Error;

use crate::format::parse_signature;
use crate::signature::{validate_signature, Signature, SortId, VarSortId};
use crate::sorting::{check_sort, SortReport};
use crate::subst::subst;
use crate::term::{Abs, Term, VarName};

pub const LAMBDA_SIG: &str = include_str!("../../corpus/lambda.sig");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("term is not well-sorted at lam: {0}")]
    IllSorted(SortReport),
    #[error("no normal form reached within {fuel} steps")]
    OutOfFuel { fuel: usize, last: Term },
}

#[derive(Debug, Clone)]
pub struct LambdaKit {
    sig: Signature,
    lam: SortId,
    vlam: VarSortId,
}

impl Default for LambdaKit {
    fn default() -> Self {
        Self::new()
    }
}

impl LambdaKit {
    pub fn new() -> Self {
        let raw = parse_signature(LAMBDA_SIG).expect("bundled lambda.sig parses");
        let sig = validate_signature(&raw).expect("bundled lambda.sig validates");
        LambdaKit { sig, lam: "lam".into(), vlam: "vlam".into() }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn sort(&self) -> &SortId {
        &self.lam
    }

    pub fn varsort(&self) -> &VarSortId {
        &self.vlam
    }

    pub fn var(&self, x: &str) -> Term {
        Term::var(self.vlam.clone(), x)
    }

    pub fn app(&self, t1: Term, t2: Term) -> Term {
        Term::op("App", vec![t1, t2], vec![])
    }

    pub fn lam(&self, x: &str, body: Term) -> Term {
        Term::op("Lam", vec![], vec![Abs::new(self.vlam.clone(), x, body)])
    }

    /// `λf.λx. f (f ... (f x))` with `n` applications.
    pub fn church(&self, n: usize) -> Term {
        let mut body = self.var("x");
        for _ in 0..n {
            body = self.app(self.var("f"), body);
        }
        self.lam("f", self.lam("x", body))
    }

    /// Church addition `λm.λn.λf.λx. m f (n f x)`.
    pub fn plus(&self) -> Term {
        let nfx = self.app(self.app(self.var("n"), self.var("f")), self.var("x"));
        let body = self.app(self.app(self.var("m"), self.var("f")), nfx);
        self.lam("m", self.lam("n", self.lam("f", self.lam("x", body))))
    }

    /// `(λx. x x) (λx. x x)`.
    pub fn omega(&self) -> Term {
        let w = self.lam("x", self.app(self.var("x"), self.var("x")));
        self.app(w.clone(), w)
    }

    fn check(&self, t: &Term) -> Result<(), LambdaError> {
        match check_sort(&self.sig, &self.lam, t) {
            SortReport::Sorted(_) => Ok(()),
            report => Err(LambdaError::IllSorted(report)),
        }
    }

    /// One leftmost-outermost beta step, or `None` when `t` is normal.
    pub fn beta_step(&self, t: &Term) -> Result<Option<Term>, LambdaError> {
        self.check(t)?;
        Ok(self.step(t))
    }

    /// Reduces until a normal form, taking at most `fuel` steps.
    pub fn normalize(&self, t: &Term, fuel: usize) -> Result<Term, LambdaError> {
        self.check(t)?;
        let mut t = t.clone();
        for _ in 0..fuel {
            match self.step(&t) {
                Some(next) => t = next,
                None => return Ok(t),
            }
        }
        match self.step(&t) {
            None => Ok(t),
            Some(_) => Err(LambdaError::OutOfFuel { fuel, last: t }),
        }
    }

    fn redex<'t>(&self, t: &'t Term) -> Option<(&'t VarName, &'t Term, &'t Term)> {
        let Term::Op(op, inp, _) = t else { return None };
        if op.as_str() != "App" {
            return None;
        }
        let Some(Term::Op(f, _, binp)) = inp.get(&0) else { return None };
        if f.as_str() != "Lam" {
            return None;
        }
        let a = binp.get(&0)?;
        Some((&a.x, &a.body, inp.get(&1)?))
    }

    fn step(&self, t: &Term) -> Option<Term> {
        if let Some((x, body, arg)) = self.redex(t) {
            return Some(subst(body, arg, x, &self.vlam));
        }
        let Term::Op(op, inp, binp) = t else { return None };
        for (i, c) in inp {
            if let Some(c) = self.step(c) {
                let mut inp = inp.clone();
                inp.insert(*i, c);
                return Some(Term::Op(op.clone(), inp, binp.clone()));
            }
        }
        for (j, a) in binp {
            if let Some(body) = self.step(&a.body) {
                let mut binp = binp.clone();
                binp.insert(*j, Abs { vs: a.vs.clone(), x: a.x.clone(), body: Box::new(body) });
                return Some(Term::Op(op.clone(), inp.clone(), binp));
            }
        }
        None
    }
}
