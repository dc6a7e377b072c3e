//! Many-sorted first-order logic: sorts `trm` and `fml`, term variables of
//! varsort `vtrm`, connectives `And` and `Not`, the quantifier `All`, and
//! user-declared function and predicate symbols. Formulas are evaluated in
//! finite models.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::format::parse_signature;
use crate::recursion::{interpret, SemDomain, Valuation, ValuationUndefined};
use crate::signature::{validate_signature, Index, OpSymId, Signature, SortId, VarSortId};
use crate::sorting::{infer_sort, SortReport};
use crate::term::{free_vars, Term, VarRef};

pub const FOL_SIG: &str = include_str!("../../corpus/fol.sig");

/// An element of a model's carrier.
pub type Elem = String;

/// A finite structure: a carrier, a table for every function symbol and the
/// set of true tuples for every predicate symbol. Argument tuples list the
/// free inputs in index order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteModel {
    pub carrier: Vec<Elem>,
    pub funs: BTreeMap<OpSymId, BTreeMap<Vec<Elem>, Elem>>,
    pub preds: BTreeMap<OpSymId, BTreeSet<Vec<Elem>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FolValue {
    Elem(Elem),
    Bool(bool),
}

impl fmt::Display for FolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FolValue::Elem(e) => f.write_str(e),
            FolValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    #[error("not a first-order signature: {0}")]
    NotFol(String),
    #[error("term is not well-sorted at trm or fml: {0}")]
    IllSorted(SortReport),
    #[error(transparent)]
    ValuationUndefined(#[from] ValuationUndefined),
    #[error("valuation maps {0} to `{1}`, which is not a carrier element")]
    BadValue(VarRef, FolValue),
    #[error("expected a truth value, found `{0}`")]
    NonBooleanFormula(FolValue),
    #[error("expected a carrier element, found `{0}`")]
    NonElement(FolValue),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("symbol `{0}` has no interpretation")]
    Unsupported(OpSymId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symbol {
    Fun,
    Pred,
    And,
    Not,
    All,
}

#[derive(Debug, Clone)]
pub struct FolKit {
    sig: Signature,
    // arity (number of free inputs) of every symbol, and its role
    symbols: BTreeMap<OpSymId, (Symbol, usize)>,
    trm: SortId,
    fml: SortId,
    vtrm: VarSortId,
}

impl FolKit {
    /// The bundled signature with `zero`, `succ`, `P` and `R`.
    pub fn new() -> Self {
        let raw = parse_signature(FOL_SIG).expect("bundled fol.sig parses");
        Self::from_signature(validate_signature(&raw).expect("bundled fol.sig validates")).expect("bundled fol.sig")
    }

    /// Classifies the symbols of `sig`: operations into `trm` from `trm`
    /// arguments are functions, operations into `fml` from `trm` arguments
    /// are predicates.
    pub fn from_signature(sig: Signature) -> Result<Self, FolError> {
        let (trm, fml, vtrm) = (SortId::from("trm"), SortId::from("fml"), VarSortId::from("vtrm"));
        if !sig.has_sort(&trm) || !sig.has_sort(&fml) {
            return Err(FolError::NotFol("sorts trm and fml are required".into()));
        }
        if sig.sort_of_var(&vtrm).ok() != Some(&trm) {
            return Err(FolError::NotFol("varsort vtrm of sort trm is required".into()));
        }
        let fmls = |n: usize| (0..n).map(|i| (i, fml.clone())).collect::<BTreeMap<Index, SortId>>();
        let mut symbols = BTreeMap::new();
        for (name, decl) in sig.ops() {
            let free: Vec<&SortId> = decl.arity.free.values().collect();
            let plain = decl.arity.bound.is_empty() && free.iter().all(|s| **s == trm);
            let role = match name.as_str() {
                "And" if decl.result == fml && decl.arity.free == fmls(2) && decl.arity.bound.is_empty() => Symbol::And,
                "Not" if decl.result == fml && decl.arity.free == fmls(1) && decl.arity.bound.is_empty() => Symbol::Not,
                "All"
                    if decl.result == fml
                        && decl.arity.free.is_empty()
                        && decl.arity.bound == BTreeMap::from([(0, (vtrm.clone(), fml.clone()))]) =>
                {
                    Symbol::All
                }
                "And" | "Not" | "All" => return Err(FolError::NotFol(format!("`{name}` has the wrong arity"))),
                _ if plain && decl.result == trm => Symbol::Fun,
                _ if plain && decl.result == fml => Symbol::Pred,
                _ => return Err(FolError::NotFol(format!("`{name}` is neither a function nor a predicate symbol"))),
            };
            symbols.insert(name.clone(), (role, free.len()));
        }
        for required in ["And", "Not", "All"] {
            if !symbols.contains_key(&OpSymId::from(required)) {
                return Err(FolError::NotFol(format!("`{required}` is required")));
            }
        }
        Ok(FolKit { sig, symbols, trm, fml, vtrm })
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn term_sort(&self) -> &SortId {
        &self.trm
    }

    pub fn formula_sort(&self) -> &SortId {
        &self.fml
    }

    pub fn varsort(&self) -> &VarSortId {
        &self.vtrm
    }

    pub fn var(&self, x: &str) -> Term {
        Term::var(self.vtrm.clone(), x)
    }

    pub fn apply(&self, sym: &str, args: Vec<Term>) -> Term {
        Term::op(sym, args, vec![])
    }

    pub fn and(&self, a: Term, b: Term) -> Term {
        Term::op("And", vec![a, b], vec![])
    }

    pub fn not(&self, a: Term) -> Term {
        Term::op("Not", vec![a], vec![])
    }

    pub fn all(&self, x: &str, body: Term) -> Term {
        Term::op("All", vec![], vec![crate::term::Abs::new(self.vtrm.clone(), x, body)])
    }

    /// Checks that the model interprets exactly the function and predicate
    /// symbols, with total tables over a nonempty carrier.
    pub fn check_model(&self, m: &FiniteModel) -> Result<(), FolError> {
        let bad = |msg: String| Err(FolError::InvalidModel(msg));
        if m.carrier.is_empty() {
            return bad("empty carrier".into());
        }
        let carrier: BTreeSet<&Elem> = m.carrier.iter().collect();
        if carrier.len() != m.carrier.len() {
            return bad("repeated carrier element".into());
        }
        let in_carrier = |args: &[Elem]| args.iter().all(|a| carrier.contains(a));
        for name in m.funs.keys().chain(m.preds.keys()) {
            if !self.symbols.contains_key(name) {
                return bad(format!("`{name}` is not in the signature"));
            }
        }
        for (name, (role, n)) in &self.symbols {
            match role {
                Symbol::Fun => {
                    let Some(table) = m.funs.get(name) else {
                        return bad(format!("no table for function `{name}`"));
                    };
                    for (args, v) in table {
                        if args.len() != *n || !in_carrier(args) || !carrier.contains(v) {
                            return bad(format!("bad row for `{name}`: ({}) -> {v}", args.join(" ")));
                        }
                    }
                    let expected = m.carrier.len().checked_pow(*n as u32);
                    if expected != Some(table.len()) {
                        return bad(format!("table for `{name}` is not total"));
                    }
                }
                Symbol::Pred => {
                    let Some(rows) = m.preds.get(name) else {
                        return bad(format!("no table for predicate `{name}`"));
                    };
                    if let Some(args) = rows.iter().find(|args| args.len() != *n || !in_carrier(args)) {
                        return bad(format!("bad row for `{name}`: ({})", args.join(" ")));
                    }
                }
                _ if m.funs.contains_key(name) || m.preds.contains_key(name) => {
                    return bad(format!("`{name}` is a logical symbol"));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl Default for FolKit {
    fn default() -> Self {
        Self::new()
    }
}

/// Interpretation of FOL in a finite model. Abstractions mean the table of
/// their body over the carrier, and `All` is the conjunction of that table.
pub struct FolDomain<'a> {
    kit: &'a FolKit,
    model: &'a FiniteModel,
}

impl<'a> FolDomain<'a> {
    pub fn new(kit: &'a FolKit, model: &'a FiniteModel) -> Self {
        FolDomain { kit, model }
    }
}

fn elem(v: FolValue) -> Result<Elem, FolError> {
    match v {
        FolValue::Elem(e) => Ok(e),
        other => Err(FolError::NonElement(other)),
    }
}

fn truth(v: &FolValue) -> Result<bool, FolError> {
    match v {
        FolValue::Bool(b) => Ok(*b),
        other => Err(FolError::NonBooleanFormula(other.clone())),
    }
}

impl SemDomain for FolDomain<'_> {
    type Dt = FolValue;
    type Da = Vec<FolValue>;
    type Error = FolError;

    fn op(
        &self,
        op: &OpSymId,
        inp: BTreeMap<Index, FolValue>,
        binp: BTreeMap<Index, Vec<FolValue>>,
    ) -> Result<FolValue, FolError> {
        let Some((role, _)) = self.kit.symbols.get(op) else {
            return Err(FolError::Unsupported(op.clone()));
        };
        let mut args = inp.into_values();
        match role {
            Symbol::Fun => {
                let key = args.map(elem).collect::<Result<Vec<_>, _>>()?;
                let v = self.model.funs.get(op).and_then(|t| t.get(&key));
                v.map(|e| FolValue::Elem(e.clone())).ok_or_else(|| FolError::Unsupported(op.clone()))
            }
            Symbol::Pred => {
                let key = args.map(elem).collect::<Result<Vec<_>, _>>()?;
                Ok(FolValue::Bool(self.model.preds.get(op).is_some_and(|rows| rows.contains(&key))))
            }
            Symbol::And => {
                let mut all = true;
                for a in args {
                    all &= truth(&a)?;
                }
                Ok(FolValue::Bool(all))
            }
            Symbol::Not => Ok(FolValue::Bool(!truth(&args.next().expect("Not has one input"))?)),
            Symbol::All => {
                let table = binp.into_values().next().expect("All has one abstraction");
                let mut all = true;
                for v in &table {
                    all &= truth(v)?;
                }
                Ok(FolValue::Bool(all))
            }
        }
    }

    fn abs(
        &self,
        _: &VarSortId,
        body: &dyn Fn(&FolValue) -> Result<FolValue, FolError>,
    ) -> Result<Vec<FolValue>, FolError> {
        self.model.carrier.iter().map(|c| body(&FolValue::Elem(c.clone()))).collect()
    }
}

/// Evaluates a term of sort `trm` or a formula of sort `fml`.
pub fn eval_fol(kit: &FolKit, m: &FiniteModel, rho: &Valuation<FolValue>, t: &Term) -> Result<FolValue, FolError> {
    kit.check_model(m)?;
    match infer_sort(kit.sig(), t) {
        SortReport::Sorted(s) if s == kit.trm || s == kit.fml => {}
        SortReport::Sorted(s) => {
            return Err(FolError::IllSorted(SortReport::Failure {
                path: Vec::new(),
                reason: crate::sorting::SortFailure::WrongSort { expected: kit.fml.clone(), found: s },
            }))
        }
        report => return Err(FolError::IllSorted(report)),
    }
    for v in free_vars(t) {
        match rho.get(&v) {
            None => return Err(ValuationUndefined(v).into()),
            Some(FolValue::Elem(e)) if m.carrier.contains(e) => {}
            Some(other) => return Err(FolError::BadValue(v, other.clone())),
        }
    }
    interpret(&FolDomain::new(kit, m), rho, t)
}

/// Evaluates a formula to its truth value.
pub fn eval_formula(kit: &FolKit, m: &FiniteModel, rho: &Valuation<FolValue>, t: &Term) -> Result<bool, FolError> {
    truth(&eval_fol(kit, m, rho, t)?)
}
