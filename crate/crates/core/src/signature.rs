//! Many-sorted binding signatures.
//!
//! A signature declares term sorts, variable sorts (varsorts) together with
//! the injective embedding of varsorts into sorts, and for every operation
//! symbol its result sort, its free arity (index to sort) and its bound arity
//! (bindex to a varsort/sort pair).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Position of a free or bound input of an operation symbol.
pub type Index = usize;

/// An identifier was not of the form `[A-Za-z][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid identifier `{0}`")]
pub struct IdentError(pub String);

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

macro_rules! identifier {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(name: impl Into<String>) -> Result<Self, IdentError> {
                let name = name.into();
                if is_identifier(&name) {
                    Ok($name(name))
                } else {
                    Err(IdentError(name))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl FromStr for $name {
            type Err = IdentError;

            fn from_str(s: &str) -> Result<Self, IdentError> {
                $name::new(s)
            }
        }

        /// Panics on a malformed identifier; meant for literals.
        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                match $name::new(s) {
                    Ok(id) => id,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

identifier!(
    /// A term sort.
    SortId
);
identifier!(
    /// A sort of variables.
    VarSortId
);
identifier!(
    /// An operation symbol.
    OpSymId
);

/// Free and bound arity of an operation symbol.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Arity {
    pub free: BTreeMap<Index, SortId>,
    pub bound: BTreeMap<Index, (VarSortId, SortId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpDecl {
    pub result: SortId,
    pub arity: Arity,
}

/// An operation declaration as written, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawOp {
    pub name: OpSymId,
    pub result: SortId,
    pub arity: Arity,
}

/// A signature as written in a file or assembled by hand. Declarations keep
/// their order and may repeat; [`validate_signature`] rejects the repeats.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawSignature {
    pub sorts: Vec<SortId>,
    pub varsorts: Vec<(VarSortId, SortId)>,
    pub ops: Vec<RawOp>,
}

impl RawSignature {
    pub fn sort(mut self, s: &str) -> Self {
        self.sorts.push(s.into());
        self
    }

    pub fn varsort(mut self, vs: &str, s: &str) -> Self {
        self.varsorts.push((vs.into(), s.into()));
        self
    }

    /// Adds an operation whose free inputs are numbered from 0 in order and
    /// whose bound inputs are numbered from 0 in order.
    pub fn op(mut self, name: &str, result: &str, free: &[&str], bound: &[(&str, &str)]) -> Self {
        let arity = Arity {
            free: free.iter().enumerate().map(|(i, s)| (i, (*s).into())).collect(),
            bound: bound.iter().enumerate().map(|(j, (vs, s))| (j, ((*vs).into(), (*s).into()))).collect(),
        };
        self.ops.push(RawOp { name: name.into(), result: result.into(), arity });
        self
    }

    pub fn op_with_arity(mut self, name: &str, result: &str, arity: Arity) -> Self {
        self.ops.push(RawOp { name: name.into(), result: result.into(), arity });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("duplicate declaration of {kind} `{name}`")]
    DuplicateDeclaration { kind: &'static str, name: String },
    #[error("undeclared sort `{sort}` used in {context}")]
    UndeclaredSort { sort: SortId, context: String },
    #[error("undeclared varsort `{varsort}` used in {context}")]
    UndeclaredVarSort { varsort: VarSortId, context: String },
    #[error("varsorts `{first}` and `{second}` are both embedded into sort `{sort}`")]
    NonInjectiveAsSort { first: VarSortId, second: VarSortId, sort: SortId },
}

/// All violations found while validating a signature.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid signature: {}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))]
pub struct ValidationErrors(pub Vec<ValidationError>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error("undeclared varsort `{0}`")]
    UndeclaredVarSort(VarSortId),
    #[error("undeclared sort `{0}`")]
    UndeclaredSort(SortId),
    #[error("undeclared operation symbol `{0}`")]
    UndeclaredOpSym(OpSymId),
}

/// A validated signature.
///
/// Invariants: `as_sort` is total on the declared varsorts, injective and
/// lands in the declared sorts; every sort and varsort mentioned by an
/// operation is declared. All arity domains are finite, so every term over
/// the signature has finitely many variables and fresh names always exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    sorts: BTreeSet<SortId>,
    as_sort: BTreeMap<VarSortId, SortId>,
    ops: BTreeMap<OpSymId, OpDecl>,
}

/// Checks every signature invariant and reports all violations at once.
pub fn validate_signature(raw: &RawSignature) -> Result<Signature, ValidationErrors> {
    let mut errors = Vec::new();

    let mut sorts = BTreeSet::new();
    for s in &raw.sorts {
        if !sorts.insert(s.clone()) {
            errors.push(ValidationError::DuplicateDeclaration { kind: "sort", name: s.to_string() });
        }
    }

    let mut as_sort: BTreeMap<VarSortId, SortId> = BTreeMap::new();
    for (vs, s) in &raw.varsorts {
        if as_sort.contains_key(vs) {
            errors.push(ValidationError::DuplicateDeclaration { kind: "varsort", name: vs.to_string() });
            continue;
        }
        if !sorts.contains(s) {
            errors.push(ValidationError::UndeclaredSort {
                sort: s.clone(),
                context: format!("embedding of varsort `{vs}`"),
            });
        }
        as_sort.insert(vs.clone(), s.clone());
    }

    let mut image: BTreeMap<&SortId, &VarSortId> = BTreeMap::new();
    for (vs, s) in &as_sort {
        if let Some(first) = image.insert(s, vs) {
            errors.push(ValidationError::NonInjectiveAsSort {
                first: first.clone(),
                second: vs.clone(),
                sort: s.clone(),
            });
        }
    }

    let mut ops = BTreeMap::new();
    for op in &raw.ops {
        if ops.contains_key(&op.name) {
            errors.push(ValidationError::DuplicateDeclaration { kind: "operation", name: op.name.to_string() });
            continue;
        }
        let context = |what: String| format!("{what} of operation `{}`", op.name);
        if !sorts.contains(&op.result) {
            errors.push(ValidationError::UndeclaredSort { sort: op.result.clone(), context: context("result".into()) });
        }
        for (i, s) in &op.arity.free {
            if !sorts.contains(s) {
                errors.push(ValidationError::UndeclaredSort {
                    sort: s.clone(),
                    context: context(format!("free input {i}")),
                });
            }
        }
        for (j, (vs, s)) in &op.arity.bound {
            if !as_sort.contains_key(vs) {
                errors.push(ValidationError::UndeclaredVarSort {
                    varsort: vs.clone(),
                    context: context(format!("bound input {j}")),
                });
            }
            if !sorts.contains(s) {
                errors.push(ValidationError::UndeclaredSort {
                    sort: s.clone(),
                    context: context(format!("bound input {j}")),
                });
            }
        }
        ops.insert(op.name.clone(), OpDecl { result: op.result.clone(), arity: op.arity.clone() });
    }

    if errors.is_empty() {
        Ok(Signature { sorts, as_sort, ops })
    } else {
        Err(ValidationErrors(errors))
    }
}

impl Signature {
    pub fn sorts(&self) -> impl Iterator<Item = &SortId> {
        self.sorts.iter()
    }

    pub fn varsorts(&self) -> impl Iterator<Item = &VarSortId> {
        self.as_sort.keys()
    }

    pub fn ops(&self) -> impl Iterator<Item = (&OpSymId, &OpDecl)> {
        self.ops.iter()
    }

    pub fn op(&self, op: &OpSymId) -> Option<&OpDecl> {
        self.ops.get(op)
    }

    pub fn has_sort(&self, s: &SortId) -> bool {
        self.sorts.contains(s)
    }

    pub fn has_varsort(&self, vs: &VarSortId) -> bool {
        self.as_sort.contains_key(vs)
    }

    /// The sort into which variables of `vs` are embedded.
    pub fn sort_of_var(&self, vs: &VarSortId) -> Result<&SortId, LookupError> {
        self.as_sort.get(vs).ok_or_else(|| LookupError::UndeclaredVarSort(vs.clone()))
    }

    /// The varsort embedded into `s`, if any (unique by injectivity).
    pub fn varsort_of_sort(&self, s: &SortId) -> Option<&VarSortId> {
        self.as_sort.iter().find(|(_, t)| *t == s).map(|(vs, _)| vs)
    }

    /// Whether `(vs, s)` occurs in the bound arity of some operation, i.e.
    /// whether abstractions binding a `vs` variable in an `s` term are used.
    pub fn is_in_bar(&self, vs: &VarSortId, s: &SortId) -> Result<bool, LookupError> {
        if !self.has_varsort(vs) {
            return Err(LookupError::UndeclaredVarSort(vs.clone()));
        }
        if !self.has_sort(s) {
            return Err(LookupError::UndeclaredSort(s.clone()));
        }
        Ok(self.ops.values().any(|decl| decl.arity.bound.values().any(|(bvs, bs)| bvs == vs && bs == s)))
    }

    /// Converts back to declaration form, in canonical (sorted) order.
    pub fn to_raw(&self) -> RawSignature {
        RawSignature {
            sorts: self.sorts.iter().cloned().collect(),
            varsorts: self.as_sort.iter().map(|(vs, s)| (vs.clone(), s.clone())).collect(),
            ops: self
                .ops
                .iter()
                .map(|(name, decl)| RawOp {
                    name: name.clone(),
                    result: decl.result.clone(),
                    arity: decl.arity.clone(),
                })
                .collect(),
        }
    }
}
