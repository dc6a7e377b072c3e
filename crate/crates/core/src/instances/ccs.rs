//! Value-passing CCS with finite choice: expressions `Zero` and `Plus` over
//! expression variables, input and output prefixes per channel, and sums
//! over finite index sets.
//!
//! Symbol names: `Inp_c` and `Out_c` for channel `c`, `Sum` for the empty
//! sum and `Sum_0_1` for the sum over `{0, 1}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::format::parse_signature;
use crate::signature::{validate_signature, Arity, Index, RawOp, RawSignature, Signature, SortId, ValidationErrors};
use crate::term::{Abs, Term};

pub const CCS_SIG: &str = include_str!("../../corpus/ccs.sig");

#[derive(Debug, Clone)]
pub struct CcsKit {
    sig: Signature,
}

/// Operation name of the sum over `ix`.
pub fn sum_name(ix: &BTreeSet<Index>) -> String {
    let mut name = String::from("Sum");
    for i in ix {
        name.push_str(&format!("_{i}"));
    }
    name
}

impl Default for CcsKit {
    fn default() -> Self {
        let raw = parse_signature(CCS_SIG).expect("bundled ccs.sig parses");
        CcsKit { sig: validate_signature(&raw).expect("bundled ccs.sig validates") }
    }
}

impl CcsKit {
    /// Builds the signature for the given channels and sum index sets.
    pub fn new(channels: &[&str], sums: &[BTreeSet<Index>]) -> Result<Self, ValidationErrors> {
        let proc = SortId::from("proc");
        let mut raw = RawSignature::default()
            .sort("exp")
            .sort("proc")
            .varsort("varexp", "exp")
            .op("Zero", "exp", &[], &[])
            .op("Plus", "exp", &["exp", "exp"], &[]);
        for c in channels {
            raw = raw.op(&format!("Inp_{c}"), "proc", &[], &[("varexp", "proc")]).op(
                &format!("Out_{c}"),
                "proc",
                &["exp", "proc"],
                &[],
            );
        }
        for ix in sums {
            let arity = Arity { free: ix.iter().map(|i| (*i, proc.clone())).collect(), bound: BTreeMap::new() };
            raw.ops.push(RawOp { name: sum_name(ix).as_str().into(), result: proc.clone(), arity });
        }
        Ok(CcsKit { sig: validate_signature(&raw)? })
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn var(&self, x: &str) -> Term {
        Term::var("varexp", x)
    }

    pub fn zero(&self) -> Term {
        Term::op("Zero", vec![], vec![])
    }

    pub fn plus(&self, e1: Term, e2: Term) -> Term {
        Term::op("Plus", vec![e1, e2], vec![])
    }

    pub fn inp(&self, c: &str, x: &str, p: Term) -> Term {
        Term::op(format!("Inp_{c}").as_str(), vec![], vec![Abs::new("varexp", x, p)])
    }

    pub fn out(&self, c: &str, e: Term, p: Term) -> Term {
        Term::op(format!("Out_{c}").as_str(), vec![e, p], vec![])
    }

    /// The sum of `ps` indexed by their keys.
    pub fn sum(&self, ps: BTreeMap<Index, Term>) -> Term {
        let ix: BTreeSet<Index> = ps.keys().copied().collect();
        Term::Op(sum_name(&ix).as_str().into(), ps, BTreeMap::new())
    }

    /// The null process, the empty sum.
    pub fn nil(&self) -> Term {
        self.sum(BTreeMap::new())
    }
}
