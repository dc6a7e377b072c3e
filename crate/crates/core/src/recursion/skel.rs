use std::collections::BTreeMap;

use crate::signature::Index;
use crate::term::{Abs, Term};

/// Pure branching structure: a node with indexed free and bound children.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    pub free: BTreeMap<Index, Tree>,
    pub bound: BTreeMap<Index, Tree>,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::default()
    }

    pub fn depth(&self) -> usize {
        1 + self.free.values().chain(self.bound.values()).map(Tree::depth).max().unwrap_or(0)
    }
}

/// The skeleton of a term: operation symbols and variable names are
/// forgotten, only the branching remains. It is invariant under
/// alpha-equivalence, swapping and variable renaming.
pub fn skel(t: &Term) -> Tree {
    match t {
        Term::Var(..) => Tree::leaf(),
        Term::Op(_, inp, binp) => Tree {
            free: inp.iter().map(|(i, c)| (*i, skel(c))).collect(),
            bound: binp.iter().map(|(j, a)| (*j, skel_abs(a))).collect(),
        },
    }
}

/// An abstraction is a node with its body as the single free child at 0.
pub fn skel_abs(a: &Abs) -> Tree {
    Tree { free: BTreeMap::from([(0, skel(&a.body))]), bound: BTreeMap::new() }
}
