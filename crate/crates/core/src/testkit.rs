//! Seeded generation of well-sorted terms and an independent substitution
//! oracle for law testing.
//!
//! Variable pools are small on purpose (three names per varsort by default)
//! so generated terms are full of shadowing and near-capture situations.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::signature::{OpSymId, Signature, SortId, VarSortId};
use crate::term::{fresh, Abs, Term, VarName, VarRef};

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub sig: Signature,
    pub sort: SortId,
    pub max_depth: usize,
    pub var_pool: BTreeMap<VarSortId, Vec<VarName>>,
    pub seed: u64,
}

impl GenConfig {
    /// Depth 4 and the pool `x y z` for every varsort.
    pub fn new(sig: Signature, sort: impl Into<SortId>, seed: u64) -> Self {
        let pool: Vec<VarName> = ["x", "y", "z"].into_iter().map(VarName::from).collect();
        let var_pool = sig.varsorts().map(|vs| (vs.clone(), pool.clone())).collect();
        GenConfig { sig, sort: sort.into(), max_depth: 4, var_pool, seed }
    }

    pub fn with_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no finite term has sort `{0}`")]
    UninhabitedSort(SortId),
    #[error("sort `{0}` is not declared")]
    UnknownSort(SortId),
    #[error("variable pool for varsort `{0}` is empty or missing")]
    EmptyPool(VarSortId),
}

/// A deterministic stream of random terms.
#[derive(Debug, Clone)]
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
    // least number of nodes of a term of each inhabited sort
    min_size: BTreeMap<SortId, usize>,
}

fn min_sizes(sig: &Signature) -> BTreeMap<SortId, usize> {
    let mut size: BTreeMap<SortId, usize> = BTreeMap::new();
    for vs in sig.varsorts() {
        size.insert(sig.sort_of_var(vs).expect("declared").clone(), 1);
    }
    loop {
        let mut changed = false;
        for (_, decl) in sig.ops() {
            let free: Option<usize> = decl.arity.free.values().map(|s| size.get(s).copied()).sum();
            let bound: Option<usize> = decl.arity.bound.values().map(|(_, s)| size.get(s).map(|n| n + 1)).sum();
            if let (Some(f), Some(b)) = (free, bound) {
                let candidate = 1 + f + b;
                let entry = size.entry(decl.result.clone()).or_insert(usize::MAX);
                if candidate < *entry {
                    *entry = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            return size;
        }
    }
}

fn reachable(sig: &Signature, from: &SortId) -> (BTreeSet<SortId>, BTreeSet<VarSortId>) {
    let mut sorts = BTreeSet::from([from.clone()]);
    let mut varsorts = BTreeSet::new();
    let mut todo = vec![from.clone()];
    while let Some(s) = todo.pop() {
        if let Some(vs) = sig.varsort_of_sort(&s) {
            varsorts.insert(vs.clone());
        }
        for (_, decl) in sig.ops().filter(|(_, d)| d.result == s) {
            let children = decl.arity.free.values().chain(decl.arity.bound.values().map(|(_, s)| s));
            for c in children {
                if sorts.insert(c.clone()) {
                    todo.push(c.clone());
                }
            }
            for (vs, _) in decl.arity.bound.values() {
                varsorts.insert(vs.clone());
            }
        }
    }
    (sorts, varsorts)
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Result<Self, GenError> {
        if !cfg.sig.has_sort(&cfg.sort) {
            return Err(GenError::UnknownSort(cfg.sort.clone()));
        }
        let min_size = min_sizes(&cfg.sig);
        let (sorts, varsorts) = reachable(&cfg.sig, &cfg.sort);
        if !min_size.contains_key(&cfg.sort) {
            return Err(GenError::UninhabitedSort(cfg.sort.clone()));
        }
        for vs in varsorts {
            if cfg.var_pool.get(&vs).is_none_or(Vec::is_empty) {
                return Err(GenError::EmptyPool(vs));
            }
        }
        // Ops with an uninhabited child sort are skipped during generation,
        // so only the requested sort has to be inhabited.
        let _ = sorts;
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Ok(Generator { cfg, rng, min_size })
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    pub fn sig(&self) -> &Signature {
        &self.cfg.sig
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// A term of the configured sort and depth.
    pub fn term(&mut self) -> Term {
        let (sort, depth) = (self.cfg.sort.clone(), self.cfg.max_depth);
        self.term_at(&sort, depth)
    }

    /// A term of sort `sort` with at most `depth` nested operations, or the
    /// smallest term of that sort when `depth` is exhausted and no variable
    /// fits. Panics on an uninhabited sort.
    pub fn term_at(&mut self, sort: &SortId, depth: usize) -> Term {
        let var = self.cfg.sig.varsort_of_sort(sort).cloned().filter(|vs| self.cfg.var_pool.contains_key(vs));
        if depth == 0 {
            return match var {
                Some(vs) => self.var_term(&vs),
                None => self.smallest(sort),
            };
        }
        let ops: Vec<OpSymId> = self
            .cfg
            .sig
            .ops()
            .filter(|(_, d)| &d.result == sort && self.op_inhabited(d))
            .map(|(name, _)| name.clone())
            .collect();
        let choices = ops.len() + usize::from(var.is_some());
        assert!(choices > 0, "sort `{sort}` is uninhabited");
        let pick = self.rng.gen_range(0..choices);
        if pick == ops.len() {
            let vs = var.expect("variable choice");
            return self.var_term(&vs);
        }
        self.op_term(&ops[pick], depth - 1)
    }

    /// A term of the sort that variables of `vs` range over, at most half
    /// the configured depth.
    pub fn term_for_varsort(&mut self, vs: &VarSortId) -> Term {
        let sort = self.cfg.sig.sort_of_var(vs).expect("declared varsort").clone();
        let depth = self.cfg.max_depth.div_ceil(2);
        self.term_at(&sort, depth)
    }

    fn op_inhabited(&self, decl: &crate::signature::OpDecl) -> bool {
        decl.arity.free.values().all(|s| self.min_size.contains_key(s))
            && decl.arity.bound.values().all(|(_, s)| self.min_size.contains_key(s))
    }

    fn op_term(&mut self, op: &OpSymId, depth: usize) -> Term {
        let decl = self.cfg.sig.op(op).expect("declared op").clone();
        let inp = decl.arity.free.iter().map(|(i, s)| (*i, self.term_at(s, depth))).collect();
        let binp = decl
            .arity
            .bound
            .iter()
            .map(|(j, (vs, s))| {
                let x = self.name(vs);
                (*j, Abs { vs: vs.clone(), x, body: Box::new(self.term_at(s, depth)) })
            })
            .collect();
        Term::Op(op.clone(), inp, binp)
    }

    fn smallest(&mut self, sort: &SortId) -> Term {
        let cost = |decl: &crate::signature::OpDecl, sizes: &BTreeMap<SortId, usize>| -> Option<usize> {
            let f: Option<usize> = decl.arity.free.values().map(|s| sizes.get(s).copied()).sum();
            let b: Option<usize> = decl.arity.bound.values().map(|(_, s)| sizes.get(s).map(|n| n + 1)).sum();
            Some(1 + f? + b?)
        };
        let best = self
            .cfg
            .sig
            .ops()
            .filter(|(_, d)| &d.result == sort)
            .filter_map(|(name, d)| cost(d, &self.min_size).map(|c| (c, name.clone())))
            .min()
            .unwrap_or_else(|| panic!("sort `{sort}` is uninhabited"));
        self.op_term(&best.1, 0)
    }

    fn var_term(&mut self, vs: &VarSortId) -> Term {
        let x = self.name(vs);
        Term::Var(vs.clone(), x)
    }

    /// A name from the pool of `vs`.
    pub fn name(&mut self, vs: &VarSortId) -> VarName {
        self.cfg.var_pool[vs].choose(&mut self.rng).expect("nonempty pool").clone()
    }

    /// A varsort that has a pool.
    pub fn varsort(&mut self) -> VarSortId {
        let keys: Vec<&VarSortId> = self.cfg.var_pool.keys().collect();
        (*keys.choose(&mut self.rng).expect("at least one varsort")).clone()
    }

    /// Renames binders at random, only to names that keep the result
    /// alpha-equivalent (the old name, or one not free in the body).
    pub fn alpha_variant(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(..) => t.clone(),
            Term::Op(op, inp, binp) => Term::Op(
                op.clone(),
                inp.iter().map(|(i, c)| (*i, self.alpha_variant(c))).collect(),
                binp.iter().map(|(j, a)| (*j, self.alpha_variant_abs(a))).collect(),
            ),
        }
    }

    pub fn alpha_variant_abs(&mut self, a: &Abs) -> Abs {
        let mut candidates: Vec<VarName> = self.cfg.var_pool[&a.vs].clone();
        candidates.push(VarName::Generated(self.rng.gen_range(0..4)));
        candidates.retain(|z| z == &a.x || fresh(&a.vs, z, &a.body));
        let z = candidates.choose(&mut self.rng).cloned().unwrap_or_else(|| a.x.clone());
        let body = crate::term::swap(&a.body, &z, &a.x, &a.vs);
        Abs { vs: a.vs.clone(), x: z, body: Box::new(self.alpha_variant(&body)) }
    }
}

/// Generates one term from `cfg`.
pub fn gen_term(cfg: &GenConfig) -> Result<Term, GenError> {
    Ok(Generator::new(cfg.clone())?.term())
}

/// Substitution by a separate route: rename every binder of `x` to a
/// distinct name that occurs nowhere in `x`, `by` or `y`, after which no
/// capture is possible, then replace every `(ys, y)` occurrence verbatim.
pub fn oracle_subst(x: &Term, by: &Term, y: &VarName, ys: &VarSortId) -> Term {
    let mut next =
        1 + [max_generated(x), max_generated(by), generated_index(y)].into_iter().flatten().max().unwrap_or(0);
    let renamed = rename_apart(x, &mut Vec::new(), &mut next);
    graft(&renamed, by, &VarRef { vs: ys.clone(), x: y.clone() })
}

fn generated_index(x: &VarName) -> Option<u64> {
    match x {
        VarName::Generated(k) => Some(*k),
        VarName::User(_) => None,
    }
}

fn max_generated(t: &Term) -> Option<u64> {
    match t {
        Term::Var(_, x) => generated_index(x),
        Term::Op(_, inp, binp) => inp
            .values()
            .map(max_generated)
            .chain(binp.values().map(|a| generated_index(&a.x).max(max_generated(&a.body))))
            .flatten()
            .max(),
    }
}

fn rename_apart(t: &Term, scope: &mut Vec<(VarRef, VarName)>, next: &mut u64) -> Term {
    match t {
        Term::Var(vs, x) => {
            let hit = scope.iter().rev().find(|(b, _)| &b.vs == vs && &b.x == x);
            match hit {
                Some((_, z)) => Term::Var(vs.clone(), z.clone()),
                None => t.clone(),
            }
        }
        Term::Op(op, inp, binp) => {
            let inp = inp.iter().map(|(i, c)| (*i, rename_apart(c, scope, next))).collect();
            let binp = binp
                .iter()
                .map(|(j, a)| {
                    let z = VarName::Generated(*next);
                    *next += 1;
                    scope.push((a.binder(), z.clone()));
                    let body = rename_apart(&a.body, scope, next);
                    scope.pop();
                    (*j, Abs { vs: a.vs.clone(), x: z, body: Box::new(body) })
                })
                .collect();
            Term::Op(op.clone(), inp, binp)
        }
    }
}

fn graft(t: &Term, by: &Term, target: &VarRef) -> Term {
    match t {
        Term::Var(vs, x) if vs == &target.vs && x == &target.x => by.clone(),
        Term::Var(..) => t.clone(),
        Term::Op(op, inp, binp) => Term::Op(
            op.clone(),
            inp.iter().map(|(i, c)| (*i, graft(c, by, target))).collect(),
            binp.iter()
                .map(|(j, a)| {
                    (*j, Abs { vs: a.vs.clone(), x: a.x.clone(), body: Box::new(graft(&a.body, by, target)) })
                })
                .collect(),
        ),
    }
}
