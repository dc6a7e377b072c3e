//! Shared generators, oracles and law checks for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use bindsyn::alpha::{alpha_eq, alpha_eq_abs, alpha_eq_abs_forall, alpha_eq_forall, to_canonical, to_canonical_abs};
use bindsyn::format::{parse_model, parse_signature, parse_term, print_model, print_signature, print_term};
use bindsyn::instances::{eval_fol, CcsKit, FiniteModel, FolKit, FolValue, LambdaKit};
use bindsyn::recursion::models::{FreeVarsModel, IdentityModel, Lifted};
use bindsyn::recursion::{
    check_model_laws, fold_fs, fold_fs_sorted, fold_full, fold_swap, interpret, skel, FsModel, LawSubject, SemDomain,
    SortedFoldError, SortedFsModel, SwapModel, Valuation, ValuationUndefined,
};
use bindsyn::signature::{validate_signature, Index, OpSymId, RawSignature, Signature, SortId, VarSortId};
use bindsyn::sorting::{check_sort, infer_sort, wls, wls_abs, PathStep, SortFailure, SortReport};
use bindsyn::subst::{psubst, psubst_abs, subst, subst_abs, vsubst, Env};
use bindsyn::term::{free_vars, fresh, fresh_abs, fresh_var, swap, swap_name, Abs, Term, VarName, VarRef, VarSet};
use bindsyn::testkit::{oracle_subst, GenConfig, Generator};

pub const DEPTH: usize = 5;

pub fn lambda_sig() -> Signature {
    LambdaKit::new().sig().clone()
}

pub fn ccs_sig() -> Signature {
    CcsKit::default().sig().clone()
}

pub fn fol_sig() -> Signature {
    FolKit::new().sig().clone()
}

/// Two varsorts over two sorts, with binders of both varsorts in both
/// sorts. The shared name pools make `(ve x)` and `(vp x)` coexist.
pub fn mixed_sig() -> Signature {
    validate_signature(
        &RawSignature::default()
            .sort("e")
            .sort("p")
            .varsort("ve", "e")
            .varsort("vp", "p")
            .op("A", "e", &["e", "p"], &[])
            .op("L", "e", &[], &[("ve", "e"), ("vp", "e")])
            .op("M", "p", &["e"], &[("vp", "p")])
            .op("Q", "p", &[], &[("ve", "p")]),
    )
    .unwrap()
}

pub fn generator(sig: Signature, sort: &str, seed: u64) -> Generator {
    Generator::new(GenConfig::new(sig, sort, seed).with_depth(DEPTH)).unwrap()
}

/// One generator per bundled signature and interesting sort.
pub fn generators(seed: u64) -> Vec<Generator> {
    let specs =
        [(lambda_sig(), "lam"), (ccs_sig(), "proc"), (fol_sig(), "fml"), (mixed_sig(), "e"), (mixed_sig(), "p")];
    specs
        .into_iter()
        .enumerate()
        .map(|(k, (sig, sort))| generator(sig, sort, seed.wrapping_add(k as u64 * 7919)))
        .collect()
}

/// Outcome of one law over many generated instances.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} cases, {} failures (seed {})", self.name, self.cases, self.failures.len(), self.seed)?;
        for msg in self.failures.iter().take(3) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// Runs `law` on `n` instances spread over all generators. The closure
/// returns `Err` with a description on a counterexample.
pub fn sample(name: &str, n: usize, seed: u64, mut law: impl FnMut(&mut Generator) -> Result<(), String>) -> Check {
    let mut gens = generators(seed);
    let k = gens.len();
    let mut failures = Vec::new();
    for case in 0..n {
        if let Err(msg) = law(&mut gens[case % k]) {
            failures.push(format!("case {case}: {msg}"));
        }
    }
    Check { name: name.to_string(), seed, cases: n, failures }
}

/// Like [`sample`] with the lambda generator only.
pub fn sample_lambda(
    name: &str,
    n: usize,
    seed: u64,
    mut law: impl FnMut(&mut Generator) -> Result<(), String>,
) -> Check {
    let mut g = generator(lambda_sig(), "lam", seed);
    let failures = (0..n).filter_map(|case| law(&mut g).err().map(|m| format!("case {case}: {m}"))).collect();
    Check { name: name.to_string(), seed, cases: n, failures }
}

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn show(t: &Term) -> String {
    print_term(t)
}

pub fn show_abs(a: &Abs) -> String {
    format!("(abs {} {} {})", a.vs, a.x, print_term(&a.body))
}

/// A pool name of `vs`, now and then a generated one.
pub fn any_name(g: &mut Generator, vs: &VarSortId) -> VarName {
    if g.rng().gen_ratio(1, 6) {
        VarName::Generated(g.rng().gen_range(0..3))
    } else {
        g.name(vs)
    }
}

/// Renames some binders without touching their bodies. The result is
/// usually, but not always, a different term up to alpha.
pub fn perturb(g: &mut Generator, t: &Term) -> Term {
    match t {
        Term::Var(..) => t.clone(),
        Term::Op(op, inp, binp) => Term::Op(
            op.clone(),
            inp.iter().map(|(i, c)| (*i, perturb(g, c))).collect(),
            binp.iter().map(|(j, a)| (*j, perturb_abs(g, a))).collect(),
        ),
    }
}

pub fn perturb_abs(g: &mut Generator, a: &Abs) -> Abs {
    let x = if g.rng().gen_ratio(1, 3) { any_name(g, &a.vs) } else { a.x.clone() };
    Abs { vs: a.vs.clone(), x, body: Box::new(perturb(g, &a.body)) }
}

/// A pair that is alpha-equal about half of the time: an alpha variant, a
/// perturbed variant or an independent term.
pub fn pair(g: &mut Generator) -> (Term, Term) {
    let t = g.term();
    let u = match g.rng().gen_range(0..4) {
        0 | 1 => g.alpha_variant(&t),
        2 => {
            let v = g.alpha_variant(&t);
            perturb(g, &v)
        }
        _ => g.term(),
    };
    (t, u)
}

pub fn abstractions(t: &Term, out: &mut Vec<Abs>) {
    if let Term::Op(_, inp, binp) = t {
        for c in inp.values() {
            abstractions(c, out);
        }
        for a in binp.values() {
            out.push(a.clone());
            abstractions(&a.body, out);
        }
    }
}

/// An abstraction taken from a generated term, or built directly when the
/// generated terms have none.
pub fn abs_instance(g: &mut Generator) -> Abs {
    for _ in 0..5 {
        let mut found = Vec::new();
        abstractions(&g.term(), &mut found);
        if let Some(a) = found.choose(g.rng()) {
            return a.clone();
        }
    }
    let vs = g.varsort();
    let x = g.name(&vs);
    Abs { vs: vs.clone(), x, body: Box::new(g.term_for_varsort(&vs)) }
}

/// A pair of abstractions, alpha-equal about half of the time. Some pairs
/// differ only in the varsort of the binder.
pub fn abs_pair(g: &mut Generator) -> (Abs, Abs) {
    let a = abs_instance(g);
    let b = match g.rng().gen_range(0..5) {
        0 | 1 => g.alpha_variant_abs(&a),
        2 => {
            let v = g.alpha_variant_abs(&a);
            perturb_abs(g, &v)
        }
        3 => {
            let vs = g.varsort();
            Abs { vs, x: a.x.clone(), body: a.body.clone() }
        }
        _ => abs_instance(g),
    };
    (a, b)
}

/// `t` if `(vs, x)` is fresh for it, otherwise `t` with `x` swapped for a
/// name that is not free in `t`.
pub fn make_fresh(t: &Term, vs: &VarSortId, x: &VarName) -> Term {
    if fresh(vs, x, t) {
        return t.clone();
    }
    let mut avoid = free_vars(t);
    avoid.insert(VarRef { vs: vs.clone(), x: x.clone() });
    let z = fresh_var(vs, &avoid);
    swap(t, x, &z, vs)
}

/// Up to three bindings with well-sorted right-hand sides.
pub fn env(g: &mut Generator) -> Env {
    let n = g.rng().gen_range(0..=3);
    let mut out = Env::new();
    for _ in 0..n {
        let vs = g.varsort();
        let x = g.name(&vs);
        let t = g.term_for_varsort(&vs);
        out.insert(VarRef { vs, x }, t);
    }
    out
}

/// Candidate fresh names: the pool, a few generated names and successive
/// fresh picks avoiding `avoid`.
pub fn candidates(g: &Generator, vs: &VarSortId, avoid: &VarSet) -> Vec<VarName> {
    let mut out: Vec<VarName> = g.config().var_pool[vs].clone();
    out.extend((0..3).map(VarName::Generated));
    let mut taken = avoid.clone();
    for _ in 0..3 {
        let y = fresh_var(vs, &taken);
        taken.insert(VarRef { vs: vs.clone(), x: y.clone() });
        out.push(y);
    }
    out.sort();
    out.dedup();
    out
}

/// Free variables by an explicit scope stack, written independently of the
/// library.
pub fn naive_fv(t: &Term) -> VarSet {
    fn go(t: &Term, bound: &mut Vec<VarRef>, out: &mut VarSet) {
        match t {
            Term::Var(vs, x) => {
                let v = VarRef { vs: vs.clone(), x: x.clone() };
                if !bound.contains(&v) {
                    out.insert(v);
                }
            }
            Term::Op(_, inp, binp) => {
                for c in inp.values() {
                    go(c, bound, out);
                }
                for a in binp.values() {
                    bound.push(a.binder());
                    go(&a.body, bound, out);
                    bound.pop();
                }
            }
        }
    }
    let mut out = VarSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// A three-element domain. Operations mix their arguments arbitrarily;
/// abstractions are tabulated over the whole domain.
pub struct Tri;

impl SemDomain for Tri {
    type Dt = u8;
    type Da = [u8; 3];
    type Error = ValuationUndefined;

    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, u8>, binp: BTreeMap<Index, [u8; 3]>) -> Result<u8, Self::Error> {
        let mut h: u32 = op.as_str().bytes().map(u32::from).sum();
        for (i, v) in inp {
            h = h.wrapping_mul(7).wrapping_add(u32::from(v) * (i as u32 + 2) + 1);
        }
        for (j, tab) in binp {
            for (k, d) in tab.iter().enumerate() {
                h = h.wrapping_mul(5).wrapping_add(u32::from(*d) * (k as u32 + j as u32 + 1));
            }
        }
        Ok((h % 3) as u8)
    }

    fn abs(&self, _: &VarSortId, body: &dyn Fn(&u8) -> Result<u8, Self::Error>) -> Result<[u8; 3], Self::Error> {
        Ok([body(&0)?, body(&1)?, body(&2)?])
    }
}

/// Values in `domain` for every pool variable of the generator.
pub fn valuation<D: Clone>(g: &mut Generator, domain: &[D]) -> Valuation<D> {
    let pool: Vec<(VarSortId, VarName)> =
        g.config().var_pool.iter().flat_map(|(vs, names)| names.iter().map(move |x| (vs.clone(), x.clone()))).collect();
    pool.into_iter().map(|(vs, x)| (VarRef { vs, x }, domain.choose(g.rng()).unwrap().clone())).collect()
}

/// Counts constructor applications: one per variable, operation and
/// abstraction, plus one per bound input of an operation.
pub struct SizeModel;

impl SwapModel for SizeModel {
    type T = usize;
    type A = usize;

    fn var(&self, _: &VarSortId, _: &VarName) -> usize {
        1
    }

    fn op(&self, _: &OpSymId, inp: BTreeMap<Index, usize>, binp: BTreeMap<Index, usize>) -> usize {
        1 + inp.values().sum::<usize>() + binp.values().map(|a| a + 1).sum::<usize>()
    }

    fn abs(&self, _: &VarSortId, _: &VarName, body: usize) -> usize {
        body + 1
    }

    fn swap(&self, t: &usize, _: &VarName, _: &VarName, _: &VarSortId) -> usize {
        *t
    }

    fn swap_abs(&self, a: &usize, _: &VarName, _: &VarName, _: &VarSortId) -> usize {
        *a
    }

    fn fresh(&self, _: &VarSortId, _: &VarName, _: &usize) -> bool {
        true
    }

    fn fresh_abs(&self, _: &VarSortId, _: &VarName, _: &usize) -> bool {
        true
    }

    fn eq_t(&self, a: &usize, b: &usize) -> bool {
        a == b
    }
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

pub fn alpha_reflexive(n: usize, seed: u64) -> Check {
    sample("alpha reflexive", n, seed, |g| {
        let t = g.term();
        ensure(alpha_eq(&t, &t), || show(&t))?;
        let a = abs_instance(g);
        ensure(alpha_eq_abs(&a, &a), || show_abs(&a))
    })
}

pub fn alpha_symmetric(n: usize, seed: u64) -> Check {
    sample("alpha symmetric", n, seed, |g| {
        let (t, u) = pair(g);
        ensure(alpha_eq(&t, &u) == alpha_eq(&u, &t), || format!("{} / {}", show(&t), show(&u)))?;
        let (a, b) = abs_pair(g);
        ensure(alpha_eq_abs(&a, &b) == alpha_eq_abs(&b, &a), || format!("{} / {}", show_abs(&a), show_abs(&b)))
    })
}

/// Chains t0 ~ t1 ~ t2 of random binder renamings, plus a perturbed t3 that
/// must relate to t0 exactly as it relates to t1.
pub fn alpha_transitive(n: usize, seed: u64) -> Check {
    sample("alpha transitive", n, seed, |g| {
        let t0 = g.term();
        let t1 = g.alpha_variant(&t0);
        let t2 = g.alpha_variant(&t1);
        ensure(alpha_eq(&t0, &t1) && alpha_eq(&t1, &t2), || format!("renaming chain broke at {}", show(&t0)))?;
        ensure(alpha_eq(&t0, &t2), || format!("{} ~ {} ~ {}", show(&t0), show(&t1), show(&t2)))?;
        let t3 = perturb(g, &t2);
        ensure(alpha_eq(&t0, &t3) == alpha_eq(&t1, &t3), || format!("{} vs {} vs {}", show(&t0), show(&t1), show(&t3)))
    })
}

pub fn alpha_forall_agrees(n: usize, seed: u64, samples: usize) -> Check {
    sample(&format!("alpha exists-fresh = forall-fresh (sample {samples})"), n, seed, |g| {
        let (t, u) = pair(g);
        ensure(alpha_eq(&t, &u) == alpha_eq_forall(&t, &u, samples), || format!("{} / {}", show(&t), show(&u)))?;
        let (a, b) = abs_pair(g);
        ensure(alpha_eq_abs(&a, &b) == alpha_eq_abs_forall(&a, &b, samples), || {
            format!("{} / {}", show_abs(&a), show_abs(&b))
        })
    })
}

pub fn alpha_canonical_oracle(n: usize, seed: u64) -> Check {
    sample("alpha = canonical-form equality", n, seed, |g| {
        let (t, u) = pair(g);
        ensure(alpha_eq(&t, &u) == (to_canonical(&t) == to_canonical(&u)), || format!("{} / {}", show(&t), show(&u)))?;
        let (a, b) = abs_pair(g);
        ensure(alpha_eq_abs(&a, &b) == (to_canonical_abs(&a) == to_canonical_abs(&b)), || {
            format!("{} / {}", show_abs(&a), show_abs(&b))
        })
    })
}

pub fn subst_oracle(n: usize, seed: u64) -> Check {
    sample("subst = freshen-then-graft oracle", n, seed, |g| {
        let x = g.term();
        let ys = g.varsort();
        let by = g.term_for_varsort(&ys);
        let y = any_name(g, &ys);
        let fast = subst(&x, &by, &y, &ys);
        let slow = oracle_subst(&x, &by, &y, &ys);
        ensure(alpha_eq(&fast, &slow), || {
            format!("{}[{}/({ys} {y})]: {} vs oracle {}", show(&x), show(&by), show(&fast), show(&slow))
        })
    })
}

/// The three characterizations of abstraction equality agree.
pub fn abs_equality_characterizations(n: usize, seed: u64) -> Check {
    sample("abstraction equality (1) <=> (2) <=> (3)", n, seed, |g| {
        let (a, b) = abs_pair(g);
        let one = alpha_eq_abs(&a, &b);
        let mut avoid = free_vars(&a.body);
        avoid.extend(free_vars(&b.body));
        avoid.insert(a.binder());
        avoid.insert(VarRef { vs: a.vs.clone(), x: b.x.clone() });
        let ys: Vec<VarName> = candidates(g, &a.vs, &avoid)
            .into_iter()
            .filter(|y| *y != a.x && *y != b.x && fresh(&a.vs, y, &a.body) && fresh(&a.vs, y, &b.body))
            .collect();
        let swapped_eq = |y: &VarName| alpha_eq(&swap(&a.body, y, &a.x, &a.vs), &swap(&b.body, y, &b.x, &a.vs));
        let two = a.vs == b.vs && ys.iter().any(swapped_eq);
        let three = a.vs == b.vs && ys.iter().all(swapped_eq);
        ensure(ys.len() >= 3, || "fewer than three fresh candidates".into())?;
        ensure(one == two && two == three, || {
            format!("{} / {}: (1) {one}, (2) {two}, (3) {three}", show_abs(&a), show_abs(&b))
        })
    })
}

/// Renaming both bodies to a common fresh `y` by substitution and finding
/// them equal makes the abstractions equal.
pub fn abs_subst_rule_1(n: usize, seed: u64) -> Check {
    sample("abstraction equality by substitution (1)", n, seed, |g| {
        let a = abs_instance(g);
        let b = if g.coin() { g.alpha_variant_abs(&a) } else { perturb_abs(g, &a) };
        let mut avoid = free_vars(&a.body);
        avoid.extend(free_vars(&b.body));
        let cands = candidates(g, &a.vs, &avoid);
        for y in cands.iter().filter(|y| **y != a.x && **y != b.x) {
            if fresh(&a.vs, y, &a.body)
                && fresh(&a.vs, y, &b.body)
                && alpha_eq(&vsubst(&a.body, y, &a.x, &a.vs), &vsubst(&b.body, y, &b.x, &a.vs))
            {
                ensure(alpha_eq_abs(&a, &b), || format!("y = {y}: {} / {}", show_abs(&a), show_abs(&b)))?;
            }
        }
        Ok(())
    })
}

/// `fresh xs y X` implies `Abs xs x X = Abs xs y (X[y/x])`.
pub fn abs_subst_rule_2(n: usize, seed: u64) -> Check {
    sample("abstraction renaming by substitution (2)", n, seed, |g| {
        let a = abs_instance(g);
        let cands = candidates(g, &a.vs, &free_vars(&a.body));
        let mut checked = 0;
        for y in cands.iter().filter(|y| fresh(&a.vs, y, &a.body)) {
            checked += 1;
            let renamed = Abs { vs: a.vs.clone(), x: y.clone(), body: Box::new(vsubst(&a.body, y, &a.x, &a.vs)) };
            ensure(alpha_eq_abs(&a, &renamed), || format!("y = {y}: {} vs {}", show_abs(&a), show_abs(&renamed)))?;
        }
        ensure(checked > 0, || "no fresh candidate".into())
    })
}

// ---------------------------------------------------------------------------
// Freshness and substitution simplification

fn all_pool_vars(g: &Generator) -> Vec<VarRef> {
    let mut out: Vec<VarRef> = g
        .config()
        .var_pool
        .iter()
        .flat_map(|(vs, names)| names.iter().map(move |x| VarRef { vs: vs.clone(), x: x.clone() }))
        .collect();
    for vs in g.config().var_pool.keys() {
        out.push(VarRef { vs: vs.clone(), x: VarName::Generated(0) });
    }
    out
}

pub fn fresh_simp(n: usize, seed: u64) -> Check {
    sample("freshness simplification (var, op, abs)", n, seed, |g| {
        let vars = all_pool_vars(g);
        // variables
        let (xs, ys) = (g.varsort(), g.varsort());
        let (x, y) = (any_name(g, &xs), any_name(g, &ys));
        let var = Term::Var(xs.clone(), x.clone());
        ensure(fresh(&ys, &y, &var) == ((&ys, &y) != (&xs, &x)), || format!("({ys} {y}) in {}", show(&var)))?;
        // operations
        let t = g.term();
        if let Term::Op(_, inp, binp) = &t {
            for v in &vars {
                let parts =
                    inp.values().all(|c| fresh(&v.vs, &v.x, c)) && binp.values().all(|a| fresh_abs(&v.vs, &v.x, a));
                ensure(fresh(&v.vs, &v.x, &t) == parts, || format!("{v} in {}", show(&t)))?;
            }
        }
        for v in &vars {
            ensure(fresh(&v.vs, &v.x, &t) == !naive_fv(&t).contains(v), || {
                format!("{v} vs free variables of {}", show(&t))
            })?;
        }
        // abstractions
        let a = abs_instance(g);
        for v in &vars {
            let expected = *v == a.binder() || fresh(&v.vs, &v.x, &a.body);
            ensure(fresh_abs(&v.vs, &v.x, &a) == expected, || format!("{v} in {}", show_abs(&a)))?;
        }
        Ok(())
    })
}

pub fn subst_simp(n: usize, seed: u64) -> Check {
    sample("substitution simplification (var, op, abs)", n, seed, |g| {
        let ys = g.varsort();
        let by = g.term_for_varsort(&ys);
        let y = any_name(g, &ys);
        // variables
        let xs = g.varsort();
        let x = any_name(g, &xs);
        let var = Term::Var(xs.clone(), x.clone());
        let expected = if (&xs, &x) == (&ys, &y) { by.clone() } else { var.clone() };
        ensure(alpha_eq(&subst(&var, &by, &y, &ys), &expected), || {
            format!("{}[{}/({ys} {y})]", show(&var), show(&by))
        })?;
        // operations
        let t = g.term();
        if let Term::Op(op, inp, binp) = &t {
            let parts = Term::Op(
                op.clone(),
                inp.iter().map(|(i, c)| (*i, subst(c, &by, &y, &ys))).collect(),
                binp.iter().map(|(j, a)| (*j, subst_abs(a, &by, &y, &ys))).collect(),
            );
            ensure(alpha_eq(&subst(&t, &by, &y, &ys), &parts), || format!("{}[{}/({ys} {y})]", show(&t), show(&by)))?;
        }
        // abstractions, with the side condition established by construction
        let a = abs_instance(g);
        let y = if a.vs == ys && a.x == y { fresh_var(&ys, &free_vars(&a.body)) } else { y };
        let by = make_fresh(&by, &a.vs, &a.x);
        let lhs = subst_abs(&a, &by, &y, &ys);
        let rhs = Abs { vs: a.vs.clone(), x: a.x.clone(), body: Box::new(subst(&a.body, &by, &y, &ys)) };
        ensure(alpha_eq_abs(&lhs, &rhs), || format!("{}[{}/({ys} {y})]", show_abs(&a), show(&by)))
    })
}

/// The abstraction rule of parallel substitution, for assignments that are
/// undefined at the binder and whose range avoids it.
pub fn psubst_abs_simp(n: usize, seed: u64) -> Check {
    sample("parallel substitution under a fresh binder", n, seed, |g| {
        let a = abs_instance(g);
        let rho: Env = env(g)
            .into_iter()
            .filter(|(k, _)| *k != a.binder())
            .map(|(k, v)| (k, make_fresh(&v, &a.vs, &a.x)))
            .collect();
        let lhs = psubst_abs(&a, &rho);
        let rhs = Abs { vs: a.vs.clone(), x: a.x.clone(), body: Box::new(psubst(&a.body, &rho)) };
        ensure(alpha_eq_abs(&lhs, &rhs), || format!("{} under {} bindings", show_abs(&a), rho.len()))
    })
}

// ---------------------------------------------------------------------------
// Operator interaction

pub fn swap_over_subst(n: usize, seed: u64) -> Check {
    sample("swapping distributes over substitution", n, seed, |g| {
        let y_term = g.term();
        let xs = g.varsort();
        let x_term = g.term_for_varsort(&xs);
        let x = any_name(g, &xs);
        let zs = g.varsort();
        let (z1, z2) = (any_name(g, &zs), any_name(g, &zs));
        let lhs = swap(&subst(&y_term, &x_term, &x, &xs), &z1, &z2, &zs);
        let rhs = subst(
            &swap(&y_term, &z1, &z2, &zs),
            &swap(&x_term, &z1, &z2, &zs),
            &swap_name(&x, &xs, &z1, &z2, &zs),
            &xs,
        );
        ensure(alpha_eq(&lhs, &rhs), || {
            format!("{} [{}/({xs} {x})] swap {z1} {z2} at {zs}", show(&y_term), show(&x_term))
        })
    })
}

pub fn subst_same_var(n: usize, seed: u64) -> Check {
    sample("substitution of the same variable composes", n, seed, |g| {
        let x = g.term();
        let ys = g.varsort();
        let (y1, y2) = (g.term_for_varsort(&ys), g.term_for_varsort(&ys));
        let y = any_name(g, &ys);
        let lhs = subst(&subst(&x, &y1, &y, &ys), &y2, &y, &ys);
        let rhs = subst(&x, &subst(&y1, &y2, &y, &ys), &y, &ys);
        ensure(alpha_eq(&lhs, &rhs), || format!("{} with {} then {} for ({ys} {y})", show(&x), show(&y1), show(&y2)))
    })
}

pub fn subst_different_vars(n: usize, seed: u64) -> Check {
    sample("substitution of different variables commutes", n, seed, |g| {
        let x = g.term();
        let (ys, zs) = (g.varsort(), g.varsort());
        let y = any_name(g, &ys);
        let mut z = any_name(g, &zs);
        if ys == zs && y == z {
            z = fresh_var(&zs, &VarSet::from([VarRef { vs: ys.clone(), x: y.clone() }]));
        }
        let y_term = g.term_for_varsort(&ys);
        let z_term = make_fresh(&g.term_for_varsort(&zs), &ys, &y);
        let lhs = subst(&subst(&x, &y_term, &y, &ys), &z_term, &z, &zs);
        let rhs = subst(&subst(&x, &z_term, &z, &zs), &subst(&y_term, &z_term, &z, &zs), &y, &ys);
        ensure(alpha_eq(&lhs, &rhs), || {
            format!("{} [{}/({ys} {y})] [{}/({zs} {z})]", show(&x), show(&y_term), show(&z_term))
        })
    })
}

pub fn fresh_over_subst(n: usize, seed: u64) -> Check {
    sample("freshness for a substitution decomposes", n, seed, |g| {
        let x = g.term();
        let ys = g.varsort();
        let y_term = g.term_for_varsort(&ys);
        let y = any_name(g, &ys);
        let out = subst(&x, &y_term, &y, &ys);
        for v in all_pool_vars(g) {
            let (zs, z) = (&v.vs, &v.x);
            let expected = ((zs, z) == (&ys, &y) || fresh(zs, z, &x)) && (fresh(&ys, &y, &x) || fresh(zs, z, &y_term));
            ensure(fresh(zs, z, &out) == expected, || format!("{v} in {} [{}/({ys} {y})]", show(&x), show(&y_term)))?;
        }
        Ok(())
    })
}

pub fn psubst_compositional(n: usize, seed: u64) -> Check {
    sample("parallel substitution is compositional", n, seed, |g| {
        let x = g.term();
        let (r1, r2) = (env(g), env(g));
        let lhs = psubst(&psubst(&x, &r1), &r2);
        let rhs = psubst(&x, &bindsyn::subst::env_comp(&r1, &r2));
        ensure(alpha_eq(&lhs, &rhs), || format!("{} with {} then {} bindings", show(&x), r1.len(), r2.len()))
    })
}

pub fn psubst_singleton(n: usize, seed: u64) -> Check {
    sample("singleton parallel substitution = substitution", n, seed, |g| {
        let x = g.term();
        let ys = g.varsort();
        let by = g.term_for_varsort(&ys);
        let y = any_name(g, &ys);
        let rho = Env::from([(VarRef { vs: ys.clone(), x: y.clone() }, by.clone())]);
        ensure(alpha_eq(&psubst(&x, &rho), &subst(&x, &by, &y, &ys)), || {
            format!("{} [{}/({ys} {y})]", show(&x), show(&by))
        })?;
        ensure(alpha_eq(&psubst(&x, &Env::new()), &x), || format!("empty assignment on {}", show(&x)))
    })
}

pub fn subst_alpha_congruence(n: usize, seed: u64) -> Check {
    sample("substitution respects alpha", n, seed, |g| {
        let x = g.term();
        let x2 = g.alpha_variant(&x);
        let ys = g.varsort();
        let by = g.term_for_varsort(&ys);
        let by2 = g.alpha_variant(&by);
        let y = any_name(g, &ys);
        ensure(alpha_eq(&subst(&x, &by, &y, &ys), &subst(&x2, &by2, &y, &ys)), || {
            format!("{} ~ {} with {} ~ {}", show(&x), show(&x2), show(&by), show(&by2))
        })
    })
}

pub fn swap_alpha_invariance(n: usize, seed: u64) -> Check {
    sample("alpha is invariant under swapping", n, seed, |g| {
        let (t, u) = pair(g);
        let zs = g.varsort();
        let (z1, z2) = (any_name(g, &zs), any_name(g, &zs));
        let swapped = alpha_eq(&swap(&t, &z1, &z2, &zs), &swap(&u, &z1, &z2, &zs));
        ensure(alpha_eq(&t, &u) == swapped, || format!("{} / {} swap {z1} {z2}", show(&t), show(&u)))
    })
}

// ---------------------------------------------------------------------------
// Sorting

pub fn sort_preservation(n: usize, seed: u64) -> Check {
    sample("operators preserve sorts", n, seed, |g| {
        let sig = g.sig().clone();
        let s = g.config().sort.clone();
        let x = g.term();
        ensure(wls(&sig, &s, &x), || format!("generated term not at {s}: {}", show(&x)))?;
        let ys = g.varsort();
        let by = g.term_for_varsort(&ys);
        let y = any_name(g, &ys);
        let out = subst(&x, &by, &y, &ys);
        ensure(wls(&sig, &s, &out), || format!("subst left {s}: {}", show(&out)))?;
        let (z1, z2) = (any_name(g, &ys), any_name(g, &ys));
        let out = swap(&x, &z1, &z2, &ys);
        ensure(wls(&sig, &s, &out), || format!("swap left {s}: {}", show(&out)))?;
        let out = vsubst(&x, &z1, &y, &ys);
        ensure(wls(&sig, &s, &out), || format!("vsubst left {s}: {}", show(&out)))?;
        let rho = env(g);
        let out = psubst(&x, &rho);
        ensure(wls(&sig, &s, &out), || format!("psubst left {s}: {}", show(&out)))?;
        let variant = g.alpha_variant(&x);
        ensure(infer_sort(&sig, &x) == infer_sort(&sig, &variant), || format!("alpha changed the sort of {}", show(&x)))
    })
}

fn corpus(name: &str) -> String {
    std::fs::read_to_string(format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn corpus_term(name: &str) -> Term {
    parse_term(&corpus(name)).unwrap()
}

/// The worked sorting examples: lambda terms X, A, Y and another open term, CCS
/// terms E, F, P, Q and the rejected Out with swapped arguments.
pub fn sorting_examples() -> Check {
    let lam = lambda_sig();
    let ccs = ccs_sig();
    let k = CcsKit::default();
    let (e, f, p) = (k.zero(), k.plus(k.zero(), k.zero()), k.nil());
    let q = k.out("c", f.clone(), p.clone());
    let x = Term::var("vlam", "x");
    let a = Abs::new("vlam", "x", x.clone());
    let y = Term::op("Lam", vec![], vec![a.clone()]);
    let cases: Vec<(String, bool)> = vec![
        ("X = (v vlam x) : lam".into(), wls(&lam, &"lam".into(), &x)),
        ("A = Abs vlam x X : (vlam, lam)".into(), wls_abs(&lam, &"vlam".into(), &"lam".into(), &a)),
        ("Y = Lam A : lam".into(), wls(&lam, &"lam".into(), &y) && y == corpus_term("identity.trm")),
        ("Lam x. App x y : lam".into(), wls(&lam, &"lam".into(), &corpus_term("Y.trm"))),
        ("E = Zero : exp".into(), wls(&ccs, &"exp".into(), &e)),
        ("F = Plus E E : exp".into(), wls(&ccs, &"exp".into(), &f)),
        ("P = Sum {} : proc".into(), wls(&ccs, &"proc".into(), &p)),
        ("Q = Out_c F P : proc".into(), wls(&ccs, &"proc".into(), &q) && alpha_eq(&q, &corpus_term("Q.trm"))),
        (
            "Out_c P F rejected at free input 0".into(),
            check_sort(&ccs, &"proc".into(), &corpus_term("Q_swapped.trm"))
                == SortReport::Failure {
                    path: vec![PathStep::Free(0)],
                    reason: SortFailure::ChildSortMismatch { expected: "exp".into(), found: "proc".into() },
                },
        ),
    ];
    let failures = cases.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.clone()).collect();
    Check { name: "worked sorting examples".into(), seed: 0, cases: cases.len(), failures }
}

// ---------------------------------------------------------------------------
// Recursion

/// Runs the law harness on every generator, `n` cases each.
pub fn model_laws<S: LawSubject>(name: &str, subject: &S, n: usize, seed: u64) -> Check {
    let mut failures = Vec::new();
    let mut cases = 0;
    for mut g in generators(seed) {
        let report = check_model_laws(subject, &mut g, n);
        cases += report.cases;
        failures.extend(report.failures.iter().map(|c| format!("{} (seed {})", c, report.seed)));
    }
    Check { name: name.into(), seed, cases, failures }
}

/// Free variables, but the abstraction case forgets to remove the binder.
pub struct LeakyFreeVars;

impl FsModel for LeakyFreeVars {
    type T = VarSet;
    type A = VarSet;

    fn var(&self, vs: &VarSortId, x: &VarName) -> VarSet {
        FsModel::var(&FreeVarsModel, vs, x)
    }

    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
        FsModel::op(&FreeVarsModel, op, inp, binp)
    }

    fn abs(&self, _: &VarSortId, _: &VarName, body: VarSet) -> VarSet {
        body
    }

    fn subst(&self, t: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        FsModel::subst(&FreeVarsModel, t, by, y, ys)
    }

    fn subst_abs(&self, a: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        FsModel::subst_abs(&FreeVarsModel, a, by, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &VarSet) -> bool {
        FsModel::fresh(&FreeVarsModel, vs, x, t)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &VarSet) -> bool {
        FsModel::fresh_abs(&FreeVarsModel, vs, x, a)
    }

    fn eq_t(&self, a: &VarSet, b: &VarSet) -> bool {
        a == b
    }
}

/// Collects binder names, which alpha-equivalence does not respect.
pub struct BinderNames;

impl SwapModel for BinderNames {
    type T = VarSet;
    type A = VarSet;

    fn var(&self, _: &VarSortId, _: &VarName) -> VarSet {
        VarSet::new()
    }

    fn op(&self, _: &OpSymId, inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
        inp.into_values().chain(binp.into_values()).flatten().collect()
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, mut body: VarSet) -> VarSet {
        body.insert(VarRef { vs: vs.clone(), x: x.clone() });
        body
    }

    fn swap(&self, t: &VarSet, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarSet {
        t.iter().map(|v| VarRef { vs: v.vs.clone(), x: swap_name(&v.x, &v.vs, z1, z2, zs) }).collect()
    }

    fn swap_abs(&self, a: &VarSet, z1: &VarName, z2: &VarName, zs: &VarSortId) -> VarSet {
        self.swap(a, z1, z2, zs)
    }

    fn fresh(&self, _: &VarSortId, _: &VarName, _: &VarSet) -> bool {
        true
    }

    fn fresh_abs(&self, _: &VarSortId, _: &VarName, _: &VarSet) -> bool {
        true
    }

    fn eq_t(&self, a: &VarSet, b: &VarSet) -> bool {
        a == b
    }
}

/// Terms as a sorted model of themselves. With `leak` set, abstractions are
/// rebuilt at a varsort the signature does not have.
pub struct TermModel {
    pub sig: Signature,
    pub leak: bool,
}

impl FsModel for TermModel {
    type T = Term;
    type A = Abs;

    fn var(&self, vs: &VarSortId, x: &VarName) -> Term {
        Term::Var(vs.clone(), x.clone())
    }

    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, Term>, binp: BTreeMap<Index, Abs>) -> Term {
        Term::Op(op.clone(), inp, binp)
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: Term) -> Abs {
        let vs = if self.leak { VarSortId::from("vbogus") } else { vs.clone() };
        Abs { vs, x: x.clone(), body: Box::new(body) }
    }

    fn subst(&self, t: &Term, by: &Term, y: &VarName, ys: &VarSortId) -> Term {
        subst(t, by, y, ys)
    }

    fn subst_abs(&self, a: &Abs, by: &Term, y: &VarName, ys: &VarSortId) -> Abs {
        subst_abs(a, by, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &Term) -> bool {
        fresh(vs, x, t)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &Abs) -> bool {
        fresh_abs(vs, x, a)
    }

    fn eq_t(&self, a: &Term, b: &Term) -> bool {
        alpha_eq(a, b)
    }
}

impl SortedFsModel for TermModel {
    fn wls_t(&self, s: &SortId, t: &Term) -> bool {
        wls(&self.sig, s, t)
    }

    fn wls_abs_t(&self, vs: &VarSortId, s: &SortId, a: &Abs) -> bool {
        wls_abs(&self.sig, vs, s, a)
    }
}

/// The free-variable model is sorted trivially.
pub struct SortedFreeVars;

impl FsModel for SortedFreeVars {
    type T = VarSet;
    type A = VarSet;

    fn var(&self, vs: &VarSortId, x: &VarName) -> VarSet {
        FsModel::var(&FreeVarsModel, vs, x)
    }

    fn op(&self, op: &OpSymId, inp: BTreeMap<Index, VarSet>, binp: BTreeMap<Index, VarSet>) -> VarSet {
        FsModel::op(&FreeVarsModel, op, inp, binp)
    }

    fn abs(&self, vs: &VarSortId, x: &VarName, body: VarSet) -> VarSet {
        FsModel::abs(&FreeVarsModel, vs, x, body)
    }

    fn subst(&self, t: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        FsModel::subst(&FreeVarsModel, t, by, y, ys)
    }

    fn subst_abs(&self, a: &VarSet, by: &VarSet, y: &VarName, ys: &VarSortId) -> VarSet {
        FsModel::subst_abs(&FreeVarsModel, a, by, y, ys)
    }

    fn fresh(&self, vs: &VarSortId, x: &VarName, t: &VarSet) -> bool {
        FsModel::fresh(&FreeVarsModel, vs, x, t)
    }

    fn fresh_abs(&self, vs: &VarSortId, x: &VarName, a: &VarSet) -> bool {
        FsModel::fresh_abs(&FreeVarsModel, vs, x, a)
    }

    fn eq_t(&self, a: &VarSet, b: &VarSet) -> bool {
        a == b
    }
}

impl SortedFsModel for SortedFreeVars {
    fn wls_t(&self, _: &SortId, _: &VarSet) -> bool {
        true
    }

    fn wls_abs_t(&self, _: &VarSortId, _: &SortId, _: &VarSet) -> bool {
        true
    }
}

/// The fold into the free-variable model agrees with the library function
/// and with an independently written traversal.
pub fn fold_matches_free_vars(n: usize, seed: u64) -> Check {
    sample("fold into free variables = free_vars", n, seed, |g| {
        let t = g.term();
        let folded = fold_fs(&FreeVarsModel, &t);
        let swapped = fold_swap(&FreeVarsModel, &t);
        let lifted = fold_full(&Lifted(FreeVarsModel), &t);
        let reference = naive_fv(&t);
        ensure(folded == reference && swapped == reference && lifted == reference && free_vars(&t) == reference, || {
            format!("{}: fold {folded:?}, reference {reference:?}", show(&t))
        })
    })
}

pub fn identity_fold(n: usize, seed: u64) -> Check {
    sample("identity full model returns its input", n, seed, |g| {
        let t = g.term();
        let out = fold_full(&IdentityModel, &t);
        ensure(alpha_eq(&out, &t), || format!("{} became {}", show(&t), show(&out)))
    })
}

pub fn sorted_folds(n: usize, seed: u64) -> Check {
    sample("sorted folds accept good models and catch leaks", n, seed, |g| {
        let sig = g.sig().clone();
        let t = g.term();
        let fv = fold_fs_sorted(&sig, &SortedFreeVars, &t).map_err(|e| format!("{}: {e}", show(&t)))?;
        ensure(fv == free_vars(&t), || show(&t))?;
        let good = TermModel { sig: sig.clone(), leak: false };
        let out = fold_fs_sorted(&sig, &good, &t).map_err(|e| format!("{}: {e}", show(&t)))?;
        ensure(alpha_eq(&out, &t), || show(&t))?;
        let leaky = TermModel { sig: sig.clone(), leak: true };
        let has_binder = {
            let mut found = Vec::new();
            abstractions(&t, &mut found);
            !found.is_empty()
        };
        match fold_fs_sorted(&sig, &leaky, &t) {
            Err(SortedFoldError::SortViolation { .. }) => Ok(()),
            Ok(_) if !has_binder => Ok(()),
            other => Err(format!("leaky model on {}: {other:?}", show(&t))),
        }?;
        let bad = Term::Op("Nope".into(), BTreeMap::new(), BTreeMap::new());
        ensure(matches!(fold_fs_sorted(&sig, &good, &bad), Err(SortedFoldError::IllSorted(_))), || {
            "ill-sorted input accepted".into()
        })
    })
}

pub fn size_of_identity() -> Check {
    let t = corpus_term("identity.trm");
    let size = fold_swap(&SizeModel, &t);
    let failures = if size == 4 { vec![] } else { vec![format!("size of {} is {size}, expected 4", show(&t))] };
    Check { name: "size of Lam x. x".into(), seed: 0, cases: 1, failures }
}

// ---------------------------------------------------------------------------
// Interpretation

pub fn tri_substitution_lemma(n: usize, seed: u64) -> Check {
    sample_lambda("substitution lemma (3-element domain)", n, seed, |g| {
        let x = g.term();
        let vs = g.varsort();
        let by = g.term_for_varsort(&vs);
        let y = g.name(&vs);
        let rho = valuation(g, &[0u8, 1, 2]);
        let lhs = interpret(&Tri, &rho, &subst(&x, &by, &y, &vs)).map_err(|e| e.to_string())?;
        let d = interpret(&Tri, &rho, &by).map_err(|e| e.to_string())?;
        let rhs = interpret(&Tri, &rho.updated(&vs, &y, d), &x).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{} [{}/{y}]: {lhs} vs {rhs}", show(&x), show(&by)))
    })
}

pub fn tri_freshness_lemma(n: usize, seed: u64) -> Check {
    sample_lambda("freshness lemma (3-element domain)", n, seed, |g| {
        let x = g.term();
        let vs = g.varsort();
        let fv = free_vars(&x);
        let y = candidates(g, &vs, &fv).into_iter().filter(|y| fresh(&vs, y, &x)).collect::<Vec<_>>();
        let y = y.choose(g.rng()).unwrap().clone();
        let rho = valuation(g, &[0u8, 1, 2]);
        let base = interpret(&Tri, &rho, &x).map_err(|e| e.to_string())?;
        for d in 0..3u8 {
            let other = interpret(&Tri, &rho.updated(&vs, &y, d), &x).map_err(|e| e.to_string())?;
            ensure(base == other, || format!("{} changed with {y} = {d}", show(&x)))?;
        }
        Ok(())
    })
}

pub fn fol_model() -> FiniteModel {
    parse_model(&corpus("two.model")).unwrap()
}

fn fol_generator(seed: u64) -> Generator {
    generator(fol_sig(), "fml", seed)
}

fn fol_sample(
    name: &str,
    n: usize,
    seed: u64,
    mut law: impl FnMut(&mut Generator, &FolKit, &FiniteModel) -> Result<(), String>,
) -> Check {
    let kit = FolKit::new();
    let m = fol_model();
    let mut g = fol_generator(seed);
    let failures = (0..n).filter_map(|case| law(&mut g, &kit, &m).err().map(|e| format!("case {case}: {e}"))).collect();
    Check { name: name.into(), seed, cases: n, failures }
}

fn carrier(m: &FiniteModel) -> Vec<FolValue> {
    m.carrier.iter().cloned().map(FolValue::Elem).collect()
}

pub fn fol_substitution_lemma(n: usize, seed: u64) -> Check {
    fol_sample("substitution lemma (FOL, two-element model)", n, seed, |g, kit, m| {
        let phi = g.term();
        let vs = kit.varsort().clone();
        let s = g.term_for_varsort(&vs);
        let x = g.name(&vs);
        let rho = valuation(g, &carrier(m));
        let lhs = eval_fol(kit, m, &rho, &subst(&phi, &s, &x, &vs)).map_err(|e| e.to_string())?;
        let d = eval_fol(kit, m, &rho, &s).map_err(|e| e.to_string())?;
        let rhs = eval_fol(kit, m, &rho.updated(&vs, &x, d), &phi).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{} [{}/{x}]: {lhs} vs {rhs}", show(&phi), show(&s)))
    })
}

pub fn fol_freshness_lemma(n: usize, seed: u64) -> Check {
    fol_sample("freshness lemma (FOL, two-element model)", n, seed, |g, kit, m| {
        let phi = g.term();
        let vs = kit.varsort().clone();
        let ys: Vec<VarName> =
            candidates(g, &vs, &free_vars(&phi)).into_iter().filter(|y| fresh(&vs, y, &phi)).collect();
        let y = ys.choose(g.rng()).unwrap().clone();
        let rho = valuation(g, &carrier(m));
        let base = eval_fol(kit, m, &rho, &phi).map_err(|e| e.to_string())?;
        for d in carrier(m) {
            let other = eval_fol(kit, m, &rho.updated(&vs, &y, d.clone()), &phi).map_err(|e| e.to_string())?;
            ensure(base == other, || format!("{} changed with {y} = {d}", show(&phi)))?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Skeletons and round trips

pub fn skel_invariance(n: usize, seed: u64) -> Check {
    sample("skeleton invariant under alpha, swap and renaming", n, seed, |g| {
        let t = g.term();
        let k = skel(&t);
        let variant = g.alpha_variant(&t);
        ensure(skel(&variant) == k, || format!("alpha: {}", show(&t)))?;
        let zs = g.varsort();
        let (z1, z2) = (any_name(g, &zs), any_name(g, &zs));
        ensure(skel(&swap(&t, &z1, &z2, &zs)) == k, || format!("swap: {}", show(&t)))?;
        ensure(skel(&vsubst(&t, &z1, &z2, &zs)) == k, || format!("vsubst: {}", show(&t)))
    })
}

pub fn term_roundtrip(n: usize, seed: u64) -> Check {
    sample("print then parse is the identity on terms", n, seed, |g| {
        let t = g.term();
        let t = if g.coin() { g.alpha_variant(&t) } else { t };
        let back = parse_term(&print_term(&t)).map_err(|e| format!("{}: {e}", show(&t)))?;
        ensure(back == t, || show(&t))
    })
}

pub fn corpus_roundtrip() -> Check {
    let mut failures = Vec::new();
    let mut cases = 0;
    for name in ["lambda.sig", "fol.sig", "ccs.sig"] {
        cases += 1;
        let raw = parse_signature(&corpus(name)).unwrap();
        let again = parse_signature(&print_signature(&raw));
        if again.as_ref() != Ok(&raw) {
            failures.push(format!("{name}: {again:?}"));
        }
    }
    let raw = mixed_sig().to_raw();
    cases += 1;
    if parse_signature(&print_signature(&raw)).as_ref() != Ok(&raw) {
        failures.push("mixed signature".into());
    }
    for name in ["two.model", "two_partial.model"] {
        cases += 1;
        let m = parse_model(&corpus(name)).unwrap();
        if parse_model(&print_model(&m)).as_ref() != Ok(&m) {
            failures.push(name.into());
        }
    }
    Check { name: "signature and model files round-trip".into(), seed: 0, cases, failures }
}
