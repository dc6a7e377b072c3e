//! Text formats for terms, signatures, environments and finite models.
//!
//! ```text
//! term       (v VS NAME)
//!            (op OP ((i TERM) ...) ((j (abs VS NAME TERM)) ...))
//! signature  (signature (sorts S ...) (varsorts (VS S) ...)
//!              (op OP (result S) (free (i S) ...) (bound (j VS S) ...)) ...)
//! env        (env ((VS NAME TERM) ...))
//! model      (model (carrier C ...) (fun F ((C ...) -> C) ...) (pred P (C ...) ...))
//! ```
//!
//! Printers are canonical: parsing printed output gives back the same value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::instances::fol::{Elem, FiniteModel};
use crate::sexp::{parse_one, Located, ParseError};
use crate::signature::{Arity, Index, OpSymId, RawOp, RawSignature, SortId, VarSortId};
use crate::subst::Env;
use crate::term::{Abs, Term, VarName, VarRef};

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Var(vs, x) => {
            let _ = write!(out, "(v {vs} {x})");
        }
        Term::Op(op, inp, binp) => {
            let _ = write!(out, "(op {op} (");
            for (k, (i, c)) in inp.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "({i} ");
                write_term(out, c);
                out.push(')');
            }
            out.push_str(") (");
            for (k, (j, a)) in binp.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "({j} ");
                write_abs(out, a);
                out.push(')');
            }
            out.push_str("))");
        }
    }
}

fn write_abs(out: &mut String, a: &Abs) {
    let _ = write!(out, "(abs {} {} ", a.vs, a.x);
    write_term(out, &a.body);
    out.push(')');
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t);
    out
}

pub fn print_abs(a: &Abs) -> String {
    let mut out = String::new();
    write_abs(&mut out, a);
    out
}

fn ident<T: std::str::FromStr>(l: &Located, what: &str) -> Result<T, ParseError> {
    let a = l.expect_atom(what)?;
    a.parse().map_err(|_| ParseError::at(l.pos, format!("invalid {what} `{a}`")))
}

fn index(l: &Located) -> Result<Index, ParseError> {
    let a = l.expect_atom("an index")?;
    let canonical = !a.is_empty() && a.bytes().all(|b| b.is_ascii_digit()) && (a == "0" || !a.starts_with('0'));
    match a.parse() {
        Ok(i) if canonical => Ok(i),
        _ => Err(ParseError::at(l.pos, format!("invalid index `{a}`"))),
    }
}

fn arity_len(l: &Located, items: &[Located], n: usize, what: &str) -> Result<(), ParseError> {
    if items.len() == n {
        Ok(())
    } else {
        Err(ParseError::at(l.pos, format!("{what} takes {n} arguments, found {}", items.len())))
    }
}

/// Collects `(i X)` pairs into a map, rejecting repeated indices.
fn indexed<T>(
    l: &Located,
    what: &str,
    mut item: impl FnMut(&Located) -> Result<T, ParseError>,
) -> Result<BTreeMap<Index, T>, ParseError> {
    let mut out = BTreeMap::new();
    for entry in l.expect_list(what)? {
        let parts = entry.expect_list("an `(index value)` pair")?;
        if parts.len() != 2 {
            return Err(ParseError::at(entry.pos, "expected an `(index value)` pair"));
        }
        let i = index(&parts[0])?;
        if out.insert(i, item(&parts[1])?).is_some() {
            return Err(ParseError::at(parts[0].pos, format!("duplicate index {i}")));
        }
    }
    Ok(out)
}

pub(crate) fn term_from(l: &Located) -> Result<Term, ParseError> {
    match l.head() {
        Some("v") => {
            let rest = l.expect_form("v")?;
            arity_len(l, rest, 2, "`v`")?;
            Ok(Term::Var(ident(&rest[0], "varsort")?, ident(&rest[1], "variable name")?))
        }
        Some("op") => {
            let rest = l.expect_form("op")?;
            arity_len(l, rest, 3, "`op`")?;
            let op: OpSymId = ident(&rest[0], "operation symbol")?;
            let inp = indexed(&rest[1], "a list of free inputs", term_from)?;
            let binp = indexed(&rest[2], "a list of bound inputs", abs_from)?;
            Ok(Term::Op(op, inp, binp))
        }
        _ => Err(ParseError::at(l.pos, "expected a term `(v ...)` or `(op ...)`")),
    }
}

pub(crate) fn abs_from(l: &Located) -> Result<Abs, ParseError> {
    let rest = l.expect_form("abs")?;
    arity_len(l, rest, 3, "`abs`")?;
    Ok(Abs {
        vs: ident(&rest[0], "varsort")?,
        x: ident(&rest[1], "variable name")?,
        body: Box::new(term_from(&rest[2])?),
    })
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    term_from(&parse_one(text)?)
}

pub fn parse_abs(text: &str) -> Result<Abs, ParseError> {
    abs_from(&parse_one(text)?)
}

pub fn print_signature(sig: &RawSignature) -> String {
    let mut out = String::from("(signature\n  (sorts");
    for s in &sig.sorts {
        let _ = write!(out, " {s}");
    }
    out.push_str(")\n  (varsorts");
    for (vs, s) in &sig.varsorts {
        let _ = write!(out, " ({vs} {s})");
    }
    out.push(')');
    for op in &sig.ops {
        let _ = write!(out, "\n  (op {} (result {}) (free", op.name, op.result);
        for (i, s) in &op.arity.free {
            let _ = write!(out, " ({i} {s})");
        }
        out.push_str(") (bound");
        for (j, (vs, s)) in &op.arity.bound {
            let _ = write!(out, " ({j} {vs} {s})");
        }
        out.push_str("))");
    }
    out.push_str(")\n");
    out
}

fn raw_op(l: &Located) -> Result<RawOp, ParseError> {
    let rest = l.expect_form("op")?;
    let Some(name) = rest.first() else {
        return Err(ParseError::at(l.pos, "`op` needs a name"));
    };
    let name: OpSymId = ident(name, "operation symbol")?;
    let (mut result, mut free, mut bound) = (None, None, None);
    for part in &rest[1..] {
        match part.head() {
            Some("result") => {
                let r = part.expect_form("result")?;
                arity_len(part, r, 1, "`result`")?;
                if result.replace(ident::<SortId>(&r[0], "sort")?).is_some() {
                    return Err(ParseError::at(part.pos, "repeated `result`"));
                }
            }
            Some("free") => {
                let mut map = BTreeMap::new();
                for entry in part.expect_form("free")? {
                    let p = entry.expect_list("`(index sort)`")?;
                    arity_len(entry, p, 2, "a free arity entry")?;
                    let i = index(&p[0])?;
                    if map.insert(i, ident(&p[1], "sort")?).is_some() {
                        return Err(ParseError::at(p[0].pos, format!("duplicate index {i} in free arity of `{name}`")));
                    }
                }
                if free.replace(map).is_some() {
                    return Err(ParseError::at(part.pos, "repeated `free`"));
                }
            }
            Some("bound") => {
                let mut map = BTreeMap::new();
                for entry in part.expect_form("bound")? {
                    let p = entry.expect_list("`(index varsort sort)`")?;
                    arity_len(entry, p, 3, "a bound arity entry")?;
                    let j = index(&p[0])?;
                    let v = (ident(&p[1], "varsort")?, ident(&p[2], "sort")?);
                    if map.insert(j, v).is_some() {
                        return Err(ParseError::at(
                            p[0].pos,
                            format!("duplicate index {j} in bound arity of `{name}`"),
                        ));
                    }
                }
                if bound.replace(map).is_some() {
                    return Err(ParseError::at(part.pos, "repeated `bound`"));
                }
            }
            _ => return Err(ParseError::at(part.pos, "expected `(result ...)`, `(free ...)` or `(bound ...)`")),
        }
    }
    let result = result.ok_or_else(|| ParseError::at(l.pos, format!("`{name}` has no `(result ...)`")))?;
    let arity = Arity { free: free.unwrap_or_default(), bound: bound.unwrap_or_default() };
    Ok(RawOp { name, result, arity })
}

/// Parses a signature file. Repeated declarations are kept, so that
/// validation can report them.
pub fn parse_signature(text: &str) -> Result<RawSignature, ParseError> {
    let top = parse_one(text)?;
    let mut sig = RawSignature::default();
    for part in top.expect_form("signature")? {
        match part.head() {
            Some("sorts") => {
                for s in part.expect_form("sorts")? {
                    sig.sorts.push(ident(s, "sort")?);
                }
            }
            Some("varsorts") => {
                for entry in part.expect_form("varsorts")? {
                    let p = entry.expect_list("`(varsort sort)`")?;
                    arity_len(entry, p, 2, "a varsort declaration")?;
                    sig.varsorts.push((ident(&p[0], "varsort")?, ident(&p[1], "sort")?));
                }
            }
            Some("op") => sig.ops.push(raw_op(part)?),
            _ => return Err(ParseError::at(part.pos, "expected `(sorts ...)`, `(varsorts ...)` or `(op ...)`")),
        }
    }
    Ok(sig)
}

pub fn print_env(env: &Env) -> String {
    if env.is_empty() {
        return "(env ())\n".to_string();
    }
    let mut out = String::from("(env (");
    for (k, (v, t)) in env.iter().enumerate() {
        if k > 0 {
            out.push_str("\n      ");
        }
        let _ = write!(out, "({} {} {})", v.vs, v.x, print_term(t));
    }
    out.push_str("))\n");
    out
}

/// Entries `(VS NAME X)` of an env file, with `X` left unparsed.
pub(crate) fn env_entries(text: &str) -> Result<Vec<(VarRef, Located)>, ParseError> {
    let top = parse_one(text)?;
    let rest = top.expect_form("env")?;
    arity_len(&top, rest, 1, "`env`")?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for entry in rest[0].expect_list("a list of bindings")? {
        let p = entry.expect_list("`(varsort name term)`")?;
        arity_len(entry, p, 3, "a binding")?;
        let vs: VarSortId = ident(&p[0], "varsort")?;
        let x: VarName = ident(&p[1], "variable name")?;
        let v = VarRef { vs, x };
        if !seen.insert(v.clone()) {
            return Err(ParseError::at(entry.pos, format!("duplicate binding for {v}")));
        }
        out.push((v, p[2].clone()));
    }
    Ok(out)
}

pub fn parse_env(text: &str) -> Result<Env, ParseError> {
    env_entries(text)?.into_iter().map(|(v, l)| Ok((v, term_from(&l)?))).collect()
}

/// A carrier element: letters, digits and `_`.
pub(crate) fn elem(l: &Located) -> Result<Elem, ParseError> {
    let a = l.expect_atom("a carrier element")?;
    if !a.is_empty() && a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        Ok(a.to_string())
    } else {
        Err(ParseError::at(l.pos, format!("invalid carrier element `{a}`")))
    }
}

fn tuple(l: &Located) -> Result<Vec<Elem>, ParseError> {
    l.expect_list("a tuple of carrier elements")?.iter().map(elem).collect()
}

pub fn print_model(m: &FiniteModel) -> String {
    let mut out = String::from("(model\n  (carrier");
    for c in &m.carrier {
        let _ = write!(out, " {c}");
    }
    out.push(')');
    for (f, table) in &m.funs {
        let _ = write!(out, "\n  (fun {f}");
        for (args, v) in table {
            let _ = write!(out, " (({}) -> {v})", args.join(" "));
        }
        out.push(')');
    }
    for (p, rows) in &m.preds {
        let _ = write!(out, "\n  (pred {p}");
        for args in rows {
            let _ = write!(out, " ({})", args.join(" "));
        }
        out.push(')');
    }
    out.push_str(")\n");
    out
}

/// Parses a model file. Only the syntax is checked here; agreement with a
/// signature is checked by [`crate::instances::fol::FolKit::check_model`].
pub fn parse_model(text: &str) -> Result<FiniteModel, ParseError> {
    let top = parse_one(text)?;
    let mut m = FiniteModel::default();
    let mut have_carrier = false;
    for part in top.expect_form("model")? {
        match part.head() {
            Some("carrier") => {
                if have_carrier {
                    return Err(ParseError::at(part.pos, "repeated `carrier`"));
                }
                have_carrier = true;
                for c in part.expect_form("carrier")? {
                    let c = elem(c).and_then(|e| {
                        if m.carrier.contains(&e) {
                            Err(ParseError::at(c.pos, format!("duplicate carrier element `{e}`")))
                        } else {
                            Ok(e)
                        }
                    })?;
                    m.carrier.push(c);
                }
            }
            Some("fun") => {
                let rest = part.expect_form("fun")?;
                let Some(name) = rest.first() else {
                    return Err(ParseError::at(part.pos, "`fun` needs a name"));
                };
                let name: OpSymId = ident(name, "function symbol")?;
                let mut table = BTreeMap::new();
                for row in &rest[1..] {
                    let p = row.expect_list("`((args) -> value)`")?;
                    if p.len() != 3 || p[1].atom() != Some("->") {
                        return Err(ParseError::at(row.pos, "expected `((args) -> value)`"));
                    }
                    let args = tuple(&p[0])?;
                    if table.insert(args, elem(&p[2])?).is_some() {
                        return Err(ParseError::at(row.pos, format!("duplicate row in table of `{name}`")));
                    }
                }
                if m.funs.insert(name.clone(), table).is_some() || m.preds.contains_key(&name) {
                    return Err(ParseError::at(part.pos, format!("`{name}` is interpreted twice")));
                }
            }
            Some("pred") => {
                let rest = part.expect_form("pred")?;
                let Some(name) = rest.first() else {
                    return Err(ParseError::at(part.pos, "`pred` needs a name"));
                };
                let name: OpSymId = ident(name, "predicate symbol")?;
                let mut rows = BTreeSet::new();
                for row in &rest[1..] {
                    if !rows.insert(tuple(row)?) {
                        return Err(ParseError::at(row.pos, format!("duplicate row in table of `{name}`")));
                    }
                }
                if m.preds.insert(name.clone(), rows).is_some() || m.funs.contains_key(&name) {
                    return Err(ParseError::at(part.pos, format!("`{name}` is interpreted twice")));
                }
            }
            _ => return Err(ParseError::at(part.pos, "expected `(carrier ...)`, `(fun ...)` or `(pred ...)`")),
        }
    }
    if !have_carrier {
        return Err(ParseError::at(top.pos, "model has no `(carrier ...)`"));
    }
    Ok(m)
}
