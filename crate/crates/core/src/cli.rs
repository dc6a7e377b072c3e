//! The `bindsyn` command-line front end.
//!
//! Every command reads a signature (`--sig`) and sort-checks its inputs
//! before doing anything else. Results go to standard output as
//! s-expressions, diagnostics to standard error.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
//! (ill-sorted input, not alpha-equivalent, not fresh, no redex, out of
//! fuel), 2 for usage, file, parse and validation errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::alpha::alpha_eq;
use crate::format::{elem, env_entries, parse_env, parse_model, parse_signature, parse_term, print_term, term_from};
use crate::instances::fol::{eval_fol, FolKit, FolValue};
use crate::instances::lambda::{LambdaError, LambdaKit};
use crate::recursion::{skel, Tree, Valuation};
use crate::signature::{validate_signature, Signature, SortId, VarSortId};
use crate::sorting::{check_sort, infer_sort, SortReport};
use crate::subst::{psubst, subst};
use crate::term::{free_vars, fresh, fresh_var, swap, Term, VarName, VarRef, VarSet};

#[derive(Debug, Parser)]
#[command(name = "bindsyn", version, about = "Terms with bindings over many-sorted signatures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sort-check a term, at `--sort` if given.
    Check {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long)]
        sort: Option<SortId>,
    },
    /// Decide alpha-equivalence of two terms.
    Alpha {
        #[arg(long)]
        sig: PathBuf,
        left: PathBuf,
        right: PathBuf,
    },
    /// Substitute the `--by` term for a variable.
    Subst {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long)]
        by: PathBuf,
        #[arg(long)]
        var: VarName,
        #[arg(long)]
        varsort: VarSortId,
    },
    /// Apply the parallel substitution in the env file `--by`.
    Psubst {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long)]
        by: PathBuf,
    },
    /// Swap two variable names throughout a term.
    Swap {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        /// Given exactly twice.
        #[arg(long = "var", required = true)]
        vars: Vec<VarName>,
        #[arg(long)]
        varsort: VarSortId,
    },
    /// Test freshness of `--var`, or without it pick a fresh variable.
    Fresh {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long)]
        var: Option<VarName>,
        #[arg(long)]
        varsort: VarSortId,
        /// Further names to avoid when picking.
        #[arg(long)]
        avoid: Vec<VarName>,
    },
    /// List the free variables of a term.
    Freevars {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
    },
    /// Print the branching skeleton of a term.
    Skel {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
    },
    /// One leftmost-outermost beta step.
    Beta {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
    },
    /// Beta-normalize within `--fuel` steps.
    Normalize {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long, default_value_t = 1000)]
        fuel: usize,
    },
    /// Evaluate a first-order term or formula in a finite model.
    EvalFol {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        term: PathBuf,
        #[arg(long)]
        val: Option<PathBuf>,
    },
}

/// What an invocation printed and how it exited.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: impl Into<String>) -> Self {
        Outcome { code: 0, stdout: stdout.into(), stderr: String::new() }
    }

    fn negative(stdout: impl Into<String>) -> Self {
        Outcome { code: 1, stdout: stdout.into(), stderr: String::new() }
    }
}

/// An early exit: code and message for standard error.
struct Abort(i32, String);

fn error(msg: impl Into<String>) -> Abort {
    Abort(2, msg.into())
}

fn read(path: &Path) -> Result<String, Abort> {
    fs::read_to_string(path).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn load_sig(path: &Path) -> Result<Signature, Abort> {
    let raw = parse_signature(&read(path)?).map_err(|e| error(format!("{}:{e}", path.display())))?;
    validate_signature(&raw).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn load_term(path: &Path) -> Result<Term, Abort> {
    parse_term(&read(path)?).map_err(|e| error(format!("{}:{e}", path.display())))
}

/// Loads a term and requires it to be well-sorted, at `sort` if given.
fn sorted_term(sig: &Signature, path: &Path, sort: Option<&SortId>) -> Result<(Term, SortId), Abort> {
    let t = load_term(path)?;
    let report = match sort {
        Some(s) => check_sort(sig, s, &t),
        None => infer_sort(sig, &t),
    };
    match report {
        SortReport::Sorted(s) => Ok((t, s)),
        report => Err(Abort(1, format!("{}: {report}", path.display()))),
    }
}

fn varsort_sort(sig: &Signature, vs: &VarSortId) -> Result<SortId, Abort> {
    sig.sort_of_var(vs).cloned().map_err(|e| error(e.to_string()))
}

fn print_tree(out: &mut String, t: &Tree) {
    out.push_str("(node (");
    for (k, (i, c)) in t.free.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "({i} ");
        print_tree(out, c);
        out.push(')');
    }
    out.push_str(") (");
    for (k, (j, c)) in t.bound.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "({j} ");
        print_tree(out, c);
        out.push(')');
    }
    out.push_str("))");
}

fn lambda_kit(sig: &Signature) -> Result<LambdaKit, Abort> {
    let kit = LambdaKit::new();
    if kit.sig() == sig {
        Ok(kit)
    } else {
        Err(error("beta reduction needs the lambda signature (sort lam, varsort vlam, App, Lam)"))
    }
}

fn valuation(kit: &FolKit, model: &crate::instances::FiniteModel, path: &Path) -> Result<Valuation<FolValue>, Abort> {
    let text = read(path)?;
    let located = |e: crate::sexp::ParseError| error(format!("{}:{e}", path.display()));
    let mut rho = Valuation::new();
    for (v, value) in env_entries(&text).map_err(located)? {
        if v.vs != *kit.varsort() {
            return Err(error(format!("{}: {v} is not a term variable", path.display())));
        }
        let d = if value.atom().is_some() {
            FolValue::Elem(elem(&value).map_err(located)?)
        } else {
            let t = term_from(&value).map_err(located)?;
            match check_sort(kit.sig(), kit.term_sort(), &t) {
                SortReport::Sorted(_) => {}
                report => return Err(Abort(1, format!("{}: value of {v}: {report}", path.display()))),
            }
            eval_fol(kit, model, &Valuation::new(), &t).map_err(|e| error(format!("value of {v}: {e}")))?
        };
        rho.insert(v, d);
    }
    Ok(rho)
}

fn dispatch(command: Command) -> Result<Outcome, Abort> {
    match command {
        Command::Check { sig, term, sort } => {
            let s = load_sig(&sig)?;
            if let Some(sort) = &sort {
                if !s.has_sort(sort) {
                    return Err(error(format!("sort `{sort}` is not declared")));
                }
            }
            let t = load_term(&term)?;
            let report = match &sort {
                Some(sort) => check_sort(&s, sort, &t),
                None => infer_sort(&s, &t),
            };
            let line = format!("{report}\n");
            Ok(if report.is_failure() { Outcome::negative(line) } else { Outcome::ok(line) })
        }
        Command::Alpha { sig, left, right } => {
            let s = load_sig(&sig)?;
            let (a, _) = sorted_term(&s, &left, None)?;
            let (b, _) = sorted_term(&s, &right, None)?;
            Ok(if alpha_eq(&a, &b) { Outcome::ok("(alpha true)\n") } else { Outcome::negative("(alpha false)\n") })
        }
        Command::Subst { sig, term, by, var, varsort } => {
            let s = load_sig(&sig)?;
            let target = varsort_sort(&s, &varsort)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            let (b, _) = sorted_term(&s, &by, Some(&target))?;
            Ok(Outcome::ok(format!("{}\n", print_term(&subst(&t, &b, &var, &varsort)))))
        }
        Command::Psubst { sig, term, by } => {
            let s = load_sig(&sig)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            let env = parse_env(&read(&by)?).map_err(|e| error(format!("{}:{e}", by.display())))?;
            for (v, u) in &env {
                let target = varsort_sort(&s, &v.vs)?;
                match check_sort(&s, &target, u) {
                    SortReport::Sorted(_) => {}
                    report => return Err(Abort(1, format!("{}: binding of {v}: {report}", by.display()))),
                }
            }
            Ok(Outcome::ok(format!("{}\n", print_term(&psubst(&t, &env)))))
        }
        Command::Swap { sig, term, vars, varsort } => {
            let s = load_sig(&sig)?;
            let [z1, z2] = <[VarName; 2]>::try_from(vars).map_err(|_| error("swap takes `--var` exactly twice"))?;
            varsort_sort(&s, &varsort)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            Ok(Outcome::ok(format!("{}\n", print_term(&swap(&t, &z1, &z2, &varsort)))))
        }
        Command::Fresh { sig, term, var, varsort, avoid } => {
            let s = load_sig(&sig)?;
            varsort_sort(&s, &varsort)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            match var {
                Some(x) if fresh(&varsort, &x, &t) => Ok(Outcome::ok("(fresh true)\n")),
                Some(_) => Ok(Outcome::negative("(fresh false)\n")),
                None => {
                    let mut taken: VarSet = free_vars(&t);
                    taken.extend(avoid.into_iter().map(|x| VarRef { vs: varsort.clone(), x }));
                    let z = fresh_var(&varsort, &taken);
                    Ok(Outcome::ok(format!("(v {varsort} {z})\n")))
                }
            }
        }
        Command::Freevars { sig, term } => {
            let s = load_sig(&sig)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            let mut out = String::from("(freevars");
            for v in free_vars(&t) {
                let _ = write!(out, " (v {} {})", v.vs, v.x);
            }
            out.push_str(")\n");
            Ok(Outcome::ok(out))
        }
        Command::Skel { sig, term } => {
            let s = load_sig(&sig)?;
            let (t, _) = sorted_term(&s, &term, None)?;
            let mut out = String::new();
            print_tree(&mut out, &skel(&t));
            out.push('\n');
            Ok(Outcome::ok(out))
        }
        Command::Beta { sig, term } => {
            let s = load_sig(&sig)?;
            let kit = lambda_kit(&s)?;
            let (t, _) = sorted_term(&s, &term, Some(kit.sort()))?;
            match kit.beta_step(&t) {
                Ok(Some(next)) => Ok(Outcome::ok(format!("{}\n", print_term(&next)))),
                Ok(None) => Ok(Outcome::negative("(normal)\n")),
                Err(e) => Err(Abort(1, e.to_string())),
            }
        }
        Command::Normalize { sig, term, fuel } => {
            let s = load_sig(&sig)?;
            let kit = lambda_kit(&s)?;
            let (t, _) = sorted_term(&s, &term, Some(kit.sort()))?;
            match kit.normalize(&t, fuel) {
                Ok(n) => Ok(Outcome::ok(format!("{}\n", print_term(&n)))),
                Err(LambdaError::OutOfFuel { fuel, .. }) => Ok(Outcome::negative(format!("(out-of-fuel {fuel})\n"))),
                Err(e) => Err(Abort(1, e.to_string())),
            }
        }
        Command::EvalFol { sig, model, term, val } => {
            let s = load_sig(&sig)?;
            let kit = FolKit::from_signature(s).map_err(|e| error(format!("{}: {e}", sig.display())))?;
            let m = parse_model(&read(&model)?).map_err(|e| error(format!("{}:{e}", model.display())))?;
            kit.check_model(&m).map_err(|e| error(format!("{}: {e}", model.display())))?;
            let (t, _) = sorted_term(kit.sig(), &term, None)?;
            let rho = match &val {
                Some(path) => valuation(&kit, &m, path)?,
                None => Valuation::new(),
            };
            let v = eval_fol(&kit, &m, &rho, &t).map_err(|e| error(format!("{}: {e}", term.display())))?;
            Ok(Outcome::ok(format!("(value {v})\n")))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(Abort(code, msg)) => Outcome { code, stdout: String::new(), stderr: format!("bindsyn: {msg}\n") },
    }
}
