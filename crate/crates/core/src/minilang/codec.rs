//! Typed terms to and from s-expressions.
//!
//! Constructors are written `(Name arg ...)`; the nullary `TInt` and
//! `TFloat` are bare symbols. `SBlock` is variadic. Decode errors carry the
//! path from the root to the offending node, e.g. `stm/SBlock.2/SAss.1`
//! (constructor name and 1-based argument index per step).

use std::fmt;

use super::ast::{Expr, Sort, Stm, Term, Typ, Var};
use super::sexpr::{self, ParseError, SExpr};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecodeErrorKind {
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("`{name}` takes {expected} argument(s), found {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("`{name}` builds a {found}, expected a {expected}")]
    SortMismatch {
        name: String,
        expected: Sort,
        found: Sort,
    },
    #[error("expected {expected}, found {found}")]
    Shape {
        expected: &'static str,
        found: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at {path}: {kind}")]
pub struct DecodeError {
    pub path: String,
    pub kind: DecodeErrorKind,
}

/// Parse or decode failure for a whole document.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReadError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("decode error {0}")]
    Decode(#[from] DecodeError),
}

fn describe(s: &SExpr) -> String {
    match s {
        SExpr::Symbol(x) => format!("symbol `{x}`"),
        SExpr::Int(i) => format!("integer {i}"),
        SExpr::Str(_) => "a string".into(),
        SExpr::List(items) if items.is_empty() => "an empty list".into(),
        SExpr::List(_) => "a list".into(),
    }
}

struct Node<'s> {
    name: &'s str,
    args: &'s [SExpr],
    path: String,
}

impl<'s> Node<'s> {
    fn fail<T>(&self, kind: DecodeErrorKind) -> Result<T, DecodeError> {
        Err(DecodeError {
            path: self.path.clone(),
            kind,
        })
    }

    fn arity(&self, expected: usize) -> Result<(), DecodeError> {
        if self.args.len() == expected {
            Ok(())
        } else {
            self.fail(DecodeErrorKind::Arity {
                name: self.name.to_string(),
                expected,
                found: self.args.len(),
            })
        }
    }

    fn child_path(&self, i: usize) -> String {
        format!("{}/{}.{}", self.path, self.name, i + 1)
    }

    fn arg(&self, i: usize) -> (&'s SExpr, String) {
        (&self.args[i], self.child_path(i))
    }
}

/// Splits a node into its head symbol and arguments and checks that the
/// head builds `sort`.
fn open<'s>(s: &'s SExpr, sort: Sort, path: String) -> Result<Node<'s>, DecodeError> {
    let (name, args): (&str, &[SExpr]) = match s {
        SExpr::Symbol(name) => (name, &[]),
        SExpr::List(items) => match items.split_first() {
            Some((SExpr::Symbol(name), args)) => (name, args),
            _ => {
                return Err(DecodeError {
                    path,
                    kind: DecodeErrorKind::Shape {
                        expected: "a constructor application",
                        found: describe(s),
                    },
                })
            }
        },
        _ => {
            return Err(DecodeError {
                path,
                kind: DecodeErrorKind::Shape {
                    expected: "a constructor application",
                    found: describe(s),
                },
            })
        }
    };
    let node = Node { name, args, path };
    match Sort::of_constructor(name) {
        None => node.fail(DecodeErrorKind::UnknownConstructor(name.to_string())),
        Some(found) if found != sort => node.fail(DecodeErrorKind::SortMismatch {
            name: name.to_string(),
            expected: sort,
            found,
        }),
        Some(_) => Ok(node),
    }
}

pub fn decode_stm(s: &SExpr) -> Result<Stm, DecodeError> {
    stm_at(s, Sort::Stm.name().to_string())
}

pub fn decode_expr(s: &SExpr) -> Result<Expr, DecodeError> {
    expr_at(s, Sort::Expr.name().to_string())
}

pub fn decode_var(s: &SExpr) -> Result<Var, DecodeError> {
    var_at(s, Sort::Var.name().to_string())
}

pub fn decode_typ(s: &SExpr) -> Result<Typ, DecodeError> {
    typ_at(s, Sort::Typ.name().to_string())
}

pub fn decode(s: &SExpr, sort: Sort) -> Result<Term, DecodeError> {
    Ok(match sort {
        Sort::Stm => Term::Stm(decode_stm(s)?),
        Sort::Expr => Term::Expr(decode_expr(s)?),
        Sort::Var => Term::Var(decode_var(s)?),
        Sort::Typ => Term::Typ(decode_typ(s)?),
    })
}

/// The sort named by the head constructor, if it is one.
pub fn infer_sort(s: &SExpr) -> Option<Sort> {
    match s {
        SExpr::Symbol(name) => Sort::of_constructor(name),
        SExpr::List(items) => match items.first() {
            Some(SExpr::Symbol(name)) => Sort::of_constructor(name),
            _ => None,
        },
        _ => None,
    }
}

fn stm_at(s: &SExpr, path: String) -> Result<Stm, DecodeError> {
    let n = open(s, Sort::Stm, path)?;
    match n.name {
        "SDecl" => {
            n.arity(2)?;
            let (t, tp) = n.arg(0);
            let (v, vp) = n.arg(1);
            Ok(Stm::SDecl(typ_at(t, tp)?, var_at(v, vp)?))
        }
        "SAss" => {
            n.arity(2)?;
            let (v, vp) = n.arg(0);
            let (e, ep) = n.arg(1);
            Ok(Stm::SAss(var_at(v, vp)?, expr_at(e, ep)?))
        }
        "SBlock" => (0..n.args.len())
            .map(|i| {
                let (c, cp) = n.arg(i);
                stm_at(c, cp)
            })
            .collect::<Result<_, _>>()
            .map(Stm::SBlock),
        _ => {
            n.arity(1)?;
            let (e, ep) = n.arg(0);
            Ok(Stm::SReturn(expr_at(e, ep)?))
        }
    }
}

fn expr_at(s: &SExpr, path: String) -> Result<Expr, DecodeError> {
    let n = open(s, Sort::Expr, path)?;
    match n.name {
        "EStm" => {
            n.arity(1)?;
            let (c, cp) = n.arg(0);
            Ok(Expr::stm(stm_at(c, cp)?))
        }
        "EAdd" => {
            n.arity(2)?;
            let (a, ap) = n.arg(0);
            let (b, bp) = n.arg(1);
            Ok(Expr::add(expr_at(a, ap)?, expr_at(b, bp)?))
        }
        "EVar" => {
            n.arity(1)?;
            let (v, vp) = n.arg(0);
            Ok(Expr::EVar(var_at(v, vp)?))
        }
        _ => {
            n.arity(1)?;
            match &n.args[0] {
                SExpr::Int(i) => Ok(Expr::EInt(*i)),
                other => Err(DecodeError {
                    path: n.child_path(0),
                    kind: DecodeErrorKind::Shape {
                        expected: "an integer",
                        found: describe(other),
                    },
                }),
            }
        }
    }
}

fn var_at(s: &SExpr, path: String) -> Result<Var, DecodeError> {
    let n = open(s, Sort::Var, path)?;
    n.arity(1)?;
    match &n.args[0] {
        SExpr::Str(name) => Ok(Var(name.clone())),
        other => Err(DecodeError {
            path: n.child_path(0),
            kind: DecodeErrorKind::Shape {
                expected: "a string",
                found: describe(other),
            },
        }),
    }
}

fn typ_at(s: &SExpr, path: String) -> Result<Typ, DecodeError> {
    let n = open(s, Sort::Typ, path)?;
    n.arity(0)?;
    Ok(if n.name == "TInt" {
        Typ::TInt
    } else {
        Typ::TFloat
    })
}

fn app(name: &str, args: Vec<SExpr>) -> SExpr {
    let mut items = vec![SExpr::Symbol(name.to_string())];
    items.extend(args);
    SExpr::List(items)
}

pub fn encode_stm(s: &Stm) -> SExpr {
    match s {
        Stm::SDecl(t, v) => app("SDecl", vec![encode_typ(t), encode_var(v)]),
        Stm::SAss(v, e) => app("SAss", vec![encode_var(v), encode_expr(e)]),
        Stm::SBlock(ss) => app("SBlock", ss.iter().map(encode_stm).collect()),
        Stm::SReturn(e) => app("SReturn", vec![encode_expr(e)]),
    }
}

pub fn encode_expr(e: &Expr) -> SExpr {
    match e {
        Expr::EStm(s) => app("EStm", vec![encode_stm(s)]),
        Expr::EAdd(a, b) => app("EAdd", vec![encode_expr(a), encode_expr(b)]),
        Expr::EVar(v) => app("EVar", vec![encode_var(v)]),
        Expr::EInt(i) => app("EInt", vec![SExpr::Int(*i)]),
    }
}

pub fn encode_var(v: &Var) -> SExpr {
    app("V", vec![SExpr::Str(v.0.clone())])
}

pub fn encode_typ(t: &Typ) -> SExpr {
    SExpr::Symbol(match t {
        Typ::TInt => "TInt".into(),
        Typ::TFloat => "TFloat".into(),
    })
}

pub fn encode(t: &Term) -> SExpr {
    match t {
        Term::Stm(s) => encode_stm(s),
        Term::Expr(e) => encode_expr(e),
        Term::Var(v) => encode_var(v),
        Term::Typ(t) => encode_typ(t),
    }
}

/// Parses and decodes a document, inferring the sort from the head
/// constructor unless `sort` is given.
pub fn read_term(text: &str, sort: Option<Sort>) -> Result<Term, ReadError> {
    let s = sexpr::parse(text)?;
    let sort = match sort.or_else(|| infer_sort(&s)) {
        Some(sort) => sort,
        None => {
            let kind = match head_symbol(&s) {
                Some(name) => DecodeErrorKind::UnknownConstructor(name.to_string()),
                None => DecodeErrorKind::Shape {
                    expected: "a constructor application",
                    found: describe(&s),
                },
            };
            return Err(DecodeError {
                path: "root".into(),
                kind,
            }
            .into());
        }
    };
    Ok(decode(&s, sort)?)
}

fn head_symbol(s: &SExpr) -> Option<&str> {
    match s {
        SExpr::Symbol(name) => Some(name),
        SExpr::List(items) => match items.first() {
            Some(SExpr::Symbol(name)) => Some(name),
            _ => None,
        },
        _ => None,
    }
}

macro_rules! display_via_sexpr {
    ($($ty:ty => $enc:path),* $(,)?) => {$(
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", $enc(self))
            }
        }
    )*};
}

display_via_sexpr!(Stm => encode_stm, Expr => encode_expr, Var => encode_var, Typ => encode_typ, Term => encode);
