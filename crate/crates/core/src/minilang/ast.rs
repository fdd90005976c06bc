//! The four mutually recursive sorts.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stm {
    SDecl(Typ, Var),
    SAss(Var, Expr),
    SBlock(Vec<Stm>),
    SReturn(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    EStm(Box<Stm>),
    EAdd(Box<Expr>, Box<Expr>),
    EVar(Var),
    EInt(i64),
}

/// A variable, `V name`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var(pub String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Typ {
    TInt,
    TFloat,
}

impl Expr {
    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::EAdd(Box::new(a), Box::new(b))
    }

    pub fn stm(s: Stm) -> Expr {
        Expr::EStm(Box::new(s))
    }

    pub fn var(name: &str) -> Expr {
        Expr::EVar(Var::new(name))
    }
}

impl Var {
    pub fn new(name: &str) -> Var {
        Var(name.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Stm,
    Expr,
    Var,
    Typ,
}

impl Sort {
    pub const ALL: [Sort; 4] = [Sort::Stm, Sort::Expr, Sort::Var, Sort::Typ];

    pub fn name(self) -> &'static str {
        match self {
            Sort::Stm => "stm",
            Sort::Expr => "expr",
            Sort::Var => "var",
            Sort::Typ => "typ",
        }
    }

    /// The sort a constructor name belongs to.
    pub fn of_constructor(name: &str) -> Option<Sort> {
        match name {
            "SDecl" | "SAss" | "SBlock" | "SReturn" => Some(Sort::Stm),
            "EStm" | "EAdd" | "EVar" | "EInt" => Some(Sort::Expr),
            "V" => Some(Sort::Var),
            "TInt" | "TFloat" => Some(Sort::Typ),
            _ => None,
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown sort `{0}` (expected stm, expr, var or typ)")]
pub struct UnknownSort(pub String);

impl FromStr for Sort {
    type Err = UnknownSort;

    fn from_str(s: &str) -> Result<Sort, UnknownSort> {
        Sort::ALL
            .into_iter()
            .find(|sort| sort.name() == s)
            .ok_or_else(|| UnknownSort(s.to_string()))
    }
}

/// A term of any sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Stm(Stm),
    Expr(Expr),
    Var(Var),
    Typ(Typ),
}

impl Term {
    pub fn sort(&self) -> Sort {
        match self {
            Term::Stm(_) => Sort::Stm,
            Term::Expr(_) => Sort::Expr,
            Term::Var(_) => Sort::Var,
            Term::Typ(_) => Sort::Typ,
        }
    }
}

impl From<Stm> for Term {
    fn from(s: Stm) -> Term {
        Term::Stm(s)
    }
}

impl From<Expr> for Term {
    fn from(e: Expr) -> Term {
        Term::Expr(e)
    }
}

impl From<Var> for Term {
    fn from(v: Var) -> Term {
        Term::Var(v)
    }
}

impl From<Typ> for Term {
    fn from(t: Typ) -> Term {
        Term::Typ(t)
    }
}

/// The sample program used throughout the tests and docs.
pub fn p0() -> Stm {
    let x = || Var::new("x");
    Stm::SBlock(vec![
        Stm::SDecl(Typ::TInt, x()),
        Stm::SAss(x(), Expr::add(Expr::EVar(x()), Expr::EInt(1))),
        Stm::SReturn(Expr::EVar(x())),
    ])
}
