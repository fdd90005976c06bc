//! Renaming by hand-written mutual recursion, one function per sort.
//!
//! Kept as the reference the generic pass is compared against.

use super::ast::{Expr, Stm, Term, Typ, Var};

pub fn rename_stm(s: Stm) -> Stm {
    match s {
        Stm::SDecl(t, v) => Stm::SDecl(rename_typ(t), rename_var(v)),
        Stm::SAss(v, e) => Stm::SAss(rename_var(v), rename_expr(e)),
        Stm::SBlock(ss) => Stm::SBlock(ss.into_iter().map(rename_stm).collect()),
        Stm::SReturn(e) => Stm::SReturn(rename_expr(e)),
    }
}

pub fn rename_expr(e: Expr) -> Expr {
    match e {
        Expr::EStm(s) => Expr::stm(rename_stm(*s)),
        Expr::EAdd(a, b) => Expr::add(rename_expr(*a), rename_expr(*b)),
        Expr::EVar(v) => Expr::EVar(rename_var(v)),
        Expr::EInt(i) => Expr::EInt(i),
    }
}

/// Prepends an underscore.
pub fn rename_var(v: Var) -> Var {
    Var(format!("_{}", v.0))
}

pub fn rename_typ(t: Typ) -> Typ {
    t
}

pub fn naive_rename(t: Term) -> Term {
    match t {
        Term::Stm(s) => Term::Stm(rename_stm(s)),
        Term::Expr(e) => Term::Expr(rename_expr(e)),
        Term::Var(v) => Term::Var(rename_var(v)),
        Term::Typ(t) => Term::Typ(rename_typ(t)),
    }
}
