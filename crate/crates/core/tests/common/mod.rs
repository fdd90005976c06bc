//! Brute-force oracles that bypass the plate machinery entirely.
#![allow(dead_code)]

use multiplate::minilang::{Expr, Stm, Term, Typ, Var};

pub const P0_TEXT: &str = include_str!("../data/p0.sexp");
pub const P0_RENAMED: &str = include_str!("../data/p0_renamed.sexp");

/// Constructor count by direct structural recursion.
pub fn count_nodes(t: &Term) -> i64 {
    fn stm(s: &Stm) -> i64 {
        1 + match s {
            Stm::SDecl(t, v) => typ(t) + var(v),
            Stm::SAss(v, e) => var(v) + expr(e),
            Stm::SBlock(ss) => ss.iter().map(stm).sum(),
            Stm::SReturn(e) => expr(e),
        }
    }
    fn expr(e: &Expr) -> i64 {
        1 + match e {
            Expr::EStm(s) => stm(s),
            Expr::EAdd(a, b) => expr(a) + expr(b),
            Expr::EVar(v) => var(v),
            Expr::EInt(_) => 0,
        }
    }
    fn var(_: &Var) -> i64 {
        1
    }
    fn typ(_: &Typ) -> i64 {
        1
    }
    match t {
        Term::Stm(s) => stm(s),
        Term::Expr(e) => expr(e),
        Term::Var(v) => var(v),
        Term::Typ(t) => typ(t),
    }
}

/// Variable names in preorder, left to right.
pub fn collect_vars(t: &Term) -> Vec<String> {
    fn stm(s: &Stm, out: &mut Vec<String>) {
        match s {
            Stm::SDecl(_, v) => out.push(v.0.clone()),
            Stm::SAss(v, e) => {
                out.push(v.0.clone());
                expr(e, out);
            }
            Stm::SBlock(ss) => ss.iter().for_each(|s| stm(s, out)),
            Stm::SReturn(e) => expr(e, out),
        }
    }
    fn expr(e: &Expr, out: &mut Vec<String>) {
        match e {
            Expr::EStm(s) => stm(s, out),
            Expr::EAdd(a, b) => {
                expr(a, out);
                expr(b, out);
            }
            Expr::EVar(v) => out.push(v.0.clone()),
            Expr::EInt(_) => {}
        }
    }
    let mut out = Vec::new();
    match t {
        Term::Stm(s) => stm(s, &mut out),
        Term::Expr(e) => expr(e, &mut out),
        Term::Var(v) => out.push(v.0.clone()),
        Term::Typ(_) => {}
    }
    out
}

/// Renames by rewriting the canonical text: every `(V "n")` becomes
/// `(V "_n")`. Independent of both the AST rename and the plates.
pub fn rename_text(canonical: &str) -> String {
    canonical.replace("(V \"", "(V \"_")
}

/// Expressions one expression-level below `e`, reached through any
/// number of statements, left to right.
pub fn expr_children(e: &Expr) -> Vec<Expr> {
    fn in_stm(s: &Stm, out: &mut Vec<Expr>) {
        match s {
            Stm::SDecl(..) => {}
            Stm::SAss(_, e) | Stm::SReturn(e) => out.push(e.clone()),
            Stm::SBlock(ss) => ss.iter().for_each(|s| in_stm(s, out)),
        }
    }
    let mut out = Vec::new();
    match e {
        Expr::EStm(s) => in_stm(s, &mut out),
        Expr::EAdd(a, b) => out.extend([(**a).clone(), (**b).clone()]),
        Expr::EVar(_) | Expr::EInt(_) => {}
    }
    out
}

/// Node labels of an expression tree, parents before children.
pub fn expr_preorder(e: &Expr, out: &mut Vec<String>) {
    out.push(label(e));
    expr_children(e).iter().for_each(|c| expr_preorder(c, out));
}

/// Node labels of an expression tree, children before parents.
pub fn expr_postorder(e: &Expr, out: &mut Vec<String>) {
    expr_children(e).iter().for_each(|c| expr_postorder(c, out));
    out.push(label(e));
}

fn label(e: &Expr) -> String {
    match e {
        Expr::EStm(_) => "EStm".into(),
        Expr::EAdd(..) => "EAdd".into(),
        Expr::EVar(v) => format!("EVar {}", v.0),
        Expr::EInt(i) => format!("EInt {i}"),
    }
}
