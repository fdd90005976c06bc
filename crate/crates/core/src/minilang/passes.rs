//! Passes and folds written against the generic plate operations.

use std::rc::Rc;
use std::str::FromStr;

use super::ast::{Expr, Stm, Term, Typ, Var};
use super::plate::{MiniLang, MiniPlate};
use crate::effects::{Const, Identity, Monoid, Sum};
use crate::multiplate::{map_family, preorder_fold};

/// Applies the field of `p` matching the term's sort.
pub fn apply(p: &MiniPlate<Identity>, t: Term) -> Term {
    match t {
        Term::Stm(s) => Term::Stm((p.stm)(s)),
        Term::Expr(e) => Term::Expr((p.expr)(e)),
        Term::Var(v) => Term::Var((p.var)(v)),
        Term::Typ(t) => Term::Typ((p.typ)(t)),
    }
}

/// Runs the field of a constant-context plate matching the term's sort.
pub fn fold<O: Monoid>(p: &MiniPlate<Const<O>>, t: &Term) -> O {
    match t.clone() {
        Term::Stm(s) => (p.stm)(s),
        Term::Expr(e) => (p.expr)(e),
        Term::Var(v) => (p.var)(v),
        Term::Typ(t) => (p.typ)(t),
    }
}

/// The one-node rewrite: prefix every variable with `_`.
pub fn rename_step() -> MiniPlate<Identity> {
    MiniPlate {
        var: Rc::new(|v: Var| Var(format!("_{}", v.0))),
        ..MiniPlate::default()
    }
}

/// `mapFamily` of [`rename_step`], bottom-up over every sort.
pub fn rename_plate() -> MiniPlate<Identity> {
    map_family::<MiniLang>(&rename_step())
}

pub fn rename_pass(t: Term) -> Term {
    apply(&rename_plate(), t)
}

/// Renames a statement; the identity context is transparent.
pub fn rename_stm(s: Stm) -> Stm {
    (rename_plate().stm)(s)
}

/// The one-node rewrite: `EAdd (EInt a) (EInt b)` becomes `EInt (a + b)`,
/// wrapping on overflow.
pub fn constfold_step() -> MiniPlate<Identity> {
    MiniPlate {
        expr: Rc::new(|e: Expr| match e {
            Expr::EAdd(a, b) => match (*a, *b) {
                (Expr::EInt(x), Expr::EInt(y)) => Expr::EInt(x.wrapping_add(y)),
                (a, b) => Expr::add(a, b),
            },
            e => e,
        }),
        ..MiniPlate::default()
    }
}

pub fn constfold_pass(t: Term) -> Term {
    apply(&map_family::<MiniLang>(&constfold_step()), t)
}

/// Variable names in preorder, with repeats.
pub fn collect_vars_fold(t: &Term) -> Vec<String> {
    let yield_var = MiniPlate::<Const<Vec<String>>> {
        var: Rc::new(|v: Var| vec![v.0]),
        ..MiniPlate::default()
    };
    fold(&preorder_fold::<MiniLang, _>(&yield_var), t)
}

/// Number of nodes of every sort, `Typ` leaves included.
pub fn count_nodes_fold(t: &Term) -> i64 {
    let one = MiniPlate::<Const<Sum>> {
        stm: Rc::new(|_: Stm| Sum(1)),
        expr: Rc::new(|_: Expr| Sum(1)),
        var: Rc::new(|_: Var| Sum(1)),
        typ: Rc::new(|_: Typ| Sum(1)),
    };
    fold(&preorder_fold::<MiniLang, _>(&one), t).0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    Rename,
    ConstFold,
}

impl Pass {
    pub fn run(self, t: Term) -> Term {
        match self {
            Pass::Rename => rename_pass(t),
            Pass::ConstFold => constfold_pass(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown pass `{0}` (expected rename or constfold)")]
pub struct UnknownPass(pub String);

impl FromStr for Pass {
    type Err = UnknownPass;

    fn from_str(s: &str) -> Result<Pass, UnknownPass> {
        match s {
            "rename" => Ok(Pass::Rename),
            "constfold" => Ok(Pass::ConstFold),
            other => Err(UnknownPass(other.to_string())),
        }
    }
}

/// Parses a comma-separated pipeline, rejecting it whole on any bad name.
pub fn parse_pipeline(csv: &str) -> Result<Vec<Pass>, UnknownPass> {
    csv.split(',').map(|name| name.trim().parse()).collect()
}

/// Runs `passes` left to right.
pub fn run_pipeline(passes: &[Pass], t: Term) -> Term {
    passes.iter().fold(t, |t, p| p.run(t))
}
