//! The mini-language as a [`Multiplate`] family.

use std::rc::Rc;

use super::ast::{Expr, Stm, Typ, Var};
use crate::effects::{fun, traverse_list, Applicative, Coalgebra, Kind};
use crate::laws::Counterexample;
use crate::multiplate::{fix_plate, pure_plate, Build, FieldVisitor, Multiplate, Projector};
use crate::vanlaarhoven::VlBiplate;

/// One coalgebra per sort.
pub struct MiniPlate<K: Kind> {
    pub stm: Coalgebra<Stm, K>,
    pub expr: Coalgebra<Expr, K>,
    pub var: Coalgebra<Var, K>,
    pub typ: Coalgebra<Typ, K>,
}

impl<K: Kind> Clone for MiniPlate<K> {
    fn clone(&self) -> Self {
        MiniPlate {
            stm: self.stm.clone(),
            expr: self.expr.clone(),
            var: self.var.clone(),
            typ: self.typ.clone(),
        }
    }
}

impl<K: Applicative> Default for MiniPlate<K> {
    /// The pure plate, convenient as the base of struct-update overrides.
    fn default() -> Self {
        pure_plate::<MiniLang, K>()
    }
}

/// Terms per sort for law checks and oracles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MiniUniverse {
    pub stms: Vec<Stm>,
    pub exprs: Vec<Expr>,
    pub vars: Vec<Var>,
    pub typs: Vec<Typ>,
}

impl MiniUniverse {
    pub fn len(&self) -> usize {
        self.stms.len() + self.exprs.len() + self.vars.len() + self.typs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The family marker.
pub struct MiniLang;

/// A deliberately wrong instance whose `multiplate` forgets the statements
/// inside a block. Only useful as a law-checker fixture.
pub struct BrokenMiniLang;

#[derive(Clone, Copy, Debug)]
pub struct StmField;
#[derive(Clone, Copy, Debug)]
pub struct ExprField;
#[derive(Clone, Copy, Debug)]
pub struct VarField;
#[derive(Clone, Copy, Debug)]
pub struct TypField;

macro_rules! projectors {
    ($family:ty) => {
        projectors!(@one $family, StmField, Stm, stm, stms);
        projectors!(@one $family, ExprField, Expr, expr, exprs);
        projectors!(@one $family, VarField, Var, var, vars);
        projectors!(@one $family, TypField, Typ, typ, typs);
    };
    (@one $family:ty, $proj:ident, $sort:ty, $field:ident, $set:ident) => {
        impl Projector<$family> for $proj {
            type Field = $sort;

            fn name(self) -> &'static str {
                stringify!($field)
            }

            fn project<K: Kind>(self, plate: &MiniPlate<K>) -> Coalgebra<$sort, K> {
                plate.$field.clone()
            }

            fn terms(self, universe: &MiniUniverse) -> Vec<$sort> {
                universe.$set.clone()
            }
        }
    };
}

projectors!(MiniLang);
projectors!(BrokenMiniLang);

fn mk_mini<P, K, Bd>(build: &Bd) -> MiniPlate<K>
where
    P: Multiplate,
    K: Kind,
    Bd: Build<P, K>,
    StmField: Projector<P, Field = Stm>,
    ExprField: Projector<P, Field = Expr>,
    VarField: Projector<P, Field = Var>,
    TypField: Projector<P, Field = Typ>,
{
    MiniPlate {
        stm: build.build(StmField),
        expr: build.build(ExprField),
        var: build.build(VarField),
        typ: build.build(TypField),
    }
}

fn each_mini<P, V>(visitor: &mut V) -> Result<(), Counterexample>
where
    P: Multiplate,
    V: FieldVisitor<P>,
    StmField: Projector<P, Field = Stm>,
    ExprField: Projector<P, Field = Expr>,
    VarField: Projector<P, Field = Var>,
    TypField: Projector<P, Field = Typ>,
{
    visitor.visit(StmField)?;
    visitor.visit(ExprField)?;
    visitor.visit(VarField)?;
    visitor.visit(TypField)
}

/// Rebuilds each constructor from `p` applied to its immediate children.
/// Leaves (`EInt`, `V`, `TInt`, `TFloat`) are returned under `pure`.
/// With `keep_blocks` false the statements of a block are dropped.
fn children<K: Applicative>(p: &MiniPlate<K>, keep_blocks: bool) -> MiniPlate<K> {
    let stm = {
        let p = p.clone();
        Rc::new(move |s: Stm| match s {
            Stm::SDecl(t, v) => K::map2((p.typ)(t), (p.var)(v), Stm::SDecl),
            Stm::SAss(v, e) => K::map2((p.var)(v), (p.expr)(e), Stm::SAss),
            Stm::SBlock(ss) if keep_blocks => K::map(
                traverse_list::<K, Stm, Stm>(&|s| (p.stm)(s), ss),
                fun(Stm::SBlock),
            ),
            Stm::SBlock(_) => K::pure(Stm::SBlock(Vec::new())),
            Stm::SReturn(e) => K::map((p.expr)(e), fun(Stm::SReturn)),
        }) as Coalgebra<Stm, K>
    };
    let expr = {
        let p = p.clone();
        Rc::new(move |e: Expr| match e {
            Expr::EStm(s) => K::map((p.stm)(*s), fun(Expr::stm)),
            Expr::EAdd(a, b) => K::map2((p.expr)(*a), (p.expr)(*b), Expr::add),
            Expr::EVar(v) => K::map((p.var)(v), fun(Expr::EVar)),
            e @ Expr::EInt(_) => K::pure(e),
        }) as Coalgebra<Expr, K>
    };
    MiniPlate {
        stm,
        expr,
        var: Rc::new(|v| K::pure(v)),
        typ: Rc::new(|t| K::pure(t)),
    }
}

impl Multiplate for MiniLang {
    type Plate<K: Kind> = MiniPlate<K>;
    type Universe = MiniUniverse;

    fn multiplate<K: Applicative>(p: &MiniPlate<K>) -> MiniPlate<K> {
        children(p, true)
    }

    fn mk_plate<K: Kind, Bd: Build<Self, K>>(build: &Bd) -> MiniPlate<K> {
        mk_mini::<Self, K, Bd>(build)
    }

    fn each_field<V: FieldVisitor<Self>>(visitor: &mut V) -> Result<(), Counterexample> {
        each_mini::<Self, V>(visitor)
    }
}

impl Multiplate for BrokenMiniLang {
    type Plate<K: Kind> = MiniPlate<K>;
    type Universe = MiniUniverse;

    fn multiplate<K: Applicative>(p: &MiniPlate<K>) -> MiniPlate<K> {
        children(p, false)
    }

    fn mk_plate<K: Kind, Bd: Build<Self, K>>(build: &Bd) -> MiniPlate<K> {
        mk_mini::<Self, K, Bd>(build)
    }

    fn each_field<V: FieldVisitor<Self>>(visitor: &mut V) -> Result<(), Counterexample> {
        each_mini::<Self, V>(visitor)
    }
}

/// The nearest `Expr` descendants of an expression, looking through
/// statements but not through other expressions.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExprChildren;

impl VlBiplate for ExprChildren {
    type Whole = Expr;
    type Part = Expr;

    fn traverse<K: Applicative>(&self, f: Coalgebra<Expr, K>) -> Coalgebra<Expr, K> {
        let through_stms = fix_plate::<MiniLang, K>(Rc::new(move |me: &MiniPlate<K>| MiniPlate {
            expr: f.clone(),
            stm: MiniLang::multiplate(me).stm,
            ..MiniPlate::default()
        }));
        MiniLang::multiplate(&through_stms).expr
    }
}
