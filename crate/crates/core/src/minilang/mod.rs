//! A four-sort toy language: statements, expressions, variables and types.

pub mod ast;
pub mod codec;
pub mod enumerate;
pub mod naive;
pub mod passes;
pub mod plate;
pub mod sexpr;

pub use ast::{p0, Expr, Sort, Stm, Term, Typ, Var};
pub use plate::{BrokenMiniLang, ExprChildren, MiniLang, MiniPlate, MiniUniverse};
