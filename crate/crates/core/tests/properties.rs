//! Randomised invariants over generated mini-language programs.

mod common;

use multiplate::minilang::codec::{encode, read_term};
use multiplate::minilang::naive::naive_rename;
use multiplate::minilang::passes::{
    collect_vars_fold, constfold_pass, count_nodes_fold, rename_pass,
};
use multiplate::minilang::sexpr;
use multiplate::minilang::{Expr, Stm, Term, Typ, Var};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = Var> {
    "[a-z_][a-z0-9_]{0,3}".prop_map(Var)
}

fn typ() -> impl Strategy<Value = Typ> {
    prop_oneof![Just(Typ::TInt), Just(Typ::TFloat)]
}

fn stm() -> impl Strategy<Value = Stm> + Clone {
    let leaf = prop_oneof![
        (typ(), var()).prop_map(|(t, v)| Stm::SDecl(t, v)),
        (var(), any::<i64>()).prop_map(|(v, i)| Stm::SAss(v, Expr::EInt(i))),
    ];
    leaf.prop_recursive(4, 32, 4, |inner| {
        let expr = expr_over(inner.clone());
        prop_oneof![
            prop::collection::vec(inner, 0..4).prop_map(Stm::SBlock),
            (var(), expr.clone()).prop_map(|(v, e)| Stm::SAss(v, e)),
            expr.prop_map(Stm::SReturn),
        ]
    })
}

fn expr_over(
    stm: impl Strategy<Value = Stm> + Clone + 'static,
) -> impl Strategy<Value = Expr> + Clone {
    let leaf = prop_oneof![
        any::<i64>().prop_map(Expr::EInt),
        var().prop_map(Expr::EVar),
        stm.prop_map(Expr::stm),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Expr::add(a, b))
    })
}

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![
        stm().prop_map(Term::Stm),
        expr_over(stm()).prop_map(Term::Expr),
        var().prop_map(Term::Var),
        typ().prop_map(Term::Typ),
    ]
}

proptest! {
    #[test]
    fn codec_round_trips(t in term()) {
        let text = encode(&t).to_string();
        prop_assert_eq!(read_term(&text, Some(t.sort())).unwrap(), t.clone());
        prop_assert_eq!(sexpr::parse(&text).unwrap().to_string(), text);
    }

    #[test]
    fn generic_rename_matches_naive(t in term()) {
        prop_assert_eq!(rename_pass(t.clone()), naive_rename(t));
    }

    #[test]
    fn folds_match_brute_force(t in term()) {
        prop_assert_eq!(count_nodes_fold(&t), common::count_nodes(&t));
        prop_assert_eq!(collect_vars_fold(&t), common::collect_vars(&t));
    }

    #[test]
    fn rename_preserves_shape(t in term()) {
        let r = rename_pass(t.clone());
        prop_assert_eq!(count_nodes_fold(&r), count_nodes_fold(&t));
        let names: Vec<String> = collect_vars_fold(&t).into_iter().map(|v| format!("_{v}")).collect();
        prop_assert_eq!(collect_vars_fold(&r), names);
    }

    #[test]
    fn constfold_is_idempotent(t in term()) {
        let once = constfold_pass(t);
        prop_assert_eq!(constfold_pass(once.clone()), once);
    }
}
