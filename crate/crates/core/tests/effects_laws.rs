//! Functor, applicative, monad and comonad contracts for every registered
//! context, and the monoid laws behind the `Const` instances.

use multiplate::cartesian::CartesianK;
use multiplate::contracts::{
    check_applicative_laws, check_comonad_laws, check_functor_laws, check_monad_laws,
    check_monoid_laws, ApplicativeSamples, NamedFn,
};
use multiplate::effects::{Compose, Const, First, Fun, Identity, Max, OptionK, Sum};
use multiplate::finite::{A2, B3};
use multiplate::samples;
use multiplate::store::StoreK;

fn int_fns() -> Vec<NamedFn<i64, i64>> {
    vec![
        NamedFn::new("inc", |x: i64| x + 1),
        NamedFn::new("double", |x: i64| x * 2),
        NamedFn::new("const 7", |_| 7),
    ]
}

fn fn_values() -> Vec<Fun<i64, i64>> {
    int_fns().into_iter().map(|f| f.run).collect()
}

macro_rules! applicative_contract {
    ($test:ident, $k:ty, values: $values:expr, fn_values: $fvalues:expr) => {
        #[test]
        fn $test() {
            let values: Vec<<$k as multiplate::effects::Kind>::Of<i64>> = $values;
            let fvalues: Vec<<$k as multiplate::effects::Kind>::Of<Fun<i64, i64>>> = $fvalues;
            let v = check_functor_laws::<$k, i64>(&values, &int_fns());
            assert!(v.holds(), "{v}");
            let v = check_applicative_laws(&ApplicativeSamples::<$k, i64> {
                containers: &values,
                fn_containers: &fvalues,
                fns: &int_fns(),
                points: &[0, 3, -2],
            });
            assert!(v.holds(), "{v}");
        }
    };
}

applicative_contract!(identity, Identity, values: vec![0, 1, -5], fn_values: fn_values());
applicative_contract!(
    option,
    OptionK,
    values: vec![None, Some(0), Some(4)],
    fn_values: std::iter::once(None).chain(fn_values().into_iter().map(Some)).collect()
);
applicative_contract!(
    const_list,
    Const<Vec<B3>>,
    values: vec![vec![], vec![B3::B0], vec![B3::B2, B3::B1]],
    fn_values: vec![vec![], vec![B3::B1, B3::B1]]
);
applicative_contract!(
    const_sum,
    Const<Sum>,
    values: vec![Sum(0), Sum(3), Sum(-9)],
    fn_values: vec![Sum(1), Sum(0)]
);
applicative_contract!(
    const_max,
    Const<Max>,
    values: vec![Max(i64::MIN), Max(0), Max(5)],
    fn_values: vec![Max(2), Max(i64::MIN)]
);
applicative_contract!(
    compose_option_list,
    Compose<OptionK, Const<Vec<B3>>>,
    values: vec![None, Some(vec![]), Some(vec![B3::B1])],
    fn_values: vec![None, Some(vec![B3::B0])]
);
applicative_contract!(
    compose_option_identity,
    Compose<OptionK, Identity>,
    values: vec![None, Some(1), Some(2)],
    fn_values: std::iter::once(None).chain(fn_values().into_iter().map(Some)).collect()
);

#[test]
fn monads() {
    let v = check_monad_laws::<OptionK, i64>(
        &[None, Some(1)],
        &[None, Some(None), Some(Some(None)), Some(Some(Some(2)))],
    );
    assert!(v.holds(), "{v}");
    let v = check_monad_laws::<Identity, i64>(&[0, 8], &[3, 4]);
    assert!(v.holds(), "{v}");
}

#[test]
fn comonads() {
    assert!(check_comonad_laws::<Identity, i64>(&[1, 2]).holds());
    let v = check_comonad_laws::<StoreK<B3>, A2>(&samples::stores());
    assert!(v.holds(), "{v}");
    let v = check_comonad_laws::<CartesianK<B3>, A2>(&samples::cartesian_stores_dim3_sampled());
    assert!(v.holds(), "{v}");
}

#[test]
fn monoids() {
    assert!(check_monoid_laws(&[Sum(0), Sum(1), Sum(i64::MAX), Sum(i64::MIN)]).holds());
    assert!(check_monoid_laws(&[Max(i64::MIN), Max(-1), Max(4)]).holds());
    assert!(check_monoid_laws(&[First(None), First(Some(1)), First(Some(2))]).holds());
    assert!(check_monoid_laws(&[vec![], vec![1], vec![2, 3]]).holds());
}
