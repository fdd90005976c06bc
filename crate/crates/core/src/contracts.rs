//! Generic checkers for the functor, applicative, monad and comonad
//! contracts, and for monoids, over caller-supplied samples.
//!
//! Containers are compared with [`EqK`]; counterexamples report the index
//! of the failing sample(s) in the order given.

use std::fmt;

use crate::effects::{fun, Applicative, Comonad, EqK, Fun, Functor, Monad, Monoid, Value};
use crate::laws::{verdict, Verdict};

/// A labelled function, so failures can name it.
pub struct NamedFn<A, B> {
    pub name: String,
    pub run: Fun<A, B>,
}

impl<A, B> Clone for NamedFn<A, B> {
    fn clone(&self) -> Self {
        NamedFn {
            name: self.name.clone(),
            run: self.run.clone(),
        }
    }
}

impl<A: Value, B: Value> NamedFn<A, B> {
    pub fn new(name: impl Into<String>, f: impl Fn(A) -> B + 'static) -> Self {
        NamedFn {
            name: name.into(),
            run: fun(f),
        }
    }
}

fn same<K: EqK, T: Value + PartialEq>(x: &K::Of<T>, y: &K::Of<T>) -> bool {
    K::eq_by(x, y, &|a: &T, b: &T| a == b)
}

/// `fmap id = id` and `fmap (f . g) = fmap f . fmap g`.
pub fn check_functor_laws<K, A>(values: &[K::Of<A>], fns: &[NamedFn<A, A>]) -> Verdict
where
    K: Functor + EqK,
    A: Value + PartialEq,
{
    verdict(|t| {
        for (i, v) in values.iter().enumerate() {
            let mapped = K::map(v.clone(), fun(|a: A| a));
            t.law("fmap id = id", same::<K, A>(&mapped, v), || {
                format!("value #{i}")
            })?;
        }
        for (i, v) in values.iter().enumerate() {
            for f in fns {
                for g in fns {
                    let (fr, gr) = (f.run.clone(), g.run.clone());
                    let fused = K::map(v.clone(), fun(move |a| fr(gr(a))));
                    let split = K::map(K::map(v.clone(), g.run.clone()), f.run.clone());
                    t.law(
                        "fmap (f . g) = fmap f . fmap g",
                        same::<K, A>(&fused, &split),
                        || format!("value #{i}, f = {}, g = {}", f.name, g.name),
                    )?;
                }
            }
        }
        Ok(())
    })
}

/// Samples for the applicative laws.
///
/// `containers` are the `v`/`w` operands; `fn_containers` the `u`/`v`
/// function operands; `fns` and `points` feed the homomorphism law.
pub struct ApplicativeSamples<'s, K: Functor, A: Value> {
    pub containers: &'s [K::Of<A>],
    pub fn_containers: &'s [K::Of<Fun<A, A>>],
    pub fns: &'s [NamedFn<A, A>],
    pub points: &'s [A],
}

/// Identity, composition, homomorphism and interchange.
pub fn check_applicative_laws<K, A>(s: &ApplicativeSamples<'_, K, A>) -> Verdict
where
    K: Applicative + EqK,
    A: Value + PartialEq + fmt::Debug,
{
    verdict(|t| {
        for (i, v) in s.containers.iter().enumerate() {
            let lhs = K::ap(K::pure(fun(|a: A| a)), v.clone());
            t.law("pure id <*> v = v", same::<K, A>(&lhs, v), || {
                format!("v = #{i}")
            })?;
        }
        let compose = fun(|f: Fun<A, A>| {
            fun(move |g: Fun<A, A>| {
                let f = f.clone();
                fun(move |a: A| f(g(a)))
            })
        });
        for (iu, u) in s.fn_containers.iter().enumerate() {
            for (iv, v) in s.fn_containers.iter().enumerate() {
                let uv = K::ap(K::ap(K::pure(compose.clone()), u.clone()), v.clone());
                for (iw, w) in s.containers.iter().enumerate() {
                    let lhs = K::ap(uv.clone(), w.clone());
                    let rhs = K::ap(u.clone(), K::ap(v.clone(), w.clone()));
                    t.law(
                        "pure (.) <*> u <*> v <*> w = u <*> (v <*> w)",
                        same::<K, A>(&lhs, &rhs),
                        || format!("u = #{iu}, v = #{iv}, w = #{iw}"),
                    )?;
                }
            }
        }
        for f in s.fns {
            for x in s.points {
                let lhs = K::ap(K::pure(f.run.clone()), K::pure(x.clone()));
                let rhs = K::pure((f.run)(x.clone()));
                t.law(
                    "pure f <*> pure x = pure (f x)",
                    same::<K, A>(&lhs, &rhs),
                    || format!("f = {}, x = {x:?}", f.name),
                )?;
            }
        }
        for (iu, u) in s.fn_containers.iter().enumerate() {
            for y in s.points {
                let lhs = K::ap(u.clone(), K::pure(y.clone()));
                let y2 = y.clone();
                let at_y = fun(move |f: Fun<A, A>| f(y2.clone()));
                let rhs = K::ap(K::pure(at_y), u.clone());
                t.law(
                    "u <*> pure y = pure ($ y) <*> u",
                    same::<K, A>(&lhs, &rhs),
                    || format!("u = #{iu}, y = {y:?}"),
                )?;
            }
        }
        Ok(())
    })
}

/// `extract . duplicate = id`, `fmap extract . duplicate = id` and
/// `fmap duplicate . duplicate = duplicate . duplicate`.
pub fn check_comonad_laws<W, A>(values: &[W::Of<A>]) -> Verdict
where
    W: Comonad + EqK,
    A: Value + PartialEq,
{
    verdict(|t| {
        for (i, w) in values.iter().enumerate() {
            let back = W::extract(W::duplicate(w.clone()));
            t.law("extract . duplicate = id", same::<W, A>(&back, w), || {
                format!("w = #{i}")
            })?;
        }
        for (i, w) in values.iter().enumerate() {
            let back = W::map(W::duplicate(w.clone()), fun(|x: W::Of<A>| W::extract(x)));
            t.law(
                "fmap extract . duplicate = id",
                same::<W, A>(&back, w),
                || format!("w = #{i}"),
            )?;
        }
        for (i, w) in values.iter().enumerate() {
            let d = W::duplicate(w.clone());
            let lhs = W::map(d.clone(), fun(|x: W::Of<A>| W::duplicate(x)));
            let rhs = W::duplicate(d);
            let eq3 = |x: &W::Of<W::Of<A>>, y: &W::Of<W::Of<A>>| {
                W::eq_by(x, y, &|p: &W::Of<A>, q: &W::Of<A>| same::<W, A>(p, q))
            };
            let ok = W::eq_by(&lhs, &rhs, &eq3);
            t.law(
                "fmap duplicate . duplicate = duplicate . duplicate",
                ok,
                || format!("w = #{i}"),
            )?;
        }
        Ok(())
    })
}

/// Left and right unit of `join . pure`, and associativity of `join`.
pub fn check_monad_laws<M, A>(values: &[M::Of<A>], nested: &[M::Of<M::Of<M::Of<A>>>]) -> Verdict
where
    M: Monad + EqK,
    A: Value + PartialEq,
{
    verdict(|t| {
        for (i, m) in values.iter().enumerate() {
            let left = M::join(M::pure(m.clone()));
            t.law("join . pure = id", same::<M, A>(&left, m), || {
                format!("m = #{i}")
            })?;
            let right = M::join(M::map(m.clone(), fun(|a: A| M::pure(a))));
            t.law("join . fmap pure = id", same::<M, A>(&right, m), || {
                format!("m = #{i}")
            })?;
        }
        for (i, mmm) in nested.iter().enumerate() {
            let inner_first = M::join(M::map(mmm.clone(), fun(|mm: M::Of<M::Of<A>>| M::join(mm))));
            let outer_first = M::join(M::join(mmm.clone()));
            t.law(
                "join . fmap join = join . join",
                same::<M, A>(&inner_first, &outer_first),
                || format!("mmm = #{i}"),
            )?;
        }
        Ok(())
    })
}

/// Unit on both sides and associativity.
pub fn check_monoid_laws<M: Monoid + PartialEq + fmt::Debug>(samples: &[M]) -> Verdict {
    verdict(|t| {
        for x in samples {
            let l = M::empty().combine(x.clone());
            let r = x.clone().combine(M::empty());
            t.law("empty <> x = x", l == *x, || format!("x = {x:?}"))?;
            t.law("x <> empty = x", r == *x, || format!("x = {x:?}"))?;
        }
        for x in samples {
            for y in samples {
                for z in samples {
                    let l = x.clone().combine(y.clone()).combine(z.clone());
                    let r = x.clone().combine(y.clone().combine(z.clone()));
                    t.law("(x <> y) <> z = x <> (y <> z)", l == r, || {
                        format!("x = {x:?}, y = {y:?}, z = {z:?}")
                    })?;
                }
            }
        }
        Ok(())
    })
}
