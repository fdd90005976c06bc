//! Effect contexts encoded as type-level brands.
//!
//! A context `K` is a zero-sized marker implementing [`Kind`]; `K::Of<T>` is
//! the container holding a `T`. Capabilities are layered as traits:
//! [`Functor`], [`Applicative`], [`Monad`] and [`Comonad`]. Contexts that can
//! decide equality of their containers (given equality of elements) implement
//! [`EqK`], which is what the law checkers use.

use std::marker::PhantomData;
use std::rc::Rc;

/// Anything that can live inside a context: cloneable and owned.
pub trait Value: Clone + 'static {}

impl<T: Clone + 'static> Value for T {}

/// Shared, cloneable function value.
pub type Fun<A, B> = Rc<dyn Fn(A) -> B>;

/// Wraps a closure as a [`Fun`].
pub fn fun<A, B>(f: impl Fn(A) -> B + 'static) -> Fun<A, B> {
    Rc::new(f)
}

/// A coalgebra `A -> K A` for the context `K`.
pub type Coalgebra<A, K> = Rc<dyn Fn(A) -> <K as Kind>::Of<A>>;

/// A type constructor, named by a marker type.
pub trait Kind: 'static {
    type Of<T: Value>: Value;
}

pub trait Functor: Kind {
    fn map<A: Value, B: Value>(fa: Self::Of<A>, f: Fun<A, B>) -> Self::Of<B>;
}

pub trait Applicative: Functor {
    fn pure<A: Value>(a: A) -> Self::Of<A>;

    fn ap<A: Value, B: Value>(ff: Self::Of<Fun<A, B>>, fa: Self::Of<A>) -> Self::Of<B>;

    /// `f <$> fa <*> fb`
    fn map2<A: Value, B: Value, C: Value>(
        fa: Self::Of<A>,
        fb: Self::Of<B>,
        f: impl Fn(A, B) -> C + 'static,
    ) -> Self::Of<C> {
        let f = Rc::new(f);
        let curried = Self::map(
            fa,
            fun(move |a: A| {
                let f = f.clone();
                fun(move |b: B| f(a.clone(), b))
            }),
        );
        Self::ap(curried, fb)
    }

    /// `fa <* fb`: sequence both, keep the left value.
    fn left<A: Value, B: Value>(fa: Self::Of<A>, fb: Self::Of<B>) -> Self::Of<A> {
        Self::map2(fa, fb, |a, _| a)
    }
}

pub trait Monad: Applicative {
    fn join<A: Value>(mma: Self::Of<Self::Of<A>>) -> Self::Of<A>;

    fn bind<A: Value, B: Value>(ma: Self::Of<A>, f: Fun<A, Self::Of<B>>) -> Self::Of<B> {
        Self::join(Self::map(ma, f))
    }
}

pub trait Comonad: Functor {
    fn extract<A: Value>(wa: Self::Of<A>) -> A;

    fn duplicate<A: Value>(wa: Self::Of<A>) -> Self::Of<Self::Of<A>>;

    /// `extend f := fmap f . duplicate`
    fn extend<A: Value, B: Value>(wa: Self::Of<A>, f: Fun<Self::Of<A>, B>) -> Self::Of<B> {
        Self::map(Self::duplicate(wa), f)
    }
}

/// Decidable equality of containers, parameterized by element equality.
pub trait EqK: Kind {
    fn eq_by<T: Value>(x: &Self::Of<T>, y: &Self::Of<T>, eq: &dyn Fn(&T, &T) -> bool) -> bool;
}

/// Container equality using the element type's `PartialEq`.
pub fn eq_k<K: EqK, T: Value + PartialEq>(x: &K::Of<T>, y: &K::Of<T>) -> bool {
    K::eq_by(x, y, &|a: &T, b: &T| a == b)
}

/// `liftW f := extend (f . extract)`
pub fn lift_w<W: Comonad, A: Value, B: Value>(f: Fun<A, B>, wa: W::Of<A>) -> W::Of<B> {
    W::extend(wa, fun(move |w: W::Of<A>| f(W::extract(w))))
}

/// Traverses a list left to right, sequencing the effects of `f` in order.
pub fn traverse_list<K: Applicative, A: Value, B: Value>(
    f: &dyn Fn(A) -> K::Of<B>,
    xs: Vec<A>,
) -> K::Of<Vec<B>> {
    xs.into_iter().fold(K::pure(Vec::new()), |acc, x| {
        K::map2(acc, f(x), |mut ys: Vec<B>, y| {
            ys.push(y);
            ys
        })
    })
}

// ---------------------------------------------------------------------------
// Monoids

pub trait Monoid: Value {
    fn empty() -> Self;
    fn combine(self, other: Self) -> Self;
}

impl<T: Value> Monoid for Vec<T> {
    fn empty() -> Self {
        Vec::new()
    }

    fn combine(mut self, other: Self) -> Self {
        self.extend(other);
        self
    }
}

/// Wrapping sum of `i64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sum(pub i64);

impl Monoid for Sum {
    fn empty() -> Self {
        Sum(0)
    }

    fn combine(self, other: Self) -> Self {
        Sum(self.0.wrapping_add(other.0))
    }
}

/// Maximum of `i64`, with `i64::MIN` as identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Max(pub i64);

impl Monoid for Max {
    fn empty() -> Self {
        Max(i64::MIN)
    }

    fn combine(self, other: Self) -> Self {
        Max(self.0.max(other.0))
    }
}

/// Leftmost present value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct First<T>(pub Option<T>);

impl<T: Value> Monoid for First<T> {
    fn empty() -> Self {
        First(None)
    }

    fn combine(self, other: Self) -> Self {
        First(self.0.or(other.0))
    }
}

// ---------------------------------------------------------------------------
// Identity

#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl Kind for Identity {
    type Of<T: Value> = T;
}

impl Functor for Identity {
    fn map<A: Value, B: Value>(fa: A, f: Fun<A, B>) -> B {
        f(fa)
    }
}

impl Applicative for Identity {
    fn pure<A: Value>(a: A) -> A {
        a
    }

    fn ap<A: Value, B: Value>(ff: Fun<A, B>, fa: A) -> B {
        ff(fa)
    }
}

impl Monad for Identity {
    fn join<A: Value>(mma: A) -> A {
        mma
    }
}

impl Comonad for Identity {
    fn extract<A: Value>(wa: A) -> A {
        wa
    }

    fn duplicate<A: Value>(wa: A) -> A {
        wa
    }
}

impl EqK for Identity {
    fn eq_by<T: Value>(x: &T, y: &T, eq: &dyn Fn(&T, &T) -> bool) -> bool {
        eq(x, y)
    }
}

// ---------------------------------------------------------------------------
// Const

/// The constant context: the carrier is `M` whatever the element type.
/// A functor for any `M`, applicative when `M` is a monoid.
pub struct Const<M>(PhantomData<M>);

impl<M: Value> Kind for Const<M> {
    type Of<T: Value> = M;
}

impl<M: Value> Functor for Const<M> {
    fn map<A: Value, B: Value>(fa: M, _f: Fun<A, B>) -> M {
        fa
    }
}

impl<M: Monoid> Applicative for Const<M> {
    fn pure<A: Value>(_a: A) -> M {
        M::empty()
    }

    fn ap<A: Value, B: Value>(ff: M, fa: M) -> M {
        ff.combine(fa)
    }
}

impl<M: Value + PartialEq> EqK for Const<M> {
    fn eq_by<T: Value>(x: &M, y: &M, _eq: &dyn Fn(&T, &T) -> bool) -> bool {
        x == y
    }
}

// ---------------------------------------------------------------------------
// Compose

/// `Compose<F, G>::Of<T> = F::Of<G::Of<T>>`
pub struct Compose<F, G>(PhantomData<(F, G)>);

impl<F: Kind, G: Kind> Kind for Compose<F, G> {
    type Of<T: Value> = F::Of<G::Of<T>>;
}

impl<F: Functor, G: Functor> Functor for Compose<F, G> {
    fn map<A: Value, B: Value>(fa: F::Of<G::Of<A>>, f: Fun<A, B>) -> F::Of<G::Of<B>> {
        F::map(fa, fun(move |ga: G::Of<A>| G::map(ga, f.clone())))
    }
}

impl<F: Applicative, G: Applicative> Applicative for Compose<F, G> {
    fn pure<A: Value>(a: A) -> F::Of<G::Of<A>> {
        F::pure(G::pure(a))
    }

    fn ap<A: Value, B: Value>(ff: F::Of<G::Of<Fun<A, B>>>, fa: F::Of<G::Of<A>>) -> F::Of<G::Of<B>> {
        let inner_ap = F::map(
            ff,
            fun(|gf: G::Of<Fun<A, B>>| fun(move |ga: G::Of<A>| G::ap(gf.clone(), ga))),
        );
        F::ap(inner_ap, fa)
    }
}

impl<F: EqK, G: EqK> EqK for Compose<F, G> {
    fn eq_by<T: Value>(
        x: &F::Of<G::Of<T>>,
        y: &F::Of<G::Of<T>>,
        eq: &dyn Fn(&T, &T) -> bool,
    ) -> bool {
        F::eq_by(x, y, &|gx: &G::Of<T>, gy: &G::Of<T>| G::eq_by(gx, gy, eq))
    }
}

// ---------------------------------------------------------------------------
// Option

/// The failure monad.
#[derive(Clone, Copy, Debug, Default)]
pub struct OptionK;

impl Kind for OptionK {
    type Of<T: Value> = Option<T>;
}

impl Functor for OptionK {
    fn map<A: Value, B: Value>(fa: Option<A>, f: Fun<A, B>) -> Option<B> {
        fa.map(|a| f(a))
    }
}

impl Applicative for OptionK {
    fn pure<A: Value>(a: A) -> Option<A> {
        Some(a)
    }

    fn ap<A: Value, B: Value>(ff: Option<Fun<A, B>>, fa: Option<A>) -> Option<B> {
        match (ff, fa) {
            (Some(f), Some(a)) => Some(f(a)),
            _ => None,
        }
    }
}

impl Monad for OptionK {
    fn join<A: Value>(mma: Option<Option<A>>) -> Option<A> {
        mma.flatten()
    }
}

impl EqK for OptionK {
    fn eq_by<T: Value>(x: &Option<T>, y: &Option<T>, eq: &dyn Fn(&T, &T) -> bool) -> bool {
        match (x, y) {
            (Some(a), Some(b)) => eq(a, b),
            (None, None) => true,
            _ => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Natural transformations

/// A natural transformation `F => G`, polymorphic in the element type.
pub trait NatTrans<F: Kind, G: Kind>: Clone + 'static {
    fn apply<T: Value>(&self, fa: F::Of<T>) -> G::Of<T>;
}

/// The identity transformation `K => K`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Same;

impl<K: Kind> NatTrans<K, K> for Same {
    fn apply<T: Value>(&self, fa: K::Of<T>) -> K::Of<T> {
        fa
    }
}

/// `extract : W => Identity`
#[derive(Clone, Copy, Debug, Default)]
pub struct Extract;

impl<W: Comonad> NatTrans<W, Identity> for Extract {
    fn apply<T: Value>(&self, fa: W::Of<T>) -> T {
        W::extract(fa)
    }
}

/// `duplicate : W => W . W`
#[derive(Clone, Copy, Debug, Default)]
pub struct Duplicate;

impl<W: Comonad> NatTrans<W, Compose<W, W>> for Duplicate {
    fn apply<T: Value>(&self, fa: W::Of<T>) -> W::Of<W::Of<T>> {
        W::duplicate(fa)
    }
}

/// `pure : Identity => K`
#[derive(Clone, Copy, Debug, Default)]
pub struct Pure;

impl<K: Applicative> NatTrans<Identity, K> for Pure {
    fn apply<T: Value>(&self, fa: T) -> K::Of<T> {
        K::pure(fa)
    }
}

/// `join : M . M => M`
#[derive(Clone, Copy, Debug, Default)]
pub struct Join;

impl<M: Monad> NatTrans<Compose<M, M>, M> for Join {
    fn apply<T: Value>(&self, fa: M::Of<M::Of<T>>) -> M::Of<T> {
        M::join(fa)
    }
}

/// Drops an identity layer on the left: `Identity . K => K`.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnitLeft;

impl<K: Kind> NatTrans<Compose<Identity, K>, K> for UnitLeft {
    fn apply<T: Value>(&self, fa: K::Of<T>) -> K::Of<T> {
        fa
    }
}

/// Drops an identity layer on the right: `K . Identity => K`.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnitRight;

impl<K: Kind> NatTrans<Compose<K, Identity>, K> for UnitRight {
    fn apply<T: Value>(&self, fa: K::Of<T>) -> K::Of<T> {
        fa
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traverse_at_identity_is_map() {
        let out = traverse_list::<Identity, i64, i64>(&|x| x + 1, vec![1, 2]);
        assert_eq!(out, vec![2, 3]);
    }

    #[test]
    fn traverse_at_const_sum_folds() {
        let out = traverse_list::<Const<Sum>, i64, i64>(&|x| Sum(x), vec![1, 2, 3]);
        assert_eq!(out, Sum(6));
    }

    #[test]
    fn traverse_empty_is_pure() {
        assert_eq!(
            traverse_list::<OptionK, i64, i64>(&|x| Some(x), vec![]),
            Some(vec![])
        );
        assert_eq!(
            traverse_list::<Const<Vec<u8>>, i64, i64>(&|_| vec![1], vec![]),
            Vec::<u8>::new()
        );
        assert_eq!(
            traverse_list::<Identity, i64, i64>(&|x| x, vec![]),
            Vec::<i64>::new()
        );
    }

    #[test]
    fn traverse_sequences_left_to_right() {
        let out = traverse_list::<Const<Vec<i64>>, i64, i64>(&|x| vec![x, -x], vec![1, 2, 3]);
        assert_eq!(out, vec![1, -1, 2, -2, 3, -3]);
        let failed = traverse_list::<OptionK, i64, i64>(
            &|x| if x == 2 { None } else { Some(x) },
            vec![1, 2, 3],
        );
        assert_eq!(failed, None);
    }

    #[test]
    fn const_ap_is_combine() {
        let ff: Vec<u8> = vec![1, 2];
        let fa: Vec<u8> = vec![3];
        assert_eq!(<Const<Vec<u8>>>::ap::<i64, i64>(ff, fa), vec![1, 2, 3]);
        assert_eq!(<Const<Max>>::pure(5u8), Max(i64::MIN));
        assert_eq!(<Const<Sum>>::map(Sum(4), fun(|x: i64| x * 100)), Sum(4));
    }

    #[test]
    fn compose_pure_nests() {
        let x = <Compose<OptionK, Const<Sum>>>::pure(3i64);
        assert_eq!(x, Some(Sum(0)));
        let y = <Compose<OptionK, Identity>>::pure(3i64);
        assert_eq!(y, Some(3));
    }

    #[test]
    fn first_monoid_keeps_leftmost() {
        let v = First(None).combine(First(Some(2))).combine(First(Some(3)));
        assert_eq!(v, First(Some(2)));
    }

    #[test]
    fn option_bind_and_join() {
        assert_eq!(OptionK::join(Some(Some(1))), Some(1));
        assert_eq!(OptionK::join::<i64>(Some(None)), None);
        assert_eq!(OptionK::bind(Some(2), fun(|x: i64| Some(x * 2))), Some(4));
    }
}
