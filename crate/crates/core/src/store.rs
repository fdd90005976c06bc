//! The store comonad and lenses as its coalgebras.
//!
//! A [`Store`] is an indexed collection (`peek`) together with a selected
//! index (`pos`). A [`Lens`] is a function `A -> Store<B, A>`; it is lawful
//! exactly when it is a coalgebra of the store comonad, which is also exactly
//! when its getter and setter form a very well behaved lens. Both law sets
//! have a checker here and the two are expected to agree.

use std::fmt;
use std::marker::PhantomData;
use std::rc::Rc;

use crate::effects::{fun, Comonad, EqK, Fun, Functor, Kind, Value};
use crate::finite::Finite;
use crate::laws::{verdict, Verdict};

/// `peek : B -> A` with a selected position `pos : B`.
pub struct Store<B, A> {
    peek: Fun<B, A>,
    pos: B,
}

impl<B: Clone, A> Clone for Store<B, A> {
    fn clone(&self) -> Self {
        Store {
            peek: self.peek.clone(),
            pos: self.pos.clone(),
        }
    }
}

impl<B: Value, A: Value> Store<B, A> {
    pub fn new(peek: impl Fn(B) -> A + 'static, pos: B) -> Self {
        Store {
            peek: Rc::new(peek),
            pos,
        }
    }

    pub fn from_fun(peek: Fun<B, A>, pos: B) -> Self {
        Store { peek, pos }
    }

    pub fn peek(&self, b: B) -> A {
        (self.peek)(b)
    }

    pub fn peek_fun(&self) -> &Fun<B, A> {
        &self.peek
    }

    pub fn pos(&self) -> &B {
        &self.pos
    }

    pub fn extract(&self) -> A {
        (self.peek)(self.pos.clone())
    }

    /// `duplicate (Store v b) := Store (Store v) b`
    pub fn duplicate(&self) -> Store<B, Store<B, A>> {
        let peek = self.peek.clone();
        Store::new(move |b| Store::from_fun(peek.clone(), b), self.pos.clone())
    }

    /// `fmap f (Store v b) := Store (f . v) b`
    pub fn map<C: Value>(&self, f: Fun<A, C>) -> Store<B, C> {
        let peek = self.peek.clone();
        Store::new(move |b| f(peek(b)), self.pos.clone())
    }

    pub fn extend<C: Value>(&self, f: Fun<Store<B, A>, C>) -> Store<B, C> {
        self.duplicate().map(f)
    }

    /// Moves the selected position.
    pub fn seek(&self, pos: B) -> Self {
        Store::from_fun(self.peek.clone(), pos)
    }

    /// Pointwise equality of `peek` over `universe` plus equality of `pos`.
    pub fn eq_over(&self, other: &Self, universe: &[B], eq: &dyn Fn(&A, &A) -> bool) -> bool
    where
        B: PartialEq,
    {
        self.pos == other.pos
            && universe
                .iter()
                .all(|b| eq(&self.peek(b.clone()), &other.peek(b.clone())))
    }
}

impl<B: Finite, A: Value + fmt::Debug> fmt::Debug for Store<B, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table: Vec<(B, A)> = B::universe()
            .into_iter()
            .map(|b| (b.clone(), self.peek(b)))
            .collect();
        f.debug_struct("Store")
            .field("peek", &DebugMap(&table))
            .field("pos", &self.pos)
            .finish()
    }
}

struct DebugMap<'a, K, V>(&'a [(K, V)]);

impl<K: fmt::Debug, V: fmt::Debug> fmt::Debug for DebugMap<'_, K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.0.iter().map(|(k, v)| (k, v)))
            .finish()
    }
}

/// Same position and pointwise-equal peek over the whole of `B`.
impl<B: Finite, A: Value + PartialEq> PartialEq for Store<B, A> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_over(other, &B::universe(), &|x, y| x == y)
    }
}

/// The store comonad over index type `B`, as a context brand.
pub struct StoreK<B>(PhantomData<B>);

impl<B: Value> Kind for StoreK<B> {
    type Of<T: Value> = Store<B, T>;
}

impl<B: Value> Functor for StoreK<B> {
    fn map<A: Value, C: Value>(fa: Store<B, A>, f: Fun<A, C>) -> Store<B, C> {
        fa.map(f)
    }
}

impl<B: Value> Comonad for StoreK<B> {
    fn extract<A: Value>(wa: Store<B, A>) -> A {
        wa.extract()
    }

    fn duplicate<A: Value>(wa: Store<B, A>) -> Store<B, Store<B, A>> {
        wa.duplicate()
    }
}

impl<B: Finite> EqK for StoreK<B> {
    fn eq_by<T: Value>(x: &Store<B, T>, y: &Store<B, T>, eq: &dyn Fn(&T, &T) -> bool) -> bool {
        x.eq_over(y, &B::universe(), eq)
    }
}

// ---------------------------------------------------------------------------
// Lenses

/// A functional reference from `A` to a `B` inside it: `A -> Store<B, A>`.
pub struct Lens<A, B> {
    run: Rc<dyn Fn(A) -> Store<B, A>>,
}

impl<A, B> Clone for Lens<A, B> {
    fn clone(&self) -> Self {
        Lens {
            run: self.run.clone(),
        }
    }
}

impl<A: Value, B: Value> Lens<A, B> {
    pub fn new(run: impl Fn(A) -> Store<B, A> + 'static) -> Self {
        Lens { run: Rc::new(run) }
    }

    pub fn run(&self, a: A) -> Store<B, A> {
        (self.run)(a)
    }

    /// `get l a := pos (l a)`
    pub fn get(&self, a: A) -> B {
        self.run(a).pos
    }

    /// `set l a := peek (l a)`
    pub fn set(&self, a: A, b: B) -> A {
        self.run(a).peek(b)
    }

    pub fn modify(&self, a: A, f: impl FnOnce(B) -> B) -> A {
        let s = self.run(a);
        let b = f(s.pos.clone());
        s.peek(b)
    }

    /// The coalgebra `A -> Store<B, A>` as a shared function.
    pub fn as_coalgebra(&self) -> Rc<dyn Fn(A) -> Store<B, A>> {
        self.run.clone()
    }
}

/// `lens gt st := \a -> Store (st a) (gt a)`
pub fn lens<A: Value, B: Value>(
    getter: impl Fn(&A) -> B + 'static,
    setter: impl Fn(&A, B) -> A + 'static,
) -> Lens<A, B> {
    let setter = Rc::new(setter);
    Lens::new(move |a: A| {
        let pos = getter(&a);
        let setter = setter.clone();
        Store::new(move |b| setter(&a, b), pos)
    })
}

/// `idLens := Store id`
pub fn id_lens<A: Value>() -> Lens<A, A> {
    Lens::new(|a: A| Store::new(|x| x, a))
}

/// `l1 . l2`: focus with `l2`, then with `l1` inside the result.
pub fn compose_lens<A: Value, B: Value, C: Value>(
    outer_to_inner: Lens<B, C>,
    whole_to_outer: Lens<A, B>,
) -> Lens<A, C> {
    Lens::new(move |a: A| {
        let s = whole_to_outer.run(a);
        outer_to_inner
            .run(s.pos().clone())
            .map(s.peek_fun().clone())
    })
}

/// `duplicate` read as a lens onto the selected position of a store.
pub fn duplicate_lens<B: Value, A: Value>() -> Lens<Store<B, A>, B> {
    Lens::new(|s: Store<B, A>| s.duplicate())
}

/// Checks the very-well-behaved lens laws on every `a` and `b`:
/// get-set, set-get and set-set.
pub fn check_lens_laws<A, B>(l: &Lens<A, B>, universe_a: &[A], universe_b: &[B]) -> Verdict
where
    A: Value + PartialEq + fmt::Debug,
    B: Value + PartialEq + fmt::Debug,
{
    verdict(|t| {
        for a in universe_a {
            for b in universe_b {
                let got = l.get(l.set(a.clone(), b.clone()));
                t.law("get (set a b) = b", got == *b, || {
                    format!("a = {a:?}, b = {b:?}, got {got:?}")
                })?;
            }
        }
        for a in universe_a {
            let back = l.set(a.clone(), l.get(a.clone()));
            t.law("set a (get a) = a", back == *a, || {
                format!("a = {a:?}, got {back:?}")
            })?;
        }
        for a in universe_a {
            for b1 in universe_b {
                for b2 in universe_b {
                    let twice = l.set(l.set(a.clone(), b1.clone()), b2.clone());
                    let once = l.set(a.clone(), b2.clone());
                    t.law("set (set a b1) b2 = set a b2", twice == once, || {
                        format!("a = {a:?}, b1 = {b1:?}, b2 = {b2:?}")
                    })?;
                }
            }
        }
        Ok(())
    })
}

/// Checks the store-comonad coalgebra laws:
/// `extract . l = id` and `fmap l . l = duplicate . l`.
///
/// Stores are compared pointwise over `universe_b`.
pub fn check_coalgebra_laws<A, B>(l: &Lens<A, B>, universe_a: &[A], universe_b: &[B]) -> Verdict
where
    A: Value + PartialEq + fmt::Debug,
    B: Value + PartialEq + fmt::Debug,
{
    let eq_a = |x: &A, y: &A| x == y;
    verdict(|t| {
        for a in universe_a {
            let back = l.run(a.clone()).extract();
            t.law("extract . l = id", back == *a, || {
                format!("a = {a:?}, got {back:?}")
            })?;
        }
        let l2 = l.clone();
        let relens: Fun<A, Store<B, A>> = fun(move |x| l2.run(x));
        for a in universe_a {
            let s = l.run(a.clone());
            let lhs = s.map(relens.clone());
            let rhs = s.duplicate();
            let ok = lhs.eq_over(&rhs, universe_b, &|x, y| x.eq_over(y, universe_b, &eq_a));
            t.law("fmap l . l = duplicate . l", ok, || format!("a = {a:?}"))?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Address book fixture

/// A contact record with two string fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Address {
    pub phone: String,
    pub website: String,
}

/// Lens onto [`Address::phone`].
pub fn phone() -> Lens<Address, String> {
    Lens::new(|address: Address| {
        let current = address.phone.clone();
        Store::new(
            move |new_phone| Address {
                phone: new_phone,
                ..address.clone()
            },
            current,
        )
    })
}

/// Lens onto [`Address::website`].
pub fn website() -> Lens<Address, String> {
    lens(
        |a: &Address| a.website.clone(),
        |a: &Address, website| Address {
            website,
            ..a.clone()
        },
    )
}

/// Pat's entry.
pub fn pat() -> Address {
    Address {
        phone: "333-4444".to_string(),
        website: "http://pat.com/".to_string(),
    }
}
