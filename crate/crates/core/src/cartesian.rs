//! The Cartesian store comonad and Biplates as its coalgebras.
//!
//! A [`CartesianStore`] is a store indexed by vectors: it holds `n`
//! positions and a peek over `B^n`. Inductively it is either
//! `Unit(a)` or `Battery(inner, b)` where `inner` stores functions `B -> A`;
//! [`CartesianStore::unit`], [`CartesianStore::battery`] and
//! [`CartesianStore::view`] expose that structure. Positions are kept
//! inner-first: `positions(Battery(v, b)) = positions(v) ++ [b]`.
//!
//! Internally the peek is uncurried (`&[B] -> A`). The curried nesting would
//! change the element type at every layer, which generic Rust functions
//! cannot recurse over.

use std::fmt;
use std::marker::PhantomData;
use std::rc::Rc;

use crate::effects::{fun, Applicative, Comonad, EqK, Fun, Functor, Kind, Value};
use crate::finite::{tuple_index, tuples, tuples_over, Finite};
use crate::laws::{verdict, Verdict};
use crate::store::{Lens, Store};

type Peek<B, A> = Rc<dyn Fn(&[B]) -> A>;

pub struct CartesianStore<B, A> {
    positions: Vec<B>,
    peek: Peek<B, A>,
}

impl<B: Clone, A> Clone for CartesianStore<B, A> {
    fn clone(&self) -> Self {
        CartesianStore {
            positions: self.positions.clone(),
            peek: self.peek.clone(),
        }
    }
}

/// One layer of the inductive structure.
pub enum CartesianView<B, A> {
    Unit(A),
    Battery(CartesianStore<B, Fun<B, A>>, B),
}

impl<B: Value, A: Value> CartesianStore<B, A> {
    /// `pure := Unit`
    pub fn unit(a: A) -> Self {
        CartesianStore {
            positions: Vec::new(),
            peek: Rc::new(move |_| a.clone()),
        }
    }

    pub fn battery(inner: CartesianStore<B, Fun<B, A>>, b: B) -> Self {
        let mut positions = inner.positions;
        positions.push(b);
        let inner_peek = inner.peek;
        CartesianStore {
            positions,
            peek: Rc::new(move |bs: &[B]| {
                let (init, last) = bs.split_at(bs.len() - 1);
                inner_peek(init)(last[0].clone())
            }),
        }
    }

    /// A store of dimension `positions.len()` with an uncurried peek.
    ///
    /// `peek` is only ever called with slices of that length.
    pub fn from_parts(positions: Vec<B>, peek: impl Fn(&[B]) -> A + 'static) -> Self {
        CartesianStore {
            positions,
            peek: Rc::new(peek),
        }
    }

    pub fn view(&self) -> CartesianView<B, A> {
        match self.positions.split_last() {
            None => CartesianView::Unit(self.extract()),
            Some((last, init)) => {
                let peek = self.peek.clone();
                let inner = CartesianStore::from_parts(init.to_vec(), move |prefix: &[B]| {
                    let peek = peek.clone();
                    let prefix = prefix.to_vec();
                    fun(move |b: B| {
                        let mut full = prefix.clone();
                        full.push(b);
                        peek(&full)
                    })
                });
                CartesianView::Battery(inner, last.clone())
            }
        }
    }

    /// Number of `Battery` layers.
    pub fn dimension(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[B] {
        &self.positions
    }

    /// Reads the value at coordinate vector `bs`.
    ///
    /// Panics if `bs.len() != self.dimension()`.
    pub fn peek(&self, bs: &[B]) -> A {
        assert_eq!(
            bs.len(),
            self.positions.len(),
            "coordinate vector has wrong dimension"
        );
        (self.peek)(bs)
    }

    /// The value at the selected coordinates.
    pub fn extract(&self) -> A {
        (self.peek)(&self.positions)
    }

    pub fn map<C: Value>(&self, f: Fun<A, C>) -> CartesianStore<B, C> {
        let peek = self.peek.clone();
        CartesianStore::from_parts(self.positions.clone(), move |bs| f(peek(bs)))
    }

    /// Every re-selection of this store, placed at its own coordinates.
    pub fn duplicate(&self) -> CartesianStore<B, CartesianStore<B, A>> {
        let peek = self.peek.clone();
        CartesianStore::from_parts(self.positions.clone(), move |bs: &[B]| CartesianStore {
            positions: bs.to_vec(),
            peek: peek.clone(),
        })
    }

    pub fn extend<C: Value>(&self, f: Fun<CartesianStore<B, A>, C>) -> CartesianStore<B, C> {
        self.duplicate().map(f)
    }

    /// `Battery (Unit v) b`
    pub fn single_store(s: &Store<B, A>) -> Self {
        let peek = s.peek_fun().clone();
        CartesianStore::from_parts(vec![s.pos().clone()], move |bs: &[B]| peek(bs[0].clone()))
    }

    /// Splits off the outermost `Battery` layer as a one-dimensional store,
    /// fixing its coordinate in the remainder.
    pub fn strip_dimension(&self) -> Option<(Store<B, A>, CartesianStore<B, A>)> {
        let (last, init) = self.positions.split_last()?;
        let prefix = init.to_vec();
        let peek = self.peek.clone();
        let along_axis = {
            let peek = peek.clone();
            let prefix = prefix.clone();
            Store::new(
                move |b: B| {
                    let mut full = prefix.clone();
                    full.push(b);
                    peek(&full)
                },
                last.clone(),
            )
        };
        let last = last.clone();
        let rest = CartesianStore::from_parts(prefix, move |bs: &[B]| {
            let mut full = bs.to_vec();
            full.push(last.clone());
            peek(&full)
        });
        Some((along_axis, rest))
    }

    /// `unfoldr stripDimension`: one store per axis, outermost first.
    pub fn stores(&self) -> Vec<Store<B, A>> {
        std::iter::successors(self.strip_dimension(), |(_, rest)| rest.strip_dimension())
            .map(|(s, _)| s)
            .collect()
    }

    /// Equality with the given universe of coordinates: same dimension,
    /// same positions, pointwise-equal peek over `universe^n`.
    pub fn eq_over(&self, other: &Self, universe: &[B], eq: &dyn Fn(&A, &A) -> bool) -> bool
    where
        B: PartialEq,
    {
        self.positions == other.positions
            && tuples_over(universe, self.dimension())
                .iter()
                .all(|bs| eq(&(self.peek)(bs), &(other.peek)(bs)))
    }
}

impl<B: Value, A: Value, C: Value> CartesianStore<B, Fun<A, C>> {
    /// Positions concatenate (functions first); the peek applies pointwise.
    pub fn ap(&self, x: &CartesianStore<B, A>) -> CartesianStore<B, C> {
        let split = self.positions.len();
        let mut positions = self.positions.clone();
        positions.extend(x.positions.iter().cloned());
        let (fpeek, xpeek) = (self.peek.clone(), x.peek.clone());
        CartesianStore::from_parts(positions, move |bs: &[B]| {
            let (fs, xs) = bs.split_at(split);
            fpeek(fs)(xpeek(xs))
        })
    }
}

impl<B: Finite, A: Value + fmt::Debug> fmt::Debug for CartesianStore<B, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table: Vec<A> = tuples::<B>(self.dimension())
            .iter()
            .map(|bs| (self.peek)(bs))
            .collect();
        f.debug_struct("CartesianStore")
            .field("positions", &self.positions)
            .field("table", &table)
            .finish()
    }
}

/// Same positions and pointwise-equal peek over `B^n`.
impl<B: Finite, A: Value + PartialEq> PartialEq for CartesianStore<B, A> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_over(other, &B::universe(), &|x, y| x == y)
    }
}

/// The Cartesian store over `B` as a context brand.
pub struct CartesianK<B>(PhantomData<B>);

impl<B: Value> Kind for CartesianK<B> {
    type Of<T: Value> = CartesianStore<B, T>;
}

impl<B: Value> Functor for CartesianK<B> {
    fn map<A: Value, C: Value>(fa: CartesianStore<B, A>, f: Fun<A, C>) -> CartesianStore<B, C> {
        fa.map(f)
    }
}

impl<B: Value> Applicative for CartesianK<B> {
    fn pure<A: Value>(a: A) -> CartesianStore<B, A> {
        CartesianStore::unit(a)
    }

    fn ap<A: Value, C: Value>(
        ff: CartesianStore<B, Fun<A, C>>,
        fa: CartesianStore<B, A>,
    ) -> CartesianStore<B, C> {
        ff.ap(&fa)
    }
}

impl<B: Value> Comonad for CartesianK<B> {
    fn extract<A: Value>(wa: CartesianStore<B, A>) -> A {
        wa.extract()
    }

    fn duplicate<A: Value>(wa: CartesianStore<B, A>) -> CartesianStore<B, CartesianStore<B, A>> {
        wa.duplicate()
    }
}

impl<B: Finite> EqK for CartesianK<B> {
    fn eq_by<T: Value>(
        x: &CartesianStore<B, T>,
        y: &CartesianStore<B, T>,
        eq: &dyn Fn(&T, &T) -> bool,
    ) -> bool {
        x.eq_over(y, &B::universe(), eq)
    }
}

// ---------------------------------------------------------------------------
// Normal form

/// `∃n. B^n × (B^n -> A)` with the peek tabulated lexicographically
/// (first coordinate most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<B, A> {
    pub arity: usize,
    pub positions: Vec<B>,
    pub table: Vec<A>,
}

pub fn to_normal_form<B: Finite, A: Value>(s: &CartesianStore<B, A>) -> NormalForm<B, A> {
    NormalForm {
        arity: s.dimension(),
        positions: s.positions.clone(),
        table: tuples::<B>(s.dimension())
            .iter()
            .map(|bs| (s.peek)(bs))
            .collect(),
    }
}

/// Panics if the table does not cover `B^arity` or the positions disagree
/// with the arity.
pub fn from_normal_form<B: Finite, A: Value>(n: &NormalForm<B, A>) -> CartesianStore<B, A> {
    assert_eq!(n.positions.len(), n.arity, "positions must match arity");
    assert_eq!(
        n.table.len(),
        B::size().pow(n.arity as u32),
        "table must be total over B^arity"
    );
    let table = n.table.clone();
    CartesianStore::from_parts(n.positions.clone(), move |bs: &[B]| {
        table[tuple_index(bs)].clone()
    })
}

// ---------------------------------------------------------------------------
// Biplates

/// A functional multireference: `A -> CartesianStore<B, A>`.
pub struct Biplate<A, B> {
    run: Rc<dyn Fn(A) -> CartesianStore<B, A>>,
}

impl<A, B> Clone for Biplate<A, B> {
    fn clone(&self) -> Self {
        Biplate {
            run: self.run.clone(),
        }
    }
}

impl<A: Value, B: Value> Biplate<A, B> {
    pub fn new(run: impl Fn(A) -> CartesianStore<B, A> + 'static) -> Self {
        Biplate { run: Rc::new(run) }
    }

    pub fn run(&self, a: A) -> CartesianStore<B, A> {
        (self.run)(a)
    }

    /// The referenced substructures, in order.
    pub fn get_all(&self, a: A) -> Vec<B> {
        self.run(a).positions
    }

    /// Replaces the referenced substructures.
    ///
    /// Panics unless `bs` has exactly as many entries as [`Biplate::get_all`].
    pub fn set_all(&self, a: A, bs: &[B]) -> A {
        self.run(a).peek(bs)
    }

    /// Lenses inject into Biplates by composing with `single_store`.
    pub fn from_lens(l: Lens<A, B>) -> Self {
        Biplate::new(move |a| CartesianStore::single_store(&l.run(a)))
    }
}

/// `idBiplate := Battery (Unit id)`
pub fn id_biplate<A: Value>() -> Biplate<A, A> {
    Biplate::new(|a: A| CartesianStore::from_parts(vec![a], |bs: &[A]| bs[0].clone()))
}

/// Runs `o2`, then replaces each of its targets by the targets `o1` finds
/// inside it, sequencing left to right.
pub fn compose_biplate<A: Value, B: Value, C: Value>(
    inner: Biplate<B, C>,
    outer: Biplate<A, B>,
) -> Biplate<A, C> {
    Biplate::new(move |a: A| {
        let s = outer.run(a);
        sequence_positions::<CartesianK<C>, B, A>(&s, &|b| inner.run(b))
    })
}

/// `pure peek <*> f b1 <*> ... <*> f bn` for any applicative `K`.
pub(crate) fn sequence_positions<K: Applicative, B: Value, A: Value>(
    s: &CartesianStore<B, A>,
    f: &dyn Fn(B) -> K::Of<B>,
) -> K::Of<A> {
    let collected = s.positions.iter().fold(K::pure(Vec::new()), |acc, b| {
        K::map2(acc, f(b.clone()), |mut bs: Vec<B>, b| {
            bs.push(b);
            bs
        })
    });
    let peek = s.peek.clone();
    K::map(collected, fun(move |bs: Vec<B>| peek(&bs)))
}

/// Checks the Cartesian-store coalgebra laws for `o`:
/// `extract . o = id` and `fmap o . o = duplicate . o`.
///
/// Stores are compared over coordinate vectors drawn from `universe_b`.
pub fn check_biplate_laws<A, B>(o: &Biplate<A, B>, universe_a: &[A], universe_b: &[B]) -> Verdict
where
    A: Value + PartialEq + fmt::Debug,
    B: Value + PartialEq + fmt::Debug,
{
    let eq_a = |x: &A, y: &A| x == y;
    verdict(|t| {
        for a in universe_a {
            let back = o.run(a.clone()).extract();
            t.law("extract . o = id", back == *a, || {
                format!("a = {a:?}, got {back:?}")
            })?;
        }
        let o2 = o.clone();
        let rerun: Fun<A, CartesianStore<B, A>> = fun(move |x| o2.run(x));
        for a in universe_a {
            let s = o.run(a.clone());
            let lhs = s.map(rerun.clone());
            let rhs = s.duplicate();
            let mut failing: Option<Vec<B>> = None;
            let ok = lhs.positions == rhs.positions
                && tuples_over(universe_b, s.dimension())
                    .into_iter()
                    .all(|bs| {
                        let same = (lhs.peek)(&bs).eq_over(&(rhs.peek)(&bs), universe_b, &eq_a);
                        if !same {
                            failing = Some(bs);
                        }
                        same
                    });
            t.law("fmap o . o = duplicate . o", ok, || match &failing {
                Some(bs) => format!("a = {a:?}, coordinates {bs:?}"),
                None => format!("a = {a:?}"),
            })?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{Table, A2, B3};

    fn one_dim(entries: [A2; 3], pos: B3) -> CartesianStore<B3, A2> {
        CartesianStore::single_store(&Store::new(move |b: B3| entries[b as usize], pos))
    }

    #[test]
    fn unit_and_battery_extract() {
        assert_eq!(CartesianStore::<B3, i64>::unit(4).extract(), 4);
        let v = fun(|b: B3| b as i64 * 10);
        let s = CartesianStore::battery(CartesianStore::unit(v), B3::B2);
        assert_eq!(s.extract(), 20);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.positions(), &[B3::B2]);
    }

    #[test]
    fn dimension_counts_batteries() {
        assert_eq!(CartesianStore::<B3, i64>::unit(0).dimension(), 0);
        let f = CartesianStore::<B3, Fun<i64, Fun<i64, i64>>>::unit(fun(|x| fun(move |y| x + y)));
        let x = one_dim([A2::A0, A2::A1, A2::A0], B3::B0).map(fun(|a: A2| a as i64));
        let y = one_dim([A2::A1, A2::A1, A2::A0], B3::B2).map(fun(|a: A2| a as i64));
        let s = f.ap(&x).ap(&y);
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.positions(), &[B3::B0, B3::B2]);
        assert_eq!(s.extract(), 0);
        assert_eq!(s.peek(&[B3::B1, B3::B0]), 2);
    }

    #[test]
    fn view_round_trips_battery() {
        let s = CartesianStore::from_parts(vec![B3::B0, B3::B1], |bs: &[B3]| {
            bs[0] as i64 * 3 + bs[1] as i64
        });
        match s.view() {
            CartesianView::Unit(_) => panic!("expected battery"),
            CartesianView::Battery(inner, b) => {
                assert_eq!(b, B3::B1);
                assert_eq!(inner.dimension(), 1);
                let rebuilt = CartesianStore::battery(inner, b);
                assert!(rebuilt.eq_over(&s, &B3::universe(), &|x, y| x == y));
            }
        }
        assert!(matches!(
            CartesianStore::<B3, i64>::unit(1).view(),
            CartesianView::Unit(1)
        ));
    }

    #[test]
    fn strip_dimension_splits_outer_layer() {
        assert!(CartesianStore::<B3, A2>::unit(A2::A0)
            .strip_dimension()
            .is_none());
        let s = one_dim([A2::A1, A2::A0, A2::A0], B3::B1);
        let (store, rest) = s.strip_dimension().unwrap();
        assert_eq!(*store.pos(), B3::B1);
        assert_eq!(store.peek(B3::B0), A2::A1);
        assert_eq!(rest.dimension(), 0);
        assert_eq!(rest.extract(), A2::A0);
    }

    #[test]
    fn stores_of_single_store_is_singleton() {
        let s = one_dim([A2::A1, A2::A0, A2::A0], B3::B2);
        let slices = s.stores();
        assert_eq!(slices.len(), 1);
        assert_eq!(*slices[0].pos(), B3::B2);
        assert!(CartesianStore::<B3, A2>::unit(A2::A1).stores().is_empty());
    }

    #[test]
    fn normal_form_of_small_stores() {
        let u = CartesianStore::<B3, A2>::unit(A2::A1);
        let n = to_normal_form(&u);
        assert_eq!(
            n,
            NormalForm {
                arity: 0,
                positions: vec![],
                table: vec![A2::A1]
            }
        );
        let t = Table::<B3, A2>::new(vec![A2::A0, A2::A1, A2::A1]);
        let s = CartesianStore::battery(CartesianStore::unit(t.to_fun()), B3::B0);
        let n = to_normal_form(&s);
        assert_eq!(n.arity, 1);
        assert_eq!(n.positions, vec![B3::B0]);
        assert_eq!(n.table, t.entries().to_vec());
        assert_eq!(to_normal_form(&from_normal_form(&n)), n);
    }

    #[test]
    fn id_biplate_is_one_dimensional() {
        let s = id_biplate::<i64>().run(5);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.positions(), &[5]);
        assert_eq!(s.peek(&[9]), 9);
    }

    #[test]
    fn biplate_get_and_set_all() {
        let both = Biplate::new(|p: (B3, B3)| {
            CartesianStore::from_parts(vec![p.0, p.1], |bs: &[B3]| (bs[0], bs[1]))
        });
        assert_eq!(both.get_all((B3::B0, B3::B2)), vec![B3::B0, B3::B2]);
        assert_eq!(
            both.set_all((B3::B0, B3::B2), &[B3::B1, B3::B1]),
            (B3::B1, B3::B1)
        );
        let u: Vec<(B3, B3)> = crate::finite::tuples::<B3>(2)
            .into_iter()
            .map(|v| (v[0], v[1]))
            .collect();
        assert!(check_biplate_laws(&both, &u, &B3::universe()).holds());
    }

    #[test]
    fn duplicating_biplate_is_caught() {
        // reports x twice; on set, the second copy wins
        let dup = Biplate::new(|p: (B3, bool)| {
            CartesianStore::from_parts(vec![p.0, p.0], move |bs: &[B3]| (bs[1], p.1))
        });
        let u: Vec<(B3, bool)> = B3::universe()
            .into_iter()
            .flat_map(|b| [(b, false), (b, true)])
            .collect();
        let v = check_biplate_laws(&dup, &u, &B3::universe());
        let cx = v.counterexample.expect("duplicating biplate must fail");
        assert_eq!(cx.law, "fmap o . o = duplicate . o");
        assert_eq!(cx.witness, "a = (B0, false), coordinates [B0, B1]");
    }

    #[test]
    fn lens_injection_stays_lawful() {
        let fst = crate::store::lens(|p: &(B3, bool)| p.0, |p: &(B3, bool), b| (b, p.1));
        let o = Biplate::from_lens(fst);
        let u: Vec<(B3, bool)> = B3::universe()
            .into_iter()
            .flat_map(|b| [(b, false), (b, true)])
            .collect();
        assert!(check_biplate_laws(&o, &u, &B3::universe()).holds());
        assert!(check_biplate_laws(&id_biplate::<B3>(), &B3::universe(), &B3::universe()).holds());
    }

    #[test]
    fn empty_universe_is_vacuous() {
        let v = check_biplate_laws(&id_biplate::<B3>(), &[], &[]);
        assert!(v.holds());
        assert_eq!(v.checked, 0);
    }
}
