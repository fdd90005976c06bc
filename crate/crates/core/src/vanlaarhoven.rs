//! Polymorphic (van Laarhoven) lenses and Biplates.
//!
//! A VL lens maps a coalgebra `B -> K B` to a coalgebra `A -> K A` for every
//! functor `K`; a VL Biplate does the same for every applicative `K`. Rank-2
//! quantification is expressed as a trait with a generic method, so each
//! instantiation is a monomorphized call.
//!
//! Every [`VlLens`] is a [`VlBiplate`] through a blanket impl; comonadic
//! [`Lens`] and [`Biplate`] values implement the traits directly.

use std::fmt;
use std::rc::Rc;

use crate::cartesian::{sequence_positions, Biplate, CartesianK, CartesianStore};
use crate::effects::{
    fun, Applicative, Coalgebra, Compose, Const, Functor, Identity, Kind, Monoid, NatTrans, Value,
};
use crate::laws::{verdict, Counterexample, Tally, Verdict};
use crate::store::{Lens, Store, StoreK};

pub trait VlLens: Clone + 'static {
    type Whole: Value;
    type Part: Value;

    fn over<K: Functor>(&self, f: Coalgebra<Self::Part, K>) -> Coalgebra<Self::Whole, K>;
}

pub trait VlBiplate: Clone + 'static {
    type Whole: Value;
    type Part: Value;

    fn traverse<K: Applicative>(&self, f: Coalgebra<Self::Part, K>) -> Coalgebra<Self::Whole, K>;
}

impl<L: VlLens> VlBiplate for L {
    type Whole = L::Whole;
    type Part = L::Part;

    fn traverse<K: Applicative>(&self, f: Coalgebra<L::Part, K>) -> Coalgebra<L::Whole, K> {
        self.over::<K>(f)
    }
}

impl<A: Value, B: Value> VlLens for Lens<A, B> {
    type Whole = A;
    type Part = B;

    fn over<K: Functor>(&self, f: Coalgebra<B, K>) -> Coalgebra<A, K> {
        let l = self.clone();
        Rc::new(move |a| iso_store1(l.run(a)).run::<K>(&f))
    }
}

impl<A: Value, B: Value> VlBiplate for Biplate<A, B> {
    type Whole = A;
    type Part = B;

    fn traverse<K: Applicative>(&self, f: Coalgebra<B, K>) -> Coalgebra<A, K> {
        let o = self.clone();
        Rc::new(move |a| iso_cartesian_store1(o.run(a)).run::<K>(&f))
    }
}

/// The identity reference: `over f = f`.
pub struct VlId<A>(std::marker::PhantomData<A>);

impl<A> Clone for VlId<A> {
    fn clone(&self) -> Self {
        VlId(std::marker::PhantomData)
    }
}

impl<A> Default for VlId<A> {
    fn default() -> Self {
        VlId(std::marker::PhantomData)
    }
}

impl<A: Value> VlLens for VlId<A> {
    type Whole = A;
    type Part = A;

    fn over<K: Functor>(&self, f: Coalgebra<A, K>) -> Coalgebra<A, K> {
        f
    }
}

// ---------------------------------------------------------------------------
// Coalgebra structure

/// `coalgMap η c := η . c`
pub fn coalg_map<K1: Kind, K2: Kind, A: Value, N: NatTrans<K1, K2>>(
    eta: N,
    c: Coalgebra<A, K1>,
) -> Coalgebra<A, K2> {
    Rc::new(move |a| eta.apply::<A>(c(a)))
}

/// `idCoalg () := id`, a coalgebra at the identity context.
pub fn id_coalg<A: Value>() -> Coalgebra<A, Identity> {
    Rc::new(|a| a)
}

/// `composeCoalg (c1, c2) := fmap c2 . c1`
pub fn compose_coalg<K1: Functor, K2: Kind, A: Value>(
    c1: Coalgebra<A, K1>,
    c2: Coalgebra<A, K2>,
) -> Coalgebra<A, Compose<K1, K2>> {
    let c2 = fun(move |a: A| c2(a));
    Rc::new(move |a| K1::map(c1(a), c2.clone()))
}

// ---------------------------------------------------------------------------
// Instantiations

/// Reads the single target by instantiating at `Const<B>`.
pub fn vl_get<L: VlLens>(l: &L, a: L::Whole) -> L::Part {
    l.over::<Const<L::Part>>(Rc::new(|b| b))(a)
}

/// Folds every target through `embed` by instantiating at `Const<M>`.
pub fn vl_fold<L: VlBiplate, M: Monoid>(
    l: &L,
    embed: impl Fn(L::Part) -> M + 'static,
    a: L::Whole,
) -> M {
    l.traverse::<Const<M>>(Rc::new(embed))(a)
}

/// All targets, in order.
pub fn vl_get_all<L: VlBiplate>(l: &L, a: L::Whole) -> Vec<L::Part> {
    vl_fold(l, |b| vec![b], a)
}

/// Updates every target by instantiating at the identity context.
pub fn vl_modify<L: VlBiplate>(
    l: &L,
    f: impl Fn(L::Part) -> L::Part + 'static,
    a: L::Whole,
) -> L::Whole {
    l.traverse::<Identity>(Rc::new(f))(a)
}

pub fn vl_set<L: VlBiplate>(l: &L, a: L::Whole, b: L::Part) -> L::Whole {
    vl_modify(l, move |_| b.clone(), a)
}

/// The comonadic lens of a VL lens: instantiate at `StoreK` with the
/// identity-lens coalgebra.
pub fn vl_to_lens<L: VlLens>(l: &L) -> Lens<L::Whole, L::Part> {
    let run = l.over::<StoreK<L::Part>>(id_lens_coalg());
    Lens::new(move |a| run(a))
}

/// The comonadic Biplate of a VL Biplate: instantiate at `CartesianK` with
/// the identity-Biplate coalgebra.
pub fn vl_to_biplate<L: VlBiplate>(l: &L) -> Biplate<L::Whole, L::Part> {
    let run = l.traverse::<CartesianK<L::Part>>(id_biplate_coalg());
    Biplate::new(move |a| run(a))
}

/// `b ↦ Store id b`
pub fn id_lens_coalg<B: Value>() -> Coalgebra<B, StoreK<B>> {
    Rc::new(|b| Store::new(|x| x, b))
}

/// `b ↦ Battery (Unit id) b`
pub fn id_biplate_coalg<B: Value>() -> Coalgebra<B, CartesianK<B>> {
    Rc::new(|b: B| CartesianStore::from_parts(vec![b], |bs: &[B]| bs[0].clone()))
}

// ---------------------------------------------------------------------------
// The two isomorphisms

/// `∀K: Functor. (B -> K B) -> K A`
pub trait StoreBody<B: Value, A: Value> {
    fn run<K: Functor>(&self, f: &Coalgebra<B, K>) -> K::Of<A>;
}

/// `∀K: Applicative. (B -> K B) -> K A`
pub trait CartesianBody<B: Value, A: Value> {
    fn run<K: Applicative>(&self, f: &Coalgebra<B, K>) -> K::Of<A>;
}

/// A store read as a polymorphic body: `fmap peek (f pos)`.
pub struct StoreVl<B, A>(pub Store<B, A>);

impl<B: Value, A: Value> StoreBody<B, A> for StoreVl<B, A> {
    fn run<K: Functor>(&self, f: &Coalgebra<B, K>) -> K::Of<A> {
        K::map(f(self.0.pos().clone()), self.0.peek_fun().clone())
    }
}

/// A Cartesian store read as a polymorphic body:
/// `pure peek <*> f b1 <*> ... <*> f bn`.
pub struct CartesianVl<B, A>(pub CartesianStore<B, A>);

impl<B: Value, A: Value> CartesianBody<B, A> for CartesianVl<B, A> {
    fn run<K: Applicative>(&self, f: &Coalgebra<B, K>) -> K::Of<A> {
        sequence_positions::<K, B, A>(&self.0, &|b| f(b))
    }
}

pub fn iso_store1<B: Value, A: Value>(s: Store<B, A>) -> StoreVl<B, A> {
    StoreVl(s)
}

pub fn iso_store2<B: Value, A: Value, Y: StoreBody<B, A>>(y: &Y) -> Store<B, A> {
    y.run::<StoreK<B>>(&id_lens_coalg())
}

pub fn iso_cartesian_store1<B: Value, A: Value>(s: CartesianStore<B, A>) -> CartesianVl<B, A> {
    CartesianVl(s)
}

pub fn iso_cartesian_store2<B: Value, A: Value, Y: CartesianBody<B, A>>(
    y: &Y,
) -> CartesianStore<B, A> {
    y.run::<CartesianK<B>>(&id_biplate_coalg())
}

// ---------------------------------------------------------------------------
// Law checking

/// A coalgebra with a label for counterexample reports.
pub struct NamedCoalgebra<B: Value, K: Kind> {
    pub name: String,
    pub run: Coalgebra<B, K>,
}

impl<B: Value, K: Kind> Clone for NamedCoalgebra<B, K> {
    fn clone(&self) -> Self {
        NamedCoalgebra {
            name: self.name.clone(),
            run: self.run.clone(),
        }
    }
}

impl<B: Value, K: Kind> NamedCoalgebra<B, K> {
    pub fn new(name: impl Into<String>, run: impl Fn(B) -> K::Of<B> + 'static) -> Self {
        NamedCoalgebra {
            name: name.into(),
            run: Rc::new(run),
        }
    }
}

/// Store-valued coalgebras over `universe`: the identity lens, every
/// constant-position store, and the store that ignores its argument.
pub fn store_family<B: Value + fmt::Debug>(universe: &[B]) -> Vec<NamedCoalgebra<B, StoreK<B>>> {
    let mut family = vec![NamedCoalgebra {
        name: "idLens".into(),
        run: id_lens_coalg(),
    }];
    for p in universe {
        let p2 = p.clone();
        family.push(NamedCoalgebra::new(format!("seek {p:?}"), move |_b: B| {
            Store::new(|x| x, p2.clone())
        }));
    }
    family.push(NamedCoalgebra::new("constant", |b: B| {
        let keep = b.clone();
        Store::new(move |_| keep.clone(), b)
    }));
    family
}

/// Cartesian-store-valued coalgebras over `universe`: the identity Biplate,
/// `pure`, a two-dimensional store reading its first coordinate, and a
/// one-dimensional store pinned at each element.
pub fn cartesian_family<B: Value + fmt::Debug>(
    universe: &[B],
) -> Vec<NamedCoalgebra<B, CartesianK<B>>> {
    let mut family = vec![
        NamedCoalgebra {
            name: "idBiplate".into(),
            run: id_biplate_coalg(),
        },
        NamedCoalgebra::new("pure", CartesianStore::unit),
        NamedCoalgebra::new("twice", |b: B| {
            CartesianStore::from_parts(vec![b.clone(), b], |bs: &[B]| bs[0].clone())
        }),
    ];
    for p in universe {
        let p2 = p.clone();
        family.push(NamedCoalgebra::new(format!("pin {p:?}"), move |_b: B| {
            CartesianStore::from_parts(vec![p2.clone()], |bs: &[B]| bs[0].clone())
        }));
    }
    family
}

/// List-accumulating coalgebras: singleton, empty and doubled.
pub fn list_family<B: Value>() -> Vec<NamedCoalgebra<B, Const<Vec<B>>>> {
    vec![
        NamedCoalgebra::new("singleton", |b: B| vec![b]),
        NamedCoalgebra::new("empty", |_b: B| Vec::new()),
        NamedCoalgebra::new("doubled", |b: B| vec![b.clone(), b]),
    ]
}

const IDENTITY_LAW: &str = "l idCoalg = idCoalg";
const COMPOSITION_LAW: &str = "l (composeCoalg c1 c2) = composeCoalg (l c1) (l c2)";

fn store_eq<'u, B: Value + PartialEq, T: Value>(
    universe: &'u [B],
    eq: &'u dyn Fn(&T, &T) -> bool,
) -> impl Fn(&Store<B, T>, &Store<B, T>) -> bool + 'u {
    move |x, y| x.eq_over(y, universe, eq)
}

fn cs_eq<'u, B: Value + PartialEq, T: Value>(
    universe: &'u [B],
    eq: &'u dyn Fn(&T, &T) -> bool,
) -> impl Fn(&CartesianStore<B, T>, &CartesianStore<B, T>) -> bool + 'u {
    move |x, y| x.eq_over(y, universe, eq)
}

fn lens_case<L, K1, K2>(
    l: &L,
    t: &mut Tally,
    a: &L::Whole,
    c1: &NamedCoalgebra<L::Part, K1>,
    c2: &NamedCoalgebra<L::Part, K2>,
    eq: &dyn Fn(&K1::Of<K2::Of<L::Whole>>, &K1::Of<K2::Of<L::Whole>>) -> bool,
) -> Result<(), Counterexample>
where
    L: VlLens,
    L::Whole: fmt::Debug,
    K1: Functor,
    K2: Functor,
{
    let both = compose_coalg::<K1, K2, L::Part>(c1.run.clone(), c2.run.clone());
    let lhs = l.over::<Compose<K1, K2>>(both)(a.clone());
    let rhs = compose_coalg::<K1, K2, L::Whole>(
        l.over::<K1>(c1.run.clone()),
        l.over::<K2>(c2.run.clone()),
    )(a.clone());
    t.law(COMPOSITION_LAW, eq(&lhs, &rhs), || {
        format!("a = {a:?}, c1 = {}, c2 = {}", c1.name, c2.name)
    })
}

fn biplate_case<L, K1, K2>(
    l: &L,
    t: &mut Tally,
    a: &L::Whole,
    c1: &NamedCoalgebra<L::Part, K1>,
    c2: &NamedCoalgebra<L::Part, K2>,
    eq: &dyn Fn(&K1::Of<K2::Of<L::Whole>>, &K1::Of<K2::Of<L::Whole>>) -> bool,
) -> Result<(), Counterexample>
where
    L: VlBiplate,
    L::Whole: fmt::Debug,
    K1: Applicative,
    K2: Applicative,
{
    let both = compose_coalg::<K1, K2, L::Part>(c1.run.clone(), c2.run.clone());
    let lhs = l.traverse::<Compose<K1, K2>>(both)(a.clone());
    let rhs = compose_coalg::<K1, K2, L::Whole>(
        l.traverse::<K1>(c1.run.clone()),
        l.traverse::<K2>(c2.run.clone()),
    )(a.clone());
    t.law(COMPOSITION_LAW, eq(&lhs, &rhs), || {
        format!("a = {a:?}, c1 = {}, c2 = {}", c1.name, c2.name)
    })
}

/// Coalgebra families a VL law check draws `c1` and `c2` from.
pub struct LensFamilies<B: Value> {
    pub stores: Vec<NamedCoalgebra<B, StoreK<B>>>,
    pub lists: Vec<NamedCoalgebra<B, Const<Vec<B>>>>,
}

impl<B: Value + fmt::Debug> LensFamilies<B> {
    pub fn standard(universe: &[B]) -> Self {
        LensFamilies {
            stores: store_family(universe),
            lists: list_family(),
        }
    }
}

pub struct BiplateFamilies<B: Value> {
    pub stores: Vec<NamedCoalgebra<B, CartesianK<B>>>,
    pub lists: Vec<NamedCoalgebra<B, Const<Vec<B>>>>,
}

impl<B: Value + fmt::Debug> BiplateFamilies<B> {
    pub fn standard(universe: &[B]) -> Self {
        BiplateFamilies {
            stores: cartesian_family(universe),
            lists: list_family(),
        }
    }
}

/// Checks the monoidal laws of a VL lens: the identity law at `Identity`
/// and the composition law for every ordered pair of coalgebras drawn from
/// `families` (stores and lists, in both nestings).
pub fn check_vl_lens_laws<L>(
    l: &L,
    universe_a: &[L::Whole],
    universe_b: &[L::Part],
    families: &LensFamilies<L::Part>,
) -> Verdict
where
    L: VlLens,
    L::Whole: PartialEq + fmt::Debug,
    L::Part: PartialEq,
{
    let eq_a = |x: &L::Whole, y: &L::Whole| x == y;
    verdict(|t: &mut Tally| {
        for a in universe_a {
            let back = l.over::<Identity>(id_coalg())(a.clone());
            t.law(IDENTITY_LAW, back == *a, || {
                format!("a = {a:?}, got {back:?}")
            })?;
        }
        let inner_store = store_eq(universe_b, &eq_a);
        let store_store = store_eq(universe_b, &inner_store);
        let store_list = store_eq(universe_b, &|x: &Vec<L::Part>, y: &Vec<L::Part>| x == y);
        let list_eq = |x: &Vec<L::Part>, y: &Vec<L::Part>| x == y;
        for a in universe_a {
            for c1 in &families.stores {
                for c2 in &families.stores {
                    lens_case(l, t, a, c1, c2, &store_store)?;
                }
                for c2 in &families.lists {
                    lens_case(l, t, a, c1, c2, &store_list)?;
                }
            }
            for c1 in &families.lists {
                for c2 in &families.stores {
                    lens_case(l, t, a, c1, c2, &list_eq)?;
                }
                for c2 in &families.lists {
                    lens_case(l, t, a, c1, c2, &list_eq)?;
                }
            }
        }
        Ok(())
    })
}

/// The Biplate analogue of [`check_vl_lens_laws`], over applicative
/// families.
pub fn check_vl_biplate_laws<L>(
    l: &L,
    universe_a: &[L::Whole],
    universe_b: &[L::Part],
    families: &BiplateFamilies<L::Part>,
) -> Verdict
where
    L: VlBiplate,
    L::Whole: PartialEq + fmt::Debug,
    L::Part: PartialEq,
{
    let eq_a = |x: &L::Whole, y: &L::Whole| x == y;
    verdict(|t: &mut Tally| {
        for a in universe_a {
            let back = l.traverse::<Identity>(id_coalg())(a.clone());
            t.law(IDENTITY_LAW, back == *a, || {
                format!("a = {a:?}, got {back:?}")
            })?;
        }
        let inner_store = cs_eq(universe_b, &eq_a);
        let store_store = cs_eq(universe_b, &inner_store);
        let store_list = cs_eq(universe_b, &|x: &Vec<L::Part>, y: &Vec<L::Part>| x == y);
        let list_eq = |x: &Vec<L::Part>, y: &Vec<L::Part>| x == y;
        for a in universe_a {
            for c1 in &families.stores {
                for c2 in &families.stores {
                    biplate_case(l, t, a, c1, c2, &store_store)?;
                }
                for c2 in &families.lists {
                    biplate_case(l, t, a, c1, c2, &store_list)?;
                }
            }
            for c1 in &families.lists {
                for c2 in &families.stores {
                    biplate_case(l, t, a, c1, c2, &list_eq)?;
                }
                for c2 in &families.lists {
                    biplate_case(l, t, a, c1, c2, &list_eq)?;
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartesian::id_biplate;
    use crate::effects::{Extract, Sum};
    use crate::finite::{tables, Finite, A2, B3};
    use crate::store::{id_lens, lens, pat, phone, Address};

    type Rec = (B3, bool);

    fn recs() -> Vec<Rec> {
        B3::universe()
            .into_iter()
            .flat_map(|b| [(b, false), (b, true)])
            .collect()
    }

    fn field_b() -> Lens<Rec, B3> {
        lens(|r: &Rec| r.0, |r: &Rec, b| (b, r.1))
    }

    #[test]
    fn vl_get_reads_phone() {
        assert_eq!(vl_get(&phone(), pat()), "333-4444");
        let moved = vl_set(&phone(), pat(), "555-6666".to_string());
        assert_eq!(
            moved,
            Address {
                phone: "555-6666".into(),
                website: "http://pat.com/".into()
            }
        );
    }

    #[test]
    fn identity_vl_modify_applies_f() {
        assert_eq!(vl_modify(&VlId::<i64>::default(), |x| x * 3, 7), 21);
    }

    #[test]
    fn iso_store_round_trip() {
        for t in tables::<B3, A2>(&A2::universe()) {
            for p in B3::universe() {
                let s = Store::from_fun(t.to_fun(), p);
                let back = iso_store2(&iso_store1(s.clone()));
                assert!(back.eq_over(&s, &B3::universe(), &|x, y| x == y));
            }
        }
    }

    #[test]
    fn iso_store1_at_const_list_reports_position() {
        let s = Store::new(|b: B3| b as i64, B3::B2);
        let out = iso_store1(s)
            .run::<Const<Vec<B3>>>(&(Rc::new(|b| vec![b]) as Coalgebra<B3, Const<Vec<B3>>>));
        assert_eq!(out, vec![B3::B2]);
    }

    #[test]
    fn cartesian_body_counts_dimension() {
        let s = CartesianStore::from_parts(vec![B3::B0, B3::B2, B3::B1], |bs: &[B3]| bs.len());
        let count: Coalgebra<B3, Const<Sum>> = Rc::new(|_| Sum(1));
        assert_eq!(iso_cartesian_store1(s).run::<Const<Sum>>(&count), Sum(3));
        let unit = CartesianStore::<B3, i64>::unit(5);
        assert_eq!(
            iso_cartesian_store1(unit.clone()).run::<Identity>(&id_coalg()),
            5
        );
        assert_eq!(
            iso_cartesian_store2(&iso_cartesian_store1(unit)).dimension(),
            0
        );
    }

    #[test]
    fn compose_coalg_nests_stores() {
        let c1: Coalgebra<B3, StoreK<B3>> = Rc::new(|b| Store::new(|x: B3| x.rot(), b));
        let c2: Coalgebra<B3, StoreK<B3>> = Rc::new(|b| Store::new(move |_| b, B3::B0));
        let both = compose_coalg::<StoreK<B3>, StoreK<B3>, B3>(c1, c2)(B3::B1);
        assert_eq!(*both.pos(), B3::B1);
        let inner = both.peek(B3::B0);
        assert_eq!(*inner.pos(), B3::B0);
        assert_eq!(inner.peek(B3::B2), B3::B1);
    }

    #[test]
    fn coalg_map_extract_of_lawful_lens_is_identity() {
        let c = field_b().as_coalgebra();
        let back = coalg_map::<StoreK<B3>, Identity, Rec, _>(Extract, c);
        for r in recs() {
            assert_eq!(back(r), r);
        }
    }

    #[test]
    fn field_b_is_lawful_both_ways() {
        let fam = LensFamilies::standard(&B3::universe());
        let v = check_vl_lens_laws(&field_b(), &recs(), &B3::universe(), &fam);
        assert!(v.holds(), "{v}");
        let bfam = BiplateFamilies::standard(&B3::universe());
        assert!(check_vl_biplate_laws(&field_b(), &recs(), &B3::universe(), &bfam).holds());
    }

    #[test]
    fn vl_round_trips_to_comonadic_forms() {
        let back = vl_to_lens(&field_b());
        for r in recs() {
            assert_eq!(back.get(r), r.0);
        }
        let o = vl_to_biplate(&id_biplate::<B3>());
        assert_eq!(o.get_all(B3::B1), vec![B3::B1]);
        assert_eq!(vl_get(&id_lens::<i64>(), 4), 4);
    }

    #[test]
    fn flag_flipping_setter_breaks_identity_law() {
        let bad = lens(|r: &Rec| r.0, |r: &Rec, b| (b, !r.1));
        let fam = LensFamilies::standard(&B3::universe());
        let v = check_vl_lens_laws(&bad, &recs(), &B3::universe(), &fam);
        let cx = v.counterexample.unwrap();
        assert_eq!(cx.law, IDENTITY_LAW);
        assert_eq!(cx.witness, "a = (B0, false), got (B0, true)");
    }
}
