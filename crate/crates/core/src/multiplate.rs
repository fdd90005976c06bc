//! Plates over mutually recursive families and the generic operations on
//! them.
//!
//! A family is described by a marker type implementing [`Multiplate`]. Its
//! `Plate<K>` holds one coalgebra `S -> K S` per sort `S`. A [`Projector`]
//! selects one field for every context; a [`Build`] produces a field for
//! every projector. Together they let generic code build and take apart
//! plates without knowing the sorts.
//!
//! Knot-tied definitions (`map_family_m`, the folds) go through
//! [`fix_plate`], which rebuilds the recursive plate each time a field is
//! applied. Recursion therefore bottoms out on finite trees.

use std::fmt;
use std::marker::PhantomData;
use std::rc::Rc;

use crate::effects::{
    Applicative, Coalgebra, Compose, Const, EqK, Identity, Join, Kind, Monad, Monoid, NatTrans,
    Value,
};
use crate::laws::{verdict, Counterexample, Tally, Verdict};
use crate::vanlaarhoven::{coalg_map, compose_coalg};

pub trait Multiplate: Sized + 'static {
    type Plate<K: Kind>: Clone + 'static;

    /// Finite per-sort term sets used by law checks.
    type Universe;

    /// Applies each field of `p` to every immediate child of the matching
    /// sort, rebuilding the node.
    fn multiplate<K: Applicative>(p: &Self::Plate<K>) -> Self::Plate<K>;

    fn mk_plate<K: Kind, Bd: Build<Self, K>>(build: &Bd) -> Self::Plate<K>;

    /// Calls `visitor` once per field, in declaration order.
    fn each_field<V: FieldVisitor<Self>>(visitor: &mut V) -> Result<(), Counterexample>;
}

/// Selects one field of a plate, uniformly in the context.
pub trait Projector<P: Multiplate>: Copy + 'static {
    type Field: Value + PartialEq + fmt::Debug;

    fn name(self) -> &'static str;

    fn project<K: Kind>(self, plate: &P::Plate<K>) -> Coalgebra<Self::Field, K>;

    fn terms(self, universe: &P::Universe) -> Vec<Self::Field>;
}

/// A field-generic constructor: one coalgebra per projector.
pub trait Build<P: Multiplate, K: Kind> {
    fn build<Pr: Projector<P>>(&self, pr: Pr) -> Coalgebra<Pr::Field, K>;
}

pub trait FieldVisitor<P: Multiplate> {
    fn visit<Pr: Projector<P>>(&mut self, pr: Pr) -> Result<(), Counterexample>;
}

// ---------------------------------------------------------------------------
// Builders

struct PureBuild;

impl<P: Multiplate, K: Applicative> Build<P, K> for PureBuild {
    fn build<Pr: Projector<P>>(&self, _pr: Pr) -> Coalgebra<Pr::Field, K> {
        Rc::new(|a| K::pure(a))
    }
}

struct MapBuild<'p, P: Multiplate, K1: Kind, N> {
    eta: N,
    plate: &'p P::Plate<K1>,
}

impl<P: Multiplate, K1: Kind, K2: Kind, N: NatTrans<K1, K2>> Build<P, K2>
    for MapBuild<'_, P, K1, N>
{
    fn build<Pr: Projector<P>>(&self, pr: Pr) -> Coalgebra<Pr::Field, K2> {
        coalg_map::<K1, K2, Pr::Field, N>(self.eta.clone(), pr.project::<K1>(self.plate))
    }
}

struct ComposeBuild<'p, P: Multiplate, K1: Kind, K2: Kind> {
    first: &'p P::Plate<K2>,
    then: &'p P::Plate<K1>,
}

impl<P: Multiplate, K1: Kind, K2: Applicative> Build<P, Compose<K2, K1>>
    for ComposeBuild<'_, P, K1, K2>
{
    fn build<Pr: Projector<P>>(&self, pr: Pr) -> Coalgebra<Pr::Field, Compose<K2, K1>> {
        compose_coalg::<K2, K1, Pr::Field>(
            pr.project::<K2>(self.first),
            pr.project::<K1>(self.then),
        )
    }
}

struct AppendBuild<'p, P: Multiplate, O: Monoid> {
    left: &'p P::Plate<Const<O>>,
    right: &'p P::Plate<Const<O>>,
}

impl<P: Multiplate, O: Monoid> Build<P, Const<O>> for AppendBuild<'_, P, O> {
    fn build<Pr: Projector<P>>(&self, pr: Pr) -> Coalgebra<Pr::Field, Const<O>> {
        let l = pr.project::<Const<O>>(self.left);
        let r = pr.project::<Const<O>>(self.right);
        Rc::new(move |a: Pr::Field| Const::<O>::left::<Pr::Field, Pr::Field>(l(a.clone()), r(a)))
    }
}

type Step<P, K> = Rc<dyn Fn(&<P as Multiplate>::Plate<K>) -> <P as Multiplate>::Plate<K>>;

struct FixBuild<P: Multiplate, K: Kind> {
    step: Step<P, K>,
}

impl<P: Multiplate, K: Kind> Build<P, K> for FixBuild<P, K> {
    fn build<Pr: Projector<P>>(&self, pr: Pr) -> Coalgebra<Pr::Field, K> {
        let step = self.step.clone();
        Rc::new(move |a| {
            let unfolded = step(&fix_plate::<P, K>(step.clone()));
            pr.project::<K>(&unfolded)(a)
        })
    }
}

// ---------------------------------------------------------------------------
// Generic operations

/// `purePlate := mkPlate (const pure)`
pub fn pure_plate<P: Multiplate, K: Applicative>() -> P::Plate<K> {
    P::mk_plate::<K, _>(&PureBuild)
}

/// The plate whose fields are all the identity.
pub fn id_plate<P: Multiplate>() -> P::Plate<Identity> {
    pure_plate::<P, Identity>()
}

/// Post-composes every field with `eta`.
pub fn map_plate<P: Multiplate, K1: Kind, K2: Kind, N: NatTrans<K1, K2>>(
    eta: N,
    p: &P::Plate<K1>,
) -> P::Plate<K2> {
    P::mk_plate::<K2, _>(&MapBuild::<P, K1, N> { eta, plate: p })
}

/// Runs each field of `p2`, then maps the matching field of `p1` inside.
pub fn compose_plate<P: Multiplate, K1: Kind, K2: Applicative>(
    p1: &P::Plate<K1>,
    p2: &P::Plate<K2>,
) -> P::Plate<Compose<K2, K1>> {
    P::mk_plate::<Compose<K2, K1>, _>(&ComposeBuild::<P, K1, K2> {
        first: p2,
        then: p1,
    })
}

/// `mapPlate join (p1 `composePlate` p2)`: `p2` first, then `p1`.
pub fn kleisli_compose_plate<P: Multiplate, M: Monad>(
    p1: &P::Plate<M>,
    p2: &P::Plate<M>,
) -> P::Plate<M> {
    map_plate::<P, Compose<M, M>, M, Join>(Join, &compose_plate::<P, M, M>(p1, p2))
}

/// The least plate `x` with `x = step(x)`, built lazily field by field.
pub fn fix_plate<P: Multiplate, K: Kind>(step: Step<P, K>) -> P::Plate<K> {
    P::mk_plate::<K, _>(&FixBuild::<P, K> { step })
}

/// Bottom-up monadic transformation: children first, then `p` at the node.
pub fn map_family_m<P: Multiplate, M: Monad>(p: &P::Plate<M>) -> P::Plate<M> {
    let p = p.clone();
    fix_plate::<P, M>(Rc::new(move |me| {
        kleisli_compose_plate::<P, M>(&p, &P::multiplate::<M>(me))
    }))
}

pub fn map_family<P: Multiplate>(p: &P::Plate<Identity>) -> P::Plate<Identity> {
    map_family_m::<P, Identity>(p)
}

/// Field-wise `p1 <* p2` in the constant applicative: the yields combine,
/// `p1` on the left.
pub fn append_plate<P: Multiplate, O: Monoid>(
    p1: &P::Plate<Const<O>>,
    p2: &P::Plate<Const<O>>,
) -> P::Plate<Const<O>> {
    P::mk_plate::<Const<O>, _>(&AppendBuild::<P, O> {
        left: p1,
        right: p2,
    })
}

/// Every node's yield, each node before its descendants.
pub fn preorder_fold<P: Multiplate, O: Monoid>(p: &P::Plate<Const<O>>) -> P::Plate<Const<O>> {
    let p = p.clone();
    fix_plate::<P, Const<O>>(Rc::new(move |me| {
        append_plate::<P, O>(&p, &P::multiplate::<Const<O>>(me))
    }))
}

/// Every node's yield, each node after its descendants.
pub fn postorder_fold<P: Multiplate, O: Monoid>(p: &P::Plate<Const<O>>) -> P::Plate<Const<O>> {
    let p = p.clone();
    fix_plate::<P, Const<O>>(Rc::new(move |me| {
        append_plate::<P, O>(&P::multiplate::<Const<O>>(me), &p)
    }))
}

// ---------------------------------------------------------------------------
// Law checking

struct IdentityLaw<'u, 't, P: Multiplate> {
    universe: &'u P::Universe,
    lifted: P::Plate<Identity>,
    tally: &'t mut Tally,
}

impl<P: Multiplate> FieldVisitor<P> for IdentityLaw<'_, '_, P> {
    fn visit<Pr: Projector<P>>(&mut self, pr: Pr) -> Result<(), Counterexample> {
        let field = pr.project::<Identity>(&self.lifted);
        for t in pr.terms(self.universe) {
            let got = field(t.clone());
            self.tally
                .law("multiplate idPlate = idPlate", got == t, || {
                    format!("field {}, term {t:?}, got {got:?}", pr.name())
                })?;
        }
        Ok(())
    }
}

struct CompositionLaw<'u, 't, P: Multiplate, K1: Kind, K2: Kind> {
    universe: &'u P::Universe,
    index: usize,
    lhs: P::Plate<Compose<K2, K1>>,
    rhs: P::Plate<Compose<K2, K1>>,
    tally: &'t mut Tally,
}

impl<P: Multiplate, K1: EqK, K2: EqK> FieldVisitor<P> for CompositionLaw<'_, '_, P, K1, K2> {
    fn visit<Pr: Projector<P>>(&mut self, pr: Pr) -> Result<(), Counterexample> {
        let lhs = pr.project::<Compose<K2, K1>>(&self.lhs);
        let rhs = pr.project::<Compose<K2, K1>>(&self.rhs);
        let eq = |x: &Pr::Field, y: &Pr::Field| x == y;
        for t in pr.terms(self.universe) {
            let ok = Compose::<K2, K1>::eq_by(&lhs(t.clone()), &rhs(t.clone()), &eq);
            let index = self.index;
            self.tally.law(
                "multiplate (composePlate p1 p2) = composePlate (multiplate p1) (multiplate p2)",
                ok,
                || format!("pair {index}, field {}, term {t:?}", pr.name()),
            )?;
        }
        Ok(())
    }
}

/// Checks both plate laws pointwise on every term of every sort in
/// `universe`. The composition law is checked for each `(p1, p2)` in
/// `pairs`, compared in the composite context `K2 . K1`.
pub fn check_multiplate_laws<P, K1, K2>(
    universe: &P::Universe,
    pairs: &[(P::Plate<K1>, P::Plate<K2>)],
) -> Verdict
where
    P: Multiplate,
    K1: Applicative + EqK,
    K2: Applicative + EqK,
{
    verdict(|tally| {
        let lifted = P::multiplate::<Identity>(&id_plate::<P>());
        P::each_field(&mut IdentityLaw::<P> {
            universe,
            lifted,
            tally: &mut *tally,
        })?;
        for (index, (p1, p2)) in pairs.iter().enumerate() {
            let lhs = P::multiplate::<Compose<K2, K1>>(&compose_plate::<P, K1, K2>(p1, p2));
            let rhs =
                compose_plate::<P, K1, K2>(&P::multiplate::<K1>(p1), &P::multiplate::<K2>(p2));
            P::each_field(&mut CompositionLaw::<P, K1, K2> {
                universe,
                index,
                lhs,
                rhs,
                tally: &mut *tally,
            })?;
        }
        Ok(())
    })
}

/// Counts terms in every sort of `universe`.
pub fn universe_size<P: Multiplate>(universe: &P::Universe) -> usize {
    struct Count<'u, P: Multiplate>(&'u P::Universe, usize);
    impl<P: Multiplate> FieldVisitor<P> for Count<'_, P> {
        fn visit<Pr: Projector<P>>(&mut self, pr: Pr) -> Result<(), Counterexample> {
            self.1 += pr.terms(self.0).len();
            Ok(())
        }
    }
    let mut c = Count::<P>(universe, 0);
    P::each_field(&mut c).expect("counting never fails");
    c.1
}

/// A family with one leaf-only sort, for exercising the generic layer.
pub struct Leaves<T>(PhantomData<T>);

pub struct LeafPlate<T: Value, K: Kind> {
    pub leaf: Coalgebra<T, K>,
}

impl<T: Value, K: Kind> Clone for LeafPlate<T, K> {
    fn clone(&self) -> Self {
        LeafPlate {
            leaf: self.leaf.clone(),
        }
    }
}

pub struct LeafField<T>(PhantomData<T>);

impl<T> Clone for LeafField<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for LeafField<T> {}

impl<T: Value + PartialEq + fmt::Debug> Projector<Leaves<T>> for LeafField<T> {
    type Field = T;

    fn name(self) -> &'static str {
        "leaf"
    }

    fn project<K: Kind>(self, plate: &LeafPlate<T, K>) -> Coalgebra<T, K> {
        plate.leaf.clone()
    }

    fn terms(self, universe: &Vec<T>) -> Vec<T> {
        universe.clone()
    }
}

impl<T: Value + PartialEq + fmt::Debug> Multiplate for Leaves<T> {
    type Plate<K: Kind> = LeafPlate<T, K>;
    type Universe = Vec<T>;

    fn multiplate<K: Applicative>(_p: &LeafPlate<T, K>) -> LeafPlate<T, K> {
        pure_plate::<Self, K>()
    }

    fn mk_plate<K: Kind, Bd: Build<Self, K>>(build: &Bd) -> LeafPlate<T, K> {
        LeafPlate {
            leaf: build.build(LeafField(PhantomData)),
        }
    }

    fn each_field<V: FieldVisitor<Self>>(visitor: &mut V) -> Result<(), Counterexample> {
        visitor.visit(LeafField::<T>(PhantomData))
    }
}
