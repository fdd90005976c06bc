//! The exhaustive law suites behind `multiplate laws`.
//!
//! Each suite yields one [`LawLine`] per checked property. A line passes
//! when its verdict holds; the command succeeds when every line passes.

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::cartesian::{
    check_biplate_laws, compose_biplate, from_normal_form, id_biplate, to_normal_form, Biplate,
    CartesianK, CartesianStore,
};
use crate::contracts::{
    check_applicative_laws, check_comonad_laws, check_functor_laws, ApplicativeSamples,
};
use crate::effects::{
    lift_w, Applicative, Coalgebra, Compose, Const, EqK, Functor, Identity, Max, OptionK, Sum,
};
use crate::finite::{Finite, A2, B3};
use crate::fixtures::{
    biplate_candidates, broken_lens, field_b, lens_candidates, mirror, pairs, recs, Pair, Rec,
    VisitXTwice,
};
use crate::laws::{verdict, Verdict};
use crate::minilang::enumerate::terms_up_to;
use crate::minilang::naive::naive_rename;
use crate::minilang::passes::{
    apply, constfold_pass, constfold_step, count_nodes_fold, fold, rename_pass, rename_step,
};
use crate::minilang::{
    p0, BrokenMiniLang, Expr, ExprChildren, MiniLang, MiniPlate, MiniUniverse, Stm, Term, Var,
};
use crate::multiplate::{
    check_multiplate_laws, id_plate, map_family, postorder_fold, preorder_fold, Multiplate,
};
use crate::samples;
use crate::store::{
    check_coalgebra_laws, check_lens_laws, compose_lens, duplicate_lens, id_lens, lens, pat, phone,
    Address, Lens, Store, StoreK,
};
use crate::vanlaarhoven::{
    check_vl_biplate_laws, check_vl_lens_laws, iso_cartesian_store1, iso_cartesian_store2,
    iso_store1, iso_store2, vl_get, vl_set, vl_to_biplate, BiplateFamilies, CartesianBody,
    LensFamilies, StoreBody,
};

/// Default term-size bound for the plate suite.
pub const DEFAULT_SIZE: usize = 5;
/// Largest accepted term-size bound.
pub const MAX_SIZE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Store,
    Cartesian,
    Lens,
    Biplate,
    Vl,
    Multiplate,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Store,
        Suite::Cartesian,
        Suite::Lens,
        Suite::Biplate,
        Suite::Vl,
        Suite::Multiplate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Store => "store",
            Suite::Cartesian => "cartesian",
            Suite::Lens => "lens",
            Suite::Biplate => "biplate",
            Suite::Vl => "vl",
            Suite::Multiplate => "multiplate",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Suite, UnknownSuite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Term-size bound for the mini-language universes.
    pub size: usize,
    /// Substitute the deliberately unlawful fixtures where a suite checks a
    /// shipped instance.
    pub broken: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            size: DEFAULT_SIZE,
            broken: false,
        }
    }
}

pub struct LawLine {
    pub suite: &'static str,
    pub name: String,
    pub verdict: Verdict,
}

impl LawLine {
    pub fn passed(&self) -> bool {
        self.verdict.holds()
    }
}

impl fmt::Display for LawLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} [{} checked]",
            self.suite, self.name, self.verdict.checked
        )?;
        if let Some(cx) = &self.verdict.counterexample {
            write!(f, "\n     counterexample: {cx}")?;
        }
        Ok(())
    }
}

struct Lines {
    suite: &'static str,
    out: Vec<LawLine>,
}

impl Lines {
    fn new(suite: Suite) -> Self {
        Lines {
            suite: suite.name(),
            out: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.out.push(LawLine {
            suite: self.suite,
            name: name.into(),
            verdict,
        });
    }
}

/// Runs one suite, or all of them in order.
pub fn run(suite: Suite, opts: &SuiteOptions) -> Vec<LawLine> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run(s, opts)).collect(),
        Suite::Store => store_suite(),
        Suite::Cartesian => cartesian_suite(),
        Suite::Lens => lens_suite(opts),
        Suite::Biplate => biplate_suite(),
        Suite::Vl => vl_suite(opts),
        Suite::Multiplate => multiplate_suite(opts),
    }
}

/// Checks that two verdicts per candidate agree.
fn agreement<'c>(
    law: &str,
    candidates: impl IntoIterator<Item = (String, Verdict, Verdict)> + 'c,
) -> Verdict {
    verdict(|t| {
        for (name, left, right) in candidates {
            t.law(law, left.holds() == right.holds(), || {
                format!("{name}: {left} versus {right}")
            })?;
        }
        Ok(())
    })
}

fn lens_eq<A: PartialEq + crate::effects::Value, B: Finite>(
    l1: &Lens<A, B>,
    l2: &Lens<A, B>,
    universe: &[A],
) -> bool {
    universe
        .iter()
        .all(|a| l1.run(a.clone()) == l2.run(a.clone()))
}

fn biplate_eq<A: PartialEq + crate::effects::Value, B: Finite>(
    o1: &Biplate<A, B>,
    o2: &Biplate<A, B>,
    universe: &[A],
) -> bool {
    universe
        .iter()
        .all(|a| o1.run(a.clone()) == o2.run(a.clone()))
}

// ---------------------------------------------------------------------------

fn store_suite() -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Store);
    let stores = samples::stores();
    lines.push(
        "comonad laws on all 24 stores over B3 x A2",
        check_comonad_laws::<StoreK<B3>, A2>(&stores),
    );
    lines.push(
        "functor laws on all 24 stores",
        check_functor_laws::<StoreK<B3>, A2>(&stores, &samples::a2_fns()),
    );
    lines.push(
        "liftW f = fmap f",
        verdict(|t| {
            for (i, s) in stores.iter().enumerate() {
                for f in samples::a2_fns() {
                    let lifted = lift_w::<StoreK<B3>, A2, A2>(f.run.clone(), s.clone());
                    t.law("liftW f = fmap f", lifted == s.map(f.run.clone()), || {
                        format!("store #{i}, f = {}", f.name)
                    })?;
                }
            }
            Ok(())
        }),
    );
    let dup = duplicate_lens::<B3, A2>();
    lines.push(
        "duplicate read as a lens is lawful",
        check_lens_laws(&dup, &stores, &B3::universe()).and(check_coalgebra_laws(
            &dup,
            &stores,
            &B3::universe(),
        )),
    );
    lines.push(
        "address fixture: get and set through the phone lens",
        verdict(|t| {
            let got = phone().get(pat());
            t.law("get phone pat", got == "333-4444", || {
                format!("got {got:?}")
            })?;
            let moved = phone().set(pat(), "555-6666".into());
            let expected = Address {
                phone: "555-6666".into(),
                website: "http://pat.com/".into(),
            };
            t.law("set phone pat", moved == expected, || {
                format!("got {moved:?}")
            })
        }),
    );
    lines.out
}

fn cartesian_suite() -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Cartesian);
    let all = samples::cartesian_stores_up_to_2();
    let low: Vec<_> = all.iter().filter(|s| s.dimension() <= 1).cloned().collect();
    let fns = samples::a2_fns();
    let points = A2::universe();
    lines.push(
        format!("comonad laws on all {} stores of dimension <= 2", all.len()),
        check_comonad_laws::<CartesianK<B3>, A2>(&all),
    );
    lines.push(
        "functor laws, dimension <= 2",
        check_functor_laws::<CartesianK<B3>, A2>(&all, &fns),
    );
    let small = samples::cartesian_fn_stores_small();
    let wide = samples::cartesian_fn_stores();
    lines.push(
        "applicative laws, every dimension <= 2 store as value operand",
        check_applicative_laws(&ApplicativeSamples::<CartesianK<B3>, A2> {
            containers: &all,
            fn_containers: &small,
            fns: &fns,
            points: &points,
        }),
    );
    lines.push(
        "applicative laws, two-dimensional function operands",
        check_applicative_laws(&ApplicativeSamples::<CartesianK<B3>, A2> {
            containers: &low,
            fn_containers: &wide,
            fns: &fns,
            points: &points,
        }),
    );
    lines.push(
        "dimension (f <*> x) = dimension f + dimension x",
        verdict(|t| {
            for (i, f) in wide.iter().enumerate() {
                for (j, x) in all.iter().enumerate() {
                    let d = f.ap(x).dimension();
                    t.law(
                        "dimension is additive",
                        d == f.dimension() + x.dimension(),
                        || format!("f = #{i}, x = #{j}, got {d}"),
                    )?;
                }
            }
            Ok(())
        }),
    );
    lines.push(
        "fmap f x = pure f <*> x",
        verdict(|t| {
            for (j, x) in all.iter().enumerate() {
                for f in &fns {
                    let via_ap =
                        CartesianK::<B3>::ap(CartesianK::<B3>::pure(f.run.clone()), x.clone());
                    t.law(
                        "fmap f x = pure f <*> x",
                        x.map(f.run.clone()) == via_ap,
                        || format!("x = #{j}, f = {}", f.name),
                    )?;
                }
            }
            Ok(())
        }),
    );
    let mut round = all.clone();
    round.extend(samples::cartesian_stores_dim3_sampled());
    lines.push(
        format!(
            "normal form round trip on {} stores of dimension <= 3",
            round.len()
        ),
        verdict(|t| {
            for (i, s) in round.iter().enumerate() {
                let n = to_normal_form(s);
                let back = from_normal_form(&n);
                t.law("from (to s) = s", back == *s, || format!("store #{i}"))?;
                t.law("to (from n) = n", to_normal_form(&back) == n, || {
                    format!("store #{i}")
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "stores yields one slice per dimension, each extracting to extract s",
        verdict(|t| {
            for (i, s) in round.iter().enumerate() {
                let slices = s.stores();
                t.law(
                    "length (stores s) = dimension s",
                    slices.len() == s.dimension(),
                    || format!("store #{i}"),
                )?;
                for (k, slice) in slices.iter().enumerate() {
                    t.law(
                        "extract slice = extract s",
                        slice.extract() == s.extract(),
                        || format!("store #{i}, slice {k}"),
                    )?;
                }
                if let Some((_, rest)) = s.strip_dimension() {
                    t.law(
                        "stripDimension drops one dimension",
                        rest.dimension() + 1 == s.dimension(),
                        || format!("store #{i}"),
                    )?;
                }
            }
            Ok(())
        }),
    );
    lines.push(
        "singleStore preserves extract and stores (singleStore s) = [s]",
        verdict(|t| {
            for (i, s) in samples::stores().iter().enumerate() {
                let c = CartesianStore::single_store(s);
                t.law("extract preserved", c.extract() == s.extract(), || {
                    format!("store #{i}")
                })?;
                let back = c.stores();
                t.law(
                    "stores (singleStore s) = [s]",
                    back.len() == 1 && back[0] == *s,
                    || format!("store #{i}"),
                )?;
            }
            Ok(())
        }),
    );
    lines.out
}

fn iso_lenses() -> Vec<(&'static str, Lens<B3, B3>)> {
    vec![
        ("id", id_lens()),
        ("rot", lens(|b: &B3| b.rot(), |_, v: B3| v.rot().rot())),
        ("mirror", lens(|b: &B3| mirror(*b), |_, v: B3| mirror(v))),
    ]
}

fn lens_suite(opts: &SuiteOptions) -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Lens);
    let cands = lens_candidates();
    let (a, b) = (recs(), B3::universe());
    let lawful = cands
        .iter()
        .filter(|c| check_lens_laws(&c.lens, &a, &b).holds())
        .count();
    lines.push(
        format!(
            "get/set laws and coalgebra laws agree on {} candidates ({} lawful)",
            cands.len(),
            lawful
        ),
        agreement(
            "verdicts agree",
            cands.iter().map(|c| {
                (
                    c.name.clone(),
                    check_lens_laws(&c.lens, &a, &b),
                    check_coalgebra_laws(&c.lens, &a, &b),
                )
            }),
        ),
    );
    let (label, l) = if opts.broken {
        ("broken fixture", broken_lens())
    } else {
        ("field b", field_b())
    };
    lines.push(
        format!("get/set laws hold for the {label} lens"),
        check_lens_laws(&l, &a, &b),
    );
    lines.push(
        format!("coalgebra laws hold for the {label} lens"),
        check_coalgebra_laws(&l, &a, &b),
    );
    lines.push(
        "idLens is a unit for composeLens",
        verdict(|t| {
            for c in &cands {
                let left = compose_lens(id_lens(), c.lens.clone());
                let right = compose_lens(c.lens.clone(), id_lens());
                t.law("idLens . l = l", lens_eq(&left, &c.lens, &a), || {
                    c.name.clone()
                })?;
                t.law("l . idLens = l", lens_eq(&right, &c.lens, &a), || {
                    c.name.clone()
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "composeLens is associative",
        verdict(|t| {
            for c in &cands {
                for (n2, l2) in iso_lenses() {
                    for (n3, l3) in iso_lenses() {
                        let left =
                            compose_lens(l3.clone(), compose_lens(l2.clone(), c.lens.clone()));
                        let right = compose_lens(compose_lens(l3, l2.clone()), c.lens.clone());
                        t.law(
                            "(l3 . l2) . l1 = l3 . (l2 . l1)",
                            lens_eq(&left, &right, &a),
                            || format!("l1 = {}, l2 = {n2}, l3 = {n3}", c.name),
                        )?;
                    }
                }
            }
            Ok(())
        }),
    );
    lines.out
}

fn b3_biplates() -> Vec<(&'static str, Biplate<B3, B3>)> {
    vec![
        ("id", id_biplate()),
        ("empty", Biplate::new(|b: B3| CartesianStore::unit(b))),
        (
            "twice",
            Biplate::new(|b: B3| CartesianStore::from_parts(vec![b, b], |bs: &[B3]| bs[1])),
        ),
        ("rot", Biplate::from_lens(iso_lenses()[1].1.clone())),
    ]
}

fn biplate_suite() -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Biplate);
    let cands = biplate_candidates();
    let (a, b) = (pairs(), B3::universe());
    lines.push(
        format!(
            "coalgebra-law verdicts on {} Biplate candidates match their labels",
            cands.len()
        ),
        verdict(|t| {
            for c in &cands {
                let v = check_biplate_laws(&c.biplate, &a, &b);
                t.law("verdict matches label", v.holds() == c.lawful, || {
                    format!("{}: {v}", c.name)
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "idBiplate is lawful",
        check_biplate_laws(&id_biplate::<B3>(), &b, &b),
    );
    lines.push(
        "singleStore . lens keeps the lens verdict on 104 candidates",
        agreement(
            "verdicts agree",
            lens_candidates().into_iter().map(|c| {
                (
                    c.name.clone(),
                    check_coalgebra_laws(&c.lens, &recs(), &b),
                    check_biplate_laws(&Biplate::from_lens(c.lens), &recs(), &b),
                )
            }),
        ),
    );
    lines.push(
        "idBiplate is a unit for composeBiplate",
        verdict(|t| {
            for c in &cands {
                let left = compose_biplate(id_biplate(), c.biplate.clone());
                let right = compose_biplate(c.biplate.clone(), id_biplate());
                t.law(
                    "idBiplate . o = o",
                    biplate_eq(&left, &c.biplate, &a),
                    || c.name.into(),
                )?;
                t.law(
                    "o . idBiplate = o",
                    biplate_eq(&right, &c.biplate, &a),
                    || c.name.into(),
                )?;
            }
            Ok(())
        }),
    );
    lines.push(
        "composeBiplate is associative",
        verdict(|t| {
            for c in &cands {
                for (n2, o2) in b3_biplates() {
                    for (n3, o3) in b3_biplates() {
                        let left = compose_biplate(
                            o3.clone(),
                            compose_biplate(o2.clone(), c.biplate.clone()),
                        );
                        let right =
                            compose_biplate(compose_biplate(o3, o2.clone()), c.biplate.clone());
                        t.law(
                            "(o3 . o2) . o1 = o3 . (o2 . o1)",
                            biplate_eq(&left, &right, &a),
                            || format!("o1 = {}, o2 = {n2}, o3 = {n3}", c.name),
                        )?;
                    }
                }
            }
            Ok(())
        }),
    );
    lines.out
}

// ---------------------------------------------------------------------------
// Forward agreement of the isomorphisms

/// A store body written directly, not obtained from a store: focuses the
/// `b` field of a fixed record, optionally through `mirror`.
struct FieldBody {
    rec: Rec,
    mirrored: bool,
}

impl StoreBody<B3, Rec> for FieldBody {
    fn run<K: Functor>(&self, f: &Coalgebra<B3, K>) -> K::Of<Rec> {
        let (b, c) = self.rec;
        let m = self.mirrored;
        let focus = if m { mirror(b) } else { b };
        K::map(
            f(focus),
            crate::effects::fun(move |v: B3| (if m { mirror(v) } else { v }, c)),
        )
    }
}

/// A Cartesian body written directly: visits `y` then `x`.
struct SwapBody(Pair);

impl CartesianBody<B3, Pair> for SwapBody {
    fn run<K: Applicative>(&self, f: &Coalgebra<B3, K>) -> K::Of<Pair> {
        K::map2(f(self.0 .1), f(self.0 .0), |y, x| (x, y))
    }
}

fn probes<K: Kind2>() -> Vec<(String, Coalgebra<B3, K>)> {
    K::probes()
}

/// Contexts the isomorphisms are compared at, with probe coalgebras.
trait Kind2: EqK + Functor {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)>;
}

impl Kind2 for Identity {
    fn probes() -> Vec<(String, Coalgebra<B3, Identity>)> {
        vec![
            ("id".into(), Rc::new(|b| b)),
            ("rot".into(), Rc::new(B3::rot)),
        ]
    }
}

impl Kind2 for Const<Vec<B3>> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![
            ("singleton".into(), Rc::new(|b| vec![b])),
            ("empty".into(), Rc::new(|_| vec![])),
        ]
    }
}

impl Kind2 for Const<Sum> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![("index".into(), Rc::new(|b| Sum(b as i64 + 1)))]
    }
}

impl Kind2 for Const<Max> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![("index".into(), Rc::new(|b| Max(b as i64)))]
    }
}

impl Kind2 for OptionK {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![
            ("some".into(), Rc::new(Some)),
            ("fail on B1".into(), Rc::new(|b| (b != B3::B1).then_some(b))),
        ]
    }
}

impl Kind2 for StoreK<B3> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![
            ("idLens".into(), Rc::new(|b| Store::new(|x| x, b))),
            ("seek B2".into(), Rc::new(|_| Store::new(B3::rot, B3::B2))),
        ]
    }
}

impl Kind2 for CartesianK<B3> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![
            ("idBiplate".into(), crate::vanlaarhoven::id_biplate_coalg()),
            ("pure".into(), Rc::new(CartesianStore::unit)),
        ]
    }
}

impl Kind2 for Compose<OptionK, Const<Vec<B3>>> {
    fn probes() -> Vec<(String, Coalgebra<B3, Self>)> {
        vec![("some singleton".into(), Rc::new(|b| Some(vec![b])))]
    }
}

fn store_agreement_at<K: Kind2, A: crate::effects::Value + PartialEq, Y: StoreBody<B3, A>>(
    t: &mut crate::laws::Tally,
    label: &str,
    y: &Y,
) -> Result<(), crate::laws::Counterexample> {
    let back = iso_store1(iso_store2::<B3, A, Y>(y));
    for (name, f) in probes::<K>() {
        let ok = K::eq_by(&back.run::<K>(&f), &y.run::<K>(&f), &|p: &A, q: &A| p == q);
        t.law("isoStore1 (isoStore2 y) = y", ok, || {
            format!("{label} at {}, probe {name}", std::any::type_name::<K>())
        })?;
    }
    Ok(())
}

fn cartesian_agreement_at<K, A, Y>(
    t: &mut crate::laws::Tally,
    label: &str,
    y: &Y,
) -> Result<(), crate::laws::Counterexample>
where
    K: Kind2 + Applicative,
    A: crate::effects::Value + PartialEq,
    Y: CartesianBody<B3, A>,
{
    let back = iso_cartesian_store1(iso_cartesian_store2::<B3, A, Y>(y));
    for (name, f) in probes::<K>() {
        let ok = K::eq_by(&back.run::<K>(&f), &y.run::<K>(&f), &|p: &A, q: &A| p == q);
        t.law("isoCartesianStore1 (isoCartesianStore2 y) = y", ok, || {
            format!("{label} at {}, probe {name}", std::any::type_name::<K>())
        })?;
    }
    Ok(())
}

macro_rules! at_functors {
    ($check:ident, $t:expr, $label:expr, $y:expr; $($k:ty),*) => {
        $( $check::<$k, _, _>($t, $label, $y)?; )*
    };
}

fn vl_suite(opts: &SuiteOptions) -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Vl);
    let stores = samples::stores();
    let (a, b) = (recs(), B3::universe());
    lines.push(
        "isoStore2 (isoStore1 s) = s on all 24 stores",
        verdict(|t| {
            for (i, s) in stores.iter().enumerate() {
                t.law(
                    "isoStore2 . isoStore1 = id",
                    iso_store2(&iso_store1(s.clone())) == *s,
                    || format!("store #{i}"),
                )?;
            }
            Ok(())
        }),
    );
    lines.push(
        "isoStore1 (isoStore2 y) agrees with y at every registered functor",
        verdict(|t| {
            for (i, s) in stores.iter().enumerate() {
                let y = iso_store1(s.clone());
                let label = format!("store #{i}");
                at_functors!(store_agreement_at, t, &label, &y;
                    Identity, Const<Vec<B3>>, Const<Sum>, Const<Max>, OptionK, StoreK<B3>,
                    CartesianK<B3>, Compose<OptionK, Const<Vec<B3>>>);
            }
            for rec in recs() {
                for mirrored in [false, true] {
                    let y = FieldBody { rec, mirrored };
                    let label = format!("field body at {rec:?}, mirrored = {mirrored}");
                    at_functors!(store_agreement_at, t, &label, &y;
                        Identity, Const<Vec<B3>>, Const<Sum>, Const<Max>, OptionK, StoreK<B3>,
                        CartesianK<B3>, Compose<OptionK, Const<Vec<B3>>>);
                }
            }
            Ok(())
        }),
    );
    let all = samples::cartesian_stores_up_to_2();
    lines.push(
        format!(
            "isoCartesianStore2 (isoCartesianStore1 s) = s on all {} stores of dimension <= 2",
            all.len()
        ),
        verdict(|t| {
            for (i, s) in all.iter().enumerate() {
                let back = iso_cartesian_store2(&iso_cartesian_store1(s.clone()));
                t.law(
                    "isoCartesianStore2 . isoCartesianStore1 = id",
                    back == *s,
                    || format!("store #{i}"),
                )?;
            }
            Ok(())
        }),
    );
    lines.push(
        "isoCartesianStore1 (isoCartesianStore2 y) agrees with y at every registered applicative",
        verdict(|t| {
            for (i, s) in all.iter().enumerate() {
                let y = iso_cartesian_store1(s.clone());
                let label = format!("store #{i}");
                at_functors!(cartesian_agreement_at, t, &label, &y;
                    Identity, Const<Vec<B3>>, Const<Sum>, Const<Max>, OptionK, CartesianK<B3>,
                    Compose<OptionK, Const<Vec<B3>>>);
            }
            for p in pairs() {
                let label = format!("swap body at {p:?}");
                at_functors!(cartesian_agreement_at, t, &label, &SwapBody(p);
                    Identity, Const<Vec<B3>>, Const<Sum>, Const<Max>, OptionK, CartesianK<B3>,
                    Compose<OptionK, Const<Vec<B3>>>);
            }
            Ok(())
        }),
    );
    let lfam = LensFamilies::standard(&b);
    let bfam = BiplateFamilies::standard(&b);
    let cands = lens_candidates();
    lines.push(
        format!(
            "coalgebra laws and VL laws agree on {} lens candidates",
            cands.len()
        ),
        agreement(
            "verdicts agree",
            cands.iter().map(|c| {
                (
                    c.name.clone(),
                    check_coalgebra_laws(&c.lens, &a, &b),
                    check_vl_lens_laws(&c.lens, &a, &b, &lfam),
                )
            }),
        ),
    );
    lines.push(
        format!(
            "lens candidates used as VL Biplates keep their verdicts ({})",
            cands.len()
        ),
        agreement(
            "verdicts agree",
            cands.iter().map(|c| {
                (
                    c.name.clone(),
                    check_coalgebra_laws(&c.lens, &a, &b),
                    check_vl_biplate_laws(&c.lens, &a, &b, &bfam),
                )
            }),
        ),
    );
    let bcands = biplate_candidates();
    let twice_comonadic = vl_to_biplate(&VisitXTwice);
    lines.push(
        format!(
            "coalgebra laws and VL laws agree on {} Biplate candidates",
            bcands.len() + 1
        ),
        agreement(
            "verdicts agree",
            bcands
                .iter()
                .map(|c| {
                    (
                        c.name.to_string(),
                        check_biplate_laws(&c.biplate, &pairs(), &b),
                        check_vl_biplate_laws(&c.biplate, &pairs(), &b, &bfam),
                    )
                })
                .chain([(
                    "visit x twice".to_string(),
                    check_biplate_laws(&twice_comonadic, &pairs(), &b),
                    check_vl_biplate_laws(&VisitXTwice, &pairs(), &b, &bfam),
                )]),
        ),
    );
    lines.push(
        "the visit-twice VL traversal is rejected",
        verdict(|t| {
            let v = check_vl_biplate_laws(&VisitXTwice, &pairs(), &b, &bfam);
            t.law("VL laws fail", !v.holds(), || "visit x twice passed".into())
        }),
    );
    lines.push(
        "vl_set through Identity equals set through the store, on every candidate",
        verdict(|t| {
            for c in &cands {
                for r in &a {
                    for v in &b {
                        t.law(
                            "vl_set l a b = set l a b",
                            vl_set(&c.lens, *r, *v) == c.lens.set(*r, *v),
                            || format!("{}: a = {r:?}, b = {v:?}", c.name),
                        )?;
                    }
                }
            }
            let got = vl_get(&phone(), pat());
            t.law("vl_get phone pat = 333-4444", got == "333-4444", || {
                format!("got {got:?}")
            })
        }),
    );
    let size = opts.size.min(4);
    let exprs = terms_up_to(size).exprs;
    let probe_exprs = vec![
        Expr::EInt(1),
        Expr::var("x"),
        Expr::add(Expr::EInt(2), Expr::EInt(2)),
    ];
    lines.push(
        format!(
            "expression-children VL Biplate is lawful on {} expressions of size <= {size}",
            exprs.len()
        ),
        check_vl_biplate_laws(
            &ExprChildren,
            &exprs,
            &probe_exprs,
            &BiplateFamilies {
                stores: crate::vanlaarhoven::cartesian_family(&probe_exprs[..1]),
                lists: crate::vanlaarhoven::list_family(),
            },
        ),
    );
    lines.out
}

// ---------------------------------------------------------------------------

fn option_plates() -> Vec<MiniPlate<OptionK>> {
    vec![
        MiniPlate::default(),
        MiniPlate {
            var: Rc::new(|v: Var| (v.0 != "y").then_some(v)),
            ..MiniPlate::default()
        },
        MiniPlate {
            expr: Rc::new(|e: Expr| match e {
                Expr::EInt(i) => Some(Expr::EInt(i + 10)),
                e => Some(e),
            }),
            stm: Rc::new(|s: Stm| match s {
                Stm::SBlock(ss) if ss.len() > 1 => None,
                s => Some(s),
            }),
            ..MiniPlate::default()
        },
    ]
}

fn list_plates() -> Vec<MiniPlate<Const<Vec<String>>>> {
    vec![
        MiniPlate::default(),
        MiniPlate {
            var: Rc::new(|v: Var| vec![v.0]),
            ..MiniPlate::default()
        },
        MiniPlate {
            stm: Rc::new(|s: Stm| vec![format!("{s}")]),
            expr: Rc::new(|e: Expr| vec![format!("{e}")]),
            var: Rc::new(|v: Var| vec![v.0]),
            typ: Rc::new(|t| vec![format!("{t}")]),
        },
    ]
}

fn identity_plates() -> Vec<MiniPlate<Identity>> {
    vec![id_plate::<MiniLang>(), rename_step(), constfold_step()]
}

fn cross<X: Clone, Y: Clone>(xs: &[X], ys: &[Y]) -> Vec<(X, Y)> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

/// Both plate laws for `P` over `universe`, at effectful and pure plate pairs.
pub fn plate_laws<P>(universe: &MiniUniverse) -> Verdict
where
    P: Multiplate<Universe = MiniUniverse>,
    P: Multiplate,
    for<'k> MiniPlate<OptionK>: Into<P::Plate<OptionK>>,
    MiniPlate<Const<Vec<String>>>: Into<P::Plate<Const<Vec<String>>>>,
    MiniPlate<Identity>: Into<P::Plate<Identity>>,
{
    let effectful: Vec<(P::Plate<OptionK>, P::Plate<Const<Vec<String>>>)> =
        cross(&option_plates(), &list_plates())
            .into_iter()
            .map(|(x, y)| (x.into(), y.into()))
            .collect();
    let pure: Vec<(P::Plate<Identity>, P::Plate<Identity>)> =
        cross(&identity_plates(), &identity_plates())
            .into_iter()
            .map(|(x, y)| (x.into(), y.into()))
            .collect();
    check_multiplate_laws::<P, OptionK, Const<Vec<String>>>(universe, &effectful).and(
        check_multiplate_laws::<P, Identity, Identity>(universe, &pure),
    )
}

fn all_terms(u: &MiniUniverse) -> Vec<Term> {
    let mut out: Vec<Term> = u.stms.iter().cloned().map(Term::Stm).collect();
    out.extend(u.exprs.iter().cloned().map(Term::Expr));
    out.extend(u.vars.iter().cloned().map(Term::Var));
    out.extend(u.typs.iter().cloned().map(Term::Typ));
    out
}

fn multiplate_suite(opts: &SuiteOptions) -> Vec<LawLine> {
    let mut lines = Lines::new(Suite::Multiplate);
    let universe = terms_up_to(opts.size);
    let n = universe.len();
    let size = opts.size;
    if opts.broken {
        lines.push(
            format!("plate laws hold for the broken fixture on {n} terms of size <= {size}"),
            plate_laws::<BrokenMiniLang>(&universe),
        );
    } else {
        lines.push(
            format!("plate laws hold on {n} terms of size <= {size}"),
            plate_laws::<MiniLang>(&universe),
        );
    }
    let terms = all_terms(&universe);
    lines.push(
        format!("generic rename equals the hand-written rename on P0 and {n} terms"),
        verdict(|t| {
            for term in std::iter::once(Term::Stm(p0())).chain(terms.iter().cloned()) {
                let got = rename_pass(term.clone());
                let want = naive_rename(term.clone());
                t.law("rename = naive rename", got == want, || {
                    format!("{term}: got {got}, expected {want}")
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "mapFamily purePlate is the identity",
        verdict(|t| {
            let ident = map_family::<MiniLang>(&id_plate::<MiniLang>());
            for term in &terms {
                let got = apply(&ident, term.clone());
                t.law("mapFamily purePlate = id", got == *term, || {
                    format!("{term}")
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "preorder and postorder folds agree at a commutative monoid",
        verdict(|t| {
            let weight = MiniPlate::<Const<Sum>> {
                expr: Rc::new(|e: Expr| Sum(if let Expr::EInt(i) = e { i } else { 1 })),
                var: Rc::new(|_| Sum(100)),
                ..MiniPlate::default()
            };
            let (pre, post) = (
                preorder_fold::<MiniLang, Sum>(&weight),
                postorder_fold::<MiniLang, Sum>(&weight),
            );
            for term in &terms {
                t.law(
                    "preorder = postorder at Sum",
                    fold(&pre, term) == fold(&post, term),
                    || format!("{term}"),
                )?;
            }
            Ok(())
        }),
    );
    lines.push(
        "constant folding is idempotent",
        verdict(|t| {
            for term in &terms {
                let once = constfold_pass(term.clone());
                let twice = constfold_pass(once.clone());
                t.law("constfold . constfold = constfold", once == twice, || {
                    format!("{term}")
                })?;
            }
            Ok(())
        }),
    );
    lines.push(
        "fusing disjoint plates equals running them in sequence",
        verdict(|t| {
            let fused = map_family::<MiniLang>(&MiniPlate {
                var: rename_step().var,
                ..constfold_step()
            });
            for term in &terms {
                let got = apply(&fused, term.clone());
                let want = constfold_pass(rename_pass(term.clone()));
                t.law(
                    "mapFamily (f with g) = mapFamily g . mapFamily f",
                    got == want,
                    || format!("{term}"),
                )?;
            }
            Ok(())
        }),
    );
    lines.push(
        "node count of P0 via the fold is positive and stable",
        verdict(|t| {
            let c = count_nodes_fold(&Term::Stm(p0()));
            t.law(
                "count is stable",
                c > 0 && c == count_nodes_fold(&Term::Stm(p0())),
                || c.to_string(),
            )
        }),
    );
    lines.out
}
