//! Candidate optics over small finite records, lawful and not, shared by
//! the law suites, the CLI and the tests.

use std::rc::Rc;

use crate::cartesian::{Biplate, CartesianStore};
use crate::effects::{Applicative, Coalgebra};
use crate::finite::{Finite, B3};
use crate::store::{lens, Lens};
use crate::vanlaarhoven::VlBiplate;

/// A record with a three-valued field and a flag.
pub type Rec = (B3, bool);

/// Two three-valued fields.
pub type Pair = (B3, B3);

pub fn recs() -> Vec<Rec> {
    B3::universe()
        .into_iter()
        .flat_map(|b| [(b, false), (b, true)])
        .collect()
}

pub fn pairs() -> Vec<Pair> {
    B3::universe()
        .into_iter()
        .flat_map(|x| B3::universe().into_iter().map(move |y| (x, y)))
        .collect()
}

/// `0 ↦ 0, 1 ↦ 2, 2 ↦ 1`, an involution.
pub fn mirror(b: B3) -> B3 {
    B3::from_index((3 - b as usize) % 3)
}

fn rot2(b: B3) -> B3 {
    b.rot().rot()
}

type Getter = (&'static str, fn(&Rec) -> B3);
type Setter = (&'static str, fn(&Rec, B3) -> Rec);

const GETTERS: [Getter; 8] = [
    ("b", |r| r.0),
    ("rot b", |r| r.0.rot()),
    ("rot2 b", |r| rot2(r.0)),
    ("const B0", |_| B3::B0),
    ("c ? rot b : b", |r| if r.1 { r.0.rot() } else { r.0 }),
    ("mirror b", |r| mirror(r.0)),
    ("c ? mirror b : b", |r| if r.1 { mirror(r.0) } else { r.0 }),
    ("c ? B0 : b", |r| if r.1 { B3::B0 } else { r.0 }),
];

const SETTERS: [Setter; 13] = [
    ("b := v", |r, v| (v, r.1)),
    ("b := rot2 v", |r, v| (rot2(v), r.1)),
    ("b := rot v", |r, v| (v.rot(), r.1)),
    ("ignore", |r, _| *r),
    ("b := v; flip c", |r, v| (v, !r.1)),
    ("b := v; c := false", |_, v| (v, false)),
    ("b := c ? rot2 v : v", |r, v| {
        (if r.1 { rot2(v) } else { v }, r.1)
    }),
    ("b := mirror v", |r, v| (mirror(v), r.1)),
    ("b := c ? mirror v : v", |r, v| {
        (if r.1 { mirror(v) } else { v }, r.1)
    }),
    ("b := v; flip c on change", |r, v| (v, r.1 != (v != r.0))),
    ("b := max b v", |r, v| {
        (
            if (v as usize) > (r.0 as usize) {
                v
            } else {
                r.0
            },
            r.1,
        )
    }),
    ("b := v; c := true", |_, v| (v, true)),
    ("b := v unless v = B0", |r, v| {
        (if v == B3::B0 { r.0 } else { v }, r.1)
    }),
];

/// A named lens candidate over [`Rec`].
pub struct LensCandidate {
    pub name: String,
    pub lens: Lens<Rec, B3>,
}

/// Every getter paired with every setter: 104 candidates over [`Rec`].
pub fn lens_candidates() -> Vec<LensCandidate> {
    let mut out = Vec::new();
    for (gname, g) in GETTERS {
        for (sname, s) in SETTERS {
            out.push(LensCandidate {
                name: format!("get {gname} / set {sname}"),
                lens: lens(move |r: &Rec| g(r), move |r: &Rec, v| s(r, v)),
            });
        }
    }
    out
}

/// `(getter, setter)` indices of the lawful pairs among [`lens_candidates`];
/// candidate `i` pairs getter `i / 13` with setter `i % 13`.
pub const LAWFUL_LENSES: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (4, 6), (5, 7), (6, 8)];

/// The record's `b` field.
pub fn field_b() -> Lens<Rec, B3> {
    lens(|r: &Rec| r.0, |r: &Rec, v| (v, r.1))
}

/// A lens whose setter forgets the new value.
pub fn broken_lens() -> Lens<Rec, B3> {
    lens(|r: &Rec| r.0, |r: &Rec, _v| *r)
}

pub struct BiplateCandidate {
    pub name: &'static str,
    pub biplate: Biplate<Pair, B3>,
    pub lawful: bool,
}

fn pair_biplate(
    positions: fn(&Pair) -> Vec<B3>,
    rebuild: fn(&Pair, &[B3]) -> Pair,
) -> Biplate<Pair, B3> {
    Biplate::new(move |p: Pair| {
        CartesianStore::from_parts(positions(&p), move |bs: &[B3]| rebuild(&p, bs))
    })
}

/// Multireferences into [`Pair`]: five lawful, four not.
pub fn biplate_candidates() -> Vec<BiplateCandidate> {
    vec![
        BiplateCandidate {
            name: "[x, y]",
            biplate: pair_biplate(|p| vec![p.0, p.1], |_, bs| (bs[0], bs[1])),
            lawful: true,
        },
        BiplateCandidate {
            name: "[y, x]",
            biplate: pair_biplate(|p| vec![p.1, p.0], |_, bs| (bs[1], bs[0])),
            lawful: true,
        },
        BiplateCandidate {
            name: "[x]",
            biplate: pair_biplate(|p| vec![p.0], |p, bs| (bs[0], p.1)),
            lawful: true,
        },
        BiplateCandidate {
            name: "[y]",
            biplate: pair_biplate(|p| vec![p.1], |p, bs| (p.0, bs[0])),
            lawful: true,
        },
        BiplateCandidate {
            name: "[]",
            biplate: pair_biplate(|_| vec![], |p, _| *p),
            lawful: true,
        },
        BiplateCandidate {
            name: "[x, x], last write wins",
            biplate: pair_biplate(|p| vec![p.0, p.0], |p, bs| (bs[1], p.1)),
            lawful: false,
        },
        BiplateCandidate {
            name: "[x], set rotates",
            biplate: pair_biplate(|p| vec![p.0], |p, bs| (bs[0].rot(), p.1)),
            lawful: false,
        },
        BiplateCandidate {
            name: "x = B0 ? [x] : [x, y]",
            biplate: pair_biplate(
                |p| {
                    if p.0 == B3::B0 {
                        vec![p.0]
                    } else {
                        vec![p.0, p.1]
                    }
                },
                |p, bs| {
                    if bs.len() == 1 {
                        (bs[0], p.1)
                    } else {
                        (bs[0], bs[1])
                    }
                },
            ),
            lawful: false,
        },
        BiplateCandidate {
            name: "[x, y], set swaps",
            biplate: pair_biplate(|p| vec![p.0, p.1], |_, bs| (bs[1], bs[0])),
            lawful: false,
        },
    ]
}

/// A VL traversal that visits `x` twice and keeps the second result.
#[derive(Clone, Copy, Debug, Default)]
pub struct VisitXTwice;

impl VlBiplate for VisitXTwice {
    type Whole = Pair;
    type Part = B3;

    fn traverse<K: Applicative>(&self, f: Coalgebra<B3, K>) -> Coalgebra<Pair, K> {
        Rc::new(move |p: Pair| K::map2(f(p.0), f(p.0), move |_, x| (x, p.1)))
    }
}
