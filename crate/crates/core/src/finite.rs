//! Small finite types and total lookup tables over them.
//!
//! Law checks quantify over finite universes; functions out of a finite type
//! are represented as [`Table`]s so that equality is decidable.

use std::fmt;
use std::marker::PhantomData;

use crate::effects::{fun, Fun, Value};

/// A type with a finite, ordered universe of values.
pub trait Finite: Value + PartialEq + fmt::Debug {
    /// Every value, in enumeration order.
    fn universe() -> Vec<Self>;

    /// Position of `self` in [`Finite::universe`].
    fn index(&self) -> usize;

    fn size() -> usize {
        Self::universe().len()
    }
}

/// Two-element universe `{a0, a1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum A2 {
    A0,
    A1,
}

/// Three-element universe `{b0, b1, b2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum B3 {
    B0,
    B1,
    B2,
}

impl A2 {
    pub fn flip(self) -> A2 {
        match self {
            A2::A0 => A2::A1,
            A2::A1 => A2::A0,
        }
    }
}

impl B3 {
    pub fn from_index(i: usize) -> B3 {
        match i % 3 {
            0 => B3::B0,
            1 => B3::B1,
            _ => B3::B2,
        }
    }

    /// Cyclic successor.
    pub fn rot(self) -> B3 {
        B3::from_index(self.index() + 1)
    }
}

impl Finite for A2 {
    fn universe() -> Vec<Self> {
        vec![A2::A0, A2::A1]
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl Finite for B3 {
    fn universe() -> Vec<Self> {
        vec![B3::B0, B3::B1, B3::B2]
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl Finite for bool {
    fn universe() -> Vec<Self> {
        vec![false, true]
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl Finite for () {
    fn universe() -> Vec<Self> {
        vec![()]
    }

    fn index(&self) -> usize {
        0
    }
}

/// A total function `B -> A` stored as one entry per element of `B`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table<B, A> {
    entries: Vec<A>,
    _domain: PhantomData<fn(B)>,
}

impl<B: Finite, A: Value> Table<B, A> {
    /// Panics unless `entries` has one value per element of `B`.
    pub fn new(entries: Vec<A>) -> Self {
        assert_eq!(
            entries.len(),
            B::size(),
            "table must be total over its domain"
        );
        Table {
            entries,
            _domain: PhantomData,
        }
    }

    pub fn tabulate(f: impl Fn(&B) -> A) -> Self {
        Table::new(B::universe().iter().map(f).collect())
    }

    pub fn get(&self, b: &B) -> A {
        self.entries[b.index()].clone()
    }

    pub fn entries(&self) -> &[A] {
        &self.entries
    }

    pub fn to_fun(&self) -> Fun<B, A> {
        let entries = self.entries.clone();
        fun(move |b: B| entries[b.index()].clone())
    }
}

impl<B: Finite, A: fmt::Debug> fmt::Debug for Table<B, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(B::universe().into_iter().zip(self.entries.iter()))
            .finish()
    }
}

/// All `|A|^|B|` tables `B -> A`, lexicographic with the first domain element
/// most significant.
pub fn tables<B: Finite, A: Value>(codomain: &[A]) -> Vec<Table<B, A>> {
    tuples_over(codomain, B::size())
        .into_iter()
        .map(Table::new)
        .collect()
}

/// All length-`n` vectors over `B`, lexicographic.
pub fn tuples<B: Finite>(n: usize) -> Vec<Vec<B>> {
    tuples_over(&B::universe(), n)
}

/// All length-`n` vectors over `alphabet`, lexicographic.
pub fn tuples_over<T: Clone>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Lexicographic rank of `bs` among `tuples::<B>(bs.len())`.
pub fn tuple_index<B: Finite>(bs: &[B]) -> usize {
    let n = B::size();
    bs.iter().fold(0, |acc, b| acc * n + b.index())
}

/// Lists of length at most `max_len` over `alphabet`, shortest first.
pub fn lists_up_to<T: Clone>(alphabet: &[T], max_len: usize) -> Vec<Vec<T>> {
    (0..=max_len)
        .flat_map(|n| tuples_over(alphabet, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts() {
        assert_eq!(tables::<B3, A2>(&A2::universe()).len(), 8);
        assert_eq!(tables::<A2, B3>(&B3::universe()).len(), 9);
        assert_eq!(tuples::<B3>(2).len(), 9);
        assert_eq!(tuples::<B3>(0), vec![Vec::<B3>::new()]);
    }

    #[test]
    fn tuple_index_matches_enumeration_order() {
        for (i, t) in tuples::<B3>(3).iter().enumerate() {
            assert_eq!(tuple_index(t), i);
        }
    }

    #[test]
    fn table_lookup_is_total() {
        let t = Table::<B3, A2>::tabulate(|b| if *b == B3::B1 { A2::A1 } else { A2::A0 });
        let f = t.to_fun();
        assert_eq!(f(B3::B1), A2::A1);
        assert_eq!(t.get(&B3::B2), A2::A0);
        assert_eq!(format!("{t:?}"), "{B0: A0, B1: A1, B2: A0}");
    }

    #[test]
    fn lists_up_to_three_over_two_symbols() {
        assert_eq!(lists_up_to(&A2::universe(), 3).len(), 1 + 2 + 4 + 8);
    }
}
