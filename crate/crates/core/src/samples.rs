//! Enumerated stores and sample operands over `B3 × A2`.

use crate::cartesian::CartesianStore;
use crate::contracts::NamedFn;
use crate::effects::Fun;
use crate::finite::{tables, tuple_index, tuples, Finite, A2, B3};
use crate::store::Store;

/// All 24 stores `B3 -> A2` with a position.
pub fn stores() -> Vec<Store<B3, A2>> {
    let mut out = Vec::new();
    for t in tables::<B3, A2>(&A2::universe()) {
        for p in B3::universe() {
            out.push(Store::from_fun(t.to_fun(), p));
        }
    }
    out
}

fn bit(mask: u64, i: usize) -> A2 {
    if mask >> i & 1 == 1 {
        A2::A1
    } else {
        A2::A0
    }
}

fn table_store(positions: Vec<B3>, mask: u64) -> CartesianStore<B3, A2> {
    CartesianStore::from_parts(positions, move |bs: &[B3]| bit(mask, tuple_index(bs)))
}

/// Every Cartesian store of exactly dimension `n` over `B3 × A2`:
/// `3^n` position vectors times `2^(3^n)` peek tables.
///
/// Panics for `n > 2`; dimension 3 alone would need `2^27` tables.
pub fn cartesian_stores_of_dim(n: usize) -> Vec<CartesianStore<B3, A2>> {
    assert!(n <= 2, "exhaustive enumeration is limited to dimension 2");
    let cells = 3usize.pow(n as u32);
    let mut out = Vec::new();
    for positions in tuples::<B3>(n) {
        for mask in 0..(1u64 << cells) {
            out.push(table_store(positions.clone(), mask));
        }
    }
    out
}

/// All 4634 Cartesian stores of dimension at most 2.
pub fn cartesian_stores_up_to_2() -> Vec<CartesianStore<B3, A2>> {
    (0..=2).flat_map(cartesian_stores_of_dim).collect()
}

/// Peek tables over `B3^3` used in place of the infeasible full set:
/// constants, coordinate tests, sum residues and a multiplicative hash.
pub fn dim3_masks() -> Vec<u64> {
    let by = |p: &dyn Fn(&[usize]) -> bool| -> u64 {
        tuples::<B3>(3)
            .iter()
            .enumerate()
            .filter(|(_, bs)| p(&bs.iter().map(|b| *b as usize).collect::<Vec<_>>()))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    };
    let mut masks = vec![
        0,
        (1 << 27) - 1,
        by(&|c| c[0] == 0),
        by(&|c| c[1] == 1),
        by(&|c| c[2] == 2),
        by(&|c| (c[0] + c[1] + c[2]) % 2 == 0),
        by(&|c| (c[0] + c[1] + c[2]) % 3 == 0),
        by(&|c| c[0] == c[2]),
        by(&|c| c[0] < c[1] && c[1] < c[2]),
    ];
    for k in 1..=7u64 {
        masks.push((k.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 11) & ((1 << 27) - 1));
    }
    masks
}

/// Dimension-3 stores: every position vector with every [`dim3_masks`]
/// table.
pub fn cartesian_stores_dim3_sampled() -> Vec<CartesianStore<B3, A2>> {
    let masks = dim3_masks();
    let mut out = Vec::new();
    for positions in tuples::<B3>(3) {
        for &m in &masks {
            out.push(table_store(positions.clone(), m));
        }
    }
    out
}

/// `id`, `flip`, `const A0` and `const A1`.
pub fn a2_fns() -> Vec<NamedFn<A2, A2>> {
    vec![
        NamedFn::new("id", |a| a),
        NamedFn::new("flip", A2::flip),
        NamedFn::new("const A0", |_| A2::A0),
        NamedFn::new("const A1", |_| A2::A1),
    ]
}

fn a2_fn(i: usize) -> Fun<A2, A2> {
    a2_fns()[i % 4].run.clone()
}

/// Function-valued Cartesian stores of dimension 0 and 1: the four units
/// and two one-dimensional stores.
pub fn cartesian_fn_stores_small() -> Vec<CartesianStore<B3, Fun<A2, A2>>> {
    let mut out: Vec<_> = (0..4).map(|i| CartesianStore::unit(a2_fn(i))).collect();
    out.push(CartesianStore::from_parts(vec![B3::B1], |bs: &[B3]| {
        a2_fn(bs[0] as usize)
    }));
    out.push(CartesianStore::from_parts(vec![B3::B2], |bs: &[B3]| {
        a2_fn(3 - bs[0] as usize)
    }));
    out
}

/// [`cartesian_fn_stores_small`] plus further one- and two-dimensional
/// function stores.
pub fn cartesian_fn_stores() -> Vec<CartesianStore<B3, Fun<A2, A2>>> {
    let mut out = cartesian_fn_stores_small();
    for p in B3::universe() {
        out.push(CartesianStore::from_parts(vec![p], |bs: &[B3]| {
            a2_fn(2 * bs[0] as usize + 1)
        }));
    }
    for (p, q) in [(B3::B0, B3::B2), (B3::B1, B3::B1)] {
        out.push(CartesianStore::from_parts(vec![p, q], |bs: &[B3]| {
            a2_fn(bs[0] as usize + bs[1] as usize)
        }));
        out.push(CartesianStore::from_parts(vec![q, p], |bs: &[B3]| {
            a2_fn(bs[0] as usize * bs[1] as usize)
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(stores().len(), 24);
        assert_eq!(cartesian_stores_of_dim(0).len(), 2);
        assert_eq!(cartesian_stores_of_dim(1).len(), 24);
        assert_eq!(cartesian_stores_of_dim(2).len(), 4608);
        assert_eq!(cartesian_stores_dim3_sampled().len(), 27 * 16);
    }

    #[test]
    fn dim3_masks_are_distinct() {
        let mut m = dim3_masks();
        m.sort();
        m.dedup();
        assert_eq!(m.len(), 16);
        assert!(m.iter().all(|&x| x < 1 << 27));
    }
}
