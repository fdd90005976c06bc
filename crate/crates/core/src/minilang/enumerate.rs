//! Exhaustive term enumeration by node count.
//!
//! Every constructor counts as one node, leaves of all four sorts included.
//! Variables range over `x` and `y`, literals over `1` and `2`.

use super::ast::{Expr, Stm, Typ, Var};
use super::plate::MiniUniverse;

pub const VAR_NAMES: [&str; 2] = ["x", "y"];
pub const LITERALS: [i64; 2] = [1, 2];

/// Terms of exactly each size `0..=max`, per sort.
struct BySize {
    stms: Vec<Vec<Stm>>,
    exprs: Vec<Vec<Expr>>,
}

/// All ordered sequences of statements whose sizes sum to `total`.
fn blocks(stms: &[Vec<Stm>], total: usize) -> Vec<Vec<Stm>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for s in &stms[first] {
            for mut rest in blocks(stms, total - first) {
                rest.insert(0, s.clone());
                out.push(rest);
            }
        }
    }
    out
}

fn by_size(max: usize) -> BySize {
    let vars: Vec<Var> = VAR_NAMES.iter().map(|n| Var::new(n)).collect();
    let typs = [Typ::TInt, Typ::TFloat];
    let mut t = BySize {
        stms: vec![Vec::new()],
        exprs: vec![Vec::new()],
    };
    for n in 1..=max {
        let mut stms = Vec::new();
        if n == 3 {
            for ty in typs {
                for v in &vars {
                    stms.push(Stm::SDecl(ty, v.clone()));
                }
            }
        }
        if n >= 3 {
            for v in &vars {
                for e in &t.exprs[n - 2] {
                    stms.push(Stm::SAss(v.clone(), e.clone()));
                }
            }
        }
        stms.extend(blocks(&t.stms, n - 1).into_iter().map(Stm::SBlock));
        if n >= 2 {
            stms.extend(t.exprs[n - 1].iter().cloned().map(Stm::SReturn));
        }

        let mut exprs = Vec::new();
        if n >= 2 {
            exprs.extend(t.stms[n - 1].iter().cloned().map(Expr::stm));
        }
        for left in 1..n.saturating_sub(1) {
            for a in &t.exprs[left] {
                for b in &t.exprs[n - 1 - left] {
                    exprs.push(Expr::add(a.clone(), b.clone()));
                }
            }
        }
        if n == 2 {
            exprs.extend(vars.iter().cloned().map(Expr::EVar));
        }
        if n == 1 {
            exprs.extend(LITERALS.iter().map(|&i| Expr::EInt(i)));
        }
        t.stms.push(stms);
        t.exprs.push(exprs);
    }
    t
}

/// Every term of at most `max` nodes in each sort, smallest first.
pub fn terms_up_to(max: usize) -> MiniUniverse {
    let t = by_size(max);
    let leaves = max >= 1;
    MiniUniverse {
        stms: t.stms.into_iter().flatten().collect(),
        exprs: t.exprs.into_iter().flatten().collect(),
        vars: if leaves {
            VAR_NAMES.iter().map(|n| Var::new(n)).collect()
        } else {
            Vec::new()
        },
        typs: if leaves {
            vec![Typ::TInt, Typ::TFloat]
        } else {
            Vec::new()
        },
    }
}
