use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// A global monomial order. Variables are ranked by index: `x_0 > x_1 > ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}


fn grevlex_slices(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex_slices(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination { block } => {
                let k = block.min(a.len());
                grevlex_slices(&a[..k], &b[..k]).then_with(|| grevlex_slices(&a[k..], &b[k..]))
            }
        }
    }

    /// Compares `a1 * a2` with `b1 * b2` without allocating the products.
    pub fn cmp_products(&self, a1: &Monomial, a2: &Monomial, b1: &Monomial, b2: &Monomial) -> Ordering {
        let n = a1.nvars();
        let mut left: smallvec::SmallVec<[u32; 16]> = smallvec::SmallVec::with_capacity(n);
        let mut right: smallvec::SmallVec<[u32; 16]> = smallvec::SmallVec::with_capacity(n);
        for i in 0..n {
            left.push(a1.exps()[i] + a2.exps()[i]);
            right.push(b1.exps()[i] + b2.exps()[i]);
        }
        self.cmp_exps(&left, &right)
    }

    /// Whether every monomial involving one of the first `k` variables
    /// dominates all monomials free of them.
    pub fn eliminates_prefix(&self, k: usize) -> bool {
        match *self {
            MonomialOrder::Lex => true,
            MonomialOrder::Elimination { block } => block >= k,
            MonomialOrder::Grevlex => k == 0,
        }
    }
}
