//! Incremental row echelon form over a field, keyed by sparse column labels.

use std::collections::HashMap;
use std::hash::Hash;

use crate::poly::Scalar;

/// Accumulates vectors and reports whether each new one is independent of
/// those already accepted.
pub(crate) struct EchelonBasis<K: Eq + Hash + Clone> {
    // pivot column -> reduced row (pivot coefficient 1)
    rows: Vec<(K, HashMap<K, Scalar>)>,
}

impl<K: Eq + Hash + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: HashMap<K, Scalar>) -> HashMap<K, Scalar> {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                for (k, a) in row {
                    let entry = v.entry(k.clone()).or_insert_with(|| c.field().zero());
                    *entry = entry.sub(&a.mul(&c));
                }
                v.retain(|_, a| !a.is_zero());
            }
        }
        v
    }

    /// Inserts `v`; returns `true` if it was independent.
    pub fn insert(&mut self, v: impl IntoIterator<Item = (K, Scalar)>) -> bool {
        let mut map: HashMap<K, Scalar> = HashMap::new();
        for (k, c) in v {
            let e = map.entry(k).or_insert_with(|| c.field().zero());
            *e = e.add(&c);
        }
        map.retain(|_, a| !a.is_zero());
        let reduced = self.reduce(map);
        let pivot = match reduced.keys().next() {
            None => return false,
            Some(k) => k.clone(),
        };
        let inv = reduced[&pivot].inv();
        let row: HashMap<K, Scalar> = reduced.into_iter().map(|(k, a)| (k, a.mul(&inv))).collect();
        // keep existing rows reduced against the new pivot
        for (_, r) in &mut self.rows {
            if let Some(c) = r.get(&pivot).cloned() {
                for (k, a) in &row {
                    let entry = r.entry(k.clone()).or_insert_with(|| c.field().zero());
                    *entry = entry.sub(&a.mul(&c));
                }
                r.retain(|_, a| !a.is_zero());
            }
        }
        self.rows.push((pivot, row));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn detects_dependence() {
        let q = Field::Rational;
        let mut b: EchelonBasis<usize> = EchelonBasis::new();
        assert!(b.insert([(0, q.from_i64(1)), (1, q.from_i64(2))]));
        assert!(b.insert([(1, q.from_i64(1)), (2, q.from_i64(1))]));
        // (1, 3, 1) = row0 + row1
        assert!(!b.insert([(0, q.from_i64(1)), (1, q.from_i64(3)), (2, q.from_i64(1))]));
        assert!(b.insert([(2, q.from_i64(5))]));
        assert_eq!(b.rank(), 3);
        assert!(!b.insert(Vec::new()));
    }
}
