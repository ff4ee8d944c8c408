//! Dense exact linear algebra: fraction-free elimination over ℚ, plain
//! elimination modulo p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{Field, Scalar};

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
    vec![vec![field.zero(); cols]; rows]
}

pub fn mat_vec(m: &Matrix, v: &[Scalar], field: Field) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc.add(&a.mul(b)) })
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, field: Field) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).fold(field.zero(), |acc, (x, brow)| {
                        if x.is_zero() || brow[j].is_zero() {
                            acc
                        } else {
                            acc.add(&x.mul(&brow[j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Rank of the row set `rows` (all of equal length).
pub fn rank(rows: &[Vec<Scalar>], field: Field) -> usize {
    match field {
        Field::Rational => bareiss_rank(integer_rows(rows)),
        Field::Prime(p) => modular_rank(
            rows.iter().map(|r| r.iter().map(|s| s.to_i64().expect("residue") as u64).collect()).collect(),
            p,
        ),
    }
}

/// Clears denominators row by row.
fn integer_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let qs: Vec<_> = row.iter().map(|s| s.as_rational().expect("rational entry").clone()).collect();
            let l = qs.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            qs.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..ncols {
                let num = &row[j] * &pivot_row[c] - &f * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn modular_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = (row[c] as u128 * inv as u128 % p as u128) as u64;
            for j in c..ncols {
                let sub = (f as u128 * pivot_row[j] as u128 % p as u128) as u64;
                row[j] = (row[j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

/// A basis of the span of `vectors`, in reduced echelon form.
pub fn span_basis(vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (pc, b) in &basis {
            if !w[*pc].is_zero() {
                let f = w[*pc].clone();
                for (x, y) in w.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else { continue };
        let inv = w[pc].inv();
        for x in w.iter_mut() {
            *x = x.mul(&inv);
        }
        for (_, b) in basis.iter_mut() {
            if !b[pc].is_zero() {
                let f = b[pc].clone();
                for (x, y) in b.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        basis.push((pc, w));
    }
    basis.into_iter().map(|(_, b)| b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| Field::Rational.from_i64(x)).collect()).collect()
    }

    #[test]
    fn ranks_agree_across_methods() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(span_basis(&m).len(), 2);
        let f = Field::Prime(7);
        let m: Matrix = [[1, 2, 3], [3, 6, 2], [0, 0, 0]].iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        // row 2 = 3 * row 1 mod 7
        assert_eq!(rank(&m, f), 1);
        assert_eq!(span_basis(&m).len(), 1);
    }

    #[test]
    fn rational_entries() {
        let half = Field::Rational.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        let one = Field::Rational.one();
        let m = vec![vec![half.clone(), one.clone()], vec![one.clone(), one.add(&one)]];
        assert_eq!(rank(&m, Field::Rational), 1);
    }
}
