//! Hilbert series of monomial ideals by pivot splitting.

use crate::poly::Monomial;

use super::{GroebnerError, Ideal};

/// `numerator(T) / (1 - T)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
}

fn trim_zeros(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_zeros(out)
}

fn poly_add_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        out[j + shift] += y;
    }
    trim_zeros(out)
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    trim_zeros(v)
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

impl HilbertSeries {
    pub fn new(nvars: usize, numerator: Vec<i64>) -> Self {
        HilbertSeries { nvars, numerator: trim_zeros(numerator) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Numerator over `(1 - T)^nvars`, constant term first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// True for the series of the zero ring.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    fn reduce(&self) -> (Vec<i64>, usize) {
        if self.numerator.is_empty() {
            return (Vec::new(), 0);
        }
        let mut num = self.numerator.clone();
        let mut pole = self.nvars;
        while pole > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // divide by (1 - T): prefix sums
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = 0i64;
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = trim_zeros(q);
            pole -= 1;
        }
        (num, pole)
    }

    /// Numerator `h(T)` after cancelling all factors of `(1 - T)`.
    pub fn reduced_numerator(&self) -> Vec<i64> {
        self.reduce().0
    }

    /// Order of the pole at `T = 1`: the Krull dimension of the quotient.
    pub fn dimension(&self) -> usize {
        self.reduce().1
    }

    /// `h(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.reduce().0.iter().sum()
    }

    /// Vector-space dimension of the quotient, when finite.
    pub fn total_dimension(&self) -> Option<u64> {
        let (h, pole) = self.reduce();
        if pole == 0 {
            Some(h.iter().sum::<i64>() as u64)
        } else {
            None
        }
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn coefficient(&self, d: u32) -> i64 {
        let n = self.nvars as i64;
        let mut acc: i128 = 0;
        for (i, c) in self.numerator.iter().enumerate() {
            let k = d as i64 - i as i64;
            if k < 0 {
                break;
            }
            let b = if n == 0 { i128::from(k == 0) } else { binomial(k + n - 1, n - 1) };
            acc += *c as i128 * b;
        }
        acc as i64
    }

    pub fn hilbert_function(&self, up_to: u32) -> Vec<i64> {
        (0..=up_to).map(|d| self.coefficient(d)).collect()
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree())));
    }
    // pivot on the variable shared by the most generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let v = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let e = gens.iter().map(|g| g.exps()[v]).filter(|e| *e > 0).min().unwrap();
    let pivot = Monomial::var(nvars, v, e);
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exps().to_vec();
            exps[v] = exps[v].saturating_sub(e);
            Monomial::new(exps)
        })
        .collect();
    let a = numerator(plus, nvars);
    let b = numerator(colon, nvars);
    poly_add_shifted(&a, &b, e as usize)
}

/// Series of `S / (gens)` for monomials `gens` in `nvars` variables.
pub fn hilbert_series_monomials(gens: &[Monomial], nvars: usize) -> HilbertSeries {
    HilbertSeries::new(nvars, numerator(gens.to_vec(), nvars))
}

/// Hilbert series of `S / lead` for a monomial ideal `lead`.
pub fn hilbert_series(lead: &Ideal) -> Result<HilbertSeries, GroebnerError> {
    let gens = monomial_generators(lead)?;
    Ok(hilbert_series_monomials(&gens, lead.ring().nvars()))
}

fn monomial_generators(lead: &Ideal) -> Result<Vec<Monomial>, GroebnerError> {
    lead.gens()
        .iter()
        .map(|g| {
            if g.is_monomial() {
                Ok(g.leading_monomial().unwrap().clone())
            } else {
                Err(GroebnerError::NotMonomial(g.to_string()))
            }
        })
        .collect()
}

/// Size of the largest set of variables containing the support of no
/// generator.
pub fn krull_dim_monomials(gens: &[Monomial], nvars: usize) -> usize {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(Monomial::is_one) {
        return 0;
    }
    if nvars > 24 {
        return hilbert_series_monomials(&gens, nvars).dimension();
    }
    let supports: Vec<u32> = gens.iter().map(|g| g.support().fold(0u32, |acc, v| acc | (1 << v))).collect();
    let mut best = 0;
    for set in 0u32..(1u32 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}

pub fn krull_dim_monomial(lead: &Ideal) -> Result<usize, GroebnerError> {
    let gens = monomial_generators(lead)?;
    Ok(krull_dim_monomials(&gens, lead.ring().nvars()))
}
