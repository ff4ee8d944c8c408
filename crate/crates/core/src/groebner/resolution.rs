//! Graded free resolutions by Schreyer frames, and graded Betti numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::poly::{Monomial, PolyRing, Polynomial};

use super::engine::divide_tracking;
use super::linalg::EchelonBasis;
use super::vector::{ModTerm, ModuleCtx, ModuleOrder, SchreyerData, Vector};
use super::{buchberger, GroebnerError, Ideal};

/// A graded free resolution `... -> F_2 -> F_1 -> F_0 = S` of `S / I`.
/// Not necessarily minimal; the Betti table is the minimal one.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Arc<PolyRing>,
    shifts: Vec<Vec<u32>>,
    maps: Vec<Vec<Vec<Polynomial>>>,
}

impl FreeResolution {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.shifts.len() - 1
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map_or(0, Vec::len)
    }

    pub fn shifts(&self, i: usize) -> &[u32] {
        self.shifts.get(i).map_or(&[], Vec::as_slice)
    }

    /// `d_i : F_i -> F_{i-1}` as the list of images of the basis of `F_i`.
    pub fn differential(&self, i: usize) -> &[Vec<Polynomial>] {
        assert!(i >= 1);
        self.maps.get(i - 1).map_or(&[], Vec::as_slice)
    }

    /// Rank, in degree `j`, of `d_i ⊗ k`.
    fn constant_rank(&self, i: usize, j: u32) -> usize {
        if i == 0 || i > self.maps.len() {
            return 0;
        }
        let mut ech: EchelonBasis<usize> = EchelonBasis::new();
        for (a, col) in self.maps[i - 1].iter().enumerate() {
            if self.shifts[i][a] != j {
                continue;
            }
            let entries = col.iter().enumerate().filter_map(|(b, p)| {
                let c = p.constant_term();
                (!c.is_zero()).then_some((b, c))
            });
            ech.insert(entries);
        }
        ech.rank()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, shifts) in self.shifts.iter().enumerate() {
            let mut degrees: Vec<u32> = shifts.clone();
            degrees.sort_unstable();
            degrees.dedup();
            for j in degrees {
                let r = shifts.iter().filter(|s| **s == j).count();
                let b = r - self.constant_rank(i, j) - self.constant_rank(i + 1, j);
                if b > 0 {
                    entries.insert((i, j), b);
                }
            }
        }
        BettiTable { entries }
    }
}

/// Graded Betti numbers `β_{i,j}`, zero entries omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, b)| *b).sum()
    }

    /// Total Betti numbers `β_0, β_1, ...` up to the projective dimension.
    pub fn totals(&self) -> Vec<usize> {
        match self.projective_dimension() {
            None => Vec::new(),
            Some(pd) => (0..=pd).map(|i| self.total(i)).collect(),
        }
    }

    /// Largest `i` with `β_i ≠ 0`; `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, usize)> + '_ {
        self.entries.iter().map(|((i, j), b)| (*i, *j, *b))
    }
}

impl fmt::Display for BettiTable {
    /// Rows indexed by `j - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = match self.projective_dimension() {
            None => return write!(f, "0"),
            Some(pd) => pd,
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|(i, j)| *j as i64 - *i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, "{:>5}", self.total(i))?;
        }
        for r in rows {
            writeln!(f)?;
            write!(f, "{r:>5}:")?;
            for i in 0..=pd {
                let j = r + i as i64;
                let b = if j < 0 { 0 } else { self.get(i, j as u32) };
                if b == 0 {
                    write!(f, "{:>5}", ".")?;
                } else {
                    write!(f, "{b:>5}")?;
                }
            }
        }
        Ok(())
    }
}

fn lex_desc_within_position(elems: &mut [Vector]) {
    elems.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        x.pos.cmp(&y.pos).then_with(|| y.mono.exps().cmp(x.mono.exps()))
    });
}

/// Resolution of `S / I` for a homogeneous ideal `I`.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let ring = Arc::clone(ideal.ring());
    let n = ring.nvars();
    let gb = buchberger(ideal, ring.order());
    let mut ctx = ModuleCtx::pot(&ring, 1);
    let mut elems: Vec<Vector> = gb.elements().iter().map(|g| ctx.embed_polynomial(g)).collect();
    lex_desc_within_position(&mut elems);

    let mut shifts: Vec<Vec<u32>> = vec![vec![0]];
    let mut maps: Vec<Vec<Vec<Polynomial>>> = Vec::new();
    let mut totals: Vec<Monomial> = vec![Monomial::one(n)];
    let mut ancestors: Vec<Vec<usize>> = vec![Vec::new()];

    while !elems.is_empty() {
        let prev_shifts = shifts.last().unwrap().clone();
        let level_shifts: Vec<u32> = elems.iter().map(|v| v.degree(&prev_shifts).unwrap()).collect();
        maps.push(elems.iter().map(|v| ctx.to_columns(v)).collect());

        // Schreyer order on the new free module
        let new_totals: Vec<Monomial> = elems
            .iter()
            .map(|v| {
                let l = v.lead().unwrap();
                l.mono.mul(&totals[l.pos])
            })
            .collect();
        let new_ancestors: Vec<Vec<usize>> = elems
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut chain = ancestors[v.lead().unwrap().pos].clone();
                chain.push(i);
                chain
            })
            .collect();
        let data = Arc::new(SchreyerData { totals: new_totals.clone(), ancestors: new_ancestors.clone() });
        let next_ctx = ModuleCtx { ring: Arc::clone(&ring), rank: elems.len(), order: ModuleOrder::Schreyer(data) };

        let mut next: Vec<Vector> = Vec::new();
        for i in 0..elems.len() {
            let li = elems[i].lead().unwrap();
            let mut cands: Vec<(usize, Monomial)> = (i + 1..elems.len())
                .filter(|&j| elems[j].lead().unwrap().pos == li.pos)
                .map(|j| {
                    let lj = elems[j].lead().unwrap();
                    (j, li.mono.quotient_of(&li.mono.lcm(&lj.mono)).unwrap())
                })
                .collect();
            // keep only divisibility-minimal leads
            cands.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then(a.0.cmp(&b.0)));
            let mut kept: Vec<(usize, Monomial)> = Vec::new();
            for (j, m) in cands {
                if !kept.iter().any(|(_, k)| k.divides(&m)) {
                    kept.push((j, m));
                }
            }
            for (j, m_ji) in kept {
                let lj = elems[j].lead().unwrap();
                let m_ij = lj.mono.quotient_of(&li.mono.mul(&m_ji)).unwrap();
                let ci = li.coeff.inv();
                let cj = lj.coeff.inv().neg();
                let a = elems[i].scale_shift(&ci, &m_ji);
                let s = Vector { terms: ctx.add_scaled(&a.terms, &cj, &m_ij, &elems[j]) };
                let (rem, quotients) = divide_tracking(&ctx, s, &elems);
                debug_assert!(rem.is_zero(), "frame elements form a Gröbner basis");
                let mut terms = vec![
                    ModTerm { coeff: ci.clone(), pos: i, mono: m_ji.clone() },
                    ModTerm { coeff: cj.clone(), pos: j, mono: m_ij },
                ];
                for (k, q) in quotients.into_iter().enumerate() {
                    for (c, mono) in q {
                        terms.push(ModTerm { coeff: c.neg(), pos: k, mono });
                    }
                }
                let tau = next_ctx.vector(terms);
                if !tau.is_zero() {
                    next.push(tau);
                }
            }
        }
        lex_desc_within_position(&mut next);
        shifts.push(level_shifts);
        totals = new_totals;
        ancestors = new_ancestors;
        ctx = next_ctx;
        elems = next;
    }
    Ok(FreeResolution { ring, shifts, maps })
}

pub fn betti_numbers(ideal: &Ideal) -> Result<BettiTable, GroebnerError> {
    Ok(free_resolution(ideal)?.betti_table())
}
