//! Submodules of free modules `S^r` given by generator vectors.

use std::sync::Arc;

use crate::poly::{Monomial, PolyError, PolyRing, Polynomial};

use super::engine::{full_reduce, groebner_basis};
use super::linalg::EchelonBasis;
use super::vector::{ModTerm, ModuleCtx, Vector};
use super::GroebnerError;

/// A submodule of `S^rank`, generated by column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSubmodule {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<Vec<Polynomial>>,
}

/// Gröbner basis of a submodule under position-over-term.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    ctx: ModuleCtx,
    basis: Vec<Vector>,
}

impl FreeSubmodule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: Vec<Vec<Polynomial>>) -> Result<Self, GroebnerError> {
        for g in &gens {
            if g.len() != rank {
                return Err(GroebnerError::RankMismatch);
            }
            if g.iter().any(|p| !p.ring().same_as(ring)) {
                return Err(PolyError::RingMismatch.into());
            }
        }
        Ok(FreeSubmodule { ring: Arc::clone(ring), rank, gens })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(Polynomial::is_zero))
    }

    fn ctx(&self) -> ModuleCtx {
        ModuleCtx::pot(&self.ring, self.rank)
    }

    pub fn groebner(&self) -> ModuleBasis {
        let ctx = self.ctx();
        let vecs = self.gens.iter().map(|g| ctx.embed_columns(g)).collect();
        let basis = groebner_basis(&ctx, vecs);
        ModuleBasis { ctx, basis }
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.groebner().contains(v)
    }

    /// `Σ c_i g_i`.
    pub fn combine(&self, coeffs: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(coeffs.len(), self.gens.len());
        let mut out = vec![self.ring.zero(); self.rank];
        for (c, g) in coeffs.iter().zip(self.gens.iter()) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(g.iter()) {
                *o = &*o + &(c * p);
            }
        }
        out
    }

    /// Equality of submodules by mutual containment.
    pub fn same_module(&self, other: &FreeSubmodule) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let a = self.groebner();
        let b = other.groebner();
        other.gens.iter().all(|g| a.contains(g)) && self.gens.iter().all(|g| b.contains(g))
    }

    /// Minimal homogeneous generators of a graded submodule whose ambient
    /// basis has the given degree shifts.
    pub fn trim(&self, shifts: &[u32]) -> Result<FreeSubmodule, GroebnerError> {
        if shifts.len() != self.rank {
            return Err(GroebnerError::RankMismatch);
        }
        let ctx = self.ctx();
        let mut items: Vec<(u32, usize, Vector)> = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            let v = ctx.embed_columns(g);
            if v.is_zero() {
                continue;
            }
            if !v.is_homogeneous(shifts) {
                return Err(GroebnerError::NotHomogeneous);
            }
            items.push((v.degree(shifts).unwrap(), i, v));
        }
        items.sort_by_key(|(d, i, _)| (*d, *i));
        let mut kept: Vec<usize> = Vec::new();
        let mut gb: Vec<Vector> = Vec::new();
        let mut k = 0;
        while k < items.len() {
            let d = items[k].0;
            let mut echelon: EchelonBasis<(usize, Monomial)> = EchelonBasis::new();
            let refs: Vec<&Vector> = gb.iter().collect();
            let mut fresh = Vec::new();
            while k < items.len() && items[k].0 == d {
                let (_, i, v) = &items[k];
                let nf = full_reduce(&ctx, v.clone(), &refs);
                if echelon.insert(nf.terms.into_iter().map(|t| ((t.pos, t.mono), t.coeff))) {
                    kept.push(*i);
                    fresh.push(v.clone());
                }
                k += 1;
            }
            if !fresh.is_empty() && k < items.len() {
                let mut seed = std::mem::take(&mut gb);
                seed.extend(fresh);
                gb = groebner_basis(&ctx, seed);
            }
        }
        let gens = kept.into_iter().map(|i| self.gens[i].clone()).collect();
        Ok(FreeSubmodule { ring: Arc::clone(&self.ring), rank: self.rank, gens })
    }
}

impl ModuleBasis {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn elements(&self) -> Vec<Vec<Polynomial>> {
        self.basis.iter().map(|v| self.ctx.to_columns(v)).collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let refs: Vec<&Vector> = self.basis.iter().collect();
        let r = full_reduce(&self.ctx, self.ctx.embed_columns(v), &refs);
        self.ctx.to_columns(&r)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        v.len() == self.ctx.rank && self.normal_form(v).iter().all(Polynomial::is_zero)
    }
}

/// Kernel of the map `S^k -> S^r` sending `e_i` to the `i`-th generator.
///
/// Computed from a position-over-term basis of the augmented vectors
/// `(g_i | e_i)`: the basis elements with vanishing first block span the
/// kernel. The result is the reduced basis of the kernel, trimmed to a
/// minimal system when the generators are homogeneous.
pub fn syzygies(m: &FreeSubmodule) -> FreeSubmodule {
    let r = m.rank;
    let k = m.gens.len();
    let ctx = ModuleCtx::pot(&m.ring, r + k);
    let one = Monomial::one(m.ring.nvars());
    let field = m.ring.field();
    let vecs = m
        .gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms: Vec<ModTerm> = g
                .iter()
                .enumerate()
                .flat_map(|(pos, p)| p.terms().iter().map(move |(c, mo)| ModTerm { coeff: c.clone(), pos, mono: mo.clone() }))
                .collect();
            terms.push(ModTerm { coeff: field.one(), pos: r + i, mono: one.clone() });
            ctx.vector(terms)
        })
        .collect();
    let basis = groebner_basis(&ctx, vecs);
    let gens: Vec<Vec<Polynomial>> = basis
        .iter()
        .filter(|v| v.lead().unwrap().pos >= r)
        .map(|v| ctx.to_columns(v).split_off(r))
        .collect();
    let syz = FreeSubmodule { ring: Arc::clone(&m.ring), rank: k, gens };
    match homogeneous_shifts(m) {
        Some(shifts) => syz.trim(&shifts).unwrap_or(syz),
        None => syz,
    }
}

/// Degrees of the generators when each one is homogeneous for the
/// standard grading on `S^r`.
fn homogeneous_shifts(m: &FreeSubmodule) -> Option<Vec<u32>> {
    let ctx = m.ctx();
    let zero = vec![0u32; m.rank];
    m.gens
        .iter()
        .map(|g| {
            let v = ctx.embed_columns(g);
            if v.is_homogeneous(&zero) {
                Some(v.degree(&zero).unwrap_or(0))
            } else {
                None
            }
        })
        .collect()
}
