//! Sparse vectors in a free module `S^r` and the module orders they are
//! sorted by. Ideals are handled as rank-one submodules.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Monomial, PolyRing, Polynomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModTerm {
    pub coeff: Scalar,
    pub pos: usize,
    pub mono: Monomial,
}

/// Per-basis data for a Schreyer order: the total monomial each basis
/// element maps to at the bottom of the frame and its chain of positions.
#[derive(Clone, Debug)]
pub(crate) struct SchreyerData {
    pub totals: Vec<Monomial>,
    pub ancestors: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub(crate) enum ModuleOrder {
    /// Position over term; lower positions dominate.
    PositionOverTerm,
    Schreyer(Arc<SchreyerData>),
}

#[derive(Clone, Debug)]
pub(crate) struct ModuleCtx {
    pub ring: Arc<PolyRing>,
    pub rank: usize,
    pub order: ModuleOrder,
}

impl ModuleCtx {
    pub fn pot(ring: &Arc<PolyRing>, rank: usize) -> Self {
        ModuleCtx { ring: Arc::clone(ring), rank, order: ModuleOrder::PositionOverTerm }
    }

    pub fn cmp(&self, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
        let mono_order = self.ring.order();
        match &self.order {
            ModuleOrder::PositionOverTerm => pb.cmp(&pa).then_with(|| mono_order.cmp(ma, mb)),
            ModuleOrder::Schreyer(data) => mono_order
                .cmp_products(ma, &data.totals[pa], mb, &data.totals[pb])
                .then_with(|| {
                    for (x, y) in data.ancestors[pa].iter().zip(data.ancestors[pb].iter()) {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }),
        }
    }

    pub fn is_ideal(&self) -> bool {
        self.rank == 1
    }

    pub fn vector(&self, mut terms: Vec<ModTerm>) -> Vector {
        terms.sort_by(|a, b| self.cmp(b.pos, &b.mono, a.pos, &a.mono));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Vector { terms: out }
    }

    pub fn embed_columns(&self, cols: &[Polynomial]) -> Vector {
        let terms = cols
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| p.terms().iter().map(move |(c, m)| ModTerm { coeff: c.clone(), pos, mono: m.clone() }))
            .collect();
        self.vector(terms)
    }

    pub fn embed_polynomial(&self, p: &Polynomial) -> Vector {
        self.embed_columns(std::slice::from_ref(p))
    }

    pub fn to_columns(&self, v: &Vector) -> Vec<Polynomial> {
        let mut cols: Vec<Vec<(Scalar, Monomial)>> = vec![Vec::new(); self.rank];
        for t in &v.terms {
            cols[t.pos].push((t.coeff.clone(), t.mono.clone()));
        }
        cols.into_iter().map(|terms| Polynomial::from_terms(&self.ring, terms)).collect()
    }

    /// `a + scale * shift * b`.
    pub fn add_scaled(&self, a: &[ModTerm], scale: &Scalar, shift: &Monomial, b: &Vector) -> Vec<ModTerm> {
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let bt = |t: &ModTerm| ModTerm { coeff: t.coeff.mul(scale), pos: t.pos, mono: t.mono.mul(shift) };
        while i < a.len() && j < b.terms.len() {
            let x = &a[i];
            let y = &b.terms[j];
            // compare x with shift*y without materializing unless needed
            let ord = match &self.order {
                ModuleOrder::PositionOverTerm if x.pos != y.pos => y.pos.cmp(&x.pos),
                _ => {
                    let ym = y.mono.mul(shift);
                    self.cmp(x.pos, &x.mono, y.pos, &ym)
                }
            };
            match ord {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bt(y));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = x.coeff.add(&y.coeff.mul(scale));
                    if !c.is_zero() {
                        out.push(ModTerm { coeff: c, pos: x.pos, mono: x.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(bt));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<ModTerm>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn monic(mut self) -> Self {
        if let Some(c) = self.terms.first().map(|t| t.coeff.clone()) {
            if !c.is_one() {
                let inv = c.inv();
                for t in &mut self.terms {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
        self
    }

    pub fn scale_shift(&self, c: &Scalar, m: &Monomial) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm { coeff: t.coeff.mul(c), pos: t.pos, mono: t.mono.mul(m) })
                .collect(),
        }
    }

    /// Degree of the leading term under the given basis degree shifts.
    pub fn degree(&self, shifts: &[u32]) -> Option<u32> {
        self.terms.first().map(|t| t.mono.degree() + shifts[t.pos])
    }

    pub fn is_homogeneous(&self, shifts: &[u32]) -> bool {
        match self.degree(shifts) {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.mono.degree() + shifts[t.pos] == d),
        }
    }
}
