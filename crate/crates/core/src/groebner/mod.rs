//! Gröbner bases for ideals and submodules of free modules, and the
//! operations built on them: normal forms, colon ideals, elimination,
//! Hilbert series, syzygies and graded free resolutions.

mod engine;
mod hilbert;
pub(crate) mod linalg;
mod module;
mod resolution;
mod vector;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, PolyError, PolyRing, Polynomial};

pub use hilbert::{hilbert_series, krull_dim_monomial, krull_dim_monomials, HilbertSeries};
pub use module::{syzygies, FreeSubmodule};
pub use resolution::{betti_numbers, free_resolution, BettiTable, FreeResolution};

use vector::ModuleCtx;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("polynomial and basis use different monomial orders")]
    OrderMismatch,
    #[error("generator `{0}` is not a monomial")]
    NotMonomial(String),
    #[error("generator vectors have the wrong length")]
    RankMismatch,
    #[error("input is not homogeneous")]
    NotHomogeneous,
}

/// An ideal given by generators; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal, GroebnerError> {
        if gens.iter().any(|g| !g.ring().same_as(ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(Ideal { ring: Arc::clone(ring), gens: gens.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: Arc::clone(ring), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: Arc::clone(ring), gens: vec![ring.one()] }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: Arc::clone(ring), gens: (0..ring.nvars()).map(|i| ring.var(i)).collect() }
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Ideal, GroebnerError> {
        let gens = gens.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn groebner(&self) -> GroebnerBasis {
        buchberger(self, self.ring.order())
    }

    /// Same generators in a ring with the same variables and another order.
    pub fn reorder(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        Ideal { gens: self.gens.iter().map(|g| g.reorder(&ring)).collect(), ring }
    }

    pub fn map_into(&self, target: &Arc<PolyRing>, map: &[usize]) -> Ideal {
        Ideal { ring: Arc::clone(target), gens: self.gens.iter().map(|g| g.map_into(target, map)).filter(|g| !g.is_zero()).collect() }
    }

    pub fn map_by_name(&self, target: &Arc<PolyRing>) -> Result<Ideal, GroebnerError> {
        let gens = self.gens.iter().map(|g| g.map_by_name(target)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }

    pub fn with_generator(&self, g: Polynomial) -> Ideal {
        let mut gens = self.gens.clone();
        if !g.is_zero() {
            gens.push(g);
        }
        Ideal { ring: Arc::clone(&self.ring), gens }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().contains(f)
    }

    /// Ideal equality via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        let a = self.groebner();
        let b = other.reorder(self.ring.order());
        let b = buchberger(&b, self.ring.order());
        a.elements.len() == b.elements.len() && a.elements.iter().zip(b.elements.iter()).all(|(x, y)| x.terms() == y.terms())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by ascending
/// leading monomial; unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn lead_ideal(&self) -> Ideal {
        Ideal { ring: Arc::clone(&self.ring), gens: self.lead_monomials().into_iter().map(|m| self.ring.monomial(m)).collect() }
    }

    pub fn ideal(&self) -> Ideal {
        Ideal { ring: Arc::clone(&self.ring), gens: self.elements.clone() }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        if !f.ring().same_as(&self.ring) {
            if f.ring().vars() == self.ring.vars() && f.ring().field() == self.ring.field() {
                return Err(GroebnerError::OrderMismatch);
            }
            return Err(PolyError::RingMismatch.into());
        }
        let ctx = ModuleCtx::pot(&self.ring, 1);
        let basis: Vec<vector::Vector> = self.elements.iter().map(|g| ctx.embed_polynomial(g)).collect();
        let refs: Vec<&vector::Vector> = basis.iter().collect();
        let r = engine::full_reduce(&ctx, ctx.embed_polynomial(f), &refs);
        Ok(ctx.to_columns(&r).pop().unwrap())
    }

    /// Ideal membership; `f` is moved into the basis ring by variable name.
    pub fn contains(&self, f: &Polynomial) -> bool {
        let f = if f.ring().same_as(&self.ring) {
            f.clone()
        } else {
            match f.map_by_name(&self.ring) {
                Ok(g) => g,
                Err(_) => return false,
            }
        };
        self.normal_form(&f).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Number of standard monomials, when finite.
    pub fn quotient_dimension(&self) -> Option<u64> {
        let hs = hilbert_series(&self.lead_ideal()).ok()?;
        hs.total_dimension()
    }

    /// Standard monomials (those outside the lead ideal), when finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let hs = hilbert_series(&self.lead_ideal()).ok()?;
        if hs.dimension() != 0 {
            return None;
        }
        let leads = self.lead_monomials();
        let n = self.ring.nvars();
        let top = hs.reduced_numerator().len() as u32;
        let mut out = Vec::new();
        for d in 0..=top {
            for m in monomials_of_degree(n, d) {
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
        }
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp(a, b));
        Some(out)
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.iter().copied()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ring = if ideal.ring.order() == order { Arc::clone(&ideal.ring) } else { ideal.ring.with_order(order) };
    let ctx = ModuleCtx::pot(&ring, 1);
    let gens = ideal.gens.iter().map(|g| ctx.embed_polynomial(&g.reorder(&ring))).collect();
    let basis = engine::groebner_basis(&ctx, gens);
    let elements = basis.iter().map(|v| ctx.to_columns(v).pop().unwrap()).collect();
    GroebnerBasis { ring, elements, reduced: true }
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    gb.normal_form(f)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if !a.ring.same_as(&b.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().cloned());
    Ok(Ideal { ring: Arc::clone(&a.ring), gens })
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if !a.ring.same_as(&b.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    let mut gens = Vec::with_capacity(a.gens.len() * b.gens.len());
    for f in &a.gens {
        for g in &b.gens {
            gens.push(f * g);
        }
    }
    Ideal::new(&a.ring, gens)
}

/// `(i : f) = { g : g f ∈ i }`, read off the first coordinates of the
/// syzygies of `(f, i_1, ..., i_k)`.
pub fn colon_element(i: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if !f.ring().same_as(&i.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    if f.is_zero() {
        return Ok(Ideal::unit(&i.ring));
    }
    let mut gens = vec![vec![f.clone()]];
    gens.extend(i.gens.iter().map(|g| vec![g.clone()]));
    let m = FreeSubmodule::new(&i.ring, 1, gens)?;
    let syz = syzygies(&m);
    let firsts = syz.generators().iter().map(|v| v[0].clone()).collect();
    Ideal::new(&i.ring, firsts)
}

/// `(i : j)`, intersecting the colons by each generator of `j`.
pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    if !i.ring.same_as(&j.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let c = colon_element(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring)))
}

/// `a ∩ b` by eliminating `t` from `t·a + (1 − t)·b`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if !a.ring.same_as(&b.ring) {
        return Err(PolyError::RingMismatch.into());
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(&a.ring));
    }
    let n = a.ring.nvars();
    let mut names = vec!["__t".to_string()];
    names.extend(a.ring.vars().iter().cloned());
    let big = PolyRing::new(a.ring.field(), names, MonomialOrder::Elimination { block: 1 });
    let shift: Vec<usize> = (1..=n).collect();
    let t = big.var(0);
    let one_minus_t = &big.one() - &t;
    let mut gens = Vec::new();
    for f in &a.gens {
        gens.push(&t * &f.map_into(&big, &shift));
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &g.map_into(&big, &shift));
    }
    let gb = buchberger(&Ideal { ring: Arc::clone(&big), gens }, big.order());
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let kept = gb
        .elements
        .iter()
        .filter(|g| !g.involves(0))
        .map(|g| map_dropping(g, &a.ring, &back))
        .collect();
    Ideal::new(&a.ring, kept)
}

fn map_dropping(g: &Polynomial, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
    let terms = g
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    exps[map[i]] += e;
                }
            }
            (c.clone(), Monomial::new(exps))
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// `i ∩ k[keep]`, returned in the polynomial ring on the kept variables
/// (original relative order, grevlex).
pub fn eliminate(i: &Ideal, keep: &[usize]) -> Result<Ideal, GroebnerError> {
    let ring = &i.ring;
    let n = ring.nvars();
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let dropped: Vec<usize> = (0..n).filter(|v| !kept.contains(v)).collect();
    // new ring: dropped variables first, then kept
    let mut perm: Vec<usize> = vec![0; n];
    let mut names = Vec::with_capacity(n);
    for (new, &old) in dropped.iter().chain(kept.iter()).enumerate() {
        perm[old] = new;
        names.push(ring.vars()[old].clone());
    }
    let big = PolyRing::new(ring.field(), names, MonomialOrder::Elimination { block: dropped.len() });
    let gb = buchberger(&i.map_into(&big, &perm), big.order());
    let small = PolyRing::new(ring.field(), kept.iter().map(|&v| ring.vars()[v].clone()).collect(), MonomialOrder::Grevlex);
    let back: Vec<usize> = (0..n).map(|j| if j < dropped.len() { usize::MAX } else { j - dropped.len() }).collect();
    let gens = gb
        .elements
        .iter()
        .filter(|g| (0..dropped.len()).all(|v| !g.involves(v)))
        .map(|g| map_dropping(g, &small, &back))
        .collect();
    Ideal::new(&small, gens)
}

/// Eliminates by variable names.
pub fn eliminate_keeping(i: &Ideal, keep: &[&str]) -> Result<Ideal, GroebnerError> {
    let idx = keep
        .iter()
        .map(|n| i.ring.index_of(n).ok_or_else(|| GroebnerError::Poly(PolyError::UnknownVariable(n.to_string()))))
        .collect::<Result<Vec<_>, _>>()?;
    eliminate(i, &idx)
}

/// Minimal homogeneous generators of a homogeneous ideal, by degree-wise
/// trimming of `I / m I`.
pub fn trim(i: &Ideal) -> Result<Ideal, GroebnerError> {
    if !i.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let m = FreeSubmodule::new(&i.ring, 1, i.gens.iter().map(|g| vec![g.clone()]).collect())?;
    let t = m.trim(&[0])?;
    Ideal::new(&i.ring, t.generators().iter().map(|v| v[0].clone()).collect())
}
