//! Buchberger's algorithm over module vectors, with the Gebauer–Möller
//! pair update and the normal selection strategy.

use std::cmp::Ordering;

use crate::poly::Monomial;

use super::vector::{ModTerm, ModuleCtx, Vector};

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

fn find_reducer<'a>(basis: &[&'a Vector], t: &ModTerm) -> Option<&'a Vector> {
    basis.iter().copied().find(|g| {
        let l = g.lead().expect("nonzero basis element");
        l.pos == t.pos && l.mono.divides(&t.mono)
    })
}

/// Reduces until the leading term is not divisible by any basis lead.
pub(crate) fn top_reduce(ctx: &ModuleCtx, v: Vector, basis: &[&Vector]) -> Vector {
    let mut terms = v.terms;
    while let Some(t) = terms.first() {
        match find_reducer(basis, t) {
            Some(g) => {
                let gl = g.lead().unwrap();
                let q = gl.mono.quotient_of(&t.mono).unwrap();
                let c = t.coeff.div(&gl.coeff).neg();
                terms = ctx.add_scaled(&terms, &c, &q, g);
            }
            None => break,
        }
    }
    Vector { terms }
}

/// Full normal form: no term of the result is divisible by a basis lead.
pub(crate) fn full_reduce(ctx: &ModuleCtx, v: Vector, basis: &[&Vector]) -> Vector {
    let mut done: Vec<ModTerm> = Vec::new();
    let mut rest = v.terms;
    let mut start = 0;
    while start < rest.len() {
        let t = &rest[start];
        match find_reducer(basis, t) {
            Some(g) => {
                let gl = g.lead().unwrap();
                let q = gl.mono.quotient_of(&t.mono).unwrap();
                let c = t.coeff.div(&gl.coeff).neg();
                rest = ctx.add_scaled(&rest[start..], &c, &q, g);
                start = 0;
            }
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
        }
    }
    Vector { terms: done }
}

/// Division with quotient tracking: returns the remainder and, for each
/// basis element, the polynomial multiplier as `(coeff, monomial)` terms.
pub(crate) fn divide_tracking(
    ctx: &ModuleCtx,
    v: Vector,
    basis: &[Vector],
) -> (Vector, Vec<Vec<(crate::poly::Scalar, Monomial)>>) {
    let refs: Vec<&Vector> = basis.iter().collect();
    let mut quotients = vec![Vec::new(); basis.len()];
    let mut done: Vec<ModTerm> = Vec::new();
    let mut rest = v.terms;
    let mut start = 0;
    while start < rest.len() {
        let t = &rest[start];
        let hit = refs.iter().position(|g| {
            let l = g.lead().unwrap();
            l.pos == t.pos && l.mono.divides(&t.mono)
        });
        match hit {
            Some(k) => {
                let gl = refs[k].lead().unwrap();
                let q = gl.mono.quotient_of(&t.mono).unwrap();
                let c = t.coeff.div(&gl.coeff);
                quotients[k].push((c.clone(), q.clone()));
                rest = ctx.add_scaled(&rest[start..], &c.neg(), &q, refs[k]);
                start = 0;
            }
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
        }
    }
    (Vector { terms: done }, quotients)
}

struct Engine<'a> {
    ctx: &'a ModuleCtx,
    polys: Vec<Vector>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn lead(&self, i: usize) -> &ModTerm {
        self.polys[i].lead().unwrap()
    }

    fn active_refs(&self) -> Vec<&Vector> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn insert(&mut self, h: Vector) {
        let h_idx = self.polys.len();
        self.polys.push(h);
        let lh = self.lead(h_idx).clone();
        let ideal = self.ctx.is_ideal();

        let mut candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .filter(|&&g| self.lead(g).pos == lh.pos)
            .map(|&g| (g, self.lead(g).mono.lcm(&lh.mono)))
            .collect();
        let coprime = |s: &Self, g: usize| ideal && s.lead(g).mono.is_coprime(&lh.mono);

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = candidates.pop() {
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime(self, g) || !dominated {
                kept.push((g, l));
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !coprime(self, *g))
            .map(|(g, l)| Pair { i: g, j: h_idx, pos: lh.pos, lcm: l })
            .collect();

        // prune old pairs made redundant by h
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let keep = if p.pos != lh.pos || !lh.mono.divides(&p.lcm) {
                true
            } else {
                let li = self.lead(p.i).mono.lcm(&lh.mono);
                let lj = self.lead(p.j).mono.lcm(&lh.mono);
                li == p.lcm || lj == p.lcm
            };
            if keep {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| {
            let lg = &self.polys[g].terms[0];
            !(lg.pos == lh.pos && lh.mono.divides(&lg.mono))
        });
        self.active.push(h_idx);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ctx = self.ctx;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = ctx.cmp(a.pos, &a.lcm, b.pos, &b.lcm).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_vector(&self, p: &Pair) -> Vector {
        let (fi, fj) = (&self.polys[p.i], &self.polys[p.j]);
        let li = fi.lead().unwrap();
        let lj = fj.lead().unwrap();
        let qi = li.mono.quotient_of(&p.lcm).unwrap();
        let qj = lj.mono.quotient_of(&p.lcm).unwrap();
        let a = fi.scale_shift(&li.coeff.inv(), &qi);
        let terms = self.ctx.add_scaled(&a.terms, &lj.coeff.inv().neg(), &qj, fj);
        Vector { terms }
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// ascending leading term.
pub(crate) fn groebner_basis(ctx: &ModuleCtx, gens: Vec<Vector>) -> Vec<Vector> {
    let mut engine = Engine { ctx, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens: Vec<Vector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    // small leads first keeps the intermediate basis compact
    gens.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ctx.cmp(x.pos, &x.mono, y.pos, &y.mono)
    });
    for g in gens {
        let h = top_reduce(ctx, g, &engine.active_refs());
        if !h.is_zero() {
            engine.insert(h.monic());
        }
    }
    while let Some(p) = engine.select() {
        let s = engine.s_vector(&p);
        let h = top_reduce(ctx, s, &engine.active_refs());
        if !h.is_zero() {
            engine.insert(h.monic());
        }
    }
    interreduce(ctx, engine.active.iter().map(|&i| engine.polys[i].clone()).collect())
}

/// Turns a Gröbner basis with pairwise non-dividing leads into the reduced one.
pub(crate) fn interreduce(ctx: &ModuleCtx, basis: Vec<Vector>) -> Vec<Vector> {
    let mut basis: Vec<Vector> = basis.into_iter().map(Vector::monic).collect();
    basis.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ctx.cmp(x.pos, &x.mono, y.pos, &y.mono)
    });
    // drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Vector> = Vec::new();
    for g in basis {
        let lg = g.lead().unwrap();
        if !minimal.iter().any(|m| {
            let lm = m.lead().unwrap();
            lm.pos == lg.pos && lm.mono.divides(&lg.mono)
        }) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Vector> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v).collect();
        let head = Vector { terms: vec![minimal[k].terms[0].clone()] };
        let tail = Vector { terms: minimal[k].terms[1..].to_vec() };
        let tail = full_reduce(ctx, tail, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        out.push(Vector { terms });
    }
    out
}
