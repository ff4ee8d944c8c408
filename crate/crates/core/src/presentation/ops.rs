use std::collections::HashSet;
use std::sync::Arc;

use crate::groebner::{eliminate, krull_dim_monomial, syzygies, trim, FreeSubmodule, Ideal};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Scalar};

use super::{AlgebraPresentation, BaseDescriptor, FlatnessCertificate, Mode, PresentationError};

/// Evaluates `f` with variable `i` replaced by `images[i]`.
fn substitute_all(f: &Polynomial, images: &[Polynomial], target: &Arc<PolyRing>) -> Polynomial {
    let mut acc = target.zero();
    for (c, m) in f.terms() {
        let mut term = target.constant(c.clone());
        for (i, e) in m.exps().iter().enumerate() {
            if *e > 0 {
                term = &term * &images[i].pow(*e);
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// Reduced row echelon form of the linear parts of `gens`; returns, for
/// each pivot variable, its row (pivot coefficient one).
fn linear_pivots(gens: &[Polynomial], nvars: usize) -> Vec<(usize, Vec<Scalar>)> {
    let mut occurrences = vec![0usize; nvars];
    for g in gens {
        for v in g.support() {
            occurrences[v] += 1;
        }
    }
    let mut rows: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for g in gens {
        let mut row = g.linear_part();
        for (p, r) in &rows {
            let c = row[*p].clone();
            if !c.is_zero() {
                for j in 0..nvars {
                    row[j] = row[j].sub(&r[j].mul(&c));
                }
            }
        }
        // fewest occurrences elsewhere; ties go to the later variable
        let pivot = (0..nvars)
            .filter(|&j| !row[j].is_zero())
            .min_by_key(|&j| (occurrences[j], std::cmp::Reverse(j)));
        let Some(p) = pivot else { continue };
        let inv = row[p].inv();
        for x in row.iter_mut() {
            *x = x.mul(&inv);
        }
        for (_, r) in rows.iter_mut() {
            let c = r[p].clone();
            if !c.is_zero() {
                for j in 0..nvars {
                    r[j] = r[j].sub(&row[j].mul(&c));
                }
            }
        }
        rows.push((p, row));
    }
    rows
}

/// A presentation over the prime field with no relation having a linear
/// part, so that the variable count is the embedding dimension.
///
/// Graded algebras are minimalized by substituting along the linear
/// relations and trimming to minimal generators. For local algebras the
/// remaining variables generate the algebra, and the new relation ideal is
/// the elimination ideal.
pub fn minimalize(p: &AlgebraPresentation) -> Result<AlgebraPresentation, PresentationError> {
    if p.mode() == Mode::Affine {
        return Err(PresentationError::AffineMode(p.name().to_string()));
    }
    let flat = p.flatten();
    let ring = flat.ring();
    let n = ring.nvars();
    let gens = flat.relations().gens();
    let pivots = linear_pivots(gens, n);
    let pivot_set: HashSet<usize> = pivots.iter().map(|(v, _)| *v).collect();
    let kept: Vec<usize> = (0..n).filter(|v| !pivot_set.contains(v)).collect();
    let kept_names: Vec<String> = kept.iter().map(|&v| ring.vars()[v].clone()).collect();
    let target = PolyRing::new(ring.field(), kept_names.clone(), MonomialOrder::Grevlex);

    let relations = match p.mode() {
        Mode::Graded => {
            let mut images: Vec<Polynomial> = vec![target.zero(); n];
            for (new, &old) in kept.iter().enumerate() {
                images[old] = target.var(new);
            }
            for (v, row) in &pivots {
                let mut img = target.zero();
                for (new, &old) in kept.iter().enumerate() {
                    if !row[old].is_zero() {
                        img = &img - &target.var(new).scale(&row[old]);
                    }
                }
                images[*v] = img;
            }
            let subs: Vec<Polynomial> = gens.iter().map(|g| substitute_all(g, &images, &target)).collect();
            trim(&Ideal::new(&target, subs)?)?
        }
        _ => {
            let e = eliminate(flat.relations(), &kept)?;
            e.map_by_name(&target)?
        }
    };
    let mut out = AlgebraPresentation::from_ideal(
        p.name(),
        BaseDescriptor::PrimeField(p.field()),
        &kept_names,
        relations,
        p.mode(),
    )?;
    out.flat_asserted = p.flat_asserted();
    Ok(out)
}

fn fresh_name(name: &str, taken: &HashSet<String>) -> String {
    if !taken.contains(name) {
        return name.to_string();
    }
    (2..).map(|k| format!("{name}_{k}")).find(|c| !taken.contains(c)).unwrap()
}

/// `A ⊗_R B`, presented on the base variables and both sets of own
/// variables with relations `I_A + I_B`. Clashing variables of `b` are
/// renamed with a numeric suffix.
pub fn tensor_product(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<AlgebraPresentation, PresentationError> {
    if !a.base().same_as(b.base()) {
        return Err(PresentationError::BaseMismatch);
    }
    let base = a.base().clone();
    let mut taken: HashSet<String> = a.all_vars().iter().cloned().collect();
    let mut vars: Vec<String> = a.vars().to_vec();
    for v in b.vars() {
        let name = fresh_name(v, &taken);
        taken.insert(name.clone());
        vars.push(name);
    }
    let ring = AlgebraPresentation::ring_for(&base, &vars)?;
    let s = base.vars().len();
    let a_map: Vec<usize> = (0..a.all_vars().len()).collect();
    let b_map: Vec<usize> = (0..s).chain((0..b.vars().len()).map(|i| s + a.vars().len() + i)).collect();
    let mut gens: Vec<Polynomial> = a.relations().gens().iter().map(|g| g.map_into(&ring, &a_map)).collect();
    for g in b.relations().gens() {
        let g = g.map_into(&ring, &b_map);
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    let ideal = Ideal::new(&ring, gens)?;
    let name = format!("{}_{}", a.name(), b.name());
    let mut out = AlgebraPresentation::from_ideal(&name, base, &vars, ideal, Mode::Affine)?;
    out.mode = match (a.mode(), b.mode()) {
        (Mode::Graded, Mode::Graded) => Mode::Graded,
        (Mode::Affine, _) | (_, Mode::Affine) => Mode::Affine,
        _ => {
            let local = out.clone().with_mode(Mode::Local);
            if local.validate().is_ok() {
                Mode::Local
            } else {
                Mode::Affine
            }
        }
    };
    if let (Some(p), Some(q)) = (a.prime(), b.prime()) {
        let mut pg: Vec<Polynomial> = p.gens().iter().map(|g| g.map_into(&ring, &a_map)).collect();
        pg.extend(q.gens().iter().map(|g| g.map_into(&ring, &b_map)));
        out.prime = Some(Ideal::new(&ring, pg)?);
    }
    Ok(out)
}

/// True when the relation ideal contains 1.
pub fn tensor_is_trivial(p: &AlgebraPresentation) -> bool {
    p.relations().groebner().is_unit()
}

/// `(q + I) ∩ k[base vars]`, as an ideal of the base polynomial ring.
pub fn contract_to_base(p: &AlgebraPresentation, q: &Ideal) -> Result<Ideal, PresentationError> {
    let q = q.map_by_name(p.ring())?;
    let sum = crate::groebner::ideal_sum(&q, p.relations())?;
    let keep: Vec<usize> = (0..p.base_vars().len()).collect();
    Ok(eliminate(&sum, &keep)?)
}

/// Outcome of the Tor₁ computation over the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tor1Result {
    pub vanishes: bool,
    /// A syzygy of the base variables over the algebra that does not come
    /// from the base, reduced; present when Tor₁ is nonzero.
    pub witness: Option<Vec<Polynomial>>,
}

/// `Tor₁^R(A, k)` for the base `R`, computed as the syzygies of the base
/// variables over `A` modulo those coming from `R`.
pub fn tor1_over_base(a: &AlgebraPresentation) -> Result<Tor1Result, PresentationError> {
    let base = match a.base() {
        BaseDescriptor::PrimeField(_) => return Ok(Tor1Result { vanishes: true, witness: None }),
        BaseDescriptor::Algebra(r) => r,
    };
    let s = base.all_vars().len();
    if s == 0 {
        return Ok(Tor1Result { vanishes: true, witness: None });
    }
    let ring = a.ring();
    let syz_of_vars = |rels: &Ideal| -> Result<Vec<Vec<Polynomial>>, PresentationError> {
        let r = rels.ring();
        let mut gens: Vec<Vec<Polynomial>> = (0..s).map(|i| vec![r.var(i)]).collect();
        gens.extend(rels.gens().iter().map(|g| vec![g.clone()]));
        let m = FreeSubmodule::new(r, 1, gens)?;
        Ok(syzygies(&m).generators().iter().map(|v| v[..s].to_vec()).filter(|v| v.iter().any(|p| !p.is_zero())).collect())
    };
    let z_r = syz_of_vars(base.relations())?;
    let mut n_gens: Vec<Vec<Polynomial>> = Vec::new();
    for v in &z_r {
        n_gens.push(v.iter().map(|p| p.map_by_name(ring)).collect::<Result<Vec<_>, _>>()?);
    }
    for h in a.relations().gens() {
        for i in 0..s {
            let mut v = vec![ring.zero(); s];
            v[i] = h.clone();
            n_gens.push(v);
        }
    }
    let n_basis = FreeSubmodule::new(ring, s, n_gens)?.groebner();
    let z_a = syz_of_vars(a.relations())?;
    for z in z_a {
        let nf = n_basis.normal_form(&z);
        if nf.iter().any(|p| !p.is_zero()) {
            return Ok(Tor1Result { vanishes: false, witness: Some(nf) });
        }
    }
    Ok(Tor1Result { vanishes: true, witness: None })
}

/// The strongest available flatness certificate for `a` over its base.
pub fn resolve_certificate(a: &AlgebraPresentation) -> Result<FlatnessCertificate, PresentationError> {
    let base = match a.base() {
        BaseDescriptor::PrimeField(_) => return Ok(FlatnessCertificate::FieldBase),
        BaseDescriptor::Algebra(r) => r,
    };
    let extended = base.relations().map_by_name(a.ring())?;
    let base_ext = extended.groebner();
    let own = a.relations().groebner();
    let polynomial = a.relations().gens().iter().all(|g| base_ext.contains(g))
        && extended.gens().iter().all(|g| own.contains(g));
    if polynomial {
        return Ok(FlatnessCertificate::PolynomialExtension);
    }
    if a.mode() != Mode::Affine && tor1_over_base(a)?.vanishes {
        return Ok(FlatnessCertificate::Tor1Vanishes);
    }
    if a.flat_asserted() {
        return Ok(FlatnessCertificate::UserAsserted);
    }
    Err(PresentationError::CertificateMissing(a.name().to_string()))
}

/// `A / n A` for the maximal ideal `n` of the base: the base variables
/// are set to zero. The result lives over the prime field.
pub fn fiber(a: &AlgebraPresentation) -> Result<AlgebraPresentation, PresentationError> {
    let s = a.base_vars().len();
    let ring = PolyRing::new(a.field(), a.vars().to_vec(), MonomialOrder::Grevlex);
    let gens = a
        .relations()
        .gens()
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .filter(|(_, m)| m.exps()[..s].iter().all(|e| *e == 0))
                .map(|(c, m)| (c.clone(), Monomial::new(m.exps()[s..].iter().copied())))
                .collect();
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    AlgebraPresentation::from_ideal(
        &format!("{}_fiber", a.name()),
        BaseDescriptor::PrimeField(a.field()),
        a.vars(),
        Ideal::new(&ring, gens)?,
        a.mode(),
    )
}

/// Krull dimension of `k[vars] / (I + p)`.
fn quotient_dim(ideal: &Ideal) -> Result<usize, PresentationError> {
    let gb = ideal.groebner();
    if gb.is_unit() {
        return Ok(0);
    }
    Ok(krull_dim_monomial(&gb.lead_ideal())?)
}

/// Residue transcendence degree of `A` at its asserted prime (the ideal of
/// all variables when none is given) over the base.
fn residue_trdeg(a: &AlgebraPresentation) -> Result<usize, PresentationError> {
    let ring = a.ring();
    let prime = match a.prime() {
        Some(p) => p.clone(),
        None => Ideal::maximal(ring),
    };
    let total = crate::groebner::ideal_sum(&prime, a.relations())?;
    let top = quotient_dim(&total)?;
    let below = if a.base_vars().is_empty() { 0 } else { quotient_dim(&contract_to_base(a, &prime)?)? };
    Ok(top.saturating_sub(below))
}

/// Minimum of the residue transcendence degrees of `a` and `b` at their
/// asserted primes. Primality is not checked.
pub fn fiber_dim(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<usize, PresentationError> {
    Ok(residue_trdeg(a)?.min(residue_trdeg(b)?))
}
