//! Local invariants of graded and local (Artinian) algebras at the ideal of
//! all variables.

mod extnat;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{
    betti_numbers, colon, colon_element, hilbert_series, ideal_product, krull_dim_monomial, BettiTable, GroebnerError,
    HilbertSeries, Ideal,
};
use crate::poly::{Field, PolyRing, Polynomial};
use crate::presentation::{minimalize, resolve_certificate, AlgebraPresentation, FlatnessCertificate, LocalAlgebra, Mode, PresentationError};

pub use extnat::ExtNat;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_1e55;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantConfig {
    pub seed: u64,
    /// Random linear forms tried per element of a regular sequence.
    pub retries: usize,
}

impl Default for InvariantConfig {
    fn default() -> Self {
        InvariantConfig { seed: DEFAULT_SEED, retries: 64 }
    }
}

impl InvariantConfig {
    pub fn with_seed(seed: u64) -> Self {
        InvariantConfig { seed, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("no regular linear form found for element {index} of {depth} after {tries} draws; try a larger prime field")]
    RegularSequenceNotFound { index: usize, depth: usize, tries: usize },
    #[error("complete intersection defect came out negative ({mu} - {embdim} + {dim})")]
    NegativeDefect { mu: usize, embdim: usize, dim: usize },
    #[error("inconsistent report: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub cm: bool,
    pub gorenstein: bool,
    pub ci: bool,
    pub regular: bool,
    pub aci: bool,
}

/// The invariant vector of a local algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim: usize,
    pub depth: usize,
    pub codepth: usize,
    pub embdim: usize,
    pub codim: usize,
    pub mu: usize,
    pub epsilon2: usize,
    pub cid: usize,
    #[serde(rename = "type")]
    pub type_: usize,
    pub idd: ExtNat,
    pub flags: Flags,
    pub flat_certificate: Option<FlatnessCertificate>,
}

impl InvariantReport {
    /// Assembles a report from the primary values, deriving the rest.
    pub fn from_parts(
        dim: usize,
        depth: usize,
        embdim: usize,
        mu: usize,
        type_: usize,
        flat_certificate: Option<FlatnessCertificate>,
    ) -> Result<Self, InvariantError> {
        if depth > dim {
            return Err(InvariantError::Inconsistent(format!("depth {depth} exceeds dim {dim}")));
        }
        if dim > embdim {
            return Err(InvariantError::Inconsistent(format!("dim {dim} exceeds embdim {embdim}")));
        }
        if mu + dim < embdim {
            return Err(InvariantError::NegativeDefect { mu, embdim, dim });
        }
        let codepth = dim - depth;
        let codim = embdim - dim;
        let cid = mu + dim - embdim;
        let cm = codepth == 0;
        let gorenstein = cm && type_ == 1;
        let flags = Flags { cm, gorenstein, ci: cid == 0, regular: codim == 0, aci: cid == 1 };
        let idd = if gorenstein { ExtNat::Finite(depth as u64) } else { ExtNat::Infinite };
        let report = InvariantReport {
            dim,
            depth,
            codepth,
            embdim,
            codim,
            mu,
            epsilon2: mu,
            cid,
            type_,
            idd,
            flags,
            flat_certificate,
        };
        report.check_identities().map_err(InvariantError::Inconsistent)?;
        Ok(report)
    }

    /// The defining identities between the fields; lists every violation.
    pub fn check_identities(&self) -> Result<(), String> {
        let mut bad = Vec::new();
        if self.depth > self.dim || self.codepth != self.dim - self.depth {
            bad.push("codepth = dim - depth");
        }
        if self.dim > self.embdim || self.codim != self.embdim - self.dim {
            bad.push("codim = embdim - dim");
        }
        if self.epsilon2 != self.cid + self.codim || self.epsilon2 != self.mu {
            bad.push("epsilon2 = cid + codim = mu");
        }
        let f = &self.flags;
        if f.cm != (self.codepth == 0)
            || f.gorenstein != (f.cm && self.type_ == 1)
            || f.ci != (self.cid == 0)
            || f.regular != (self.codim == 0)
            || f.aci != (self.cid == 1)
        {
            bad.push("flag definitions");
        }
        if (f.regular && !f.ci) || (f.ci && !f.gorenstein) || (f.gorenstein && !f.cm) {
            bad.push("regular => ci => gorenstein => cm");
        }
        let idd = if f.gorenstein { ExtNat::Finite(self.depth as u64) } else { ExtNat::Infinite };
        if self.idd != idd {
            bad.push("idd = depth iff gorenstein");
        }
        if self.type_ == 0 {
            bad.push("type >= 1");
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad.join(", "))
        }
    }
}

/// Intermediate data shared by the invariant computations.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub minimal: AlgebraPresentation,
    pub dim: usize,
    pub embdim: usize,
    pub mu: usize,
    pub depth: usize,
    /// Minimal Betti table over the minimal ambient ring (graded mode).
    pub betti: Option<BettiTable>,
}

/// Certificate for the type computation: the regular sequence that was
/// cut and the socle dimension of the quotient.
#[derive(Clone, Debug)]
pub struct TypeCertificate {
    pub sequence: Vec<Polynomial>,
    pub socle_dim: usize,
}

fn quotient_dimension(ideal: &Ideal) -> Option<u64> {
    ideal.groebner().quotient_dimension()
}

fn hilbert_of(ideal: &Ideal) -> Result<HilbertSeries, GroebnerError> {
    hilbert_series(&ideal.groebner().lead_ideal())
}

/// `dim_k (big / small)` for ideals `small ⊆ big` of finite colength
/// difference, read off the Hilbert series.
fn length_between(small: &Ideal, big: &Ideal) -> Result<usize, InvariantError> {
    let hs = hilbert_of(small)?;
    let hb = hilbert_of(big)?;
    let n = hs.nvars();
    let len = hs.numerator().len().max(hb.numerator().len());
    let mut diff: Vec<i64> = (0..len)
        .map(|i| hs.numerator().get(i).copied().unwrap_or(0) - hb.numerator().get(i).copied().unwrap_or(0))
        .collect();
    for _ in 0..n {
        if diff.iter().sum::<i64>() != 0 {
            return Err(InvariantError::Inconsistent("colon quotient is not of finite length".into()));
        }
        let mut acc = 0;
        let mut q = Vec::with_capacity(diff.len());
        for c in &diff[..diff.len().saturating_sub(1)] {
            acc += c;
            q.push(acc);
        }
        diff = q;
    }
    let total: i64 = diff.iter().sum();
    usize::try_from(total).map_err(|_| InvariantError::Inconsistent("negative length".into()))
}

/// `dim_k (J : m) / J`.
pub fn socle_dimension(j: &Ideal) -> Result<usize, InvariantError> {
    let m = Ideal::maximal(j.ring());
    let c = colon(j, &m)?;
    length_between(j, &c)
}

fn random_linear_form(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Polynomial {
    let field = ring.field();
    let mut f = ring.zero();
    for i in 0..ring.nvars() {
        let c = match field {
            Field::Rational => field.from_i64(rng.gen_range(-5..=5)),
            Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
        };
        if !c.is_zero() {
            f = &f + &ring.var(i).scale(&c);
        }
    }
    f
}

/// `(j : θ) = j`.
pub fn is_nonzerodivisor(j: &Ideal, theta: &Polynomial) -> Result<bool, InvariantError> {
    let c = colon_element(j, theta)?;
    let gb = j.groebner();
    Ok(c.gens().iter().all(|g| gb.contains(g)))
}

fn mode_check(a: &LocalAlgebra) -> Result<(), InvariantError> {
    match a.mode() {
        Mode::Affine => Err(PresentationError::AffineMode(a.name().to_string()).into()),
        _ => Ok(()),
    }
}

/// Minimal presentation, dimension, μ and depth.
pub fn analyze(a: &LocalAlgebra) -> Result<Analysis, InvariantError> {
    mode_check(a)?;
    let minimal = minimalize(a.presentation())?;
    let j = minimal.relations();
    let embdim = minimal.all_vars().len();
    let dim = krull_dim_monomial(&j.groebner().lead_ideal())?;
    match a.mode() {
        Mode::Graded => {
            let mu = j.gens().len();
            let betti = betti_numbers(j)?;
            let pd = betti.projective_dimension().unwrap_or(0);
            let depth = embdim.checked_sub(pd).ok_or_else(|| {
                InvariantError::Inconsistent(format!("projective dimension {pd} exceeds {embdim} variables"))
            })?;
            Ok(Analysis { minimal, dim, embdim, mu, depth, betti: Some(betti) })
        }
        _ => {
            let mj = ideal_product(&Ideal::maximal(j.ring()), j)?;
            let mu = match (quotient_dimension(&mj), quotient_dimension(j)) {
                (Some(a), Some(b)) => (a - b) as usize,
                _ => return Err(InvariantError::Inconsistent("local algebra is not Artinian".into())),
            };
            Ok(Analysis { minimal, dim, embdim, mu, depth: 0, betti: None })
        }
    }
}

/// Cuts a regular sequence of `depth` random linear forms and measures
/// the socle of the quotient.
pub fn type_certificate(an: &Analysis, cfg: &InvariantConfig) -> Result<TypeCertificate, InvariantError> {
    let mut j = an.minimal.relations().clone();
    let ring = Arc::clone(j.ring());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sequence = Vec::with_capacity(an.depth);
    for index in 0..an.depth {
        let mut found = None;
        for _ in 0..cfg.retries {
            let theta = random_linear_form(&ring, &mut rng);
            if theta.is_zero() {
                continue;
            }
            if is_nonzerodivisor(&j, &theta)? {
                found = Some(theta);
                break;
            }
        }
        let theta = found.ok_or(InvariantError::RegularSequenceNotFound { index, depth: an.depth, tries: cfg.retries })?;
        j = j.with_generator(theta.clone());
        sequence.push(theta);
    }
    let socle_dim = socle_dimension(&j)?;
    Ok(TypeCertificate { sequence, socle_dim })
}

pub fn dim(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    mode_check(a)?;
    Ok(krull_dim_monomial(&a.groebner().lead_ideal())?)
}

pub fn embdim(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    mode_check(a)?;
    Ok(minimalize(a.presentation())?.all_vars().len())
}

pub fn mu_relations(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    Ok(analyze(a)?.mu)
}

pub fn depth(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    Ok(analyze(a)?.depth)
}

pub fn type_of(a: &LocalAlgebra, cfg: &InvariantConfig) -> Result<usize, InvariantError> {
    Ok(type_certificate(&analyze(a)?, cfg)?.socle_dim)
}

pub fn cid(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    let an = analyze(a)?;
    (an.mu + an.dim)
        .checked_sub(an.embdim)
        .ok_or(InvariantError::NegativeDefect { mu: an.mu, embdim: an.embdim, dim: an.dim })
}

pub fn epsilon2(a: &LocalAlgebra) -> Result<usize, InvariantError> {
    mu_relations(a)
}

pub fn idd(a: &LocalAlgebra, cfg: &InvariantConfig) -> Result<ExtNat, InvariantError> {
    Ok(report(a, cfg)?.idd)
}

/// Full report. Checks the report identities, and for Cohen–Macaulay
/// graded algebras that the type equals the last Betti number.
pub fn report(a: &LocalAlgebra, cfg: &InvariantConfig) -> Result<InvariantReport, InvariantError> {
    let an = analyze(a)?;
    let cert = type_certificate(&an, cfg)?;
    if cert.socle_dim == 0 {
        return Err(InvariantError::Inconsistent("socle vanishes after cutting a maximal regular sequence".into()));
    }
    if an.depth == an.dim {
        if let Some(b) = &an.betti {
            let pd = b.projective_dimension().unwrap_or(0);
            if b.total(pd) != cert.socle_dim {
                return Err(InvariantError::Inconsistent(format!(
                    "type {} differs from last Betti number {}",
                    cert.socle_dim,
                    b.total(pd)
                )));
            }
        }
    }
    let certificate = resolve_certificate(a.presentation()).ok();
    InvariantReport::from_parts(an.dim, an.depth, an.embdim, an.mu, cert.socle_dim, certificate)
}

#[cfg(test)]
mod tests;
