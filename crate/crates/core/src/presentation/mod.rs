//! Finitely presented algebras over a prime field or over a base algebra,
//! and the operations on presentations: validation, minimal presentations,
//! tensor products, contraction to the base and flatness certificates.

mod file;
mod ops;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Field, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial};

pub use file::{parse_field, parse_presentation_file, render_presentation_file, PresentationFile};
pub use ops::{
    contract_to_base, fiber, fiber_dim, minimalize, resolve_certificate, tensor_is_trivial, tensor_product,
    tor1_over_base, Tor1Result,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("relation `{0}` is not homogeneous")]
    NonHomogeneousRelation(String),
    #[error("variable `{0}` is not nilpotent modulo the relations")]
    VariableNotNilpotent(String),
    #[error("base `{0}` does not have its prime field as residue field")]
    BaseResidueNotPrimeField(String),
    #[error("algebra `{0}` is in affine mode; invariants are only defined for graded or local algebras")]
    AffineMode(String),
    #[error("algebras are defined over different bases")]
    BaseMismatch,
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid variables: {0}")]
    InvalidVariables(String),
    #[error("no flatness certificate for `{0}` over its base")]
    CertificateMissing(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Standard graded: homogeneous relations, variables of degree one.
    Graded,
    /// Every variable nilpotent; the algebra is local and Artinian.
    Local,
    /// No constraint; only used for triviality and contraction questions.
    Affine,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graded => "graded",
            Mode::Local => "local",
            Mode::Affine => "affine",
        })
    }
}

/// What an algebra is defined over.
#[derive(Clone, Debug)]
pub enum BaseDescriptor {
    PrimeField(Field),
    Algebra(Arc<AlgebraPresentation>),
}

impl BaseDescriptor {
    pub fn field(&self) -> Field {
        match self {
            BaseDescriptor::PrimeField(f) => *f,
            BaseDescriptor::Algebra(a) => a.field(),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, BaseDescriptor::PrimeField(_))
    }

    pub fn vars(&self) -> &[String] {
        match self {
            BaseDescriptor::PrimeField(_) => &[],
            BaseDescriptor::Algebra(a) => a.all_vars(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            BaseDescriptor::PrimeField(f) => f.to_string(),
            BaseDescriptor::Algebra(a) => a.name().to_string(),
        }
    }

    /// The base as an algebra over its prime field.
    pub fn as_presentation(&self) -> AlgebraPresentation {
        match self {
            BaseDescriptor::PrimeField(f) => AlgebraPresentation::over_field(&f.to_string(), *f, &[] as &[&str], &[] as &[&str], Mode::Graded)
                .expect("field presentation"),
            BaseDescriptor::Algebra(a) => (**a).clone(),
        }
    }

    /// Same field, same variables, same relation ideal.
    pub fn same_as(&self, other: &BaseDescriptor) -> bool {
        match (self, other) {
            (BaseDescriptor::PrimeField(a), BaseDescriptor::PrimeField(b)) => a == b,
            (BaseDescriptor::Algebra(a), BaseDescriptor::Algebra(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.field() == b.field()
                        && a.all_vars() == b.all_vars()
                        && a.relations().same_ideal(&b.relations().reorder(a.ring().order())))
            }
            _ => false,
        }
    }
}

/// An algebra `k[base vars, own vars] / I` where `I` contains the base
/// relations. Base variables come first in the ring.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    name: String,
    base: BaseDescriptor,
    vars: Vec<String>,
    all_vars: Vec<String>,
    relations: Ideal,
    mode: Mode,
    prime: Option<Ideal>,
    flat_asserted: bool,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl AlgebraPresentation {
    /// Builds a presentation from relation strings; the base relations are
    /// added automatically.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(
        name: &str,
        base: BaseDescriptor,
        vars: &[S],
        relations: &[T],
        mode: Mode,
    ) -> Result<Self, PresentationError> {
        let ring = Self::ring_for(&base, vars)?;
        let rels = relations.iter().map(|r| ring.parse(r.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Self::from_ideal(name, base, vars, Ideal::new(&ring, rels)?, mode)
    }

    pub fn over_field<S: AsRef<str>, T: AsRef<str>>(
        name: &str,
        field: Field,
        vars: &[S],
        relations: &[T],
        mode: Mode,
    ) -> Result<Self, PresentationError> {
        Self::new(name, BaseDescriptor::PrimeField(field), vars, relations, mode)
    }

    /// The polynomial ring on base variables followed by `vars`.
    pub fn ring_for<S: AsRef<str>>(base: &BaseDescriptor, vars: &[S]) -> Result<Arc<PolyRing>, PresentationError> {
        let mut all: Vec<String> = base.vars().to_vec();
        let mut seen: HashSet<String> = all.iter().cloned().collect();
        for v in vars {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(PresentationError::InvalidVariables(format!("`{v}` is not an identifier")));
            }
            if !seen.insert(v.to_string()) {
                return Err(PresentationError::InvalidVariables(format!("`{v}` appears twice")));
            }
            all.push(v.to_string());
        }
        Ok(PolyRing::new(base.field(), all, MonomialOrder::Grevlex))
    }

    /// Builds a presentation from an ideal; its ring is matched to the
    /// presentation ring by variable names.
    pub fn from_ideal<S: AsRef<str>>(
        name: &str,
        base: BaseDescriptor,
        vars: &[S],
        relations: Ideal,
        mode: Mode,
    ) -> Result<Self, PresentationError> {
        let ring = Self::ring_for(&base, vars)?;
        if relations.ring().field() != ring.field() {
            return Err(PresentationError::BaseMismatch);
        }
        let mut ideal = relations.map_by_name(&ring)?;
        if let BaseDescriptor::Algebra(b) = &base {
            if b.field() != ring.field() {
                return Err(PresentationError::BaseMismatch);
            }
            let base_rels = b.relations().map_by_name(&ring)?;
            for g in base_rels.gens() {
                if !ideal.gens().contains(g) {
                    ideal = ideal.with_generator(g.clone());
                }
            }
        }
        Ok(AlgebraPresentation {
            name: name.to_string(),
            all_vars: ring.vars().to_vec(),
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            base,
            relations: ideal,
            mode,
            prime: None,
            flat_asserted: false,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &BaseDescriptor {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Variables introduced by this algebra (not the base's).
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn base_vars(&self) -> &[String] {
        self.base.vars()
    }

    pub fn all_vars(&self) -> &[String] {
        &self.all_vars
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.relations.ring()
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// User-asserted prime ideal, for contraction and fiber questions.
    pub fn prime(&self) -> Option<&Ideal> {
        self.prime.as_ref()
    }

    pub fn flat_asserted(&self) -> bool {
        self.flat_asserted
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_prime(mut self, prime: Ideal) -> Result<Self, PresentationError> {
        self.prime = Some(prime.map_by_name(self.ring())?);
        Ok(self)
    }

    pub fn with_flat_asserted(mut self, asserted: bool) -> Self {
        self.flat_asserted = asserted;
        self
    }

    /// Replaces the relation generators (same ring); base relations are kept.
    pub fn with_relations(&self, gens: Vec<Polynomial>) -> Result<Self, PresentationError> {
        let ideal = Ideal::new(self.ring(), gens)?;
        let mut out = Self::from_ideal(&self.name, self.base.clone(), &self.vars, ideal, self.mode)?;
        out.prime = self.prime.clone();
        out.flat_asserted = self.flat_asserted;
        Ok(out)
    }

    /// Renames own variables; names not in `map` are kept.
    pub fn rename_vars(&self, map: &[(&str, &str)]) -> Result<Self, PresentationError> {
        let rename = |v: &String| -> String {
            map.iter().find(|(from, _)| *from == v).map_or_else(|| v.clone(), |(_, to)| to.to_string())
        };
        let vars: Vec<String> = self.vars.iter().map(rename).collect();
        let target = Self::ring_for(&self.base, &vars)?;
        let index: Vec<usize> = (0..self.all_vars.len()).collect();
        let gens = self.relations.gens().iter().map(|g| g.map_into(&target, &index)).collect();
        let ideal = Ideal::new(&target, gens)?;
        let mut out = Self::from_ideal(&self.name, self.base.clone(), &vars, ideal, self.mode)?;
        if let Some(p) = &self.prime {
            out.prime = Some(p.map_into(&target, &index));
        }
        out.flat_asserted = self.flat_asserted;
        Ok(out)
    }

    /// The same algebra viewed over its prime field, all variables its own.
    pub fn flatten(&self) -> AlgebraPresentation {
        let mut out = AlgebraPresentation::from_ideal(
            &self.name,
            BaseDescriptor::PrimeField(self.field()),
            &self.all_vars,
            self.relations.clone(),
            self.mode,
        )
        .expect("same ring");
        out.prime = self.prime.clone();
        out
    }

    /// Checks the mode's structural constraint.
    pub fn validate(&self) -> Result<LocalAlgebra, PresentationError> {
        if let BaseDescriptor::Algebra(b) = &self.base {
            if !matches!(b.base, BaseDescriptor::PrimeField(_)) || !b.relations_in_maximal_ideal() {
                return Err(PresentationError::BaseResidueNotPrimeField(b.name.clone()));
            }
        }
        let gb = self.relations.groebner();
        match self.mode {
            Mode::Affine => return Err(PresentationError::AffineMode(self.name.clone())),
            Mode::Graded => {
                if let Some(g) = self.relations.gens().iter().find(|g| !g.is_homogeneous()) {
                    return Err(PresentationError::NonHomogeneousRelation(g.to_string()));
                }
                if gb.is_unit() {
                    return Err(PresentationError::BaseResidueNotPrimeField(self.name.clone()));
                }
            }
            Mode::Local => {
                if !self.relations_in_maximal_ideal() {
                    return Err(PresentationError::VariableNotNilpotent(
                        self.all_vars.first().cloned().unwrap_or_default(),
                    ));
                }
                let d = gb.quotient_dimension();
                let ring = self.ring();
                for (i, v) in self.all_vars.iter().enumerate() {
                    let nilpotent = match d {
                        None => false,
                        Some(d) => gb.contains(&ring.monomial(Monomial::var(ring.nvars(), i, d.max(1) as u32))),
                    };
                    if !nilpotent {
                        return Err(PresentationError::VariableNotNilpotent(v.clone()));
                    }
                }
            }
        }
        Ok(LocalAlgebra { presentation: self.clone(), gb })
    }

    fn relations_in_maximal_ideal(&self) -> bool {
        self.relations.gens().iter().all(|g| g.constant_term().is_zero())
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]/{}", self.field(), self.all_vars.join(","), self.relations)
    }
}

/// A validated graded or local algebra, localized at the ideal of all
/// variables.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    presentation: AlgebraPresentation,
    gb: GroebnerBasis,
}

impl LocalAlgebra {
    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn name(&self) -> &str {
        self.presentation.name()
    }

    pub fn mode(&self) -> Mode {
        self.presentation.mode
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.presentation.ring()
    }

    pub fn relations(&self) -> &Ideal {
        self.presentation.relations()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Vector-space dimension, when finite.
    pub fn vector_dimension(&self) -> Option<u64> {
        self.gb.quotient_dimension()
    }
}

/// Evidence that an algebra is flat over its base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatnessCertificate {
    FieldBase,
    PolynomialExtension,
    Tor1Vanishes,
    UserAsserted,
}

impl fmt::Display for FlatnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlatnessCertificate::FieldBase => "field_base",
            FlatnessCertificate::PolynomialExtension => "polynomial_extension",
            FlatnessCertificate::Tor1Vanishes => "tor1_vanishes",
            FlatnessCertificate::UserAsserted => "user_asserted",
        })
    }
}
