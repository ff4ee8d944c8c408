//! Tensor-product identities evaluated on concrete algebras over a common
//! base, localized at the ideals of all variables.

mod checks;
mod suite;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::invariants::{report, ExtNat, InvariantConfig, InvariantError, InvariantReport};
use crate::presentation::{
    fiber, fiber_dim, resolve_certificate, tensor_product, AlgebraPresentation, BaseDescriptor, FlatnessCertificate,
    LocalAlgebra, PresentationError,
};

pub use checks::{
    check_cid, check_codim, check_codepth, check_depth, check_dim, check_equivalences, check_flat_lambda,
    check_flat_type, check_idd, check_nontrivial, check_type, LambdaKind,
};
pub use suite::{run_checks, run_suite, ReproBundle, TheoremFilter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("no flatness certificate for `{0}`")]
    CertificateMissing(String),
    #[error("no smoothness certificate for either factor of `{0}`")]
    SmoothnessMissing(String),
    #[error("type {numerator} is not divisible by the base type {denominator}")]
    DivisibilityViolation { numerator: usize, denominator: usize },
    #[error("unknown theorem filter `{0}`")]
    UnknownFilter(String),
}

/// A value on either side of a checked identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckValue {
    Int(i64),
    Infinite,
    Bool(bool),
}

impl From<ExtNat> for CheckValue {
    fn from(v: ExtNat) -> Self {
        match v {
            ExtNat::Finite(n) => CheckValue::Int(n as i64),
            ExtNat::Infinite => CheckValue::Infinite,
        }
    }
}

impl From<usize> for CheckValue {
    fn from(v: usize) -> Self {
        CheckValue::Int(v as i64)
    }
}

impl From<bool> for CheckValue {
    fn from(v: bool) -> Self {
        CheckValue::Bool(v)
    }
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Int(n) => write!(f, "{n}"),
            CheckValue::Infinite => f.write_str("inf"),
            CheckValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl Serialize for CheckValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CheckValue::Int(n) => s.serialize_i64(*n),
            CheckValue::Infinite => s.serialize_str("inf"),
            CheckValue::Bool(b) => s.serialize_bool(*b),
        }
    }
}

/// An algebra as it appears in a result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperandSnapshot {
    pub name: String,
    pub presentation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<InvariantReport>,
}

impl OperandSnapshot {
    fn new(p: &AlgebraPresentation, report: Option<InvariantReport>) -> Self {
        OperandSnapshot { name: p.name().to_string(), presentation: p.to_string(), report }
    }

    pub fn report(&self) -> &InvariantReport {
        self.report.as_ref().expect("operand has a report")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Operands {
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<OperandSnapshot>,
    #[serde(rename = "A")]
    pub a: OperandSnapshot,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub b: Option<OperandSnapshot>,
}

/// A secondary comparison attached to a result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub lhs: CheckValue,
    pub rhs: CheckValue,
    pub pass: bool,
}

impl SubCheck {
    pub fn new(name: &str, lhs: impl Into<CheckValue>, rhs: impl Into<CheckValue>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        SubCheck { name: name.to_string(), lhs, rhs, pass: lhs == rhs }
    }

    /// `lhs ⇒ rhs`, recorded as `lhs = lhs ∧ rhs`.
    pub fn implication(name: &str, premise: bool, conclusion: bool) -> Self {
        SubCheck { name: name.to_string(), lhs: premise.into(), rhs: (premise && conclusion).into(), pass: !premise || conclusion }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheckResult {
    pub theorem: String,
    pub lhs: CheckValue,
    pub rhs: CheckValue,
    pub pass: bool,
    pub operands: Operands,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subchecks: Vec<SubCheck>,
}

/// Comparable content of a result, without operand names.
pub type Outcome = (String, CheckValue, CheckValue, bool, Vec<(String, CheckValue, CheckValue, bool)>);

impl TheoremCheckResult {
    pub fn new(theorem: &str, lhs: impl Into<CheckValue>, rhs: impl Into<CheckValue>, operands: Operands, seed: u64) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        TheoremCheckResult { theorem: theorem.to_string(), lhs, rhs, pass: lhs == rhs, operands, seed, subchecks: Vec::new() }
    }

    pub fn with_subchecks(mut self, subchecks: Vec<SubCheck>) -> Self {
        self.subchecks = subchecks;
        self
    }

    /// The main comparison and every subcheck hold.
    pub fn all_pass(&self) -> bool {
        self.pass && self.subchecks.iter().all(|s| s.pass)
    }

    pub fn outcome(&self) -> Outcome {
        (
            self.theorem.clone(),
            self.lhs,
            self.rhs,
            self.pass,
            self.subchecks.iter().map(|s| (s.name.clone(), s.lhs, s.rhs, s.pass)).collect(),
        )
    }
}

/// One line: `theorem: lhs X rhs Y PASS`, naming any failed subchecks.
impl fmt::Display for TheoremCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: lhs {} rhs {} {}", self.theorem, self.lhs, self.rhs, if self.all_pass() { "PASS" } else { "FAIL" })?;
        let failed: Vec<String> =
            self.subchecks.iter().filter(|s| !s.pass).map(|s| format!("{} (lhs {} rhs {})", s.name, s.lhs, s.rhs)).collect();
        if !failed.is_empty() {
            write!(f, " [failed: {}]", failed.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlatSide {
    A,
    B,
    Both,
}

/// An algebra over a non-field base together with its base and its fiber
/// over the maximal ideal of the base.
#[derive(Clone, Debug)]
pub struct FlatPair {
    pub certificate: FlatnessCertificate,
    pub base: OperandSnapshot,
    pub algebra: OperandSnapshot,
    pub fiber: OperandSnapshot,
    pub seed: u64,
}

impl FlatPair {
    pub fn new(a: &AlgebraPresentation, cfg: &InvariantConfig) -> Result<FlatPair, TheoremError> {
        let certificate = certificate_of(a)?.ok_or_else(|| TheoremError::CertificateMissing(a.name().to_string()))?;
        let base = a.base().as_presentation();
        let fib = fiber(a)?;
        Ok(FlatPair {
            certificate,
            base: OperandSnapshot::new(&base, Some(report(&base.validate()?, cfg)?)),
            algebra: OperandSnapshot::new(a, Some(report(&a.validate()?, cfg)?)),
            fiber: OperandSnapshot::new(&fib, Some(report(&fib.validate()?, cfg)?)),
            seed: cfg.seed,
        })
    }
}

fn certificate_of(a: &AlgebraPresentation) -> Result<Option<FlatnessCertificate>, TheoremError> {
    match resolve_certificate(a) {
        Ok(c) => Ok(Some(c)),
        Err(PresentationError::CertificateMissing(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Two algebras over a common base, their tensor product and all reports.
#[derive(Clone, Debug)]
pub struct TensorSetup {
    pub name: String,
    pub config: InvariantConfig,
    pub base: BaseDescriptor,
    pub a: LocalAlgebra,
    pub b: LocalAlgebra,
    pub certificates: [Option<FlatnessCertificate>; 2],
    pub flat_side: FlatSide,
    pub product: LocalAlgebra,
    /// Dimension of the fiber term; zero at the ideals of all variables.
    pub fiber_dim: usize,
    pub r: OperandSnapshot,
    pub a_snapshot: OperandSnapshot,
    pub b_snapshot: OperandSnapshot,
    pub product_snapshot: OperandSnapshot,
    /// `A / n A` and `B / n B` for the flat-certified sides.
    pub fibers: [Option<OperandSnapshot>; 2],
}

impl TensorSetup {
    pub fn new(
        name: &str,
        a: &AlgebraPresentation,
        b: &AlgebraPresentation,
        cfg: &InvariantConfig,
    ) -> Result<TensorSetup, TheoremError> {
        let product_p = tensor_product(a, b)?;
        let certificates = [certificate_of(a)?, certificate_of(b)?];
        let flat_side = match &certificates {
            [Some(_), Some(_)] => FlatSide::Both,
            [Some(_), None] => FlatSide::A,
            [None, Some(_)] => FlatSide::B,
            [None, None] => return Err(TheoremError::CertificateMissing(format!("{} and {}", a.name(), b.name()))),
        };
        let base_p = a.base().as_presentation();
        let la = a.validate()?;
        let lb = b.validate()?;
        let product = product_p.validate()?;
        let snap = |p: &AlgebraPresentation, l: &LocalAlgebra| -> Result<OperandSnapshot, TheoremError> {
            Ok(OperandSnapshot::new(p, Some(report(l, cfg)?)))
        };
        let a_snapshot = snap(a, &la)?;
        let b_snapshot = snap(b, &lb)?;
        let fiber_of = |p: &AlgebraPresentation, cert: &Option<FlatnessCertificate>, own: &OperandSnapshot| {
            if cert.is_none() {
                return Ok::<_, TheoremError>(None);
            }
            if p.base().is_field() {
                return Ok(Some(own.clone()));
            }
            let f = fiber(p)?;
            Ok(Some(snap(&f, &f.validate()?)?))
        };
        let fibers = [fiber_of(a, &certificates[0], &a_snapshot)?, fiber_of(b, &certificates[1], &b_snapshot)?];
        Ok(TensorSetup {
            name: name.to_string(),
            config: *cfg,
            base: a.base().clone(),
            r: snap(&base_p, &base_p.validate()?)?,
            product_snapshot: snap(&product_p, &product)?,
            fiber_dim: fiber_dim(a, b)?,
            a: la,
            b: lb,
            certificates,
            flat_side,
            product,
            a_snapshot,
            b_snapshot,
            fibers,
        })
    }

    pub fn operands(&self) -> Operands {
        Operands {
            r: (!self.base.is_field()).then(|| self.r.clone()),
            a: self.a_snapshot.clone(),
            b: Some(self.b_snapshot.clone()),
        }
    }

    pub fn seed(&self) -> u64 {
        self.config.seed
    }

    pub fn r_report(&self) -> &InvariantReport {
        self.r.report()
    }

    pub fn a_report(&self) -> &InvariantReport {
        self.a_snapshot.report()
    }

    pub fn b_report(&self) -> &InvariantReport {
        self.b_snapshot.report()
    }

    pub fn product_report(&self) -> &InvariantReport {
        self.product_snapshot.report()
    }

    /// Reports of the flat factor, its fiber, and the other factor. Side A
    /// is used when both are flat.
    pub fn flat_reports(&self) -> (&InvariantReport, &InvariantReport, &InvariantReport) {
        match self.flat_side {
            FlatSide::A | FlatSide::Both => {
                (self.a_report(), self.fibers[0].as_ref().expect("flat fiber").report(), self.b_report())
            }
            FlatSide::B => (self.b_report(), self.fibers[1].as_ref().expect("flat fiber").report(), self.a_report()),
        }
    }

    /// Flat pairs `(R, factor, fiber)` for every flat-certified factor over
    /// a non-field base.
    pub fn flat_pairs(&self) -> Vec<FlatPair> {
        if self.base.is_field() {
            return Vec::new();
        }
        let sides = [(&self.a_snapshot, &self.certificates[0], &self.fibers[0]), (&self.b_snapshot, &self.certificates[1], &self.fibers[1])];
        sides
            .into_iter()
            .filter_map(|(snap, cert, fib)| {
                Some(FlatPair {
                    certificate: (*cert)?,
                    base: self.r.clone(),
                    algebra: snap.clone(),
                    fiber: fib.clone()?,
                    seed: self.config.seed,
                })
            })
            .collect()
    }

    /// A factor carrying a formal smoothness certificate: a polynomial
    /// extension of the base, or any factor over a prime field.
    pub fn smooth_side(&self) -> Option<usize> {
        self.certificates
            .iter()
            .position(|c| matches!(c, Some(FlatnessCertificate::FieldBase | FlatnessCertificate::PolynomialExtension)))
    }
}

#[cfg(test)]
mod tests;
