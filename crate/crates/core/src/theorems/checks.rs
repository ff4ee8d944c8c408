use serde::Serialize;

use crate::groebner::Ideal;
use crate::invariants::{ExtNat, InvariantReport};
use crate::presentation::{contract_to_base, tensor_is_trivial, tensor_product, AlgebraPresentation};

use super::{
    CheckValue, FlatPair, OperandSnapshot, Operands, SubCheck, TensorSetup, TheoremCheckResult, TheoremError,
};

fn additive(
    theorem: &str,
    s: &TensorSetup,
    f: impl Fn(&InvariantReport) -> usize,
    fiber_term: usize,
) -> TheoremCheckResult {
    let lhs = f(s.product_report()) as i64;
    let rhs = f(s.a_report()) as i64 + f(s.b_report()) as i64 - f(s.r_report()) as i64 + fiber_term as i64;
    TheoremCheckResult::new(theorem, CheckValue::Int(lhs), CheckValue::Int(rhs), s.operands(), s.seed())
}

/// `dim(A⊗B) = dim A + dim B − dim R` (plus the fiber term).
pub fn check_dim(s: &TensorSetup) -> TheoremCheckResult {
    additive("dim", s, |r| r.dim, s.fiber_dim)
}

/// `depth(A⊗B) = depth A + depth B − depth R` (plus the fiber term).
pub fn check_depth(s: &TensorSetup) -> TheoremCheckResult {
    additive("depth", s, |r| r.depth, s.fiber_dim)
}

/// `codepth(A⊗B) = codepth A + codepth B − codepth R`, and the fiber form
/// `codepth(F/nF) + codepth(O)` for the flat factor `F`.
pub fn check_codepth(s: &TensorSetup) -> TheoremCheckResult {
    let (_, fib, other) = s.flat_reports();
    let fiber_form = SubCheck::new("codepth.fiber_form", s.product_report().codepth, fib.codepth + other.codepth);
    additive("codepth", s, |r| r.codepth, 0).with_subchecks(vec![fiber_form])
}

/// `idd(A⊗B) = idd(F/nF) + idd(O)` (plus the fiber term), with `∞ + n = ∞`.
pub fn check_idd(s: &TensorSetup) -> TheoremCheckResult {
    let (_, fib, other) = s.flat_reports();
    let rhs = fib.idd + other.idd + ExtNat::Finite(s.fiber_dim as u64);
    TheoremCheckResult::new("idd", s.product_report().idd, rhs, s.operands(), s.seed())
}

/// `type(A⊗B) = type A · type B / type R`, and the fiber form
/// `type(F/nF) · type(O)`.
pub fn check_type(s: &TensorSetup) -> Result<TheoremCheckResult, TheoremError> {
    let numerator = s.a_report().type_ * s.b_report().type_;
    let denominator = s.r_report().type_;
    if !numerator.is_multiple_of(denominator) {
        return Err(TheoremError::DivisibilityViolation { numerator, denominator });
    }
    let (_, fib, other) = s.flat_reports();
    let lhs = s.product_report().type_;
    let fiber_form = SubCheck::new("type.fiber_form", lhs, fib.type_ * other.type_);
    Ok(TheoremCheckResult::new("type", lhs, numerator / denominator, s.operands(), s.seed()).with_subchecks(vec![fiber_form]))
}

fn flat_operands(p: &FlatPair) -> Operands {
    Operands { r: Some(p.base.clone()), a: p.algebra.clone(), b: Some(p.fiber.clone()) }
}

fn reports(p: &FlatPair) -> (&InvariantReport, &InvariantReport, &InvariantReport) {
    (p.base.report(), p.algebra.report(), p.fiber.report())
}

/// `type A = type R · type(A / m_R A)`, and type one on the left exactly
/// when it is on both factors of the right.
pub fn check_flat_type(p: &FlatPair) -> TheoremCheckResult {
    let (r, a, f) = reports(p);
    let type_one = SubCheck::new("flat.type_one", a.type_ == 1, r.type_ == 1 && f.type_ == 1);
    TheoremCheckResult::new("flat.type", a.type_, r.type_ * f.type_, flat_operands(p), p.seed).with_subchecks(vec![type_one])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaKind {
    Dim,
    Depth,
    Codepth,
    Cid,
    Idd,
}

impl LambdaKind {
    pub const ALL: [LambdaKind; 5] = [LambdaKind::Dim, LambdaKind::Depth, LambdaKind::Codepth, LambdaKind::Cid, LambdaKind::Idd];

    pub fn name(&self) -> &'static str {
        match self {
            LambdaKind::Dim => "dim",
            LambdaKind::Depth => "depth",
            LambdaKind::Codepth => "codepth",
            LambdaKind::Cid => "cid",
            LambdaKind::Idd => "idd",
        }
    }

    pub fn eval(&self, r: &InvariantReport) -> ExtNat {
        match self {
            LambdaKind::Dim => ExtNat::Finite(r.dim as u64),
            LambdaKind::Depth => ExtNat::Finite(r.depth as u64),
            LambdaKind::Codepth => ExtNat::Finite(r.codepth as u64),
            LambdaKind::Cid => ExtNat::Finite(r.cid as u64),
            LambdaKind::Idd => r.idd,
        }
    }
}

/// `λ(A) = λ(R) + λ(A / m_R A)` for a flat algebra.
pub fn check_flat_lambda(kind: LambdaKind, p: &FlatPair) -> TheoremCheckResult {
    let (r, a, f) = reports(p);
    TheoremCheckResult::new(&format!("flat.{}", kind.name()), kind.eval(a), kind.eval(r) + kind.eval(f), flat_operands(p), p.seed)
}

/// `cid(A⊗B) = cid A + cid B − cid R`, with the complete intersection and
/// almost complete intersection classifications as subchecks.
pub fn check_cid(s: &TensorSetup) -> TheoremCheckResult {
    let (flat, fib, other) = s.flat_reports();
    let (r, a, b, t) = (s.r_report(), s.a_report(), s.b_report(), s.product_report());
    let ci = |x: &InvariantReport| x.flags.ci;
    let aci = |x: &InvariantReport| x.flags.aci;
    let mut subs = vec![
        SubCheck::new("cid.fiber_form", t.cid, fib.cid + other.cid),
        SubCheck::new("ci.fiber", ci(t), ci(fib) && ci(other)),
        SubCheck::new("ci.defect", ci(t), ci(other) && flat.cid == r.cid),
        SubCheck::new("aci.fiber", aci(t), (ci(fib) && aci(other)) || (aci(fib) && ci(other))),
    ];
    if s.flat_side == super::FlatSide::Both {
        subs.push(SubCheck::new("ci.both_flat", ci(t), ci(a) && ci(b)));
        subs.push(SubCheck::new(
            "aci.both_flat",
            aci(t),
            (aci(r) && aci(a) && aci(b)) || (ci(r) && ci(a) && aci(b)) || (ci(r) && ci(b) && aci(a)),
        ));
    }
    additive("cid", s, |x| x.cid, 0).with_subchecks(subs)
}

/// `codim(A⊗B) = codim A + codim B − codim R` when a factor is formally
/// smooth over the base or the base is a prime field; the embedding
/// dimension identity is a subcheck.
pub fn check_codim(s: &TensorSetup) -> Result<TheoremCheckResult, TheoremError> {
    if s.smooth_side().is_none() {
        return Err(TheoremError::SmoothnessMissing(s.name.clone()));
    }
    let (r, a, b, t) = (s.r_report(), s.a_report(), s.b_report(), s.product_report());
    let embdim_rhs = a.embdim as i64 + b.embdim as i64 - r.embdim as i64 + s.fiber_dim as i64;
    let embdim = SubCheck::new("embdim", CheckValue::Int(t.embdim as i64), CheckValue::Int(embdim_rhs));
    let eps_rhs = a.epsilon2 as i64 + b.epsilon2 as i64 - r.epsilon2 as i64;
    let eps = SubCheck::new("epsilon2", CheckValue::Int(t.epsilon2 as i64), CheckValue::Int(eps_rhs));
    Ok(additive("codim", s, |x| x.codim, 0).with_subchecks(vec![embdim, eps]))
}

fn equivalence(s: &TensorSetup, theorem: &str, lhs: bool, rhs: bool, subs: Vec<SubCheck>) -> TheoremCheckResult {
    TheoremCheckResult::new(theorem, lhs, rhs, s.operands(), s.seed()).with_subchecks(subs)
}

/// Biconditionals for Cohen–Macaulay, Gorenstein, type one and regular.
pub fn check_equivalences(s: &TensorSetup) -> Vec<TheoremCheckResult> {
    let (flat, fib, other) = s.flat_reports();
    let (r, a, b, t) = (s.r_report(), s.a_report(), s.b_report(), s.product_report());
    let both = s.flat_side == super::FlatSide::Both;
    let mut out = Vec::new();

    let mut subs = vec![SubCheck::new("cm.codepth", t.flags.cm, other.flags.cm && flat.codepth == r.codepth)];
    if both {
        subs.push(SubCheck::new("cm.both_flat", t.flags.cm, a.flags.cm && b.flags.cm));
    }
    if r.flags.cm {
        subs.push(SubCheck::new("cm.cm_base", t.flags.cm, a.flags.cm && b.flags.cm));
    }
    out.push(equivalence(s, "equiv.cm", t.flags.cm, fib.flags.cm && other.flags.cm, subs));

    let mut subs = Vec::new();
    if r.flags.gorenstein {
        subs.push(SubCheck::new("gorenstein.gorenstein_base", t.flags.gorenstein, a.flags.gorenstein && b.flags.gorenstein));
    }
    out.push(equivalence(s, "equiv.gorenstein", t.flags.gorenstein, fib.flags.gorenstein && other.flags.gorenstein, subs));

    let mut subs = Vec::new();
    if s.base.is_field() {
        subs.push(SubCheck::new("type_one.field_base", t.type_ == 1, a.type_ == 1 && b.type_ == 1));
    }
    out.push(equivalence(s, "equiv.type_one", t.type_ == 1, fib.type_ == 1 && other.type_ == 1, subs));

    if let Some(side) = s.smooth_side() {
        let (smooth, smooth_fiber, rest) = if side == 0 {
            (a, s.fibers[0].as_ref().expect("flat fiber").report(), b)
        } else {
            (b, s.fibers[1].as_ref().expect("flat fiber").report(), a)
        };
        let subs = vec![
            SubCheck::new("regular.codim", t.flags.regular, rest.flags.regular && smooth.codim == r.codim),
            SubCheck::implication("regular.factors", a.flags.regular && b.flags.regular, t.flags.regular),
        ];
        let mut out_reg = equivalence(s, "equiv.regular", t.flags.regular, smooth_fiber.flags.regular && rest.flags.regular, subs);
        if s.base.is_field() {
            out_reg.subchecks.push(SubCheck::new("regular.field_base", t.flags.regular, a.flags.regular && b.flags.regular));
        }
        out.push(out_reg);
    }
    out
}

/// Nontriviality of `A⊗B` against equality of the contractions of the
/// given primes (the relation ideals when none are given).
pub fn check_nontrivial(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    prime_a: Option<&Ideal>,
    prime_b: Option<&Ideal>,
    seed: u64,
) -> Result<TheoremCheckResult, TheoremError> {
    let product = tensor_product(a, b)?;
    let nontrivial = !tensor_is_trivial(&product);
    let pa = prime_a.or(a.prime()).unwrap_or(a.relations());
    let pb = prime_b.or(b.prime()).unwrap_or(b.relations());
    let ca = contract_to_base(a, pa)?;
    let cb = contract_to_base(b, pb)?;
    let cb = cb.map_by_name(ca.ring()).map_err(crate::presentation::PresentationError::from)?;
    let equal = ca.same_ideal(&cb);
    let operands = Operands {
        r: (!a.base().is_field()).then(|| OperandSnapshot::new(&a.base().as_presentation(), None)),
        a: OperandSnapshot::new(a, None),
        b: Some(OperandSnapshot::new(b, None)),
    };
    Ok(TheoremCheckResult::new("nontrivial", nontrivial, equal, operands, seed))
}
