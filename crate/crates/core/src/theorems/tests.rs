use std::sync::Arc;

use super::*;
use crate::poly::Field;
use crate::presentation::Mode;

fn q(name: &str, vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::over_field(name, Field::Rational, vars, rels, Mode::Graded).unwrap()
}

fn over(base: &Arc<AlgebraPresentation>, name: &str, vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::new(name, BaseDescriptor::Algebra(Arc::clone(base)), vars, rels, Mode::Graded).unwrap()
}

fn base(vars: &[&str], rels: &[&str]) -> Arc<AlgebraPresentation> {
    Arc::new(q("R", vars, rels))
}

fn setup(a: &AlgebraPresentation, b: &AlgebraPresentation) -> TensorSetup {
    TensorSetup::new("s", a, b, &InvariantConfig::default()).unwrap()
}

fn sides(r: &TheoremCheckResult) -> (CheckValue, CheckValue) {
    assert!(r.all_pass(), "{r}");
    (r.lhs, r.rhs)
}

const I: fn(i64) -> CheckValue = CheckValue::Int;

#[test]
fn dim_examples() {
    assert_eq!(sides(&check_dim(&setup(&q("A", &["x"], &[]), &q("B", &["y"], &[])))), (I(2), I(2)));
    assert_eq!(sides(&check_dim(&setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &["u"], &["u^2"])))), (I(1), I(1)));
    let r = base(&["t"], &["t^2"]);
    assert_eq!(sides(&check_dim(&setup(&over(&r, "A", &["x"], &[]), &over(&r, "B", &[], &[])))), (I(1), I(1)));
}

#[test]
fn depth_and_codepth_examples() {
    let s = setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^2"]));
    assert_eq!(sides(&check_depth(&s)), (I(0), I(0)));
    let s = setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &["u"], &[]));
    assert_eq!(sides(&check_depth(&s)), (I(1), I(1)));
    let r = base(&["s", "t"], &["s^2", "s*t"]);
    let s = setup(&over(&r, "A", &["x"], &[]), &over(&r, "B", &[], &[]));
    assert_eq!(s.certificates[0], Some(FlatnessCertificate::PolynomialExtension));
    assert_eq!(sides(&check_depth(&s)), (I(1), I(1)));
    assert_eq!(sides(&check_codepth(&s)), (I(1), I(1)));
    let s = setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &["u"], &["u^2"]));
    assert_eq!(sides(&check_codepth(&s)), (I(1), I(1)));
}

#[test]
fn idd_examples() {
    let s = setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^3"]));
    assert_eq!(sides(&check_idd(&s)), (I(0), I(0)));
    let s = setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &[], &[]));
    assert_eq!(sides(&check_idd(&s)), (CheckValue::Infinite, CheckValue::Infinite));
    let s = setup(&q("A", &["x"], &[]), &q("B", &["y"], &[]));
    assert_eq!(sides(&check_idd(&s)), (I(2), I(2)));
}

#[test]
fn type_examples() {
    let m = q("A", &["x", "y"], &["x^2", "x*y", "y^2"]);
    let s = setup(&m, &m.clone().with_name("B"));
    assert_eq!(sides(&check_type(&s).unwrap()), (I(4), I(4)));
    let r = base(&["s", "t"], &["s^2", "s*t", "t^2"]);
    let s = setup(&over(&r, "A", &["x"], &["x^2"]), &over(&r, "B", &[], &[]));
    assert_eq!(sides(&check_type(&s).unwrap()), (I(2), I(2)));
    let s = setup(&q("A", &["x"], &[]), &q("B", &["x"], &[]));
    assert_eq!(sides(&check_type(&s).unwrap()), (I(1), I(1)));
}

#[test]
fn flat_examples() {
    let cfg = InvariantConfig::default();
    let r = base(&["t"], &["t^2"]);
    let p = FlatPair::new(&over(&r, "A", &["x"], &["x^2"]), &cfg).unwrap();
    assert_eq!(sides(&check_flat_type(&p)), (I(1), I(1)));
    let p = FlatPair::new(&over(&r, "A", &["x"], &[]), &cfg).unwrap();
    assert_eq!(sides(&check_flat_lambda(LambdaKind::Dim, &p)), (I(1), I(1)));
    let r = base(&["s", "t"], &["s^2", "s*t", "t^2"]);
    let p = FlatPair::new(&over(&r, "A", &["x"], &[]), &cfg).unwrap();
    assert_eq!(sides(&check_flat_type(&p)), (I(2), I(2)));
    assert_eq!(sides(&check_flat_lambda(LambdaKind::Cid, &p)), (I(1), I(1)));
    let p = FlatPair::new(&q("A", &["x", "y"], &["x^2", "x*y"]), &cfg).unwrap();
    for k in LambdaKind::ALL {
        assert!(check_flat_lambda(k, &p).all_pass());
    }
    let p = FlatPair::new(&over(&r, "A", &[], &["s"]), &cfg);
    assert!(matches!(p, Err(TheoremError::CertificateMissing(_))));
}

#[test]
fn cid_examples() {
    let m = q("A", &["x", "y"], &["x^2", "x*y", "y^2"]);
    let s = setup(&m, &m.clone().with_name("B"));
    assert_eq!(sides(&check_cid(&s)), (I(2), I(2)));
    assert_eq!(s.product_report().mu, 6);
    let s = setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^3"]));
    assert_eq!(sides(&check_cid(&s)), (I(0), I(0)));
    let r = base(&["s", "t"], &["s^2", "s*t", "t^2"]);
    let s = setup(&over(&r, "A", &["x"], &[]), &over(&r, "B", &[], &[]));
    assert_eq!(sides(&check_cid(&s)), (I(1), I(1)));
}

#[test]
fn codim_examples() {
    let s = setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &["u"], &["u^3"]));
    assert_eq!(sides(&check_codim(&s).unwrap()), (I(2), I(2)));
    let r = base(&["s", "t"], &["s^2", "s*t"]);
    let s = setup(&over(&r, "A", &["x"], &[]), &over(&r, "B", &[], &[]));
    assert_eq!(sides(&check_codim(&s).unwrap()), (I(1), I(1)));
    let s = setup(&q("A", &["x"], &[]), &q("B", &["y"], &[]));
    assert_eq!(sides(&check_codim(&s).unwrap()), (I(0), I(0)));
    // x*t + ... is flat by Tor but not a polynomial extension
    let r = base(&["t"], &["t^2"]);
    let s = setup(&over(&r, "A", &["x"], &["x^2 - t*x"]), &over(&r, "B", &["y"], &["y^2"]));
    assert!(matches!(s.certificates[0], Some(FlatnessCertificate::Tor1Vanishes)));
    assert!(matches!(check_codim(&s), Err(TheoremError::SmoothnessMissing(_))));
}

#[test]
fn equivalence_examples() {
    let find = |v: Vec<TheoremCheckResult>, t: &str| v.into_iter().find(|r| r.theorem == t).unwrap();
    let s = setup(&q("A", &["x", "y"], &["x^2", "x*y"]), &q("B", &["u"], &[]));
    let cm = find(check_equivalences(&s), "equiv.cm");
    assert_eq!(sides(&cm), (CheckValue::Bool(false), CheckValue::Bool(false)));
    let s = setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^2"]));
    let g = find(check_equivalences(&s), "equiv.gorenstein");
    assert_eq!(sides(&g), (CheckValue::Bool(true), CheckValue::Bool(true)));
    let s = setup(&q("A", &["x"], &[]), &q("B", &["y"], &[]));
    let r = find(check_equivalences(&s), "equiv.regular");
    assert_eq!(sides(&r), (CheckValue::Bool(true), CheckValue::Bool(true)));
}

#[test]
fn nontrivial_examples() {
    let t = Arc::new(AlgebraPresentation::over_field("T", Field::Rational, &["t"], &[] as &[&str], Mode::Affine).unwrap());
    let aff = |name: &str, rels: &[&str]| {
        AlgebraPresentation::new(name, BaseDescriptor::Algebra(Arc::clone(&t)), &[] as &[&str], rels, Mode::Affine).unwrap()
    };
    let r = check_nontrivial(&aff("A", &["t"]), &aff("B", &["t - 1"]), None, None, 0).unwrap();
    assert_eq!(sides(&r), (CheckValue::Bool(false), CheckValue::Bool(false)));
    let r = check_nontrivial(&aff("A", &["t"]), &aff("B", &["t"]), None, None, 0).unwrap();
    assert_eq!(sides(&r), (CheckValue::Bool(true), CheckValue::Bool(true)));
    let r = check_nontrivial(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &[]), None, None, 0).unwrap();
    assert_eq!(sides(&r), (CheckValue::Bool(true), CheckValue::Bool(true)));
}

#[test]
fn suite_runs_in_order() {
    let r = base(&["t"], &["t^2"]);
    let setups = vec![
        setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^3"])),
        setup(&over(&r, "A", &["x"], &["x^2"]), &over(&r, "B", &["y"], &[])),
    ];
    let results = run_suite(&setups, TheoremFilter::All);
    assert_eq!(results.len(), 2);
    for (name, res) in &results {
        let res = res.as_ref().unwrap();
        assert!(res.iter().all(TheoremCheckResult::all_pass), "{name}");
        assert!(ReproBundle::from_results(&setups[0], res).is_none());
    }
    let flat = results[1].1.as_ref().unwrap().iter().filter(|r| r.theorem.starts_with("flat.")).count();
    assert_eq!(flat, 12);
}

#[test]
fn missing_certificate_is_reported() {
    let r = base(&["t"], &["t^2"]);
    let a = over(&r, "A", &[], &["t"]);
    assert!(matches!(TensorSetup::new("s", &a, &a.clone().with_name("B"), &InvariantConfig::default()), Err(TheoremError::CertificateMissing(_))));
}

#[test]
fn json_schema() {
    let s = setup(&q("A", &["x"], &["x^2"]), &q("B", &["y"], &["y^2"]));
    let v = serde_json::to_value(check_idd(&s)).unwrap();
    for k in ["theorem", "lhs", "rhs", "pass", "operands"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert!(v["operands"].get("A").is_some() && v["operands"].get("B").is_some());
}
