use super::*;
use crate::presentation::AlgebraPresentation;

fn local(vars: &[&str], rels: &[&str], mode: Mode) -> LocalAlgebra {
    AlgebraPresentation::over_field("A", Field::Rational, vars, rels, mode).unwrap().validate().unwrap()
}

fn graded(vars: &[&str], rels: &[&str]) -> LocalAlgebra {
    local(vars, rels, Mode::Graded)
}

fn rep(a: &LocalAlgebra) -> InvariantReport {
    report(a, &InvariantConfig::default()).unwrap()
}

#[test]
fn dim_examples() {
    assert_eq!(dim(&graded(&["x", "y"], &[])).unwrap(), 2);
    assert_eq!(dim(&graded(&["x", "y"], &["x^2", "x*y"])).unwrap(), 1);
    assert_eq!(dim(&graded(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap(), 0);
}

#[test]
fn embdim_and_mu_examples() {
    assert_eq!(embdim(&graded(&["x", "y"], &["x - y"])).unwrap(), 1);
    assert_eq!(embdim(&graded(&["x", "y"], &["x^2", "x*y"])).unwrap(), 2);
    assert_eq!(embdim(&graded(&["x"], &[])).unwrap(), 1);
    assert_eq!(mu_relations(&graded(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap(), 3);
    assert_eq!(mu_relations(&graded(&["x", "y"], &["x^2", "x^2 + x*y"])).unwrap(), 2);
    assert_eq!(mu_relations(&graded(&["x", "y"], &[])).unwrap(), 0);
}

#[test]
fn depth_examples() {
    assert_eq!(depth(&graded(&["x", "y"], &["x^2", "x*y"])).unwrap(), 0);
    assert_eq!(depth(&graded(&["x", "y"], &["x^2"])).unwrap(), 1);
    assert_eq!(depth(&graded(&["x", "y"], &[])).unwrap(), 2);
}

#[test]
fn type_examples() {
    let cfg = InvariantConfig::default();
    assert_eq!(type_of(&graded(&["x", "y"], &["x^2", "x*y", "y^2"]), &cfg).unwrap(), 2);
    assert_eq!(type_of(&graded(&["x"], &["x^3"]), &cfg).unwrap(), 1);
    assert_eq!(type_of(&graded(&["x", "y"], &[]), &cfg).unwrap(), 1);
}

#[test]
fn cid_epsilon_idd_examples() {
    let cfg = InvariantConfig::default();
    assert_eq!(cid(&graded(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap(), 1);
    assert_eq!(cid(&graded(&["x", "y"], &["x^2"])).unwrap(), 0);
    assert_eq!(cid(&graded(&["x", "y"], &["x^2", "x*y"])).unwrap(), 1);
    assert_eq!(epsilon2(&graded(&["x", "y"], &[])).unwrap(), 0);
    assert_eq!(epsilon2(&graded(&["x"], &["x^2"])).unwrap(), 1);
    assert_eq!(idd(&graded(&["x"], &["x^2"]), &cfg).unwrap(), ExtNat::Finite(0));
    assert_eq!(idd(&graded(&["x", "y"], &["x^2", "x*y"]), &cfg).unwrap(), ExtNat::Infinite);
    assert_eq!(idd(&graded(&["x", "y"], &[]), &cfg).unwrap(), ExtNat::Finite(2));
}

#[test]
fn report_examples() {
    let r = rep(&graded(&["x", "y"], &["x^2", "x*y", "y^2"]));
    assert_eq!(
        (r.dim, r.depth, r.codepth, r.embdim, r.codim, r.mu, r.epsilon2, r.cid, r.type_),
        (0, 0, 0, 2, 2, 3, 3, 1, 2)
    );
    assert_eq!(r.idd, ExtNat::Infinite);
    assert_eq!(r.flags, Flags { cm: true, gorenstein: false, ci: false, regular: false, aci: true });

    let r = rep(&graded(&["x"], &[]));
    assert_eq!(
        (r.dim, r.depth, r.codepth, r.embdim, r.codim, r.mu, r.epsilon2, r.cid, r.type_),
        (1, 1, 0, 1, 0, 0, 0, 0, 1)
    );
    assert_eq!(r.idd, ExtNat::Finite(1));
    assert!(r.flags.regular && r.flags.ci && r.flags.gorenstein && r.flags.cm);

    let r = rep(&graded(&["s", "t"], &["s^2", "s*t"]));
    assert_eq!(
        (r.dim, r.depth, r.codepth, r.embdim, r.codim, r.mu, r.epsilon2, r.cid, r.type_),
        (1, 0, 1, 2, 1, 2, 2, 1, 1)
    );
    assert_eq!(r.idd, ExtNat::Infinite);
    assert!(!r.flags.cm);
}

#[test]
fn local_mode_matches_graded() {
    let g = rep(&graded(&["x", "y"], &["x^2", "x*y", "y^2"]));
    let l = rep(&local(&["x", "y"], &["x^2", "x*y", "y^2"], Mode::Local));
    assert_eq!(g, l);
    // x = y^2 + y^3 makes this k[y]/(y^4)
    let l = rep(&local(&["x", "y"], &["x - y^2 - y^3", "y^4"], Mode::Local));
    assert_eq!((l.embdim, l.mu, l.type_, l.cid), (1, 1, 1, 0));
}

#[test]
fn regular_sequence_is_certified() {
    let a = graded(&["x", "y", "z"], &["x*y", "x*z"]);
    let an = analyze(&a).unwrap();
    let cert = type_certificate(&an, &InvariantConfig::default()).unwrap();
    assert_eq!(cert.sequence.len(), an.depth);
    assert!(cert.socle_dim > 0);
}

#[test]
fn affine_is_rejected() {
    let p = AlgebraPresentation::over_field("A", Field::Rational, &["x"], &["x - 1"], Mode::Affine).unwrap();
    assert!(p.validate().is_err());
}

#[test]
fn json_field_names() {
    let r = rep(&graded(&["x", "y"], &["x^2", "x*y"]));
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["type"], 1);
    assert_eq!(v["idd"], "inf");
    assert_eq!(v["flags"]["aci"], true);
}

#[test]
fn identities_catch_tampering() {
    let mut r = rep(&graded(&["x", "y"], &["x^2"]));
    assert!(r.check_identities().is_ok());
    r.idd = ExtNat::Infinite;
    assert!(r.check_identities().is_err());
}
