//! Curated tensor-product setups over ℚ and F_32003.

use std::sync::Arc;

use crate::poly::{Field, DEFAULT_PRIME};
use crate::presentation::{AlgebraPresentation, BaseDescriptor, Mode};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub a: AlgebraPresentation,
    pub b: AlgebraPresentation,
}

fn alg(base: &BaseDescriptor, name: &str, vars: &[&str], rels: &[&str], mode: Mode) -> AlgebraPresentation {
    AlgebraPresentation::new(name, base.clone(), vars, rels, mode).expect("corpus presentation")
}

fn graded(base: &BaseDescriptor, name: &str, vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
    alg(base, name, vars, rels, Mode::Graded)
}

fn field_label(f: Field) -> &'static str {
    match f {
        Field::Rational => "q",
        Field::Prime(_) => "p",
    }
}

/// Pairs over the prime field itself.
fn field_pairs(f: Field) -> Vec<(&'static str, AlgebraPresentation, AlgebraPresentation)> {
    let k = BaseDescriptor::PrimeField(f);
    let g = |name: &str, vars: &[&str], rels: &[&str]| graded(&k, name, vars, rels);
    let square = |name: &str, v: [&str; 2]| {
        let rels = [format!("{0}^2", v[0]), format!("{0}*{1}", v[0], v[1]), format!("{0}^2", v[1])];
        let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
        g(name, &v, &rels)
    };
    vec![
        ("regular_pair", g("A", &["x"], &[]), g("B", &["y"], &[])),
        ("noncm_hypersurface", g("A", &["x", "y"], &["x^2", "x*y"]), g("B", &["u"], &["u^2"])),
        ("gorenstein_pair", g("A", &["x"], &["x^2"]), g("B", &["y"], &["y^3"])),
        ("aci_square", square("A", ["x", "y"]), square("B", ["u", "v"])),
        ("noncm_regular", g("A", &["x", "y"], &["x^2", "x*y"]), g("B", &["u"], &[])),
        ("noncm_cubic", g("A", &["x", "y"], &["x^2", "x*y"]), g("B", &["u"], &["u^3"])),
        ("dual_numbers", g("A", &["x"], &["x^2"]), g("B", &["y"], &["y^2"])),
        ("ci_aci", g("A", &["x", "y"], &["x^2", "y^2"]), square("B", ["u", "v"])),
        ("node_dual", g("A", &["x", "y"], &["x*y"]), g("B", &["u"], &["u^2"])),
        ("type_three", g("A", &["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]), g("B", &["u"], &["u^2"])),
        (
            "gorenstein_nonci",
            g("A", &["x", "y", "z"], &["x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"]),
            g("B", &["u"], &[]),
        ),
        (
            "local_cusp",
            alg(&k, "A", &["x", "y"], &["x^2 - y^3", "x*y"], Mode::Local),
            alg(&k, "B", &["u", "w"], &["u - w^2", "w^3"], Mode::Local),
        ),
        ("line_noncm", g("A", &["x", "y"], &["x^2"]), g("B", &["u", "v"], &["u^2", "u*v"])),
        (
            "cubic_cone",
            g("A", &["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]),
            g("B", &["u"], &["u^2"]),
        ),
        ("field_factor", g("A", &["x", "y"], &["x^2", "x*y"]), g("B", &[], &[])),
        ("linear_relation", g("A", &["x", "y"], &["x - y", "y^3"]), g("B", &["u", "v"], &["u*v"])),
    ]
}

/// Pairs over the three non-field bases.
fn base_pairs(f: Field) -> Vec<(&'static str, AlgebraPresentation, AlgebraPresentation)> {
    let k = BaseDescriptor::PrimeField(f);
    let r1 = BaseDescriptor::Algebra(Arc::new(graded(&k, "R1", &["t"], &["t^2"])));
    let r2 = BaseDescriptor::Algebra(Arc::new(graded(&k, "R2", &["s", "t"], &["s^2", "s*t"])));
    let r3 = BaseDescriptor::Algebra(Arc::new(graded(&k, "R3", &["s", "t"], &["s^2", "s*t", "t^2"])));
    vec![
        ("r1_poly_base", graded(&r1, "A", &["x"], &[]), graded(&r1, "B", &[], &[])),
        ("r1_dual_poly", graded(&r1, "A", &["x"], &["x^2"]), graded(&r1, "B", &["y"], &[])),
        ("r1_tor_flat", graded(&r1, "A", &["x"], &["x^2 - t*x"]), graded(&r1, "B", &["y"], &["y^2"])),
        ("r1_noncm_fiber", graded(&r1, "A", &["x", "y"], &["x^2", "x*y"]), graded(&r1, "B", &["u"], &[])),
        ("r1_flat_right", graded(&r1, "A", &[], &["t"]), graded(&r1, "B", &["y"], &[])),
        ("r2_poly_base", graded(&r2, "A", &["x"], &[]), graded(&r2, "B", &[], &[])),
        ("r2_poly_dual", graded(&r2, "A", &["x"], &[]), graded(&r2, "B", &["y"], &["y^2"])),
        ("r2_cubic_base", graded(&r2, "A", &["x"], &["x^3"]), graded(&r2, "B", &[], &[])),
        ("r3_poly_base", graded(&r3, "A", &["x"], &[]), graded(&r3, "B", &[], &[])),
        ("r3_dual_base", graded(&r3, "A", &["x"], &["x^2"]), graded(&r3, "B", &[], &[])),
        ("r3_dual_dual", graded(&r3, "A", &["x"], &["x^2"]), graded(&r3, "B", &["y"], &["y^2"])),
    ]
}

/// Setups over `f`, field bases first.
pub fn corpus_for(f: Field) -> Vec<CorpusEntry> {
    field_pairs(f)
        .into_iter()
        .chain(base_pairs(f))
        .map(|(name, a, b)| CorpusEntry { name: format!("{}_{name}", field_label(f)), a, b })
        .collect()
}

/// The full corpus over ℚ and F_32003.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = corpus_for(Field::Rational);
    out.extend(corpus_for(Field::Prime(DEFAULT_PRIME)));
    out
}

/// Artinian algebras over Artinian non-field bases, flat and not.
pub fn artinian_over_bases(f: Field) -> Vec<AlgebraPresentation> {
    let k = BaseDescriptor::PrimeField(f);
    let r1 = BaseDescriptor::Algebra(Arc::new(graded(&k, "R1", &["t"], &["t^2"])));
    let r3 = BaseDescriptor::Algebra(Arc::new(graded(&k, "R3", &["s", "t"], &["s^2", "s*t", "t^2"])));
    vec![
        graded(&r1, "A", &[], &[]),
        graded(&r1, "A", &["x"], &["x^2"]),
        graded(&r1, "A", &[], &["t"]),
        graded(&r1, "A", &["x"], &["x^2", "t*x"]),
        graded(&r1, "A", &["x"], &["x^2 - t*x"]),
        graded(&r1, "A", &["x", "y"], &["x^2", "x*y", "y^2"]),
        graded(&r3, "A", &["x"], &["x^2"]),
        graded(&r3, "A", &["x"], &["x^2", "s*x"]),
        graded(&r3, "A", &[], &["s"]),
        graded(&r3, "A", &["x"], &["x^3", "x^2 - s*x"]),
    ]
}
