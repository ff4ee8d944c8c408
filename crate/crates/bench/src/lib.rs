//! Benchmark fixtures.

use std::sync::Arc;

use defect_core::{AlgebraPresentation, BaseDescriptor, Field, Ideal, Mode, PolyRing, DEFAULT_PRIME};

pub const FIELDS: [Field; 2] = [Field::Rational, Field::Prime(DEFAULT_PRIME)];

pub fn field_label(f: Field) -> &'static str {
    match f {
        Field::Rational => "Q",
        Field::Prime(_) => "Fp",
    }
}

/// The cyclic-4 ideal, a standard Buchberger workload.
pub fn cyclic4(f: Field) -> Ideal {
    let ring = PolyRing::grevlex(f, &["a", "b", "c", "d"]);
    Ideal::parse(&ring, &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"])
        .expect("cyclic4")
}

/// Twisted cubic cone tensored with dual numbers.
pub fn cone_pair(f: Field) -> (AlgebraPresentation, AlgebraPresentation) {
    let a = AlgebraPresentation::over_field("A", f, &["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"], Mode::Graded)
        .expect("cone");
    let b = AlgebraPresentation::over_field("B", f, &["u"], &["u^2"], Mode::Graded).expect("dual numbers");
    (a, b)
}

/// `k[x,y,z]/(x,y,z)^3`, an Artinian algebra of length 10.
pub fn cube_of_maximal(f: Field) -> AlgebraPresentation {
    let rels = ["x^3", "y^3", "z^3", "x^2*y", "x^2*z", "y^2*x", "y^2*z", "z^2*x", "z^2*y", "x*y*z"];
    AlgebraPresentation::over_field("A", f, &["x", "y", "z"], &rels, Mode::Graded).expect("cube")
}

/// `R[x]/(x^2)` and `R[y]` over `R = k[s,t]/(s^2, st)`.
pub fn base_pair(f: Field) -> (AlgebraPresentation, AlgebraPresentation) {
    let k = BaseDescriptor::PrimeField(f);
    let r = AlgebraPresentation::new("R", k, &["s", "t"], &["s^2", "s*t"], Mode::Graded).expect("base");
    let r = BaseDescriptor::Algebra(Arc::new(r));
    let a = AlgebraPresentation::new("A", r.clone(), &["x"], &["x^2"], Mode::Graded).expect("A");
    let b = AlgebraPresentation::new("B", r, &["y"], &[] as &[&str], Mode::Graded).expect("B");
    (a, b)
}
