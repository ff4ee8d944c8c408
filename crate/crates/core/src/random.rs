//! Seeded generators for random instances and metamorphic variants.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::poly::{Field, Monomial, Polynomial};
use crate::presentation::{AlgebraPresentation, BaseDescriptor, Mode, PresentationError};

const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

fn coefficient<R: Rng>(rng: &mut R, field: Field) -> crate::poly::Scalar {
    loop {
        let c = field.from_i64(rng.gen_range(-3..=3));
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// Artinian algebra on at most three variables: `v^d` for every variable
/// (`d ≤ 4`) plus up to three monomials or binomials. Graded when every
/// generator is homogeneous, local otherwise.
pub fn random_artinian<R: Rng>(rng: &mut R, field: Field, name: &str) -> AlgebraPresentation {
    let n = rng.gen_range(1..=3);
    let vars = &VAR_NAMES[..n];
    let ring = AlgebraPresentation::ring_for(&BaseDescriptor::PrimeField(field), vars).expect("identifiers");
    let mut gens: Vec<Polynomial> =
        (0..n).map(|i| ring.monomial(Monomial::var(n, i, rng.gen_range(2..=4)))).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let d = rng.gen_range(2..=4);
        let mut g = ring.term(coefficient(rng, field), random_monomial(rng, n, d));
        if rng.gen_bool(0.5) {
            let d2 = if rng.gen_bool(0.7) { d } else { rng.gen_range(2..=4) };
            g = &g + &ring.term(coefficient(rng, field), random_monomial(rng, n, d2));
        }
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let mode = if gens.iter().all(Polynomial::is_homogeneous) { Mode::Graded } else { Mode::Local };
    let ideal = crate::groebner::Ideal::new(&ring, gens).expect("same ring");
    AlgebraPresentation::from_ideal(name, BaseDescriptor::PrimeField(field), vars, ideal, mode).expect("valid")
}

/// Standard graded algebra on at most three variables with up to three
/// homogeneous generators of degree at most three.
pub fn random_graded<R: Rng>(rng: &mut R, field: Field, name: &str) -> AlgebraPresentation {
    let n = rng.gen_range(1..=3);
    let vars = &VAR_NAMES[..n];
    let ring = AlgebraPresentation::ring_for(&BaseDescriptor::PrimeField(field), vars).expect("identifiers");
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        let d = rng.gen_range(2..=3);
        let terms = rng.gen_range(1..=2);
        let g = (0..terms).fold(ring.zero(), |acc, _| &acc + &ring.term(coefficient(rng, field), random_monomial(rng, n, d)));
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let ideal = crate::groebner::Ideal::new(&ring, gens).expect("same ring");
    AlgebraPresentation::from_ideal(name, BaseDescriptor::PrimeField(field), vars, ideal, Mode::Graded).expect("valid")
}

/// `ℚ[t]/(t − a)` and `ℚ[t]/(t − b)` over the affine base `ℚ[t]`, with
/// `a = b` about half the time.
pub fn random_principal_pair<R: Rng>(rng: &mut R) -> (AlgebraPresentation, AlgebraPresentation) {
    let t = Arc::new(
        AlgebraPresentation::over_field("T", Field::Rational, &["t"], &[] as &[&str], Mode::Affine).expect("base"),
    );
    let base = BaseDescriptor::Algebra(t);
    let a = rng.gen_range(-5..=5);
    let b = if rng.gen_bool(0.5) { a } else { rng.gen_range(-5..=5) };
    let make = |name: &str, c: i64| {
        AlgebraPresentation::new(name, base.clone(), &[] as &[&str], &[if c < 0 { format!("t + {}", -c) } else { format!("t - {c}") }], Mode::Affine).expect("affine")
    };
    (make("A", a), make("B", b))
}

/// Renames every own variable `v` to `{v}{suffix}`.
pub fn rename_all(p: &AlgebraPresentation, suffix: &str) -> Result<AlgebraPresentation, PresentationError> {
    let renamed: Vec<String> = p.vars().iter().map(|v| format!("{v}{suffix}")).collect();
    let map: Vec<(&str, &str)> = p.vars().iter().map(String::as_str).zip(renamed.iter().map(String::as_str)).collect();
    p.rename_vars(&map)
}

/// Shuffles the relation generators.
pub fn permute_relations<R: Rng>(rng: &mut R, p: &AlgebraPresentation) -> Result<AlgebraPresentation, PresentationError> {
    let mut gens = p.relations().gens().to_vec();
    gens.shuffle(rng);
    p.with_relations(gens)
}

/// Appends a combination of existing generators with monomial multipliers.
pub fn add_redundant<R: Rng>(rng: &mut R, p: &AlgebraPresentation) -> Result<AlgebraPresentation, PresentationError> {
    let gens = p.relations().gens().to_vec();
    if gens.is_empty() {
        return Ok(p.clone());
    }
    let ring = p.ring();
    let n = ring.nvars();
    let homogeneous = p.mode() == Mode::Graded;
    let pick = |rng: &mut R| gens[rng.gen_range(0..gens.len())].clone();
    let (mut f, mut g) = (pick(rng), pick(rng));
    let deg = |p: &Polynomial| p.degree().unwrap_or(0);
    if deg(&f) < deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    let extra = rng.gen_range(0..=1);
    let mf = random_monomial(rng, n, extra);
    // same degree on both sides keeps graded relations homogeneous
    let mg_degree = if homogeneous { deg(&f) + extra - deg(&g) } else { rng.gen_range(0..=1) };
    let mg = random_monomial(rng, n, mg_degree);
    let c = coefficient(rng, ring.field());
    let combo = &f.mul_term(&ring.field().one(), &mf) + &g.mul_term(&c, &mg);
    let mut out = gens;
    if !combo.is_zero() {
        out.push(combo);
    }
    p.with_relations(out)
}
