use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::scalar::{Field, Scalar};
use super::PolyError;

/// A polynomial ring `k[x_0, ..., x_{n-1}]` together with the monomial order
/// its polynomials are sorted by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { field, vars, order })
    }

    /// Grevlex ring over `field` with the given variable names.
    pub fn grevlex<S: AsRef<str>>(field: Field, vars: &[S]) -> Arc<PolyRing> {
        Self::new(field, vars.iter().map(|s| s.as_ref().to_string()).collect(), MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { field: self.field, vars: self.vars.clone(), order })
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial { ring: Arc::clone(self), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(self: &Arc<Self>, c: Scalar, m: Monomial) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial { ring: Arc::clone(self), terms }
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial) -> Polynomial {
        self.term(self.field.one(), m)
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), index, 1))
    }

    /// Parses a polynomial written in this ring's variables.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial, PolyError> {
        super::parse::parse_polynomial(self, text)
    }
}

pub type Term = (Scalar, Monomial);

/// A sparse polynomial whose terms are nonzero, distinct and strictly
/// descending in the owning ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    /// Normalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Polynomial {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = last.0.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.0.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|t| t.0.is_zero()) {
            out.pop();
        }
        Polynomial { ring: Arc::clone(ring), terms: out }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term in the ring's own order.
    pub fn leading_term(&self) -> Result<(&Scalar, &Monomial), PolyError> {
        self.terms.first().map(|(c, m)| (c, m)).ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.0)
    }

    /// Leading term under an arbitrary order.
    pub fn leading_term_under(&self, order: MonomialOrder) -> Result<(Scalar, Monomial), PolyError> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.1, &b.1))
            .map(|(c, m)| (c.clone(), m.clone()))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|t| t.1.is_one())
            .map(|t| t.0.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Coefficients of the degree-one part, indexed by variable.
    pub fn linear_part(&self) -> Vec<Scalar> {
        let mut out = vec![self.ring.field().zero(); self.ring.nvars()];
        for (c, m) in &self.terms {
            if m.degree() == 1 {
                let i = m.support().next().unwrap();
                out[i] = c.clone();
            }
        }
        out
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (_, m) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, u)| **u).map(|(i, _)| i).collect()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.1.exps()[var] > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, Some(&self.ring.field().from_i64(-1))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = self.ring.zero();
        for (c, m) in &short.terms {
            acc = acc.merge(&long.mul_term(c, m), None);
        }
        Ok(acc)
    }

    /// `self + scale * other`, a single sorted merge.
    fn merge(&self, other: &Polynomial, scale: Option<&Scalar>) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |c: &Scalar| match scale {
            Some(s) => c.mul(s),
            None => c.clone(),
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.1, &b.1) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((scaled(&b.0), b.1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.0.add(&scaled(&b.0));
                    if !c.is_zero() {
                        out.push((c, a.1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| (scaled(&t.0), t.1.clone())));
        Polynomial { ring: Arc::clone(&self.ring), terms: out }
    }

    /// `self - c * m * other`, used by reduction loops.
    pub fn sub_scaled_shifted(&self, c: &Scalar, m: &Monomial, other: &Polynomial) -> Polynomial {
        let shifted = other.mul_term(&c.neg(), m);
        self.merge(&shifted, None)
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self.terms.iter().map(|(a, n)| (a.mul(c), n.mul(m))).collect();
        Polynomial { ring: Arc::clone(&self.ring), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// Exact division by the term `c * m`.
    pub fn div_by_term(&self, c: &Scalar, m: &Monomial) -> Result<Polynomial, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let inv = c.inv();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, n) in &self.terms {
            let q = m.quotient_of(n).ok_or(PolyError::NotDivisible)?;
            terms.push((a.mul(&inv), q));
        }
        Ok(Polynomial { ring: Arc::clone(&self.ring), terms })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Re-expresses this polynomial in `target`, sending variable `i` to
    /// `map[i]`. Re-sorts for the target order.
    pub fn map_into(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), m.remap(target.nvars(), map))).collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves into a ring with the same variables (typically another order).
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars());
        if target.order() == self.ring.order() {
            return Polynomial { ring: Arc::clone(target), terms: self.terms.clone() };
        }
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Moves into `target` by matching variable names. Fails if a variable
    /// in the support has no counterpart.
    pub fn map_by_name(&self, target: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(j),
                None if !self.involves(i) => map.push(usize::MAX),
                None => return Err(PolyError::UnknownVariable(name.clone())),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut out = Monomial::one(target.nvars());
                let mut exps: Vec<u32> = out.exps().to_vec();
                for (i, e) in m.exps().iter().enumerate() {
                    if *e > 0 {
                        exps[map[i]] += e;
                    }
                }
                out = Monomial::new(exps);
                (c.clone(), out)
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Polynomial {
        let mut acc = self.ring.zero();
        let mut powers: Vec<Polynomial> = vec![self.ring.one()];
        for (c, m) in &self.terms {
            let e = m.exps()[var] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut rest: Vec<u32> = m.exps().to_vec();
            rest[var] = 0;
            let part = powers[e].mul_term(c, &Monomial::new(rest));
            acc = &acc + &part;
        }
        acc
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|t| t.1.degree() == degree).cloned().collect();
        Polynomial { ring: Arc::clone(&self.ring), terms }
    }

    /// Drops every term of degree at least `degree`.
    pub fn truncate_below(&self, degree: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|t| t.1.degree() < degree).cloned().collect();
        Polynomial { ring: Arc::clone(&self.ring), terms }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| &t.1 == m)
            .map(|t| t.0.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(self.ring.vars()))?;
            } else {
                write!(f, "{}*{}", abs, m.display(self.ring.vars()))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DEFAULT_PRIME;

    fn qring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, vars)
    }

    #[test]
    fn cancellation() {
        let r = qring(&["x", "y"]);
        let f = r.parse("x + y").unwrap();
        let g = r.parse("-x").unwrap();
        assert_eq!(&f + &g, r.parse("y").unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(&["x", "y"]);
        let f = &r.parse("x + y").unwrap() * &r.parse("x - y").unwrap();
        assert_eq!(f, r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        // hand expansion: x^2 + 2xy + y^2, and 2 = 0 mod 2
        let r = PolyRing::grevlex(Field::Prime(2), &["x", "y"]);
        let f = r.parse("x + y").unwrap().pow(2);
        assert_eq!(f, r.parse("x^2 + y^2").unwrap());
    }

    #[test]
    fn leading_terms_under_orders() {
        let r = qring(&["x", "y"]);
        let f = r.parse("x^2*y + x*y^2").unwrap();
        let (_, m) = f.leading_term_under(MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.exps(), &[2, 1]);
        let g = r.parse("x + y^2").unwrap();
        let (_, m) = g.leading_term_under(MonomialOrder::Lex).unwrap();
        assert_eq!(m.exps(), &[1, 0]);
        let c = r.parse("5").unwrap();
        let (k, m) = c.leading_term_under(MonomialOrder::Grevlex).unwrap();
        assert_eq!(k, Field::Rational.from_i64(5));
        assert!(m.is_one());
        assert_eq!(r.zero().leading_term().unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn homogeneity() {
        let r = qring(&["x", "y"]);
        assert!(r.parse("x^2 + x*y").unwrap().is_homogeneous());
        assert!(!r.parse("x^2 + x").unwrap().is_homogeneous());
        assert!(r.zero().is_homogeneous());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = qring(&["x"]);
        let b = qring(&["y"]);
        assert_eq!(a.var(0).checked_add(&b.var(0)).unwrap_err(), PolyError::RingMismatch);
        let c = PolyRing::grevlex(Field::Prime(DEFAULT_PRIME), &["x"]);
        assert!(a.var(0).checked_mul(&c.var(0)).is_err());
    }

    #[test]
    fn substitution_and_division() {
        let r = qring(&["x", "y", "z"]);
        let f = r.parse("z^2 + x*z").unwrap();
        let g = f.substitute(2, &r.parse("x + y").unwrap());
        assert_eq!(g, r.parse("2*x^2 + 3*x*y + y^2").unwrap());
        let h = r.parse("2*x^2*y + 4*x*y^2").unwrap();
        let q = h.div_by_term(&Field::Rational.from_i64(2), &Monomial::new([1, 1, 0])).unwrap();
        assert_eq!(q, r.parse("x + 2*y").unwrap());
        assert_eq!(
            h.div_by_term(&Field::Rational.one(), &Monomial::new([0, 0, 1])).unwrap_err(),
            PolyError::NotDivisible
        );
    }

    #[test]
    fn display_roundtrip() {
        let r = qring(&["x", "y"]);
        let f = r.parse("-3/2*x^2*y + y - 7").unwrap();
        assert_eq!(f.to_string(), "-3/2*x^2*y + y - 7");
        assert_eq!(r.parse(&f.to_string()).unwrap(), f);
    }
}
