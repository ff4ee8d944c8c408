//! Brute-force linear algebra on finite-dimensional local algebras, used
//! as an independent check on the Gröbner pipeline.

mod dense;

use std::collections::HashMap;

use thiserror::Error;

use crate::invariants::{InvariantError, InvariantReport};
use crate::poly::{Field, Monomial, Polynomial, Scalar};
use crate::presentation::{fiber, AlgebraPresentation, BaseDescriptor, LocalAlgebra, PresentationError};

pub use dense::{rank, span_basis, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("algebra `{0}` is not Artinian")]
    NotArtinian(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// A finite-dimensional local algebra as a vector space with explicit
/// multiplication-by-variable matrices.
#[derive(Clone, Debug)]
pub struct ArtinianModel {
    field: Field,
    vars: Vec<String>,
    basis: Vec<Monomial>,
    /// `mult[v][r][c]`: coefficient of `basis[r]` in `x_v * basis[c]`.
    mult: Vec<Matrix>,
    /// `dim m^k` for `k = 0, 1, …` down to the first zero.
    radical_powers: Vec<usize>,
}

/// Builds the model on the standard monomials of the relation basis.
pub fn build_model(a: &LocalAlgebra) -> Result<ArtinianModel, OracleError> {
    let gb = a.groebner();
    let basis = gb.standard_monomials().ok_or_else(|| OracleError::NotArtinian(a.name().to_string()))?;
    let ring = a.ring();
    let field = ring.field();
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = basis.len();
    let coords = |p: &Polynomial| -> Vec<Scalar> {
        let mut v = vec![field.zero(); d];
        for (c, m) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut mult = Vec::with_capacity(ring.nvars());
    for var in 0..ring.nvars() {
        let mut m = dense::zeros(field, d, d);
        for (c, b) in basis.iter().enumerate() {
            let prod = b.mul(&Monomial::var(ring.nvars(), var, 1));
            let nf = gb.normal_form(&ring.monomial(prod)).expect("same ring");
            for (r, x) in coords(&nf).into_iter().enumerate() {
                m[r][c] = x;
            }
        }
        mult.push(m);
    }
    let mut model = ArtinianModel { field, vars: ring.vars().to_vec(), basis, mult, radical_powers: Vec::new() };
    model.radical_powers = model.compute_radical_powers()?;
    Ok(model)
}

impl ArtinianModel {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn multiplication(&self, var: usize) -> &Matrix {
        &self.mult[var]
    }

    pub fn radical_powers(&self) -> &[usize] {
        &self.radical_powers
    }

    fn unit(&self) -> Vec<Scalar> {
        let mut e = vec![self.field.zero(); self.dimension()];
        e[0] = self.field.one();
        e
    }

    fn apply(&self, var: usize, v: &[Scalar]) -> Vec<Scalar> {
        dense::mat_vec(&self.mult[var], v, self.field)
    }

    /// `m^{k+1} = Σ_v x_v m^k`, starting from `m^0 = A`.
    fn compute_radical_powers(&self) -> Result<Vec<usize>, OracleError> {
        let d = self.dimension();
        let mut current: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut e = vec![self.field.zero(); d];
                e[i] = self.field.one();
                e
            })
            .collect();
        let mut dims = vec![d];
        while !current.is_empty() {
            let images: Vec<Vec<Scalar>> =
                (0..self.vars.len()).flat_map(|v| current.iter().map(move |w| self.apply(v, w))).collect();
            let next = span_basis(&images);
            if next.len() >= current.len() {
                return Err(OracleError::NotArtinian(format!("radical stalls at dimension {}", next.len())));
            }
            dims.push(next.len());
            current = next;
        }
        Ok(dims)
    }

    /// Pairwise commutation of the multiplication maps.
    pub fn maps_commute(&self) -> bool {
        let f = self.field;
        (0..self.mult.len()).all(|i| {
            (i + 1..self.mult.len())
                .all(|j| dense::mat_mul(&self.mult[i], &self.mult[j], f) == dense::mat_mul(&self.mult[j], &self.mult[i], f))
        })
    }

    /// `dim_k m / m²`.
    pub fn embdim(&self) -> usize {
        match self.radical_powers.as_slice() {
            [_, m, m2, ..] => m - m2,
            [_, m] => *m,
            _ => 0,
        }
    }

    /// Variables whose images form a basis of `m / m²`.
    fn minimal_generators(&self) -> Vec<usize> {
        let unit = self.unit();
        let m_vectors: Vec<Vec<Scalar>> = (0..self.vars.len()).map(|v| self.apply(v, &unit)).collect();
        let m_basis = span_basis(&m_vectors);
        let m2: Vec<Vec<Scalar>> =
            (0..self.vars.len()).flat_map(|v| m_basis.iter().map(move |w| self.apply(v, w))).collect();
        let mut span = span_basis(&m2);
        let mut chosen = Vec::new();
        for (v, vec) in m_vectors.iter().enumerate() {
            let mut trial = span.clone();
            trial.push(vec.clone());
            let trial = span_basis(&trial);
            if trial.len() > span.len() {
                chosen.push(v);
                span = trial;
            }
        }
        chosen
    }

    /// `dim_k (0 : m)`.
    pub fn socle_dim(&self) -> usize {
        let stacked: Vec<Vec<Scalar>> = self.mult.iter().flat_map(|m| m.iter().cloned()).collect();
        self.dimension() - rank(&stacked, self.field)
    }

    /// First Koszul homology on a minimal generating set of `m`.
    pub fn koszul_h1_dim(&self) -> usize {
        let ys = self.minimal_generators();
        let e = ys.len();
        let d = self.dimension();
        let f = self.field;
        if e == 0 {
            return 0;
        }
        // d1: A^e -> A, block row [L_y1 … L_ye]
        let d1: Matrix = (0..d)
            .map(|r| ys.iter().flat_map(|&y| self.mult[y][r].iter().cloned()).collect())
            .collect();
        // d2: Λ²A^e -> A^e, e_i ∧ e_j ↦ y_i e_j − y_j e_i
        let pairs: Vec<(usize, usize)> = (0..e).flat_map(|i| (i + 1..e).map(move |j| (i, j))).collect();
        let mut d2 = dense::zeros(f, e * d, pairs.len() * d);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    d2[j * d + r][p * d + c] = self.mult[ys[i]][r][c].clone();
                    d2[i * d + r][p * d + c] = self.mult[ys[j]][r][c].neg();
                }
            }
        }
        let ker_d1 = e * d - rank(&d1, f);
        let im_d2 = if pairs.is_empty() { 0 } else { rank(&d2, f) };
        ker_d1 - im_d2
    }
}

/// The invariant report of an Artinian algebra, from the model alone.
pub fn oracle_report(m: &ArtinianModel) -> Result<InvariantReport, OracleError> {
    let embdim = m.embdim();
    let eps2 = m.koszul_h1_dim();
    Ok(InvariantReport::from_parts(0, 0, embdim, eps2, m.socle_dim(), None)?)
}

fn field_dimension(p: &AlgebraPresentation) -> Result<usize, OracleError> {
    let local = p.validate()?;
    Ok(build_model(&local)?.dimension())
}

/// Freeness count over an Artinian base: `dim A = dim (A / m_R A) · dim R`.
pub fn oracle_flatness(a: &AlgebraPresentation) -> Result<bool, OracleError> {
    let r = match a.base() {
        BaseDescriptor::PrimeField(_) => return Ok(true),
        BaseDescriptor::Algebra(r) => r,
    };
    let dim_a = field_dimension(a)?;
    let dim_fiber = field_dimension(&fiber(a)?)?;
    let dim_r = field_dimension(r)?;
    Ok(dim_a == dim_fiber * dim_r)
}
