//! Products and sums of values over the roots of a developed system, read off
//! from the vertices of the Minkowski sum of its Newton polytopes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::rational::pow;
use crate::exactalg::{ExponentVector, LaurentPolynomial, Monomial, Rational};
use crate::flags::all_coefficients;
use crate::polytope::{is_developed, mixed_volume_ie, MinkowskiSystem, Polytope};
use crate::residue::{log_form_parts, residue_at_vertex};
use crate::symbol::vertex_symbol;

/// A developed system of `n` Laurent polynomials in `n` variables, none a monomial.
#[derive(Clone, Debug)]
pub struct SystemInstance {
    system: Vec<LaurentPolynomial>,
    ms: MinkowskiSystem,
    coefficients: Vec<i64>,
}

impl SystemInstance {
    pub fn new(system: Vec<LaurentPolynomial>) -> Result<Self> {
        let ms = minkowski_of(&system)?;
        for (i, f) in system.iter().enumerate() {
            if f.is_monomial() {
                return Err(Error::MonomialEquation(i + 1));
            }
        }
        let d = is_developed(&ms);
        if !d.developed {
            return Err(Error::NotDeveloped { witness: d.witness });
        }
        let coefficients = all_coefficients(&ms)?;
        Ok(SystemInstance { system, ms, coefficients })
    }

    pub fn n(&self) -> usize {
        self.system.len()
    }

    pub fn system(&self) -> &[LaurentPolynomial] {
        &self.system
    }

    pub fn minkowski(&self) -> &MinkowskiSystem {
        &self.ms
    }

    /// Integer coordinates of the vertices of the total polytope, lexicographically.
    pub fn vertices(&self) -> Vec<ExponentVector> {
        let t = self.ms.total();
        (0..t.vertices().len())
            .map(|v| ExponentVector::new(t.integer_vertex(v).expect("lattice polytope")))
            .collect()
    }

    pub fn vertex_index(&self, a: &ExponentVector) -> Result<usize> {
        self.ms
            .total()
            .vertex_index(&a.to_rational())
            .ok_or_else(|| Error::NotAVertex(a.to_vec()))
    }

    /// `c(A)` per vertex, in vertex order.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }
}

/// Newton polytopes of a square system and their Minkowski data.
pub fn minkowski_of(system: &[LaurentPolynomial]) -> Result<MinkowskiSystem> {
    let n = system.first().ok_or(Error::EmptyInput)?.dim();
    if system.len() != n {
        return Err(Error::CountMismatch { expected: n, found: system.len() });
    }
    let polys: Vec<Polytope> = system
        .iter()
        .map(|f| {
            if f.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: f.dim() });
            }
            f.newton_polytope()
        })
        .collect::<Result<_>>()?;
    MinkowskiSystem::new(polys)
}

fn sign_n(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `∏_A [f₀,…,fₙ]_A^{(−1)ⁿ c(A)}`.
pub fn product_over_roots(f0: &Monomial, sys: &SystemInstance) -> Result<Rational> {
    if f0.dim() != sys.n() {
        return Err(Error::DimensionMismatch { expected: sys.n(), found: f0.dim() });
    }
    let mut out = Rational::one();
    for (v, &c) in sys.coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let s = vertex_symbol(f0, &sys.system, &sys.ms, v)?;
        out *= pow(&s, sign_n(sys.n()) * c);
    }
    Ok(out)
}

/// `(−1)ⁿ Σ_A c(A)·res_A(f₀·J/f·ω₀)`.
pub fn sum_over_roots(f0: &LaurentPolynomial, sys: &SystemInstance) -> Result<Rational> {
    if f0.dim() != sys.n() {
        return Err(Error::DimensionMismatch { expected: sys.n(), found: f0.dim() });
    }
    if f0.is_zero() {
        return Ok(Rational::zero());
    }
    let (g, f) = log_form_parts(f0, &sys.system)?;
    let vertices = sys.vertices();
    let mut acc = Rational::zero();
    for (a, &c) in vertices.iter().zip(&sys.coefficients) {
        if c == 0 {
            continue;
        }
        acc += residue_at_vertex(&g, &f, a)? * Rational::from_integer(c.into());
    }
    Ok(acc * Rational::from_integer(sign_n(sys.n()).into()))
}

/// Root count from the sum formula with `f₀ = 1`, checked against inclusion–exclusion.
pub fn bernstein_number(sys: &SystemInstance) -> Result<BigInt> {
    let (by_sum, by_volume) = bernstein_pair(sys)?;
    if by_sum != Rational::from_integer(by_volume.clone()) {
        return Err(Error::Consistency(format!(
            "sum formula gives {by_sum}, mixed volume gives {by_volume}"
        )));
    }
    Ok(by_volume)
}

/// The two computations of the root count, unchecked.
pub fn bernstein_pair(sys: &SystemInstance) -> Result<(Rational, BigInt)> {
    let by_sum = sum_over_roots(&LaurentPolynomial::one(sys.n()), sys)?;
    let by_volume = mixed_volume_ie(sys.ms.summands())?;
    Ok((by_sum, by_volume))
}
