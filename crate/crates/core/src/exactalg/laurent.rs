use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::lattice::ExponentVector;
use super::rational::{format_rational_short, pow, to_f64, Rational};
use crate::error::{Error, Result};
use crate::polytope::Polytope;

/// Nonzero rational multiple of a Laurent monomial, `c·tᵃ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    coeff: Rational,
    exp: ExponentVector,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: ExponentVector) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(Monomial { coeff, exp })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exp(&self) -> &ExponentVector {
        &self.exp
    }

    pub fn dim(&self) -> usize {
        self.exp.dim()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.dim(), other.dim())?;
        Ok(Monomial {
            coeff: &self.coeff * &other.coeff,
            exp: &self.exp + &other.exp,
        })
    }

    pub fn to_polynomial(&self) -> LaurentPolynomial {
        let mut terms = BTreeMap::new();
        terms.insert(self.exp.clone(), self.coeff.clone());
        LaurentPolynomial { dim: self.dim(), terms }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Finite map from exponent vectors to nonzero rationals, all in one dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPolynomial {
    pub fn zero(dim: usize) -> Self {
        LaurentPolynomial { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(ExponentVector::zeros(dim), c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, combining like terms and dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer data; panics on dimension mismatch.
    pub fn from_int_terms(dim: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::from_terms(
            dim,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.to_vec()), Rational::from_integer((*c).into()))),
        )
        .expect("dimension mismatch")
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
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

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExponentVector::zeros(self.dim))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Monomial { coeff: c.clone(), exp: e.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        LaurentPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn product<'a, I>(dim: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a LaurentPolynomial>,
    {
        factors.into_iter().try_fold(Self::one(dim), |acc, f| acc.mul(f))
    }

    /// Multiplication by the monomial `tᵃ`.
    pub fn shift(&self, a: &ExponentVector) -> Self {
        LaurentPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e + a, c.clone())).collect(),
        }
    }

    /// Restriction to the terms where `⟨w, m⟩` is maximal.
    pub fn initial_form(&self, w: &[Rational]) -> Result<Self> {
        check_dim(self.dim, w.len())?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let values: Vec<Rational> = self.terms.keys().map(|e| e.dot_rational(w)).collect();
        let max = values.iter().max().cloned().expect("nonempty");
        Ok(LaurentPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .zip(&values)
                .filter(|(_, v)| **v == max)
                .map(|((e, c), _)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// The logarithmic derivative `t_j ∂/∂t_j`.
    pub fn log_derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * Rational::from_integer(e[j].into()));
        }
        out
    }

    /// Monomial change of variables: every exponent row `m` becomes `m·Q`.
    pub fn substitute(&self, q: &[Vec<i64>]) -> Self {
        let mut out = Self::zero(q.first().map_or(self.dim, Vec::len));
        for (e, c) in &self.terms {
            out.add_term(e.times_matrix(q), c.clone());
        }
        out
    }

    pub fn newton_polytope(&self) -> Result<Polytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let pts: Vec<Vec<Rational>> = self.terms.keys().map(|e| e.to_rational()).collect();
        Polytope::convex_hull(&pts)
    }

    /// Coefficient `f(A)` at a vertex `A` of the Newton polytope.
    pub fn vertex_coefficient(&self, a: &ExponentVector) -> Result<Rational> {
        check_dim(self.dim, a.dim())?;
        let p = self.newton_polytope()?;
        if p.vertex_index(&a.to_rational()).is_none() {
            return Err(Error::NotAVertex(a.to_vec()));
        }
        Ok(self.coeff(a))
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        check_dim(self.dim, point.len())?;
        if let Some(i) = point.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate(i));
        }
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                v *= pow(x, k);
            }
            sum += v;
        }
        Ok(sum)
    }

    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        check_dim(self.dim, point.len())?;
        if let Some(i) = point.iter().position(|x| *x == 0.0) {
            return Err(Error::ZeroCoordinate(i));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                to_f64(c)
                    * point
                        .iter()
                        .zip(e.iter())
                        .map(|(x, &k)| x.powi(k as i32))
                        .product::<f64>()
            })
            .sum())
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        check_dim(self.dim, point.len())?;
        if let Some(i) = point.iter().position(|x| x.norm() == 0.0) {
            return Err(Error::ZeroCoordinate(i));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = Complex64::new(to_f64(c), 0.0);
                for (x, &k) in point.iter().zip(e.iter()) {
                    v *= x.powi(k as i32);
                }
                v
            })
            .sum())
    }
}

/// `J = det(t_j ∂f_i/∂t_j)` for a square system.
pub fn toric_jacobian(system: &[LaurentPolynomial]) -> Result<LaurentPolynomial> {
    let n = system.len();
    if n == 0 {
        return Err(Error::CountMismatch { expected: 1, found: 0 });
    }
    for f in system {
        check_dim(n, f.dim())?;
    }
    let m: Vec<Vec<LaurentPolynomial>> = system
        .iter()
        .map(|f| (0..n).map(|j| f.log_derivative(j)).collect())
        .collect();
    let mut memo = BTreeMap::new();
    laplace(&m, 0, (1u64 << n) - 1, &mut memo)
}

// Expansion along row `row` over the remaining column set `cols`.
fn laplace(
    m: &[Vec<LaurentPolynomial>],
    row: usize,
    cols: u64,
    memo: &mut BTreeMap<u64, LaurentPolynomial>,
) -> Result<LaurentPolynomial> {
    let n = m.len();
    if row == n {
        return Ok(LaurentPolynomial::one(n));
    }
    if let Some(v) = memo.get(&cols) {
        return Ok(v.clone());
    }
    let mut acc = LaurentPolynomial::zero(n);
    let mut sign_pos = true;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !m[row][j].is_zero() {
            let minor = laplace(m, row + 1, cols & !(1 << j), memo)?;
            let term = m[row][j].mul(&minor)?;
            acc = if sign_pos { acc.add(&term)? } else { acc.sub(&term)? };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    Ok(acc)
}

impl fmt::Display for LaurentPolynomial {
    /// Serializes in the input grammar, terms in lexicographic exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, k)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational_short(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational_short(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}
