//! Cone-supported Laurent series at a vertex, cut off by an integral weight, and
//! the residues built on them.
//!
//! A series is stored with exponents relative to the origin; the vertex shift is
//! folded into the exponents. Every stored term of weight at most `bound` equals
//! the corresponding coefficient of the infinite series.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::lattice::determinant;
use crate::exactalg::rational::pow;
use crate::exactalg::{toric_jacobian, ExponentVector, LaurentPolynomial, Monomial, Rational};
use crate::flags::flag_sign;
use crate::polytope::{MinkowskiSystem, Polytope};

/// Integral covector, strictly positive on the vertex cone, and the smallest weight
/// of the perturbation support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightFunctional {
    pub w: Vec<i64>,
    pub min_step: i64,
}

impl WeightFunctional {
    pub fn weight(&self, e: &[i64]) -> i64 {
        e.iter().zip(&self.w).map(|(a, b)| a * b).sum()
    }

    /// Sum of the primitive inner normals of the facets of `p` through `vertex`,
    /// with `min_step` taken over the nonzero points of `support`.
    pub fn at_vertex<'a, I>(p: &Polytope, vertex: usize, support: I) -> Self
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        let w: Vec<i64> = p.interior_covector(p.vertex_face(vertex)).iter().map(|x| -x).collect();
        let mut wf = WeightFunctional { w, min_step: 1 };
        wf.min_step = support
            .into_iter()
            .map(|e| wf.weight(e))
            .filter(|&x| x > 0)
            .min()
            .unwrap_or(1);
        wf
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
    weight: WeightFunctional,
    /// `None` for a series that is exact (a polynomial).
    bound: Option<i64>,
}

impl TruncatedSeries {
    /// A polynomial viewed as an exact series.
    pub fn exact(p: &LaurentPolynomial, weight: WeightFunctional) -> Self {
        TruncatedSeries {
            dim: p.dim(),
            terms: p.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
            weight,
            bound: None,
        }
    }

    pub fn one(dim: usize, weight: WeightFunctional) -> Self {
        Self::exact(&LaurentPolynomial::one(dim), weight)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self) -> &WeightFunctional {
        &self.weight
    }

    pub fn bound(&self) -> Option<i64> {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^e`, or an error when `e` lies beyond the exact range.
    pub fn coeff(&self, e: &ExponentVector) -> Result<Rational> {
        if let Some(b) = self.bound {
            let need = self.weight.weight(e);
            if need > b {
                return Err(Error::InsufficientTruncation { bound: b, needed: need });
            }
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&ExponentVector::zeros(self.dim)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest stored weight, or a lower bound when nothing is stored below the cut.
    fn valuation(&self) -> i64 {
        let stored = self.terms.keys().map(|e| self.weight.weight(e)).min();
        match (stored, self.bound) {
            (Some(s), Some(b)) => s.min(b + 1),
            (Some(s), None) => s,
            (None, Some(b)) => b + 1,
            (None, None) => i64::MAX / 4,
        }
    }

    /// Drops terms beyond weight `bound` and records the cut.
    pub fn truncate(&self, bound: i64) -> Self {
        let bound = self.bound.map_or(bound, |b| b.min(bound));
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.weight.weight(e) <= bound)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        TruncatedSeries { dim: self.dim, terms, weight: self.weight.clone(), bound: Some(bound) }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.weight.w != other.weight.w {
            return Err(Error::WeightMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let bound = match (self.bound, other.bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|e, c| !c.is_zero() && bound.is_none_or(|b| self.weight.weight(e) <= b));
        Ok(TruncatedSeries { dim: self.dim, terms, weight: self.weight.clone(), bound })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (vx, vy) = (self.valuation(), other.valuation());
        let bound = match (self.bound, other.bound) {
            (Some(bx), Some(by)) => Some((bx + vy).min(by + vx)),
            (Some(bx), None) => Some(bx + vy),
            (None, Some(by)) => Some(by + vx),
            (None, None) => None,
        };
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        let wy: Vec<(i64, &ExponentVector, &Rational)> =
            other.terms.iter().map(|(e, c)| (self.weight.weight(e), e, c)).collect();
        for (ex, cx) in &self.terms {
            let wx = self.weight.weight(ex);
            for (w, ey, cy) in &wy {
                if bound.is_some_and(|b| wx + w > b) {
                    continue;
                }
                *acc.entry(ex + ey).or_insert_with(Rational::zero) += cx * *cy;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedSeries { dim: self.dim, terms, weight: self.weight.clone(), bound })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut s = self.clone();
        if k.is_zero() {
            s.terms.clear();
        } else {
            s.terms.values_mut().for_each(|c| *c *= k);
        }
        s
    }

    /// `t_j ∂/∂t_j`, exact to the same weight.
    pub fn log_derivative(&self, j: usize) -> Self {
        let mut s = self.clone();
        s.terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[j] != 0)
            .map(|(e, c)| (e.clone(), c * Rational::from_integer(e[j].into())))
            .collect();
        s
    }

    /// Unit check: constant term 1 and every other exponent of positive weight.
    pub fn is_unit(&self) -> bool {
        self.constant_term().is_one()
            && self.terms.keys().all(|e| e.is_zero() || self.weight.weight(e) > 0)
    }

    /// Inverse of a unit series, exact to `bound` (or to the series' own bound if smaller).
    pub fn inverse(&self, bound: i64) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let bound = self.bound.map_or(bound, |b| b.min(bound));
        let h: Vec<(ExponentVector, i64, Rational)> = self
            .terms
            .iter()
            .filter(|(e, _)| !e.is_zero())
            .map(|(e, c)| (e.clone(), self.weight.weight(e), -c.clone()))
            .collect();
        let terms = geometric(self.dim, &h, bound, None).into_iter().collect();
        Ok(TruncatedSeries { dim: self.dim, terms, weight: self.weight.clone(), bound: Some(bound) })
    }

    /// Integer power of a unit series, exact to `bound`.
    pub fn pow(&self, k: i64, bound: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse(bound)? } else { self.truncate(bound) };
        let mut out = Self::one(self.dim, self.weight.clone()).truncate(bound);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }
}

/// Coefficients of `1/(1 − h)` up to weight `bound`, where `h` has strictly
/// positive weights. With `targets`, only those coefficients are returned.
fn geometric(
    dim: usize,
    h: &[(ExponentVector, i64, Rational)],
    bound: i64,
    targets: Option<&[ExponentVector]>,
) -> HashMap<ExponentVector, Rational> {
    let zero = ExponentVector::zeros(dim);
    let mut seen: HashSet<ExponentVector> = HashSet::from([zero.clone()]);
    let mut layer = vec![(zero.clone(), 0i64)];
    let mut points = vec![(0i64, zero.clone())];
    while let Some((p, wp)) = layer.pop() {
        for (d, wd, _) in h {
            let wq = wp + wd;
            if wq > bound {
                continue;
            }
            let q = &p + d;
            if seen.insert(q.clone()) {
                points.push((wq, q.clone()));
                layer.push((q, wq));
            }
        }
    }
    points.sort();
    let mut s: HashMap<ExponentVector, Rational> = HashMap::with_capacity(points.len());
    s.insert(zero, Rational::one());
    for (_, e) in points.iter().skip(1) {
        let mut v = Rational::zero();
        for (d, _, c) in h {
            if let Some(prev) = s.get(&(e - d)) {
                v += c * prev;
            }
        }
        if !v.is_zero() {
            s.insert(e.clone(), v);
        }
    }
    match targets {
        Some(t) => t.iter().filter_map(|e| s.get(e).map(|c| (e.clone(), c.clone()))).collect(),
        None => s,
    }
}

/// Normalized perturbation data of `f` at vertex `A`: `f = f(A)·t^A·(1 − h)`.
struct VertexExpansion {
    coeff: Rational,
    weight: WeightFunctional,
    h: Vec<(ExponentVector, i64, Rational)>,
}

fn expand_at(f: &LaurentPolynomial, a: &ExponentVector) -> Result<VertexExpansion> {
    if f.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: a.dim() });
    }
    let p = f.newton_polytope()?;
    let v = p.vertex_index(&a.to_rational()).ok_or_else(|| Error::NotAVertex(a.to_vec()))?;
    let coeff = f.coeff(a);
    let shifted: Vec<(ExponentVector, Rational)> = f
        .terms()
        .filter(|(e, _)| *e != a)
        .map(|(e, c)| (e - a, -(c / &coeff)))
        .collect();
    let weight = WeightFunctional::at_vertex(&p, v, shifted.iter().map(|(e, _)| e));
    let h = shifted.into_iter().map(|(e, c)| (e.clone(), weight.weight(&e), c)).collect();
    Ok(VertexExpansion { coeff, weight, h })
}

/// `1/f̃` with `f̃ = f/(f(A)t^A)`, exact to weight `bound`.
pub fn truncated_inverse(f: &LaurentPolynomial, a: &ExponentVector, bound: i64) -> Result<TruncatedSeries> {
    if bound < 0 {
        return Err(Error::InsufficientTruncation { bound, needed: 0 });
    }
    let x = expand_at(f, a)?;
    let terms = geometric(f.dim(), &x.h, bound, None).into_iter().collect();
    Ok(TruncatedSeries { dim: f.dim(), terms, weight: x.weight, bound: Some(bound) })
}

/// Smallest cut that determines the constant term of `g/f` at `A`.
pub fn residue_bound(g: &LaurentPolynomial, f: &LaurentPolynomial, a: &ExponentVector) -> Result<i64> {
    let x = expand_at(f, a)?;
    Ok(g.terms().map(|(e, _)| (-x.weight.weight(&(e - a))).max(0)).max().unwrap_or(0))
}

/// Constant term of the cone-supported expansion of `g/f` at vertex `A` of `Δ(f)`.
pub fn residue_at_vertex(g: &LaurentPolynomial, f: &LaurentPolynomial, a: &ExponentVector) -> Result<Rational> {
    let bound = residue_bound(g, f, a)?;
    residue_at_vertex_with_bound(g, f, a, bound)
}

/// As [`residue_at_vertex`] with an explicit cut, which must be at least [`residue_bound`].
pub fn residue_at_vertex_with_bound(
    g: &LaurentPolynomial,
    f: &LaurentPolynomial,
    a: &ExponentVector,
    bound: i64,
) -> Result<Rational> {
    if g.dim() != f.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: g.dim() });
    }
    let x = expand_at(f, a)?;
    // Constant term of (g t^{-A}/f(A))·S is Σ_u g_u S_{-u}.
    let wanted: Vec<(ExponentVector, &Rational)> =
        g.terms().map(|(e, c)| (-&(e - a), c)).collect();
    let needed = wanted.iter().map(|(e, _)| x.weight.weight(e)).max().unwrap_or(0);
    if needed > bound {
        return Err(Error::InsufficientTruncation { bound, needed });
    }
    let targets: Vec<ExponentVector> =
        wanted.iter().filter(|(e, _)| x.weight.weight(e) >= 0).map(|(e, _)| e.clone()).collect();
    let s = geometric(f.dim(), &x.h, bound, Some(&targets));
    let mut acc = Rational::zero();
    for (e, c) in &wanted {
        if let Some(v) = s.get(e) {
            acc += *c * v;
        }
    }
    Ok(acc / x.coeff)
}

/// `res_A(f₀·J/f·ω₀)` with `f = f₁⋯fₙ` and `J` the toric Jacobian.
pub fn log_form_residue(
    f0: &LaurentPolynomial,
    system: &[LaurentPolynomial],
    a: &ExponentVector,
) -> Result<Rational> {
    let (g, f) = log_form_parts(f0, system)?;
    residue_at_vertex(&g, &f, a)
}

/// `(f₀·J, f₁⋯fₙ)`.
pub fn log_form_parts(
    f0: &LaurentPolynomial,
    system: &[LaurentPolynomial],
) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
    let n = f0.dim();
    if system.len() != n {
        return Err(Error::CountMismatch { expected: n, found: system.len() });
    }
    let j = toric_jacobian(system)?;
    let g = f0.mul(&j)?;
    let f = LaurentPolynomial::product(n, system)?;
    Ok((g, f))
}

/// `sgn F · res_{X₀}(f₀·J/f·ω₀)` for a flag of face indices ending at the total.
pub fn parshin_residue_at_flag(
    f0: &LaurentPolynomial,
    system: &[LaurentPolynomial],
    ms: &MinkowskiSystem,
    chain: &[usize],
) -> Result<Rational> {
    let total = ms.total();
    let s = flag_sign(total, chain)?;
    let v = total.face(chain[0]).vertices[0];
    let a = ExponentVector::new(total.integer_vertex(v).ok_or(Error::DegeneratePolytope)?);
    let r = log_form_residue(f0, system, &a)?;
    Ok(if s > 0 { r } else { -r })
}

/// Residue of `φ · ds₁/s₁^{m₁} ∧ … ∧ dsₙ/sₙ^{mₙ}` with `sᵢ = cᵢ t^{aᵢ} uᵢ` and
/// `φ = prefactor` (default 1).
///
/// The form equals `∏ sᵢ^{1−mᵢ} · det(aᵢⱼ + θⱼuᵢ/uᵢ) · ω₀`; the result is read
/// off at `−Σ(1−mᵢ)aᵢ`. The default cut is `8·min_step`; when the inputs are exact
/// or long enough, the value is recomputed at twice the cut and must agree.
pub fn wedge_log_residue(
    units: &[(Monomial, TruncatedSeries)],
    m: &[i64],
    bound: Option<i64>,
    prefactor: Option<&TruncatedSeries>,
) -> Result<Rational> {
    let n = units.len();
    if m.len() != n {
        return Err(Error::CountMismatch { expected: n, found: m.len() });
    }
    let first = &units.first().ok_or(Error::EmptyInput)?.1;
    if first.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: first.dim() });
    }
    let weight = first.weight().clone();
    for (mono, u) in units {
        if mono.dim() != n || u.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: u.dim() });
        }
        if u.weight().w != weight.w {
            return Err(Error::WeightMismatch);
        }
        if !u.is_unit() {
            return Err(Error::NotAUnit);
        }
    }
    let min_step = units.iter().map(|(_, u)| u.weight().min_step).min().unwrap_or(1).max(1);
    let cut = bound.unwrap_or(8 * min_step);
    let available = units
        .iter()
        .map(|(_, u)| u.bound())
        .chain(prefactor.map(|p| p.bound()))
        .flatten()
        .min();
    let cut = available.map_or(cut, |a| a.min(cut));
    let value = wedge_at(units, m, cut, prefactor)?;
    if available.is_none_or(|a| a >= 2 * cut) && cut > 0 {
        let again = wedge_at(units, m, 2 * cut, prefactor)?;
        if again != value {
            return Err(Error::Consistency(format!(
                "residue changed between cuts {cut} and {}",
                2 * cut
            )));
        }
    }
    Ok(value)
}

fn wedge_at(
    units: &[(Monomial, TruncatedSeries)],
    m: &[i64],
    cut: i64,
    prefactor: Option<&TruncatedSeries>,
) -> Result<Rational> {
    let n = units.len();
    let weight = units[0].1.weight().clone();
    let mut target = vec![0i64; n];
    let mut scalar = Rational::one();
    for ((mono, _), &mi) in units.iter().zip(m) {
        for (t, a) in target.iter_mut().zip(mono.exp().iter()) {
            *t -= (1 - mi) * a;
        }
        scalar *= pow(mono.coeff(), 1 - mi);
    }
    let target = ExponentVector::new(target);
    let need = weight.weight(&target);
    if need > cut {
        return Err(Error::InsufficientTruncation { bound: cut, needed: need });
    }
    if need < 0 {
        return Ok(Rational::zero());
    }
    // Entries a_ij + θ_j(u_i)/u_i as series.
    let mut rows: Vec<Vec<TruncatedSeries>> = Vec::with_capacity(n);
    let mut factor = match prefactor {
        Some(p) => p.truncate(cut),
        None => TruncatedSeries::one(n, weight.clone()).truncate(cut),
    };
    for ((mono, u), &mi) in units.iter().zip(m) {
        let u = u.truncate(cut);
        let inv = u.inverse(cut)?;
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let c = TruncatedSeries::exact(
                &LaurentPolynomial::constant(n, Rational::from_integer(mono.exp()[j].into())),
                weight.clone(),
            );
            row.push(c.add(&u.log_derivative(j).mul(&inv)?)?);
        }
        rows.push(row);
        factor = factor.mul(&u.pow(1 - mi, cut)?)?;
    }
    let det = series_determinant(&rows, n, &weight, cut)?;
    let form = factor.mul(&det)?;
    Ok(scalar * form.coeff(&target)?)
}

fn series_determinant(
    rows: &[Vec<TruncatedSeries>],
    n: usize,
    weight: &WeightFunctional,
    cut: i64,
) -> Result<TruncatedSeries> {
    // Laplace expansion along the first row of the remaining columns.
    fn go(
        rows: &[Vec<TruncatedSeries>],
        r: usize,
        cols: &mut Vec<usize>,
        one: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        if cols.is_empty() {
            return Ok(one.clone());
        }
        let mut acc = one.scale(&Rational::zero());
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let minor = go(rows, r + 1, cols, one)?;
            cols.insert(k, c);
            let term = rows[r][c].mul(&minor)?;
            acc = if k % 2 == 0 { acc.add(&term)? } else { acc.add(&term.scale(&-Rational::one()))? };
        }
        Ok(acc)
    }
    let one = TruncatedSeries::one(n, weight.clone()).truncate(cut);
    go(rows, 0, &mut (0..n).collect(), &one)
}

/// `det(a₁,…,aₙ)` of the monomial exponents, the value expected when all `mᵢ = 1`.
pub fn exponent_determinant(units: &[(Monomial, TruncatedSeries)]) -> Rational {
    let rows: Vec<Vec<i64>> = units.iter().map(|(m, _)| m.exp().to_vec()).collect();
    Rational::from_integer(determinant(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn poly(dim: usize, t: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(dim, t)
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn geometric_inverse() {
        let f = poly(1, &[(&[0], 1), (&[1], -1)]);
        let s = truncated_inverse(&f, &ev(&[0]), 3).unwrap();
        let expected: Vec<(ExponentVector, Rational)> = (0..4).map(|k| (ev(&[k]), int(1))).collect();
        assert_eq!(s.terms().map(|(e, c)| (e.clone(), c.clone())).collect::<Vec<_>>(), expected);
        let c = truncated_inverse(&poly(1, &[(&[0], 7)]), &ev(&[0]), 5).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.constant_term(), int(1));
    }

    #[test]
    fn bivariate_inverse() {
        let f = poly(2, &[(&[1, 1], 1), (&[1, 0], -3), (&[0, 1], -2), (&[0, 0], 6)]);
        let s = truncated_inverse(&f, &ev(&[1, 1]), 2).unwrap();
        assert_eq!(s.weight().w, vec![-1, -1]);
        assert_eq!(s.coeff(&ev(&[-1, 0])).unwrap(), int(2));
        assert_eq!(s.coeff(&ev(&[0, -1])).unwrap(), int(3));
        assert_eq!(s.coeff(&ev(&[-1, -1])).unwrap(), int(6));
        assert_eq!(s.coeff(&ev(&[-2, 0])).unwrap(), int(4));
        assert!(matches!(s.coeff(&ev(&[-3, 0])), Err(Error::InsufficientTruncation { .. })));
    }

    #[test]
    fn vertex_residues() {
        let one_minus_t = poly(1, &[(&[0], 1), (&[1], -1)]);
        assert_eq!(residue_at_vertex(&poly(1, &[(&[0], 1)]), &one_minus_t, &ev(&[0])).unwrap(), int(1));
        let t_minus_a = poly(1, &[(&[1], 1), (&[0], -5)]);
        let t2 = poly(1, &[(&[2], 1)]);
        assert_eq!(residue_at_vertex(&t2, &t_minus_a, &ev(&[1])).unwrap(), int(5));
        assert_eq!(residue_at_vertex(&t2, &t_minus_a, &ev(&[0])).unwrap(), int(0));
        assert!(matches!(
            residue_at_vertex(&t2, &poly(1, &[(&[0], 1), (&[1], 1), (&[2], 1)]), &ev(&[1])),
            Err(Error::NotAVertex(_))
        ));
        assert_eq!(residue_at_vertex(&LaurentPolynomial::zero(1), &t_minus_a, &ev(&[1])).unwrap(), int(0));
    }

    #[test]
    fn square_log_residues() {
        let sys = [poly(2, &[(&[1, 0], 1), (&[0, 0], -2)]), poly(2, &[(&[0, 1], 1), (&[0, 0], -3)])];
        let one = LaurentPolynomial::one(2);
        assert_eq!(log_form_residue(&one, &sys, &ev(&[1, 1])).unwrap(), int(1));
        assert_eq!(log_form_residue(&one, &sys, &ev(&[0, 0])).unwrap(), int(0));
        let t = poly(1, &[(&[1], 1)]);
        let lin = [poly(1, &[(&[1], 1), (&[0], -4)])];
        assert_eq!(log_form_residue(&t, &lin, &ev(&[1])).unwrap(), int(4));
    }

    #[test]
    fn flag_residues() {
        let sys = vec![poly(2, &[(&[1, 0], 1), (&[0, 0], -2)]), poly(2, &[(&[0, 1], 1), (&[0, 0], -3)])];
        let ms = MinkowskiSystem::new(sys.iter().map(|f| f.newton_polytope().unwrap()).collect()).unwrap();
        let t = ms.total();
        let face = |pts: &[&[i64]]| {
            let mut v: Vec<usize> = pts
                .iter()
                .map(|p| t.vertex_index(&ev(p).to_rational()).unwrap())
                .collect();
            v.sort_unstable();
            t.face_by_vertices(&v).unwrap()
        };
        let one = LaurentPolynomial::one(2);
        let top = [face(&[&[1, 1]]), face(&[&[0, 1], &[1, 1]]), t.improper_face()];
        let right = [face(&[&[1, 1]]), face(&[&[1, 0], &[1, 1]]), t.improper_face()];
        assert_eq!(parshin_residue_at_flag(&one, &sys, &ms, &top).unwrap(), int(1));
        assert_eq!(parshin_residue_at_flag(&one, &sys, &ms, &right).unwrap(), int(-1));
    }

    fn unit_series(p: LaurentPolynomial, w: &[i64]) -> TruncatedSeries {
        let mut wf = WeightFunctional { w: w.to_vec(), min_step: 1 };
        wf.min_step = p.terms().map(|(e, _)| wf.weight(e)).filter(|&x| x > 0).min().unwrap_or(1);
        TruncatedSeries::exact(&p, wf)
    }

    fn mono(c: i64, e: &[i64]) -> Monomial {
        Monomial::new(int(c), ev(e)).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let one = unit_series(LaurentPolynomial::one(2), &[1, 1]);
        let u = [(mono(1, &[1, 0]), one.clone()), (mono(1, &[0, 1]), one.clone())];
        assert_eq!(wedge_log_residue(&u, &[1, 1], None, None).unwrap(), int(1));
        let u = [(mono(1, &[1, 1]), one.clone()), (mono(1, &[0, 1]), one.clone())];
        assert_eq!(wedge_log_residue(&u, &[1, 1], None, None).unwrap(), int(1));
        let v = unit_series(poly(2, &[(&[0, 0], 1), (&[0, 1], 1)]), &[1, 1]);
        let u = [(mono(1, &[1, 0]), v), (mono(1, &[0, 1]), one)];
        assert_eq!(wedge_log_residue(&u, &[2, 1], None, None).unwrap(), int(0));
        assert_eq!(wedge_log_residue(&u, &[1, 1], None, None).unwrap(), int(1));
    }

    #[test]
    fn wedge_requires_units() {
        let bad = unit_series(poly(1, &[(&[0], 2), (&[1], 1)]), &[1]);
        assert!(matches!(
            wedge_log_residue(&[(mono(1, &[1]), bad)], &[1], None, None),
            Err(Error::NotAUnit)
        ));
    }

    #[test]
    fn wedge_detects_short_cut() {
        let u = unit_series(poly(1, &[(&[0], 1), (&[1], 3)]), &[1]);
        // ds/s^3 needs the coefficient at weight 2.
        let r = wedge_log_residue(&[(mono(1, &[1]), u.clone())], &[3], Some(1), None);
        assert!(matches!(r, Err(Error::InsufficientTruncation { .. })));
        // ds/s^3 = d(s^{-2})/(-2) is exact.
        assert_eq!(wedge_log_residue(&[(mono(1, &[1]), u)], &[3], Some(4), None).unwrap(), int(0));
    }

    #[test]
    fn transversal_point_residue() {
        // f₀ regular with value 5/3 at the point, s₁ = u₁², s₂ = u₁u₂³.
        let w = [1, 1];
        let f0 = unit_series(poly(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[0, 1], -1)]), &w).scale(&rat(5, 3));
        let u1 = unit_series(poly(2, &[(&[0, 0], 1), (&[0, 1], 4)]), &w);
        let u2 = unit_series(poly(2, &[(&[0, 0], 1), (&[1, 1], -1)]), &w);
        let units = [(mono(3, &[2, 0]), u1), (mono(-2, &[1, 3]), u2)];
        assert_eq!(wedge_log_residue(&units, &[1, 1], None, Some(&f0)).unwrap(), int(10));
        assert_eq!(exponent_determinant(&units), int(6));
    }

    #[test]
    fn series_power_and_inverse() {
        let u = unit_series(poly(1, &[(&[0], 1), (&[1], 2)]), &[1]);
        let inv = u.inverse(5).unwrap();
        let prod = u.mul(&inv).unwrap();
        assert_eq!(prod.bound(), Some(5));
        assert_eq!(prod.terms().count(), 1);
        let sq = u.pow(-2, 3).unwrap();
        assert_eq!(sq.coeff(&ev(&[1])).unwrap(), int(-4));
        assert_eq!(sq.coeff(&ev(&[2])).unwrap(), int(12));
    }
}
