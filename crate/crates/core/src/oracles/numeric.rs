//! Floating-point aggregates over the torus roots of a bivariate system.
//!
//! The `t₂`-resultant is formed exactly by evaluation and interpolation, its
//! nonzero roots are found with Aberth iteration, `t₂` is recovered per root and
//! each pair is polished by Newton's method on the original equations.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::Mode;
use crate::error::{Error, Result};
use crate::exactalg::lattice::determinant_rational;
use crate::exactalg::rational::to_f64;
use crate::exactalg::{LaurentPolynomial, Rational};

/// Root residual bound on equations scaled by the sum of their term magnitudes.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct NumericAggregate {
    pub value: f64,
    pub roots: Vec<[Complex64; 2]>,
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All roots of `Σ cᵢ zⁱ` (ascending, nonzero leading coefficient) by Aberth iteration.
pub fn polynomial_roots(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = c.len().saturating_sub(1);
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = c[d];
    if lead.norm() == 0.0 {
        return Err(Error::IllConditioned("zero leading coefficient".into()));
    }
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    // Geometric mean of root moduli as the starting radius.
    let r = (monic[0].norm()).powf(1.0 / d as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * (k as f64 + 0.4) / d as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    if z.iter().any(|x| !x.is_finite()) {
        return Err(Error::IllConditioned("root iteration diverged".into()));
    }
    Ok(z)
}

/// Bivariate polynomial as coefficients in `t₁` of each power of `t₂`.
type Bivariate = Vec<Vec<Rational>>;

fn to_bivariate(f: &LaurentPolynomial) -> Bivariate {
    let lo0 = f.terms().map(|(e, _)| e[0]).min().unwrap_or(0);
    let lo1 = f.terms().map(|(e, _)| e[1]).min().unwrap_or(0);
    let hi0 = f.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    let hi1 = f.terms().map(|(e, _)| e[1]).max().unwrap_or(0);
    let mut out = vec![vec![Rational::zero(); (hi0 - lo0 + 1) as usize]; (hi1 - lo1 + 1) as usize];
    for (e, c) in f.terms() {
        out[(e[1] - lo1) as usize][(e[0] - lo0) as usize] = c.clone();
    }
    out
}

fn eval_univariate(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
}

fn sylvester_det(p: &[Rational], q: &[Rational]) -> Rational {
    let (m, k) = (p.len() - 1, q.len() - 1);
    let size = m + k;
    if size == 0 {
        return Rational::from_integer(1.into());
    }
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for r in 0..k {
        for (i, a) in p.iter().rev().enumerate() {
            rows[r][r + i] = a.clone();
        }
    }
    for r in 0..m {
        for (i, a) in q.iter().rev().enumerate() {
            rows[k + r][r + i] = a.clone();
        }
    }
    determinant_rational(&rows)
}

/// Resultant in `t₂` as ascending coefficients in `t₁`.
fn resultant(p: &Bivariate, q: &Bivariate) -> Vec<Rational> {
    let (m, k) = (p.len() - 1, q.len() - 1);
    let dp = p.iter().map(|c| c.len() - 1).max().unwrap_or(0);
    let dq = q.iter().map(|c| c.len() - 1).max().unwrap_or(0);
    let deg = m * dq + k * dp;
    let xs: Vec<Rational> = (0..=deg).map(|i| Rational::from_integer((i as i64).into())).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let pe: Vec<Rational> = p.iter().map(|c| eval_univariate(c, x)).collect();
            let qe: Vec<Rational> = q.iter().map(|c| eval_univariate(c, x)).collect();
            sylvester_det(&pe, &qe)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Newton divided differences, expanded to ascending monomial coefficients.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut coeffs = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs·(x − xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

struct ComplexLaurent {
    terms: Vec<(Vec<i64>, Complex64)>,
}

impl ComplexLaurent {
    fn new(f: &LaurentPolynomial) -> Self {
        ComplexLaurent {
            terms: f.terms().map(|(e, c)| (e.to_vec(), Complex64::new(to_f64(c), 0.0))).collect(),
        }
    }

    fn mono(x: &[Complex64; 2], e: &[i64]) -> Complex64 {
        x[0].powi(e[0] as i32) * x[1].powi(e[1] as i32)
    }

    /// Value, gradient and the sum of term magnitudes.
    fn eval(&self, x: &[Complex64; 2]) -> (Complex64, [Complex64; 2], f64) {
        let mut v = Complex64::zero();
        let mut g = [Complex64::zero(); 2];
        let mut scale = 0.0;
        for (e, c) in &self.terms {
            let m = c * Self::mono(x, e);
            v += m;
            scale += m.norm();
            g[0] += m * e[0] as f64 / x[0];
            g[1] += m * e[1] as f64 / x[1];
        }
        (v, g, scale)
    }
}

fn polish(eqs: &[ComplexLaurent; 2], mut x: [Complex64; 2]) -> ([Complex64; 2], f64) {
    let residual = |x: &[Complex64; 2]| {
        eqs.iter()
            .map(|f| {
                let (v, _, s) = f.eval(x);
                v.norm() / s.max(f64::MIN_POSITIVE)
            })
            .fold(0.0, f64::max)
    };
    let mut best = residual(&x);
    for _ in 0..60 {
        let (v0, g0, _) = eqs[0].eval(&x);
        let (v1, g1, _) = eqs[1].eval(&x);
        let det = g0[0] * g1[1] - g0[1] * g1[0];
        if det.norm() == 0.0 {
            break;
        }
        let d0 = (v0 * g1[1] - v1 * g0[1]) / det;
        let d1 = (g0[0] * v1 - g1[0] * v0) / det;
        let y = [x[0] - d0, x[1] - d1];
        let r = residual(&y);
        if !(r < best) {
            break;
        }
        x = y;
        best = r;
        if (d0.norm() / x[0].norm()).max(d1.norm() / x[1].norm()) < 1e-16 {
            break;
        }
    }
    (x, best)
}

/// Torus roots of a generic bivariate system, each polished to [`RESIDUAL_TOL`].
pub fn bivariate_roots(system: &[LaurentPolynomial]) -> Result<Vec<[Complex64; 2]>> {
    if system.len() != 2 || system.iter().any(|f| f.dim() != 2) {
        return Err(Error::CountMismatch { expected: 2, found: system.len() });
    }
    let p = to_bivariate(&system[0]);
    let q = to_bivariate(&system[1]);
    let mut res = resultant(&p, &q);
    if res.iter().all(Zero::is_zero) {
        return Err(Error::IllConditioned("resultant vanishes identically".into()));
    }
    let strip = res.iter().position(|c| !c.is_zero()).expect("nonzero");
    res.drain(..strip);
    let rc: Vec<Complex64> = res.iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect();
    if rc.iter().any(|c| !c.is_finite()) {
        return Err(Error::IllConditioned("resultant coefficients overflow".into()));
    }
    let alphas = polynomial_roots(&rc)?;
    for i in 0..alphas.len() {
        for j in 0..i {
            let gap = (alphas[i] - alphas[j]).norm() / alphas[i].norm().max(alphas[j].norm());
            if gap < 1e-6 {
                return Err(Error::IllConditioned("clustered resultant roots".into()));
            }
        }
    }
    let eqs = [ComplexLaurent::new(&system[0]), ComplexLaurent::new(&system[1])];
    let mut roots = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let mut cands = Vec::new();
        for b in [&p, &q] {
            let mut bc: Vec<Complex64> = b
                .iter()
                .map(|c| c.iter().rev().fold(Complex64::zero(), |acc, a| acc * alpha + to_f64(a)))
                .collect();
            let scale: f64 = b
                .iter()
                .flat_map(|c| c.iter().enumerate().map(|(i, a)| to_f64(a).abs() * alpha.norm().powi(i as i32)))
                .fold(0.0, f64::max);
            while bc.last().is_some_and(|c| c.norm() <= 1e-9 * scale) {
                bc.pop();
            }
            if bc.len() > 1 {
                cands.extend(polynomial_roots(&bc)?);
            }
        }
        let best = cands
            .into_iter()
            .filter(|t| t.norm() > 1e-10)
            .map(|t2| {
                let x = [alpha, t2];
                let r = eqs.iter().map(|f| {
                    let (v, _, s) = f.eval(&x);
                    v.norm() / s
                });
                (r.fold(0.0, f64::max), x)
            })
            .min_by(|a, b| a.0.total_cmp(&b.0));
        let Some((_, x)) = best else {
            continue;
        };
        let (x, r) = polish(&eqs, x);
        if x[0].norm() < 1e-10 || x[1].norm() < 1e-10 {
            continue;
        }
        if r > RESIDUAL_TOL {
            return Err(Error::IllConditioned(format!("root residual {r:e}")));
        }
        roots.push(x);
    }
    for i in 0..roots.len() {
        for j in 0..i {
            let d = (roots[i][0] - roots[j][0]).norm() + (roots[i][1] - roots[j][1]).norm();
            if d < 1e-8 * (roots[i][0].norm() + roots[i][1].norm()) {
                return Err(Error::IllConditioned("two resultant roots polished to one point".into()));
            }
        }
    }
    Ok(roots)
}

/// `∏ f₀(x)` or `Σ f₀(x)` over the torus roots.
pub fn numeric_bivariate_aggregate(
    system: &[LaurentPolynomial],
    f0: &LaurentPolynomial,
    mode: Mode,
) -> Result<NumericAggregate> {
    if f0.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f0.dim() });
    }
    let roots = bivariate_roots(system)?;
    let g = ComplexLaurent::new(f0);
    let values = roots.iter().map(|x| g.eval(x).0);
    let total: Complex64 = match mode {
        Mode::Product => values.product(),
        Mode::Sum => values.sum(),
    };
    if total.im.abs() > 1e-6 * total.re.abs().max(1.0) {
        return Err(Error::IllConditioned(format!("aggregate has imaginary part {:e}", total.im)));
    }
    Ok(NumericAggregate { value: total.re, roots })
}

/// `|num − exact| / max(1, |exact|)`.
pub fn relative_error(num: f64, exact: &Rational) -> f64 {
    let e = exact.to_f64().unwrap_or(f64::INFINITY);
    (num - e).abs() / e.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn poly(t: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(2, t)
    }

    #[test]
    fn aberth_quadratic() {
        let r = polynomial_roots(&[6.0.into(), (-5.0).into(), 1.0.into()]).unwrap();
        let mut re: Vec<f64> = r.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] - 2.0).abs() < 1e-12 && (re[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn interpolation_is_exact() {
        let xs: Vec<Rational> = (0..4).map(int).collect();
        let ys: Vec<Rational> = (0..4).map(|x| int(2 * x * x * x - x + 7)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![int(7), int(-1), int(0), int(2)]);
    }

    #[test]
    fn square_system() {
        let sys = [poly(&[(&[1, 0], 1), (&[0, 0], -2)]), poly(&[(&[0, 1], 1), (&[0, 0], -3)])];
        let a = numeric_bivariate_aggregate(&sys, &poly(&[(&[1, 1], 1)]), Mode::Product).unwrap();
        assert!((a.value - 6.0).abs() < 1e-9);
        assert_eq!(a.roots.len(), 1);
    }

    #[test]
    fn conic_and_line() {
        // t1² + t2² = 5, t1 − t2 = 1: roots (2, 1) and (−1, −2).
        let sys = [
            poly(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -5)]),
            poly(&[(&[1, 0], 1), (&[0, 1], -1), (&[0, 0], -1)]),
        ];
        let s = numeric_bivariate_aggregate(&sys, &poly(&[(&[1, 0], 1)]), Mode::Sum).unwrap();
        assert!((s.value - 1.0).abs() < 1e-9);
        let p = numeric_bivariate_aggregate(&sys, &poly(&[(&[1, 1], 1)]), Mode::Product).unwrap();
        assert!((p.value - 4.0).abs() < 1e-9);
        assert!(relative_error(p.value, &int(4)) < 1e-9);
    }

    #[test]
    fn laurent_terms_and_zero_roots_are_dropped() {
        // t1·t2 − 2 = 0 and t1 − t2⁻¹·3 + 1 = 0 → t1 = 2/t2, 2/t2 − 3/t2 + 1 = 0 → t2 = 1, t1 = 2.
        let sys = [poly(&[(&[1, 1], 1), (&[0, 0], -2)]), poly(&[(&[1, 0], 1), (&[0, -1], -3), (&[0, 0], 1)])];
        let a = numeric_bivariate_aggregate(&sys, &poly(&[(&[1, 0], 1)]), Mode::Sum).unwrap();
        assert_eq!(a.roots.len(), 1);
        assert!((a.value - 2.0).abs() < 1e-9);
    }
}
