//! Vieta and Newton-identity aggregates for one variable.

use num_traits::Zero;

use super::Mode;
use crate::error::{Error, Result};
use crate::exactalg::rational::pow;
use crate::exactalg::{LaurentPolynomial, Rational};

/// Dense coefficients `λ_lo, …, λ_hi` and the lowest exponent.
fn dense(f: &LaurentPolynomial) -> Result<(i64, Vec<Rational>)> {
    if f.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.dim() });
    }
    let lo = f.terms().map(|(e, _)| e[0]).min().ok_or(Error::ZeroPolynomial)?;
    let hi = f.terms().map(|(e, _)| e[0]).max().expect("nonzero");
    let mut c = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (e, v) in f.terms() {
        c[(e[0] - lo) as usize] = v.clone();
    }
    Ok((lo, c))
}

/// Power sums `p_1, …, p_k` of the roots of `Σ cᵢ tⁱ` (ascending coefficients).
fn power_sums(asc: &[Rational], k: usize) -> Vec<Rational> {
    let d = asc.len() - 1;
    let lead = &asc[d];
    // Monic descending: t^d + a₁ t^{d−1} + … + a_d.
    let a: Vec<Rational> = (0..=d).map(|i| &asc[d - i] / lead).collect();
    let mut p = vec![Rational::zero(); k + 1];
    p[0] = Rational::from_integer(d.into());
    for m in 1..=k {
        let mut v = Rational::zero();
        for i in 1..m.min(d + 1) {
            v -= &a[i] * &p[m - i];
        }
        if m <= d {
            v -= &a[m] * Rational::from_integer(m.into());
        }
        p[m] = v;
    }
    p
}

pub fn univariate_aggregate(f1: &LaurentPolynomial, f0: &LaurentPolynomial, mode: Mode) -> Result<Rational> {
    if f1.is_monomial() {
        return Err(Error::MonomialEquation(1));
    }
    let (_, c) = dense(f1)?;
    let d = c.len() - 1;
    if f0.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f0.dim() });
    }
    match mode {
        Mode::Product => {
            let m = f0.as_monomial().ok_or(Error::NotMonomial)?;
            let mut root_product = &c[0] / &c[d];
            if d % 2 == 1 {
                root_product = -root_product;
            }
            Ok(pow(m.coeff(), d as i64) * pow(&root_product, m.exp()[0]))
        }
        Mode::Sum => {
            let top = f0.terms().map(|(e, _)| e[0].max(0)).max().unwrap_or(0) as usize;
            let bottom = f0.terms().map(|(e, _)| (-e[0]).max(0)).max().unwrap_or(0) as usize;
            let pos = power_sums(&c, top);
            let rev: Vec<Rational> = c.iter().rev().cloned().collect();
            let neg = power_sums(&rev, bottom);
            let mut out = Rational::zero();
            for (e, v) in f0.terms() {
                let k = e[0];
                let p = if k >= 0 { &pos[k as usize] } else { &neg[(-k) as usize] };
                out += v * p;
            }
            Ok(out)
        }
    }
}

/// Lattice length of the Newton segment, the number of roots with multiplicity.
pub fn lattice_length(f: &LaurentPolynomial) -> Result<usize> {
    Ok(dense(f)?.1.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn p(t: &[(i64, i64)]) -> LaurentPolynomial {
        let v: Vec<(Vec<i64>, i64)> = t.iter().map(|&(e, c)| (vec![e], c)).collect();
        let r: Vec<(&[i64], i64)> = v.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        LaurentPolynomial::from_int_terms(1, &r)
    }

    #[test]
    fn vieta_examples() {
        let f = p(&[(2, 1), (1, -5), (0, 6)]);
        assert_eq!(univariate_aggregate(&f, &p(&[(1, 1)]), Mode::Sum).unwrap(), int(5));
        assert_eq!(univariate_aggregate(&f, &p(&[(2, 1)]), Mode::Sum).unwrap(), int(13));
        assert_eq!(univariate_aggregate(&f, &p(&[(-1, 1)]), Mode::Sum).unwrap(), rat(5, 6));
        assert_eq!(univariate_aggregate(&f, &p(&[(-2, 1)]), Mode::Sum).unwrap(), rat(13, 36));
        assert_eq!(univariate_aggregate(&f, &p(&[(0, 1)]), Mode::Sum).unwrap(), int(2));
        assert_eq!(univariate_aggregate(&f, &p(&[(1, 1)]), Mode::Product).unwrap(), int(6));
        assert_eq!(univariate_aggregate(&f, &p(&[(-1, 2)]), Mode::Product).unwrap(), rat(4, 6));
    }

    #[test]
    fn shifted_and_high_powers() {
        // t⁻¹(t−1)(t−2)(t+3) roots 1, 2, −3.
        let f = p(&[(2, 1), (0, -7), (-1, 6)]);
        assert_eq!(univariate_aggregate(&f, &p(&[(5, 1)]), Mode::Sum).unwrap(), int(1 + 32 - 243));
        assert_eq!(univariate_aggregate(&f, &p(&[(0, 1)]), Mode::Sum).unwrap(), int(3));
        assert_eq!(univariate_aggregate(&f, &p(&[(2, 1)]), Mode::Product).unwrap(), int(36));
        assert_eq!(lattice_length(&f).unwrap(), 3);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            univariate_aggregate(&p(&[(3, 2)]), &p(&[(1, 1)]), Mode::Sum),
            Err(Error::MonomialEquation(1))
        ));
        assert!(matches!(
            univariate_aggregate(&p(&[(1, 1), (0, 1)]), &p(&[(1, 1), (0, 1)]), Mode::Product),
            Err(Error::NotMonomial)
        ));
    }
}
