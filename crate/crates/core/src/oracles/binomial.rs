//! Exact aggregates over the roots of `t^{aᵢ} = dᵢ` through a Smith normal form change
//! of variables; no root is ever enumerated.

use num_traits::{One, Zero};

use super::snf::{smith_normal_form, unimodular_inverse};
use super::Mode;
use crate::error::{Error, Result};
use crate::exactalg::rational::pow;
use crate::exactalg::{ExponentVector, LaurentPolynomial, Monomial, Rational};

/// Writing `A = U·S·V`, `z = t^{V}` turns the system into `z_k^{s_k} = e_k` with
/// `e = U⁻¹·log d` and `f₀ = c·∏ z_k^{r_k}`, `r = m·V⁻¹`.
pub fn binomial_aggregate(a: &[Vec<i64>], d: &[Rational], f0: &Monomial, mode: Mode) -> Result<Rational> {
    let n = a.len();
    if d.len() != n || f0.dim() != n {
        return Err(Error::CountMismatch { expected: n, found: d.len() });
    }
    if d.iter().any(Zero::is_zero) {
        return Err(Error::ZeroCoefficient);
    }
    let snf = smith_normal_form(a)?;
    let s = snf.diagonal();
    let u_inv = unimodular_inverse(&snf.u)?;
    let v_inv = unimodular_inverse(&snf.v)?;
    let e: Vec<Rational> = (0..n)
        .map(|k| (0..n).fold(Rational::one(), |acc, i| acc * pow(&d[i], u_inv[k][i])))
        .collect();
    let r: Vec<i64> = (0..n).map(|k| (0..n).map(|i| f0.exp()[i] * v_inv[i][k]).sum()).collect();
    let roots: i64 = s.iter().product();
    let c = f0.coeff();
    match mode {
        Mode::Product => {
            let mut out = pow(c, roots);
            for k in 0..n {
                // Product of the roots of z^s − e is (−1)^{s+1}·e.
                let p = if s[k] % 2 == 0 { -e[k].clone() } else { e[k].clone() };
                out *= pow(&p, r[k] * (roots / s[k]));
            }
            Ok(out)
        }
        Mode::Sum => {
            let mut out = c.clone();
            for k in 0..n {
                if r[k] % s[k] != 0 {
                    return Ok(Rational::zero());
                }
                out *= pow(&e[k], r[k] / s[k]) * Rational::from_integer(s[k].into());
            }
            Ok(out)
        }
    }
}

/// The equations `t^{aᵢ} − dᵢ`.
pub fn binomial_system(a: &[Vec<i64>], d: &[Rational]) -> Result<Vec<LaurentPolynomial>> {
    let n = a.len();
    a.iter()
        .zip(d)
        .map(|(row, di)| {
            LaurentPolynomial::from_terms(
                n,
                [(ExponentVector::new(row.clone()), Rational::one()), (ExponentVector::zeros(n), -di.clone())],
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn mono(c: i64, e: &[i64]) -> Monomial {
        Monomial::new(int(c), e.to_vec().into()).unwrap()
    }

    #[test]
    fn examples() {
        let id = vec![vec![1, 0], vec![0, 1]];
        let d = [int(2), int(3)];
        assert_eq!(binomial_aggregate(&id, &d, &mono(1, &[1, 1]), Mode::Product).unwrap(), int(6));
        let sq = vec![vec![2]];
        assert_eq!(binomial_aggregate(&sq, &[int(4)], &mono(1, &[1]), Mode::Product).unwrap(), int(-4));
        assert_eq!(binomial_aggregate(&sq, &[int(4)], &mono(1, &[1]), Mode::Sum).unwrap(), int(0));
        assert_eq!(binomial_aggregate(&sq, &[int(4)], &mono(1, &[2]), Mode::Sum).unwrap(), int(8));
        assert_eq!(binomial_aggregate(&sq, &[int(4)], &mono(3, &[0]), Mode::Product).unwrap(), int(9));
    }

    #[test]
    fn cube_roots() {
        // t³ = 1/8: roots (1/2)ζ, product 1/8, sum of t³ is 3/8, sum of t⁻³ is 24.
        let a = vec![vec![3]];
        let d = [rat(1, 8)];
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[1]), Mode::Product).unwrap(), rat(1, 8));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[3]), Mode::Sum).unwrap(), rat(3, 8));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[-3]), Mode::Sum).unwrap(), int(24));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[1]), Mode::Sum).unwrap(), int(0));
    }

    #[test]
    fn coupled_pair() {
        // t1·t2 = 6, t1/t2 = 3/2: roots ±(3, 2).
        let a = vec![vec![1, 1], vec![1, -1]];
        let d = [int(6), rat(3, 2)];
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[1, 0]), Mode::Product).unwrap(), int(-9));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[1, 0]), Mode::Sum).unwrap(), int(0));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[1, 1]), Mode::Sum).unwrap(), int(12));
        assert_eq!(binomial_aggregate(&a, &d, &mono(1, &[2, 0]), Mode::Sum).unwrap(), int(18));
    }
}
