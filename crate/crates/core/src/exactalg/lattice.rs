use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Integer exponent vector `m ∈ ℤⁿ`. Orders lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rational(&self, w: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(w)
            .map(|(a, b)| b * BigInt::from(*a))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn scaled(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Row vector times matrix: `(self · Q)_j = Σ_i self_i Q_ij`.
    pub fn times_matrix(&self, q: &[Vec<i64>]) -> Self {
        let n = q.first().map_or(0, Vec::len);
        let mut out = vec![0; n];
        for (a, row) in self.0.iter().zip(q) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += a * x;
            }
        }
        ExponentVector(out)
    }
}

impl Deref for ExponentVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl<'a> Add<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a ExponentVector> for &'a ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `(n+1) × n` integer matrix whose rows are the exponents of `n+1` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: Vec<ExponentVector>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<ExponentVector>) -> Result<Self> {
        let n = rows.len().checked_sub(1).ok_or_else(|| Error::Shape("no rows".into()))?;
        for r in &rows {
            if r.dim() != n {
                return Err(Error::Shape(format!(
                    "{} rows need {} columns, row has {}",
                    rows.len(),
                    n,
                    r.dim()
                )));
            }
        }
        Ok(ExponentMatrix { rows })
    }

    /// Number of columns `n`.
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[ExponentVector] {
        &self.rows
    }

    pub fn entry(&self, i: usize, k: usize) -> i64 {
        self.rows[i][k]
    }

    /// `A_i`: determinant after deleting row `i`.
    pub fn row_deleted_minor(&self, i: usize) -> BigInt {
        let m: Vec<Vec<i64>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row.to_vec())
            .collect();
        determinant(&m)
    }

    /// `A_ij^k`: determinant after deleting rows `i`, `j` and column `k`.
    pub fn double_row_column_minor(&self, i: usize, j: usize, k: usize) -> BigInt {
        let m: Vec<Vec<i64>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i && *r != j)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != k)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        determinant(&m)
    }
}

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
/// The empty matrix has determinant 1.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    determinant_big(rows)
}

pub fn determinant_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn determinant_rational(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::from_integer(1.into());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Sign (-1, 0, 1) of a rational determinant.
pub fn determinant_sign(m: &[Vec<Rational>]) -> i32 {
    let d = determinant_rational(m);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor() {
        assert_eq!(determinant(&[]), BigInt::from(1));
        assert_eq!(determinant(&[vec![3]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![1, 2], vec![3, 4]]), BigInt::from(-2));
        assert_eq!(
            determinant(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]),
            BigInt::from(-2)
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
    }

    #[test]
    fn minors() {
        let a = ExponentMatrix::new(vec![
            vec![1, 1].into(),
            vec![1, 0].into(),
            vec![0, 1].into(),
        ])
        .unwrap();
        assert_eq!(a.row_deleted_minor(0), BigInt::from(1));
        assert_eq!(a.row_deleted_minor(1), BigInt::from(1));
        assert_eq!(a.row_deleted_minor(2), BigInt::from(-1));
        assert_eq!(a.double_row_column_minor(0, 1, 0), BigInt::from(1));
        assert!(ExponentMatrix::new(vec![vec![1].into(), vec![1, 2].into()]).is_err());
    }
}
