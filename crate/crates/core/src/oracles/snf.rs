use crate::error::{Error, Result};

/// `A = U·S·V` with `U`, `V` unimodular and `S` diagonal, `s₁ | s₂ | …`, `sᵢ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: Vec<Vec<i64>>,
    pub s: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.len()).map(|i| self.s[i][i]).collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn narrow(m: Vec<Vec<i128>>) -> Result<Vec<Vec<i64>>> {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
        .collect()
}

struct Work {
    u: Vec<Vec<i128>>,
    s: Vec<Vec<i128>>,
    v: Vec<Vec<i128>>,
}

impl Work {
    // row_j += k·row_i on S; U absorbs the inverse.
    fn add_row(&mut self, i: usize, j: usize, k: i128) -> Result<()> {
        for c in 0..self.s.len() {
            self.s[j][c] = self.s[i][c].checked_mul(k).and_then(|x| x.checked_add(self.s[j][c])).ok_or(Error::Overflow)?;
        }
        for r in 0..self.u.len() {
            self.u[r][i] = self.u[r][j].checked_mul(k).and_then(|x| self.u[r][i].checked_sub(x)).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    // col_j += k·col_i on S; V absorbs the inverse.
    fn add_col(&mut self, i: usize, j: usize, k: i128) -> Result<()> {
        for r in 0..self.s.len() {
            self.s[r][j] = self.s[r][i].checked_mul(k).and_then(|x| x.checked_add(self.s[r][j])).ok_or(Error::Overflow)?;
        }
        for c in 0..self.v.len() {
            self.v[i][c] = self.v[j][c].checked_mul(k).and_then(|x| self.v[i][c].checked_sub(x)).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.s.swap(i, j);
        for r in self.u.iter_mut() {
            r.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.s.iter_mut() {
            r.swap(i, j);
        }
        self.v.swap(i, j);
    }

    fn negate_row(&mut self, i: usize) {
        self.s[i].iter_mut().for_each(|x| *x = -*x);
        self.u.iter_mut().for_each(|r| r[i] = -r[i]);
    }
}

/// Smith normal form of a square nonsingular integer matrix.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Result<SnfResult> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("{n} rows of unequal or wrong length")));
    }
    let mut w = Work {
        u: identity(n),
        s: a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(),
        v: identity(n),
    };
    for t in 0..n {
        loop {
            let Some((pr, pc)) = (t..n)
                .flat_map(|r| (t..n).map(move |c| (r, c)))
                .filter(|&(r, c)| w.s[r][c] != 0)
                .min_by_key(|&(r, c)| w.s[r][c].abs())
            else {
                return Err(Error::Singular);
            };
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);
            let p = w.s[t][t];
            let mut clean = true;
            for r in t + 1..n {
                let q = w.s[r][t] / p;
                if q != 0 {
                    w.add_row(t, r, -q)?;
                }
                clean &= w.s[r][t] == 0;
            }
            for c in t + 1..n {
                let q = w.s[t][c] / p;
                if q != 0 {
                    w.add_col(t, c, -q)?;
                }
                clean &= w.s[t][c] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&r| (t + 1..n).any(|c| w.s[r][c] % p != 0));
            match bad {
                Some(r) => w.add_row(r, t, 1)?,
                None => break,
            }
        }
        if w.s[t][t] < 0 {
            w.negate_row(t);
        }
    }
    Ok(SnfResult { u: narrow(w.u)?, s: narrow(w.s)?, v: narrow(w.v)? })
}

#[cfg(test)]
fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| (0..m).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
        .collect()
}

/// Inverse of a unimodular integer matrix via the adjugate.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    use crate::exactalg::determinant;
    use num_traits::ToPrimitive;
    let n = m.len();
    let det = determinant(m).to_i64().ok_or(Error::Overflow)?;
    if det.abs() != 1 {
        return Err(Error::Shape(format!("determinant {det} is not a unit")));
    }
    let minor = |skip_r: usize, skip_c: usize| -> Vec<Vec<i64>> {
        m.iter()
            .enumerate()
            .filter(|(r, _)| *r != skip_r)
            .map(|(_, row)| {
                row.iter().enumerate().filter(|(c, _)| *c != skip_c).map(|(_, &x)| x).collect()
            })
            .collect()
    };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = determinant(&minor(j, i)).to_i64().ok_or(Error::Overflow)?;
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    Ok(sign * c * det)
                })
                .collect()
        })
        .collect()
}
