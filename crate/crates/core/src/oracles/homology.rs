//! Degree of a face map through top simplicial homology of barycentric subdivisions.
//!
//! Simplices of the subdivision are chains of cells; top simplices are complete
//! flags, with vertices ordered by dimension. The fundamental cycle is the kernel
//! of the top boundary map (the augmentation in dimension zero), oriented by the
//! geometric sign of one simplex.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::flags::{FaceMap, Flag, PolyhedralComplex};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Integer generator of the one-dimensional kernel of `m` (rows × `cols`).
fn kernel_generator(mut m: Vec<Vec<i128>>, cols: usize) -> Result<Vec<i128>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let g = gcd(a, b);
            let (a, b) = (a / g, b / g);
            for j in 0..cols {
                m[i][j] = m[i][j]
                    .checked_mul(a)
                    .and_then(|x| x.checked_sub(b.checked_mul(m[r][j])?))
                    .ok_or(Error::Overflow)?;
            }
            let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let nullity = cols - pivots.len();
    if nullity != 1 {
        return Err(Error::HomologyRank(nullity));
    }
    let free = (0..cols).find(|c| !pivots.iter().any(|p| p.1 == *c)).expect("one free column");
    let l = pivots.iter().fold(1i128, |l, &(r, c)| {
        let p = m[r][c].abs();
        l / gcd(l, p) * p
    });
    let mut x = vec![0i128; cols];
    x[free] = l;
    for &(r, c) in &pivots {
        x[c] = -m[r][free] * (l / m[r][c]);
    }
    let g = x.iter().fold(0, |g, &v| gcd(g, v));
    Ok(x.into_iter().map(|v| v / g).collect())
}

/// Fundamental cycle as coefficients on complete flags.
pub fn fundamental_cycle(c: &PolyhedralComplex) -> Result<HashMap<Flag, i128>> {
    let flags = c.flags();
    let cols = flags.len();
    let matrix: Vec<Vec<i128>> = if c.dim() == 0 {
        vec![vec![1; cols]]
    } else {
        let mut rows: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, i128)> = Vec::new();
        for (j, f) in flags.iter().enumerate() {
            for k in 0..f.0.len() {
                let mut face = f.0.clone();
                face.remove(k);
                let next = rows.len();
                let r = *rows.entry(face).or_insert(next);
                entries.push((r, j, if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        let mut m = vec![vec![0i128; cols]; rows.len()];
        for (r, j, s) in entries {
            m[r][j] += s;
        }
        m
    };
    let z = kernel_generator(matrix, cols)?;
    let sign = c.flag_sign(&flags[0])? as i128;
    let orient = if z[0] * sign < 0 { -1 } else { 1 };
    Ok(flags.into_iter().zip(z).filter(|(_, v)| *v != 0).map(|(f, v)| (f, v * orient)).collect())
}

/// Degree of `ψ` on top homology.
pub fn degree_by_homology(psi: &FaceMap<'_>) -> Result<i64> {
    if psi.source.dim() != psi.target.dim() {
        return Err(Error::Shape("source and target dimensions differ".into()));
    }
    let zx = fundamental_cycle(psi.source)?;
    let zy = fundamental_cycle(psi.target)?;
    let mut pushed: HashMap<Flag, i128> = HashMap::new();
    for (f, v) in &zx {
        let image: Vec<usize> = f.0.iter().map(|&x| psi.apply(x)).collect();
        if image.windows(2).all(|w| w[0] != w[1]) {
            *pushed.entry(Flag(image)).or_insert(0) += v;
        }
    }
    for k in pushed.keys() {
        if !zy.contains_key(k) {
            return Err(Error::Consistency("image simplex outside the target cycle".into()));
        }
    }
    let mut degree: Option<i128> = None;
    for (f, y) in &zy {
        let x = pushed.get(f).copied().unwrap_or(0);
        if x % y != 0 {
            return Err(Error::Consistency("pushed cycle is not a multiple of the target cycle".into()));
        }
        match degree {
            None => degree = Some(x / y),
            Some(d) if d != x / y => {
                return Err(Error::Consistency("pushed cycle is not a multiple of the target cycle".into()))
            }
            _ => {}
        }
    }
    i64::try_from(degree.unwrap_or(0)).map_err(|_| Error::Overflow)
}
