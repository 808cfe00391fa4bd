use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{is_subset, Point, Polytope};
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Minkowski sum of nonempty polytopes sharing an ambient dimension.
pub fn minkowski_sum(summands: &[Polytope]) -> Result<Polytope> {
    let first = summands.first().ok_or(Error::EmptyInput)?;
    let n = first.ambient_dim();
    let mut acc: Vec<Point> = first.vertices().to_vec();
    for p in &summands[1..] {
        if p.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.ambient_dim() });
        }
        let mut pts = Vec::with_capacity(acc.len() * p.vertices().len());
        for a in &acc {
            for b in p.vertices() {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        acc = Polytope::convex_hull(&pts)?.vertices().to_vec();
    }
    Polytope::convex_hull(&acc)
}

/// `Δ = Δ₁+…+Δₙ` with the summand faces of every face of `Δ`.
#[derive(Clone, Debug)]
pub struct MinkowskiSystem {
    summands: Vec<Polytope>,
    total: Polytope,
    decomposition: Vec<Vec<usize>>,
}

impl MinkowskiSystem {
    pub fn new(summands: Vec<Polytope>) -> Result<Self> {
        let total = minkowski_sum(&summands)?;
        let decomposition = (0..total.faces().len())
            .map(|g| {
                let w = total.interior_covector(g);
                summands.iter().map(|p| p.argmax_face_int(&w)).collect()
            })
            .collect();
        Ok(MinkowskiSystem { summands, total, decomposition })
    }

    pub fn n(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[Polytope] {
        &self.summands
    }

    pub fn total(&self) -> &Polytope {
        &self.total
    }

    /// Face indices `(Γ₁,…,Γₙ)` into the summands for face `g` of the total.
    pub fn decompose(&self, g: usize) -> &[usize] {
        &self.decomposition[g]
    }

    /// Integer summand vertices `A₁,…,Aₙ` of total vertex `v`.
    pub fn vertex_decomposition(&self, v: usize) -> Vec<Vec<i64>> {
        let g = self.total.vertex_face(v);
        self.decomposition[g]
            .iter()
            .zip(&self.summands)
            .map(|(&f, p)| {
                let vi = p.face(f).vertices[0];
                p.integer_vertex(vi).expect("lattice summand")
            })
            .collect()
    }

    /// Indices `i` with `Γᵢ` a vertex, for face `g` of the total.
    pub fn vertex_summands(&self, g: usize) -> Vec<usize> {
        self.decomposition[g]
            .iter()
            .zip(&self.summands)
            .enumerate()
            .filter(|(_, (&f, p))| p.face(f).dim == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks that every face is the Minkowski sum of its summand faces.
    pub fn check_decomposition(&self) -> bool {
        self.total.faces().iter().enumerate().all(|(g, face)| {
            let parts: Vec<Polytope> = self.decomposition[g]
                .iter()
                .zip(&self.summands)
                .map(|(&f, p)| {
                    let pts: Vec<Point> =
                        p.face(f).vertices.iter().map(|&v| p.vertices()[v].clone()).collect();
                    Polytope::convex_hull(&pts)
                })
                .collect::<Result<_>>()
                .expect("faces are nonempty");
            let sum = minkowski_sum(&parts).expect("nonempty");
            let mine: Vec<Point> =
                face.vertices.iter().map(|&v| self.total.vertices()[v].clone()).collect();
            sum.vertices() == mine.as_slice()
        })
    }

    pub fn faces_containing(&self, inner: usize) -> impl Iterator<Item = usize> + '_ {
        let verts = self.total.face(inner).vertices.clone();
        (0..self.total.faces().len())
            .filter(move |&g| is_subset(&verts, &self.total.face(g).vertices))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Developedness {
    pub developed: bool,
    /// A covector leaving no summand face a vertex, when one exists.
    pub witness: Option<Vec<i64>>,
}

/// Developedness of the summands of `ms`.
///
/// A failure on a face propagates to every facet containing it, so facets suffice;
/// they are scanned in descending normal order and the first failure is the witness.
pub fn is_developed(ms: &MinkowskiSystem) -> Developedness {
    let n = ms.total.ambient_dim();
    let fail = |witness| Developedness { developed: false, witness };
    if ms.n() != n || ms.summands.iter().any(Polytope::is_point) {
        return fail(None);
    }
    if !ms.total.is_full_dimensional() {
        return fail(orthogonal_covector(&ms.total));
    }
    for f in ms.total.facets() {
        if ms.vertex_summands(f.face).is_empty() {
            return fail(Some(f.normal.clone()));
        }
    }
    Developedness { developed: true, witness: None }
}

// Primitive integer covector constant on a lower-dimensional polytope.
fn orthogonal_covector(p: &Polytope) -> Option<Vec<i64>> {
    let v = p.vertices();
    let n = p.ambient_dim();
    let mut rows: Vec<Vec<Rational>> = v[1..]
        .iter()
        .map(|x| x.iter().zip(&v[0]).map(|(a, b)| a - b).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &piv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut k = vec![Rational::zero(); n];
    k[free] = Rational::one();
    for (i, &c) in pivots.iter().enumerate() {
        k[c] = -rows[i][free].clone();
    }
    let lcm = k.iter().fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
    let ints: Vec<BigInt> = k.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| num_integer::gcd(g, x.clone()));
    ints.iter().map(|x| (x / &g).to_i64()).collect()
}

/// `Σ_{∅≠S} (−1)^{n−|S|} vol(Σ_{i∈S} Δᵢ)`, the Bernstein-normalized mixed volume.
/// Lower-dimensional partial sums contribute zero.
pub fn mixed_volume_ie(summands: &[Polytope]) -> Result<BigInt> {
    let n = summands.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > 20 {
        return Err(Error::Shape(format!("{n} summands")));
    }
    let mut total = Rational::zero();
    for mask in 1u32..(1 << n) {
        let subset: Vec<Polytope> =
            (0..n).filter(|i| mask >> i & 1 == 1).map(|i| summands[i].clone()).collect();
        let sum = minkowski_sum(&subset)?;
        if !sum.is_full_dimensional() {
            continue;
        }
        let vol = sum.volume()?;
        if (n - subset.len()).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    if !total.is_integer() {
        return Err(Error::Consistency(format!("mixed volume {total} is not an integer")));
    }
    let mv = total.to_integer();
    if mv.is_negative() {
        return Err(Error::Consistency(format!("mixed volume {mv} is negative")));
    }
    Ok(mv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::int_point;

    fn hull(pts: &[&[i64]]) -> Polytope {
        Polytope::convex_hull(&pts.iter().map(|p| int_point(p)).collect::<Vec<_>>()).unwrap()
    }

    fn square_system() -> MinkowskiSystem {
        MinkowskiSystem::new(vec![hull(&[&[0, 0], &[1, 0]]), hull(&[&[0, 0], &[0, 1]])]).unwrap()
    }

    fn face_points(p: &Polytope, f: usize) -> Vec<Point> {
        p.face(f).vertices.iter().map(|&v| p.vertices()[v].clone()).collect()
    }

    #[test]
    fn square_decomposition() {
        let ms = square_system();
        let total = ms.total();
        assert_eq!(total.vertices().len(), 4);
        let bottom = total.facets().iter().find(|f| f.normal == vec![0, -1]).unwrap().face;
        let d = ms.decompose(bottom);
        assert_eq!(face_points(&ms.summands()[0], d[0]).len(), 2);
        assert_eq!(face_points(&ms.summands()[1], d[1]), vec![int_point(&[0, 0])]);
        let right = total.facets().iter().find(|f| f.normal == vec![1, 0]).unwrap().face;
        let d = ms.decompose(right);
        assert_eq!(face_points(&ms.summands()[0], d[0]), vec![int_point(&[1, 0])]);
        assert_eq!(face_points(&ms.summands()[1], d[1]).len(), 2);
        let a = total.vertex_index(&int_point(&[1, 1])).unwrap();
        assert_eq!(ms.vertex_decomposition(a), vec![vec![1, 0], vec![0, 1]]);
        assert!(ms.check_decomposition());
    }

    #[test]
    fn translation_by_point() {
        let tri = hull(&[&[0, 0], &[2, 0], &[0, 1]]);
        let ms = MinkowskiSystem::new(vec![tri.clone(), hull(&[&[1, 1]])]).unwrap();
        for g in 0..ms.total().faces().len() {
            let d = ms.decompose(g);
            assert_eq!(ms.summands()[1].face(d[1]).dim, 0);
            assert_eq!(tri.face(d[0]).dim, ms.total().face(g).dim);
        }
    }

    #[test]
    fn developedness() {
        assert!(is_developed(&square_system()).developed);
        let seg = hull(&[&[0, 0], &[1, 0]]);
        let par = MinkowskiSystem::new(vec![seg.clone(), hull(&[&[0, 1], &[1, 1]])]).unwrap();
        assert!(!is_developed(&par).developed);
        let tri = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        let tt = MinkowskiSystem::new(vec![tri.clone(), tri]).unwrap();
        assert_eq!(
            is_developed(&tt),
            Developedness { developed: false, witness: Some(vec![1, 1]) }
        );
        let pt = MinkowskiSystem::new(vec![seg, hull(&[&[3, 3]])]).unwrap();
        assert_eq!(is_developed(&pt).witness, None);
    }

    #[test]
    fn degenerate_total_has_orthogonal_witness() {
        let a = hull(&[&[0, 0], &[1, 1]]);
        let b = hull(&[&[0, 0], &[2, 2]]);
        let ms = MinkowskiSystem::new(vec![a, b]).unwrap();
        let d = is_developed(&ms);
        assert!(!d.developed);
        let w = d.witness.unwrap();
        assert_eq!(w[0] + w[1], 0);
        assert_ne!(w, vec![0, 0]);
    }

    #[test]
    fn mixed_volumes() {
        let e1 = hull(&[&[0, 0], &[1, 0]]);
        let e2 = hull(&[&[0, 0], &[0, 1]]);
        let tri = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        let two_e1 = hull(&[&[0, 0], &[2, 0]]);
        assert_eq!(mixed_volume_ie(&[e1.clone(), e2.clone()]).unwrap(), BigInt::from(1));
        assert_eq!(mixed_volume_ie(&[tri.clone(), tri.clone()]).unwrap(), BigInt::from(1));
        assert_eq!(mixed_volume_ie(&[two_e1, e2]).unwrap(), BigInt::from(2));
        let big = hull(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert_eq!(mixed_volume_ie(&[big, tri]).unwrap(), BigInt::from(3));
        assert_eq!(mixed_volume_ie(&[hull(&[&[-1], &[3]])]).unwrap(), BigInt::from(4));
    }

    #[test]
    fn mixed_volume_three_dimensional() {
        let simplex = hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let doubled = hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(
            mixed_volume_ie(&[simplex.clone(), doubled.clone(), doubled]).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            mixed_volume_ie(&[simplex.clone(), simplex.clone(), simplex]).unwrap(),
            BigInt::from(1)
        );
    }
}
