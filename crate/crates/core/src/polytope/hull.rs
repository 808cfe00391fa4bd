//! Exact convex hulls of integer point sets by incremental beneath-beyond.
//!
//! Facets are kept as `(outer normal, offset, member points)` where the member
//! list holds every inserted point on the facet hyperplane. Ridges are detected
//! as intersections of a visible and a non-visible facet of affine rank `k - 1`,
//! which stays correct for non-simplicial facets and coplanar insertions.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Incremental integer row echelon basis.
#[derive(Default, Clone)]
pub(crate) struct RowReducer {
    rows: Vec<(usize, Vec<i128>)>,
}

impl RowReducer {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    fn reduce(&self, v: &[i128]) -> Vec<i128> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p] == 0 {
                continue;
            }
            let (a, b) = (row[*p], v[*p]);
            let g = gcd(a, b);
            let (a, b) = (a / g, b / g);
            for (x, r) in v.iter_mut().zip(row) {
                *x = *x * a - b * r;
            }
            primitive(&mut v);
        }
        v
    }

    /// Adds `v` when it is independent of the current rows.
    pub fn insert(&mut self, v: &[i128]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

/// Affine rank (number of affinely independent points) of the selected points.
pub(crate) fn affine_rank(points: &[Vec<i128>], idx: &[usize]) -> usize {
    affine_basis(points, idx).len()
}

/// Greedy maximal affinely independent subset of `idx`.
pub(crate) fn affine_basis(points: &[Vec<i128>], idx: &[usize]) -> Vec<usize> {
    let Some(&first) = idx.first() else {
        return Vec::new();
    };
    let mut red = RowReducer::default();
    let mut basis = vec![first];
    for &i in &idx[1..] {
        let d: Vec<i128> = points[i].iter().zip(&points[first]).map(|(a, b)| a - b).collect();
        if red.insert(&d) {
            basis.push(i);
        }
    }
    basis
}

fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Primitive normal of the hyperplane through `k` affinely independent points in `ℤᵏ`.
fn hyperplane(points: &[Vec<i128>], through: &[usize]) -> (Vec<i128>, i128) {
    let p0 = &points[through[0]];
    let k = p0.len();
    let diffs: Vec<Vec<i128>> = through[1..]
        .iter()
        .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal: Vec<i128> = (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> = diffs
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                .collect();
            let d = det_i128(minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    primitive(&mut normal);
    let offset = dot(&normal, p0);
    (normal, offset)
}

#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: Vec<i128>,
    pub offset: i128,
    pub members: Vec<usize>,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Facets of the hull of distinct points spanning `ℤᵏ` affinely, `k ≥ 1`.
pub(crate) fn hull_facets(points: &[Vec<i128>]) -> Result<Vec<RawFacet>> {
    let k = points.first().ok_or(Error::EmptyInput)?.len();
    let all: Vec<usize> = (0..points.len()).collect();
    let simplex = affine_basis(points, &all);
    if simplex.len() != k + 1 {
        return Err(Error::DegeneratePolytope);
    }
    // k+1 times an interior point of the initial simplex.
    let mut center = vec![0i128; k];
    for &i in &simplex {
        for (c, x) in center.iter_mut().zip(&points[i]) {
            *c += x;
        }
    }
    let scale = (k + 1) as i128;
    let orient = |(mut n, mut off): (Vec<i128>, i128)| {
        if dot(&n, &center) > scale * off {
            n.iter_mut().for_each(|x| *x = -*x);
            off = -off;
        }
        (n, off)
    };

    let mut inserted: Vec<usize> = simplex.clone();
    inserted.sort_unstable();
    let mut facets: Vec<RawFacet> = Vec::new();
    for &skip in &simplex {
        let through: Vec<usize> = simplex.iter().copied().filter(|&i| i != skip).collect();
        let (normal, offset) = orient(hyperplane(points, &through));
        let mut members = through;
        members.sort_unstable();
        facets.push(RawFacet { normal, offset, members });
    }

    for p in 0..points.len() {
        if simplex.contains(&p) {
            continue;
        }
        let side: Vec<i128> = facets.iter().map(|f| dot(&f.normal, &points[p]) - f.offset).collect();
        let visible: Vec<usize> = (0..facets.len()).filter(|&i| side[i] > 0).collect();
        let mut kept: Vec<RawFacet> = Vec::with_capacity(facets.len());
        if visible.is_empty() {
            for (f, s) in facets.iter_mut().zip(&side) {
                if *s == 0 {
                    f.members.push(p);
                    f.members.sort_unstable();
                }
            }
            inserted.push(p);
            inserted.sort_unstable();
            continue;
        }
        let mut new_planes: Vec<(Vec<i128>, i128)> = Vec::new();
        for &v in &visible {
            for (g, s) in side.iter().enumerate() {
                if *s > 0 {
                    continue;
                }
                let ridge = intersect(&facets[v].members, &facets[g].members);
                let basis = affine_basis(points, &ridge);
                if basis.len() + 1 != k {
                    continue;
                }
                let mut through = basis;
                through.push(p);
                new_planes.push(orient(hyperplane(points, &through)));
            }
        }
        for (i, f) in facets.into_iter().enumerate() {
            if side[i] <= 0 {
                kept.push(f);
            }
        }
        inserted.push(p);
        inserted.sort_unstable();
        let mut index: HashMap<(Vec<i128>, i128), usize> = kept
            .iter()
            .enumerate()
            .map(|(i, f)| ((f.normal.clone(), f.offset), i))
            .collect();
        for (normal, offset) in new_planes {
            if index.contains_key(&(normal.clone(), offset)) {
                continue;
            }
            index.insert((normal.clone(), offset), kept.len());
            kept.push(RawFacet { normal, offset, members: Vec::new() });
        }
        for f in kept.iter_mut() {
            f.members = inserted
                .iter()
                .copied()
                .filter(|&i| dot(&f.normal, &points[i]) == f.offset)
                .collect();
        }
        facets = kept;
    }
    for f in &mut facets {
        f.members.sort_unstable();
    }
    Ok(facets)
}

/// All nonempty proper faces as member sets, closed under intersection of facets.
pub(crate) fn face_sets(points: &[Vec<i128>], facets: &[RawFacet]) -> Vec<(Vec<usize>, usize)> {
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for f in facets {
        if !seen.contains_key(&f.members) {
            let r = affine_rank(points, &f.members);
            seen.insert(f.members.clone(), r);
            frontier.push(f.members.clone());
        }
    }
    while let Some(face) = frontier.pop() {
        for f in facets {
            let s = intersect(&face, &f.members);
            if s.is_empty() || s.len() == face.len() || seen.contains_key(&s) {
                continue;
            }
            let r = affine_rank(points, &s);
            seen.insert(s.clone(), r);
            frontier.push(s);
        }
    }
    seen.into_iter().map(|(s, r)| (s, r - 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i128]]) -> Vec<Vec<i128>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let p = pts(&[&[0, 0], &[2, 0], &[1, 0], &[1, 1], &[0, 2], &[2, 2]]);
        let f = hull_facets(&p).unwrap();
        assert_eq!(f.len(), 4);
        let bottom = f.iter().find(|f| f.normal == vec![0, -1]).unwrap();
        assert_eq!(bottom.members, vec![0, 1, 2]);
    }

    #[test]
    fn segment_in_one_dimension() {
        let p = pts(&[&[0], &[3], &[-1], &[2]]);
        let f = hull_facets(&p).unwrap();
        assert_eq!(f.len(), 2);
        let mut ends: Vec<_> = f.iter().map(|f| f.members.clone()).collect();
        ends.sort();
        assert_eq!(ends, vec![vec![1], vec![2]]);
    }

    #[test]
    fn cube_faces() {
        let mut v = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    v.push(vec![x, y, z]);
                }
            }
        }
        let f = hull_facets(&v).unwrap();
        assert_eq!(f.len(), 6);
        let faces = face_sets(&v, &f);
        let count = |d: usize| faces.iter().filter(|(_, k)| *k == d).count();
        assert_eq!((count(0), count(1), count(2)), (8, 12, 6));
    }
}
