//! Exact rational polytopes with full face lattices.

mod hull;
pub mod minkowski;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::lattice::determinant_rational;
use crate::exactalg::Rational;
use hull::RowReducer;

pub use minkowski::{is_developed, minkowski_sum, mixed_volume_ie, Developedness, MinkowskiSystem};

pub type Point = Vec<Rational>;

/// Supporting inequality `⟨normal, x⟩ ≤ offset`. The normal is a primitive integer
/// outer normal; for lower-dimensional polytopes it is a relative facet normal
/// lifted to the ambient space (zero outside the chosen coordinate chart).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: Rational,
    pub face: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sorted indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Indices of the facets containing this face (empty for the improper face).
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    by_vertices: HashMap<Vec<usize>, usize>,
}

impl Polytope {
    /// Convex hull of a nonempty set of rational points.
    ///
    /// Lower-dimensional inputs produce a polytope flagged by
    /// [`is_full_dimensional`](Self::is_full_dimensional) `== false`, whose facets are
    /// relative facets.
    pub fn convex_hull(points: &[Point]) -> Result<Polytope> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let n = first.len();
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.len() });
            }
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();

        let lcm = pts
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scaled: Vec<Vec<i128>> = pts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| (x.numer() * (&lcm / x.denom())).to_i128().ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;

        let mut red = RowReducer::default();
        for p in &scaled[1..] {
            let d: Vec<i128> = p.iter().zip(&scaled[0]).map(|(a, b)| a - b).collect();
            red.insert(&d);
        }
        let k = red.rank();
        if k == 0 {
            return Ok(Self::assemble(n, 0, pts, Vec::new(), vec![(vec![0], 0)], &lcm));
        }
        let mut chart = red.pivots();
        chart.sort_unstable();
        let projected: Vec<Vec<i128>> = scaled
            .iter()
            .map(|p| chart.iter().map(|&c| p[c]).collect())
            .collect();
        let raw = hull::hull_facets(&projected)?;
        let face_sets = hull::face_sets(&projected, &raw);
        let lifted: Vec<(Vec<i128>, i128, Vec<usize>)> = raw
            .into_iter()
            .map(|f| {
                let mut normal = vec![0i128; n];
                for (&c, x) in chart.iter().zip(&f.normal) {
                    normal[c] = *x;
                }
                (normal, f.offset, f.members)
            })
            .collect();
        Ok(Self::assemble(n, k, pts, lifted, face_sets, &lcm))
    }

    fn assemble(
        ambient: usize,
        dim: usize,
        pts: Vec<Point>,
        raw_facets: Vec<(Vec<i128>, i128, Vec<usize>)>,
        face_sets: Vec<(Vec<usize>, usize)>,
        lcm: &BigInt,
    ) -> Polytope {
        // Vertices are the zero-dimensional faces; for a point it is the point.
        let mut vertex_ids: Vec<usize> = if dim == 0 {
            vec![0]
        } else {
            face_sets.iter().filter(|(_, d)| *d == 0).map(|(s, _)| s[0]).collect()
        };
        vertex_ids.sort_unstable();
        let renum: HashMap<usize, usize> =
            vertex_ids.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices: Vec<Point> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();
        let restrict = |s: &[usize]| -> Vec<usize> {
            let mut v: Vec<usize> = s.iter().filter_map(|i| renum.get(i).copied()).collect();
            v.sort_unstable();
            v
        };

        let mut faces: Vec<Face> = if dim == 0 {
            Vec::new()
        } else {
            face_sets
                .iter()
                .map(|(s, d)| Face { vertices: restrict(s), dim: *d, facets: Vec::new() })
                .collect()
        };
        faces.push(Face { vertices: (0..vertices.len()).collect(), dim, facets: Vec::new() });
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));

        let by_vertices: HashMap<Vec<usize>, usize> =
            faces.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect();

        let mut facets: Vec<Facet> = raw_facets
            .into_iter()
            .map(|(normal, off, members)| Facet {
                normal: normal.iter().map(|&x| x as i64).collect(),
                offset: Rational::new(BigInt::from(off), lcm.clone()),
                face: by_vertices[&restrict(&members)],
            })
            .collect();
        facets.sort_by(|a, b| b.normal.cmp(&a.normal).then(b.offset.cmp(&a.offset)));
        for (fi, f) in facets.iter().enumerate() {
            let fverts = faces[f.face].vertices.clone();
            for face in faces.iter_mut() {
                if face.dim < dim && is_subset(&face.vertices, &fverts) {
                    face.facets.push(fi);
                }
            }
        }

        let mut up = vec![Vec::new(); faces.len()];
        let mut down = vec![Vec::new(); faces.len()];
        for i in 0..faces.len() {
            for j in 0..faces.len() {
                if faces[j].dim == faces[i].dim + 1 && is_subset(&faces[i].vertices, &faces[j].vertices)
                {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        Polytope { ambient, dim, vertices, facets, faces, up, down, by_vertices }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn is_point(&self) -> bool {
        self.dim == 0
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_index(&self, p: &[Rational]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(p)).ok()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All nonempty faces, sorted by dimension then vertex set; the improper face is last.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn improper_face(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn face_by_vertices(&self, vertices: &[usize]) -> Option<usize> {
        self.by_vertices.get(vertices).copied()
    }

    /// Face index of the vertex with the given vertex index.
    pub fn vertex_face(&self, v: usize) -> usize {
        self.by_vertices[&vec![v]]
    }

    /// Faces one dimension higher containing face `i`.
    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Faces one dimension lower contained in face `i`.
    pub fn subfaces(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn contains_face(&self, outer: usize, inner: usize) -> bool {
        is_subset(&self.faces[inner].vertices, &self.faces[outer].vertices)
    }

    /// Number of faces of each dimension `0..=dim` (improper face included at `dim`).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// Face on which `⟨w, ·⟩` attains its maximum.
    pub fn argmax_face(&self, w: &[Rational]) -> usize {
        let vals: Vec<Rational> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect();
        let max = vals.iter().max().expect("nonempty").clone();
        let set: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == max).collect();
        self.by_vertices[&set]
    }

    pub fn argmax_face_int(&self, w: &[i64]) -> usize {
        let w: Vec<Rational> = w.iter().map(|&x| Rational::from_integer(x.into())).collect();
        self.argmax_face(&w)
    }

    /// Sum of the outer facet normals active on a face; strictly inside its normal cone.
    /// Zero for the improper face.
    pub fn interior_covector(&self, face: usize) -> Vec<i64> {
        let mut w = vec![0i64; self.ambient];
        for &fi in &self.faces[face].facets {
            for (x, y) in w.iter_mut().zip(&self.facets[fi].normal) {
                *x += y;
            }
        }
        w
    }

    pub fn centroid(&self, face: usize) -> Point {
        let vs = &self.faces[face].vertices;
        let k = Rational::from_integer(BigInt::from(vs.len()));
        (0..self.ambient)
            .map(|c| vs.iter().map(|&v| self.vertices[v][c].clone()).sum::<Rational>() / &k)
            .collect()
    }

    /// Exact Euclidean volume through a pulling triangulation of the face lattice.
    pub fn volume(&self) -> Result<Rational> {
        if !self.is_full_dimensional() {
            return Err(Error::DegeneratePolytope);
        }
        let mut simplices = Vec::new();
        self.pull(self.improper_face(), &mut Vec::new(), &mut simplices);
        let mut fact = BigInt::one();
        for i in 2..=self.ambient {
            fact *= i;
        }
        let mut vol = Rational::zero();
        for s in simplices {
            let v0 = &self.vertices[s[0]];
            let m: Vec<Vec<Rational>> = s[1..]
                .iter()
                .map(|&i| self.vertices[i].iter().zip(v0).map(|(a, b)| a - b).collect())
                .collect();
            vol += determinant_rational(&m).abs();
        }
        Ok(vol / Rational::from_integer(fact))
    }

    // Triangulates `face` by pulling its smallest vertex, appending `apexes` to each simplex.
    fn pull(&self, face: usize, apexes: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let f = &self.faces[face];
        let apex = f.vertices[0];
        if f.dim == 0 {
            let mut s = apexes.clone();
            s.push(apex);
            out.push(s);
            return;
        }
        apexes.push(apex);
        for &sub in &self.down[face] {
            if !self.faces[sub].vertices.contains(&apex) {
                self.pull(sub, apexes, out);
            }
        }
        apexes.pop();
    }

    /// Translate by an integer vector.
    pub fn translated(&self, t: &[Rational]) -> Result<Polytope> {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        Polytope::convex_hull(&pts)
    }

    /// Integer vertex coordinates, if all vertices are lattice points.
    pub fn integer_vertex(&self, v: usize) -> Option<Vec<i64>> {
        self.vertices[v]
            .iter()
            .map(|x| if x.is_integer() { x.numer().to_i64() } else { None })
            .collect()
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
    }
    true
}

/// Integer point helper used throughout tests and generators.
pub fn int_point(p: &[i64]) -> Point {
    p.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn hull(pts: &[&[i64]]) -> Polytope {
        Polytope::convex_hull(&pts.iter().map(|p| int_point(p)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn triangle() {
        let t = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.vertices().len(), 3);
        assert_eq!(t.facets().len(), 3);
        assert_eq!(t.volume().unwrap(), rat(1, 2));
        assert_eq!(t.f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn square_with_redundant_points() {
        let s = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 1], &[0, 0]]);
        assert_eq!(s.vertices().len(), 4);
        assert_eq!(s.facets().len(), 4);
        assert_eq!(s.volume().unwrap(), int(1));
        // Facets are listed by descending normal.
        let normals: Vec<_> = s.facets().iter().map(|f| f.normal.clone()).collect();
        assert_eq!(normals, vec![vec![1, 0], vec![0, 1], vec![0, -1], vec![-1, 0]]);
    }

    #[test]
    fn segment_in_one_dimension() {
        let s = hull(&[&[-1], &[3], &[0]]);
        assert_eq!(s.vertices(), &[int_point(&[-1]), int_point(&[3])]);
        assert_eq!(s.volume().unwrap(), int(4));
    }

    #[test]
    fn rational_points() {
        let p = Polytope::convex_hull(&[
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(1, 3)],
        ])
        .unwrap();
        assert_eq!(p.volume().unwrap(), rat(1, 12));
        let diag = p.facets().iter().find(|f| f.normal == vec![2, 3]).unwrap();
        assert_eq!(diag.offset, int(1));
    }

    #[test]
    fn degenerate_segment_in_plane() {
        let s = hull(&[&[0, 0], &[2, 1], &[4, 2]]);
        assert!(!s.is_full_dimensional());
        assert_eq!(s.dim(), 1);
        assert_eq!(s.vertices().len(), 2);
        assert!(matches!(s.volume(), Err(Error::DegeneratePolytope)));
        assert_eq!(s.face(s.argmax_face_int(&[1, 0])).vertices, vec![1]);
        assert_eq!(s.face(s.argmax_face_int(&[1, -2])).vertices, vec![0, 1]);
    }

    #[test]
    fn empty_input() {
        assert!(matches!(Polytope::convex_hull(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn euler_relation_cube_and_octahedron() {
        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(int_point(&[x, y, z]));
                }
            }
        }
        let c = Polytope::convex_hull(&cube).unwrap();
        assert_eq!(c.f_vector(), vec![8, 12, 6, 1]);
        let o = hull(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        assert_eq!(o.f_vector(), vec![6, 12, 8, 1]);
        assert_eq!(o.volume().unwrap(), rat(4, 3));
    }

    #[test]
    fn four_dimensional_cross_polytope() {
        let mut pts = Vec::new();
        for i in 0..4 {
            for s in [-1, 1] {
                let mut p = vec![0; 4];
                p[i] = s;
                pts.push(int_point(&p));
            }
        }
        let p = Polytope::convex_hull(&pts).unwrap();
        assert_eq!(p.f_vector(), vec![8, 24, 32, 16, 1]);
        assert_eq!(p.volume().unwrap(), rat(2, 3));
    }
}
