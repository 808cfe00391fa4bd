//! The pyramid over a vertex cone and its labelling map onto the boundary of the
//! standard simplex. Its degree equals the combinatorial coefficient at the vertex.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{vertex_covering, FaceMap, Flag, PolyhedralComplex};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::polytope::{int_point, MinkowskiSystem, Point, Polytope};

/// Boundary of `conv(0, e₁, …, eₙ)` and the vertex index of each label `0..=n`
/// (label 0 is the origin, label `j` is `eⱼ`).
pub fn standard_simplex_boundary(n: usize) -> Result<(Polytope, PolyhedralComplex, Vec<usize>)> {
    let mut pts = vec![int_point(&vec![0; n])];
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        pts.push(int_point(&e));
    }
    let simplex = Polytope::convex_hull(&pts)?;
    let labels = pts.iter().map(|p| simplex.vertex_index(p).expect("vertex")).collect();
    let boundary = PolyhedralComplex::boundary_of(&simplex)?;
    Ok((simplex, boundary, labels))
}

/// Source and target complexes of the pyramid map at one vertex.
#[derive(Clone, Debug)]
pub struct PyramidMap {
    pub pyramid: Polytope,
    pub source: PolyhedralComplex,
    pub target: PolyhedralComplex,
    pub assignment: Vec<usize>,
    /// `v₀ ⊂ conv(v₀,v₁) ⊂ … ⊂ conv(v₀,…,vₙ₋₁)`.
    pub reference: Flag,
    /// Label set (0 = base, `i+1` = summand `i`) of every source cell.
    pub signatures: Vec<BTreeSet<usize>>,
}

impl PyramidMap {
    pub fn face_map(&self) -> Result<FaceMap<'_>> {
        FaceMap::new(&self.source, &self.target, self.assignment.clone())
    }
}

/// Pyramid `conv(A, rays)` over the tangent cone of the total at vertex `A`, cut by
/// `⟨w, x − A⟩ = 1` with `w` minus the sum of the outer normals at `A`. The base facet
/// is labelled 0 and a side facet lying on the facet `F` of the total is labelled
/// `{i+1 : Fᵢ is a vertex}`.
pub fn pyramid_map(ms: &MinkowskiSystem, vertex: usize) -> Result<PyramidMap> {
    let total = ms.total();
    let n = total.ambient_dim();
    if !total.is_full_dimensional() {
        return Err(Error::DegeneratePolytope);
    }
    let cov = vertex_covering(ms, vertex)?;
    let a_face = total.vertex_face(vertex);
    let apex = total.vertices()[vertex].clone();
    let w: Vec<BigInt> = total.interior_covector(a_face).iter().map(|&x| BigInt::from(-x)).collect();

    let mut pts: Vec<Point> = vec![apex.clone()];
    for &edge in total.cofaces(a_face) {
        let other = *total
            .face(edge)
            .vertices
            .iter()
            .find(|&&v| v != vertex)
            .expect("edge has two vertices");
        let d: Vec<Rational> =
            total.vertices()[other].iter().zip(&apex).map(|(b, a)| b - a).collect();
        let h: Rational = d.iter().zip(&w).map(|(x, y)| x * y).sum();
        if h <= Rational::zero() {
            return Err(Error::Consistency("cone covector is not positive on an edge".into()));
        }
        pts.push(d.iter().zip(&apex).map(|(x, a)| x / &h + a).collect());
    }
    let pyramid = Polytope::convex_hull(&pts)?;
    let apex_idx = pyramid.vertex_index(&apex).expect("apex is a vertex");

    let facet_labels: Vec<BTreeSet<usize>> = pyramid
        .facets()
        .iter()
        .map(|pf| {
            if !pyramid.face(pf.face).vertices.contains(&apex_idx) {
                return Ok(BTreeSet::from([0]));
            }
            let k = cov
                .facets
                .iter()
                .position(|&f| total.facets()[f].normal == pf.normal)
                .ok_or_else(|| Error::Consistency("side facet without a matching facet".into()))?;
            Ok(cov.groups[k].iter().map(|i| i + 1).collect())
        })
        .collect::<Result<_>>()?;

    let source = PolyhedralComplex::boundary_of(&pyramid)?;
    let (_, target, labels) = standard_simplex_boundary(n)?;
    let mut assignment = Vec::with_capacity(source.len());
    let mut signatures = Vec::with_capacity(source.len());
    for g in 0..source.len() {
        let mut sig = BTreeSet::new();
        for (pf, lab) in pyramid.facets().iter().zip(&facet_labels) {
            if pyramid.contains_face(pf.face, g) {
                sig.extend(lab.iter().copied());
            }
        }
        let mut image: Vec<usize> =
            (0..=n).filter(|j| !sig.contains(j)).map(|j| labels[j]).collect();
        image.sort_unstable();
        let cell = target
            .cell_by_vertices(&image)
            .ok_or_else(|| Error::Consistency(format!("signature {sig:?} has no image face")))?;
        assignment.push(cell);
        signatures.push(sig);
    }

    let mut reference = Vec::with_capacity(n);
    for k in 0..n {
        let mut v: Vec<usize> = labels[..=k].to_vec();
        v.sort_unstable();
        reference.push(target.cell_by_vertices(&v).expect("simplex face"));
    }
    Ok(PyramidMap { pyramid, source, target, assignment, reference: Flag(reference), signatures })
}
