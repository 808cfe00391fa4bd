//! Signed flags of polyhedral complexes, degrees of face maps, vertex coverings
//! and the combinatorial coefficient `c(A)`.
//!
//! A flag sign is the orientation of the frame `e_k = centroid(X_k) − X_0`. On
//! the boundary of a convex body the frame is completed by the vector from `X_0`
//! to an interior point, which orients every boundary the same way.

pub mod pyramid;

use std::collections::BTreeSet;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::lattice::determinant_rational;
use crate::exactalg::Rational;
use crate::polytope::{is_developed, is_subset, MinkowskiSystem, Point, Polytope};

pub use pyramid::{pyramid_map, standard_simplex_boundary};

/// Finite face poset with vertex coordinates; cells are sorted vertex index sets.
#[derive(Clone, Debug)]
pub struct PolyhedralComplex {
    points: Vec<Point>,
    cells: Vec<Vec<usize>>,
    dims: Vec<usize>,
    dim: usize,
    interior: Option<Point>,
    up: Vec<Vec<usize>>,
}

/// Maximal chain of cells, listed by increasing dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Flag(pub Vec<usize>);

impl PolyhedralComplex {
    /// `interior` marks a boundary complex of a convex body of one dimension more.
    pub fn new(
        points: Vec<Point>,
        cells: Vec<(Vec<usize>, usize)>,
        interior: Option<Point>,
    ) -> Result<Self> {
        let ambient = points.first().ok_or(Error::EmptyInput)?.len();
        let dim = cells.iter().map(|c| c.1).max().ok_or(Error::EmptyInput)?;
        let expected = if interior.is_some() { ambient - 1 } else { ambient };
        if dim != expected {
            return Err(Error::Shape(format!(
                "complex of dimension {dim} cannot be oriented in dimension {ambient}"
            )));
        }
        let (mut cells, dims): (Vec<_>, Vec<_>) = cells
            .into_iter()
            .map(|(mut v, d)| {
                v.sort_unstable();
                (v, d)
            })
            .unzip();
        cells.iter_mut().for_each(|c| c.dedup());
        let up = (0..cells.len())
            .map(|i| {
                (0..cells.len())
                    .filter(|&j| dims[j] == dims[i] + 1 && is_subset(&cells[i], &cells[j]))
                    .collect()
            })
            .collect();
        Ok(PolyhedralComplex { points, cells, dims, dim, interior, up })
    }

    /// All faces of a full-dimensional polytope, including the polytope itself.
    /// Cell indices agree with the polytope's face indices.
    pub fn of_polytope(p: &Polytope) -> Result<Self> {
        if !p.is_full_dimensional() {
            return Err(Error::DegeneratePolytope);
        }
        let cells = p.faces().iter().map(|f| (f.vertices.clone(), f.dim)).collect();
        Self::new(p.vertices().to_vec(), cells, None)
    }

    /// Proper faces of a full-dimensional polytope; cell indices agree with the
    /// polytope's face indices (the improper face is last there and absent here).
    pub fn boundary_of(p: &Polytope) -> Result<Self> {
        if !p.is_full_dimensional() || p.dim() == 0 {
            return Err(Error::DegeneratePolytope);
        }
        let cells = p.faces()[..p.improper_face()]
            .iter()
            .map(|f| (f.vertices.clone(), f.dim))
            .collect();
        Self::new(p.vertices().to_vec(), cells, Some(p.centroid(p.improper_face())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn cell_dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn cell_by_vertices(&self, v: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c == v)
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        is_subset(&self.cells[inner], &self.cells[outer])
    }

    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn centroid(&self, i: usize) -> Point {
        let c = &self.cells[i];
        let k = Rational::from_integer(c.len().into());
        (0..self.points[0].len())
            .map(|j| c.iter().map(|&v| self.points[v][j].clone()).sum::<Rational>() / &k)
            .collect()
    }

    pub fn check_flag(&self, flag: &Flag) -> Result<()> {
        let c = &flag.0;
        if c.len() != self.dim + 1 || c.iter().any(|&x| x >= self.cells.len()) {
            return Err(Error::NotMaximalFlag);
        }
        for (k, &x) in c.iter().enumerate() {
            if self.dims[x] != k || (k > 0 && !self.contains(x, c[k - 1])) {
                return Err(Error::NotMaximalFlag);
            }
        }
        Ok(())
    }

    /// Orientation sign of a complete flag.
    pub fn flag_sign(&self, flag: &Flag) -> Result<i32> {
        self.check_flag(flag)?;
        let x0 = self.centroid(flag.0[0]);
        let mut frame: Vec<Vec<Rational>> = flag.0[1..]
            .iter()
            .map(|&x| self.centroid(x).iter().zip(&x0).map(|(a, b)| a - b).collect())
            .collect();
        if let Some(c) = &self.interior {
            frame.push(c.iter().zip(&x0).map(|(a, b)| a - b).collect());
        }
        let d = determinant_rational(&frame);
        if d.is_positive() {
            Ok(1)
        } else if d.is_negative() {
            Ok(-1)
        } else {
            Err(Error::Consistency("degenerate flag frame".into()))
        }
    }

    /// All complete flags, in lexicographic order of cell indices.
    pub fn flags(&self) -> Vec<Flag> {
        let mut out = Vec::new();
        let mut chain = Vec::with_capacity(self.dim + 1);
        for v in (0..self.cells.len()).filter(|&i| self.dims[i] == 0) {
            chain.push(v);
            self.extend(&mut chain, &mut out);
            chain.pop();
        }
        out.sort();
        out
    }

    fn extend(&self, chain: &mut Vec<usize>, out: &mut Vec<Flag>) {
        if chain.len() == self.dim + 1 {
            out.push(Flag(chain.clone()));
            return;
        }
        let last = *chain.last().expect("nonempty");
        for &next in &self.up[last] {
            chain.push(next);
            self.extend(chain, out);
            chain.pop();
        }
    }
}

/// Order-preserving assignment of cells of `source` to cells of `target`.
#[derive(Clone, Debug)]
pub struct FaceMap<'a> {
    pub source: &'a PolyhedralComplex,
    pub target: &'a PolyhedralComplex,
    pub assignment: Vec<usize>,
}

impl<'a> FaceMap<'a> {
    pub fn new(
        source: &'a PolyhedralComplex,
        target: &'a PolyhedralComplex,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() != source.len() || assignment.iter().any(|&y| y >= target.len()) {
            return Err(Error::Shape("face map must assign a target cell to every cell".into()));
        }
        for i in 0..source.len() {
            for j in 0..source.len() {
                if source.contains(j, i) && !target.contains(assignment[j], assignment[i]) {
                    return Err(Error::NotOrderPreserving);
                }
            }
        }
        Ok(FaceMap { source, target, assignment })
    }

    pub fn apply(&self, cell: usize) -> usize {
        self.assignment[cell]
    }
}

/// `sgn 𝒴 · Σ_{ψ(𝒳)=𝒴} sgn 𝒳`.
pub fn degree_by_flags(psi: &FaceMap<'_>, ref_flag: &Flag) -> Result<i64> {
    if psi.source.dim() != psi.target.dim() {
        return Err(Error::Shape("source and target dimensions differ".into()));
    }
    let s = psi.target.flag_sign(ref_flag)? as i64;
    let mut total = 0i64;
    let mut chain = Vec::new();
    preimage_sum(psi, &ref_flag.0, &mut chain, &mut total)?;
    Ok(s * total)
}

fn preimage_sum(
    psi: &FaceMap<'_>,
    target: &[usize],
    chain: &mut Vec<usize>,
    total: &mut i64,
) -> Result<()> {
    let k = chain.len();
    if k == target.len() {
        *total += psi.source.flag_sign(&Flag(chain.clone()))? as i64;
        return Ok(());
    }
    let candidates: Vec<usize> = match chain.last() {
        None => (0..psi.source.len()).filter(|&i| psi.source.cell_dim(i) == 0).collect(),
        Some(&last) => psi.source.cofaces(last).to_vec(),
    };
    for c in candidates {
        if psi.apply(c) == target[k] {
            chain.push(c);
            preimage_sum(psi, target, chain, total)?;
            chain.pop();
        }
    }
    Ok(())
}

/// Sign of a flag `A = Γ₀ ⊂ … ⊂ Γₙ = Δ` of face indices of a full-dimensional polytope.
pub fn flag_sign(p: &Polytope, chain: &[usize]) -> Result<i32> {
    if !p.is_full_dimensional() {
        return Err(Error::DegeneratePolytope);
    }
    let n = p.dim();
    if chain.len() != n + 1 || chain.iter().any(|&g| g >= p.faces().len()) {
        return Err(Error::NotMaximalFlag);
    }
    for (k, &g) in chain.iter().enumerate() {
        if p.face(g).dim != k || (k > 0 && !p.contains_face(g, chain[k - 1])) {
            return Err(Error::NotMaximalFlag);
        }
    }
    let x0 = p.centroid(chain[0]);
    let frame: Vec<Vec<Rational>> = chain[1..]
        .iter()
        .map(|&g| p.centroid(g).iter().zip(&x0).map(|(a, b)| a - b).collect())
        .collect();
    let d = determinant_rational(&frame);
    Ok(if d.is_positive() { 1 } else { -1 })
}

/// Facets of `Δ` through a vertex `A`, each with the summand indices whose face is a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCovering {
    /// Vertex index of `A` in the total polytope.
    pub vertex: usize,
    /// Facet indices of the total polytope through `A`.
    pub facets: Vec<usize>,
    /// `groups[k]`: the 0-based summand indices `i` such that `facets[k]ᵢ` is a vertex.
    pub groups: Vec<BTreeSet<usize>>,
    /// `d_sets[i]`: the facets (indices into the total's facet list) whose group contains `i`.
    pub d_sets: Vec<Vec<usize>>,
}

pub fn vertex_covering(ms: &MinkowskiSystem, vertex: usize) -> Result<VertexCovering> {
    let total = ms.total();
    if vertex >= total.vertices().len() {
        return Err(Error::VertexNotInFace);
    }
    let a = total.vertex_face(vertex);
    let facets = total.face(a).facets.clone();
    let groups: Vec<BTreeSet<usize>> = facets
        .iter()
        .map(|&f| ms.vertex_summands(total.facets()[f].face).into_iter().collect())
        .collect();
    let d_sets = (0..ms.n())
        .map(|i| {
            facets
                .iter()
                .zip(&groups)
                .filter(|(_, g)| g.contains(&i))
                .map(|(&f, _)| f)
                .collect()
        })
        .collect();
    Ok(VertexCovering { vertex, facets, groups, d_sets })
}

impl VertexCovering {
    /// 0-based signature of a face `g` of the total containing `A`.
    pub fn signature(&self, total: &Polytope, g: usize) -> Result<BTreeSet<usize>> {
        let a = total.vertex_face(self.vertex);
        if !total.contains_face(g, a) {
            return Err(Error::VertexNotInFace);
        }
        let mut sig = BTreeSet::new();
        for (&f, grp) in self.facets.iter().zip(&self.groups) {
            if total.contains_face(total.facets()[f].face, g) {
                sig.extend(grp.iter().copied());
            }
        }
        Ok(sig)
    }

    /// Relabels summand indices: index `i` becomes `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> VertexCovering {
        let groups: Vec<BTreeSet<usize>> =
            self.groups.iter().map(|g| g.iter().map(|&i| perm[i]).collect()).collect();
        let mut d_sets = vec![Vec::new(); self.d_sets.len()];
        for (i, d) in self.d_sets.iter().enumerate() {
            d_sets[perm[i]] = d.clone();
        }
        VertexCovering { vertex: self.vertex, facets: self.facets.clone(), groups, d_sets }
    }

    /// Signed count of flags `A = Γ₀ ⊂ … ⊂ Γₙ₋₁ ⊂ Δ` with `signature(Γₖ) = {k,…,n−1}`.
    pub fn coefficient(&self, total: &Polytope) -> Result<i64> {
        let n = self.d_sets.len();
        if total.dim() != n || !total.is_full_dimensional() {
            return Err(Error::DegeneratePolytope);
        }
        if self.d_sets.iter().any(Vec::is_empty) {
            return Ok(0);
        }
        let a = total.vertex_face(self.vertex);
        if self.signature(total, a)?.len() != n {
            return Ok(0);
        }
        let mut sum = 0i64;
        let mut chain = vec![a];
        self.walk(total, &mut chain, &mut sum)?;
        Ok(sum)
    }

    fn walk(&self, total: &Polytope, chain: &mut Vec<usize>, sum: &mut i64) -> Result<()> {
        let n = total.dim();
        let k = chain.len();
        if k == n {
            chain.push(total.improper_face());
            *sum += flag_sign(total, chain)? as i64;
            chain.pop();
            return Ok(());
        }
        let last = *chain.last().expect("nonempty");
        for &g in total.cofaces(last) {
            let sig = self.signature(total, g)?;
            if sig.len() == n - k && sig.iter().all(|&i| i >= k) {
                chain.push(g);
                self.walk(total, chain, sum)?;
                chain.pop();
            }
        }
        Ok(())
    }
}

/// 0-based signature of face `g` of the total at vertex `A`.
pub fn signature(ms: &MinkowskiSystem, vertex: usize, g: usize) -> Result<BTreeSet<usize>> {
    vertex_covering(ms, vertex)?.signature(ms.total(), g)
}

/// `c(A)` for total vertex index `vertex` of a developed system.
pub fn combinatorial_coefficient(ms: &MinkowskiSystem, vertex: usize) -> Result<i64> {
    let d = is_developed(ms);
    if !d.developed {
        return Err(Error::NotDeveloped { witness: d.witness });
    }
    vertex_covering(ms, vertex)?.coefficient(ms.total())
}

/// `c(A)` for every vertex of the total, in vertex order.
pub fn all_coefficients(ms: &MinkowskiSystem) -> Result<Vec<i64>> {
    let d = is_developed(ms);
    if !d.developed {
        return Err(Error::NotDeveloped { witness: d.witness });
    }
    (0..ms.total().vertices().len())
        .map(|v| vertex_covering(ms, v)?.coefficient(ms.total()))
        .collect()
}
