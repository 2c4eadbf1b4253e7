//! Bounded, full-dimensional rational polytopes with both representations, their face
//! lattices, and the smoothness audits used for compact moment images.
//!
//! Facets are written `{x : ⟨x, a⟩ ≥ b}` with primitive inward integer normals `a`.
//! Everything is enumerated exhaustively, so inputs are capped at desk scale.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::{self, GoodConeReport, SimpleCone};
use crate::error::{Error, Result};
use crate::lattice::{self, TupleVerdict};
use crate::linalg::{self, Rational};

pub const MAX_DIM: usize = 4;
pub const MAX_FACETS: usize = 16;
pub const MAX_POINTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

impl Facet {
    pub fn new(normal: Vec<BigInt>, offset: Rational) -> Self {
        Self { normal, offset }
    }

    /// `⟨x, a⟩ − b`
    pub fn slack(&self, x: &[Rational]) -> Rational {
        linalg::pair(x, &self.normal) - &self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    facets: Vec<Facet>,
    vertices: Vec<Vec<Rational>>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::TooLarge(format!(
            "dimension {dim} outside the supported range 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// Vertices of `{x : Ax ≥ b}` by solving every `n`-subset of facet equations.
fn vertices_of(dim: usize, facets: &[Facet]) -> Vec<Vec<Rational>> {
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for subset in cone::subsets(facets.len(), dim) {
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| linalg::to_rational_vec(&facets[i].normal))
            .collect();
        if linalg::rank(&rows, dim) < dim {
            continue;
        }
        let rhs: Vec<Rational> = subset.iter().map(|&i| facets[i].offset.clone()).collect();
        let Some(x) = linalg::solve(&rows, &rhs, dim) else {
            continue;
        };
        if facets.iter().all(|f| !f.slack(&x).is_negative()) {
            found.insert(x);
        }
    }
    found.into_iter().collect()
}

/// Facet inequalities of the convex hull of a full-dimensional point set.
fn facets_of(dim: usize, points: &[Vec<Rational>]) -> Vec<Facet> {
    let mut found: BTreeSet<Facet> = BTreeSet::new();
    for subset in cone::subsets(points.len(), dim) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| linalg::sub(&points[i], base))
            .collect();
        let kernel = linalg::kernel(&diffs, dim);
        if kernel.len() != 1 {
            continue;
        }
        let normal = linalg::primitive_direction(&kernel[0]).expect("kernel vector is nonzero");
        let offset = linalg::pair(base, &normal);
        let slacks: Vec<Rational> = points
            .iter()
            .map(|p| linalg::pair(p, &normal) - &offset)
            .collect();
        if slacks.iter().all(|s| !s.is_negative()) {
            found.insert(Facet::new(normal, offset));
        } else if slacks.iter().all(|s| !s.is_positive()) {
            found.insert(Facet::new(
                normal.into_iter().map(|x| -x).collect(),
                -offset,
            ));
        }
    }
    found.into_iter().collect()
}

/// True iff `{x : Ax ≥ 0} = {0}`: the normals have full rank and no extreme ray exists.
fn recession_cone_is_trivial(dim: usize, facets: &[Facet]) -> bool {
    let rows: Vec<Vec<Rational>> = facets
        .iter()
        .map(|f| linalg::to_rational_vec(&f.normal))
        .collect();
    if linalg::rank(&rows, dim) < dim {
        return false;
    }
    for subset in cone::subsets(rows.len(), dim - 1) {
        let sub_rows: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let kernel = linalg::kernel(&sub_rows, dim);
        if kernel.len() != 1 {
            continue;
        }
        let ray = &kernel[0];
        let values: Vec<Rational> = rows.iter().map(|r| linalg::dot(r, ray)).collect();
        if values.iter().all(|v| !v.is_negative()) || values.iter().all(|v| !v.is_positive()) {
            return false;
        }
    }
    true
}

impl RationalPolytope {
    /// Normalizes an H-representation: primitive normals, bounded and full-dimensional,
    /// redundant inequalities dropped, vertices enumerated and cross-checked.
    pub fn from_facets(dim: usize, facets: Vec<Facet>) -> Result<Self> {
        check_dim(dim)?;
        if facets.len() > MAX_FACETS {
            return Err(Error::TooLarge(format!(
                "{} facets (limit {MAX_FACETS})",
                facets.len()
            )));
        }
        let mut primitive: BTreeSet<Facet> = BTreeSet::new();
        for (index, f) in facets.into_iter().enumerate() {
            if f.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.normal.len(),
                });
            }
            let g = lattice::vector_gcd(&f.normal);
            if g.is_zero() {
                return Err(Error::ZeroNormal { index });
            }
            let scale = Rational::from_integer(g.clone());
            primitive.insert(Facet::new(
                f.normal.iter().map(|x| x / &g).collect(),
                f.offset / scale,
            ));
        }
        let facets: Vec<Facet> = primitive.into_iter().collect();
        if !recession_cone_is_trivial(dim, &facets) {
            return Err(Error::Unbounded);
        }
        let vertices = vertices_of(dim, &facets);
        let refs: Vec<&[Rational]> = vertices.iter().map(Vec::as_slice).collect();
        if linalg::affine_rank(&refs) != dim as isize {
            return Err(Error::Degenerate);
        }
        let kept: Vec<Facet> = facets
            .into_iter()
            .filter(|f| {
                let on: Vec<&[Rational]> = vertices
                    .iter()
                    .filter(|v| f.slack(v).is_zero())
                    .map(Vec::as_slice)
                    .collect();
                linalg::affine_rank(&on) == dim as isize - 1
            })
            .collect();
        Self::cross_validated(dim, kept, vertices)
    }

    /// Normalizes a V-representation; non-extreme input points are dropped.
    pub fn from_vertices(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        check_dim(dim)?;
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        let points: Vec<Vec<Rational>> = points
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if points.len() > MAX_POINTS {
            return Err(Error::TooLarge(format!(
                "{} points (limit {MAX_POINTS})",
                points.len()
            )));
        }
        let refs: Vec<&[Rational]> = points.iter().map(Vec::as_slice).collect();
        if linalg::affine_rank(&refs) != dim as isize {
            return Err(Error::Degenerate);
        }
        let facets = facets_of(dim, &points);
        if facets.len() > MAX_FACETS {
            return Err(Error::TooLarge(format!(
                "{} facets (limit {MAX_FACETS})",
                facets.len()
            )));
        }
        let vertices = vertices_of(dim, &facets);
        if vertices.iter().any(|v| !points.contains(v)) {
            return Err(Error::Inconsistent(
                "a vertex of the facet description is not an input point".into(),
            ));
        }
        Self::cross_validated(dim, facets, vertices)
    }

    fn cross_validated(
        dim: usize,
        facets: Vec<Facet>,
        vertices: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let recomputed = facets_of(dim, &vertices);
        let mut sorted = facets.clone();
        sorted.sort();
        if recomputed != sorted {
            return Err(Error::Inconsistent(
                "facet and vertex descriptions disagree".into(),
            ));
        }
        Ok(Self {
            dim,
            facets: sorted,
            vertices,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Indices of the facets containing a point.
    pub fn active_facets(&self, x: &[Rational]) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.slack(x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn vertex_index(&self, x: &[Rational]) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_slice() == x)
    }

    pub fn face_lattice(&self) -> FaceLattice {
        FaceLattice::of(self)
    }

    pub fn simplicity_report(&self) -> SimplicityReport {
        let lattice = self.face_lattice();
        let faces: Vec<FaceSimplicity> = lattice
            .proper_faces()
            .map(|(index, face)| {
                let codim = self.dim - face.dim as usize;
                FaceSimplicity {
                    face: index,
                    dim: face.dim as usize,
                    codim,
                    active_facets: face.facets.len(),
                    simple: face.facets.len() == codim,
                }
            })
            .collect();
        let non_simple: Vec<&FaceSimplicity> = faces.iter().filter(|f| !f.simple).collect();
        let simple_except_at_vertices = non_simple.iter().all(|f| f.dim == 0);
        let non_simple_vertices = lattice
            .proper_faces()
            .filter(|(_, f)| f.dim == 0 && f.facets.len() != self.dim)
            .map(|(_, f)| f.vertices[0])
            .collect();
        SimplicityReport {
            simple_everywhere: non_simple.is_empty(),
            simple_except_at_vertices,
            non_simple_vertices,
            faces,
            lattice,
        }
    }

    pub fn delzant_report(&self) -> DelzantReport {
        let simplicity = self.simplicity_report();
        let mut failing = Vec::new();
        for (index, v) in self.vertices.iter().enumerate() {
            let active = self.active_facets(v);
            if active.len() != self.dim {
                failing.push(VertexFailure {
                    vertex: index,
                    reason: VertexFailureReason::NotSimple {
                        active_facets: active.len(),
                    },
                });
                continue;
            }
            let normals: Vec<Vec<BigInt>> = active
                .iter()
                .map(|&i| self.facets[i].normal.clone())
                .collect();
            let report = lattice::unimodularity_report(&normals).expect("checked dimensions");
            if !report.is_unimodular() {
                let factor = match report.verdict {
                    TupleVerdict::NontrivialFactor(f) => f,
                    _ => BigInt::zero(),
                };
                failing.push(VertexFailure {
                    vertex: index,
                    reason: VertexFailureReason::NotUnimodular { factor },
                });
            }
        }
        DelzantReport {
            delzant: simplicity.simple_everywhere && failing.is_empty(),
            failing_vertices: failing,
        }
    }

    pub fn is_delzant(&self) -> bool {
        self.delzant_report().delzant
    }

    /// Classifies a vertex as smooth, as a candidate isolated singularity (its local cone is
    /// good), or as rejected.
    pub fn classify_vertex(&self, vertex: &[Rational]) -> Result<VertexVerdict> {
        if self.vertex_index(vertex).is_none() {
            return Err(Error::VertexNotFound);
        }
        let active = self.active_facets(vertex);
        let normals: Vec<Vec<BigInt>> = active
            .iter()
            .map(|&i| self.facets[i].normal.clone())
            .collect();
        let smooth = active.len() == self.dim
            && lattice::is_unimodular_tuple(&normals).expect("checked dimensions");
        if smooth {
            return Ok(VertexVerdict {
                class: VertexClass::Smooth,
                active_facets: active,
                local_cone: None,
            });
        }
        let local =
            SimpleCone::new(self.dim, normals).expect("facet normals are primitive and distinct");
        let audit = cone::is_good_cone(&local);
        let class = if audit.good {
            VertexClass::SingularCandidate
        } else {
            VertexClass::Reject
        };
        Ok(VertexVerdict {
            class,
            active_facets: active,
            local_cone: Some(audit),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// `-1` for the empty face.
    pub dim: isize,
    /// Facets containing the face.
    pub facets: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// All faces of a polytope, from the polytope itself down to the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    faces: Vec<Face>,
}

impl FaceLattice {
    fn of(p: &RationalPolytope) -> Self {
        let incidence: Vec<BTreeSet<usize>> = p
            .vertices
            .iter()
            .map(|v| p.active_facets(v).into_iter().collect())
            .collect();
        let on_facet: Vec<BTreeSet<usize>> = (0..p.facets.len())
            .map(|f| {
                (0..p.vertices.len())
                    .filter(|&v| incidence[v].contains(&f))
                    .collect()
            })
            .collect();

        let top: BTreeSet<usize> = (0..p.vertices.len()).collect();
        let mut seen: HashMap<BTreeSet<usize>, ()> = HashMap::new();
        let mut faces = Vec::new();
        let mut queue = vec![top.clone()];
        seen.insert(top, ());
        while let Some(verts) = queue.pop() {
            let facets: BTreeSet<usize> = verts
                .iter()
                .map(|&v| incidence[v].clone())
                .reduce(|a, b| &a & &b)
                .unwrap_or_default();
            let facets = if verts.len() == p.vertices.len() {
                BTreeSet::new()
            } else {
                facets
            };
            let points: Vec<&[Rational]> =
                verts.iter().map(|&v| p.vertices[v].as_slice()).collect();
            faces.push(Face {
                dim: linalg::affine_rank(&points),
                facets: facets.iter().copied().collect(),
                vertices: verts.iter().copied().collect(),
            });
            for (f, members) in on_facet.iter().enumerate() {
                if facets.contains(&f) {
                    continue;
                }
                let next: BTreeSet<usize> = &verts & members;
                if next.is_empty() || seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), ());
                queue.push(next);
            }
        }
        faces.push(Face {
            dim: -1,
            facets: (0..p.facets.len()).collect(),
            vertices: Vec::new(),
        });
        faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        Self { dim: p.dim, faces }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces of dimension `0..dim`, with their index into [`FaceLattice::faces`].
    pub fn proper_faces(&self) -> impl Iterator<Item = (usize, &Face)> {
        let dim = self.dim as isize;
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim >= 0 && f.dim < dim)
    }

    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// `f_0, …, f_{n−1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim as isize)
            .map(|d| self.faces_of_dim(d).count())
            .collect()
    }

    /// `Σ (−1)^d f_d` over proper faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The boundary is a sphere of dimension `n − 1`.
    pub fn satisfies_euler_relation(&self) -> bool {
        let expected = if self.dim.is_multiple_of(2) { 0 } else { 2 };
        self.euler_characteristic() == expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSimplicity {
    pub face: usize,
    pub dim: usize,
    pub codim: usize,
    pub active_facets: usize,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub faces: Vec<FaceSimplicity>,
    pub simple_everywhere: bool,
    pub simple_except_at_vertices: bool,
    /// Indices into the polytope's vertex list.
    pub non_simple_vertices: Vec<usize>,
    pub lattice: FaceLattice,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexFailureReason {
    NotSimple { active_facets: usize },
    NotUnimodular { factor: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFailure {
    pub vertex: usize,
    pub reason: VertexFailureReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantReport {
    pub delzant: bool,
    pub failing_vertices: Vec<VertexFailure>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Smooth,
    SingularCandidate,
    Reject,
}

impl VertexClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexClass::Smooth => "smooth",
            VertexClass::SingularCandidate => "singular-candidate",
            VertexClass::Reject => "reject",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexVerdict {
    pub class: VertexClass,
    pub active_facets: Vec<usize>,
    /// Good-cone audit of the local cone, for non-smooth vertices.
    pub local_cone: Option<GoodConeReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn pts(points: &[&[i64]]) -> Vec<Vec<Rational>> {
        points
            .iter()
            .map(|p| p.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    fn facet(n: &[i64], b: i64) -> Facet {
        Facet::new(n.iter().map(|&x| BigInt::from(x)).collect(), rat(b))
    }

    pub(crate) fn square() -> RationalPolytope {
        RationalPolytope::from_vertices(2, pts(&[&[1, 1], &[-1, 1], &[1, -1], &[-1, -1]])).unwrap()
    }

    pub(crate) fn octahedron() -> RationalPolytope {
        RationalPolytope::from_vertices(
            3,
            pts(&[
                &[1, 0, 0],
                &[-1, 0, 0],
                &[0, 1, 0],
                &[0, -1, 0],
                &[0, 0, 1],
                &[0, 0, -1],
            ]),
        )
        .unwrap()
    }

    fn cube() -> RationalPolytope {
        let mut v = Vec::new();
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    v.push(vec![rat(x), rat(y), rat(z)]);
                }
            }
        }
        RationalPolytope::from_vertices(3, v).unwrap()
    }

    fn triangle() -> RationalPolytope {
        RationalPolytope::from_vertices(2, pts(&[&[0, 0], &[1, 0], &[0, 2]])).unwrap()
    }

    #[test]
    fn square_facets() {
        let sq = square();
        let mut expected = vec![
            facet(&[1, 0], -1),
            facet(&[-1, 0], -1),
            facet(&[0, 1], -1),
            facet(&[0, -1], -1),
        ];
        expected.sort();
        assert_eq!(sq.facets(), expected.as_slice());
    }

    #[test]
    fn octahedron_facets() {
        let o = octahedron();
        assert_eq!(o.vertices().len(), 6);
        assert_eq!(o.facets().len(), 8);
        for f in o.facets() {
            assert!(f.normal.iter().all(|x| x.abs() == BigInt::from(1)));
            assert_eq!(f.offset, rat(-1));
        }
    }

    #[test]
    fn simplex_from_points() {
        let s = RationalPolytope::from_vertices(2, pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.facets().len(), 3);
    }

    #[test]
    fn h_representation_round_trip() {
        let sq = square();
        let again = RationalPolytope::from_facets(2, sq.facets().to_vec()).unwrap();
        assert_eq!(again, sq);
        // scaled and redundant input is normalized away
        let mut input: Vec<Facet> = sq
            .facets()
            .iter()
            .map(|f| Facet::new(f.normal.iter().map(|x| x * 3).collect(), &f.offset * rat(3)))
            .collect();
        input.push(facet(&[1, 1], -5));
        assert_eq!(RationalPolytope::from_facets(2, input).unwrap(), sq);
    }

    #[test]
    fn rejects_bad_inputs() {
        let half = vec![facet(&[1, 0], 0), facet(&[0, 1], 0)];
        assert_eq!(
            RationalPolytope::from_facets(2, half),
            Err(Error::Unbounded)
        );
        let empty = vec![facet(&[1], 1), facet(&[-1], 0)];
        assert_eq!(
            RationalPolytope::from_facets(1, empty),
            Err(Error::Degenerate)
        );
        let flat = pts(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert_eq!(
            RationalPolytope::from_vertices(2, flat),
            Err(Error::Degenerate)
        );
        assert!(matches!(
            RationalPolytope::from_vertices(5, vec![]),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn interior_points_are_dropped() {
        let p =
            RationalPolytope::from_vertices(2, pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[0, 1]]))
                .unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn face_lattices() {
        let sq = square().face_lattice();
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert!(sq.satisfies_euler_relation());
        let o = octahedron().face_lattice();
        assert_eq!(o.f_vector(), vec![6, 12, 8]);
        assert_eq!(o.euler_characteristic(), 2);
        let seg = RationalPolytope::from_vertices(1, pts(&[&[0], &[3]]))
            .unwrap()
            .face_lattice();
        assert_eq!(seg.f_vector(), vec![2]);
        assert!(seg.satisfies_euler_relation());
        assert_eq!(o.faces().first().unwrap().dim, 3);
        assert_eq!(o.faces().last().unwrap().dim, -1);
    }

    #[test]
    fn simplicity() {
        assert!(cube().simplicity_report().simple_everywhere);
        let r = octahedron().simplicity_report();
        assert!(!r.simple_everywhere);
        assert!(r.simple_except_at_vertices);
        assert_eq!(r.non_simple_vertices.len(), 6);
        for f in r.faces.iter().filter(|f| f.dim == 0) {
            assert_eq!(f.active_facets, 4);
        }
        let pyramid = RationalPolytope::from_vertices(
            3,
            pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]]),
        )
        .unwrap();
        let r = pyramid.simplicity_report();
        assert!(r.simple_except_at_vertices && !r.simple_everywhere);
        assert_eq!(r.non_simple_vertices.len(), 1);
        assert_eq!(
            pyramid.vertices()[r.non_simple_vertices[0]],
            vec![rat(1), rat(1), rat(1)]
        );
    }

    #[test]
    fn delzant() {
        assert!(square().is_delzant());
        assert!(cube().is_delzant());
        let t = triangle();
        let r = t.delzant_report();
        assert!(!r.delzant);
        assert_eq!(r.failing_vertices.len(), 1);
        assert_eq!(
            t.vertices()[r.failing_vertices[0].vertex],
            vec![rat(1), rat(0)]
        );
        assert_eq!(
            r.failing_vertices[0].reason,
            VertexFailureReason::NotUnimodular {
                factor: BigInt::from(2)
            }
        );
        assert!(!octahedron().is_delzant());
    }

    #[test]
    fn vertex_classes() {
        let c = cube();
        let v = c.vertices()[0].clone();
        assert_eq!(c.classify_vertex(&v).unwrap().class, VertexClass::Smooth);
        let o = octahedron();
        let top = vec![rat(0), rat(0), rat(1)];
        let verdict = o.classify_vertex(&top).unwrap();
        assert_eq!(verdict.active_facets.len(), 4);
        assert_eq!(verdict.class, VertexClass::Reject);
        assert_eq!(verdict.local_cone.unwrap().failing.len(), 4);
        // In the plane only single normals bound faces of a vertex cone, so any
        // non-smooth polygon vertex passes the audit.
        let t = triangle();
        let v = t.classify_vertex(&[rat(1), rat(0)]).unwrap();
        assert_eq!(v.class, VertexClass::SingularCandidate);
        assert_eq!(
            t.classify_vertex(&[rat(5), rat(5)]),
            Err(Error::VertexNotFound)
        );
    }
}
