//! Unimodular cones with an apex, their faces and splittings, good-cone audits and the
//! moment map / section pair of the standard torus representation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::feasibility::{self, Inequality};
use crate::lattice::{self, IntMatrix};
use crate::linalg::{self, Rational};

/// `{η : ⟨η − apex, v_i⟩ ≥ 0 for all i}` where the `v_i` form a unimodular tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularCone {
    apex: Vec<Rational>,
    normals: Vec<Vec<BigInt>>,
}

/// Normals vanishing at a point of a cone; they span the lattice of the point's stabilizer subtorus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub active_indices: Vec<usize>,
    pub subtorus_basis: Vec<Vec<BigInt>>,
}

impl UnimodularCone {
    pub fn new(apex: Vec<Rational>, normals: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = apex.len();
        if let Some(v) = normals.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        let report = lattice::unimodularity_report(&normals)?;
        if !report.is_unimodular() {
            return Err(Error::NotUnimodular {
                factors: report.invariant_factors,
                rank: report.rank,
                count: report.count,
            });
        }
        Ok(Self { apex, normals })
    }

    pub fn dim(&self) -> usize {
        self.apex.len()
    }

    pub fn apex(&self) -> &[Rational] {
        &self.apex
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    fn check_dim(&self, eta: &[Rational]) -> Result<()> {
        if eta.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: eta.len(),
            });
        }
        Ok(())
    }

    /// `⟨η − apex, v_i⟩` for every normal.
    pub fn pairings(&self, eta: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(eta)?;
        let shifted = linalg::sub(eta, &self.apex);
        Ok(self
            .normals
            .iter()
            .map(|v| linalg::pair(&shifted, v))
            .collect())
    }

    pub fn contains(&self, eta: &[Rational]) -> Result<bool> {
        Ok(self.pairings(eta)?.iter().all(|p| !p.is_negative()))
    }

    pub fn face_data(&self, eta: &[Rational]) -> Result<FaceData> {
        let pairings = self.pairings(eta)?;
        if let Some(index) = pairings.iter().position(Signed::is_negative) {
            return Err(Error::OutsideCone { index });
        }
        let active_indices: Vec<usize> = pairings
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_zero())
            .map(|(i, _)| i)
            .collect();
        let subtorus_basis = active_indices
            .iter()
            .map(|&i| self.normals[i].clone())
            .collect();
        Ok(FaceData {
            active_indices,
            subtorus_basis,
        })
    }

    /// Invariant under positive scaling with an apex away from the origin: every normal
    /// pairs to zero with the apex and the apex is nonzero.
    pub fn is_homogeneous(&self) -> bool {
        !self.apex.iter().all(Zero::is_zero)
            && self
                .normals
                .iter()
                .all(|v| linalg::pair(&self.apex, v).is_zero())
    }

    pub fn split(&self) -> ConeSplit {
        ConeSplit::new(self)
    }
}

/// The identification of a unimodular cone with `C′ × k°`, where `k` is the span of the
/// normals, `k°` its annihilator and `C′ ⊂ k*` a full-rank unimodular cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSplit {
    pub subalgebra_basis: Vec<Vec<BigInt>>,
    /// Hermite basis of the lattice `k ∩ Z^n`.
    pub lattice_basis: Vec<Vec<BigInt>>,
    /// Integer vectors completing `lattice_basis` to a basis of `Z^n`.
    pub complement_basis: Vec<Vec<BigInt>>,
    pub annihilator_basis: Vec<Vec<Rational>>,
    /// The normals in coordinates of `lattice_basis`: a full-rank unimodular tuple in `Z^k`.
    pub reduced_normals: Vec<Vec<BigInt>>,
    /// The cone `C′` in `k*`.
    pub reduced: UnimodularCone,
    /// Inverse of the unimodular matrix with rows `lattice_basis ++ complement_basis`.
    basis_inverse: IntMatrix,
}

impl ConeSplit {
    fn new(cone: &UnimodularCone) -> Self {
        let n = cone.dim();
        let k = cone.normals.len();
        let lattice_basis = if k == 0 {
            Vec::new()
        } else {
            let (h, _) = lattice::hermite_normal_form(
                &IntMatrix::from_rows(n, &cone.normals).expect("checked dimensions"),
            );
            h.to_rows().into_iter().take(k).collect()
        };
        let complement_basis = lattice::complete_to_basis(&lattice_basis, n)
            .expect("hermite rows of a unimodular tuple");
        let mut all = lattice_basis.clone();
        all.extend(complement_basis.iter().cloned());
        let full = IntMatrix::from_rows(n, &all).expect("checked dimensions");
        let basis_inverse = lattice::unimodular_inverse(&full).expect("completion is unimodular");

        let reduced_normals: Vec<Vec<BigInt>> = cone
            .normals
            .iter()
            .map(|v| {
                let row = IntMatrix::from_rows(n, std::slice::from_ref(v)).expect("checked");
                let coords = &row * &basis_inverse;
                coords.row(0)[..k].to_vec()
            })
            .collect();
        let reduced_apex: Vec<Rational> = lattice_basis
            .iter()
            .map(|b| linalg::pair(&cone.apex, b))
            .collect();
        let reduced = UnimodularCone::new(reduced_apex, reduced_normals.clone())
            .expect("coordinates of a unimodular tuple in a basis of its saturation");
        let annihilator_basis =
            lattice::rational_kernel_basis(&cone.normals, n).expect("checked dimensions");
        Self {
            subalgebra_basis: cone.normals.clone(),
            lattice_basis,
            complement_basis,
            annihilator_basis,
            reduced_normals,
            reduced,
            basis_inverse,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis_inverse.rows()
    }

    /// The restriction `g* → k*`, `η ↦ (⟨η, b_j⟩)_j`.
    pub fn project(&self, eta: &[Rational]) -> Vec<Rational> {
        self.lattice_basis
            .iter()
            .map(|b| linalg::pair(eta, b))
            .collect()
    }

    /// Lift of `ξ ∈ k*` to `g*` vanishing on the complement lattice.
    pub fn lift(&self, xi: &[Rational]) -> Vec<Rational> {
        let n = self.ambient_dim();
        (0..n)
            .map(|i| {
                xi.iter().enumerate().fold(Rational::zero(), |acc, (j, x)| {
                    acc + x * Rational::from_integer(self.basis_inverse.get(i, j).clone())
                })
            })
            .collect()
    }

    /// `η ↦ (ξ, a)` with `ξ ∈ k*` and `a ∈ k°`, inverse to [`ConeSplit::compose`].
    pub fn decompose(&self, eta: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let xi = self.project(eta);
        let lifted = self.lift(&xi);
        (xi, linalg::sub(eta, &lifted))
    }

    pub fn compose(&self, xi: &[Rational], annihilator_part: &[Rational]) -> Vec<Rational> {
        self.lift(xi)
            .iter()
            .zip(annihilator_part)
            .map(|(x, a)| x + a)
            .collect()
    }
}

/// A polyhedral cone `{η : ⟨η, v_i⟩ ≥ 0}` with primitive, pairwise non-parallel normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCone {
    dim: usize,
    normals: Vec<Vec<BigInt>>,
}

impl SimpleCone {
    pub fn new(dim: usize, normals: Vec<Vec<BigInt>>) -> Result<Self> {
        for (index, v) in normals.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal { index });
            }
            if !lattice::is_primitive(v) {
                return Err(Error::NonPrimitive { index });
            }
        }
        for (i, a) in normals.iter().enumerate() {
            if let Some(j) = normals[i + 1..].iter().position(|b| a == b) {
                return Err(Error::DuplicateNormal {
                    first: i,
                    second: i + 1 + j,
                });
            }
        }
        Ok(Self { dim, normals })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    /// Dimension of `C ∩ {⟨η, v_i⟩ = 0, i ∈ subset}` and the full set of normals vanishing on it.
    pub fn face_of(&self, subset: &[usize]) -> (usize, Vec<usize>) {
        let n = self.dim;
        let rows: Vec<Vec<Rational>> = self
            .normals
            .iter()
            .map(|v| linalg::to_rational_vec(v))
            .collect();
        let equalities: Vec<(Vec<Rational>, Rational)> = subset
            .iter()
            .map(|&i| (rows[i].clone(), Rational::zero()))
            .collect();
        let others: Vec<usize> = (0..rows.len()).filter(|i| !subset.contains(i)).collect();
        let weak: Vec<Inequality> = others
            .iter()
            .map(|&j| Inequality::new(rows[j].clone(), Rational::zero(), false))
            .collect();
        let mut vanishing: Vec<usize> = subset.to_vec();
        for (pos, &j) in others.iter().enumerate() {
            let mut system = weak.clone();
            system[pos].strict = true;
            if !feasibility::is_feasible(n, &equalities, &system) {
                vanishing.push(j);
            }
        }
        vanishing.sort_unstable();
        let span: Vec<Vec<Rational>> = vanishing.iter().map(|&i| rows[i].clone()).collect();
        (n - linalg::rank(&span, n), vanishing)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceAudit {
    /// Indices of the normals cutting out the face.
    pub subset: Vec<usize>,
    /// Every normal vanishing on the face (a superset of `subset`).
    pub vanishing: Vec<usize>,
    pub unimodular: bool,
    pub invariant_factors: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodConeReport {
    pub good: bool,
    /// One entry per subset cutting out a face of the expected codimension.
    pub faces: Vec<FaceAudit>,
    pub failing: Vec<Vec<usize>>,
    /// False when the number of normals differs from the ambient dimension.
    pub normal_count_matches_dim: bool,
}

fn subsets_of_size(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        m: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            go(i + 1, m, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, size, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    subsets_of_size(m, size)
}

/// Checks that every set of `0 < k < n` normals cutting out a face of codimension `k`
/// is a unimodular tuple.
pub fn is_good_cone(cone: &SimpleCone) -> GoodConeReport {
    let n = cone.dim;
    let m = cone.normals.len();
    let mut faces = Vec::new();
    for size in 1..n {
        for subset in subsets_of_size(m, size) {
            let (face_dim, vanishing) = cone.face_of(&subset);
            if face_dim + size != n {
                continue;
            }
            let tuple: Vec<Vec<BigInt>> = subset.iter().map(|&i| cone.normals[i].clone()).collect();
            let report = lattice::unimodularity_report(&tuple).expect("checked dimensions");
            faces.push(FaceAudit {
                subset,
                vanishing,
                unimodular: report.is_unimodular(),
                invariant_factors: report.invariant_factors,
            });
        }
    }
    let failing: Vec<Vec<usize>> = faces
        .iter()
        .filter(|f| !f.unimodular)
        .map(|f| f.subset.clone())
        .collect();
    GoodConeReport {
        good: failing.is_empty(),
        faces,
        failing,
        normal_count_matches_dim: m == n,
    }
}

/// A point of `C` with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn norm_squared(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

fn weighted_sum(weights: &[Vec<BigInt>], coefficients: &[Rational]) -> Vec<Rational> {
    let dim = weights.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); dim];
    for (w, c) in weights.iter().zip(coefficients) {
        for (o, x) in out.iter_mut().zip(w) {
            *o -= c * Rational::from_integer(x.clone());
        }
    }
    out
}

fn check_weights(weights: &[Vec<BigInt>]) -> Result<usize> {
    let dim = weights.first().map_or(0, Vec::len);
    if let Some(w) = weights.iter().find(|w| w.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: w.len(),
        });
    }
    Ok(dim)
}

/// Moment map of the torus acting on `C^k` with the given weights: `z ↦ −Σ |z_i|² w_i`.
pub fn standard_rep_moment_map(
    weights: &[Vec<BigInt>],
    z: &[ComplexRational],
) -> Result<Vec<Rational>> {
    check_weights(weights)?;
    if weights.len() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: weights.len(),
            found: z.len(),
        });
    }
    let norms: Vec<Rational> = z.iter().map(ComplexRational::norm_squared).collect();
    Ok(weighted_sum(weights, &norms))
}

/// A nonnegative real number `√r` with rational `r ≥ 0`, kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtRational {
    radicand: Rational,
}

impl SqrtRational {
    pub fn new(radicand: Rational) -> Option<Self> {
        (!radicand.is_negative()).then_some(Self { radicand })
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// The square, which is rational.
    pub fn square(&self) -> Rational {
        self.radicand.clone()
    }

    /// The value itself when the radicand is a rational square.
    pub fn to_rational(&self) -> Option<Rational> {
        let n = self.radicand.numer();
        let d = self.radicand.denom();
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(r) => write!(f, "{}", linalg::format_rational(&r)),
            None if self.radicand.denom().is_one() => write!(f, "√{}", self.radicand.numer()),
            None => write!(f, "√({})", linalg::format_rational(&self.radicand)),
        }
    }
}

/// Dual basis of a square unimodular weight matrix: `v_j` with `⟨w_i, v_j⟩ = δ_ij`.
pub fn dual_basis(weights: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let dim = check_weights(weights)?;
    if weights.len() != dim {
        return Err(Error::InvalidWeights(format!(
            "{} weights in a rank {dim} lattice",
            weights.len()
        )));
    }
    let w = IntMatrix::from_rows(dim, weights)?;
    let inv = lattice::unimodular_inverse(&w)
        .ok_or_else(|| Error::InvalidWeights("weight matrix is not unimodular".into()))?;
    Ok(inv.transpose().to_rows())
}

/// The section `η ↦ (√⟨−η, v_1⟩, …, √⟨−η, v_k⟩)` of the standard moment map, where the
/// `v_i` are dual to the weights.
pub fn cut_section(weights: &[Vec<BigInt>], eta: &[Rational]) -> Result<Vec<SqrtRational>> {
    let duals = dual_basis(weights)?;
    if eta.len() != duals.len() {
        return Err(Error::DimensionMismatch {
            expected: duals.len(),
            found: eta.len(),
        });
    }
    let neg: Vec<Rational> = eta.iter().map(|x| -x.clone()).collect();
    duals
        .iter()
        .enumerate()
        .map(|(index, v)| {
            SqrtRational::new(linalg::pair(&neg, v)).ok_or(Error::NegativePairing { index })
        })
        .collect()
}

/// The standard moment map evaluated on a section point, using `|√r|² = r` exactly.
pub fn moment_of_section(weights: &[Vec<BigInt>], point: &[SqrtRational]) -> Result<Vec<Rational>> {
    check_weights(weights)?;
    if weights.len() != point.len() {
        return Err(Error::DimensionMismatch {
            expected: weights.len(),
            found: point.len(),
        });
    }
    let norms: Vec<Rational> = point.iter().map(SqrtRational::square).collect();
    Ok(weighted_sum(weights, &norms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_frac};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn orthant() -> UnimodularCone {
        UnimodularCone::new(rats(&[0, 0]), vec![ints(&[1, 0]), ints(&[0, 1])]).unwrap()
    }

    #[test]
    fn construction_rejects_non_unimodular_normals() {
        let err = UnimodularCone::new(rats(&[0, 0]), vec![ints(&[1, 1]), ints(&[1, -1])]);
        assert!(matches!(err, Err(Error::NotUnimodular { .. })));
        let err = UnimodularCone::new(rats(&[0, 0]), vec![ints(&[1, 0, 0])]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn containment() {
        let c = orthant();
        assert!(c.contains(&rats(&[1, 1])).unwrap());
        assert!(!c.contains(&rats(&[-1, 0])).unwrap());
        let half = UnimodularCone::new(rats(&[1, 0]), vec![ints(&[1, 0])]).unwrap();
        assert!(half.contains(&rats(&[1, 5])).unwrap());
        assert!(c.contains(&rats(&[1])).is_err());
    }

    #[test]
    fn faces_of_the_orthant() {
        let c = orthant();
        let f = c.face_data(&rats(&[0, 3])).unwrap();
        assert_eq!(f.active_indices, vec![0]);
        assert_eq!(f.subtorus_basis, vec![ints(&[1, 0])]);
        let f = c.face_data(&rats(&[0, 0])).unwrap();
        assert_eq!(f.active_indices, vec![0, 1]);
        let f = c.face_data(&rats(&[2, 3])).unwrap();
        assert!(f.active_indices.is_empty() && f.subtorus_basis.is_empty());
        assert_eq!(
            c.face_data(&rats(&[-1, 3])),
            Err(Error::OutsideCone { index: 0 })
        );
    }

    #[test]
    fn homogeneity() {
        let c = UnimodularCone::new(rats(&[0, 1]), vec![ints(&[1, 0])]).unwrap();
        assert!(c.is_homogeneous());
        for t in [rat_frac(1, 2), rat(2)] {
            for eta in [rats(&[0, 1]), rats(&[3, 2]), rats(&[1, -4])] {
                let scaled: Vec<Rational> = eta.iter().map(|x| x * &t).collect();
                assert_eq!(c.contains(&eta).unwrap(), c.contains(&scaled).unwrap());
            }
        }
        let c = UnimodularCone::new(rats(&[1, 1]), vec![ints(&[1, 0])]).unwrap();
        assert!(!c.is_homogeneous());
        assert!(!orthant().is_homogeneous());
    }

    #[test]
    fn split_half_plane() {
        let c = UnimodularCone::new(rats(&[0, 5]), vec![ints(&[1, 0])]).unwrap();
        let s = c.split();
        assert_eq!(s.annihilator_basis, vec![rats(&[0, 1])]);
        assert_eq!(s.reduced_normals, vec![ints(&[1])]);
        assert_eq!(s.reduced.dim(), 1);
    }

    #[test]
    fn split_full_rank() {
        let s = orthant().split();
        assert!(s.annihilator_basis.is_empty());
        assert_eq!(s.reduced_normals, vec![ints(&[1, 0]), ints(&[0, 1])]);
    }

    #[test]
    fn split_diagonal_reconstructs_membership() {
        let c = UnimodularCone::new(rats(&[1, -1]), vec![ints(&[1, 1])]).unwrap();
        let s = c.split();
        assert_eq!(s.annihilator_basis.len(), 1);
        assert!(linalg::pair(&s.annihilator_basis[0], &ints(&[1, 1])).is_zero());
        assert_eq!(s.reduced.dim(), 1);
        for i in -5..5i64 {
            let eta = vec![rat_frac(i, 3), rat_frac(2 - i * i, 5)];
            let (xi, a) = s.decompose(&eta);
            assert_eq!(s.compose(&xi, &a), eta);
            assert!(linalg::pair(&a, &ints(&[1, 1])).is_zero());
            assert_eq!(c.contains(&eta).unwrap(), s.reduced.contains(&xi).unwrap());
        }
    }

    #[test]
    fn simple_cone_validation() {
        assert!(matches!(
            SimpleCone::new(2, vec![ints(&[2, 0])]),
            Err(Error::NonPrimitive { index: 0 })
        ));
        assert!(matches!(
            SimpleCone::new(2, vec![ints(&[1, 0]), ints(&[1, 0])]),
            Err(Error::DuplicateNormal {
                first: 0,
                second: 1
            })
        ));
        assert!(matches!(
            SimpleCone::new(2, vec![ints(&[0, 0])]),
            Err(Error::ZeroNormal { .. })
        ));
    }

    #[test]
    fn good_cone_examples() {
        let orth = SimpleCone::new(
            3,
            vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])],
        )
        .unwrap();
        let r = is_good_cone(&orth);
        assert!(r.good && r.normal_count_matches_dim);
        assert_eq!(r.faces.len(), 6);

        let plane = SimpleCone::new(2, vec![ints(&[1, 0]), ints(&[1, 2])]).unwrap();
        assert!(is_good_cone(&plane).good);

        let bad = SimpleCone::new(
            3,
            vec![ints(&[1, 0, 0]), ints(&[1, 2, 0]), ints(&[0, 0, 1])],
        )
        .unwrap();
        let r = is_good_cone(&bad);
        assert!(!r.good);
        assert_eq!(r.failing, vec![vec![0, 1]]);
    }

    #[test]
    fn face_detection_skips_non_faces() {
        // Square-based cone: opposite normals only meet at the apex.
        let c = SimpleCone::new(
            3,
            vec![
                ints(&[1, 0, 1]),
                ints(&[-1, 0, 1]),
                ints(&[0, 1, 1]),
                ints(&[0, -1, 1]),
            ],
        )
        .unwrap();
        let (dim, _) = c.face_of(&[0, 1]);
        assert_eq!(dim, 0);
        let (dim, vanishing) = c.face_of(&[0, 2]);
        assert_eq!((dim, vanishing), (1, vec![0, 2]));
        let r = is_good_cone(&c);
        assert_eq!(r.faces.len(), 8);
        assert!(!r.normal_count_matches_dim);
    }

    #[test]
    fn moment_map_examples() {
        let w = vec![ints(&[1, 0]), ints(&[0, 1])];
        let z = vec![ComplexRational::real(rat(1)), ComplexRational::real(rat(0))];
        assert_eq!(standard_rep_moment_map(&w, &z).unwrap(), rats(&[-1, 0]));
        let zero = vec![ComplexRational::real(rat(0)); 2];
        assert_eq!(standard_rep_moment_map(&w, &zero).unwrap(), rats(&[0, 0]));
        let w1 = vec![ints(&[1])];
        let z = vec![ComplexRational::real(rat_frac(3, 2))];
        assert_eq!(
            standard_rep_moment_map(&w1, &z).unwrap(),
            vec![rat_frac(-9, 4)]
        );
        assert!(standard_rep_moment_map(&w1, &zero).is_err());
    }

    #[test]
    fn section_examples() {
        let w = vec![ints(&[1, 0]), ints(&[0, 1])];
        let s = cut_section(&w, &rats(&[-4, -9])).unwrap();
        assert_eq!(s[0].to_rational(), Some(rat(2)));
        assert_eq!(s[1].to_rational(), Some(rat(3)));
        assert_eq!(moment_of_section(&w, &s).unwrap(), rats(&[-4, -9]));

        let s = cut_section(&w, &rats(&[0, 0])).unwrap();
        assert!(s.iter().all(|x| x.to_rational() == Some(rat(0))));

        let w1 = vec![ints(&[1])];
        let s = cut_section(&w1, &rats(&[-2])).unwrap();
        assert_eq!(s[0].to_rational(), None);
        assert_eq!(s[0].square(), rat(2));
        assert_eq!(s[0].to_string(), "√2");

        assert_eq!(
            cut_section(&w1, &rats(&[1])),
            Err(Error::NegativePairing { index: 0 })
        );
        assert!(matches!(
            cut_section(&[ints(&[2])], &rats(&[-1])),
            Err(Error::InvalidWeights(_))
        ));
    }
}
