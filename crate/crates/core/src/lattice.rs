//! Exact integer linear algebra: Hermite and Smith normal forms, unimodular tuples,
//! primitive parts, saturations and rational annihilators.
//!
//! Tuples of lattice vectors are stored as the rows of an [`IntMatrix`]; covectors
//! in the dual space pair with them through the ordinary dot product.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose rows are `rows`; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, &vecs).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| linalg::to_rational_vec(self.row(i)))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut m = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Some(BigInt::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        Some(sign * &m[n - 1][n - 1])
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Square with determinant ±1.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_some_and(|d| d.abs().is_one())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self.data[source * self.cols + j];
            self.data[target * self.cols + j] += delta;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self.data[i * self.cols + source];
            self.data[i * self.cols + target] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs)
            .expect("matrix dimensions do not agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U · A · V = D` with `D` diagonal, nonnegative and satisfying the divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U · A = H`, `U` unimodular,
/// pivots positive and the entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..a.cols() {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| h.get(i, c).abs().cmp(&h.get(j, c).abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut cleared = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

pub(crate) struct SnfWithInverse {
    pub decomposition: SnfDecomposition,
    /// Inverse of `decomposition.v`.
    pub v_inv: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    smith_with_inverse(a).decomposition
}

/// Smith reduction pivoting on the smallest nonzero magnitude of the active block.
pub(crate) fn smith_with_inverse(a: &IntMatrix) -> SnfWithInverse {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let smallest = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d.get(i, j).is_zero())
                .min_by(|&(i, j), &(k, l)| d.get(i, j).abs().cmp(&d.get(k, l).abs()));
            let Some((p, q)) = smallest else { break };
            d.swap_rows(t, p);
            u.swap_rows(t, p);
            d.swap_cols(t, q);
            v.swap_cols(t, q);
            v_inv.swap_rows(t, q);

            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let f = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &f);
                u.add_row_multiple(i, t, &f);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let f = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &f);
                v.add_col_multiple(j, t, &f);
                v_inv.add_row_multiple(t, j, &-f);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offending =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(d.get(t, t))));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfWithInverse {
        decomposition: SnfDecomposition { d, u, v },
        v_inv,
    }
}

pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(a).invariant_factors()
}

/// Why a tuple is or is not unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleVerdict {
    Unimodular,
    TooManyVectors { count: usize, dim: usize },
    LinearlyDependent { rank: usize, count: usize },
    NontrivialFactor(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleReport {
    pub dim: usize,
    pub count: usize,
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub verdict: TupleVerdict,
}

impl TupleReport {
    pub fn is_unimodular(&self) -> bool {
        self.verdict == TupleVerdict::Unimodular
    }
}

fn common_dimension(vectors: &[Vec<BigInt>]) -> Result<usize> {
    let dim = vectors.first().map_or(0, Vec::len);
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }
    Ok(dim)
}

pub fn unimodularity_report(vectors: &[Vec<BigInt>]) -> Result<TupleReport> {
    let dim = common_dimension(vectors)?;
    let count = vectors.len();
    let a = IntMatrix::from_rows(dim, vectors)?;
    let factors = invariant_factors(&a);
    let rank = factors.len();
    let verdict = if count > dim {
        TupleVerdict::TooManyVectors { count, dim }
    } else if rank < count {
        TupleVerdict::LinearlyDependent { rank, count }
    } else if let Some(f) = factors.iter().find(|f| !f.is_one()) {
        TupleVerdict::NontrivialFactor(f.clone())
    } else {
        TupleVerdict::Unimodular
    };
    Ok(TupleReport {
        dim,
        count,
        rank,
        invariant_factors: factors,
        verdict,
    })
}

/// True iff the vectors extend to a basis of the ambient integer lattice.
/// The empty tuple is unimodular.
pub fn is_unimodular_tuple(vectors: &[Vec<BigInt>]) -> Result<bool> {
    Ok(unimodularity_report(vectors)?.is_unimodular())
}

pub fn vector_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    vector_gcd(v).is_one()
}

pub fn primitive_part(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = vector_gcd(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Z-basis of `span_Q(vectors) ∩ Z^n`, in Hermite normal form.
pub fn saturation_basis(vectors: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let dim = common_dimension(vectors)?;
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let a = IntMatrix::from_rows(dim, vectors)?;
    let snf = smith_with_inverse(&a);
    let r = snf.decomposition.rank();
    let rows: Vec<Vec<BigInt>> = (0..r).map(|i| snf.v_inv.row(i).to_vec()).collect();
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(dim, &rows)?);
    Ok(h.to_rows().into_iter().take(r).collect())
}

/// Integer vectors completing a unimodular tuple to a basis of `Z^n`, in Hermite form.
pub fn complete_to_basis(vectors: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    if vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: vectors
                .iter()
                .map(Vec::len)
                .find(|&l| l != dim)
                .unwrap_or(0),
        });
    }
    let report = unimodularity_report(vectors)?;
    if !vectors.is_empty() && !report.is_unimodular() {
        return Err(Error::NotUnimodular {
            factors: report.invariant_factors,
            rank: report.rank,
            count: report.count,
        });
    }
    if vectors.is_empty() {
        return Ok(IntMatrix::identity(dim).to_rows());
    }
    let a = IntMatrix::from_rows(dim, vectors)?;
    let snf = smith_with_inverse(&a);
    let k = vectors.len();
    let rest: Vec<Vec<BigInt>> = (k..dim).map(|i| snf.v_inv.row(i).to_vec()).collect();
    if rest.is_empty() {
        return Ok(rest);
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(dim, &rest)?);
    Ok(h.to_rows())
}

/// Inverse of a unimodular square matrix (its HNF is the identity, so the transform is the inverse).
pub fn unimodular_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    if !a.is_unimodular() {
        return None;
    }
    let (_, u) = hermite_normal_form(a);
    Some(u)
}

/// Basis of the annihilator `{η ∈ Q^dim : ⟨η, v⟩ = 0 for every input v}`.
pub fn rational_kernel_basis(vectors: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<Rational>>> {
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| linalg::to_rational_vec(v)).collect();
    Ok(linalg::kernel(&rows, dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn diag(snf: &SnfDecomposition) -> Vec<i64> {
        (0..snf.d.rows().min(snf.d.cols()))
            .map(|i| i64::try_from(snf.d.get(i, i)).unwrap())
            .collect()
    }

    fn check_snf(a: &IntMatrix, snf: &SnfDecomposition) {
        assert_eq!(&(&snf.u * a) * &snf.v, snf.d);
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        assert_eq!(hermite_normal_form(&id), (id.clone(), id.clone()));
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(hermite_normal_form(&z), (z.clone(), IntMatrix::identity(2)));
    }

    #[test]
    fn hnf_of_small_matrix() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(&u * &a, h);
        assert!(u.is_unimodular());
        // pivot gcds: first pivot = gcd of first column, product of pivots = |det|
        assert_eq!(h, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = IntMatrix::from_i64(&[&[3, 5, 1], &[0, 7, 2], &[1, 1, 1]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(&u * &a, h);
        assert!(u.is_unimodular());
        for c in 0..3 {
            let p = h.get(c, c);
            assert!(p.is_positive());
            for i in 0..c {
                assert!(!h.get(i, c).is_negative() && h.get(i, c) < p);
            }
        }
    }

    #[test]
    fn snf_examples() {
        let a = IntMatrix::from_i64(&[&[3, 0], &[0, 1]]);
        let s = smith_normal_form(&a);
        check_snf(&a, &s);
        assert_eq!(diag(&s), vec![1, 3]);

        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&a);
        check_snf(&a, &s);
        assert_eq!(diag(&s), vec![2, 4]);

        let a = IntMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let s = smith_normal_form(&a);
        check_snf(&a, &s);
        assert_eq!(diag(&s), vec![1, 0]);
    }

    #[test]
    fn snf_rectangular_and_empty() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a);
        check_snf(&a, &s);
        assert_eq!(diag(&s), vec![2, 6, 12]);

        let e = IntMatrix::zeros(0, 3);
        let s = smith_normal_form(&e);
        assert_eq!(s.invariant_factors(), Vec::<BigInt>::new());
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_tracks_inverse_of_v() {
        let a = IntMatrix::from_i64(&[&[4, 6, 2], &[2, 8, 0]]);
        let s = smith_with_inverse(&a);
        assert_eq!(&s.decomposition.v * &s.v_inv, IntMatrix::identity(3));
    }

    #[test]
    fn unimodular_tuples() {
        assert!(is_unimodular_tuple(&[ints(&[1, 0, 0]), ints(&[0, 1, 0])]).unwrap());
        assert!(!is_unimodular_tuple(&[ints(&[2, 0])]).unwrap());
        let r = unimodularity_report(&[ints(&[1, 1]), ints(&[1, -1])]).unwrap();
        assert_eq!(r.verdict, TupleVerdict::NontrivialFactor(BigInt::from(2)));
        assert!(is_unimodular_tuple(&[]).unwrap());
        let r = unimodularity_report(&[ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])]).unwrap();
        assert_eq!(r.verdict, TupleVerdict::TooManyVectors { count: 3, dim: 2 });
        let r = unimodularity_report(&[ints(&[1, 2]), ints(&[2, 4])]).unwrap();
        assert_eq!(
            r.verdict,
            TupleVerdict::LinearlyDependent { rank: 1, count: 2 }
        );
        assert!(is_unimodular_tuple(&[ints(&[1, 0]), ints(&[1])]).is_err());
    }

    #[test]
    fn primitive_parts() {
        assert_eq!(primitive_part(&ints(&[2, 4, 6])).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(primitive_part(&ints(&[0, -3])).unwrap(), ints(&[0, -1]));
        assert_eq!(primitive_part(&ints(&[1, 0])).unwrap(), ints(&[1, 0]));
        assert_eq!(primitive_part(&ints(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn saturations() {
        assert_eq!(
            saturation_basis(&[ints(&[2, 0])]).unwrap(),
            vec![ints(&[1, 0])]
        );
        assert_eq!(saturation_basis(&[]).unwrap(), Vec::<Vec<BigInt>>::new());
        let b = saturation_basis(&[ints(&[1, 0]), ints(&[0, 1])]).unwrap();
        assert_eq!(b, vec![ints(&[1, 0]), ints(&[0, 1])]);
        let b = saturation_basis(&[ints(&[2, 2, 0]), ints(&[0, 3, 3])]).unwrap();
        assert!(is_unimodular_tuple(&b).unwrap());
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn completion_is_unimodular() {
        let v = vec![ints(&[2, 3, 5])];
        let c = complete_to_basis(&v, 3).unwrap();
        let mut all = v.clone();
        all.extend(c);
        assert!(IntMatrix::from_rows(3, &all).unwrap().is_unimodular());
        assert!(complete_to_basis(&[ints(&[2, 0])], 2).is_err());
    }

    #[test]
    fn kernels() {
        let k = rational_kernel_basis(&[ints(&[1, 0, 0])], 3).unwrap();
        assert_eq!(
            k,
            vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]
        );
        assert_eq!(rational_kernel_basis(&[], 2).unwrap().len(), 2);
        let k = rational_kernel_basis(&[ints(&[1, 1])], 2).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0] + &k[0][1], rat(0));
    }

    #[test]
    fn determinant_and_rank() {
        let a = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(-1));
        assert_eq!(IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(&a * &inv, IntMatrix::identity(3));
    }
}
