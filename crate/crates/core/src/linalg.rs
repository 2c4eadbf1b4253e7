//! Dense linear algebra over the rationals.
//!
//! Matrices here are plain row vectors of [`BigRational`]; everything is exact.
//! The integer side (Hermite/Smith forms) lives in [`crate::lattice`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidNumber(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn parse_integer(text: &str) -> Result<BigInt> {
    text.trim()
        .parse()
        .map_err(|_| Error::InvalidNumber(text.to_string()))
}

/// `"p/q"` with `q > 1`, otherwise `"p"`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_rational_vec(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// Exact pairing of a rational covector with an integer vector.
pub fn pair(eta: &[Rational], v: &[BigInt]) -> Rational {
    eta.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| {
        acc + x * Rational::from_integer(y.clone())
    })
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scales a nonzero rational vector to the primitive integer vector with the same direction.
pub fn primitive_direction(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(scaled.into_iter().map(|x| x / &g).collect())
}

/// Reduced row echelon form. Returns the reduced rows and the pivot column of each nonzero row.
pub fn rref(rows: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn kernel(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (m, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Solves `a · x = b` for one solution, if any.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

pub fn transpose(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    (0..cols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], b_cols: usize) -> Vec<Vec<Rational>> {
    a.iter()
        .map(|row| {
            (0..b_cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| dot(row, x)).collect()
}

/// Affine rank of a point set (dimension of its affine hull); `-1` for the empty set.
pub fn affine_rank(points: &[&[Rational]]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, first)).collect();
    rank(&diffs, first.len()) as isize
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}
