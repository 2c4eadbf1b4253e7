//! Brute-force reference computations, written without the library's algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use toric_core::SimplicialComplex;

pub fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Laplace expansion; fine for the tiny matrices used here.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `k × k` minors (zero when every minor vanishes).
pub fn minor_gcd(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

/// Rank over Q from the largest nonvanishing minor.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let bound = m.len().min(m.first().map_or(0, Vec::len));
    (1..=bound)
        .rev()
        .find(|&k| !minor_gcd(m, k).is_zero())
        .unwrap_or(0)
}

/// Rank from the elimination in [`diagonalize`].
pub fn rank_fast(m: &[Vec<BigInt>]) -> usize {
    diagonalize(m).len()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect()
}

/// Dimension of `{x : <x, v_i> >= 0 for all i, <x, v_i> = 0 for i in zero}` found by listing
/// the integer points of a box. The face is spanned by lineality and extreme rays, which for
/// normals with entries in [-2, 2] and n <= 3 are cross products or perpendiculars with entries
/// at most 8, so the box `[-8, 8]^n` contains a spanning set.
pub fn face_dim_by_enumeration(dim: usize, normals: &[Vec<i64>], zero: &[usize]) -> usize {
    const R: i64 = 8;
    let mut points: Vec<Vec<BigInt>> = Vec::new();
    let total = (2 * R + 1).pow(dim as u32);
    for code in 0..total {
        let mut c = code;
        let x: Vec<i64> = (0..dim)
            .map(|_| {
                let v = c % (2 * R + 1) - R;
                c /= 2 * R + 1;
                v
            })
            .collect();
        let ok = normals.iter().enumerate().all(|(i, v)| {
            let p: i64 = v.iter().zip(&x).map(|(a, b)| a * b).sum();
            if zero.contains(&i) {
                p == 0
            } else {
                p >= 0
            }
        });
        if ok {
            points.push(x.iter().map(|&t| BigInt::from(t)).collect());
        }
    }
    rank_fast(&points)
}

/// Reference good-cone verdict: every subset cutting out a face of complementary
/// dimension has coprime maximal minors.
pub fn good_cone_by_enumeration(dim: usize, normals: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut failing = Vec::new();
    for size in 1..dim {
        for s in combinations(normals.len(), size) {
            if face_dim_by_enumeration(dim, normals, &s) + size != dim {
                continue;
            }
            let tuple: Vec<Vec<i64>> = s.iter().map(|&i| normals[i].clone()).collect();
            if !minor_gcd(&big(&tuple), size).is_one() {
                failing.push(s);
            }
        }
    }
    failing.sort();
    failing
}

/// Simplices of each dimension, recomputed from the maximal ones.
fn faces_by_dim(k: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let mut all: Vec<Vec<usize>> = k.all_simplices().cloned().collect();
    all.sort();
    all.dedup();
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    (1..=top)
        .map(|len| all.iter().filter(|s| s.len() == len).cloned().collect())
        .collect()
}

/// Matrix of `delta: C^d -> C^{d+1}` with rows indexed by (d+1)-simplices.
fn coboundary(faces: &[Vec<Vec<usize>>], d: usize) -> Vec<Vec<BigInt>> {
    let (Some(lower), Some(upper)) = (faces.get(d), faces.get(d + 1)) else {
        return vec![];
    };
    upper
        .iter()
        .map(|s| {
            let mut row = vec![BigInt::zero(); lower.len()];
            for omit in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let col = lower
                    .iter()
                    .position(|f| *f == face)
                    .expect("closed complex");
                row[col] += if omit % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

/// `(free rank, torsion)` of `H^d(K; Z)` from ranks of the coboundaries and a hand-rolled
/// diagonalization of the incoming one.
pub fn integral_cohomology(k: &SimplicialComplex, d: usize) -> (usize, Vec<BigInt>) {
    let faces = faces_by_dim(k);
    let cells = faces.get(d).map_or(0, Vec::len);
    let outgoing = rank_fast(&coboundary(&faces, d));
    let incoming_matrix = if d == 0 {
        vec![]
    } else {
        coboundary(&faces, d - 1)
    };
    let incoming = rank_fast(&incoming_matrix);
    let free = cells - outgoing - incoming;
    let torsion = diagonalize(&incoming_matrix)
        .into_iter()
        .filter(|x| !x.is_one())
        .collect();
    (free, torsion)
}

/// Plain gcd-based diagonalization followed by a divisibility fix-up.
pub fn diagonalize(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !a[r][c].is_zero())
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t].div_floor(&a[t][t]);
            for c in t..cols {
                let v = &a[t][c] * &q;
                a[r][c] -= v;
            }
            clean &= a[r][t].is_zero();
        }
        for c in t + 1..cols {
            let q = a[t][c].div_floor(&a[t][t]);
            for r in t..rows {
                let v = &a[r][t] * &q;
                a[r][c] -= v;
            }
            clean &= a[t][c].is_zero();
        }
        if clean {
            diag.push(a[t][t].abs());
            t += 1;
        }
    }
    // Normalize to a divisibility chain using (a, b) -> (gcd, lcm).
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (g, l) = (diag[i].gcd(&diag[j]), diag[i].lcm(&diag[j]));
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}
