//! Finite simplicial complexes and their cohomology over `Z`, `Q` and `Zⁿ`, relative
//! cohomology of a subcomplex inclusion via the algebraic mapping cone, restriction maps,
//! and the good-form subspace.
//!
//! Simplices are sorted vertex tuples and are oriented by increasing vertex order.
//! Cochains are column vectors indexed by the simplices of one dimension, in the sorted
//! order returned by [`SimplicialComplex::simplices`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix};
use crate::linalg::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `simplices[d]` holds the sorted `d`-simplices.
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

fn faces_of(simplex: &[usize]) -> impl Iterator<Item = (usize, Vec<usize>)> + '_ {
    (0..simplex.len()).map(move |i| {
        let mut face = simplex.to_vec();
        face.remove(i);
        (i, face)
    })
}

impl SimplicialComplex {
    /// Every vertex `0..vertex_count` is a 0-simplex. The remaining simplices must be
    /// closed under taking faces and listed once each.
    pub fn new(vertex_count: usize, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> =
            vec![(0..vertex_count).map(|v| vec![v]).collect()];
        let mut seen_higher: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in simplices {
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!(
                    "vertex {v} out of range (vertex count {vertex_count})"
                )));
            }
            let mut sorted = s.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!(
                    "repeated vertex in simplex {s:?}"
                )));
            }
            if sorted.len() == 1 {
                continue;
            }
            if !seen_higher.insert(sorted.clone()) {
                return Err(Error::InvalidComplex(format!(
                    "duplicate simplex {sorted:?}"
                )));
            }
            let d = sorted.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(sorted);
        }
        for d in 1..by_dim.len() {
            for s in &by_dim[d] {
                if let Some((_, face)) = faces_of(s).find(|(_, f)| !by_dim[d - 1].contains(f)) {
                    return Err(Error::InvalidComplex(format!(
                        "face {face:?} of {s:?} is missing"
                    )));
                }
            }
        }
        while by_dim.len() > 1 && by_dim.last().is_some_and(BTreeSet::is_empty) {
            by_dim.pop();
        }
        let simplices: Vec<Vec<Vec<usize>>> = by_dim
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let index = simplices
            .iter()
            .map(|level| {
                level
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        let complex = Self {
            vertex_count,
            simplices,
            index,
        };
        for d in 2..=complex.top_dim() {
            let product = complex.boundary(d - 1).checked_mul(&complex.boundary(d))?;
            if !product.is_zero() {
                return Err(Error::InvalidComplex(
                    "boundary of a boundary is nonzero".into(),
                ));
            }
        }
        Ok(complex)
    }

    /// Closes a list of maximal simplices under faces.
    pub fn from_maximal(vertex_count: usize, maximal: &[Vec<usize>]) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in maximal {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != s.len() {
                return Err(Error::InvalidComplex(format!(
                    "repeated vertex in simplex {s:?}"
                )));
            }
            let k = sorted.len();
            for mask in 1u64..(1u64 << k) {
                all.insert(
                    (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| sorted[i])
                        .collect(),
                );
            }
        }
        Self::new(vertex_count, all.into_iter().collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Largest simplex dimension, `0` for a complex without edges (including the empty one).
    pub fn top_dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.index.get(d)?.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index_of(simplex).is_some()
    }

    /// All simplices, lowest dimension first.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }

    /// `∂_d : C_d → C_{d−1}` as a `count(d−1) × count(d)` matrix; zero-sized for `d = 0`.
    pub fn boundary(&self, d: usize) -> IntMatrix {
        if d == 0 {
            return IntMatrix::zeros(0, self.count(0));
        }
        let mut m = IntMatrix::zeros(self.count(d - 1), self.count(d));
        for (j, s) in self.simplices(d).iter().enumerate() {
            for (i, face) in faces_of(s) {
                let row = self.index[d - 1][&face];
                let sign = if i % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                m.set(row, j, sign);
            }
        }
        m
    }

    /// `δ^d : C^d → C^{d+1}`, the transpose of `∂_{d+1}`.
    pub fn coboundary(&self, d: usize) -> IntMatrix {
        if d + 1 > self.top_dim() {
            return IntMatrix::zeros(0, self.count(d));
        }
        self.boundary(d + 1).transpose()
    }

    /// `δ^{d−1}`, or the zero map from the zero group when `d = 0`.
    fn incoming(&self, d: usize) -> IntMatrix {
        match d.checked_sub(1) {
            Some(p) => self.coboundary(p),
            None => IntMatrix::zeros(self.count(0), 0),
        }
    }

    /// Full subcomplex on a set of vertices, with its vertex map.
    pub fn induced(&self, vertices: &[usize]) -> Result<(SimplicialComplex, Vec<usize>)> {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let chosen: Vec<Vec<usize>> = self
            .all_simplices()
            .filter(|s| s.iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        self.relabelled(&chosen)
    }

    /// Renumbers a face-closed set of simplices onto `0..k`, preserving vertex order.
    fn relabelled(&self, simplices: &[Vec<usize>]) -> Result<(SimplicialComplex, Vec<usize>)> {
        let used: Vec<usize> = simplices
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let position: HashMap<usize, usize> =
            used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let relabelled: Vec<Vec<usize>> = simplices
            .iter()
            .map(|s| s.iter().map(|v| position[v]).collect())
            .collect();
        Ok((
            SimplicialComplex::from_maximal(used.len(), &relabelled)?,
            used,
        ))
    }
}

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | … | d_k`, all `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(with = "torsion_strings")]
    pub torsion: Vec<BigInt>,
}

mod torsion_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Text(String),
        Number(u64),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Entry>::deserialize(d)?
            .into_iter()
            .map(|e| match e {
                Entry::Text(t) => t.parse().map_err(serde::de::Error::custom),
                Entry::Number(n) => Ok(BigInt::from(n)),
            })
            .collect()
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// From the invariant factors of a presentation; units are dropped.
    pub fn new(free_rank: usize, factors: Vec<BigInt>) -> Result<Self> {
        let torsion: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::Validation(
                "invariant factors must be at least 2".into(),
            ));
        }
        if torsion.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(Error::Validation(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `G ⊗ Zⁿ = Gⁿ`.
    pub fn tensor_lattice(&self, n: usize) -> Self {
        let mut torsion: Vec<BigInt> = self
            .torsion
            .iter()
            .flat_map(|d| std::iter::repeat_n(d.clone(), n))
            .collect();
        torsion.sort();
        Self {
            free_rank: self.free_rank * n,
            torsion,
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Cohomology at the middle of `A --incoming--> B --outgoing--> C` where `B = Z^dim`.
fn group_at(dim: usize, incoming: &IntMatrix, outgoing: &IntMatrix) -> AbelianGroup {
    let factors_in = lattice::invariant_factors(incoming);
    let rank_out = outgoing.rank();
    let free_rank = dim - rank_out - factors_in.len();
    AbelianGroup::new(free_rank, factors_in).expect("Smith factors form a chain")
}

fn betti_at(dim: usize, incoming: &IntMatrix, outgoing: &IntMatrix) -> usize {
    dim - incoming.rank() - outgoing.rank()
}

pub fn cohomology_integer(k: &SimplicialComplex, degree: usize) -> AbelianGroup {
    group_at(k.count(degree), &k.incoming(degree), &k.coboundary(degree))
}

pub fn homology_integer(k: &SimplicialComplex, degree: usize) -> AbelianGroup {
    let incoming = if degree < k.top_dim() {
        k.boundary(degree + 1)
    } else {
        IntMatrix::zeros(k.count(degree), 0)
    };
    group_at(k.count(degree), &incoming, &k.boundary(degree))
}

/// Cohomology with coefficients in the lattice `Zⁿ`.
pub fn cohomology_lattice(k: &SimplicialComplex, degree: usize, n: usize) -> AbelianGroup {
    cohomology_integer(k, degree).tensor_lattice(n)
}

/// Betti number over `Q`.
pub fn cohomology_rational(k: &SimplicialComplex, degree: usize) -> usize {
    betti_at(k.count(degree), &k.incoming(degree), &k.coboundary(degree))
}

/// A subcomplex `L` together with an injective simplicial map into `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInclusion {
    ambient: SimplicialComplex,
    sub: SimplicialComplex,
    vertex_map: Vec<usize>,
}

impl PairInclusion {
    pub fn new(
        ambient: SimplicialComplex,
        sub: SimplicialComplex,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != sub.vertex_count() {
            return Err(Error::InvalidInclusion(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                sub.vertex_count()
            )));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= ambient.vertex_count()) {
            return Err(Error::InvalidInclusion(format!(
                "image vertex {v} out of range"
            )));
        }
        if vertex_map.iter().collect::<BTreeSet<_>>().len() != vertex_map.len() {
            return Err(Error::InvalidInclusion(
                "vertex map is not injective".into(),
            ));
        }
        let pair = Self {
            ambient,
            sub,
            vertex_map,
        };
        if let Some(s) = pair
            .sub
            .all_simplices()
            .find(|s| !pair.ambient.contains(&pair.image(s).0))
        {
            return Err(Error::InvalidInclusion(format!(
                "image of simplex {s:?} is not in the ambient complex"
            )));
        }
        Ok(pair)
    }

    pub fn empty(ambient: SimplicialComplex) -> Self {
        let sub = SimplicialComplex::new(0, Vec::new()).expect("empty complex");
        Self {
            ambient,
            sub,
            vertex_map: Vec::new(),
        }
    }

    pub fn identity(ambient: SimplicialComplex) -> Self {
        let vertex_map = (0..ambient.vertex_count()).collect();
        Self {
            sub: ambient.clone(),
            ambient,
            vertex_map,
        }
    }

    /// Full subcomplex of the ambient complex spanned by `vertices`.
    pub fn induced(ambient: SimplicialComplex, vertices: &[usize]) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= ambient.vertex_count()) {
            return Err(Error::InvalidInclusion(format!("vertex {v} out of range")));
        }
        let (sub, map) = ambient.induced(vertices)?;
        Self::new(ambient, sub, map)
    }

    /// Subcomplex generated by the given ambient simplices.
    pub fn from_ambient_simplices(
        ambient: SimplicialComplex,
        simplices: &[Vec<usize>],
    ) -> Result<Self> {
        let mut sorted = Vec::with_capacity(simplices.len());
        for s in simplices {
            let mut t = s.clone();
            t.sort_unstable();
            if !ambient.contains(&t) {
                return Err(Error::InvalidInclusion(format!(
                    "{s:?} is not a simplex of the ambient complex"
                )));
            }
            sorted.push(t);
        }
        let (sub, map) = ambient.relabelled(&sorted)?;
        Self::new(ambient, sub, map)
    }

    /// Closed star of a vertex set: every simplex containing a marked vertex, with its faces.
    pub fn closed_star(ambient: SimplicialComplex, marked: &[usize]) -> Result<Self> {
        let marked: BTreeSet<usize> = marked.iter().copied().collect();
        let star: Vec<Vec<usize>> = ambient
            .all_simplices()
            .filter(|s| s.iter().any(|v| marked.contains(v)))
            .cloned()
            .collect();
        Self::from_ambient_simplices(ambient, &star)
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Sorted image of a sub-simplex and the sign of the sorting permutation.
    fn image(&self, simplex: &[usize]) -> (Vec<usize>, bool) {
        let mapped: Vec<usize> = simplex.iter().map(|&v| self.vertex_map[v]).collect();
        let inversions = (0..mapped.len())
            .flat_map(|i| (i + 1..mapped.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| mapped[i] > mapped[j])
            .count();
        let mut sorted = mapped;
        sorted.sort_unstable();
        (sorted, inversions % 2 == 0)
    }

    /// `f^* : C^d(K) → C^d(L)`.
    pub fn restriction_cochains(&self, d: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.sub.count(d), self.ambient.count(d));
        for (i, s) in self.sub.simplices(d).iter().enumerate() {
            let (image, even) = self.image(s);
            let j = self.ambient.index_of(&image).expect("validated inclusion");
            m.set(i, j, if even { BigInt::one() } else { -BigInt::one() });
        }
        m
    }

    /// `D^p : C^p(f) → C^{p+1}(f)` on `C^p(f) = C^p(K) ⊕ C^{p−1}(L)`,
    /// `D(α, β) = (δα, f^*α − δβ)`.
    pub fn cone_differential(&self, p: usize) -> IntMatrix {
        let (k, l) = (&self.ambient, &self.sub);
        let dk = k.coboundary(p);
        let r = self.restriction_cochains(p);
        let dl = l.incoming(p);
        let in_k = k.count(p);
        let in_l = p.checked_sub(1).map_or(0, |q| l.count(q));
        let out_k = k.count(p + 1);
        let out_l = l.count(p);
        let mut m = IntMatrix::zeros(out_k + out_l, in_k + in_l);
        for i in 0..out_k {
            for j in 0..in_k {
                m.set(i, j, dk.get(i, j).clone());
            }
        }
        for i in 0..out_l {
            for j in 0..in_k {
                m.set(out_k + i, j, r.get(i, j).clone());
            }
            for j in 0..in_l {
                m.set(out_k + i, in_k + j, -dl.get(i, j).clone());
            }
        }
        m
    }

    pub fn cone_dim(&self, p: usize) -> usize {
        self.ambient.count(p) + p.checked_sub(1).map_or(0, |q| self.sub.count(q))
    }

    fn cone_incoming(&self, p: usize) -> IntMatrix {
        match p.checked_sub(1) {
            Some(q) => self.cone_differential(q),
            None => IntMatrix::zeros(self.cone_dim(0), 0),
        }
    }
}

/// `H^p(K, L; Z)` as the cohomology of the mapping cone.
pub fn relative_cohomology_integer(pair: &PairInclusion, p: usize) -> AbelianGroup {
    group_at(
        pair.cone_dim(p),
        &pair.cone_incoming(p),
        &pair.cone_differential(p),
    )
}

/// `dim H^p(K, L; Q)`.
pub fn relative_cohomology_rational(pair: &PairInclusion, p: usize) -> usize {
    betti_at(
        pair.cone_dim(p),
        &pair.cone_incoming(p),
        &pair.cone_differential(p),
    )
}

/// Rational cochain complex data at one degree: cocycles and coboundaries as column sets.
struct Level {
    cocycles: Vec<Vec<Rational>>,
    coboundaries: Vec<Vec<Rational>>,
}

impl Level {
    fn new(dim: usize, incoming: &IntMatrix, outgoing: &IntMatrix) -> Self {
        let cocycles = linalg::kernel(&outgoing.to_rational_rows(), dim);
        let coboundaries = linalg::transpose(&incoming.to_rational_rows(), incoming.cols());
        Self {
            cocycles,
            coboundaries,
        }
    }

    fn coboundary_rank(&self, dim: usize) -> usize {
        linalg::rank(&self.coboundaries, dim)
    }
}

fn apply(map: &IntMatrix, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = map.to_rational_rows();
    vectors.iter().map(|v| linalg::mat_vec(&rows, v)).collect()
}

/// Rank of the map induced on cohomology by a cochain map, given as rows of images of
/// source cocycles in the target level.
fn induced_rank(images: &[Vec<Rational>], target: &Level, target_dim: usize) -> usize {
    let mut stacked = target.coboundaries.clone();
    stacked.extend(images.iter().cloned());
    linalg::rank(&stacked, target_dim) - target.coboundary_rank(target_dim)
}

fn cochain_level(pair: &PairInclusion, node: LesSpace, p: usize) -> (usize, Level) {
    match node {
        LesSpace::Relative => {
            let dim = pair.cone_dim(p);
            (
                dim,
                Level::new(dim, &pair.cone_incoming(p), &pair.cone_differential(p)),
            )
        }
        LesSpace::Ambient => {
            let k = &pair.ambient;
            (
                k.count(p),
                Level::new(k.count(p), &k.incoming(p), &k.coboundary(p)),
            )
        }
        LesSpace::Sub => {
            let l = &pair.sub;
            (
                l.count(p),
                Level::new(l.count(p), &l.incoming(p), &l.coboundary(p)),
            )
        }
    }
}

/// `π(α, β) = α` from `C^p(f)` to `C^p(K)`.
fn projection(pair: &PairInclusion, p: usize) -> IntMatrix {
    let (k_dim, cone_dim) = (pair.ambient.count(p), pair.cone_dim(p));
    let mut m = IntMatrix::zeros(k_dim, cone_dim);
    for i in 0..k_dim {
        m.set(i, i, BigInt::one());
    }
    m
}

/// `ι(β) = (0, β)` from `C^p(L)` to `C^{p+1}(f)`.
fn inclusion(pair: &PairInclusion, p: usize) -> IntMatrix {
    let offset = pair.ambient.count(p + 1);
    let l_dim = pair.sub.count(p);
    let mut m = IntMatrix::zeros(pair.cone_dim(p + 1), l_dim);
    for j in 0..l_dim {
        m.set(offset + j, j, BigInt::one());
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LesSpace {
    /// `H^p(K, L)`
    Relative,
    /// `H^p(K)`
    Ambient,
    /// `H^p(L)`
    Sub,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesNode {
    pub space: LesSpace,
    pub degree: usize,
    pub dim: usize,
    /// Rank of the map into this node.
    pub rank_in: usize,
    /// Rank of the map out of this node.
    pub rank_out: usize,
    /// The composite through this node vanishes on cohomology.
    pub composite_zero: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub nodes: Vec<LesNode>,
    pub exact: bool,
}

/// The cochain map leaving `(space, p)` and the node it lands on.
fn les_step(pair: &PairInclusion, space: LesSpace, p: usize) -> (IntMatrix, LesSpace, usize) {
    match space {
        LesSpace::Relative => (projection(pair, p), LesSpace::Ambient, p),
        LesSpace::Ambient => (pair.restriction_cochains(p), LesSpace::Sub, p),
        LesSpace::Sub => (inclusion(pair, p), LesSpace::Relative, p + 1),
    }
}

/// Checks exactness of `… → H^p(K,L) → H^p(K) → H^p(L) → H^{p+1}(K,L) → …` over `Q`
/// at every node of degree at most `max_degree`.
pub fn long_exact_sequence(pair: &PairInclusion, max_degree: usize) -> LesReport {
    let mut sequence: Vec<(LesSpace, usize)> = Vec::new();
    for p in 0..=max_degree {
        sequence.extend([
            (LesSpace::Relative, p),
            (LesSpace::Ambient, p),
            (LesSpace::Sub, p),
        ]);
    }
    let mut all: HashMap<(LesSpace, usize), (usize, Level)> = HashMap::new();
    for &(space, p) in &sequence {
        all.insert((space, p), cochain_level(pair, space, p));
    }
    all.insert(
        (LesSpace::Relative, max_degree + 1),
        cochain_level(pair, LesSpace::Relative, max_degree + 1),
    );

    let rank_out = |space: LesSpace, p: usize| -> usize {
        let (map, target_space, q) = les_step(pair, space, p);
        let (_, source) = &all[&(space, p)];
        let (target_dim, target) = &all[&(target_space, q)];
        induced_rank(&apply(&map, &source.cocycles), target, *target_dim)
    };

    let mut nodes = Vec::new();
    for (i, &(space, p)) in sequence.iter().enumerate() {
        let (dim_cochains, here) = &all[&(space, p)];
        let dim = here.cocycles.len() - here.coboundary_rank(*dim_cochains);
        let out = rank_out(space, p);
        let (rank_in, composite_zero) = if i == 0 {
            (0, true)
        } else {
            let (prev_space, q) = sequence[i - 1];
            let (map_in, _, _) = les_step(pair, prev_space, q);
            let (map_out, next_space, r) = les_step(pair, space, p);
            let (_, prev) = &all[&(prev_space, q)];
            let (next_dim, next) = &all[&(next_space, r)];
            let through = apply(&map_out, &apply(&map_in, &prev.cocycles));
            (
                rank_out(prev_space, q),
                induced_rank(&through, next, *next_dim) == 0,
            )
        };
        nodes.push(LesNode {
            space,
            degree: p,
            dim,
            rank_in,
            rank_out: out,
            composite_zero,
            exact: composite_zero && rank_in + out == dim,
        });
    }
    let exact = nodes.iter().all(|n| n.exact);
    LesReport { nodes, exact }
}

/// Cocycle representatives of a basis of `H^p(K; Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyBasis {
    degree: usize,
    cochain_dim: usize,
    representatives: Vec<Vec<Rational>>,
    coboundaries: Vec<Vec<Rational>>,
}

impl CohomologyBasis {
    pub fn standard(k: &SimplicialComplex, p: usize) -> Self {
        let dim = k.count(p);
        let level = Level::new(dim, &k.incoming(p), &k.coboundary(p));
        let mut spanned = level.coboundaries.clone();
        let mut reps = Vec::new();
        let mut current = linalg::rank(&spanned, dim);
        for z in level.cocycles {
            spanned.push(z.clone());
            let next = linalg::rank(&spanned, dim);
            if next > current {
                reps.push(z);
                current = next;
            } else {
                spanned.pop();
            }
        }
        Self {
            degree: p,
            cochain_dim: dim,
            representatives: reps,
            coboundaries: level.coboundaries,
        }
    }

    /// Validates user-chosen representatives: cocycles whose classes form a basis.
    pub fn with_representatives(
        k: &SimplicialComplex,
        p: usize,
        reps: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let standard = Self::standard(k, p);
        let dim = standard.cochain_dim;
        if reps.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidRepresentatives(format!(
                "cochains must have length {dim}"
            )));
        }
        let delta = k.coboundary(p).to_rational_rows();
        if reps
            .iter()
            .any(|r| linalg::mat_vec(&delta, r).iter().any(|x| !x.is_zero()))
        {
            return Err(Error::InvalidRepresentatives(
                "a representative is not a cocycle".into(),
            ));
        }
        if reps.len() != standard.dim() {
            return Err(Error::InvalidRepresentatives(format!(
                "expected {} representatives, got {}",
                standard.dim(),
                reps.len()
            )));
        }
        let mut stacked = standard.coboundaries.clone();
        stacked.extend(reps.iter().cloned());
        if linalg::rank(&stacked, dim) != linalg::rank(&standard.coboundaries, dim) + reps.len() {
            return Err(Error::InvalidRepresentatives(
                "classes are linearly dependent".into(),
            ));
        }
        Ok(Self {
            representatives: reps,
            ..standard
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Vec<Rational>] {
        &self.representatives
    }

    /// Coordinates of the class of a cocycle.
    pub fn coordinates(&self, cocycle: &[Rational]) -> Result<Vec<Rational>> {
        let mut columns = self.representatives.clone();
        columns.extend(self.coboundaries.iter().cloned());
        let a = linalg::transpose(&columns, self.cochain_dim);
        let x = linalg::solve(&a, cocycle, columns.len())
            .ok_or_else(|| Error::InvalidRepresentatives("not a cocycle".into()))?;
        Ok(x[..self.representatives.len()].to_vec())
    }
}

/// Matrix of `f^* : H^p(K; Q) → H^p(L; Q)` in the given bases (rows index the target basis).
pub fn restriction_map_with(
    pair: &PairInclusion,
    source: &CohomologyBasis,
    target: &CohomologyBasis,
) -> Result<Vec<Vec<Rational>>> {
    if source.degree != target.degree {
        return Err(Error::InvalidRepresentatives(
            "bases of different degrees".into(),
        ));
    }
    let r = pair.restriction_cochains(source.degree);
    let images = apply(&r, &source.representatives);
    let columns: Vec<Vec<Rational>> = images
        .iter()
        .map(|img| target.coordinates(img))
        .collect::<Result<_>>()?;
    Ok(linalg::transpose(&columns, target.dim()))
}

pub fn restriction_map(pair: &PairInclusion, p: usize) -> Vec<Vec<Rational>> {
    let source = CohomologyBasis::standard(&pair.ambient, p);
    let target = CohomologyBasis::standard(&pair.sub, p);
    restriction_map_with(pair, &source, &target).expect("standard bases are valid")
}

pub fn restriction_map_h2(pair: &PairInclusion) -> Vec<Vec<Rational>> {
    restriction_map(pair, 2)
}

/// Rank of a matrix given by rows; `cols` is needed when there are no rows.
pub fn matrix_rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    linalg::rank(rows, cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodFormReport {
    pub dim: usize,
    /// `dim ker(f^* : H²(K) → H²(L))`
    pub kernel_dim: usize,
    /// `dim im(H²(K, L) → H²(K))`
    pub image_dim: usize,
}

/// Dimension of the classes on `K` that vanish on `L`, computed both as a kernel and as
/// an image; the two must agree.
pub fn good_form_subspace_dim(pair: &PairInclusion) -> Result<GoodFormReport> {
    let h2 = cohomology_rational(&pair.ambient, 2);
    let restriction = restriction_map_h2(pair);
    let kernel_dim = h2 - linalg::rank(&restriction, h2);
    let (_, relative) = cochain_level(pair, LesSpace::Relative, 2);
    let (k_dim, ambient) = cochain_level(pair, LesSpace::Ambient, 2);
    let image_dim = induced_rank(
        &apply(&projection(pair, 2), &relative.cocycles),
        &ambient,
        k_dim,
    );
    if kernel_dim != image_dim {
        return Err(Error::Inconsistent(format!(
            "kernel of restriction has dimension {kernel_dim} but the relative image has dimension {image_dim}"
        )));
    }
    Ok(GoodFormReport {
        dim: kernel_dim,
        kernel_dim,
        image_dim,
    })
}
