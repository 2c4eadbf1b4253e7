//! Small triangulations used as orbit-space models and as test fixtures.

use crate::topology::{PairInclusion, SimplicialComplex};

fn build(vertex_count: usize, maximal: &[&[usize]]) -> SimplicialComplex {
    let maximal: Vec<Vec<usize>> = maximal.iter().map(|s| s.to_vec()).collect();
    SimplicialComplex::from_maximal(vertex_count, &maximal).expect("fixture is well formed")
}

pub fn point() -> SimplicialComplex {
    build(1, &[])
}

pub fn segment() -> SimplicialComplex {
    build(2, &[&[0, 1]])
}

/// Boundary of an `m`-gon, `m ≥ 3`.
pub fn circle(m: usize) -> SimplicialComplex {
    assert!(m >= 3, "a simplicial circle needs at least 3 vertices");
    let edges: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    SimplicialComplex::from_maximal(m, &edges).expect("fixture is well formed")
}

/// A single triangle.
pub fn disk() -> SimplicialComplex {
    build(3, &[&[0, 1, 2]])
}

/// Cone over an `m`-gon: rim `0..m`, centre `m`. Contractible.
pub fn fan(m: usize) -> SimplicialComplex {
    assert!(m >= 3, "a fan needs at least 3 rim vertices");
    let triangles: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m, m]).collect();
    SimplicialComplex::from_maximal(m + 1, &triangles).expect("fixture is well formed")
}

/// `k` isolated rim vertices of a contractible fan, one per singular point.
pub fn fan_patches(k: usize) -> PairInclusion {
    let points: Vec<Vec<usize>> = (0..k).map(|v| vec![v]).collect();
    PairInclusion::from_ambient_simplices(fan(k.max(3)), &points).expect("vertices exist")
}

/// Inner boundary `0,1,2`, outer boundary `3,4,5`.
pub fn annulus() -> SimplicialComplex {
    build(
        6,
        &[
            &[0, 1, 3],
            &[1, 3, 4],
            &[1, 2, 4],
            &[2, 4, 5],
            &[0, 2, 5],
            &[0, 3, 5],
        ],
    )
}

/// Boundary of the tetrahedron.
pub fn sphere() -> SimplicialComplex {
    build(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
}

pub fn octahedron_boundary() -> SimplicialComplex {
    // poles 4 and 5 over the square 0-1-2-3
    build(
        6,
        &[
            &[0, 1, 4],
            &[1, 2, 4],
            &[2, 3, 4],
            &[0, 3, 4],
            &[0, 1, 5],
            &[1, 2, 5],
            &[2, 3, 5],
            &[0, 3, 5],
        ],
    )
}

/// The 7-vertex torus.
pub fn torus() -> SimplicialComplex {
    let mut triangles = Vec::new();
    for i in 0..7 {
        triangles.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        triangles.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_maximal(7, &triangles).expect("fixture is well formed")
}

/// The 6-vertex projective plane.
pub fn projective_plane() -> SimplicialComplex {
    build(
        6,
        &[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[1, 3, 4],
            &[1, 3, 5],
            &[2, 3, 5],
            &[2, 4, 5],
        ],
    )
}

/// Vertices are the simplices of `k` (by dimension, then lexicographically); simplices are flags.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let cells: Vec<&Vec<usize>> = k.all_simplices().collect();
    let mut flags: Vec<Vec<usize>> = Vec::new();
    fn extend(cells: &[&Vec<usize>], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        let last = cells[*chain.last().expect("nonempty chain")];
        for (j, c) in cells.iter().enumerate() {
            if c.len() > last.len() && last.iter().all(|v| c.contains(v)) {
                chain.push(j);
                extend(cells, chain, out);
                chain.pop();
            }
        }
    }
    for start in 0..cells.len() {
        let mut chain = vec![start];
        extend(&cells, &mut chain, &mut flags);
    }
    SimplicialComplex::from_maximal(cells.len(), &flags).expect("flags form a complex")
}

/// Barycentric subdivision of the tetrahedron boundary: 14 vertices, 36 edges, 24 triangles.
pub fn barycentric_sphere() -> SimplicialComplex {
    barycentric_subdivision(&sphere())
}

/// Seven disjoint points in [`barycentric_sphere`], standing in for seven contractible
/// neighbourhoods of isolated singularities.
pub fn sphere_patches() -> PairInclusion {
    let points: Vec<Vec<usize>> = (0..7).map(|v| vec![v]).collect();
    PairInclusion::from_ambient_simplices(barycentric_sphere(), &points).expect("vertices exist")
}

/// The step-one loop `0, 1, …, 6` on [`torus`].
pub fn torus_meridian() -> PairInclusion {
    let edges: Vec<Vec<usize>> = (0..7).map(|i| vec![i, (i + 1) % 7]).collect();
    PairInclusion::from_ambient_simplices(torus(), &edges).expect("edges exist")
}

fn edges_of_cycle(cycle: &[usize]) -> Vec<Vec<usize>> {
    (0..cycle.len())
        .map(|i| vec![cycle[i], cycle[(i + 1) % cycle.len()]])
        .collect()
}

fn sub(ambient: SimplicialComplex, simplices: Vec<Vec<usize>>) -> PairInclusion {
    PairInclusion::from_ambient_simplices(ambient, &simplices).expect("fixture is well formed")
}

/// Named pairs used by the exactness checks.
pub fn fixture_pairs() -> Vec<(&'static str, PairInclusion)> {
    let mut both_rims = edges_of_cycle(&[0, 1, 2]);
    both_rims.extend(edges_of_cycle(&[3, 4, 5]));
    vec![
        ("disk/circle", sub(disk(), edges_of_cycle(&[0, 1, 2]))),
        ("disk/point", sub(disk(), vec![vec![1]])),
        ("disk/empty", PairInclusion::empty(disk())),
        ("sphere/point", sub(sphere(), vec![vec![0]])),
        ("sphere/equator", sub(sphere(), edges_of_cycle(&[0, 1, 2]))),
        ("sphere/disk", sub(sphere(), vec![vec![0, 1, 2]])),
        ("sphere/identity", PairInclusion::identity(sphere())),
        ("sphere/empty", PairInclusion::empty(sphere())),
        ("torus/meridian", torus_meridian()),
        ("torus/point", sub(torus(), vec![vec![3]])),
        (
            "torus/star",
            PairInclusion::closed_star(torus(), &[0]).expect("vertex exists"),
        ),
        ("torus/identity", PairInclusion::identity(torus())),
        ("annulus/inner", sub(annulus(), edges_of_cycle(&[0, 1, 2]))),
        ("annulus/outer", sub(annulus(), edges_of_cycle(&[3, 4, 5]))),
        ("annulus/boundary", sub(annulus(), both_rims)),
        ("annulus/empty", PairInclusion::empty(annulus())),
        ("circle/point", sub(circle(5), vec![vec![2]])),
        ("circle/arc", sub(circle(5), vec![vec![0, 1], vec![1, 2]])),
        ("point/identity", PairInclusion::identity(point())),
        (
            "octahedron/equator",
            sub(octahedron_boundary(), edges_of_cycle(&[0, 1, 2, 3])),
        ),
        (
            "projective-plane/line",
            sub(projective_plane(), edges_of_cycle(&[0, 1, 2])),
        ),
        ("barycentric-sphere/patches", sphere_patches()),
    ]
}
