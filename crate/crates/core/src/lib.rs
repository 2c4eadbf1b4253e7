//! Exact computations for torus-action moment data: integer lattices, unimodular and
//! good cones, rational polytopes, simplicial cohomology, and the classification of
//! moment maps over a modelled orbit space.

pub mod classifier;
pub mod cone;
pub mod document;
pub mod error;
pub(crate) mod feasibility;
pub mod lattice;
pub mod linalg;
pub mod models;
pub mod polytope;
pub mod topology;

pub use classifier::{classify, ClassificationResult, OrbitSpaceKind, OrbitSpaceSpec, TheoremTag};
pub use cone::{is_good_cone, SimpleCone, UnimodularCone};
pub use error::{Error, Result};
pub use lattice::{hermite_normal_form, smith_normal_form, IntMatrix, SnfDecomposition};
pub use linalg::Rational;
pub use polytope::{Facet, RationalPolytope, VertexClass};
pub use topology::{AbelianGroup, PairInclusion, SimplicialComplex};
