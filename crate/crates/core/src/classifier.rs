//! Classifying sets of toric moment data over a modelled orbit space.
//!
//! The answer is always a set of isomorphism classes presented as a lattice-valued
//! cohomology group times a real vector space; no geometric representative is built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cone::{self, SimpleCone, UnimodularCone};
use crate::error::{Error, Result};
use crate::polytope::{RationalPolytope, VertexClass};
use crate::topology::{self, AbelianGroup, PairInclusion, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitSpaceKind {
    Manifold,
    Cone,
    Contact,
    Stratified,
}

impl OrbitSpaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitSpaceKind::Manifold => "manifold",
            OrbitSpaceKind::Cone => "cone",
            OrbitSpaceKind::Contact => "contact",
            OrbitSpaceKind::Stratified => "stratified",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremTag {
    /// Symplectic toric manifolds over a unimodular local embedding.
    Manifold,
    /// Symplectic toric cones over a homogeneous unimodular local embedding.
    Cone,
    /// Contact toric manifolds, through their symplectizations.
    Contact,
    /// Symplectic toric stratified spaces with isolated singularities.
    Stratified,
    /// Compact stratified case determined by its moment polytope.
    CompactStratified,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::Manifold => "manifold",
            TheoremTag::Cone => "cone",
            TheoremTag::Contact => "contact",
            TheoremTag::Stratified => "stratified",
            TheoremTag::CompactStratified => "compact-stratified",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Orbit space data for one classification request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpaceSpec {
    pub kind: OrbitSpaceKind,
    pub torus_rank: usize,
    /// Model of `W`, or of `reg W` for the stratified kind.
    pub model: Option<SimplicialComplex>,
    /// Stratified kind: the subcomplex of `reg W` modelling the deleted neighbourhoods of
    /// the singular points.
    pub neighbourhoods: Option<PairInclusion>,
    /// Local cones at marked points of `W`.
    pub local_cones: Vec<UnimodularCone>,
    /// Local cones at singular points.
    pub singular_cones: Vec<SimpleCone>,
    pub polytope: Option<RationalPolytope>,
    /// The torus acts freely (relevant to the contact kind).
    pub free_action: bool,
}

impl OrbitSpaceSpec {
    pub fn new(kind: OrbitSpaceKind, torus_rank: usize) -> Self {
        Self {
            kind,
            torus_rank,
            model: None,
            neighbourhoods: None,
            local_cones: Vec::new(),
            singular_cones: Vec::new(),
            polytope: None,
            free_action: false,
        }
    }

    pub fn with_model(mut self, model: SimplicialComplex) -> Self {
        self.model = Some(model);
        self
    }

    /// Sets both `reg W` (the ambient complex) and `W̄`.
    pub fn with_neighbourhoods(mut self, pair: PairInclusion) -> Self {
        self.model = Some(pair.ambient().clone());
        self.neighbourhoods = Some(pair);
        self
    }

    pub fn with_local_cone(mut self, cone: UnimodularCone) -> Self {
        self.local_cones.push(cone);
        self
    }

    pub fn with_singular_cone(mut self, cone: SimpleCone) -> Self {
        self.singular_cones.push(cone);
        self
    }

    pub fn with_polytope(mut self, polytope: RationalPolytope) -> Self {
        self.polytope = Some(polytope);
        self
    }

    pub fn with_free_action(mut self, free: bool) -> Self {
        self.free_action = free;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub theorem: TheoremTag,
    pub lattice: AbelianGroup,
    pub real_dim: usize,
    pub unique: bool,
    pub unchecked_hypotheses: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl ClassificationResult {
    fn new(theorem: TheoremTag, lattice: AbelianGroup, real_dim: usize) -> Self {
        let unique = lattice.is_trivial() && real_dim == 0;
        Self {
            theorem,
            lattice,
            real_dim,
            unique,
            unchecked_hypotheses: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// `unique` agrees with the two parts.
    pub fn is_consistent(&self) -> bool {
        self.unique == (self.lattice.is_trivial() && self.real_dim == 0)
    }

    /// `"unique"`, or the group, e.g. `"Z^3 × R^1"`.
    pub fn summary(&self) -> String {
        if self.unique {
            return "unique".into();
        }
        let mut parts = Vec::new();
        if !self.lattice.is_trivial() {
            parts.push(self.lattice.to_string());
        }
        if self.real_dim > 0 {
            parts.push(format!("R^{}", self.real_dim));
        }
        parts.join(" × ")
    }

    pub fn render_text(&self) -> String {
        if self.unique {
            self.summary()
        } else {
            format!("{} (Theorem: {})", self.summary(), self.theorem)
        }
    }
}

fn is_contractible(k: &SimplicialComplex) -> bool {
    topology::cohomology_integer(k, 0) == AbelianGroup::free(1)
        && (1..=k.top_dim()).all(|d| topology::cohomology_integer(k, d).is_trivial())
}

fn check_dim(what: &str, dim: usize, n: usize) -> Result<()> {
    if dim != n {
        return Err(Error::Validation(format!(
            "{what} lives in dimension {dim}, but the torus has rank {n}"
        )));
    }
    Ok(())
}

/// Checks the supplied validation payloads; returns the hypotheses left unchecked.
fn validate(spec: &OrbitSpaceSpec) -> Result<Vec<String>> {
    let n = spec.torus_rank;
    let mut unchecked =
        vec!["the simplicial model is homotopy equivalent to the orbit space".to_string()];
    for (i, c) in spec.local_cones.iter().enumerate() {
        check_dim(&format!("local cone {i}"), c.dim(), n)?;
        let needs_homogeneous = matches!(spec.kind, OrbitSpaceKind::Cone | OrbitSpaceKind::Contact);
        if needs_homogeneous && !c.is_homogeneous() {
            return Err(Error::Validation(format!(
                "local cone {i} is not homogeneous: its apex must be nonzero and annihilate every normal"
            )));
        }
    }
    for (i, c) in spec.singular_cones.iter().enumerate() {
        check_dim(&format!("singular cone {i}"), c.dim(), n)?;
        let report = cone::is_good_cone(c);
        if let Some(face) = report.failing.first() {
            return Err(Error::Validation(format!(
                "singular cone {i} is not good: normals {:?} of a face are not unimodular",
                face
            )));
        }
    }
    if let Some(p) = &spec.polytope {
        check_dim("the polytope", p.dim(), n)?;
        for v in p.vertices() {
            let verdict = p.classify_vertex(v)?;
            if verdict.class == VertexClass::Reject {
                let coords: Vec<String> = v.iter().map(crate::linalg::format_rational).collect();
                return Err(Error::Validation(format!(
                    "vertex ({}) has a local cone that is not good",
                    coords.join(", ")
                )));
            }
        }
    }
    match spec.kind {
        OrbitSpaceKind::Manifold => {
            unchecked.push("the orbital moment map is a unimodular local embedding".into());
        }
        OrbitSpaceKind::Cone | OrbitSpaceKind::Contact => {
            if spec.local_cones.is_empty() {
                unchecked.push(
                    "the orbital moment map is a homogeneous unimodular local embedding".into(),
                );
            } else {
                unchecked.push("local cones away from the supplied points are homogeneous".into());
            }
        }
        OrbitSpaceKind::Stratified => {
            unchecked.push(
                "the subcomplex models the deleted conical neighbourhoods of the singular points"
                    .into(),
            );
            if spec.polytope.is_none() && spec.singular_cones.is_empty() {
                unchecked.push(
                    "the orbital moment map is a stratified unimodular local embedding".into(),
                );
            }
        }
    }
    Ok(unchecked)
}

pub fn classify(spec: &OrbitSpaceSpec) -> Result<ClassificationResult> {
    let n = spec.torus_rank;
    if n == 0 {
        return Err(Error::Validation(
            "the torus rank must be at least 1".into(),
        ));
    }
    let model = spec.model.as_ref().ok_or_else(|| {
        Error::MissingModel(format!(
            "a model of the orbit space is required for kind {}",
            spec.kind.as_str()
        ))
    })?;
    let unchecked = validate(spec)?;
    let lattice = topology::cohomology_lattice(model, 2, n);

    let mut result = match spec.kind {
        OrbitSpaceKind::Manifold => ClassificationResult::new(
            TheoremTag::Manifold,
            lattice,
            topology::cohomology_rational(model, 2),
        ),
        OrbitSpaceKind::Cone => ClassificationResult::new(TheoremTag::Cone, lattice, 0),
        OrbitSpaceKind::Contact => ClassificationResult::new(TheoremTag::Contact, lattice, 0),
        OrbitSpaceKind::Stratified => {
            let pair = spec.neighbourhoods.as_ref().ok_or_else(|| {
                Error::MissingModel("the stratified kind needs the neighbourhood subcomplex".into())
            })?;
            if pair.ambient() != model {
                return Err(Error::Validation(
                    "the neighbourhood subcomplex does not sit in the regular-part model".into(),
                ));
            }
            let good = topology::good_form_subspace_dim(pair)?;
            let mut result = ClassificationResult::new(TheoremTag::Stratified, lattice, good.dim);
            if let Some(p) = &spec.polytope {
                let simplicity = p.simplicity_report();
                if !simplicity.simple_except_at_vertices {
                    result
                        .notes
                        .push("the polytope is not simple away from its vertices; the compact shortcut does not apply".into());
                } else if is_contractible(model) {
                    result.theorem = TheoremTag::CompactStratified;
                    result.lattice = AbelianGroup::trivial();
                    result.real_dim = 0;
                    result.unique = true;
                    result
                        .notes
                        .push("compact case: the space is determined up to isomorphism by its moment polytope".into());
                }
            }
            result
        }
    };
    result.unchecked_hypotheses = unchecked;
    if spec.kind == OrbitSpaceKind::Contact && n == 2 && spec.free_action {
        result.notes.push(
            "out of scope: three-dimensional contact toric manifolds with a free action carry extra lens-space and twisting parameters that are not computed".into(),
        );
    }
    result.notes.push(
        "the result is the set of isomorphism classes; no representative is constructed".into(),
    );
    Ok(result)
}
