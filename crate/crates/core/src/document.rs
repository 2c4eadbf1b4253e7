//! JSON input documents.
//!
//! A document carries `schema_version` and exactly one payload key. Integers are JSON
//! integers or decimal strings; rationals are strings `"p"` / `"p/q"` or JSON integers.
//! Floating-point numbers are rejected everywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::classifier::{OrbitSpaceKind, OrbitSpaceSpec};
use crate::cone::{SimpleCone, UnimodularCone};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::linalg::{self, Rational};
use crate::polytope::{Facet, RationalPolytope};
use crate::topology::{PairInclusion, SimplicialComplex};

pub const SCHEMA_VERSION: u64 = 1;

const FLOAT_MESSAGE: &str =
    "floating-point numbers are not accepted; write integers as \"12\" and rationals as \"p/q\"";

/// An integer written as a JSON integer or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntText(pub BigInt);

impl<'de> Deserialize<'de> for IntText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = IntText;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<IntText, E> {
                Ok(IntText(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<IntText, E> {
                Ok(IntText(BigInt::from(v)))
            }
            fn visit_f64<E: de::Error>(self, _: f64) -> std::result::Result<IntText, E> {
                Err(E::custom(FLOAT_MESSAGE))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<IntText, E> {
                linalg::parse_integer(v).map(IntText).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// A rational written as `"p"`, `"p/q"` or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatText(pub Rational);

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatText;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatText, E> {
                Ok(RatText(linalg::rat(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatText, E> {
                Ok(RatText(Rational::from_integer(BigInt::from(v))))
            }
            fn visit_f64<E: de::Error>(self, _: f64) -> std::result::Result<RatText, E> {
                Err(E::custom(FLOAT_MESSAGE))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatText, E> {
                linalg::parse_rational(v).map(RatText).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn ints(v: &[IntText]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn rats(v: &[RatText]) -> Vec<Rational> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn int_rows(rows: &[Vec<IntText>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| ints(r)).collect()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleDoc {
    pub dim: Option<usize>,
    pub vectors: Vec<Vec<IntText>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub apex: Vec<RatText>,
    pub normals: Vec<Vec<IntText>>,
    /// Points whose face data is reported.
    #[serde(default)]
    pub points: Vec<Vec<RatText>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoodConeDoc {
    pub dim: usize,
    pub normals: Vec<Vec<IntText>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDoc {
    pub normal: Vec<IntText>,
    pub offset: RatText,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Option<Vec<Vec<RatText>>>,
    pub facets: Option<Vec<FacetDoc>>,
    /// Vertices to classify individually.
    #[serde(default)]
    pub query_vertices: Vec<Vec<RatText>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubcomplexDoc {
    /// Ambient simplices generating the subcomplex.
    pub simplices: Option<Vec<Vec<usize>>>,
    /// Closed star of these ambient vertices.
    pub star_of: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub vertices: usize,
    /// Simplices keyed by dimension; the closure is not added automatically.
    #[serde(default)]
    pub simplices: BTreeMap<String, Vec<SimplexEntry>>,
    pub subcomplex: Option<SubcomplexDoc>,
}

/// `"0": [0, 1, 2]` lists bare vertices; higher dimensions list vertex arrays.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SimplexEntry {
    Vertex(usize),
    Simplex(Vec<usize>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationDoc {
    pub kind: OrbitSpaceKind,
    pub torus_rank: usize,
    pub model: Option<ComplexDoc>,
    #[serde(default)]
    pub local_cones: Vec<ConeDoc>,
    #[serde(default)]
    pub singular_cones: Vec<GoodConeDoc>,
    pub polytope: Option<PolytopeDoc>,
    #[serde(default)]
    pub free_action: bool,
    pub description: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: u64,
    matrix: Option<Vec<Vec<IntText>>>,
    tuple: Option<TupleDoc>,
    cone: Option<ConeDoc>,
    good_cone: Option<GoodConeDoc>,
    polytope: Option<PolytopeDoc>,
    complex: Option<ComplexDoc>,
    pair: Option<ComplexDoc>,
    classification: Option<ClassificationDoc>,
}

#[derive(Clone, Debug)]
pub enum Payload {
    Matrix(Vec<Vec<IntText>>),
    Tuple(TupleDoc),
    Cone(ConeDoc),
    GoodCone(GoodConeDoc),
    Polytope(PolytopeDoc),
    Complex(ComplexDoc),
    Pair(ComplexDoc),
    Classification(ClassificationDoc),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Matrix(_) => "matrix",
            Payload::Tuple(_) => "tuple",
            Payload::Cone(_) => "cone",
            Payload::GoodCone(_) => "good_cone",
            Payload::Polytope(_) => "polytope",
            Payload::Complex(_) => "complex",
            Payload::Pair(_) => "pair",
            Payload::Classification(_) => "classification",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub schema_version: u64,
    pub payload: Payload,
}

/// Parses a document; errors carry the JSON path and the line/column of the problem.
pub fn parse_document(text: &str) -> Result<InputDocument> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path.is_empty() || path == "." {
            Error::Document(inner.to_string())
        } else {
            Error::Document(format!("at {path}: {inner}"))
        }
    })?;
    de.end().map_err(|e| Error::Document(e.to_string()))?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(Error::Document(format!(
            "unsupported schema_version {} (supported: {SCHEMA_VERSION})",
            raw.schema_version
        )));
    }
    let mut payloads: Vec<Payload> = Vec::new();
    payloads.extend(raw.matrix.map(Payload::Matrix));
    payloads.extend(raw.tuple.map(Payload::Tuple));
    payloads.extend(raw.cone.map(Payload::Cone));
    payloads.extend(raw.good_cone.map(Payload::GoodCone));
    payloads.extend(raw.polytope.map(Payload::Polytope));
    payloads.extend(raw.complex.map(Payload::Complex));
    payloads.extend(raw.pair.map(Payload::Pair));
    payloads.extend(raw.classification.map(Payload::Classification));
    if payloads.len() != 1 {
        let kinds: Vec<&str> = payloads.iter().map(Payload::kind).collect();
        return Err(Error::Document(format!(
            "expected exactly one payload, found {}{}",
            payloads.len(),
            if kinds.is_empty() {
                String::new()
            } else {
                format!(" ({})", kinds.join(", "))
            }
        )));
    }
    Ok(InputDocument {
        schema_version: raw.schema_version,
        payload: payloads.pop().expect("one payload"),
    })
}

pub fn matrix_from(rows: &[Vec<IntText>]) -> Result<IntMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(cols, &int_rows(rows))
}

impl TupleDoc {
    pub fn vectors(&self) -> Result<(usize, Vec<Vec<BigInt>>)> {
        let vectors = int_rows(&self.vectors);
        let dim = match (self.dim, vectors.first()) {
            (Some(d), _) => d,
            (None, Some(v)) => v.len(),
            (None, None) => {
                return Err(Error::Document(
                    "an empty tuple needs an explicit \"dim\"".into(),
                ))
            }
        };
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        Ok((dim, vectors))
    }
}

impl ConeDoc {
    pub fn apex(&self) -> Vec<Rational> {
        rats(&self.apex)
    }

    pub fn normals(&self) -> Vec<Vec<BigInt>> {
        int_rows(&self.normals)
    }

    pub fn points(&self) -> Vec<Vec<Rational>> {
        self.points.iter().map(|p| rats(p)).collect()
    }

    pub fn build(&self) -> Result<UnimodularCone> {
        UnimodularCone::new(self.apex(), self.normals())
    }
}

impl GoodConeDoc {
    pub fn build(&self) -> Result<SimpleCone> {
        SimpleCone::new(self.dim, int_rows(&self.normals))
    }
}

impl PolytopeDoc {
    pub fn build(&self) -> Result<RationalPolytope> {
        match (&self.vertices, &self.facets) {
            (Some(v), None) => {
                RationalPolytope::from_vertices(self.dim, v.iter().map(|p| rats(p)).collect())
            }
            (None, Some(f)) => RationalPolytope::from_facets(
                self.dim,
                f.iter()
                    .map(|f| Facet::new(ints(&f.normal), f.offset.0.clone()))
                    .collect(),
            ),
            _ => Err(Error::Document(
                "a polytope needs exactly one of \"vertices\" or \"facets\"".into(),
            )),
        }
    }

    pub fn query_vertices(&self) -> Vec<Vec<Rational>> {
        self.query_vertices.iter().map(|p| rats(p)).collect()
    }
}

impl ComplexDoc {
    pub fn build(&self) -> Result<SimplicialComplex> {
        let mut simplices = Vec::new();
        for (key, entries) in &self.simplices {
            let d: usize = key.parse().map_err(|_| {
                Error::Document(format!("simplex dimension key {key:?} is not a number"))
            })?;
            for entry in entries {
                let s = match entry {
                    SimplexEntry::Vertex(v) => vec![*v],
                    SimplexEntry::Simplex(s) => s.clone(),
                };
                if s.len() != d + 1 {
                    return Err(Error::InvalidComplex(format!(
                        "{s:?} listed under dimension {d} has {} vertices",
                        s.len()
                    )));
                }
                simplices.push(s);
            }
        }
        SimplicialComplex::new(self.vertices, simplices)
    }

    /// The ambient complex with its subcomplex (empty when none is given).
    pub fn build_pair(&self) -> Result<PairInclusion> {
        let ambient = self.build()?;
        match &self.subcomplex {
            None => Ok(PairInclusion::empty(ambient)),
            Some(SubcomplexDoc {
                simplices: Some(s),
                star_of: None,
            }) => PairInclusion::from_ambient_simplices(ambient, s),
            Some(SubcomplexDoc {
                simplices: None,
                star_of: Some(v),
            }) => PairInclusion::closed_star(ambient, v),
            Some(_) => Err(Error::Document(
                "a subcomplex needs exactly one of \"simplices\" or \"star_of\"".into(),
            )),
        }
    }
}

impl ClassificationDoc {
    pub fn build(&self) -> Result<OrbitSpaceSpec> {
        let mut spec =
            OrbitSpaceSpec::new(self.kind, self.torus_rank).with_free_action(self.free_action);
        if let Some(model) = &self.model {
            if self.kind == OrbitSpaceKind::Stratified {
                if model.subcomplex.is_none() {
                    return Err(Error::MissingModel(
                        "the stratified kind needs the model's \"subcomplex\" of singular neighbourhoods".into(),
                    ));
                }
                spec = spec.with_neighbourhoods(model.build_pair()?);
            } else {
                spec = spec.with_model(model.build()?);
            }
        }
        for c in &self.local_cones {
            spec = spec.with_local_cone(c.build()?);
        }
        for c in &self.singular_cones {
            spec = spec.with_singular_cone(c.build()?);
        }
        if let Some(p) = &self.polytope {
            spec = spec.with_polytope(p.build()?);
        }
        Ok(spec)
    }
}
