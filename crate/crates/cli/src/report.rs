use num_bigint::BigInt;
use serde_json::{json, Value};
use toric_core::cone::{self, ConeSplit};
use toric_core::document::{self, ComplexDoc, InputDocument, Payload};
use toric_core::lattice::{self, IntMatrix, TupleReport, TupleVerdict};
use toric_core::linalg::{format_rational, Rational};
use toric_core::polytope::{VertexClass, VertexFailureReason};
use toric_core::topology::{self, AbelianGroup, LesSpace};
use toric_core::{classify, Error};

use crate::{CheckKind, Coefficients, Command, Outcome, Style};

/// One document's worth of output.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Value,
    pub error: String,
}

impl Report {
    fn ok(holds: bool, text: String, json: Value) -> Self {
        Self {
            code: if holds { 0 } else { 1 },
            text,
            json,
            error: String::new(),
        }
    }

    pub fn invalid(message: String) -> Self {
        Self {
            code: 2,
            text: String::new(),
            json: json!({"error": message}),
            error: message,
        }
    }

    fn negative(message: String) -> Self {
        Self {
            code: 1,
            text: format!("{message}\n"),
            json: json!({"error": message}),
            error: String::new(),
        }
    }

    fn from_error(e: Error) -> Self {
        match e {
            Error::Validation(_) => Self::negative(e.to_string()),
            other => Self::invalid(other.to_string()),
        }
    }

    pub fn into_outcome(self, as_json: bool) -> Outcome {
        let stderr = if self.error.is_empty() {
            String::new()
        } else {
            format!("error: {}\n", self.error)
        };
        let stdout = if as_json {
            serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n"
        } else {
            self.text
        };
        Outcome {
            code: self.code,
            stdout,
            stderr,
        }
    }
}

fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn int_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| ints(r)).collect()
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn tuple_text(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(int_rows(&m.to_rows()))
}

fn matrix_text(m: &IntMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| format!("  [{}]", ints(r).join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn wrong_payload(command: &str, expected: &str, doc: &InputDocument) -> Report {
    Report::invalid(format!(
        "{command} expects a {expected} document, got {}",
        doc.payload.kind()
    ))
}

pub fn dispatch(command: &Command, text: &str, style: Style) -> Report {
    let doc = match document::parse_document(text) {
        Ok(d) => d,
        Err(e) => return Report::invalid(e.to_string()),
    };
    let result = match command {
        Command::Snf { .. } => snf(&doc),
        Command::Check { what, .. } => match what {
            CheckKind::Unimodular => check_unimodular(&doc, style),
            CheckKind::Cone => check_cone(&doc, style),
            CheckKind::GoodCone => check_good_cone(&doc, style),
            CheckKind::Polytope => check_polytope(&doc, style),
        },
        Command::Cohomology { degree, coeff, .. } => cohomology(&doc, *degree, *coeff),
        Command::Relative { degree, .. } => relative(&doc, *degree, style),
        Command::Classify { .. } => classification(&doc),
    };
    result.unwrap_or_else(Report::from_error)
}

/// Rows of a matrix or tuple payload, or a report rejecting any other payload.
type Rows = Result<(usize, Vec<Vec<BigInt>>), Report>;

fn matrix_rows(doc: &InputDocument, command: &str) -> Result<Rows, Error> {
    Ok(match &doc.payload {
        Payload::Matrix(rows) => {
            let m = document::matrix_from(rows)?;
            Ok((m.cols(), m.to_rows()))
        }
        Payload::Tuple(t) => Ok(t.vectors()?),
        _ => Err(wrong_payload(command, "matrix or tuple", doc)),
    })
}

fn snf(doc: &InputDocument) -> Result<Report, Error> {
    let (cols, rows) = match matrix_rows(doc, "snf")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let a = IntMatrix::from_rows(cols, &rows)?;
    let s = lattice::smith_normal_form(&a);
    let factors = ints(&s.invariant_factors());
    let text = format!(
        "invariant factors: {}\nrank: {}\nD =\n{}\nU =\n{}\nV =\n{}\n",
        if factors.is_empty() {
            "none".to_string()
        } else {
            factors.join(", ")
        },
        s.rank(),
        matrix_text(&s.d),
        matrix_text(&s.u),
        matrix_text(&s.v),
    );
    let json = json!({
        "command": "snf",
        "invariant_factors": factors,
        "rank": s.rank(),
        "d": matrix_json(&s.d),
        "u": matrix_json(&s.u),
        "v": matrix_json(&s.v),
    });
    Ok(Report::ok(true, text, json))
}

fn tuple_reason(r: &TupleReport) -> Option<String> {
    match &r.verdict {
        TupleVerdict::Unimodular => None,
        TupleVerdict::TooManyVectors { count, dim } => {
            Some(format!("{count} vectors in dimension {dim}"))
        }
        TupleVerdict::LinearlyDependent { rank, count } => Some(format!(
            "linearly dependent: rank {rank} for {count} vectors"
        )),
        TupleVerdict::NontrivialFactor(d) => Some(format!("invariant factor {d}")),
    }
}

fn check_unimodular(doc: &InputDocument, style: Style) -> Result<Report, Error> {
    let (_, rows) = match matrix_rows(doc, "check unimodular")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let dim = match &doc.payload {
        Payload::Tuple(t) => t.vectors()?.0,
        _ => rows.first().map_or(0, Vec::len),
    };
    let r = lattice::unimodularity_report(&rows)?;
    let reason = tuple_reason(&r);
    let holds = reason.is_none();
    let text = match &reason {
        None => format!(
            "{}: the {} vectors form a unimodular tuple\n",
            style.verdict(true, "unimodular"),
            r.count
        ),
        Some(why) => format!("{}: {why}\n", style.verdict(false, "not unimodular")),
    };
    let json = json!({
        "command": "check unimodular",
        "unimodular": holds,
        "dim": dim,
        "count": r.count,
        "rank": r.rank,
        "invariant_factors": ints(&r.invariant_factors),
        "reason": reason,
    });
    Ok(Report::ok(holds, text, json))
}

fn split_json(s: &ConeSplit) -> Value {
    json!({
        "lattice_basis": int_rows(&s.lattice_basis),
        "complement_basis": int_rows(&s.complement_basis),
        "annihilator_basis": s.annihilator_basis.iter().map(|v| rats(v)).collect::<Vec<_>>(),
        "reduced_normals": int_rows(&s.reduced_normals),
        "reduced_apex": rats(s.reduced.apex()),
    })
}

fn check_cone(doc: &InputDocument, style: Style) -> Result<Report, Error> {
    let Payload::Cone(c) = &doc.payload else {
        return Ok(wrong_payload("check cone", "cone", doc));
    };
    let cone = match c.build() {
        Ok(cone) => cone,
        Err(e @ Error::NotUnimodular { .. }) => {
            let r = lattice::unimodularity_report(&c.normals())?;
            let why = tuple_reason(&r).unwrap_or_else(|| e.to_string());
            let text = format!("{}: {why}\n", style.verdict(false, "not a unimodular cone"));
            let json = json!({
                "command": "check cone",
                "unimodular": false,
                "invariant_factors": ints(&r.invariant_factors),
                "reason": why,
            });
            return Ok(Report::ok(false, text, json));
        }
        Err(e) => return Err(e),
    };
    let split = cone.split();
    let mut text = format!(
        "{}: {} normals in dimension {}\nhomogeneous: {}\nannihilator dimension: {}\n",
        style.verdict(true, "unimodular cone"),
        cone.normals().len(),
        cone.dim(),
        if cone.is_homogeneous() { "yes" } else { "no" },
        split.annihilator_basis.len(),
    );
    let mut points = Vec::new();
    for p in c.points() {
        let coords = tuple_text(&rats(&p));
        match cone.face_data(&p) {
            Ok(face) => {
                text.push_str(&format!(
                    "point {coords}: active normals {:?}\n",
                    face.active_indices
                ));
                points.push(json!({
                    "point": rats(&p),
                    "inside": true,
                    "active": face.active_indices,
                    "subtorus_basis": int_rows(&face.subtorus_basis),
                }));
            }
            Err(Error::OutsideCone { index }) => {
                text.push_str(&format!("point {coords}: outside (normal {index})\n"));
                points.push(json!({"point": rats(&p), "inside": false, "violated": index}));
            }
            Err(e) => return Err(e),
        }
    }
    let json = json!({
        "command": "check cone",
        "unimodular": true,
        "homogeneous": cone.is_homogeneous(),
        "split": split_json(&split),
        "points": points,
    });
    Ok(Report::ok(true, text, json))
}

fn check_good_cone(doc: &InputDocument, style: Style) -> Result<Report, Error> {
    let Payload::GoodCone(g) = &doc.payload else {
        return Ok(wrong_payload("check good-cone", "good_cone", doc));
    };
    let c = g.build()?;
    let r = cone::is_good_cone(&c);
    let mut text = if r.good {
        format!(
            "{}: {} faces audited\n",
            style.verdict(true, "good"),
            r.faces.len()
        )
    } else {
        format!(
            "{}: {} of {} faces fail\n",
            style.verdict(false, "not good"),
            r.failing.len(),
            r.faces.len()
        )
    };
    for f in r.faces.iter().filter(|f| !f.unimodular) {
        text.push_str(&format!(
            "normals {:?}: invariant factors {}\n",
            f.subset,
            ints(&f.invariant_factors).join(", ")
        ));
    }
    if !r.normal_count_matches_dim {
        text.push_str("note: the number of normals differs from the dimension\n");
    }
    let faces: Vec<Value> = r
        .faces
        .iter()
        .map(|f| {
            json!({
                "normals": f.subset,
                "vanishing": f.vanishing,
                "unimodular": f.unimodular,
                "invariant_factors": ints(&f.invariant_factors),
            })
        })
        .collect();
    let json = json!({
        "command": "check good-cone",
        "good": r.good,
        "faces": faces,
        "failing": r.failing,
        "normal_count_matches_dim": r.normal_count_matches_dim,
    });
    Ok(Report::ok(r.good, text, json))
}

fn check_polytope(doc: &InputDocument, style: Style) -> Result<Report, Error> {
    let Payload::Polytope(pd) = &doc.payload else {
        return Ok(wrong_payload("check polytope", "polytope", doc));
    };
    let p = pd.build()?;
    let simplicity = p.simplicity_report();
    let delzant = p.delzant_report();
    let mut classes = Vec::new();
    for v in p.vertices() {
        classes.push(p.classify_vertex(v)?);
    }
    let rejected = classes.iter().any(|c| c.class == VertexClass::Reject);
    let verdict = if delzant.delzant {
        "delzant"
    } else if simplicity.simple_except_at_vertices && !rejected {
        "stratified-candidate"
    } else {
        "rejected"
    };
    let holds = verdict != "rejected";
    let yes = |b: bool| if b { "yes" } else { "no" };
    let f_vector = simplicity.lattice.f_vector();
    let mut text = format!(
        "vertices: {}, facets: {}, f-vector: {:?}\nsimple: {}\nsimple except at vertices: {}\nDelzant: {}\n",
        p.vertices().len(),
        p.facets().len(),
        f_vector,
        yes(simplicity.simple_everywhere),
        yes(simplicity.simple_except_at_vertices),
        yes(delzant.delzant),
    );
    let mut failing = Vec::new();
    for f in &delzant.failing_vertices {
        let coords = rats(&p.vertices()[f.vertex]);
        let reason = match &f.reason {
            VertexFailureReason::NotSimple { active_facets } => {
                format!("{active_facets} facets meet")
            }
            VertexFailureReason::NotUnimodular { factor } => format!("invariant factor {factor}"),
        };
        text.push_str(&format!(
            "failing vertex {}: {reason}\n",
            tuple_text(&coords)
        ));
        failing.push(json!({"vertex": coords, "reason": reason}));
    }
    let mut vertices = Vec::new();
    for (v, c) in p.vertices().iter().zip(&classes) {
        let failing_faces = c
            .local_cone
            .as_ref()
            .map(|r| r.failing.clone())
            .unwrap_or_default();
        text.push_str(&format!(
            "vertex {}: {}\n",
            tuple_text(&rats(v)),
            c.class.as_str()
        ));
        vertices.push(json!({
            "vertex": rats(v),
            "class": c.class.as_str(),
            "active_facets": c.active_facets,
            "failing_faces": failing_faces,
        }));
    }
    let mut queries = Vec::new();
    for q in pd.query_vertices() {
        let c = p.classify_vertex(&q)?;
        queries.push(json!({"vertex": rats(&q), "class": c.class.as_str()}));
    }
    text.push_str(&format!("verdict: {}\n", style.verdict(holds, verdict)));
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .map(|f| json!({"normal": ints(&f.normal), "offset": format_rational(&f.offset)}))
        .collect();
    let json = json!({
        "command": "check polytope",
        "dim": p.dim(),
        "verdict": verdict,
        "delzant": delzant.delzant,
        "simple": simplicity.simple_everywhere,
        "simple_except_at_vertices": simplicity.simple_except_at_vertices,
        "f_vector": f_vector,
        "facets": facets,
        "vertices": vertices,
        "failing_vertices": failing,
        "queries": queries,
    });
    Ok(Report::ok(holds, text, json))
}

fn complex_doc<'a>(doc: &'a InputDocument, command: &str) -> Result<&'a ComplexDoc, Report> {
    match &doc.payload {
        Payload::Complex(c) | Payload::Pair(c) => Ok(c),
        _ => Err(wrong_payload(command, "complex or pair", doc)),
    }
}

fn group_json(g: &AbelianGroup) -> Value {
    serde_json::to_value(g).expect("groups serialize")
}

fn cohomology(doc: &InputDocument, degree: usize, coeff: Coefficients) -> Result<Report, Error> {
    let c = match complex_doc(doc, "cohomology") {
        Ok(c) => c,
        Err(r) => return Ok(r),
    };
    let k = c.build()?;
    let (label, group) = match coeff {
        Coefficients::Integers => ("Z".to_string(), topology::cohomology_integer(&k, degree)),
        Coefficients::Rationals => (
            "Q".to_string(),
            AbelianGroup::free(topology::cohomology_rational(&k, degree)),
        ),
        Coefficients::Lattice(n) => (
            format!("Z^{n}"),
            topology::cohomology_lattice(&k, degree, n),
        ),
    };
    let rendered = match coeff {
        Coefficients::Rationals => match group.free_rank {
            0 => "0".to_string(),
            1 => "Q".to_string(),
            r => format!("Q^{r}"),
        },
        _ => group.to_string(),
    };
    let text = format!("H^{degree}(K; {label}) = {rendered}\n");
    let json = json!({
        "command": "cohomology",
        "degree": degree,
        "coefficients": label,
        "group": group_json(&group),
        "rendered": rendered,
    });
    Ok(Report::ok(true, text, json))
}

fn space_name(s: LesSpace) -> &'static str {
    match s {
        LesSpace::Relative => "relative",
        LesSpace::Ambient => "ambient",
        LesSpace::Sub => "sub",
    }
}

fn relative(doc: &InputDocument, degree: usize, style: Style) -> Result<Report, Error> {
    let c = match complex_doc(doc, "relative") {
        Ok(c) => c,
        Err(r) => return Ok(r),
    };
    let pair = c.build_pair()?;
    let group = topology::relative_cohomology_integer(&pair, degree);
    let dim = topology::relative_cohomology_rational(&pair, degree);
    let max_degree = degree.max(3);
    let les = topology::long_exact_sequence(&pair, max_degree);
    let good = topology::good_form_subspace_dim(&pair)?;
    let text = format!(
        "H^{degree}(K, L; Z) = {group}\nH^{degree}(K, L; Q) has dimension {dim}\nlong exact sequence through degree {max_degree}: {}\nclasses in H^2(K; Q) vanishing on L: dimension {}\n",
        style.verdict(les.exact, if les.exact { "exact" } else { "NOT exact" }),
        good.dim,
    );
    let nodes: Vec<Value> = les
        .nodes
        .iter()
        .map(|n| {
            json!({
                "space": space_name(n.space),
                "degree": n.degree,
                "dim": n.dim,
                "rank_in": n.rank_in,
                "rank_out": n.rank_out,
                "exact": n.exact,
            })
        })
        .collect();
    let json = json!({
        "command": "relative",
        "degree": degree,
        "integer": group_json(&group),
        "rendered": group.to_string(),
        "rational_dim": dim,
        "les_exact": les.exact,
        "les": nodes,
        "good_form_dim": good.dim,
    });
    Ok(Report::ok(les.exact, text, json))
}

fn classification(doc: &InputDocument) -> Result<Report, Error> {
    let Payload::Classification(c) = &doc.payload else {
        return Ok(wrong_payload("classify", "classification", doc));
    };
    let spec = c.build()?;
    let result = classify(&spec)?;
    let mut text = format!("{}\ntheorem: {}\n", result.render_text(), result.theorem);
    if let Some(d) = &c.description {
        text.push_str(&format!("input: {d}\n"));
    }
    for h in &result.unchecked_hypotheses {
        text.push_str(&format!("unchecked: {h}\n"));
    }
    for n in &result.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    let mut json = serde_json::to_value(&result).expect("results serialize");
    json["summary"] = json!(result.summary());
    Ok(Report::ok(true, text, json))
}
