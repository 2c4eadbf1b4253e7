//! Python bindings. Integers cross as Python `int`, rationals as `fractions.Fraction`
//! (strings `"p/q"` and ints are accepted on input).

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use toric_core::cone::{self, SimpleCone, UnimodularCone};
use toric_core::document::{self, Payload};
use toric_core::lattice::{self, IntMatrix};
use toric_core::linalg::{self, Rational};
use toric_core::polytope::RationalPolytope;
use toric_core::topology::{self, PairInclusion, SimplicialComplex};
use toric_core::{ClassificationResult, Error};

type Rows = Vec<Vec<BigInt>>;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::VertexNotFound => PyIndexError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn rational_in(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(text) = obj.extract::<String>() {
        return linalg::parse_rational(&text).map_err(to_py);
    }
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyValueError::new_err(
            "floats are not accepted; use int, str or Fraction",
        ));
    }
    let num: BigInt = obj.getattr("numerator")?.extract()?;
    let den: BigInt = obj.getattr("denominator")?.extract()?;
    if den == BigInt::from(0) {
        return Err(PyValueError::new_err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn rationals_in(values: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    values.iter().map(rational_in).collect()
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.numer().clone(), q.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|q| fraction(py, q)).collect()
}

fn matrix_in(rows: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(cols, &rows).map_err(to_py)
}

/// Returns `(D, U, V)` with `U · A · V = D`.
#[pyfunction]
fn smith_normal_form(matrix: Vec<Vec<BigInt>>) -> PyResult<(Rows, Rows, Rows)> {
    let s = lattice::smith_normal_form(&matrix_in(matrix)?);
    Ok((s.d.to_rows(), s.u.to_rows(), s.v.to_rows()))
}

/// Returns `(H, U)` with `U · A = H`.
#[pyfunction]
fn hermite_normal_form(matrix: Vec<Vec<BigInt>>) -> PyResult<(Rows, Rows)> {
    let (h, u) = lattice::hermite_normal_form(&matrix_in(matrix)?);
    Ok((h.to_rows(), u.to_rows()))
}

#[pyfunction]
fn invariant_factors(matrix: Vec<Vec<BigInt>>) -> PyResult<Vec<BigInt>> {
    Ok(lattice::invariant_factors(&matrix_in(matrix)?))
}

#[pyfunction]
fn is_unimodular_tuple(vectors: Vec<Vec<BigInt>>) -> PyResult<bool> {
    lattice::is_unimodular_tuple(&vectors).map_err(to_py)
}

#[pyfunction]
fn saturation_basis(vectors: Vec<Vec<BigInt>>) -> PyResult<Vec<Vec<BigInt>>> {
    lattice::saturation_basis(&vectors).map_err(to_py)
}

/// Failing normal subsets of a cone `{x : ⟨x, v_i⟩ ≥ 0}`; empty when the cone is good.
#[pyfunction]
fn good_cone_failures(dim: usize, normals: Vec<Vec<BigInt>>) -> PyResult<Vec<Vec<usize>>> {
    let c = SimpleCone::new(dim, normals).map_err(to_py)?;
    Ok(cone::is_good_cone(&c).failing)
}

#[pyfunction]
fn is_good_cone(dim: usize, normals: Vec<Vec<BigInt>>) -> PyResult<bool> {
    Ok(good_cone_failures(dim, normals)?.is_empty())
}

/// Square roots `s_i = √r_i` of the cut section, returned as the radicands `r_i`.
#[pyfunction]
fn cut_section_squares<'py>(
    py: Python<'py>,
    weights: Vec<Vec<BigInt>>,
    eta: Vec<Bound<'py, PyAny>>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let section = cone::cut_section(&weights, &rationals_in(&eta)?).map_err(to_py)?;
    section.iter().map(|s| fraction(py, s.radicand())).collect()
}

/// `μ(z) = −Σ |z_i|² w_i` for `z` given by the squared moduli `|z_i|²`.
#[pyfunction]
fn moment_from_squares<'py>(
    py: Python<'py>,
    weights: Vec<Vec<BigInt>>,
    squares: Vec<Bound<'py, PyAny>>,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let points = rationals_in(&squares)?
        .into_iter()
        .map(|r| {
            cone::SqrtRational::new(r)
                .ok_or_else(|| PyValueError::new_err("negative squared modulus"))
        })
        .collect::<PyResult<Vec<_>>>()?;
    let eta = cone::moment_of_section(&weights, &points).map_err(to_py)?;
    fractions(py, &eta)
}

#[pyclass(name = "UnimodularCone", frozen)]
struct PyUnimodularCone {
    inner: UnimodularCone,
}

#[pymethods]
impl PyUnimodularCone {
    #[new]
    fn new(apex: Vec<Bound<'_, PyAny>>, normals: Vec<Vec<BigInt>>) -> PyResult<Self> {
        let inner = UnimodularCone::new(rationals_in(&apex)?, normals).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn contains(&self, point: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
        self.inner.contains(&rationals_in(&point)?).map_err(to_py)
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// `(active normal indices, subtorus lattice basis)` at a point of the cone.
    fn face_data(&self, point: Vec<Bound<'_, PyAny>>) -> PyResult<(Vec<usize>, Vec<Vec<BigInt>>)> {
        let f = self
            .inner
            .face_data(&rationals_in(&point)?)
            .map_err(to_py)?;
        Ok((f.active_indices, f.subtorus_basis))
    }

    fn annihilator_basis<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        self.inner
            .split()
            .annihilator_basis
            .iter()
            .map(|v| fractions(py, v))
            .collect()
    }
}

#[pyclass(name = "Polytope", frozen)]
struct PyPolytope {
    inner: RationalPolytope,
}

#[pymethods]
impl PyPolytope {
    #[staticmethod]
    fn from_vertices(dim: usize, vertices: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let points = vertices
            .iter()
            .map(|v| rationals_in(v))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = RationalPolytope::from_vertices(dim, points).map_err(to_py)?;
        Ok(Self { inner })
    }

    fn vertices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        self.inner
            .vertices()
            .iter()
            .map(|v| fractions(py, v))
            .collect()
    }

    /// `(normal, offset)` pairs for `⟨x, normal⟩ ≥ offset`.
    fn facets<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<BigInt>, Bound<'py, PyAny>)>> {
        self.inner
            .facets()
            .iter()
            .map(|f| Ok((f.normal.clone(), fraction(py, &f.offset)?)))
            .collect()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.inner.face_lattice().f_vector()
    }

    fn is_delzant(&self) -> bool {
        self.inner.is_delzant()
    }

    fn is_simple_except_at_vertices(&self) -> bool {
        self.inner.simplicity_report().simple_except_at_vertices
    }

    /// `"smooth"`, `"singular-candidate"` or `"reject"`.
    fn classify_vertex(&self, vertex: Vec<Bound<'_, PyAny>>) -> PyResult<&'static str> {
        let v = self
            .inner
            .classify_vertex(&rationals_in(&vertex)?)
            .map_err(to_py)?;
        Ok(v.class.as_str())
    }
}

#[pyclass(name = "SimplicialComplex", frozen)]
struct PyComplex {
    inner: SimplicialComplex,
}

fn coefficient_group(k: &SimplicialComplex, degree: usize, coeff: &str) -> PyResult<String> {
    match coeff {
        "Z" => Ok(topology::cohomology_integer(k, degree).to_string()),
        "Q" => Ok(match topology::cohomology_rational(k, degree) {
            0 => "0".into(),
            1 => "Q".into(),
            r => format!("Q^{r}"),
        }),
        other => {
            let n = other
                .strip_prefix("lattice:")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| PyValueError::new_err("coefficients must be Z, Q or lattice:n"))?;
            Ok(topology::cohomology_lattice(k, degree, n).to_string())
        }
    }
}

#[pymethods]
impl PyComplex {
    /// Closes the given maximal simplices under faces.
    #[new]
    fn new(vertices: usize, maximal: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = SimplicialComplex::from_maximal(vertices, &maximal).map_err(to_py)?;
        Ok(Self { inner })
    }

    fn counts(&self) -> Vec<usize> {
        (0..=self.inner.top_dim())
            .map(|d| self.inner.count(d))
            .collect()
    }

    #[pyo3(signature = (degree, coeff = "Z"))]
    fn cohomology(&self, degree: usize, coeff: &str) -> PyResult<String> {
        coefficient_group(&self.inner, degree, coeff)
    }

    fn betti(&self, degree: usize) -> usize {
        topology::cohomology_rational(&self.inner, degree)
    }

    /// `(H^degree(K, L; Z) rendered, dim over Q, exact sequence holds)` for the subcomplex
    /// generated by `simplices`.
    fn relative(
        &self,
        simplices: Vec<Vec<usize>>,
        degree: usize,
    ) -> PyResult<(String, usize, bool)> {
        let pair =
            PairInclusion::from_ambient_simplices(self.inner.clone(), &simplices).map_err(to_py)?;
        Ok((
            topology::relative_cohomology_integer(&pair, degree).to_string(),
            topology::relative_cohomology_rational(&pair, degree),
            topology::long_exact_sequence(&pair, degree.max(3)).exact,
        ))
    }

    /// Dimension of the degree-2 classes vanishing on the subcomplex.
    fn good_form_dim(&self, simplices: Vec<Vec<usize>>) -> PyResult<usize> {
        let pair =
            PairInclusion::from_ambient_simplices(self.inner.clone(), &simplices).map_err(to_py)?;
        Ok(topology::good_form_subspace_dim(&pair).map_err(to_py)?.dim)
    }
}

#[pyclass(name = "Classification", frozen, get_all)]
struct PyClassification {
    theorem: String,
    free_rank: usize,
    torsion: Vec<BigInt>,
    real_dim: usize,
    unique: bool,
    summary: String,
    unchecked_hypotheses: Vec<String>,
    notes: Vec<String>,
}

impl From<ClassificationResult> for PyClassification {
    fn from(r: ClassificationResult) -> Self {
        Self {
            theorem: r.theorem.as_str().to_string(),
            free_rank: r.lattice.free_rank,
            torsion: r.lattice.torsion.clone(),
            real_dim: r.real_dim,
            unique: r.unique,
            summary: r.summary(),
            unchecked_hypotheses: r.unchecked_hypotheses,
            notes: r.notes,
        }
    }
}

#[pymethods]
impl PyClassification {
    fn __repr__(&self) -> String {
        format!(
            "Classification({:?}, theorem={:?})",
            self.summary, self.theorem
        )
    }

    fn as_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        d.set_item("theorem", &self.theorem)?;
        d.set_item("free_rank", self.free_rank)?;
        d.set_item("torsion", self.torsion.clone())?;
        d.set_item("real_dim", self.real_dim)?;
        d.set_item("unique", self.unique)?;
        d.set_item("summary", &self.summary)?;
        Ok(d)
    }
}

/// Classifies a JSON document carrying a `classification` payload.
#[pyfunction]
fn classify_document(text: &str) -> PyResult<PyClassification> {
    let doc = document::parse_document(text).map_err(to_py)?;
    let Payload::Classification(c) = doc.payload else {
        return Err(PyValueError::new_err(format!(
            "expected a classification document, got {}",
            doc.payload.kind()
        )));
    };
    let spec = c.build().map_err(to_py)?;
    Ok(toric_core::classify(&spec).map_err(to_py)?.into())
}

#[pymodule]
fn toric_moment(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(hermite_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_factors, m)?)?;
    m.add_function(wrap_pyfunction!(is_unimodular_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(saturation_basis, m)?)?;
    m.add_function(wrap_pyfunction!(is_good_cone, m)?)?;
    m.add_function(wrap_pyfunction!(good_cone_failures, m)?)?;
    m.add_function(wrap_pyfunction!(cut_section_squares, m)?)?;
    m.add_function(wrap_pyfunction!(moment_from_squares, m)?)?;
    m.add_function(wrap_pyfunction!(classify_document, m)?)?;
    m.add_class::<PyUnimodularCone>()?;
    m.add_class::<PyPolytope>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyClassification>()?;
    Ok(())
}
