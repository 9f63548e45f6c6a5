//! Python bindings for the minmult toolkit: complexes, monomial ideals,
//! invariant reports (as JSON-shaped dicts), family generation and the
//! pure-complex census.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use minmult::complex::SimplicialComplex;
use minmult::families::{FamilySpec, Generated};
use minmult::invariants::h_max;
use minmult::io::{full_report, CensusDocument, ComplexFile, IdealFile, ParsedInput, ReportDocument};
use minmult::linalg::FieldSpec;
use minmult::monomial::MonomialIdeal;
use minmult::search::{census, CensusFilters};

fn to_py_err(e: minmult::Error) -> PyErr {
    match e {
        minmult::Error::EquivalenceViolation(_) | minmult::Error::InternalCrossCheck(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_pydict(py: Python<'_>, json: &str) -> PyResult<PyObject> {
    let jsonmod = py.import_bound("json")?;
    let obj = jsonmod.call_method1("loads", (json,))?;
    Ok(obj.unbind())
}

/// A finite simplicial complex with 1-based facet labels on the Python
/// side.
#[pyclass(name = "SimplicialComplex")]
#[derive(Clone)]
struct PySimplicialComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PySimplicialComplex {
    #[new]
    fn new(vertices: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let file = ComplexFile { vertices, facets };
        Ok(PySimplicialComplex {
            inner: file.to_complex().map_err(to_py_err)?,
        })
    }

    #[getter]
    fn vertices(&self) -> usize {
        self.inner.vertices()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        ComplexFile::from_complex(&self.inner).facets
    }

    fn dim(&self) -> i64 {
        self.inner.dim()
    }

    fn is_pure(&self) -> bool {
        self.inner.is_pure()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.inner.f_vector().entries().to_vec()
    }

    fn h_vector(&self) -> Vec<i64> {
        minmult::complex::h_vector(&self.inner.f_vector())
            .entries()
            .iter()
            .map(|&x| x as i64)
            .collect()
    }

    fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        self.inner
            .minimal_nonfaces()
            .into_iter()
            .map(|m| {
                minmult::complex::mask_to_vertices(m)
                    .into_iter()
                    .map(|v| v + 1)
                    .collect()
            })
            .collect()
    }

    fn alexander_dual(&self) -> PyResult<PySimplicialComplex> {
        Ok(PySimplicialComplex {
            inner: self.inner.alexander_dual().map_err(to_py_err)?,
        })
    }

    fn link(&self, face: Vec<usize>) -> PyResult<PySimplicialComplex> {
        let mask = face
            .iter()
            .map(|&v| {
                if v == 0 || v > self.inner.vertices() {
                    Err(PyValueError::new_err(format!("vertex {v} out of range")))
                } else {
                    Ok(1u64 << (v - 1))
                }
            })
            .sum::<PyResult<u64>>()?;
        let (link, _) = self.inner.link(mask).map_err(to_py_err)?;
        Ok(PySimplicialComplex { inner: link })
    }

    fn canonical_form(&self) -> PyResult<String> {
        Ok(self.inner.canonical_form().map_err(to_py_err)?.encoding())
    }

    /// Full invariant report with all checks, as a dict.
    #[pyo3(signature = (characteristic = 0))]
    fn analyze(&self, py: Python<'_>, characteristic: u64) -> PyResult<PyObject> {
        let field = FieldSpec::from_char(characteristic).map_err(to_py_err)?;
        let input = ParsedInput::Complex(self.inner.clone());
        let (report, checks, prov) = full_report(&input, field).map_err(to_py_err)?;
        let doc = ReportDocument::from_report(&report, &checks, prov);
        json_to_pydict(py, &serde_json::to_string(&doc).unwrap())
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(vertices={}, facets={:?})",
            self.inner.vertices(),
            self.facets()
        )
    }
}

/// A monomial ideal given by named variables and generators.
#[pyclass(name = "MonomialIdeal")]
#[derive(Clone)]
struct PyMonomialIdeal {
    inner: MonomialIdeal,
    names: Vec<String>,
}

#[pymethods]
impl PyMonomialIdeal {
    /// Builds from variable names and generators; each generator is an
    /// exponent list or a string like "X^2*Y".
    #[new]
    fn new(variables: Vec<String>, generators: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if let Ok(exps) = g.extract::<Vec<u32>>() {
                gens.push(minmult::io::GeneratorRepr::Exponents(exps));
            } else if let Ok(text) = g.extract::<String>() {
                gens.push(minmult::io::GeneratorRepr::Text(text));
            } else {
                return Err(PyValueError::new_err(
                    "generators must be exponent lists or strings",
                ));
            }
        }
        let file = IdealFile {
            variables: variables.clone(),
            generators: gens,
        };
        Ok(PyMonomialIdeal {
            inner: file.to_ideal().map_err(to_py_err)?,
            names: variables,
        })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.names.clone()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner
            .gens()
            .iter()
            .map(|g| minmult::monomial::format_monomial(g, &self.names))
            .collect()
    }

    fn initial_degree(&self) -> Option<u64> {
        self.inner.initial_degree()
    }

    fn is_squarefree(&self) -> bool {
        self.inner.is_squarefree()
    }

    fn saturation(&self) -> PyMonomialIdeal {
        PyMonomialIdeal {
            inner: self.inner.saturation(),
            names: self.names.clone(),
        }
    }

    /// (dimension, multiplicity, numerator coefficients) of the reduced
    /// Hilbert series.
    fn hilbert(&self) -> (usize, String, Vec<String>) {
        let r = minmult::hilbert::hilbert_series(&self.inner).reduced();
        (
            r.dim,
            r.multiplicity.to_string(),
            r.numerator.coeffs().iter().map(|c| c.to_string()).collect(),
        )
    }

    /// Full invariant report with all checks, as a dict. Squarefree
    /// ideals are analyzed through the simplicial dictionary.
    #[pyo3(signature = (characteristic = 0))]
    fn analyze(&self, py: Python<'_>, characteristic: u64) -> PyResult<PyObject> {
        let field = FieldSpec::from_char(characteristic).map_err(to_py_err)?;
        let input = ParsedInput::Ideal(self.inner.clone(), self.names.clone());
        let (report, checks, prov) = full_report(&input, field).map_err(to_py_err)?;
        let doc = ReportDocument::from_report(&report, &checks, prov);
        json_to_pydict(py, &serde_json::to_string(&doc).unwrap())
    }

    fn __repr__(&self) -> String {
        format!(
            "MonomialIdeal(variables={:?}, generators={:?})",
            self.names,
            self.generators()
        )
    }
}

/// Generates a named example family; returns a SimplicialComplex or a
/// MonomialIdeal plus the golden expectations.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn generate_family(
    py: Python<'_>,
    family: &str,
    params: Option<&Bound<'_, PyDict>>,
) -> PyResult<PyObject> {
    let get = |key: &str| -> PyResult<Option<u32>> {
        match params {
            None => Ok(None),
            Some(d) => match d.get_item(key)? {
                Some(v) => Ok(Some(v.extract::<u32>()?)),
                None => Ok(None),
            },
        }
    };
    let need = |key: &str| -> PyResult<u32> {
        get(key)?.ok_or_else(|| PyValueError::new_err(format!("{family} needs {key}=")))
    };
    let spec = match family {
        "disjoint_simplices" => FamilySpec::DisjointSimplices {
            d: need("d")?,
            e: need("e")?,
        },
        "goto_family" => FamilySpec::GotoFamily {
            c: need("c")?,
            d: need("d")?,
            q: need("q")?,
        },
        "f_times_irrelevant" => FamilySpec::FTimesIrrelevant {
            d: need("d")?,
            q: need("q")?,
            f: None,
        },
        "cyclic_dual" => FamilySpec::CyclicDual {
            q: need("q")?,
            d: need("d")?,
        },
        "hanano" => FamilySpec::Hanano,
        "non_buchsbaum" => FamilySpec::NonBuchsbaum {
            d: need("d")?,
            q: need("q")?,
        },
        "exmulti2" => FamilySpec::ExMulti2 {
            item: need("item")? as u8,
            d: need("d")?,
            c: get("c")?.unwrap_or(1),
            verbatim: get("verbatim")?.unwrap_or(0) != 0,
        },
        other => {
            return Err(PyValueError::new_err(format!("unknown family {other:?}")));
        }
    };
    let instance = minmult::families::generate_family(&spec).map_err(to_py_err)?;
    let dict = PyDict::new_bound(py);
    dict.set_item("name", &instance.name)?;
    dict.set_item("provenance", &instance.provenance)?;
    dict.set_item("expected", instance.golden.clone())?;
    match &instance.object {
        Generated::Complex(c) => {
            dict.set_item(
                "object",
                PySimplicialComplex { inner: c.clone() }.into_py(py),
            )?;
            dict.set_item("kind", "complex")?;
        }
        Generated::Ideal(i) => {
            let names: Vec<String> = (1..=i.vars()).map(|k| format!("X{k}")).collect();
            dict.set_item(
                "object",
                PyMonomialIdeal {
                    inner: i.clone(),
                    names,
                }
                .into_py(py),
            )?;
            dict.set_item("kind", "ideal")?;
        }
    }
    Ok(dict.into_py(py))
}

/// Census of pure complexes up to isomorphism; returns the census
/// document as a dict.
#[pyfunction]
#[pyo3(signature = (n, dim, characteristic = 0, require_minimal = false))]
fn run_census(
    py: Python<'_>,
    n: usize,
    dim: usize,
    characteristic: u64,
    require_minimal: bool,
) -> PyResult<PyObject> {
    let field = FieldSpec::from_char(characteristic).map_err(to_py_err)?;
    let rows = census(
        n,
        dim,
        field,
        CensusFilters {
            require_minimal,
            fix_q: None,
        },
    )
    .map_err(to_py_err)?;
    let doc = CensusDocument::from_rows(n, dim, characteristic, &rows);
    json_to_pydict(py, &serde_json::to_string(&doc).unwrap())
}

/// The maximal-cohomology bound h_{c,d,q} as an exact rational string.
#[pyfunction]
fn h_max_bound(c: u64, d: u64, q: u64) -> PyResult<String> {
    Ok(h_max(c, d, q).map_err(to_py_err)?.to_string())
}

/// Boundary complex of the cyclic polytope C(n, f) for even f.
#[pyfunction]
fn cyclic_polytope(n: usize, f: usize) -> PyResult<PySimplicialComplex> {
    Ok(PySimplicialComplex {
        inner: minmult::complex::cyclic_polytope_boundary(n, f).map_err(to_py_err)?,
    })
}

#[pymodule]
fn minmult_py(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySimplicialComplex>()?;
    m.add_class::<PyMonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(generate_family, m)?)?;
    m.add_function(wrap_pyfunction!(run_census, m)?)?;
    m.add_function(wrap_pyfunction!(h_max_bound, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_polytope, m)?)?;
    Ok(())
}
