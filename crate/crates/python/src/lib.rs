use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;

use dnlat::checks;
use dnlat::cohomology;
use dnlat::{DnLattice, IntMatrix, Integer, LatticeDoc, Subgroup};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn py_int<'py>(py: Python<'py>, v: &Integer) -> PyResult<Bound<'py, PyAny>> {
    match v.to_i64() {
        Some(x) => x.into_bound_py_any(py),
        None => py.import("builtins")?.getattr("int")?.call1((v.to_string(),)),
    }
}

fn py_matrix<'py>(py: Python<'py>, m: &IntMatrix) -> PyResult<Bound<'py, PyAny>> {
    let rows = (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| py_int(py, v)).collect::<PyResult<Vec<_>>>())
        .collect::<PyResult<Vec<_>>>()?;
    rows.into_bound_py_any(py)
}

fn to_matrix(rows: Vec<Vec<i64>>) -> PyResult<IntMatrix> {
    let (r, c) = (rows.len(), rows.first().map_or(0, Vec::len));
    if rows.iter().any(|row| row.len() != c) {
        return Err(PyValueError::new_err("rows have different lengths"));
    }
    let data = rows.into_iter().flatten().map(Integer::from).collect();
    IntMatrix::from_vec(r, c, data).map_err(err)
}

fn from_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A lattice over the dihedral group of order `2n`.
#[pyclass(name = "Lattice", module = "pydnlat", frozen)]
struct PyLattice {
    inner: DnLattice,
}

#[pymethods]
impl PyLattice {
    /// Build a lattice by constructor name (`m_plus`, `Rab`, `IG2`, `dual:<name>`, ...).
    #[staticmethod]
    fn by_name(name: &str, n: u32) -> PyResult<Self> {
        Ok(PyLattice {
            inner: dnlat::lattice_by_name(name, n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc: LatticeDoc = serde_json::from_str(text).map_err(err)?;
        Ok(PyLattice {
            inner: DnLattice::from_doc(&doc).map_err(err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_doc()).map_err(err)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    #[getter]
    fn sigma<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        py_matrix(py, &self.inner.sigma)
    }

    #[getter]
    fn tau<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        py_matrix(py, &self.inner.tau)
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn is_faithful(&self) -> bool {
        self.inner.is_faithful()
    }

    fn dual(&self) -> Self {
        PyLattice {
            inner: self.inner.dual(),
        }
    }

    fn dsum(&self, other: &PyLattice) -> PyResult<Self> {
        Ok(PyLattice {
            inner: self.inner.dsum(&other.inner).map_err(err)?,
        })
    }

    fn tensor(&self, other: &PyLattice) -> PyResult<Self> {
        Ok(PyLattice {
            inner: self.inner.tensor(&other.inner).map_err(err)?,
        })
    }

    /// `(Ĥ⁻¹, Ĥ⁰, H¹)` at one subgroup, rendered like `"Z/2 + Z/2"`.
    fn cohomology(&self, subgroup: &str) -> PyResult<(String, String, String)> {
        let s = Subgroup::parse(self.inner.n, subgroup).map_err(err)?;
        let t = cohomology::triple(&self.inner, &s).map_err(err)?;
        Ok((t.h_minus1.to_string(), t.h0_hat.to_string(), t.h1.to_string()))
    }

    /// One dict per subgroup.
    fn profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let p = cohomology::profile(&self.inner).map_err(err)?;
        from_json(py, &p.to_report())
    }

    fn is_flabby(&self) -> PyResult<bool> {
        Ok(cohomology::is_flabby(&self.inner).map_err(err)?.holds())
    }

    fn is_coflabby(&self) -> PyResult<bool> {
        Ok(cohomology::is_coflabby(&self.inner).map_err(err)?.holds())
    }

    fn __repr__(&self) -> String {
        format!("Lattice({}, n={}, rank={})", self.inner.label, self.inner.n, self.inner.rank)
    }
}

#[pyfunction]
fn det<'py>(py: Python<'py>, rows: Vec<Vec<i64>>) -> PyResult<Bound<'py, PyAny>> {
    py_int(py, &dnlat::det(&to_matrix(rows)?).map_err(err)?)
}

/// Smith form `(D, U, V)` with `U A V = D`.
#[pyfunction]
fn snf<'py>(py: Python<'py>, rows: Vec<Vec<i64>>) -> PyResult<Bound<'py, PyAny>> {
    let s = dnlat::snf(&to_matrix(rows)?);
    (py_matrix(py, &s.d)?, py_matrix(py, &s.u)?, py_matrix(py, &s.v)?).into_bound_py_any(py)
}

/// Kernel basis as columns.
#[pyfunction]
fn kernel_basis<'py>(py: Python<'py>, rows: Vec<Vec<i64>>) -> PyResult<Bound<'py, PyAny>> {
    py_matrix(py, &dnlat::kernel_basis(&to_matrix(rows)?))
}

#[pyfunction]
fn lattice_names() -> Vec<&'static str> {
    dnlat::LATTICE_NAMES.to_vec()
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    checks::check_ids()
}

#[pyfunction]
fn run_check<'py>(py: Python<'py>, id: &str, n: u32) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &checks::run_check(id, n).map_err(err)?)
}

#[pyfunction]
fn verdict<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &checks::verdict(n).map_err(err)?)
}

#[pymodule]
fn pydnlat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLattice>()?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(snf, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_names, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(verdict, m)?)?;
    Ok(())
}
