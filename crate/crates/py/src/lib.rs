//! Python bindings: partitions, Fock-model polynomials, cocycle values, Arthur
//! parameters and the identity suites.

use fockcalc::arthur::{self, AjCharacters, ArchArthurParameter, PairMultiplicity, PredicateQuery};
use fockcalc::cocycles::{evaluate_cocycle, km_value_on_vz, FundamentalWeightVector};
use fockcalc::partitions::{self, Partition};
use fockcalc::polyfock::{self, harmonic_space_dim, Ambient, SparsePoly, DEFAULT_NULLSPACE_CAP};
use fockcalc::vz::{dim_u_cap_p, LeviDatum};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    let mut parts = parts;
    parts.retain(|&x| x > 0);
    Partition::new(parts).map_err(err)
}

/// An integer partition; trailing zeros are dropped.
#[pyclass(name = "Partition", eq, frozen, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        partition(parts).map(PyPartition)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

#[pyfunction]
fn lr_coefficient(lam: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    Ok(partitions::lr_coefficient(&partition(lam)?, &partition(mu)?, &partition(nu)?))
}

#[pyfunction]
fn littlewood_so_multiplicity(mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u64> {
    Ok(partitions::littlewood_so_multiplicity(&partition(mu)?, &partition(nu)?))
}

#[pyfunction]
fn schur_dim(lam: Vec<usize>, n: usize) -> PyResult<BigUint> {
    Ok(partitions::schur_dim(&partition(lam)?, n))
}

#[pyfunction]
fn so_harmonic_dim(lam: Vec<usize>, m: usize) -> PyResult<BigUint> {
    partitions::so_harmonic_dim(&partition(lam)?, m).map_err(err)
}

/// `(mu, mu*)` pairs with `|mu| = r` inside the `p × q` box.
#[pyfunction]
fn cauchy_decompose(p: usize, q: usize, r: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    partitions::cauchy_decompose(p, q, r)
        .into_iter()
        .map(|(a, b)| (a.parts().to_vec(), b.parts().to_vec()))
        .collect()
}

/// A polynomial in the Fock-model variables `z[α,j]` with Gaussian-rational coefficients.
#[pyclass(name = "Poly", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly(SparsePoly);

#[pymethods]
impl PyPoly {
    /// Parses the text form, e.g. `"(1)*z[1,1]^2 + (-i)*z[2,1]"`.
    #[staticmethod]
    fn parse(p: usize, q: usize, n: usize, text: &str) -> PyResult<Self> {
        SparsePoly::parse(Ambient::new(p, q, n), text).map(PyPoly).map_err(err)
    }

    #[getter]
    fn signature(&self) -> (usize, usize, usize) {
        let a = self.0.ambient();
        (a.p, a.q, a.n)
    }

    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_pluriharmonic(&self) -> PyResult<bool> {
        self.0.is_pluriharmonic().map_err(err)
    }

    fn laplacian(&self, i: usize, j: usize) -> PyResult<Self> {
        self.0.laplacian(i, j).map(PyPoly).map_err(err)
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_add(&o.0).map(PyPoly).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_sub(&o.0).map(PyPoly).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.checked_mul(&o.0).map(PyPoly).map_err(err)
    }

    fn __pow__(&self, e: u32, _modulo: Option<u32>) -> Self {
        PyPoly(self.0.pow(e))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

/// `Δ_k`, the leading `k × k` minor of the `w''` coordinate matrix.
#[pyfunction]
fn minor_delta(k: usize, p: usize, q: usize, n: usize) -> PyResult<PyPoly> {
    polyfock::minor_delta(k, Ambient::new(p, q, n)).map(PyPoly).map_err(err)
}

/// Value of the degree-`nq` cocycle on the Vogan–Zuckerman vector.
#[pyfunction]
fn km_value(p: usize, q: usize, n: usize) -> PyResult<PyPoly> {
    km_value_on_vz(Ambient::new(p, q, n)).map(PyPoly).map_err(err)
}

/// `(value, closed_form, matches)` for the cocycle with fundamental weights `a`.
#[pyfunction]
fn cocycle_value(a: Vec<u32>, p: usize, q: usize, n: usize) -> PyResult<(PyPoly, PyPoly, bool)> {
    let v = evaluate_cocycle(&FundamentalWeightVector::new(a), Ambient::new(p, q, n)).map_err(err)?;
    let matches = v.matches_closed_form();
    let value = v.assignment.first().map(|(_, f)| f.clone()).ok_or_else(|| err("empty cocycle"))?;
    Ok((PyPoly(value), PyPoly(v.closed_form), matches))
}

#[pyfunction]
#[pyo3(signature = (p, n, ell, cap = DEFAULT_NULLSPACE_CAP))]
fn harmonic_dim(p: usize, n: usize, ell: u32, cap: usize) -> PyResult<usize> {
    harmonic_space_dim(Ambient::new(p, 0, n), ell, cap).map_err(err)
}

/// `R = dim(u ∩ p)` for `U(1)ⁿ × SO(p − 2n, q)`.
#[pyfunction]
fn root_count(n: usize, p: usize, q: usize) -> PyResult<usize> {
    let levi = LeviDatum::standard(n, p, q).map_err(err)?;
    dim_u_cap_p(&levi, p, q).map_err(err)
}

/// An archimedean Arthur parameter, built from its JSON form.
#[pyclass(name = "ArthurParameter", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyArthurParameter(ArchArthurParameter);

#[pymethods]
impl PyArthurParameter {
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        let psi: ArchArthurParameter = serde_json::from_str(json).map_err(err)?;
        psi.validate().map_err(err)?;
        Ok(PyArthurParameter(psi))
    }

    /// Adams–Johnson parameter of a Levi given as `{"u_blocks": [[a, b], …], "so_block": [p0, q0]}`.
    #[staticmethod]
    fn from_levi(json: &str) -> PyResult<Self> {
        let levi: LeviDatum = serde_json::from_str(json).map_err(err)?;
        arthur::aj_parameter(&levi, &AjCharacters::default()).map(PyArthurParameter).map_err(err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }

    /// Canonical entries as exact strings.
    fn infinitesimal_character(&self) -> PyResult<Vec<String>> {
        let ic = arthur::infinitesimal_character(&self.0).map_err(err)?;
        Ok(ic.entries.iter().map(|z| z.to_string()).collect())
    }

    fn is_regular(&self) -> PyResult<bool> {
        Ok(arthur::is_regular(&arthur::infinitesimal_character(&self.0).map_err(err)?))
    }

    #[pyo3(signature = (pair_multiplicity = 2))]
    fn exponents(&self, pair_multiplicity: u8) -> PyResult<Vec<i64>> {
        let mult = match pair_multiplicity {
            1 => PairMultiplicity::One,
            2 => PairMultiplicity::Two,
            k => return Err(err(format!("pair multiplicity must be 1 or 2, got {k}"))),
        };
        arthur::exponents(&self.0, mult).map_err(err)
    }

    fn highly_non_tempered(&self) -> bool {
        arthur::highly_non_tempered(&self.0)
    }

    /// Hypothesis flags as a JSON object string.
    #[pyo3(signature = (n = None, p = None, q = None, r = None))]
    fn predicates(&self, n: Option<usize>, p: Option<usize>, q: Option<usize>, r: Option<usize>) -> PyResult<String> {
        let query = PredicateQuery { psi: Some(self.0.clone()), n, p, q, r };
        let report = arthur::predicates(&query).map_err(err)?;
        serde_json::to_string(&report).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("ArthurParameter({})", self.0)
    }
}

/// `(passed, cases)` for a named identity suite.
#[pyfunction]
#[pyo3(signature = (suite, cap = DEFAULT_NULLSPACE_CAP))]
fn verify(suite: &str, cap: usize) -> PyResult<(bool, usize)> {
    let r = fockcalc::verify::run_suite(suite, cap).ok_or_else(|| err(format!("unknown suite {suite}")))?;
    Ok((r.passed, r.cases))
}

#[pyfunction]
fn suites() -> Vec<&'static str> {
    fockcalc::verify::SUITES.to_vec()
}

/// Runs the command-line front end; returns `(exit_code, output)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let argv = std::iter::once("fockcalc".to_string()).chain(args);
    fockcalc::cli::run(argv)
}

#[pymodule]
#[pyo3(name = "fockcalc")]
fn fockcalc_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyArthurParameter>()?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(littlewood_so_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(schur_dim, m)?)?;
    m.add_function(wrap_pyfunction!(so_harmonic_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(minor_delta, m)?)?;
    m.add_function(wrap_pyfunction!(km_value, m)?)?;
    m.add_function(wrap_pyfunction!(cocycle_value, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_dim, m)?)?;
    m.add_function(wrap_pyfunction!(root_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
