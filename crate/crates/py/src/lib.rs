//! Python bindings. Ideals are parsed from and printed as text such as
//! `"x1^2, x1*x2"`; structured results come back as plain dicts and lists.

use monoclean::cleanness::{self, CleannessMode};
use monoclean::corpus::{exhaustive_ideals, gen_ideals, CorpusSpec};
use monoclean::decomposition::{associated_primes, irreducible_decomposition, minimal_primes};
use monoclean::verify::{verify, verify_ideals, Theorem};
use monoclean::{
    homology, sequences, stanley, Characteristic, Error, Monomial, MonomialIdeal, RingContext,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(monoclean, ResourceError, PyRuntimeError, "A resource cap was exceeded.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Resource { .. } => ResourceError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Serializes through `json.loads`, so callers get ordinary Python objects.
fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py
        .import("json")?
        .call_method1("loads", (text,))?
        .unbind())
}

fn parse_mode(name: &str) -> PyResult<CleannessMode> {
    CleannessMode::ALL
        .into_iter()
        .find(|m| m.name().eq_ignore_ascii_case(name) || format!("{m:?}").eq_ignore_ascii_case(name))
        .ok_or_else(|| PyValueError::new_err(format!("unknown mode `{name}`; use clean, pretty or almost")))
}

/// Largest `k` with `xk` in the text.
fn infer_vars(text: &str) -> usize {
    let mut best = 0;
    let mut rest = text;
    while let Some(at) = rest.find('x') {
        rest = &rest[at + 1..];
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        if let Ok(k) = digits.parse::<usize>() {
            best = best.max(k);
        }
    }
    best.max(1)
}

/// A monomial ideal of `K[x1..xn]`.
#[pyclass(name = "Ideal", module = "monoclean", frozen)]
struct PyIdeal {
    ring: RingContext,
    ideal: MonomialIdeal,
}

impl PyIdeal {
    fn wrap(&self, ideal: MonomialIdeal) -> PyIdeal {
        PyIdeal {
            ring: self.ring.clone(),
            ideal,
        }
    }

    fn monomials(&self, text: &str) -> PyResult<Vec<Monomial>> {
        self.ring.parse_monomial_list(text).map_err(py_err)
    }
}

#[pymethods]
impl PyIdeal {
    #[new]
    #[pyo3(signature = (text, nvars=None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        let ring = RingContext::new(nvars.unwrap_or_else(|| infer_vars(text))).map_err(py_err)?;
        let ideal = ring.parse_ideal(text).map_err(py_err)?;
        Ok(PyIdeal { ring, ideal })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// Minimal generators as exponent vectors.
    fn gens(&self) -> Vec<Vec<u32>> {
        self.ideal.gens().iter().map(|g| g.exponents().to_vec()).collect()
    }

    fn __str__(&self) -> String {
        self.ring.format_ideal(&self.ideal)
    }

    fn __repr__(&self) -> String {
        format!("Ideal(\"{}\", nvars={})", self.__str__(), self.ideal.nvars())
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.ideal == other.ideal
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        let m = self.ring.parse_monomial(monomial).map_err(py_err)?;
        self.ideal.contains(&m).map_err(py_err)
    }

    fn sum(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(self.wrap(self.ideal.sum(&other.ideal).map_err(py_err)?))
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(self.wrap(self.ideal.intersect(&other.ideal).map_err(py_err)?))
    }

    fn colon(&self, monomial: &str) -> PyResult<PyIdeal> {
        let m = self.ring.parse_monomial(monomial).map_err(py_err)?;
        Ok(self.wrap(self.ideal.colon(&m).map_err(py_err)?))
    }

    fn saturate(&self) -> PyIdeal {
        self.wrap(self.ideal.saturate())
    }

    /// Irredundant irreducible components, as ideal strings.
    fn decompose(&self) -> PyResult<Vec<String>> {
        let d = irreducible_decomposition(&self.ideal).map_err(py_err)?;
        Ok(d
            .components()
            .iter()
            .map(|c| self.ring.format_ideal(&c.to_ideal()))
            .collect())
    }

    fn ass(&self) -> PyResult<Vec<String>> {
        let primes = associated_primes(&self.ideal).map_err(py_err)?;
        Ok(primes.iter().map(|p| p.display_with(self.ring.names())).collect())
    }

    fn minprimes(&self) -> PyResult<Vec<String>> {
        let primes = minimal_primes(&self.ideal).map_err(py_err)?;
        Ok(primes.iter().map(|p| p.display_with(self.ring.names())).collect())
    }

    /// Full verdict for `mode` ("clean", "pretty" or "almost") as a dict.
    fn decide(&self, py: Python<'_>, mode: &str) -> PyResult<Py<PyAny>> {
        let v = cleanness::decide(&self.ideal, parse_mode(mode)?).map_err(py_err)?;
        to_py(py, &v)
    }

    fn is_clean(&self) -> PyResult<bool> {
        self.holds(CleannessMode::Clean)
    }

    fn is_pretty_clean(&self) -> PyResult<bool> {
        self.holds(CleannessMode::PrettyClean)
    }

    fn is_almost_clean(&self) -> PyResult<bool> {
        self.holds(CleannessMode::AlmostClean)
    }

    /// A prime filtration for `mode`, or None.
    #[pyo3(signature = (mode="pretty"))]
    fn filtration(&self, py: Python<'_>, mode: &str) -> PyResult<Py<PyAny>> {
        let f = cleanness::find_filtration(&self.ideal, parse_mode(mode)?, None).map_err(py_err)?;
        to_py(py, &f)
    }

    fn is_regular_sequence(&self, seq: &str) -> PyResult<bool> {
        sequences::is_regular_sequence(&self.ideal, &self.monomials(seq)?).map_err(py_err)
    }

    fn is_filter_regular_sequence(&self, seq: &str) -> PyResult<bool> {
        sequences::is_filter_regular_sequence(&self.ideal, &self.monomials(seq)?).map_err(py_err)
    }

    #[pyo3(signature = (seq, any_order=false))]
    fn is_d_sequence(&self, seq: &str, any_order: bool) -> PyResult<bool> {
        let us = self.monomials(seq)?;
        if any_order {
            sequences::is_d_sequence_any_order(&self.ideal, &us)
        } else {
            sequences::is_d_sequence_on(&self.ideal, &us)
        }
        .map_err(py_err)
    }

    fn is_forest_type(&self) -> PyResult<bool> {
        sequences::is_forest_type(&self.ideal).map_err(py_err)
    }

    /// Multigraded Betti table of S/I as a dict.
    #[pyo3(signature = (characteristic=0))]
    fn betti(&self, py: Python<'_>, characteristic: u32) -> PyResult<Py<PyAny>> {
        let c = if characteristic == 0 {
            Characteristic::Zero
        } else {
            Characteristic::Prime(characteristic)
        };
        let t = homology::betti_table(&self.ideal, c).map_err(py_err)?;
        to_py(py, &t)
    }

    fn depth(&self) -> PyResult<usize> {
        homology::depth(&self.ideal).map_err(py_err)
    }

    fn projective_dimension(&self) -> PyResult<usize> {
        homology::projective_dimension(&self.ideal).map_err(py_err)
    }

    fn regularity(&self) -> PyResult<i64> {
        homology::regularity(&self.ideal).map_err(py_err)
    }

    fn sdepth(&self) -> PyResult<usize> {
        Ok(stanley::sdepth(&self.ideal).map_err(py_err)?.0)
    }

    /// The optimal interval partition behind `sdepth`.
    fn stanley_partition(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &stanley::sdepth(&self.ideal).map_err(py_err)?.1)
    }

    fn h_regular(&self) -> PyResult<bool> {
        Ok(stanley::h_regularity_check(&self.ideal).map_err(py_err)?.0)
    }

    fn stanley_inequality(&self) -> PyResult<bool> {
        stanley::stanley_conjecture_check(&self.ideal).map_err(py_err)
    }
}

impl PyIdeal {
    fn holds(&self, mode: CleannessMode) -> PyResult<bool> {
        Ok(cleanness::decide(&self.ideal, mode).map_err(py_err)?.holds)
    }
}

/// gcd condition on an ordered list of monomials.
#[pyfunction]
#[pyo3(signature = (seq, nvars=None, any_order=false))]
fn gcd_condition(seq: &str, nvars: Option<usize>, any_order: bool) -> PyResult<bool> {
    let ring = RingContext::new(nvars.unwrap_or_else(|| infer_vars(seq))).map_err(py_err)?;
    let us = ring.parse_monomial_list(seq).map_err(py_err)?;
    if any_order {
        sequences::gcd_condition_any_order(&us)
    } else {
        sequences::gcd_condition(&us)
    }
    .map_err(py_err)
}

/// Seeded random corpus, as ideal strings.
#[pyfunction]
#[pyo3(signature = (seed, nvars, trials, max_deg=3, gens=3, squarefree=false))]
fn generate(
    seed: u64,
    nvars: usize,
    trials: usize,
    max_deg: u32,
    gens: usize,
    squarefree: bool,
) -> PyResult<Vec<String>> {
    let spec = CorpusSpec::new(seed, nvars, max_deg, gens, trials).squarefree(squarefree);
    let ring = RingContext::new(nvars).map_err(py_err)?;
    let ideals: Vec<String> = gen_ideals(&spec)
        .map_err(py_err)?
        .map(|i| ring.format_ideal(&i))
        .collect();
    Ok(ideals)
}

/// Runs a theorem harness and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (theorem, seed=1, nvars=3, trials=200, max_deg=3, gens=3, squarefree=false, exhaustive=false))]
#[allow(clippy::too_many_arguments)]
fn run_verify(
    py: Python<'_>,
    theorem: &str,
    seed: u64,
    nvars: usize,
    trials: usize,
    max_deg: u32,
    gens: usize,
    squarefree: bool,
    exhaustive: bool,
) -> PyResult<Py<PyAny>> {
    let theorem: Theorem = theorem.parse().map_err(py_err)?;
    let spec = CorpusSpec::new(seed, nvars, max_deg, gens, trials).squarefree(squarefree);
    let report = py
        .detach(|| {
            if exhaustive {
                verify_ideals(theorem, &exhaustive_ideals(nvars, max_deg)?, seed)
            } else {
                verify(theorem, &spec)
            }
        })
        .map_err(py_err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "monoclean")]
fn monoclean_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(gcd_condition, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add("ResourceError", m.py().get_type::<ResourceError>())?;
    Ok(())
}
