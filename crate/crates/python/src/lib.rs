//! Python bindings: catalogs of irreducible cyclic codes, closed-form
//! enumerators, brute-force checks and channel probabilities.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cycloweight::catalog::{enumerate_codes, CatalogDocument, GroupClass};
use cycloweight::factorizer::{self, audit_counts, Case, CaseParameters, FactorKind};
use cycloweight::gfield::{BaseField, FieldTower};
use cycloweight::numth::prime_power;
use cycloweight::oracle::{brute_force_distribution, verify_code, VerificationReport, VerifyConfig, DEFAULT_CAP};
use cycloweight::polyring::Poly;
use cycloweight::wdist::{self, Channel, CodeRecord, WeightEnumerator};
use cycloweight::Error;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn channel(name: Option<&str>, q: u64) -> PyResult<Channel> {
    match name {
        None => Ok(if q == 2 { Channel::Binary } else { Channel::QAry }),
        Some("binary") => Ok(Channel::Binary),
        Some("qary") => Ok(Channel::QAry),
        Some(other) => Err(PyValueError::new_err(format!("unknown channel {other:?}, expected 'binary' or 'qary'"))),
    }
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("q", r.code_id.q)?;
    d.set_item("n", r.code_id.n)?;
    d.set_item("check_poly", &r.code_id.check_poly)?;
    d.set_item("passed", r.passed())?;
    let checks = PyList::empty(py);
    for c in &r.checks {
        let item = PyDict::new(py);
        item.set_item("name", &c.name)?;
        item.set_item("predicted", &c.predicted)?;
        item.set_item("measured", &c.measured)?;
        item.set_item("pass", c.pass)?;
        checks.append(item)?;
    }
    d.set_item("checks", checks)?;
    let skipped = PyList::empty(py);
    for s in &r.skipped {
        let item = PyDict::new(py);
        item.set_item("name", &s.name)?;
        item.set_item("reason", &s.reason)?;
        skipped.append(item)?;
    }
    d.set_item("skipped", skipped)?;
    Ok(d)
}

fn params_dict<'py>(py: Python<'py>, p: &CaseParameters) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("q", p.q)?;
    d.set_item("n", p.n)?;
    d.set_item(
        "case",
        match p.case {
            Case::BinomialOnly => "binomial_only",
            Case::Mixed => "mixed",
        },
    )?;
    d.set_item("m", p.m)?;
    d.set_item("l", p.l)?;
    d.set_item("m_prime", p.m_prime)?;
    d.set_item("l_prime", p.l_prime)?;
    d.set_item("r", p.r)?;
    Ok(d)
}

/// One irreducible cyclic code with its closed-form weight enumerator.
#[pyclass(frozen, module = "cycloweight")]
struct Code {
    record: CodeRecord,
    tower: Arc<FieldTower>,
}

#[pymethods]
impl Code {
    #[getter]
    fn q(&self) -> u64 {
        self.record.q
    }

    #[getter]
    fn n(&self) -> u64 {
        self.record.n
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.record.dimension
    }

    #[getter]
    fn min_distance(&self) -> usize {
        self.record.min_distance
    }

    /// `[q;n,k,d]`
    #[getter]
    fn label(&self) -> String {
        self.record.label()
    }

    #[getter]
    fn check_poly(&self) -> String {
        self.record.check_poly.render()
    }

    #[getter]
    fn generator_poly(&self) -> String {
        self.record.generator_poly.render()
    }

    /// Factored enumerator, e.g. `(1+120z^72+840z^96)^3`.
    #[getter]
    fn enumerator(&self) -> String {
        self.record.enumerator.render()
    }

    /// `"binomial"` or `"trinomial"`.
    #[getter]
    fn kind(&self) -> &'static str {
        match self.record.factor.kind() {
            FactorKind::Binomial { .. } => "binomial",
            FactorKind::Trinomial { .. } => "trinomial",
        }
    }

    #[getter]
    fn nu2u(&self) -> Option<u32> {
        match GroupClass::of(&self.record) {
            GroupClass::Trinomial { nu2u } => Some(nu2u),
            GroupClass::Binomial => None,
        }
    }

    /// Exact weight distribution from the closed form, `{weight: count}`.
    fn weight_distribution(&self) -> BTreeMap<usize, BigUint> {
        self.record.enumerator.expanded().clone()
    }

    /// Weight distribution by enumerating all `q^k` codewords.
    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn brute_force(&self, py: Python<'_>, cap: u64) -> PyResult<BTreeMap<usize, BigUint>> {
        let record = &self.record;
        py.detach(|| brute_force_distribution(record, cap))
            .map(|bf| bf.distribution)
            .map_err(err)
    }

    #[pyo3(signature = (cap = DEFAULT_CAP, exhaustive_q_bound = 9))]
    fn verify<'py>(&self, py: Python<'py>, cap: u64, exhaustive_q_bound: u64) -> PyResult<Bound<'py, PyDict>> {
        let config = VerifyConfig { cap, exhaustive_q_bound };
        let (record, tower) = (&self.record, &*self.tower);
        let report = py.detach(|| verify_code(record, tower, &config)).map_err(err)?;
        report_dict(py, &report)
    }

    #[pyo3(signature = (p, channel = None))]
    fn undetected_error_probability(&self, p: f64, channel: Option<&str>) -> PyResult<f64> {
        let c = self::channel(channel, self.record.q)?;
        wdist::undetected_error_probability(self.record.enumerator.expanded(), self.record.q, self.record.n, p, c)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Code({}, h={})", self.record.label(), self.record.check_poly.render())
    }
}

/// Every irreducible cyclic code of length `n` over `F_q`.
#[pyclass(frozen, module = "cycloweight")]
struct Catalog {
    params: CaseParameters,
    tower: Arc<FieldTower>,
    codes: Vec<CodeRecord>,
}

impl Catalog {
    fn document(&self, expand: bool) -> CatalogDocument {
        CatalogDocument::build(&self.params, &self.codes, expand)
    }

    fn wrap(&self, record: &CodeRecord) -> Code {
        Code {
            record: record.clone(),
            tower: Arc::clone(&self.tower),
        }
    }
}

#[pymethods]
impl Catalog {
    #[new]
    fn new(q: u64, n: u64) -> PyResult<Self> {
        let (params, tower, codes) = enumerate_codes(q, n).map_err(err)?;
        Ok(Catalog {
            params,
            tower: Arc::new(tower),
            codes,
        })
    }

    #[getter]
    fn q(&self) -> u64 {
        self.params.q
    }

    #[getter]
    fn n(&self) -> u64 {
        self.params.n
    }

    #[getter]
    fn parameters<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        params_dict(py, &self.params)
    }

    fn codes(&self) -> Vec<Code> {
        self.codes.iter().map(|c| self.wrap(c)).collect()
    }

    /// The code whose check polynomial is `check_poly`.
    fn code(&self, check_poly: &str) -> PyResult<Code> {
        let h = Poly::parse(check_poly, self.tower.base()).map_err(err)?;
        self.codes
            .iter()
            .find(|c| c.check_poly == h)
            .map(|c| self.wrap(c))
            .ok_or_else(|| PyValueError::new_err(format!("{} is not an irreducible factor of x^{} - 1", h.render(), self.params.n)))
    }

    fn __len__(&self) -> usize {
        self.codes.len()
    }

    #[pyo3(signature = (expand = false))]
    fn to_json(&self, expand: bool) -> String {
        self.document(expand).to_json()
    }

    #[pyo3(signature = (expand = false))]
    fn to_text(&self, expand: bool) -> String {
        self.document(expand).render_text()
    }

    #[pyo3(signature = (expand = false))]
    fn to_csv(&self, expand: bool) -> String {
        self.document(expand).render_csv()
    }

    /// Predicted against measured factor counts, one dict per entry.
    fn count_audit<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let factors: Vec<_> = self.codes.iter().map(|c| c.factor.clone()).collect();
        let out = PyList::empty(py);
        for a in audit_counts(&self.params, &factors).map_err(err)? {
            let d = PyDict::new(py);
            d.set_item("key", a.key.to_string())?;
            d.set_item("source", a.source.label())?;
            d.set_item("predicted", a.predicted.to_string())?;
            d.set_item("measured", a.measured)?;
            d.set_item("agrees", a.agrees)?;
            d.set_item("strict", a.source.is_strict())?;
            out.append(d)?;
        }
        Ok(out)
    }

    #[pyo3(signature = (cap = DEFAULT_CAP, exhaustive_q_bound = 9))]
    fn verify<'py>(&self, py: Python<'py>, cap: u64, exhaustive_q_bound: u64) -> PyResult<Bound<'py, PyList>> {
        let config = VerifyConfig { cap, exhaustive_q_bound };
        let (codes, tower) = (&self.codes, &*self.tower);
        let reports = py
            .detach(|| cycloweight::oracle::verify_all(codes, tower, &config))
            .map_err(err)?;
        let out = PyList::empty(py);
        for r in &reports {
            out.append(report_dict(py, r)?)?;
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Catalog(q={}, n={}, codes={})", self.params.q, self.params.n, self.codes.len())
    }
}

/// Derived integers for `(q, n)`; raises `ValueError` out of regime.
#[pyfunction]
fn case_parameters<'py>(py: Python<'py>, q: u64, n: u64) -> PyResult<Bound<'py, PyDict>> {
    params_dict(py, &factorizer::case_parameters(n, q).map_err(err)?)
}

/// Irreducible factors of `x^n - 1` from the closed forms, canonical order.
#[pyfunction]
fn factor(q: u64, n: u64) -> PyResult<Vec<String>> {
    let params = factorizer::case_parameters(n, q).map_err(err)?;
    let tower = FieldTower::for_order(q).map_err(err)?;
    let fs = factorizer::factor(&params, &tower).map_err(err)?;
    Ok(fs.iter().map(|f| f.poly().render()).collect())
}

/// Irreducible factors of `x^n - 1` from cyclotomic cosets; any `n`
/// coprime to `q`.
#[pyfunction]
fn coset_factors(q: u64, n: u64) -> PyResult<Vec<String>> {
    let (p, e) = prime_power(q).ok_or_else(|| err(Error::NotPrimePower(q)))?;
    let field = BaseField::new(p, e).map_err(err)?;
    let fs = factorizer::coset_oracle(n, &field).map_err(err)?;
    Ok(fs.iter().map(Poly::render).collect())
}

fn enumerator_pair(e: WeightEnumerator) -> (String, BTreeMap<usize, BigUint>) {
    let dist = e.expanded().clone();
    (e.render(), dist)
}

/// `(rendered, {weight: count})` for a binomial check polynomial of degree `s`.
#[pyfunction]
fn enumerator_binomial(q: u64, n: u64, s: u64) -> PyResult<(String, BTreeMap<usize, BigUint>)> {
    wdist::enumerator_binomial(q, n, s).map(enumerator_pair).map_err(err)
}

#[pyfunction]
fn enumerator_trinomial(q: u64, n: u64, t: u64, r: u32, nu2u: u32) -> PyResult<(String, BTreeMap<usize, BigUint>)> {
    wdist::enumerator_trinomial(q, n, t, r, nu2u).map(enumerator_pair).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (distribution, q, n, p, channel = None))]
fn undetected_error_probability(
    distribution: BTreeMap<usize, BigUint>,
    q: u64,
    n: u64,
    p: f64,
    channel: Option<&str>,
) -> PyResult<f64> {
    let c = self::channel(channel, q)?;
    wdist::undetected_error_probability(&distribution, q, n, p, c).map_err(err)
}

#[pymodule(name = "cycloweight")]
fn cycloweight_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Code>()?;
    m.add_class::<Catalog>()?;
    m.add_function(wrap_pyfunction!(case_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(coset_factors, m)?)?;
    m.add_function(wrap_pyfunction!(enumerator_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(enumerator_trinomial, m)?)?;
    m.add_function(wrap_pyfunction!(undetected_error_probability, m)?)?;
    m.add("SCHEMA", cycloweight::catalog::SCHEMA)?;
    Ok(())
}
