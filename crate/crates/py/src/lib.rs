//! Python bindings. Objects are built from the same text syntax the CLI accepts.

use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use adelic_weil::biext::{self, PairingSetup};
use adelic_weil::curve::{self, Curve as RCurve, Divisor as RDivisor, Function as RFunction, Place as RPlace};
use adelic_weil::ff::{Fe, Field as RField};
use adelic_weil::idele::{self, Idele as RIdele};
use adelic_weil::{cli, parse, tame, weil, Error};

create_exception!(adelic, TorsionError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Arithmetic(_) => PyArithmeticError::new_err(e.to_string()),
        Error::Torsion(_) => TorsionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for adelic_weil::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// A finite field, e.g. `Field("GF(9)")` or `Field("GF(7)")`.
#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Field(RField);

#[pymethods]
impl Field {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Field(parse::parse_field(text).py()?))
    }

    #[getter]
    fn order(&self) -> u128 {
        self.0.order()
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.0.characteristic()
    }

    fn element(&self, text: &str) -> PyResult<Element> {
        Ok(Element(parse::parse_element(&self.0, text).py()?))
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, eq, hash, skip_from_py_object, module = "adelic")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Element(Fe);

#[pymethods]
impl Element {
    fn __add__(&self, o: &Element) -> PyResult<Element> {
        Ok(Element(self.0.checked_add(&o.0).py()?))
    }

    fn __sub__(&self, o: &Element) -> PyResult<Element> {
        Ok(Element(self.0.checked_sub(&o.0).py()?))
    }

    fn __mul__(&self, o: &Element) -> PyResult<Element> {
        Ok(Element(self.0.checked_mul(&o.0).py()?))
    }

    fn __truediv__(&self, o: &Element) -> PyResult<Element> {
        Ok(Element(self.0.checked_div(&o.0).py()?))
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Element> {
        Ok(Element(self.0.pow(e).py()?))
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn multiplicative_order(&self) -> PyResult<u128> {
        self.0.multiplicative_order().py()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// `Curve("P1/GF(5)")` or `Curve("E/GF(5):a4=4,a6=0")`.
#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Curve(RCurve);

#[pymethods]
impl Curve {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Curve(parse::parse_curve(text).py()?))
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.0.genus()
    }

    #[getter]
    fn base(&self) -> Field {
        Field(self.0.base().clone())
    }

    fn function(&self, text: &str) -> PyResult<Function> {
        Ok(Function(parse::parse_function(&self.0, text).py()?))
    }

    fn place(&self, text: &str) -> PyResult<Place> {
        Ok(Place(parse::parse_place(&self.0, text).py()?, self.0.clone()))
    }

    fn divisor(&self, text: &str) -> PyResult<Divisor> {
        Ok(Divisor(parse::parse_divisor(&self.0, text).py()?))
    }

    fn idele(&self, text: &str) -> PyResult<Idele> {
        Ok(Idele(parse::parse_idele(&self.0, text).py()?))
    }

    fn torsion_points(&self, m: u64) -> PyResult<Vec<Place>> {
        Ok(curve::torsion_points(&self.0, m).py()?.into_iter().map(|p| Place(p, self.0.clone())).collect())
    }

    fn __repr__(&self) -> String {
        format!("Curve('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Place(RPlace, RCurve);

#[pymethods]
impl Place {
    #[getter]
    fn degree(&self) -> i64 {
        self.0.degree()
    }

    fn __add__(&self, o: &Place) -> PyResult<Place> {
        Ok(Place(curve::point_add(&self.1, &self.0, &o.0).py()?, self.1.clone()))
    }

    fn __eq__(&self, o: &Place) -> bool {
        self.0 == o.0 && self.1 == o.1
    }

    fn __repr__(&self) -> String {
        format!("Place('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Function(RFunction);

#[pymethods]
impl Function {
    fn __mul__(&self, o: &Function) -> PyResult<Function> {
        Ok(Function(self.0.checked_mul(&o.0).py()?))
    }

    fn __truediv__(&self, o: &Function) -> PyResult<Function> {
        Ok(Function(self.0.checked_div(&o.0).py()?))
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> Function {
        Function(self.0.pow(e))
    }

    fn __eq__(&self, o: &Function) -> bool {
        self.0 == o.0
    }

    fn divisor(&self) -> PyResult<Divisor> {
        Ok(Divisor(curve::divisor_of(&self.0).py()?))
    }

    fn order_at(&self, place: &Place) -> PyResult<i64> {
        curve::order_at(&self.0, &place.0).py()
    }

    fn __repr__(&self) -> String {
        format!("Function('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Divisor(RDivisor);

#[pymethods]
impl Divisor {
    #[getter]
    fn degree(&self) -> i64 {
        self.0.degree()
    }

    fn __add__(&self, o: &Divisor) -> PyResult<Divisor> {
        Ok(Divisor(self.0.checked_add(&o.0).py()?))
    }

    fn __sub__(&self, o: &Divisor) -> PyResult<Divisor> {
        Ok(Divisor(self.0.checked_sub(&o.0).py()?))
    }

    fn __mul__(&self, n: i64) -> Divisor {
        Divisor(self.0.scale(n))
    }

    fn __rmul__(&self, n: i64) -> Divisor {
        Divisor(self.0.scale(n))
    }

    fn __eq__(&self, o: &Divisor) -> bool {
        self.0 == o.0
    }

    /// `(h0, h1)` with a basis of `L(D)` as strings.
    fn riemann_roch(&self) -> PyResult<(usize, usize, Vec<String>)> {
        let rr = curve::riemann_roch(&self.0).py()?;
        Ok((rr.h0, rr.h1, rr.basis.iter().map(|f| f.to_string()).collect()))
    }

    fn is_principal(&self) -> PyResult<bool> {
        curve::is_principal(&self.0).py()
    }

    /// The function `f` with `div f = m·D`, or `TorsionError`.
    fn certify_torsion(&self, m: u64) -> PyResult<Function> {
        Ok(Function(weil::certify(&self.0, m).py()?))
    }

    fn __repr__(&self) -> String {
        format!("Divisor('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, skip_from_py_object, module = "adelic")]
#[derive(Clone)]
struct Idele(RIdele);

#[pymethods]
impl Idele {
    #[staticmethod]
    fn principal(f: &Function) -> Idele {
        Idele(RIdele::principal(&f.0))
    }

    #[staticmethod]
    fn uniformizer(d: &Divisor) -> PyResult<Idele> {
        Ok(Idele(RIdele::uniformizer_idele(&d.0).py()?))
    }

    fn __mul__(&self, o: &Idele) -> PyResult<Idele> {
        Ok(Idele(self.0.checked_mul(&o.0).py()?))
    }

    fn inverse(&self) -> Idele {
        Idele(self.0.inv())
    }

    fn degree(&self) -> PyResult<i64> {
        self.0.degree().py()
    }

    fn is_unit(&self) -> PyResult<bool> {
        self.0.is_unit().py()
    }

    fn __repr__(&self) -> String {
        format!("Idele('{}')", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A finite pairing setup read from the setup file format.
#[pyclass(frozen, module = "adelic")]
struct Setup(PairingSetup);

#[pymethods]
impl Setup {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Setup(biext::parse_setup(text).py()?))
    }

    /// `(passed, report)` for the four vanishing conditions.
    fn validate(&self) -> (bool, String) {
        let r = biext::validate_setup(&self.0);
        (r.passed(), r.to_string())
    }

    /// The quotient pairing of two group elements given by coordinates.
    fn weil(&self, a: Vec<u64>, ap: Vec<u64>, m: u64) -> PyResult<u64> {
        let a = self.0.a().encode(&a).py()?;
        let ap = self.0.ap().encode(&ap).py()?;
        biext::quotient_weil_pairing(&self.0, a, ap, m).py()
    }

    /// Runs every exhaustive scan and returns `(property, cases, counterexamples)`.
    fn check(&self, ms: Vec<u64>) -> Vec<(String, u64, u64)> {
        biext::verify_setup(&self.0, &ms).into_iter().map(|r| (r.property, r.cases, r.counterexamples)).collect()
    }

    fn __str__(&self) -> String {
        biext::render_setup(&self.0)
    }
}

#[pyfunction]
fn tame_symbol(f: &Function, g: &Function, place: &Place) -> PyResult<Element> {
    Ok(Element(tame::tame_symbol(&f.0, &g.0, &place.0).py()?))
}

/// The product of normed symbols over all places, 1 by reciprocity.
#[pyfunction]
fn weil_reciprocity(f: &Function, g: &Function) -> PyResult<Element> {
    Ok(Element(tame::weil_reciprocity(&f.0, &g.0).py()?))
}

#[pyfunction]
fn commutator_pairing(a: &Idele, b: &Idele) -> PyResult<Element> {
    Ok(Element(idele::commutator_pairing(&a.0, &b.0).py()?))
}

/// `method` is `"adelic"` or `"disjoint"`.
#[pyfunction]
#[pyo3(signature = (d, dp, m, method = "adelic"))]
fn weil_pairing(d: &Divisor, dp: &Divisor, m: u64, method: &str) -> PyResult<Element> {
    let v = match method {
        "adelic" => weil::weil_pairing_adelic(&d.0, &dp.0, m),
        "disjoint" => weil::weil_pairing_disjoint(&d.0, &dp.0, m),
        other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
    };
    Ok(Element(v.py()?))
}

#[pyfunction]
#[pyo3(signature = (p, q, m, seed = 0))]
fn weil_pairing_miller(p: &Place, q: &Place, m: u64, seed: u64) -> PyResult<Element> {
    Ok(Element(weil::weil_pairing_miller(&p.0, &q.0, m, &p.1, seed).py()?))
}

/// Runs a CLI command line (without the program name) and returns `(exit_code, output)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String) {
    cli::run_command(std::iter::once("adelic".to_string()).chain(args))
}

#[pymodule]
fn adelic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_class::<Element>()?;
    m.add_class::<Curve>()?;
    m.add_class::<Place>()?;
    m.add_class::<Function>()?;
    m.add_class::<Divisor>()?;
    m.add_class::<Idele>()?;
    m.add_class::<Setup>()?;
    m.add("TorsionError", m.py().get_type::<TorsionError>())?;
    m.add_function(wrap_pyfunction!(tame_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(weil_reciprocity, m)?)?;
    m.add_function(wrap_pyfunction!(commutator_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(weil_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(weil_pairing_miller, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
