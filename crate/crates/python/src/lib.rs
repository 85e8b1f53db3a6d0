//! Python bindings: polynomial rings, Gröbner bases, generic initial ideals
//! and monomial-ideal analysis.

use std::sync::Arc;

use monideal_core::cli::{verify_paper as run_verify_paper, CheckResult};
use monideal_core::monoideal::TheoremStatus;
use monideal_core::textio::{parse_monomial, parse_polynomial, print_canonical, OutputFormat, Render};
use monideal_core::{
    associated_primes, buchberger, check_theorem, gin, irreducible_decomposition, is_borel_fixed,
    saturated_chain_property, Error, Field, GroebnerBasis as CoreBasis, IdealGens, MonomialIdeal as CoreMonomialIdeal,
    MonomialOrder, Polynomial as CorePolynomial, VarContext,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Resource(_) | Error::UnstableGin { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json<T: Render + ?Sized>(value: &T, ctx: &VarContext) -> String {
    print_canonical(value, ctx, OutputFormat::Json)
}

/// A polynomial ring: variable names, coefficient field and monomial order.
#[pyclass(frozen, skip_from_py_object, module = "monideal")]
#[derive(Clone)]
pub struct Ring {
    ctx: Arc<VarContext>,
    field: Field,
    order: MonomialOrder,
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (vars, field = "Q", order = "grevlex"))]
    fn new(vars: Vec<String>, field: &str, order: &str) -> PyResult<Self> {
        Ok(Ring {
            ctx: VarContext::new(&vars).map_err(to_py)?,
            field: field.parse().map_err(to_py)?,
            order: order.parse().map_err(to_py)?,
        })
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.ctx.names().to_vec()
    }

    #[getter]
    fn field(&self) -> String {
        self.field.to_string()
    }

    #[getter]
    fn order(&self) -> String {
        self.order.to_string()
    }

    fn poly(&self, text: &str) -> PyResult<Polynomial> {
        let inner = parse_polynomial(text, &self.ctx, self.field, self.order).map_err(to_py)?;
        Ok(Polynomial { inner })
    }

    fn ideal(&self, gens: Vec<String>) -> PyResult<Ideal> {
        let polys = gens.iter().map(|g| self.poly(g).map(|p| p.inner)).collect::<PyResult<Vec<_>>>()?;
        Ok(Ideal {
            inner: IdealGens::new(polys).map_err(to_py)?,
            order: self.order,
        })
    }

    fn monomial_ideal(&self, gens: Vec<String>) -> PyResult<MonomialIdeal> {
        MonomialIdeal::build(&self.ctx, &gens)
    }

    fn __repr__(&self) -> String {
        format!("Ring([{}], field={}, order={})", self.ctx.names().join(", "), self.field, self.order)
    }
}

#[pyclass(frozen, skip_from_py_object, module = "monideal")]
#[derive(Clone)]
pub struct Polynomial {
    inner: CorePolynomial,
}

#[pymethods]
impl Polynomial {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }

    fn __eq__(&self, other: &Polynomial) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        let inner = self.inner.checked_add(&other.inner).map_err(to_py)?;
        Ok(Polynomial { inner })
    }

    fn __sub__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        let inner = self.inner.checked_sub(&other.inner).map_err(to_py)?;
        Ok(Polynomial { inner })
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        let inner = self.inner.checked_mul(&other.inner).map_err(to_py)?;
        Ok(Polynomial { inner })
    }

    fn __pow__(&self, n: u32, _modulo: Option<u32>) -> Polynomial {
        Polynomial { inner: self.inner.pow(n) }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    /// Leading monomial as text, or `None` for the zero polynomial.
    fn leading_monomial(&self) -> Option<String> {
        let ctx = self.inner.context();
        self.inner.leading_monomial().ok().map(|m| m.display(ctx).to_string())
    }
}

/// A polynomial ideal given by generators.
#[pyclass(frozen, module = "monideal")]
pub struct Ideal {
    inner: IdealGens,
    order: MonomialOrder,
}

#[pymethods]
impl Ideal {
    #[getter]
    fn gens(&self) -> Vec<Polynomial> {
        self.inner.gens().iter().map(|p| Polynomial { inner: p.clone() }).collect()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// Reduced Gröbner basis, in the ring's order unless one is given.
    #[pyo3(signature = (order = None))]
    fn groebner_basis(&self, py: Python<'_>, order: Option<&str>) -> PyResult<GroebnerBasis> {
        let order = match order {
            Some(o) => o.parse().map_err(to_py)?,
            None => self.order,
        };
        let inner = py.detach(|| buchberger(&self.inner, order)).map_err(to_py)?;
        Ok(GroebnerBasis { inner })
    }

    #[pyo3(signature = (order = None))]
    fn initial_ideal(&self, py: Python<'_>, order: Option<&str>) -> PyResult<MonomialIdeal> {
        Ok(self.groebner_basis(py, order)?.initial_ideal())
    }

    /// Generic initial ideal from `trials` seeded random coordinate changes.
    #[pyo3(signature = (seed = 0, trials = 2, order = None))]
    fn gin(&self, py: Python<'_>, seed: u64, trials: usize, order: Option<&str>) -> PyResult<MonomialIdeal> {
        let order = match order {
            Some(o) => o.parse().map_err(to_py)?,
            None => self.order,
        };
        let inner = py.detach(|| gin(&self.inner, order, seed, trials)).map_err(to_py)?;
        Ok(MonomialIdeal { inner })
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.gens().iter().map(|g| g.to_string()).collect();
        format!("Ideal({})", gens.join(", "))
    }
}

#[pyclass(frozen, module = "monideal")]
pub struct GroebnerBasis {
    inner: CoreBasis,
}

#[pymethods]
impl GroebnerBasis {
    #[getter]
    fn gens(&self) -> Vec<Polynomial> {
        self.inner.gens().iter().map(|p| Polynomial { inner: p.clone() }).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.gens().len()
    }

    fn contains(&self, f: &Polynomial) -> PyResult<bool> {
        self.inner.contains(&f.inner).map_err(to_py)
    }

    fn normal_form(&self, f: &Polynomial) -> PyResult<Polynomial> {
        let inner = self.inner.normal_form(&f.inner).map_err(to_py)?;
        Ok(Polynomial { inner })
    }

    fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            inner: self.inner.initial_ideal(),
        }
    }

    fn to_json(&self) -> String {
        let ctx = self.inner.gens()[0].context().clone();
        json(&self.inner, &ctx)
    }

    fn __str__(&self) -> String {
        let gens: Vec<String> = self.inner.gens().iter().map(|g| g.to_string()).collect();
        gens.join("\n")
    }
}

#[pyclass(frozen, module = "monideal")]
pub struct MonomialIdeal {
    inner: CoreMonomialIdeal,
}

impl MonomialIdeal {
    fn build(ctx: &Arc<VarContext>, gens: &[String]) -> PyResult<Self> {
        let monomials = gens
            .iter()
            .map(|g| parse_monomial(g, ctx))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        Ok(MonomialIdeal {
            inner: CoreMonomialIdeal::new(ctx, monomials).map_err(to_py)?,
        })
    }

    fn ctx(&self) -> &Arc<VarContext> {
        self.inner.context()
    }

    fn var(&self, name: &str) -> PyResult<usize> {
        self.ctx()
            .position(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown variable {name}")))
    }
}

#[pymethods]
impl MonomialIdeal {
    #[new]
    fn new(vars: Vec<String>, gens: Vec<String>) -> PyResult<Self> {
        let ctx = VarContext::new(&vars).map_err(to_py)?;
        Self::build(&ctx, &gens)
    }

    /// Minimal generators in canonical order.
    #[getter]
    fn gens(&self) -> Vec<String> {
        self.inner.gens().iter().map(|g| g.display(self.ctx()).to_string()).collect()
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&parse_monomial(monomial, self.ctx()).map_err(to_py)?))
    }

    fn is_nzd(&self, var: &str) -> PyResult<bool> {
        Ok(self.inner.is_nzd(self.var(var)?))
    }

    /// `(fixed, witness)`; the witness describes a failing elementary move.
    fn is_borel_fixed(&self) -> (bool, Option<String>) {
        let report = is_borel_fixed(&self.inner);
        (report.fixed, report.witness.map(|w| w.describe(self.ctx())))
    }

    fn associated_primes(&self) -> PyResult<Vec<Vec<String>>> {
        let ass = associated_primes(&self.inner).map_err(to_py)?;
        Ok(ass
            .primes
            .iter()
            .map(|a| a.prime.vars().iter().map(|&v| self.ctx().name(v).to_string()).collect())
            .collect())
    }

    /// Irreducible components, each a list of pure powers.
    fn irreducible_decomposition(&self) -> PyResult<Vec<Vec<String>>> {
        let comps = irreducible_decomposition(&self.inner).map_err(to_py)?;
        Ok(comps
            .iter()
            .map(|c| c.to_ideal(self.ctx()).gens().iter().map(|g| g.display(self.ctx()).to_string()).collect())
            .collect())
    }

    /// `(holds, violations)` with each violation a list of variable names.
    fn saturated_chain_property(&self) -> PyResult<(bool, Vec<Vec<String>>)> {
        let ass = associated_primes(&self.inner).map_err(to_py)?;
        let report = saturated_chain_property(&ass);
        let violations = report
            .violations()
            .map(|p| p.vars().iter().map(|&v| self.ctx().name(v).to_string()).collect())
            .collect();
        Ok((report.holds, violations))
    }

    /// One of `"holds"`, `"not covered"`, `"violated"`.
    fn check_theorem(&self) -> PyResult<&'static str> {
        let report = check_theorem(&self.inner).map_err(to_py)?;
        Ok(match report.status {
            TheoremStatus::Holds => "holds",
            TheoremStatus::NotCovered => "not covered",
            TheoremStatus::Violated => "violated",
        })
    }

    /// JSON for one analysis: `ideal`, `borel`, `decomp`, `ass`, `chains` or
    /// `theorem`.
    #[pyo3(signature = (analysis = "ideal"))]
    fn to_json(&self, analysis: &str) -> PyResult<String> {
        let ctx = self.ctx().clone();
        let i = &self.inner;
        Ok(match analysis {
            "ideal" => json(i, &ctx),
            "borel" => json(&is_borel_fixed(i), &ctx),
            "decomp" => json(irreducible_decomposition(i).map_err(to_py)?.as_slice(), &ctx),
            "ass" => json(&associated_primes(i).map_err(to_py)?, &ctx),
            "chains" => json(&saturated_chain_property(&associated_primes(i).map_err(to_py)?), &ctx),
            "theorem" => json(&check_theorem(i).map_err(to_py)?, &ctx),
            other => return Err(PyValueError::new_err(format!("unknown analysis {other}"))),
        })
    }

    fn __eq__(&self, other: &MonomialIdeal) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({})", self.inner)
    }
}

/// Runs the counterexample checks; returns `(id, name, passed, detail)`
/// tuples.
#[pyfunction]
fn verify_paper(py: Python<'_>) -> PyResult<Vec<(String, String, bool, String)>> {
    let report = py.detach(run_verify_paper).map_err(to_py)?;
    Ok(report
        .checks
        .into_iter()
        .map(|CheckResult { id, name, passed, detail }| (id.to_string(), name.to_string(), passed, detail))
        .collect())
}

#[pymodule]
pub fn monideal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Ideal>()?;
    m.add_class::<GroebnerBasis>()?;
    m.add_class::<MonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    Ok(())
}
