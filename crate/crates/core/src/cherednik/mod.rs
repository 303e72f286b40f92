//! The standard module `M_c(tau) = C[z, zbar] (x) V(tau)` of the rational
//! Cherednik algebra of `I_2(m)`.
//!
//! Dunkl operators are not written in closed form. They are defined by the
//! commutation relations with `z` and `zbar` and the fact that `zeta` and
//! `zetabar` kill `1 (x) V(tau)`, which gives an exact recursion on monomials.

mod expr;
mod gram;
mod module;
mod operator;
mod relations;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::dihedral::{n_c, DihedralError, DihedralGroup, Irrep};
use crate::linalg::Matrix;
use crate::scalars::{field_for, Cyclotomic, CyclotomicField, ParamValues, ScalarError};

pub use expr::{Expr, Letter};
pub use gram::{beta, contravariant_gram, hermitian_extremes, theta, theta_matrix, GramSummary};
pub use module::{ModuleElement, PeelOrder, Var};
pub use operator::{Comparison, GradedOperator, Space};
pub use relations::{check_identity, check_nonzero, comparison_entry, verify_relations, RelationSet};

/// Hard cap on `max_degree`; operator blocks grow like the degree squared.
pub const MAX_DEGREE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CherednikError {
    #[error(transparent)]
    Dihedral(#[from] DihedralError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("max_degree {0} exceeds the cap of {MAX_DEGREE_CAP}")]
    DegreeCap(usize),
    #[error("degree {degree} exceeds max_degree {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("letter {0} needs the spinor space")]
    NeedsSpinor(String),
}

/// Everything needed to build operators on `M_c(tau)` up to `max_degree`.
pub struct ModuleContext {
    group: DihedralGroup,
    tau: Irrep,
    c: ParamValues,
    max_degree: usize,
    field: &'static CyclotomicField,
    n_c: Cyclotomic,
    letters: Mutex<HashMap<(Space, Letter), Arc<GradedOperator>>>,
    named: Mutex<HashMap<(Space, String), Arc<GradedOperator>>>,
}

impl ModuleContext {
    pub fn new(m: u32, tau: Irrep, c: ParamValues, max_degree: usize) -> Result<Self, CherednikError> {
        let group = DihedralGroup::new(m)?;
        tau.validate(m)?;
        let c = ParamValues::new(m, c.c_even, c.c_odd)?;
        if max_degree > MAX_DEGREE_CAP {
            return Err(CherednikError::DegreeCap(max_degree));
        }
        Ok(ModuleContext {
            group,
            tau,
            n_c: n_c(tau, m, &c),
            c,
            max_degree,
            field: field_for(m),
            letters: Mutex::new(HashMap::new()),
            named: Mutex::new(HashMap::new()),
        })
    }

    pub fn m(&self) -> u32 {
        self.group.m()
    }

    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    pub fn tau(&self) -> Irrep {
        self.tau
    }

    pub fn params(&self) -> &ParamValues {
        &self.c
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    /// `dim V(tau)`.
    pub fn d(&self) -> usize {
        self.tau.dim()
    }

    /// `N_c(tau)`, the scalar by which `sigma(0)` acts on `V(tau)` (zero for
    /// the two-dimensional irreps).
    pub fn n_c(&self) -> &Cyclotomic {
        &self.n_c
    }

    /// `dim M_c(tau)_k`; zero for negative `k`.
    pub fn dim(&self, k: i64) -> usize {
        if k < 0 {
            0
        } else {
            (k as usize + 1) * self.d()
        }
    }

    pub fn space_dim(&self, space: Space, k: i64) -> usize {
        match space {
            Space::Scalar => self.dim(k),
            Space::Spinor => 2 * self.dim(k),
        }
    }

    /// Position of `z^a zbar^b (x) v` inside the degree-`a+b` block.
    pub fn index(&self, b: usize, v: usize) -> usize {
        b * self.d() + v
    }

    /// Inverse of [`ModuleContext::index`] at degree `k`: `(a, b, v)`.
    pub fn monomial(&self, k: usize, idx: usize) -> (usize, usize, usize) {
        let (b, v) = (idx / self.d(), idx % self.d());
        (k - b, b, v)
    }

    pub fn scalar(&self, v: i64) -> Cyclotomic {
        Cyclotomic::from_int(self.field, v)
    }

    pub fn irrep_matrix(&self, g: crate::dihedral::DihedralElement) -> Matrix {
        self.tau.matrix(&self.group, g)
    }

    /// Materializes one letter on the requested space, memoized.
    pub fn letter(&self, space: Space, letter: Letter) -> Result<Arc<GradedOperator>, CherednikError> {
        if let Some(op) = self.letters.lock().expect("letter cache").get(&(space, letter)) {
            return Ok(op.clone());
        }
        let op = Arc::new(operator::build_letter(self, space, letter)?);
        self.letters
            .lock()
            .expect("letter cache")
            .insert((space, letter), op.clone());
        Ok(op)
    }

    /// Materializes an expression, memoized under `name`.
    pub fn named(&self, space: Space, name: &str, build: impl FnOnce() -> Expr) -> Result<Arc<GradedOperator>, CherednikError> {
        let key = (space, name.to_string());
        if let Some(op) = self.named.lock().expect("operator cache").get(&key) {
            return Ok(op.clone());
        }
        let op = Arc::new(build().materialize(self, space)?);
        self.named.lock().expect("operator cache").insert(key, op.clone());
        Ok(op)
    }

    /// Short label such as `m=3 tau=triv c=1/10`.
    pub fn label(&self) -> String {
        format!("m={} tau={} {}", self.m(), self.tau, self.c)
    }
}

impl Clone for ModuleContext {
    fn clone(&self) -> Self {
        ModuleContext {
            group: self.group,
            tau: self.tau,
            c: self.c.clone(),
            max_degree: self.max_degree,
            field: self.field,
            n_c: self.n_c.clone(),
            letters: Mutex::new(self.letters.lock().expect("letter cache").clone()),
            named: Mutex::new(self.named.lock().expect("operator cache").clone()),
        }
    }
}

impl std::fmt::Debug for ModuleContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleContext({}, max_degree={})", self.label(), self.max_degree)
    }
}

/// The named operators of the scalar `u(1,1)` realisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorName {
    EPlus,
    EMinus,
    H,
    Z0,
    Sigma,
    X,
}

/// `E+`, `E-`, `H`, `Z0`, `sigma(0)` or `X = i Z0` as a graded operator.
pub fn build_operator(ctx: &ModuleContext, name: OperatorName) -> Result<Arc<GradedOperator>, CherednikError> {
    let e = expr::generators(ctx);
    let (key, build): (&str, Expr) = match name {
        OperatorName::EPlus => ("E+", e.e_plus),
        OperatorName::EMinus => ("E-", e.e_minus),
        OperatorName::H => ("H", e.h),
        OperatorName::Z0 => ("Z0", e.z0),
        OperatorName::Sigma => ("sigma", e.sigma0),
        OperatorName::X => ("X", e.x),
    };
    ctx.named(Space::Scalar, key, || build)
}

/// `Z0 + epsilon sigma(0)`.
pub fn z0_eps(ctx: &ModuleContext, epsilon: &Cyclotomic) -> Result<GradedOperator, CherednikError> {
    let z0 = build_operator(ctx, OperatorName::Z0)?;
    let sigma = build_operator(ctx, OperatorName::Sigma)?;
    Ok(z0.add(&sigma.scale(epsilon)))
}

pub use expr::{generators, Generators};
