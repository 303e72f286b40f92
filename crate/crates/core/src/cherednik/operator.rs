use std::collections::BTreeMap;

use crate::dihedral::omega;
use crate::dihedral::Kind;
use crate::linalg::Matrix;
use crate::scalars::{Cyclotomic, CyclotomicField};

use super::expr::Letter;
use super::module::{ModuleElement, Var};
use super::{CherednikError, ModuleContext};

/// Which module the operator acts on: `M_c(tau)` or `K_c(tau) = M_c(tau) (x) S`.
///
/// On `K` the degree-`k` block is `M_k (x) 1` followed by `M_k (x) fdag`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Scalar,
    Spinor,
}

/// A degree-shifting operator stored as one exact matrix per source degree.
///
/// Blocks exist only where every intermediate space stayed within
/// `max_degree`, so identities are compared on the common domain.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedOperator {
    field: &'static CyclotomicField,
    space: Space,
    d: usize,
    max_degree: usize,
    shift: i64,
    blocks: BTreeMap<usize, Matrix>,
}

/// Outcome of comparing two operators on their common domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal { degrees: Vec<usize> },
    Differ { degree: usize, row: usize, col: usize },
    EmptyDomain,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        matches!(self, Comparison::Equal { .. })
    }

    pub fn locus(&self) -> Option<String> {
        match self {
            Comparison::Equal { .. } => None,
            Comparison::Differ { degree, row, col } => Some(format!("degree {degree}, entry ({row}, {col})")),
            Comparison::EmptyDomain => Some("no degree where both sides are materialized".into()),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        match self {
            Comparison::Equal { degrees } => degrees.clone(),
            _ => Vec::new(),
        }
    }
}

impl GradedOperator {
    pub fn new(ctx: &ModuleContext, space: Space, shift: i64, blocks: BTreeMap<usize, Matrix>) -> Self {
        GradedOperator {
            field: ctx.field(),
            space,
            d: ctx.d(),
            max_degree: ctx.max_degree(),
            shift,
            blocks,
        }
    }

    fn with_blocks(&self, shift: i64, blocks: BTreeMap<usize, Matrix>) -> Self {
        GradedOperator {
            shift,
            blocks,
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> Self {
        GradedOperator {
            field: self.field,
            space: self.space,
            d: self.d,
            max_degree: self.max_degree,
            shift: self.shift,
            blocks: BTreeMap::new(),
        }
    }

    /// Dimension of the degree-`k` piece of the underlying space.
    pub fn dim(&self, k: i64) -> usize {
        if k < 0 {
            return 0;
        }
        let n = (k as usize + 1) * self.d;
        match self.space {
            Space::Scalar => n,
            Space::Spinor => 2 * n,
        }
    }

    /// Identity on every degree up to `ctx.max_degree()`.
    pub fn identity(ctx: &ModuleContext, space: Space) -> Self {
        let blocks = (0..=ctx.max_degree())
            .map(|k| (k, Matrix::identity(ctx.field(), ctx.space_dim(space, k as i64))))
            .collect();
        GradedOperator::new(ctx, space, 0, blocks)
    }

    pub fn zero(ctx: &ModuleContext, space: Space, shift: i64) -> Self {
        let mut blocks = BTreeMap::new();
        for k in 0..=ctx.max_degree() as i64 {
            if k + shift <= ctx.max_degree() as i64 {
                let rows = ctx.space_dim(space, k + shift);
                blocks.insert(k as usize, Matrix::zeros(ctx.field(), rows, ctx.space_dim(space, k)));
            }
        }
        GradedOperator::new(ctx, space, shift, blocks)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn block(&self, k: usize) -> Option<&Matrix> {
        self.blocks.get(&k)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.keys().copied()
    }

    pub fn blocks(&self) -> &BTreeMap<usize, Matrix> {
        &self.blocks
    }

    /// `self o other`.
    ///
    /// A source block of `other` that lands in a negative degree passes
    /// through the zero space, so the composite block is zero.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!(self.space, other.space, "composing operators on different spaces");
        let shift = self.shift + other.shift;
        let mut blocks = BTreeMap::new();
        for (&k, b) in &other.blocks {
            let mid = k as i64 + other.shift;
            if mid < 0 {
                let target = k as i64 + shift;
                if target <= self.max_degree as i64 {
                    blocks.insert(k, Matrix::zeros(self.field, self.dim(target), b.cols()));
                }
                continue;
            }
            if let Some(a) = self.blocks.get(&(mid as usize)) {
                blocks.insert(k, a.mul(b));
            }
        }
        self.with_blocks(shift, blocks)
    }

    fn combine(&self, other: &GradedOperator, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> GradedOperator {
        assert_eq!(self.space, other.space, "combining operators on different spaces");
        assert_eq!(self.shift, other.shift, "combining operators with different shifts");
        let blocks = self
            .blocks
            .iter()
            .filter_map(|(k, a)| other.blocks.get(k).map(|b| (*k, f(a, b))))
            .collect();
        self.with_blocks(self.shift, blocks)
    }

    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        self.combine(other, Matrix::add)
    }

    pub fn sub(&self, other: &GradedOperator) -> GradedOperator {
        self.combine(other, Matrix::sub)
    }

    pub fn scale(&self, s: &Cyclotomic) -> GradedOperator {
        self.with_blocks(self.shift, self.blocks.iter().map(|(k, m)| (*k, m.scale(s))).collect())
    }

    pub fn neg(&self) -> GradedOperator {
        self.scale(&Cyclotomic::from_int(self.field, -1))
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &GradedOperator) -> GradedOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &GradedOperator) -> GradedOperator {
        self.compose(other).add(&other.compose(self))
    }

    /// Graded commutator: anticommutator iff both arguments are odd.
    pub fn supercommutator(&self, self_odd: bool, other: &GradedOperator, other_odd: bool) -> GradedOperator {
        if self_odd && other_odd {
            self.anticommutator(other)
        } else {
            self.commutator(other)
        }
    }

    /// Restricts to source degrees `<= max`.
    pub fn truncate(&self, max: usize) -> GradedOperator {
        self.with_blocks(self.shift, self.blocks.range(..=max).map(|(k, m)| (*k, m.clone())).collect())
    }

    /// Exact comparison on the common domain.
    pub fn compare(&self, other: &GradedOperator) -> Comparison {
        if self.shift != other.shift {
            return Comparison::Differ {
                degree: 0,
                row: 0,
                col: 0,
            };
        }
        let mut degrees = Vec::new();
        for (k, a) in &self.blocks {
            let Some(b) = other.blocks.get(k) else { continue };
            let diff = a.sub(b);
            if let Some((row, col)) = diff.first_nonzero() {
                return Comparison::Differ { degree: *k, row, col };
            }
            degrees.push(*k);
        }
        if degrees.is_empty() {
            Comparison::EmptyDomain
        } else {
            Comparison::Equal { degrees }
        }
    }

    /// True iff every stored block vanishes (and there is at least one).
    pub fn is_zero(&self) -> bool {
        !self.blocks.is_empty() && self.blocks.values().all(Matrix::is_zero)
    }

    /// First `(degree, row, col)` where the operator is nonzero.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        self.blocks
            .iter()
            .find_map(|(k, m)| m.first_nonzero().map(|(r, c)| (*k, r, c)))
    }

    pub fn apply(&self, k: usize, v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        self.blocks.get(&k).map(|m| m.apply(v))
    }

    /// The `(l_out, l_in)` spinor sub-block of a degree-`k` block.
    pub fn spinor_block(&self, k: usize, l_out: usize, l_in: usize) -> Option<Matrix> {
        assert_eq!(self.space, Space::Spinor, "spinor_block on a scalar operator");
        let m = self.blocks.get(&k)?;
        let (r, c) = (m.rows() / 2, m.cols() / 2);
        Some(m.block(l_out * r, l_in * c, r, c))
    }
}

/// Builds the block family for a single letter.
pub(super) fn build_letter(ctx: &ModuleContext, space: Space, letter: Letter) -> Result<GradedOperator, CherednikError> {
    let field = ctx.field();
    let max = ctx.max_degree();
    let shift = letter.shift();
    let mut blocks = BTreeMap::new();
    match letter {
        Letter::F | Letter::FDag => {
            if space != Space::Spinor {
                return Err(CherednikError::NeedsSpinor(letter.to_string()));
            }
            for k in 0..=max {
                let n = ctx.dim(k as i64);
                let mut m = Matrix::zeros(field, 2 * n, 2 * n);
                let (row0, col0) = if letter == Letter::F { (0, n) } else { (n, 0) };
                for i in 0..n {
                    m.set(row0 + i, col0 + i, Cyclotomic::one(field));
                }
                blocks.insert(k, m);
            }
        }
        _ => {
            for k in 0..=max {
                let target = k as i64 + shift;
                if target > max as i64 {
                    continue;
                }
                let scalar = scalar_block(ctx, letter, k);
                let block = match space {
                    Space::Scalar => scalar,
                    Space::Spinor => {
                        let mut m = Matrix::zeros(field, 2 * scalar.rows(), 2 * scalar.cols());
                        m.set_block(0, 0, &scalar);
                        m.set_block(scalar.rows(), scalar.cols(), &scalar);
                        m
                    }
                };
                blocks.insert(k, block);
            }
        }
    }
    Ok(GradedOperator::new(ctx, space, shift, blocks))
}

/// Matrix of a polynomial or group letter from `M_k` to `M_{k + shift}`.
fn scalar_block(ctx: &ModuleContext, letter: Letter, k: usize) -> Matrix {
    let field = ctx.field();
    let d = ctx.d();
    let rows = ctx.dim(k as i64 + letter.shift());
    let cols = ctx.dim(k as i64);
    let mut m = Matrix::zeros(field, rows, cols);
    let one = Cyclotomic::one(field);
    match letter {
        Letter::Z | Letter::Zbar => {
            for idx in 0..cols {
                let (_, b, v) = ctx.monomial(k, idx);
                let nb = if letter == Letter::Z { b } else { b + 1 };
                m.set(nb * d + v, idx, one.clone());
            }
        }
        Letter::Group(g) => {
            let tau_g = ctx.irrep_matrix(g);
            for idx in 0..cols {
                let (a, b, v) = ctx.monomial(k, idx);
                let phase = omega(field, ctx.m(), g.index as i64 * (a as i64 - b as i64));
                let nb = match g.kind {
                    Kind::Rotation => b,
                    Kind::Reflection => a,
                };
                for w in 0..d {
                    let t = tau_g.get(w, v);
                    if !t.is_zero() {
                        m.set(nb * d + w, idx, &phase * t);
                    }
                }
            }
        }
        Letter::Zeta | Letter::ZetaBar => {
            let var = if letter == Letter::Zeta { Var::Z } else { Var::Zbar };
            for idx in 0..cols {
                let (a, b, v) = ctx.monomial(k, idx);
                let image = ctx.dunkl_apply(var, &ModuleElement::monomial(a, b, v, one.clone()));
                if k == 0 {
                    continue;
                }
                for (i, x) in image.to_vector(ctx, k - 1).into_iter().enumerate() {
                    if !x.is_zero() {
                        m.set(i, idx, x);
                    }
                }
            }
        }
        Letter::F | Letter::FDag => unreachable!("spinor letters are handled by build_letter"),
    }
    m
}
