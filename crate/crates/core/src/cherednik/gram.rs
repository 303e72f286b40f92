use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::dihedral::Irrep;
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

use super::expr::Letter;
use super::operator::Space;
use super::{CherednikError, ModuleContext};

/// Gram matrix of the contravariant form on `M_c(tau)_k`.
///
/// Entry `(i, j)` is `beta(b_i, b_j)` for the monomial basis. The form is
/// linear in the first slot, and `beta(z^a zbar^b (x) u, q)` is the
/// `V(tau)` inner product of `u` with the degree-zero part of
/// `(2 zeta)^a (2 zetabar)^b q`.
pub fn contravariant_gram(ctx: &ModuleContext, k: usize) -> Result<Matrix, CherednikError> {
    if k > ctx.max_degree() {
        return Err(CherednikError::DegreeOverflow {
            degree: k,
            max: ctx.max_degree(),
        });
    }
    let field = ctx.field();
    let zeta = ctx.letter(Space::Scalar, Letter::Zeta)?;
    let zetabar = ctx.letter(Space::Scalar, Letter::ZetaBar)?;
    let d = ctx.d();
    let n = ctx.dim(k as i64);
    let scale = Cyclotomic::from_int(field, 1 << k);

    // lowered[b] = zetabar^b on degree k
    let mut lowered = vec![Matrix::identity(field, n)];
    for t in 0..k {
        let next = zetabar.block(k - t).expect("zetabar block").mul(&lowered[t]);
        lowered.push(next);
    }
    let mut g = Matrix::zeros(field, n, n);
    for (b, start) in lowered.iter().enumerate() {
        let mut m = start.clone();
        for t in (1..=k - b).rev() {
            m = zeta.block(t).expect("zeta block").mul(&m);
        }
        for v in 0..d {
            let row = ctx.index(b, v);
            for j in 0..n {
                g.set(row, j, (&scale * m.get(v, j)).conj());
            }
        }
    }
    Ok(g)
}

/// `beta(p, q)` for coordinate vectors of the same degree.
pub fn beta(gram: &Matrix, p: &[Cyclotomic], q: &[Cyclotomic]) -> Cyclotomic {
    let field = gram.field();
    let mut acc = Cyclotomic::zero(field);
    for (i, pi) in p.iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        for (j, qj) in q.iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            acc += &(&(pi * &qj.conj()) * gram.get(i, j));
        }
    }
    acc
}

/// Matrix `T` with `theta(x) = T conj(x)` on degree `k`.
///
/// `theta` swaps `z` and `zbar`, conjugates coefficients and acts on
/// `V(tau)` by conjugation, which for `rho` also swaps the basis vectors.
pub fn theta_matrix(ctx: &ModuleContext, k: usize) -> Matrix {
    let field = ctx.field();
    let n = ctx.dim(k as i64);
    let mut t = Matrix::zeros(field, n, n);
    for idx in 0..n {
        let (a, _, v) = ctx.monomial(k, idx);
        let w = match ctx.tau() {
            Irrep::Rho(_) => 1 - v,
            _ => v,
        };
        t.set(ctx.index(a, w), idx, Cyclotomic::one(field));
    }
    t
}

/// Applies `theta` to a coordinate vector.
pub fn theta(ctx: &ModuleContext, k: usize, x: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let conj: Vec<Cyclotomic> = x.iter().map(Cyclotomic::conj).collect();
    theta_matrix(ctx, k).apply(&conj)
}

/// Float diagnostics of one Gram block.
#[derive(Clone, Debug, PartialEq)]
pub struct GramSummary {
    pub degree: usize,
    pub hermitian: bool,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

impl GramSummary {
    pub fn compute(ctx: &ModuleContext, k: usize) -> Result<Self, CherednikError> {
        let g = contravariant_gram(ctx, k)?;
        let (lo, hi) = hermitian_extremes(&g.to_complex());
        Ok(GramSummary {
            degree: k,
            hermitian: g.is_hermitian(),
            min_eigenvalue: lo,
            max_eigenvalue: hi,
        })
    }

    pub fn positive(&self, tol: f64) -> bool {
        self.hermitian && self.min_eigenvalue > tol
    }
}

/// Smallest and largest eigenvalue of a Hermitian matrix, through the real
/// symmetric embedding `[[A, -B], [B, A]]` (every eigenvalue doubled).
pub fn hermitian_extremes(h: &DMatrix<Complex64>) -> (f64, f64) {
    let n = h.nrows();
    if n == 0 {
        return (f64::INFINITY, f64::NEG_INFINITY);
    }
    let big = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = h[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let eig = big.symmetric_eigen().eigenvalues;
    (eig.min(), eig.max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_rational, ParamValues};

    fn ctx(m: u32, tau: Irrep, c: &str) -> ModuleContext {
        ModuleContext::new(m, tau, ParamValues::uniform(parse_rational(c).unwrap()), 8).unwrap()
    }

    #[test]
    fn classical_degree_one_is_twice_identity() {
        let c = ctx(3, Irrep::Triv, "0");
        let g = contravariant_gram(&c, 1).unwrap();
        assert_eq!(g, Matrix::scalar(c.field(), 2, &c.scalar(2)));
        assert_eq!(contravariant_gram(&c, 0).unwrap(), Matrix::identity(c.field(), 1));
    }

    #[test]
    fn small_parameter_is_positive() {
        let c = ctx(3, Irrep::Triv, "1/10");
        for k in 0..=8 {
            let s = GramSummary::compute(&c, k).unwrap();
            assert!(s.positive(1e-8), "{s:?}");
        }
    }

    #[test]
    fn theta_is_an_involution() {
        let c = ctx(5, Irrep::Rho(2), "1/4");
        let x: Vec<Cyclotomic> = (0..c.dim(3)).map(|i| Cyclotomic::root_of_unity(c.field(), i as i64)).collect();
        assert_eq!(theta(&c, 3, &theta(&c, 3, &x)), x);
    }
}
