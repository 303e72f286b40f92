//! Harmonic spaces `ker E-` and the spectral theory of `Z0 + epsilon sigma`.
//!
//! Exact statements are made on `lambda^2` through characteristic
//! polynomials; square roots only appear in the float layer.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cherednik::{build_operator, z0_eps, CherednikError, Letter, ModuleContext, ModuleElement, OperatorName, Space};
use crate::dihedral::{sigma_set, SigmaEntry};
use crate::linalg::{unit_vector, Matrix};
use crate::report::{Entry, Status};
use crate::scalars::{Cyclotomic, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarmonicsError {
    #[error(transparent)]
    Cherednik(#[from] CherednikError),
    #[error("resonant parameter at degree {degree}: Pochhammer factor {factor} vanishes")]
    Resonant { degree: usize, factor: String },
    #[error("degree {0} is outside the supported range")]
    Degree(usize),
}

/// Float tolerance for matching eigenvalues against the closed formula.
pub const EIGENVALUE_TOL: f64 = 1e-10;
/// Relative tolerance for eigenvector residuals.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Exact basis of `ker E-` in degree `k`, as coordinate columns.
#[derive(Clone, Debug)]
pub struct HarmonicSpace {
    pub degree: usize,
    pub basis: Vec<Vec<Cyclotomic>>,
}

impl HarmonicSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self, ctx: &ModuleContext) -> Matrix {
        Matrix::from_columns(ctx.field(), ctx.dim(self.degree as i64), &self.basis)
    }

    pub fn elements(&self, ctx: &ModuleContext) -> Vec<ModuleElement> {
        self.basis
            .iter()
            .map(|v| ModuleElement::from_vector(ctx, self.degree, v))
            .collect()
    }
}

fn check_degree(ctx: &ModuleContext, k: usize) -> Result<(), HarmonicsError> {
    if k > ctx.max_degree() {
        return Err(HarmonicsError::Degree(k));
    }
    Ok(())
}

/// `E-` block from degree `k` (a `0`-row matrix when `k < 2`).
pub fn e_minus_block(ctx: &ModuleContext, k: usize) -> Result<Matrix, HarmonicsError> {
    check_degree(ctx, k)?;
    let op = build_operator(ctx, OperatorName::EMinus)?;
    Ok(op.block(k).cloned().expect("E- has every source degree"))
}

pub fn harmonic_basis(ctx: &ModuleContext, k: usize) -> Result<HarmonicSpace, HarmonicsError> {
    let e = e_minus_block(ctx, k)?;
    let basis = if e.rows() == 0 {
        (0..e.cols()).map(|i| unit_vector(ctx.field(), e.cols(), i)).collect()
    } else {
        e.kernel()
    };
    Ok(HarmonicSpace { degree: k, basis })
}

/// The first vanishing factor of `(N_c - k + 1)_j` for `j <= k / 2`.
pub fn resonance(ctx: &ModuleContext, k: usize) -> Option<String> {
    let base = ctx.n_c() - &ctx.scalar(k as i64 - 1);
    (0..k / 2).find_map(|i| {
        let factor = &base + &ctx.scalar(i as i64);
        factor.is_zero().then(|| format!("N_c - {} + {} = 0", k as i64 - 1, i))
    })
}

/// Degree-`k` block of
/// `Proj_k = sum_j (-1)^j / (j! (N_c - k + 1)_j) E+^j E-^j`.
pub fn proj_matrix(ctx: &ModuleContext, k: usize) -> Result<Matrix, HarmonicsError> {
    check_degree(ctx, k)?;
    if let Some(factor) = resonance(ctx, k) {
        return Err(HarmonicsError::Resonant { degree: k, factor });
    }
    let field = ctx.field();
    let e_plus = build_operator(ctx, OperatorName::EPlus)?;
    let e_minus = build_operator(ctx, OperatorName::EMinus)?;
    let n = ctx.dim(k as i64);
    let mut total = Matrix::identity(field, n);
    // lowered = E-^j restricted to degree k
    let mut lowered = Matrix::identity(field, n);
    let mut coef = Cyclotomic::one(field);
    let base = ctx.n_c() - &ctx.scalar(k as i64 - 1);
    for j in 1..=k / 2 {
        lowered = e_minus.block(k - 2 * (j - 1)).expect("E- block").mul(&lowered);
        let mut raised = lowered.clone();
        for t in (1..=j).rev() {
            raised = e_plus.block(k - 2 * t).expect("E+ block").mul(&raised);
        }
        // coef_j = (-1)^j / (j! (base)_j)
        let denom = &ctx.scalar(j as i64) * &(&base + &ctx.scalar(j as i64 - 1));
        coef = -(coef.checked_div(&denom).expect("non-resonant"));
        total = total.add(&raised.scale(&coef));
    }
    Ok(total)
}

/// `Proj_k p` for a homogeneous degree-`k` element.
pub fn proj_k(ctx: &ModuleContext, k: usize, p: &ModuleElement) -> Result<ModuleElement, HarmonicsError> {
    let v = proj_matrix(ctx, k)?.apply(&p.to_vector(ctx, k));
    Ok(ModuleElement::from_vector(ctx, k, &v))
}

/// `Z0 + epsilon sigma(0)` as a graded operator.
pub fn z0_tilde(ctx: &ModuleContext, epsilon: &Rational) -> Result<crate::cherednik::GradedOperator, HarmonicsError> {
    Ok(z0_eps(ctx, &Cyclotomic::from_rational(ctx.field(), epsilon))?)
}

/// Coordinates of `z^k (x) v` (or `zbar^k (x) v`).
fn pure_power(ctx: &ModuleContext, k: usize, bar: bool, v: usize) -> Vec<Cyclotomic> {
    let b = if bar { k } else { 0 };
    unit_vector(ctx.field(), ctx.dim(k as i64), ctx.index(b, v))
}

/// Ordered representatives `z^k (x) z(sigma), zbar^k (x) zbar(sigma)` for
/// each entry of `sigma(tau)_k`.
fn representatives(ctx: &ModuleContext, k: usize, entries: &[SigmaEntry]) -> Vec<Vec<Cyclotomic>> {
    entries
        .iter()
        .flat_map(|e| [pure_power(ctx, k, false, e.z_vector), pure_power(ctx, k, true, e.zbar_vector)])
        .collect()
}

/// The matrix the closed formulas predict for `Z0 + epsilon sigma` modulo
/// the image of `E+`: one block `[[-k+N, -(1-e) s], [(1+e) s, k-N]]` per
/// entry `s` of `sigma(tau)_k`.
pub fn expected_mod_eplus(ctx: &ModuleContext, k: usize, epsilon: &Rational) -> Matrix {
    let field = ctx.field();
    let entries = sigma_set(ctx.tau(), ctx.m(), k as i64, ctx.params());
    let eps = Cyclotomic::from_rational(field, epsilon);
    let one = Cyclotomic::one(field);
    let shifted = &ctx.scalar(k as i64) - ctx.n_c();
    let mut out = Matrix::zeros(field, 2 * entries.len(), 2 * entries.len());
    for (i, e) in entries.iter().enumerate() {
        let block = Matrix::from_rows(
            field,
            2,
            &[
                vec![-&shifted, -&(&(&one - &eps) * &e.value)],
                vec![&(&one + &eps) * &e.value, shifted.clone()],
            ],
        );
        out.set_block(2 * i, 2 * i, &block);
    }
    out
}

/// `Z0 + epsilon sigma` on the projected representatives, expressed in the
/// same representatives. Projection changes a representative only by an
/// element of `image(E+)`, so this is the action modulo `image(E+)`.
pub fn z0_mod_eplus_matrix(ctx: &ModuleContext, k: usize, epsilon: &Rational) -> Result<Matrix, HarmonicsError> {
    if k == 0 {
        return Err(HarmonicsError::Degree(0));
    }
    let entries = sigma_set(ctx.tau(), ctx.m(), k as i64, ctx.params());
    let proj = proj_matrix(ctx, k)?;
    let reps: Vec<Vec<Cyclotomic>> = representatives(ctx, k, &entries).iter().map(|r| proj.apply(r)).collect();
    let basis = Matrix::from_columns(ctx.field(), ctx.dim(k as i64), &reps);
    let z = z0_tilde(ctx, epsilon)?;
    let block = z.block(k).expect("Z0 block");
    let cols: Vec<Vec<Cyclotomic>> = reps
        .iter()
        .map(|h| basis.solve(&block.apply(h)).expect("harmonic representatives span an invariant subspace"))
        .collect();
    Ok(Matrix::from_columns(ctx.field(), reps.len(), &cols))
}

/// `lambda^2 = (k - N_c)^2 - (1 - epsilon^2) s^2` for one entry `s`.
pub fn lambda_squared(ctx: &ModuleContext, k: usize, epsilon: &Rational, s: &Cyclotomic) -> Cyclotomic {
    let field = ctx.field();
    let shifted = &ctx.scalar(k as i64) - ctx.n_c();
    let eps = Cyclotomic::from_rational(field, epsilon);
    let one = Cyclotomic::one(field);
    &(&shifted * &shifted) - &(&(&one - &(&eps * &eps)) * &(s * s))
}

/// Product `prod (t^2 - lambda^2)`, constant term first.
fn expected_charpoly(ctx: &ModuleContext, k: usize, epsilon: &Rational, entries: &[SigmaEntry]) -> Vec<Cyclotomic> {
    let field = ctx.field();
    let eps = Cyclotomic::from_rational(field, epsilon);
    if k == 0 {
        // degree zero: sigma(0) acts on V(tau) with the single value N_c
        let mut p = vec![Cyclotomic::one(field)];
        for _ in 0..ctx.d() {
            p = poly_mul(&p, &[-&(&eps * ctx.n_c()), Cyclotomic::one(field)]);
        }
        return p;
    }
    let mut p = vec![Cyclotomic::one(field)];
    for e in entries {
        let l2 = lambda_squared(ctx, k, epsilon, &e.value);
        p = poly_mul(&p, &[-l2, Cyclotomic::zero(field), Cyclotomic::one(field)]);
    }
    p
}

fn poly_mul(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let field = a[0].field();
    let mut out = vec![Cyclotomic::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// `Z0 + epsilon sigma` restricted to the harmonic space, in its basis.
pub fn restricted_z0(ctx: &ModuleContext, space: &HarmonicSpace, epsilon: &Rational) -> Result<Matrix, HarmonicsError> {
    let z = z0_tilde(ctx, epsilon)?;
    let block = z.block(space.degree).expect("Z0 block");
    let basis = space.matrix(ctx);
    let cols: Vec<Vec<Cyclotomic>> = space
        .basis
        .iter()
        .map(|h| basis.solve(&block.apply(h)).expect("Z0 preserves ker E-"))
        .collect();
    Ok(Matrix::from_columns(ctx.field(), space.dim(), &cols))
}

/// Eigenvalues of a complex matrix through the Schur form.
pub fn float_eigenvalues(a: &DMatrix<Complex64>) -> Vec<Complex64> {
    if a.nrows() == 0 {
        return Vec::new();
    }
    let mut v: Vec<Complex64> = a
        .clone()
        .schur()
        .eigenvalues()
        .map(|e| e.iter().copied().collect())
        .unwrap_or_default();
    sort_complex(&mut v);
    v
}

fn sort_complex(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Largest distance in a greedy nearest-neighbour pairing of two lists.
pub fn pairing_error(found: &[Complex64], expected: &[Complex64]) -> f64 {
    if found.len() != expected.len() {
        return f64::INFINITY;
    }
    let mut left: Vec<Complex64> = expected.to_vec();
    let mut worst: f64 = 0.0;
    for f in found {
        let (idx, dist) = left
            .iter()
            .enumerate()
            .map(|(i, e)| (i, (f - e).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("lists have equal length");
        worst = worst.max(dist);
        left.swap_remove(idx);
    }
    worst
}

/// Spectral data of `Z0 + epsilon sigma` on one harmonic space.
#[derive(Clone, Debug)]
pub struct SpectralDatum {
    pub degree: usize,
    pub epsilon: Rational,
    pub sigma_entries: Vec<SigmaEntry>,
    pub harmonic_dim: usize,
    /// Exact `lambda^2`, one per entry of `sigma(tau)_k` (empty for `k = 0`).
    pub lambda_squared: Vec<Cyclotomic>,
    pub charpoly: Vec<Cyclotomic>,
    pub expected_charpoly: Vec<Cyclotomic>,
    pub charpoly_matches: bool,
    pub eigenvalues: Vec<Complex64>,
    pub expected_eigenvalues: Vec<Complex64>,
    pub float_error: f64,
    pub resonance: Option<String>,
}

impl SpectralDatum {
    pub fn float_matches(&self) -> bool {
        self.float_error <= EIGENVALUE_TOL
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.degree,
            "epsilon": self.epsilon.to_string(),
            "sigma": self.sigma_entries.iter().map(|e| json!({"label": e.label, "value": e.value.to_exact_string()})).collect::<Vec<_>>(),
            "harmonic_dim": self.harmonic_dim,
            "lambda_squared": self.lambda_squared.iter().map(Cyclotomic::to_exact_string).collect::<Vec<_>>(),
            "lambda_squared_real": self.lambda_squared.iter().all(Cyclotomic::is_real),
            "eigenvalues": self.eigenvalues.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
            "expected_eigenvalues": self.expected_eigenvalues.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
            "charpoly_matches": self.charpoly_matches,
            "float_error": self.float_error,
            "resonance": self.resonance,
        })
    }
}

/// Rounded so that reports stay byte-stable across platforms.
pub fn complex_json(z: Complex64) -> Value {
    let r = |x: f64| {
        let v = (x * 1e12).round() / 1e12;
        if v == 0.0 {
            0.0
        } else {
            v
        }
    };
    json!([r(z.re), r(z.im)])
}

pub fn spectrum(ctx: &ModuleContext, k: usize, epsilon: &Rational) -> Result<SpectralDatum, HarmonicsError> {
    let space = harmonic_basis(ctx, k)?;
    let a = restricted_z0(ctx, &space, epsilon)?;
    let entries = sigma_set(ctx.tau(), ctx.m(), k as i64, ctx.params());
    let charpoly = a.charpoly();
    let expected_charpoly = expected_charpoly(ctx, k, epsilon, &entries);
    let lambda_sq: Vec<Cyclotomic> = if k == 0 {
        Vec::new()
    } else {
        entries.iter().map(|e| lambda_squared(ctx, k, epsilon, &e.value)).collect()
    };
    let mut expected_eigenvalues: Vec<Complex64> = if k == 0 {
        let eps = Cyclotomic::from_rational(ctx.field(), epsilon);
        vec![(&eps * ctx.n_c()).to_complex(); ctx.d()]
    } else {
        lambda_sq
            .iter()
            .flat_map(|l| {
                let r = l.to_complex().sqrt();
                [-r, r]
            })
            .collect()
    };
    sort_complex(&mut expected_eigenvalues);
    let eigenvalues = float_eigenvalues(&a.to_complex());
    let float_error = pairing_error(&eigenvalues, &expected_eigenvalues);
    Ok(SpectralDatum {
        degree: k,
        epsilon: epsilon.clone(),
        sigma_entries: entries,
        harmonic_dim: space.dim(),
        lambda_squared: lambda_sq,
        charpoly_matches: charpoly == expected_charpoly,
        charpoly,
        expected_charpoly,
        eigenvalues,
        expected_eigenvalues,
        float_error,
        resonance: resonance(ctx, k),
    })
}

/// One float eigenvector built from the closed formula.
#[derive(Clone, Debug)]
pub struct EigenPair {
    /// `+` for `h^+`, `-` for `h^-`.
    pub sign: char,
    pub sigma_label: String,
    pub lambda: Complex64,
    pub vector: Vec<Complex64>,
    pub residual: f64,
    /// `|zeta h^+| / |h^+|` at `epsilon = -1`, `|zetabar h^-| / |h^-|` at
    /// `epsilon = 1`.
    pub kernel_residual: Option<f64>,
    /// The literal formula gave a (near) zero vector and a float null
    /// vector was used instead.
    pub fallback: bool,
}

/// The root of `lambda^2` that continues `k - N_c` from `c = 0`.
fn lambda_plus(l2: &Cyclotomic, shifted: f64) -> Complex64 {
    let r = l2.to_complex().sqrt();
    if r.im.abs() < 1e-14 && shifted < 0.0 {
        -r
    } else {
        r
    }
}

/// `h(epsilon, s)^+ = Proj[(k - N + lambda+) zbar^k (x) zbar(s) - s (1 - epsilon) z^k (x) z(s)]`
/// and `h(epsilon, s)^- = Proj[(k - N - lambda-) z^k (x) z(s) - s (1 + epsilon) zbar^k (x) zbar(s)]`.
pub fn eigenvectors(ctx: &ModuleContext, k: usize, epsilon: &Rational) -> Result<Vec<EigenPair>, HarmonicsError> {
    if k == 0 {
        return Err(HarmonicsError::Degree(0));
    }
    let field = ctx.field();
    let proj = proj_matrix(ctx, k)?.to_complex();
    let z = z0_tilde(ctx, epsilon)?;
    let zblock = z.block(k).expect("Z0 block").to_complex();
    let eps = Cyclotomic::from_rational(field, epsilon).to_complex().re;
    let shifted = (&ctx.scalar(k as i64) - ctx.n_c()).to_complex().re;
    let zeta = ctx.letter(Space::Scalar, Letter::Zeta)?.block(k).expect("zeta").to_complex();
    let zetabar = ctx.letter(Space::Scalar, Letter::ZetaBar)?.block(k).expect("zetabar").to_complex();
    let n = ctx.dim(k as i64);
    let mut out = Vec::new();
    for e in sigma_set(ctx.tau(), ctx.m(), k as i64, ctx.params()) {
        let s = e.value.to_complex();
        let lp = lambda_plus(&lambda_squared(ctx, k, epsilon, &e.value), shifted);
        let zi = ctx.index(0, e.z_vector);
        let zbi = ctx.index(k, e.zbar_vector);
        let (zc, zbc) = (Complex64::new(shifted, 0.0), s);
        for (sign, lambda) in [('+', lp), ('-', -lp)] {
            let (a, b) = if sign == '+' {
                (-zbc * (1.0 - eps), zc + lambda)
            } else {
                (zc - lambda, -zbc * (1.0 + eps))
            };
            let mut raw = vec![Complex64::new(0.0, 0.0); n];
            raw[zi] += a;
            raw[zbi] += b;
            let mut fallback = false;
            if a.norm() + b.norm() < 1e-12 {
                // null vector of the 2x2 block minus lambda
                let m = [[-zc - lambda, -(1.0 - eps) * s], [(1.0 + eps) * s, zc - lambda]];
                let (x, y) = if m[0][0].norm() + m[0][1].norm() > 1e-12 {
                    (-m[0][1], m[0][0])
                } else if m[1][0].norm() + m[1][1].norm() > 1e-12 {
                    (-m[1][1], m[1][0])
                } else if sign == '+' {
                    (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
                } else {
                    (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
                };
                raw = vec![Complex64::new(0.0, 0.0); n];
                raw[zi] += x;
                raw[zbi] += y;
                fallback = true;
            }
            let h = &proj * nalgebra::DVector::from_vec(raw);
            let hn = h.norm();
            let res = (&zblock * &h - &h * lambda).norm() / hn;
            let kernel_residual = if sign == '+' && (eps + 1.0).abs() < 1e-15 {
                Some((&zeta * &h).norm() / hn)
            } else if sign == '-' && (eps - 1.0).abs() < 1e-15 {
                Some((&zetabar * &h).norm() / hn)
            } else {
                None
            };
            out.push(EigenPair {
                sign,
                sigma_label: e.label.clone(),
                lambda,
                vector: h.iter().copied().collect(),
                residual: res,
                kernel_residual,
                fallback,
            });
        }
    }
    Ok(out)
}

/// Per-degree `(V, u(1,1))` decomposition data and the `su(1,1)` string
/// counting `dim M_k = sum_{k' <= k, k' = k mod 2} dim H_{k'}`.
pub fn scalar_decomposition_report(ctx: &ModuleContext, epsilon: &Rational) -> Result<Vec<Entry>, HarmonicsError> {
    let mut entries = Vec::new();
    let mut dims = Vec::new();
    for k in 0..=ctx.max_degree() {
        let datum = spectrum(ctx, k, epsilon)?;
        dims.push(datum.harmonic_dim);
        let generic = ctx.d() * if k == 0 { 1 } else { 2 };
        let distinct = distinct_count(&datum.eigenvalues, 1e-8);
        let telescoped: usize = (0..=k).filter(|j| (k - j) % 2 == 0).map(|j| dims[j]).sum();
        let ok = telescoped == ctx.dim(k as i64);
        // the strings stop being direct once some degree of the same parity resonates
        let resonant = (0..=k).filter(|j| (k - j) % 2 == 0).find_map(|j| resonance(ctx, j));
        let status = match resonant {
            Some(r) if !ok => Status::Skipped(format!("resonant: {r}")),
            _ => Status::from_bool(ok),
        };
        let mu = (&ctx.scalar(k as i64 + 1) - ctx.n_c()).to_exact_string();
        entries.push(
            Entry::new(format!("decomposition.k{k}"), "M_c(tau) = sum_k H_k (x) L(k + 1 - N_c, lambda)", status).with_data(json!({
                "k": k,
                "harmonic_dim": datum.harmonic_dim,
                "generic_dim": generic,
                "module_dim": ctx.dim(k as i64),
                "telescoped_dim": telescoped,
                "lowest_weight_h": mu,
                "lambda": datum.eigenvalues.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                "distinct_eigenvalues": distinct,
                "fewer_distinct_than_generic": distinct < generic,
            })),
        );
    }
    Ok(entries)
}

/// Number of clusters of values closer than `tol`.
pub fn distinct_count(v: &[Complex64], tol: f64) -> usize {
    let mut reps: Vec<Complex64> = Vec::new();
    for z in v {
        if reps.iter().all(|r| (r - z).norm() > tol) {
            reps.push(*z);
        }
    }
    reps.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Irrep;
    use crate::scalars::{parse_rational, ParamValues};

    fn ctx(m: u32, tau: Irrep, c: &str, max: usize) -> ModuleContext {
        ModuleContext::new(m, tau, ParamValues::uniform(parse_rational(c).unwrap()), max).unwrap()
    }

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn spot_value_lambda_squared() {
        let c = ctx(3, Irrep::Triv, "1/10", 6);
        let d = spectrum(&c, 3, &q("0")).unwrap();
        assert_eq!(d.lambda_squared[0].to_rational(), Some(q("36/5")));
        assert!(d.charpoly_matches);
        assert!(d.float_matches(), "{}", d.float_error);
        assert!((d.eigenvalues[1].re - 2.683281572999748).abs() < 1e-10);
    }

    #[test]
    fn degenerate_radical_is_rational() {
        let c = ctx(4, Irrep::Triv, "1/10", 4);
        let d = spectrum(&c, 1, &q("0")).unwrap();
        assert_eq!(d.lambda_squared[0].to_rational(), Some(q("9/25")));
    }

    #[test]
    fn classical_harmonics() {
        let c = ctx(3, Irrep::Triv, "0", 6);
        for k in 1..=6 {
            let h = harmonic_basis(&c, k).unwrap();
            assert_eq!(h.dim(), 2);
            let d = spectrum(&c, k, &q("0")).unwrap();
            assert!(d.charpoly_matches);
            assert_eq!(d.lambda_squared[0], c.scalar((k * k) as i64));
        }
    }

    #[test]
    fn projection_kills_e_minus_and_is_idempotent() {
        let c = ctx(5, Irrep::Rho(1), "1/4", 8);
        for k in 0..=8 {
            let p = proj_matrix(&c, k).unwrap();
            assert!(e_minus_block(&c, k).unwrap().mul(&p).is_zero());
            assert_eq!(p.mul(&p), p);
        }
    }

    #[test]
    fn classical_projection_of_z_zbar_vanishes() {
        let c = ctx(3, Irrep::Triv, "0", 4);
        let p = ModuleElement::monomial(1, 1, 0, Cyclotomic::one(c.field()));
        assert!(proj_k(&c, 2, &p).unwrap().is_zero());
    }

    #[test]
    fn resonance_is_detected() {
        let c = ctx(3, Irrep::Triv, "1/3", 6);
        assert!(matches!(proj_matrix(&c, 2), Err(HarmonicsError::Resonant { degree: 2, .. })));
    }

    #[test]
    fn mod_eplus_matrix_matches_closed_form() {
        for (m, tau, c) in [(3, Irrep::Triv, "1/10"), (4, Irrep::Rho(1), "1/7"), (6, Irrep::Chi1, "1/10"), (5, Irrep::Rho(2), "1/3")] {
            let cx = ctx(m, tau, c, 8);
            for eps in ["0", "1", "-1", "1/2"] {
                for k in 1..=6 {
                    let got = z0_mod_eplus_matrix(&cx, k, &q(eps)).unwrap();
                    assert_eq!(got, expected_mod_eplus(&cx, k, &q(eps)), "m={m} {tau} k={k} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn eigenvectors_and_dunkl_kernels() {
        let c = ctx(3, Irrep::Triv, "1/10", 6);
        for eps in ["-1", "0", "1", "1/2"] {
            for pair in eigenvectors(&c, 3, &q(eps)).unwrap() {
                assert!(pair.residual < RESIDUAL_TOL, "{pair:?}");
                if let Some(r) = pair.kernel_residual {
                    assert!(r < RESIDUAL_TOL, "{pair:?}");
                }
            }
        }
        let c = ctx(5, Irrep::Rho(1), "1/4", 4);
        for pair in eigenvectors(&c, 2, &q("0")).unwrap() {
            assert!(pair.residual < RESIDUAL_TOL, "{pair:?}");
        }
    }

    #[test]
    fn rho_degree_zero_is_zero() {
        let c = ctx(4, Irrep::Rho(1), "1/10", 2);
        let d = spectrum(&c, 0, &q("1/2")).unwrap();
        assert!(d.charpoly_matches);
        assert!(d.eigenvalues.iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn telescoping() {
        let c = ctx(4, Irrep::Rho(1), "1/10", 6);
        let entries = scalar_decomposition_report(&c, &q("0")).unwrap();
        assert!(entries.iter().all(|e| e.status.is_pass()));
    }
}
