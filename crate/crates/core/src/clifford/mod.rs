//! The rank-one Clifford layer: `f`, `fdag`, the spinor space `S = <1, fdag>`
//! and the `u(2|1)` realisation on `K_c(tau) = M_c(tau) (x) S`.
//!
//! Spinor degree is stored structurally. A degree-`k` block of an operator on
//! `K` acts on `M_k (x) 1` followed by `M_k (x) fdag`.

mod monogenic;
mod superalgebra;

use std::fmt;

use thiserror::Error;

use crate::cherednik::{CherednikError, Expr, Letter, ModuleContext, ModuleElement};
use crate::harmonics::HarmonicsError;
use crate::linalg::Matrix;
use crate::scalars::{Cyclotomic, CyclotomicField};

pub use monogenic::{
    closed_monogenic_basis, harmonic_eigenspace, lambdas, mong_decompose, monogenics, random_harmonic_inputs, spinor_decomposition_report, MongComponents,
    MonogenicSpace,
};
pub use superalgebra::{
    omega_c, rho, rotation_lift, super_generators, twist_check, verify_scasimir, verify_superalgebra, SuperGenerators,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error(transparent)]
    Cherednik(#[from] CherednikError),
    #[error(transparent)]
    Harmonics(#[from] HarmonicsError),
    #[error("tau_s for s_{0} does not act as diag(1, -1) on the spinor space")]
    TauNotReflection(i64),
    #[error("degenerate denominator {name} = 0 in the monogenic decomposition")]
    DegenerateDenominator { name: String },
    #[error("input is not a Z1 eigenvector in ker E- at degree {k}, spinor degree {l}")]
    NotHarmonic { k: usize, l: usize },
}

/// An element of the Clifford algebra on `(1, f, fdag, fdag f)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    coeffs: [Cyclotomic; 4],
}

impl CliffordElement {
    pub fn new(coeffs: [Cyclotomic; 4]) -> Self {
        CliffordElement { coeffs }
    }

    fn basis(field: &'static CyclotomicField, i: usize) -> Self {
        let mut c: [Cyclotomic; 4] = std::array::from_fn(|_| Cyclotomic::zero(field));
        c[i] = Cyclotomic::one(field);
        CliffordElement { coeffs: c }
    }

    pub fn zero(field: &'static CyclotomicField) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|_| Cyclotomic::zero(field)),
        }
    }

    pub fn one(field: &'static CyclotomicField) -> Self {
        Self::basis(field, 0)
    }

    pub fn f(field: &'static CyclotomicField) -> Self {
        Self::basis(field, 1)
    }

    pub fn fdag(field: &'static CyclotomicField) -> Self {
        Self::basis(field, 2)
    }

    pub fn fdag_f(field: &'static CyclotomicField) -> Self {
        Self::basis(field, 3)
    }

    /// `e1 = f + fdag`.
    pub fn e1(field: &'static CyclotomicField) -> Self {
        Self::f(field).add(&Self::fdag(field))
    }

    /// `e2 = i (f - fdag)`.
    pub fn e2(field: &'static CyclotomicField) -> Self {
        Self::f(field).sub(&Self::fdag(field)).scale(&Cyclotomic::i(field))
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.coeffs[0].field()
    }

    pub fn coefficients(&self) -> &[Cyclotomic; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        CliffordElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * s),
        }
    }

    /// Product from `f^2 = fdag^2 = 0` and `f fdag + fdag f = 1`.
    pub fn mul(&self, other: &Self) -> Self {
        // TABLE[i][j] = basis_i * basis_j as coefficients on (1, f, fdag, fdag f)
        const TABLE: [[[i64; 4]; 4]; 4] = [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, 1, 0, 0], [0, 0, 0, 0], [1, 0, 0, -1], [0, 1, 0, 0]],
            [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
            [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        ];
        let field = self.field();
        let mut out = Self::zero(field);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (t, &n) in TABLE[i][j].iter().enumerate() {
                    if n != 0 {
                        out.coeffs[t] += &ab.scale_int(n);
                    }
                }
            }
        }
        out
    }

    /// Action on a spinor `(coefficient of 1, coefficient of fdag)`.
    pub fn apply_spinor(&self, s: &[Cyclotomic; 2]) -> [Cyclotomic; 2] {
        let [c1, cf, cfd, cn] = &self.coeffs;
        // 1 -> (c1, cfd); fdag -> (cf, c1 + cn)
        [&(c1 * &s[0]) + &(cf * &s[1]), &(cfd * &s[0]) + &(&(c1 + cn) * &s[1])]
    }

    /// Matrix on the spinor basis `(1, fdag)`.
    pub fn spinor_matrix(&self) -> Matrix {
        let field = self.field();
        let one = [Cyclotomic::one(field), Cyclotomic::zero(field)];
        let fd = [Cyclotomic::zero(field), Cyclotomic::one(field)];
        let a = self.apply_spinor(&one);
        let b = self.apply_spinor(&fd);
        Matrix::from_columns(field, 2, &[a.to_vec(), b.to_vec()])
    }

    /// The same element as an operator expression in `f` and `fdag`.
    pub fn to_expr(&self) -> Expr {
        let field = self.field();
        let words: [&[Letter]; 4] = [&[], &[Letter::F], &[Letter::FDag], &[Letter::FDag, Letter::F]];
        let mut out = Expr::zero(field);
        for (w, c) in words.iter().zip(&self.coeffs) {
            out = out.add(&Expr::word(field, w).scale(c));
        }
        out
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["1", "f", "fdag", "fdag f"];
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("({}) {n}", c.to_exact_string()))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `(<x, alpha_j>, <y, alpha_j>) = (sin t, -cos t)` with `t = pi j / m`,
/// the unit root orthogonal to the mirror of `s_j`.
pub fn root_pairings(field: &'static CyclotomicField, m: u32, j: i64) -> (Cyclotomic, Cyclotomic) {
    let l = field.order() as i64;
    let e = Cyclotomic::root_of_unity(field, j * l / (2 * m as i64));
    let e_inv = e.conj();
    let two = Cyclotomic::from_int(field, 2);
    let two_i = &two * &Cyclotomic::i(field);
    let sin = (&e - &e_inv).checked_div(&two_i).expect("2i is invertible");
    let cos = (&e + &e_inv).checked_div(&two).expect("2 is invertible");
    (sin, -cos)
}

/// `alpha_j = <x, alpha> e1 + <y, alpha> e2`.
pub fn root_vector(field: &'static CyclotomicField, m: u32, j: i64) -> CliffordElement {
    let (ax, ay) = root_pairings(field, m, j);
    CliffordElement::e1(field).scale(&ax).add(&CliffordElement::e2(field).scale(&ay))
}

/// `tau_s = 1 - 2 alpha^dag pi+(a^T) / <a, alpha>` with the coroot
/// `a = 2 alpha / B(alpha, alpha)`. Checked to be `diag(1, -1)` on `S`.
pub fn tau_s(field: &'static CyclotomicField, m: u32, j: i64) -> Result<CliffordElement, CliffordError> {
    let (ax, ay) = root_pairings(field, m, j);
    let i = Cyclotomic::i(field);
    // <z, alpha> and <zbar, alpha> for z = x + i y
    let z_alpha = &ax + &(&i * &ay);
    let zbar_alpha = &ax - &(&i * &ay);
    let b_alpha = &(&ax * &ax) + &(&ay * &ay);
    let two = Cyclotomic::from_int(field, 2);
    let coroot = two.checked_div(&b_alpha).expect("roots are nonzero");
    let pairing = &coroot * &b_alpha;
    let alpha_dag = CliffordElement::fdag(field).scale(&zbar_alpha);
    let pi_plus_a = CliffordElement::f(field).scale(&(&coroot * &z_alpha));
    let correction = alpha_dag
        .mul(&pi_plus_a)
        .scale(&two.checked_div(&pairing).expect("pairing is nonzero"));
    let tau = CliffordElement::one(field).sub(&correction);
    let expected = Matrix::from_rows(
        field,
        2,
        &[
            vec![Cyclotomic::one(field), Cyclotomic::zero(field)],
            vec![Cyclotomic::zero(field), Cyclotomic::from_int(field, -1)],
        ],
    );
    if tau.spinor_matrix() != expected {
        return Err(CliffordError::TauNotReflection(j));
    }
    Ok(tau)
}

/// An element of `K_c(tau)`: the coefficients of `1` and of `fdag`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpinorModuleElement {
    pub comp0: ModuleElement,
    pub comp1: ModuleElement,
}

impl SpinorModuleElement {
    pub fn new(comp0: ModuleElement, comp1: ModuleElement) -> Self {
        SpinorModuleElement { comp0, comp1 }
    }

    pub fn is_zero(&self) -> bool {
        self.comp0.is_zero() && self.comp1.is_zero()
    }

    /// Coordinates in the degree-`k` block of `K`.
    pub fn to_vector(&self, ctx: &ModuleContext, k: usize) -> Vec<Cyclotomic> {
        let mut v = self.comp0.to_vector(ctx, k);
        v.extend(self.comp1.to_vector(ctx, k));
        v
    }

    pub fn from_vector(ctx: &ModuleContext, k: usize, v: &[Cyclotomic]) -> Self {
        let n = ctx.dim(k as i64);
        SpinorModuleElement {
            comp0: ModuleElement::from_vector(ctx, k, &v[..n]),
            comp1: ModuleElement::from_vector(ctx, k, &v[n..]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field_for;

    #[test]
    fn canonical_anticommutator() {
        let f = field_for(3);
        let a = CliffordElement::f(f);
        let b = CliffordElement::fdag(f);
        assert_eq!(a.mul(&b).add(&b.mul(&a)), CliffordElement::one(f));
        assert!(a.mul(&a).is_zero());
        assert!(b.mul(&b).is_zero());
    }

    #[test]
    fn generators_square_to_one_and_anticommute() {
        let f = field_for(5);
        let (e1, e2) = (CliffordElement::e1(f), CliffordElement::e2(f));
        assert_eq!(e1.mul(&e1), CliffordElement::one(f));
        assert_eq!(e2.mul(&e2), CliffordElement::one(f));
        assert!(e1.mul(&e2).add(&e2.mul(&e1)).is_zero());
        let ie1e2 = e1.mul(&e2).scale(&Cyclotomic::i(f));
        let expected = CliffordElement::one(f).sub(&CliffordElement::fdag_f(f).scale(&Cyclotomic::from_int(f, 2)));
        assert_eq!(ie1e2, expected);
    }

    #[test]
    fn associativity_on_basis() {
        let f = field_for(4);
        let basis: Vec<CliffordElement> = (0..4).map(|i| CliffordElement::basis(f, i)).collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn spinor_action() {
        let f = field_for(3);
        let one = [Cyclotomic::one(f), Cyclotomic::zero(f)];
        let fd = [Cyclotomic::zero(f), Cyclotomic::one(f)];
        assert_eq!(CliffordElement::f(f).apply_spinor(&fd), one);
        assert!(CliffordElement::f(f).apply_spinor(&one).iter().all(Cyclotomic::is_zero));
        assert_eq!(CliffordElement::fdag(f).apply_spinor(&one), fd);
        let half = Cyclotomic::from_int(f, 2).inv().unwrap();
        let z2 = CliffordElement::fdag_f(f).sub(&CliffordElement::one(f).scale(&half));
        assert_eq!(z2.apply_spinor(&fd), [Cyclotomic::zero(f), half.clone()]);
        assert_eq!(z2.apply_spinor(&one), [-&half, Cyclotomic::zero(f)]);
    }

    #[test]
    fn roots_are_unit_and_tau_is_a_reflection() {
        for m in [3u32, 4, 5, 6, 8] {
            let f = crate::scalars::field_for(m);
            for j in 1..=m as i64 {
                let a = root_vector(f, m, j);
                assert_eq!(a.mul(&a), CliffordElement::one(f));
                tau_s(f, m, j).unwrap();
            }
        }
    }
}
