//! Per-order tables for the cyclotomic field `Q(zeta_L)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use super::ScalarError;

/// Static data for one cyclotomic field: the cyclotomic polynomial, the
/// reduced power basis expansion of every `L`-th root of unity and its
/// standard complex embedding.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: Vec<i64>,
    powers: Vec<Vec<i64>>,
    embedding: Vec<Complex64>,
}

/// Fields are interned per order, so the order identifies the field.
impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();

impl CyclotomicField {
    /// Returns the (interned) field of `L`-th roots of unity.
    ///
    /// `L` has to be a positive multiple of 4 so that `i` is always available.
    pub fn get(order: u32) -> Result<&'static CyclotomicField, ScalarError> {
        if order == 0 || order % 4 != 0 {
            return Err(ScalarError::InvalidOrder(order));
        }
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = registry.lock().expect("cyclotomic registry poisoned");
        if let Some(field) = guard.get(&order) {
            return Ok(field);
        }
        let field: &'static CyclotomicField = Box::leak(Box::new(Self::build(order)));
        guard.insert(order, field);
        Ok(field)
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order as usize);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![0i64; degree];
        current[0] = 1;
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x and reduce with the monic modulus
            let lead = current[degree - 1];
            for i in (1..degree).rev() {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if lead != 0 {
                for i in 0..degree {
                    current[i] -= lead * modulus[i];
                }
            }
        }
        let embedding = (0..degree)
            .map(|e| Complex64::from_polar(1.0, std::f64::consts::TAU * e as f64 / order as f64))
            .collect();
        CyclotomicField {
            order,
            degree,
            modulus,
            powers,
            embedding,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dimension `phi(L)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the `L`-th cyclotomic polynomial, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Power-basis coordinates of `zeta_L^e`.
    pub fn power(&self, e: i64) -> &[i64] {
        let l = self.order as i64;
        &self.powers[e.rem_euclid(l) as usize]
    }

    pub(crate) fn basis_embedding(&self) -> &[Complex64] {
        &self.embedding
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let coef = rem[i + dd];
        quot[i] = coef;
        if coef != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= coef * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0));
    quot
}

/// `Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}`.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut numerator = vec![1i64];
    let mut denominator = vec![1i64];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut factor = vec![0i64; d + 1];
        factor[0] = -1;
        factor[d] = 1;
        match mobius(n / d) {
            1 => numerator = poly_mul(&numerator, &factor),
            -1 => denominator = poly_mul(&denominator, &factor),
            _ => {}
        }
    }
    poly_div_exact(&numerator, &denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn degrees_are_euler_phi() {
        for (l, phi) in [(4, 2), (8, 4), (12, 4), (16, 8), (20, 8), (24, 8), (28, 12), (44, 20)] {
            assert_eq!(CyclotomicField::get(l).unwrap().degree(), phi, "L = {l}");
        }
    }

    #[test]
    fn rejects_orders_without_i() {
        assert!(CyclotomicField::get(6).is_err());
        assert!(CyclotomicField::get(0).is_err());
    }

    #[test]
    fn powers_wrap_around() {
        let f = CyclotomicField::get(12).unwrap();
        assert_eq!(f.power(12), f.power(0));
        assert_eq!(f.power(-1), f.power(11));
        // zeta_12^6 = -1
        assert_eq!(f.power(6), &[-1, 0, 0, 0]);
    }
}
