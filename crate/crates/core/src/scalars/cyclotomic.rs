//! Exact elements of `Q(zeta_L)` in the reduced power basis.
//!
//! Values are stored as an integer numerator vector over a common positive
//! denominator, in lowest terms. Arithmetic runs on `i128` with overflow
//! checks and transparently falls back to `BigInt` when a result does not
//! fit; results are demoted back to the machine-word form whenever they fit,
//! so the representation of every value is canonical.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use super::field::CyclotomicField;
use super::ScalarError;

type SmallNums = SmallVec<[i64; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Small { num: SmallNums, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

/// An exact element of the cyclotomic field `Q(zeta_L)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CyclotomicField,
    repr: Repr,
}

mod kernel {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    use super::super::field::CyclotomicField;

    /// Integer backends the generic kernels run on.
    pub(super) trait Int: Clone {
        fn zero() -> Self;
        fn from_i64(v: i64) -> Self;
        fn is_zero(&self) -> bool;
        fn is_one(&self) -> bool;
        fn add(&self, o: &Self) -> Option<Self>;
        fn sub(&self, o: &Self) -> Option<Self>;
        fn mul(&self, o: &Self) -> Option<Self>;
        fn mul_small(&self, k: i64) -> Option<Self>;
        fn gcd(&self, o: &Self) -> Option<Self>;
        fn div_exact(&self, o: &Self) -> Self;
    }

    impl Int for i128 {
        fn zero() -> Self {
            0
        }
        fn from_i64(v: i64) -> Self {
            v as i128
        }
        fn is_zero(&self) -> bool {
            *self == 0
        }
        fn is_one(&self) -> bool {
            *self == 1
        }
        fn add(&self, o: &Self) -> Option<Self> {
            self.checked_add(*o)
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            self.checked_sub(*o)
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            self.checked_mul(*o)
        }
        fn mul_small(&self, k: i64) -> Option<Self> {
            self.checked_mul(k as i128)
        }
        fn gcd(&self, o: &Self) -> Option<Self> {
            if *self == i128::MIN || *o == i128::MIN {
                return None;
            }
            Some(Integer::gcd(self, o))
        }
        fn div_exact(&self, o: &Self) -> Self {
            self / o
        }
    }

    impl Int for BigInt {
        fn zero() -> Self {
            Zero::zero()
        }
        fn from_i64(v: i64) -> Self {
            BigInt::from(v)
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
        }
        fn is_one(&self) -> bool {
            One::is_one(self)
        }
        fn add(&self, o: &Self) -> Option<Self> {
            Some(self + o)
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            Some(self - o)
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            Some(self * o)
        }
        fn mul_small(&self, k: i64) -> Option<Self> {
            Some(self * k)
        }
        fn gcd(&self, o: &Self) -> Option<Self> {
            Some(Integer::gcd(self, o))
        }
        fn div_exact(&self, o: &Self) -> Self {
            self / o
        }
    }

    pub(super) fn normalize<T: Int>(mut num: Vec<T>, den: T) -> Option<(Vec<T>, T)> {
        if den.is_one() {
            return Some((num, den));
        }
        if num.iter().all(Int::is_zero) {
            return Some((num, T::from_i64(1)));
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x)?;
            }
        }
        if g.is_one() {
            return Some((num, den));
        }
        for x in num.iter_mut() {
            if !x.is_zero() {
                *x = x.div_exact(&g);
            }
        }
        Some((num, den.div_exact(&g)))
    }

    pub(super) fn add_kernel<T: Int>(an: &[T], ad: &T, bn: &[T], bd: &T, negate_b: bool) -> Option<(Vec<T>, T)> {
        let combine = |x: &T, y: &T| if negate_b { x.sub(y) } else { x.add(y) };
        if ad.is_one() && bd.is_one() {
            let num = an
                .iter()
                .zip(bn)
                .map(|(x, y)| combine(x, y))
                .collect::<Option<Vec<_>>>()?;
            return Some((num, T::from_i64(1)));
        }
        let g = ad.gcd(bd)?;
        let ad_red = ad.div_exact(&g);
        let bd_red = bd.div_exact(&g);
        let mut num = Vec::with_capacity(an.len());
        for (x, y) in an.iter().zip(bn) {
            let left = if x.is_zero() { T::zero() } else { x.mul(&bd_red)? };
            let right = if y.is_zero() { T::zero() } else { y.mul(&ad_red)? };
            num.push(combine(&left, &right)?);
        }
        let den = ad.mul(&bd_red)?;
        normalize(num, den)
    }

    pub(super) fn mul_kernel<T: Int>(
        field: &CyclotomicField,
        an: &[T],
        ad: &T,
        bn: &[T],
        bd: &T,
    ) -> Option<(Vec<T>, T)> {
        let phi = field.degree();
        let mut conv: Vec<T> = vec![T::zero(); 2 * phi - 1];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] = conv[i + j].add(&x.mul(y)?)?;
            }
        }
        let mut num: Vec<T> = conv[..phi].to_vec();
        for e in phi..2 * phi - 1 {
            let t = &conv[e];
            if t.is_zero() {
                continue;
            }
            for (i, p) in field.power(e as i64).iter().enumerate() {
                if *p != 0 {
                    num[i] = num[i].add(&t.mul_small(*p)?)?;
                }
            }
        }
        let den = ad.mul(bd)?;
        normalize(num, den)
    }

    pub(super) fn conj_kernel<T: Int>(field: &CyclotomicField, an: &[T]) -> Option<Vec<T>> {
        let mut num = vec![T::zero(); an.len()];
        for (e, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, p) in field.power(-(e as i64)).iter().enumerate() {
                if *p != 0 {
                    num[i] = num[i].add(&x.mul_small(*p)?)?;
                }
            }
        }
        Some(num)
    }
}

use kernel::{add_kernel, conj_kernel, mul_kernel, normalize};

impl Repr {
    fn from_i128(num: Vec<i128>, den: i128) -> Repr {
        let fits = |v: &i128| i64::try_from(*v).is_ok();
        if fits(&den) && num.iter().all(fits) {
            Repr::Small {
                num: num.into_iter().map(|v| v as i64).collect(),
                den: den as i64,
            }
        } else {
            Repr::Big {
                num: num.into_iter().map(BigInt::from).collect(),
                den: BigInt::from(den),
            }
        }
    }

    fn from_big(num: Vec<BigInt>, den: BigInt) -> Repr {
        let small_den = den.to_i64();
        let small_num: Option<SmallNums> = num.iter().map(|v| v.to_i64()).collect();
        match (small_num, small_den) {
            (Some(num), Some(den)) => Repr::Small { num, den },
            _ => Repr::Big { num, den },
        }
    }

    fn wide(&self) -> Option<(Vec<i128>, i128)> {
        match self {
            Repr::Small { num, den } => Some((num.iter().map(|v| *v as i128).collect(), *den as i128)),
            Repr::Big { .. } => None,
        }
    }

    fn big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { num, den } => (num.iter().map(|v| BigInt::from(*v)).collect(), BigInt::from(*den)),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Repr::Small { num, .. } => num.iter().all(|v| *v == 0),
            Repr::Big { num, .. } => num.iter().all(Zero::is_zero),
        }
    }
}

/// Runs a binary kernel on the fast path first, then on `BigInt`.
fn binary(
    a: &Repr,
    b: &Repr,
    fast: impl Fn(&[i128], &i128, &[i128], &i128) -> Option<(Vec<i128>, i128)>,
    slow: impl Fn(&[BigInt], &BigInt, &[BigInt], &BigInt) -> Option<(Vec<BigInt>, BigInt)>,
) -> Repr {
    if let (Some((an, ad)), Some((bn, bd))) = (a.wide(), b.wide()) {
        if let Some((num, den)) = fast(&an, &ad, &bn, &bd) {
            return Repr::from_i128(num, den);
        }
    }
    let (an, ad) = a.big();
    let (bn, bd) = b.big();
    let (num, den) = slow(&an, &ad, &bn, &bd).expect("bigint arithmetic cannot overflow");
    Repr::from_big(num, den)
}

impl Cyclotomic {
    pub fn zero(field: &'static CyclotomicField) -> Self {
        Cyclotomic {
            field,
            repr: Repr::Small {
                num: SmallVec::from_elem(0, field.degree()),
                den: 1,
            },
        }
    }

    pub fn one(field: &'static CyclotomicField) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &'static CyclotomicField, v: i64) -> Self {
        let mut num: SmallNums = SmallVec::from_elem(0, field.degree());
        num[0] = v;
        Cyclotomic {
            field,
            repr: Repr::Small { num, den: 1 },
        }
    }

    pub fn from_rational(field: &'static CyclotomicField, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = q.numer().clone();
        Cyclotomic {
            field,
            repr: Repr::from_big(num, q.denom().clone()),
        }
    }

    /// Builds an element from rational power-basis coordinates.
    pub fn from_coefficients(field: &'static CyclotomicField, coeffs: &[BigRational]) -> Self {
        assert_eq!(coeffs.len(), field.degree(), "coefficient vector has the wrong length");
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        let (num, den) = normalize(num, den).expect("bigint");
        Cyclotomic {
            field,
            repr: Repr::from_big(num, den),
        }
    }

    /// `zeta_L^k` for the field's order `L`.
    pub fn root_of_unity(field: &'static CyclotomicField, k: i64) -> Self {
        Cyclotomic {
            field,
            repr: Repr::Small {
                num: field.power(k).iter().copied().collect(),
                den: 1,
            },
        }
    }

    /// The imaginary unit `zeta_L^{L/4}`.
    pub fn i(field: &'static CyclotomicField) -> Self {
        Self::root_of_unity(field, field.order() as i64 / 4)
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|v| *v == 0),
            Repr::Big { .. } => false,
        }
    }

    /// True iff the element is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// True iff the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num[1..].iter().all(|v| *v == 0),
            Repr::Big { num, .. } => num[1..].iter().all(Zero::is_zero),
        }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        let (num, den) = self.repr.big();
        Some(BigRational::new(num[0].clone(), den))
    }

    /// Power-basis coordinates as rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let (num, den) = self.repr.big();
        num.into_iter().map(|n| BigRational::new(n, den.clone())).collect()
    }

    /// Field automorphism `zeta_L -> zeta_L^{-1}`.
    pub fn conj(&self) -> Self {
        let repr = match &self.repr {
            Repr::Small { num, den } => {
                let wide: Vec<i128> = num.iter().map(|v| *v as i128).collect();
                match conj_kernel(self.field, &wide) {
                    Some(n) => Repr::from_i128(n, *den as i128),
                    None => {
                        let (bn, bd) = self.repr.big();
                        Repr::from_big(conj_kernel(self.field, &bn).expect("bigint"), bd)
                    }
                }
            }
            Repr::Big { num, den } => Repr::from_big(conj_kernel(self.field, num).expect("bigint"), den.clone()),
        };
        Cyclotomic { field: self.field, repr }
    }

    /// Value under the embedding `zeta_L -> exp(2 pi i / L)`.
    pub fn to_complex(&self) -> Complex64 {
        let basis = self.field.basis_embedding();
        match &self.repr {
            Repr::Small { num, den } => {
                let d = *den as f64;
                num.iter()
                    .zip(basis)
                    .filter(|(n, _)| **n != 0)
                    .map(|(n, b)| b * (*n as f64 / d))
                    .sum()
            }
            Repr::Big { num, den } => num
                .iter()
                .zip(basis)
                .filter(|(n, _)| !n.is_zero())
                .map(|(n, b)| {
                    let q = BigRational::new(n.clone(), den.clone());
                    b * q.to_f64().unwrap_or(f64::NAN)
                })
                .sum(),
        }
    }

    fn same_field(&self, other: &Self) -> (Self, Self) {
        if self.field.order() == other.field.order() {
            return (self.clone(), other.clone());
        }
        let l = num_integer::lcm(self.order(), other.order());
        (
            self.embed(l).expect("lcm is a common multiple"),
            other.embed(l).expect("lcm is a common multiple"),
        )
    }

    /// Image under the inclusion `Q(zeta_L) -> Q(zeta_M)` for `L | M`.
    pub fn embed(&self, order: u32) -> Result<Self, ScalarError> {
        if order % self.order() != 0 {
            return Err(ScalarError::IncompatibleOrders(self.order(), order));
        }
        let target = CyclotomicField::get(order)?;
        let step = (order / self.order()) as i64;
        let mut acc = Cyclotomic::zero(target);
        for (e, q) in self.coefficients().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            acc += &(Cyclotomic::root_of_unity(target, e as i64 * step) * &Cyclotomic::from_rational(target, q));
        }
        Ok(acc)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.field.order() != other.field.order() {
            let (a, b) = self.same_field(other);
            return a.add_impl(&b, negate);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() && !negate {
            return other.clone();
        }
        let repr = binary(
            &self.repr,
            &other.repr,
            |an, ad, bn, bd| add_kernel(an, ad, bn, bd, negate),
            |an, ad, bn, bd| add_kernel(an, ad, bn, bd, negate),
        );
        Cyclotomic { field: self.field, repr }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.field.order() != other.field.order() {
            let (a, b) = self.same_field(other);
            return a.mul_impl(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero(self.field);
        }
        let field = self.field;
        let repr = binary(
            &self.repr,
            &other.repr,
            |an, ad, bn, bd| mul_kernel(field, an, ad, bn, bd),
            |an, ad, bn, bd| mul_kernel(field, an, ad, bn, bd),
        );
        Cyclotomic { field, repr }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(self.field, &q.recip()));
        }
        // Solve (multiplication by self) x = 1 over Q.
        let phi = self.field.degree();
        let columns: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| (self * &Cyclotomic::root_of_unity(self.field, j as i64)).coefficients())
            .collect();
        let mut aug: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..phi).map(|j| columns[j][i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|r| !aug[*r][col].is_zero())
                .ok_or(ScalarError::DivisionByZero)?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for x in aug[col].iter_mut() {
                *x = &*x / &p;
            }
            for r in 0..phi {
                if r == col || aug[r][col].is_zero() {
                    continue;
                }
                let f = aug[r][col].clone();
                for c in col..=phi {
                    let sub = &f * &aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
        let coeffs: Vec<BigRational> = aug.into_iter().map(|row| row[phi].clone()).collect();
        Ok(Cyclotomic::from_coefficients(self.field, &coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self * &Cyclotomic::from_int(self.field, k)
    }

    /// Two-field rendering such as `3/2 - 1/2*zeta12^2`.
    pub fn to_exact_string(&self) -> String {
        let coeffs = self.coefficients();
        let mut parts: Vec<String> = Vec::new();
        for (e, q) in coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let sign = if q.is_negative() { "-" } else { "+" };
            let abs = q.abs();
            let body = match (e, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => format!("zeta{}", self.order()),
                (_, true) => format!("zeta{}^{}", self.order(), e),
                (1, false) => format!("{}*zeta{}", abs, self.order()),
                (_, false) => format!("{}*zeta{}^{}", abs, self.order(), e),
            };
            parts.push(format!("{sign}{body}"));
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, p) in parts.iter().enumerate() {
            let (sign, body) = p.split_at(1);
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            out.push_str(body);
        }
        out
    }
}

/// `zeta_L^k` as a fallible constructor taking the order directly.
pub fn cyc_root_of_unity(order: u32, k: i64) -> Result<Cyclotomic, ScalarError> {
    Ok(Cyclotomic::root_of_unity(CyclotomicField::get(order)?, k))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order() == other.field.order() {
            self.repr == other.repr
        } else {
            let (a, b) = self.same_field(other);
            a.repr == b.repr
        }
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.repr.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'b Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'b Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::zero(self.field).add_impl(self, true)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(l: u32) -> &'static CyclotomicField {
        CyclotomicField::get(l).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = cyc_root_of_unity(4, 1).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from_int(i.field(), -1));
        assert!(!i.is_real());
    }

    #[test]
    fn zeta_zero_is_one() {
        assert!(cyc_root_of_unity(12, 0).unwrap().is_one());
    }

    #[test]
    fn two_cos_pi_over_three() {
        // zeta_6 lives in Q(zeta_12)
        let f = field(12);
        let s = Cyclotomic::root_of_unity(f, 2) + Cyclotomic::root_of_unity(f, -2);
        assert_eq!(s, Cyclotomic::one(f));
        assert!(s.is_real());
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let f = field(12);
        let w = Cyclotomic::root_of_unity(f, 4);
        assert_eq!(&w + &w.pow(2), Cyclotomic::from_int(f, -1));
    }

    #[test]
    fn gaussian_product() {
        let f = field(4);
        let one = Cyclotomic::one(f);
        let i = Cyclotomic::i(f);
        assert_eq!((&one + &i) * (&one - &i), Cyclotomic::from_int(f, 2));
    }

    #[test]
    fn division_by_self() {
        let z = cyc_root_of_unity(8, 1).unwrap();
        assert!(z.checked_div(&z).unwrap().is_one());
        assert!(matches!(
            z.checked_div(&Cyclotomic::zero(z.field())),
            Err(ScalarError::DivisionByZero)
        ));
    }

    #[test]
    fn root_order_matches() {
        let f = field(12);
        for k in 0..12i64 {
            let z = Cyclotomic::root_of_unity(f, k);
            let ord = 12 / num_integer::gcd(12, k as u32);
            assert!(z.pow(ord).is_one());
            for smaller in 1..ord {
                assert!(!z.pow(smaller).is_one());
            }
        }
    }

    #[test]
    fn float_embedding() {
        let one = Cyclotomic::one(field(8));
        assert_eq!(one.to_complex(), Complex64::new(1.0, 0.0));
        let i = cyc_root_of_unity(4, 1).unwrap().to_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let z8 = cyc_root_of_unity(8, 1).unwrap().to_complex();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((z8 - Complex64::new(h, h)).norm() < 1e-12);
    }

    #[test]
    fn embedding_between_orders() {
        let i4 = cyc_root_of_unity(4, 1).unwrap();
        let i12 = Cyclotomic::i(field(12));
        assert_eq!(i4.embed(12).unwrap(), i12);
        assert_eq!(i4, i12);
        assert_eq!((&i4 * &i12).order(), 12);
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let f = field(20);
        let big = Cyclotomic::from_rational(f, &q(i64::MAX, 3));
        let sq = &big * &big;
        let back = sq.checked_div(&big).unwrap();
        assert_eq!(back, big);
        let zero = &sq - &sq;
        assert!(zero.is_zero());
        assert_eq!(zero, Cyclotomic::zero(f));
    }

    #[test]
    fn inverse_of_irrational_element() {
        let f = field(20);
        let a = Cyclotomic::root_of_unity(f, 3) + Cyclotomic::from_rational(f, &q(2, 7));
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn exact_string() {
        let f = field(12);
        let a = Cyclotomic::from_rational(f, &q(3, 2)) - Cyclotomic::root_of_unity(f, 2);
        assert_eq!(a.to_exact_string(), "3/2 - zeta12^2");
        assert_eq!(Cyclotomic::zero(f).to_string(), "0");
    }
}
