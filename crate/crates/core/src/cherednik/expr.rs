use std::collections::BTreeMap;
use std::fmt;

use crate::dihedral::{omega, sigma_element, DihedralElement, DihedralGroup, Kind};
use crate::scalars::{Cyclotomic, CyclotomicField, Rational};

use super::operator::{GradedOperator, Space};
use super::{CherednikError, ModuleContext};

/// Generators of the operator algebra acting on `M_c(tau)` or `K_c(tau)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Z,
    Zbar,
    /// The Dunkl operator `zeta = (xi - i eta) / 2`.
    Zeta,
    ZetaBar,
    Group(DihedralElement),
    F,
    FDag,
}

impl Letter {
    /// Change in polynomial degree.
    pub fn shift(self) -> i64 {
        match self {
            Letter::Z | Letter::Zbar => 1,
            Letter::Zeta | Letter::ZetaBar => -1,
            _ => 0,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Letter::F | Letter::FDag)
    }

    /// `g . letter` as a scalar multiple of another letter.
    pub fn act(self, group: &DihedralGroup, field: &'static CyclotomicField, g: DihedralElement) -> (Cyclotomic, Letter) {
        let m = group.m();
        let w = |e: i64| omega(field, m, e);
        let j = g.index as i64;
        match (g.kind, self) {
            (_, Letter::Group(h)) => (Cyclotomic::one(field), Letter::Group(group.conjugate(g, h))),
            (Kind::Reflection, Letter::Z) => (w(j), Letter::Zbar),
            (Kind::Reflection, Letter::Zbar) => (w(-j), Letter::Z),
            (Kind::Reflection, Letter::Zeta) => (w(-j), Letter::ZetaBar),
            (Kind::Reflection, Letter::ZetaBar) => (w(j), Letter::Zeta),
            (Kind::Reflection, Letter::F) => (w(-j), Letter::FDag),
            (Kind::Reflection, Letter::FDag) => (w(j), Letter::F),
            (Kind::Rotation, Letter::Z) | (Kind::Rotation, Letter::ZetaBar) | (Kind::Rotation, Letter::FDag) => (w(j), self),
            (Kind::Rotation, _) => (w(-j), self),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Z => f.write_str("z"),
            Letter::Zbar => f.write_str("zbar"),
            Letter::Zeta => f.write_str("zeta"),
            Letter::ZetaBar => f.write_str("zetabar"),
            Letter::Group(g) => match g.kind {
                Kind::Rotation => write!(f, "r^{}", g.index),
                Kind::Reflection => write!(f, "s_{}", g.index),
            },
            Letter::F => f.write_str("f"),
            Letter::FDag => f.write_str("fdag"),
        }
    }
}

/// A noncommutative polynomial in [`Letter`]s; words read left to right as
/// operator products, so the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    field: &'static CyclotomicField,
    terms: BTreeMap<Vec<Letter>, Cyclotomic>,
}

impl Expr {
    pub fn zero(field: &'static CyclotomicField) -> Self {
        Expr {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(field: &'static CyclotomicField, c: Cyclotomic) -> Self {
        Self::word(field, &[]).scale(&c)
    }

    pub fn int(field: &'static CyclotomicField, v: i64) -> Self {
        Self::scalar(field, Cyclotomic::from_int(field, v))
    }

    pub fn rational(field: &'static CyclotomicField, v: &Rational) -> Self {
        Self::scalar(field, Cyclotomic::from_rational(field, v))
    }

    pub fn letter(field: &'static CyclotomicField, l: Letter) -> Self {
        Self::word(field, &[l])
    }

    pub fn word(field: &'static CyclotomicField, w: &[Letter]) -> Self {
        let mut out = Self::zero(field);
        out.add_term(w.to_vec(), Cyclotomic::one(field));
        out
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Vec<Letter>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(|| Cyclotomic::zero(c.field()));
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Expr) -> Expr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Expr) -> Expr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Expr {
        self.scale(&Cyclotomic::from_int(self.field, -1))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Expr {
        let mut out = Expr::zero(self.field);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn scale_int(&self, v: i64) -> Expr {
        self.scale(&Cyclotomic::from_int(self.field, v))
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Expr) -> Expr {
        let mut out = Expr::zero(self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Expr) -> Expr {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Expr) -> Expr {
        self.mul(other).add(&other.mul(self))
    }

    /// Polynomial degree shift, if every word shifts by the same amount.
    pub fn shift(&self) -> Option<i64> {
        let mut shifts = self.terms.keys().map(|w| w.iter().map(|l| l.shift()).sum::<i64>());
        let first = shifts.next()?;
        shifts.all(|s| s == first).then_some(first)
    }

    /// True if every word has an odd number of odd letters.
    pub fn is_odd(&self) -> bool {
        self.terms
            .keys()
            .all(|w| w.iter().filter(|l| l.is_odd()).count() % 2 == 1)
    }

    /// `g . X`: letterwise substitution, group letters conjugated.
    pub fn act(&self, group: &DihedralGroup, g: DihedralElement) -> Expr {
        let mut out = Expr::zero(self.field);
        for (w, c) in &self.terms {
            let mut coef = c.clone();
            let mut word = Vec::with_capacity(w.len());
            for l in w {
                let (s, nl) = l.act(group, self.field, g);
                coef = &coef * &s;
                word.push(nl);
            }
            out.add_term(word, coef);
        }
        out
    }

    /// Materializes the expression as a graded operator. Words are composed
    /// right to left, so the domain is where every letter stays in range.
    pub fn materialize(&self, ctx: &ModuleContext, space: Space) -> Result<GradedOperator, CherednikError> {
        let shift = self.shift().unwrap_or(0);
        let mut acc: Option<GradedOperator> = None;
        for (w, c) in &self.terms {
            let mut op = GradedOperator::identity(ctx, space);
            for l in w.iter().rev() {
                op = ctx.letter(space, *l)?.compose(&op);
            }
            assert_eq!(op.shift(), shift, "inhomogeneous expression");
            let term = op.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        Ok(acc.unwrap_or_else(|| GradedOperator::zero(ctx, space, shift)))
    }

    pub fn z(field: &'static CyclotomicField) -> Expr {
        Self::letter(field, Letter::Z)
    }

    pub fn zbar(field: &'static CyclotomicField) -> Expr {
        Self::letter(field, Letter::Zbar)
    }

    pub fn zeta(field: &'static CyclotomicField) -> Expr {
        Self::letter(field, Letter::Zeta)
    }

    pub fn zetabar(field: &'static CyclotomicField) -> Expr {
        Self::letter(field, Letter::ZetaBar)
    }

    pub fn group(field: &'static CyclotomicField, g: DihedralElement) -> Expr {
        Self::letter(field, Letter::Group(g))
    }

    /// `x = (z + zbar) / 2`.
    pub fn x(field: &'static CyclotomicField) -> Expr {
        Self::z(field).add(&Self::zbar(field)).scale(&half(field))
    }

    /// `y = (z - zbar) / 2i`.
    pub fn y(field: &'static CyclotomicField) -> Expr {
        let inv_2i = (Cyclotomic::i(field) * Cyclotomic::from_int(field, 2)).inv().expect("2i is invertible");
        Self::z(field).sub(&Self::zbar(field)).scale(&inv_2i)
    }

    /// `xi = zeta + zetabar`.
    pub fn xi(field: &'static CyclotomicField) -> Expr {
        Self::zeta(field).add(&Self::zetabar(field))
    }

    /// `eta = i (zeta - zetabar)`.
    pub fn eta(field: &'static CyclotomicField) -> Expr {
        Self::zeta(field).sub(&Self::zetabar(field)).scale(&Cyclotomic::i(field))
    }

    /// `sigma(n) = sum_j c_j omega^{jn} s_j`.
    pub fn sigma(ctx: &ModuleContext, n: i64) -> Expr {
        let mut out = Expr::zero(ctx.field());
        for (g, c) in sigma_element(ctx.group(), n, ctx.params()).terms() {
            out.add_term(vec![Letter::Group(*g)], c.clone());
        }
        out
    }
}

pub(crate) fn half(field: &'static CyclotomicField) -> Cyclotomic {
    Cyclotomic::from_int(field, 2).inv().expect("2 is invertible")
}

/// The scalar realisation of `u(1,1)` together with a few auxiliary elements.
#[derive(Clone, Debug)]
pub struct Generators {
    /// `E+ = z zbar / 2`.
    pub e_plus: Expr,
    /// `E- = -2 zeta zetabar`.
    pub e_minus: Expr,
    /// `H = z zeta + zbar zetabar + 1 - sigma(0)`.
    pub h: Expr,
    /// `Z0 = zbar zetabar - z zeta`.
    pub z0: Expr,
    pub sigma0: Expr,
    /// `X = i Z0`.
    pub x: Expr,
    /// `H_z = {z, zeta} / 2`.
    pub h_z: Expr,
    /// `H_zbar = {zbar, zetabar} / 2`.
    pub h_zbar: Expr,
}

pub fn generators(ctx: &ModuleContext) -> Generators {
    let f = ctx.field();
    let (z, zb, ze, zeb) = (Expr::z(f), Expr::zbar(f), Expr::zeta(f), Expr::zetabar(f));
    let sigma0 = Expr::sigma(ctx, 0);
    let z0 = zb.mul(&zeb).sub(&z.mul(&ze));
    Generators {
        e_plus: z.mul(&zb).scale(&half(f)),
        e_minus: ze.mul(&zeb).scale_int(-2),
        h: z.mul(&ze).add(&zb.mul(&zeb)).add(&Expr::int(f, 1)).sub(&sigma0),
        x: z0.scale(&Cyclotomic::i(f)),
        z0,
        sigma0,
        h_z: z.anticommutator(&ze).scale(&half(f)),
        h_zbar: zb.anticommutator(&zeb).scale(&half(f)),
    }
}
