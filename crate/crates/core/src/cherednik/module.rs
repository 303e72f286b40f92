use std::collections::BTreeMap;

use crate::dihedral::{omega, sigma_element, DihedralElement, Kind};
use crate::scalars::Cyclotomic;

use super::{CherednikError, ModuleContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    Zbar,
}

/// Which variable the Dunkl recursion strips off first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PeelOrder {
    #[default]
    ZFirst,
    ZbarFirst,
}

/// A finite sum of `coef * z^a zbar^b (x) v`, keyed by `(a, b, v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleElement {
    terms: BTreeMap<(usize, usize, usize), Cyclotomic>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(a: usize, b: usize, v: usize, coef: Cyclotomic) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, v, coef);
        out
    }

    pub fn add_term(&mut self, a: usize, b: usize, v: usize, coef: Cyclotomic) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&(a, b, v)) {
            Some(slot) => {
                *slot += &coef;
                if slot.is_zero() {
                    self.terms.remove(&(a, b, v));
                }
            }
            None => {
                self.terms.insert((a, b, v), coef);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: usize, b: usize, v: usize) -> Option<&Cyclotomic> {
        self.terms.get(&(a, b, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree present.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|(a, b, _)| a + b).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b, v), c) in &other.terms {
            out.add_term(a, b, v, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b, v), c) in &other.terms {
            out.add_term(a, b, v, -c);
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        for (&(a, b, v), c) in &self.terms {
            out.add_term(a, b, v, c * s);
        }
        out
    }

    /// Coordinates of the degree-`k` part in the context's basis.
    pub fn to_vector(&self, ctx: &ModuleContext, k: usize) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(ctx.field()); ctx.dim(k as i64)];
        for (&(a, b, v), c) in &self.terms {
            if a + b == k {
                out[ctx.index(b, v)] = c.clone();
            }
        }
        out
    }

    pub fn from_vector(ctx: &ModuleContext, k: usize, coords: &[Cyclotomic]) -> Self {
        let mut out = Self::zero();
        for (idx, c) in coords.iter().enumerate() {
            let (a, b, v) = ctx.monomial(k, idx);
            out.add_term(a, b, v, c.clone());
        }
        out
    }
}

impl ModuleContext {
    /// Multiplication by `z` or `zbar`.
    pub fn multiply_by(&self, var: Var, p: &ModuleElement) -> Result<ModuleElement, CherednikError> {
        let mut out = ModuleElement::zero();
        for (&(a, b, v), c) in p.terms() {
            if a + b + 1 > self.max_degree() {
                return Err(CherednikError::DegreeOverflow {
                    degree: a + b + 1,
                    max: self.max_degree(),
                });
            }
            match var {
                Var::Z => out.add_term(a + 1, b, v, c.clone()),
                Var::Zbar => out.add_term(a, b + 1, v, c.clone()),
            }
        }
        Ok(out)
    }

    /// `g (z^a zbar^b (x) v) = (g.z)^a (g.zbar)^b (x) tau(g) v`.
    pub fn group_act(&self, g: DihedralElement, p: &ModuleElement) -> ModuleElement {
        let tau_g = self.irrep_matrix(g);
        let mut out = ModuleElement::zero();
        for (&(a, b, v), c) in p.terms() {
            let phase = omega(self.field(), self.m(), g.index as i64 * (a as i64 - b as i64));
            let (na, nb) = match g.kind {
                Kind::Rotation => (a, b),
                Kind::Reflection => (b, a),
            };
            let coef = c * &phase;
            for w in 0..self.d() {
                let t = tau_g.get(w, v);
                if !t.is_zero() {
                    out.add_term(na, nb, w, &coef * t);
                }
            }
        }
        out
    }

    /// `sigma(n) p = sum_j c_j omega^{jn} s_j p`.
    pub fn sigma_act(&self, n: i64, p: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (g, coef) in sigma_element(self.group(), n, self.params()).terms() {
            out = out.add(&self.group_act(*g, p).scale(coef));
        }
        out
    }

    /// `zeta` or `zetabar` applied to `p`; `Var::Z` selects `zeta`.
    pub fn dunkl_apply(&self, var: Var, p: &ModuleElement) -> ModuleElement {
        self.dunkl_apply_with(var, p, PeelOrder::ZFirst)
    }

    /// Dunkl action through the recursion
    /// `zeta(z p) = z zeta(p) + (1 - sigma(0)) p`,
    /// `zeta(zbar p) = zbar zeta(p) + sigma(-1) p`,
    /// `zetabar(z p) = z zetabar(p) + sigma(1) p`,
    /// `zetabar(zbar p) = zbar zetabar(p) + (1 - sigma(0)) p`.
    pub fn dunkl_apply_with(&self, var: Var, p: &ModuleElement, order: PeelOrder) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (&(a, b, v), c) in p.terms() {
            out = out.add(&self.dunkl_monomial(var, a, b, v, order).scale(c));
        }
        out
    }

    fn dunkl_monomial(&self, var: Var, a: usize, b: usize, v: usize, order: PeelOrder) -> ModuleElement {
        if a + b == 0 {
            return ModuleElement::zero();
        }
        let peel_z = match order {
            PeelOrder::ZFirst => a > 0,
            PeelOrder::ZbarFirst => b == 0,
        };
        let (ra, rb, peeled) = if peel_z { (a - 1, b, Var::Z) } else { (a, b - 1, Var::Zbar) };
        let rest = ModuleElement::monomial(ra, rb, v, Cyclotomic::one(self.field()));
        let inner = self.dunkl_monomial(var, ra, rb, v, order);
        let out = shift(&inner, peeled);
        let correction = match (var, peeled) {
            (Var::Z, Var::Z) | (Var::Zbar, Var::Zbar) => rest.sub(&self.sigma_act(0, &rest)),
            (Var::Z, Var::Zbar) => self.sigma_act(-1, &rest),
            (Var::Zbar, Var::Z) => self.sigma_act(1, &rest),
        };
        out.add(&correction)
    }
}

/// Multiplication without the degree check, for internal recursion.
fn shift(p: &ModuleElement, var: Var) -> ModuleElement {
    let mut out = ModuleElement::zero();
    for (&(a, b, v), c) in p.terms() {
        match var {
            Var::Z => out.add_term(a + 1, b, v, c.clone()),
            Var::Zbar => out.add_term(a, b + 1, v, c.clone()),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Irrep;
    use crate::scalars::{parse_rational, ParamValues};

    fn ctx(m: u32, tau: Irrep, c: &str) -> ModuleContext {
        ModuleContext::new(m, tau, ParamValues::uniform(parse_rational(c).unwrap()), 8).unwrap()
    }

    fn one(ctx: &ModuleContext) -> Cyclotomic {
        Cyclotomic::one(ctx.field())
    }

    #[test]
    fn classical_derivative() {
        let c = ctx(3, Irrep::Triv, "0");
        let z2 = ModuleElement::monomial(2, 0, 0, one(&c));
        assert_eq!(c.dunkl_apply(Var::Z, &z2), ModuleElement::monomial(1, 0, 0, c.scalar(2)));
        for k in 1..5 {
            let zb = ModuleElement::monomial(0, k, 0, one(&c));
            assert!(c.dunkl_apply(Var::Z, &zb).is_zero());
        }
    }

    #[test]
    fn one_recursion_step() {
        let c = ctx(3, Irrep::Triv, "1/2");
        let z = ModuleElement::monomial(1, 0, 0, one(&c));
        let expected = Cyclotomic::from_rational(c.field(), &parse_rational("-1/2").unwrap());
        assert_eq!(c.dunkl_apply(Var::Z, &z), ModuleElement::monomial(0, 0, 0, expected));
    }

    #[test]
    fn group_action_examples() {
        let c = ctx(3, Irrep::Triv, "1/3");
        let g = c.group();
        let p = ModuleElement::monomial(2, 1, 0, one(&c));
        assert_eq!(c.group_act(g.reflection(3), &p), ModuleElement::monomial(1, 2, 0, one(&c)));
        let z2 = ModuleElement::monomial(2, 0, 0, one(&c));
        let w2 = omega(c.field(), 3, 2);
        assert_eq!(c.group_act(g.reflection(1), &z2), ModuleElement::monomial(0, 2, 0, w2));
    }

    #[test]
    fn group_action_is_a_homomorphism() {
        let c = ctx(4, Irrep::Rho(1), "1/5");
        let g = c.group();
        let p = ModuleElement::monomial(2, 1, 0, one(&c)).add(&ModuleElement::monomial(0, 3, 1, c.scalar(3)));
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(c.group_act(g.mul(a, b), &p), c.group_act(a, &c.group_act(b, &p)));
            }
        }
    }

    #[test]
    fn peel_order_does_not_matter() {
        for (m, tau) in [(3, Irrep::Triv), (4, Irrep::Chi1), (5, Irrep::Rho(2))] {
            let c = ctx(m, tau, "1/3");
            for k in 0..=6 {
                for b in 0..=k {
                    for v in 0..tau.dim() {
                        let p = ModuleElement::monomial(k - b, b, v, one(&c));
                        for var in [Var::Z, Var::Zbar] {
                            assert_eq!(
                                c.dunkl_apply_with(var, &p, PeelOrder::ZFirst),
                                c.dunkl_apply_with(var, &p, PeelOrder::ZbarFirst),
                                "m={m} {tau} k={k} b={b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_commutes_and_checks_degree() {
        let c = ctx(3, Irrep::Triv, "0");
        let p = ModuleElement::monomial(1, 0, 0, one(&c));
        let a = c.multiply_by(Var::Z, &c.multiply_by(Var::Zbar, &p).unwrap()).unwrap();
        let b = c.multiply_by(Var::Zbar, &c.multiply_by(Var::Z, &p).unwrap()).unwrap();
        assert_eq!(a, b);
        let top = ModuleElement::monomial(8, 0, 0, one(&c));
        assert!(c.multiply_by(Var::Z, &top).is_err());
    }
}
