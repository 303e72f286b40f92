//! The dihedral group `I_2(m)`, its irreducible representations and the
//! `sigma(n)` elements of the group algebra.
//!
//! Reflections are `s_1, ..., s_m` with `s_m` fixing the x-axis; `s_j` acts on
//! the coordinate functions by `z -> omega^j zbar`. Rotations are powers of
//! `r = s_1 s_2`, which acts by `z -> omega z`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::{field_for, Cyclotomic, CyclotomicField, ParamValues};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DihedralError {
    #[error("m must be ≥ 3 (got {0})")]
    OrderTooSmall(u32),
    #[error("irrep {label} does not exist for m = {m}")]
    InvalidIrrep { label: String, m: u32 },
    #[error("unknown irrep label {0:?}")]
    UnknownIrrep(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Rotation,
    Reflection,
}

/// `r^index` or `s_index`, with the index reduced mod `m` (`s_0` is `s_m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub kind: Kind,
    pub index: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralGroup {
    m: u32,
}

impl DihedralGroup {
    pub fn new(m: u32) -> Result<Self, DihedralError> {
        if m < 3 {
            return Err(DihedralError::OrderTooSmall(m));
        }
        Ok(DihedralGroup { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m as usize
    }

    fn reduce(&self, k: i64) -> u32 {
        k.rem_euclid(self.m as i64) as u32
    }

    pub fn identity(&self) -> DihedralElement {
        self.rotation(0)
    }

    pub fn rotation(&self, k: i64) -> DihedralElement {
        DihedralElement {
            kind: Kind::Rotation,
            index: self.reduce(k),
        }
    }

    pub fn reflection(&self, j: i64) -> DihedralElement {
        DihedralElement {
            kind: Kind::Reflection,
            index: self.reduce(j),
        }
    }

    pub fn elements(&self) -> Vec<DihedralElement> {
        let m = self.m as i64;
        (0..m).map(|k| self.rotation(k)).chain((1..=m).map(|j| self.reflection(j))).collect()
    }

    /// Reflections `s_1, ..., s_m` in order.
    pub fn reflections(&self) -> Vec<DihedralElement> {
        (1..=self.m as i64).map(|j| self.reflection(j)).collect()
    }

    pub fn mul(&self, a: DihedralElement, b: DihedralElement) -> DihedralElement {
        let (x, y) = (a.index as i64, b.index as i64);
        match (a.kind, b.kind) {
            (Kind::Rotation, Kind::Rotation) => self.rotation(x + y),
            (Kind::Rotation, Kind::Reflection) => self.reflection(y - x),
            (Kind::Reflection, Kind::Rotation) => self.reflection(x + y),
            (Kind::Reflection, Kind::Reflection) => self.rotation(y - x),
        }
    }

    pub fn inv(&self, a: DihedralElement) -> DihedralElement {
        match a.kind {
            Kind::Rotation => self.rotation(-(a.index as i64)),
            Kind::Reflection => a,
        }
    }

    /// `g h g^{-1}`.
    pub fn conjugate(&self, g: DihedralElement, h: DihedralElement) -> DihedralElement {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Action on the coordinate functions in the ordered basis `(z, zbar)`,
    /// one column per basis vector.
    pub fn action_on_zzbar(&self, g: DihedralElement) -> Matrix {
        let field = field_for(self.m);
        let w = |e: i64| omega(field, self.m, e);
        let zero = Cyclotomic::zero(field);
        let k = g.index as i64;
        let rows = match g.kind {
            Kind::Rotation => vec![vec![w(k), zero.clone()], vec![zero, w(-k)]],
            Kind::Reflection => vec![vec![zero.clone(), w(-k)], vec![w(k), zero]],
        };
        Matrix::from_rows(field, 2, &rows)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Rotation => write!(f, "r^{}", self.index),
            Kind::Reflection => write!(f, "s_{}", self.index),
        }
    }
}

/// `omega^e` with `omega = exp(2 pi i / m)` inside `Q(zeta_L)`.
pub fn omega(field: &'static CyclotomicField, m: u32, e: i64) -> Cyclotomic {
    let step = (field.order() / m) as i64;
    Cyclotomic::root_of_unity(field, e * step)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irrep {
    Triv,
    Sign,
    Chi0,
    Chi1,
    Rho(u32),
}

impl Irrep {
    pub fn dim(&self) -> usize {
        match self {
            Irrep::Rho(_) => 2,
            _ => 1,
        }
    }

    /// Checks that the label exists for `I_2(m)`.
    pub fn validate(&self, m: u32) -> Result<(), DihedralError> {
        let ok = match self {
            Irrep::Triv | Irrep::Sign => true,
            Irrep::Chi0 | Irrep::Chi1 => m % 2 == 0,
            Irrep::Rho(u) => *u >= 1 && 2 * *u < m,
        };
        if ok {
            Ok(())
        } else {
            Err(DihedralError::InvalidIrrep {
                label: self.to_string(),
                m,
            })
        }
    }

    /// All irreps of `I_2(m)`: the characters first, then `rho(1..q-1)`.
    pub fn all(m: u32) -> Vec<Irrep> {
        let mut out = vec![Irrep::Triv, Irrep::Sign];
        if m % 2 == 0 {
            out.push(Irrep::Chi0);
            out.push(Irrep::Chi1);
        }
        out.extend((1..).take_while(|u| 2 * u < m).map(Irrep::Rho));
        out
    }

    /// Matrix of `g` in the orthonormal basis (`{1}` or `(z, zbar)`).
    pub fn matrix(&self, group: &DihedralGroup, g: DihedralElement) -> Matrix {
        let m = group.m();
        let field = field_for(m);
        let k = g.index as i64;
        let sign = |neg: bool| Matrix::scalar(field, 1, &Cyclotomic::from_int(field, if neg { -1 } else { 1 }));
        let reflection = g.kind == Kind::Reflection;
        match self {
            Irrep::Triv => sign(false),
            Irrep::Sign => sign(reflection),
            Irrep::Chi0 | Irrep::Chi1 => {
                let u = if *self == Irrep::Chi0 { 0 } else { 1 };
                if reflection {
                    sign(k.rem_euclid(2) == u)
                } else {
                    sign(k.rem_euclid(2) == 1)
                }
            }
            Irrep::Rho(u) => {
                let e = k * *u as i64;
                let w = |x: i64| omega(field, m, x);
                let zero = Cyclotomic::zero(field);
                let rows = if reflection {
                    vec![vec![zero.clone(), w(-e)], vec![w(e), zero]]
                } else {
                    vec![vec![w(e), zero.clone()], vec![zero, w(-e)]]
                };
                Matrix::from_rows(field, 2, &rows)
            }
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::Triv => write!(f, "triv"),
            Irrep::Sign => write!(f, "sign"),
            Irrep::Chi0 => write!(f, "chi0"),
            Irrep::Chi1 => write!(f, "chi1"),
            Irrep::Rho(u) => write!(f, "rho:{u}"),
        }
    }
}

impl FromStr for Irrep {
    type Err = DihedralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "triv" => Ok(Irrep::Triv),
            "sign" => Ok(Irrep::Sign),
            "chi0" => Ok(Irrep::Chi0),
            "chi1" => Ok(Irrep::Chi1),
            other => other
                .strip_prefix("rho:")
                .or_else(|| other.strip_prefix("rho"))
                .and_then(|u| u.parse().ok())
                .map(Irrep::Rho)
                .ok_or_else(|| DihedralError::UnknownIrrep(s.to_string())),
        }
    }
}

/// A finitely supported combination of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: DihedralGroup,
    terms: BTreeMap<DihedralElement, Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(group: DihedralGroup) -> Self {
        GroupAlgebraElement {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(group: DihedralGroup, g: DihedralElement) -> Self {
        let mut out = Self::zero(group);
        out.add_term(g, Cyclotomic::one(field_for(group.m())));
        out
    }

    pub fn group(&self) -> DihedralGroup {
        self.group
    }

    pub fn add_term(&mut self, g: DihedralElement, c: Cyclotomic) {
        let entry = self.terms.entry(g).or_insert_with(|| Cyclotomic::zero(c.field()));
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DihedralElement, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: DihedralElement) -> Cyclotomic {
        self.terms
            .get(&g)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(field_for(self.group.m())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.group);
        for (g, c) in &self.terms {
            out.add_term(*g, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.group);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(self.group.mul(*g, *h), a * b);
            }
        }
        out
    }

    /// Image under an irrep.
    pub fn on_irrep(&self, tau: Irrep) -> Matrix {
        let field = field_for(self.group.m());
        let mut acc = Matrix::zeros(field, tau.dim(), tau.dim());
        for (g, c) in &self.terms {
            acc = acc.add(&tau.matrix(&self.group, *g).scale(c));
        }
        acc
    }

    /// True iff only reflections occur.
    pub fn supported_on_reflections(&self) -> bool {
        self.terms.keys().all(|g| g.kind == Kind::Reflection)
    }
}

/// `sigma(n) = sum_j c_j omega^{jn} s_j`.
pub fn sigma_element(group: DihedralGroup, n: i64, c: &ParamValues) -> GroupAlgebraElement {
    let m = group.m();
    let field = field_for(m);
    let mut out = GroupAlgebraElement::zero(group);
    for j in 1..=m as i64 {
        let coef = omega(field, m, j * n) * c.c_cyc(field, j);
        out.add_term(group.reflection(j), coef);
    }
    out
}

/// Which reflections a partial sigma sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

/// `sigma_n` (or its even/odd partial sum) evaluated directly as
/// `sum_j c_j omega^{jn}`.
pub fn sigma_direct(m: u32, n: i64, c: &ParamValues, parity: Parity) -> Cyclotomic {
    let field = field_for(m);
    let mut acc = Cyclotomic::zero(field);
    for j in 1..=m as i64 {
        let keep = match parity {
            Parity::All => true,
            Parity::Even => j % 2 == 0,
            Parity::Odd => j % 2 == 1,
        };
        if keep {
            acc += &(omega(field, m, j * n) * c.c_cyc(field, j));
        }
    }
    acc
}

/// Closed form of `sigma_direct`: the sums vanish except at `n = 0` (and
/// `n = q` when `m = 2q`).
pub fn sigma_closed(m: u32, n: i64, c: &ParamValues, parity: Parity) -> Cyclotomic {
    let field = field_for(m);
    let r = n.rem_euclid(m as i64);
    let ce = Cyclotomic::from_rational(field, &c.c_even);
    let co = Cyclotomic::from_rational(field, &c.c_odd);
    if m % 2 == 1 {
        // the even/odd split is not a class split for odd m and has no
        // closed form; only the full sum collapses
        if parity != Parity::All {
            return sigma_direct(m, n, c, parity);
        }
        if r != 0 {
            return Cyclotomic::zero(field);
        }
        return ce.scale_int(m as i64);
    }
    let q = (m / 2) as i64;
    if r % q != 0 {
        return Cyclotomic::zero(field);
    }
    // omega^{jn} = (-1)^j when n = q, and 1 when n = 0
    let odd_sign = if r == 0 { 1 } else { -1 };
    let even = ce.scale_int(q);
    let odd = co.scale_int(q * odd_sign);
    match parity {
        Parity::All => even + odd,
        Parity::Even => even,
        Parity::Odd => odd,
    }
}

/// `sigma_n` computed both ways; `closed_form_agrees` records the comparison.
#[derive(Clone, Debug)]
pub struct SigmaScalar {
    pub value: Cyclotomic,
    pub closed_form: Cyclotomic,
    pub closed_form_agrees: bool,
}

pub fn sigma_scalar(n: i64, m: u32, c: &ParamValues) -> SigmaScalar {
    let value = sigma_direct(m, n, c, Parity::All);
    let closed_form = sigma_closed(m, n, c, Parity::All);
    SigmaScalar {
        closed_form_agrees: value == closed_form,
        value,
        closed_form,
    }
}

/// `tau(sigma(n))`, via the character table (and, for the 2-dim irreps,
/// the `sigma_{n +- u}` pattern).
pub fn sigma_on_irrep_table(tau: Irrep, m: u32, n: i64, c: &ParamValues) -> Matrix {
    let field = field_for(m);
    let s = |p| sigma_direct(m, n, c, p);
    let one = |x: Cyclotomic| Matrix::scalar(field, 1, &x);
    match tau {
        Irrep::Triv => one(s(Parity::All)),
        Irrep::Sign => one(-s(Parity::All)),
        Irrep::Chi0 => one(s(Parity::Odd) - s(Parity::Even)),
        Irrep::Chi1 => one(s(Parity::Even) - s(Parity::Odd)),
        Irrep::Rho(u) => {
            let up = sigma_direct(m, n + u as i64, c, Parity::All);
            let down = sigma_direct(m, n - u as i64, c, Parity::All);
            let zero = Cyclotomic::zero(field);
            Matrix::from_rows(field, 2, &[vec![zero.clone(), down], vec![up, zero]])
        }
    }
}

/// One entry of the set `sigma(tau)_k` together with the irrep basis
/// vectors `z(sigma)`, `zbar(sigma)` that pair with `z^k` and `zbar^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaEntry {
    pub label: String,
    pub value: Cyclotomic,
    pub z_vector: usize,
    pub zbar_vector: usize,
}

#[derive(Clone, Debug)]
pub struct SigmaOnIrrep {
    pub matrix: Matrix,
    pub n_c: Cyclotomic,
    pub entries: Vec<SigmaEntry>,
    pub table_agrees: bool,
}

/// `N_c(tau) = tau(sigma(0))` as a scalar (zero for the 2-dim irreps).
pub fn n_c(tau: Irrep, m: u32, c: &ParamValues) -> Cyclotomic {
    let mat = sigma_on_irrep_table(tau, m, 0, c);
    match tau {
        Irrep::Rho(_) => {
            debug_assert!(mat.is_zero());
            Cyclotomic::zero(mat.field())
        }
        _ => mat.get(0, 0).clone(),
    }
}

/// The ordered set `sigma(tau)_k`.
pub fn sigma_set(tau: Irrep, m: u32, k: i64, c: &ParamValues) -> Vec<SigmaEntry> {
    match tau {
        Irrep::Rho(u) => {
            let u = u as i64;
            vec![
                SigmaEntry {
                    label: format!("sigma_{}", k + u),
                    value: sigma_direct(m, k + u, c, Parity::All),
                    z_vector: 0,
                    zbar_vector: 1,
                },
                SigmaEntry {
                    label: format!("sigma_{}", k - u),
                    value: sigma_direct(m, k - u, c, Parity::All),
                    z_vector: 1,
                    zbar_vector: 0,
                },
            ]
        }
        _ => vec![SigmaEntry {
            label: format!("{tau}(sigma({k}))"),
            value: sigma_on_irrep_table(tau, m, k, c).get(0, 0).clone(),
            z_vector: 0,
            zbar_vector: 0,
        }],
    }
}

pub fn sigma_on_irrep(tau: Irrep, m: u32, n: i64, c: &ParamValues) -> Result<SigmaOnIrrep, DihedralError> {
    let group = DihedralGroup::new(m)?;
    tau.validate(m)?;
    let matrix = sigma_element(group, n, c).on_irrep(tau);
    let table_agrees = matrix == sigma_on_irrep_table(tau, m, n, c);
    Ok(SigmaOnIrrep {
        n_c: n_c(tau, m, c),
        entries: sigma_set(tau, m, n, c),
        matrix,
        table_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_rational;

    fn params(m: u32, ce: &str, co: &str) -> ParamValues {
        ParamValues::parse(m, ce, co).unwrap()
    }

    #[test]
    fn group_axioms() {
        for m in 3..=8 {
            let g = DihedralGroup::new(m).unwrap();
            let els = g.elements();
            assert_eq!(els.len(), 2 * m as usize);
            for &a in &els {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
                for &b in &els {
                    for &c in &els {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
            for s in g.reflections() {
                assert_eq!(g.mul(s, s), g.identity());
            }
            assert_eq!(g.mul(g.reflection(1), g.reflection(2)), g.rotation(1));
        }
    }

    #[test]
    fn zzbar_action_is_a_homomorphism() {
        for m in 3..=6 {
            let g = DihedralGroup::new(m).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(
                        g.action_on_zzbar(g.mul(a, b)),
                        g.action_on_zzbar(a).mul(&g.action_on_zzbar(b))
                    );
                }
            }
        }
    }

    #[test]
    fn s1_for_m4() {
        let g = DihedralGroup::new(4).unwrap();
        let a = g.action_on_zzbar(g.reflection(1));
        let f = a.field();
        let i = Cyclotomic::i(f);
        // z -> i zbar, zbar -> -i z
        assert_eq!(a.column(0), vec![Cyclotomic::zero(f), i.clone()]);
        assert_eq!(a.column(1), vec![-i, Cyclotomic::zero(f)]);
        let sm = g.action_on_zzbar(g.reflection(4));
        assert_eq!(sm.column(0), vec![Cyclotomic::zero(f), Cyclotomic::one(f)]);
    }

    #[test]
    fn irreps_are_homomorphisms_and_complete() {
        for m in 3..=8 {
            let g = DihedralGroup::new(m).unwrap();
            let irreps = Irrep::all(m);
            let total: usize = irreps.iter().map(|t| t.dim() * t.dim()).sum();
            assert_eq!(total, 2 * m as usize);
            for tau in irreps {
                tau.validate(m).unwrap();
                for a in g.elements() {
                    for b in g.elements() {
                        assert_eq!(tau.matrix(&g, g.mul(a, b)), tau.matrix(&g, a).mul(&tau.matrix(&g, b)));
                    }
                }
            }
        }
        assert!(Irrep::Chi0.validate(5).is_err());
        assert!(Irrep::Rho(2).validate(4).is_err());
        assert!(Irrep::Rho(2).validate(5).is_ok());
    }

    #[test]
    fn irrep_labels_roundtrip() {
        for tau in Irrep::all(8) {
            assert_eq!(tau.to_string().parse::<Irrep>().unwrap(), tau);
        }
        assert!("bogus".parse::<Irrep>().is_err());
    }

    #[test]
    fn sigma_examples() {
        let third = params(5, "1/3", "1/3");
        assert!(sigma_scalar(2, 5, &third).value.is_zero());
        let s0 = sigma_scalar(0, 5, &third);
        assert_eq!(s0.value.to_rational().unwrap(), parse_rational("5/3").unwrap());
        let split = params(4, "1/2", "1/3");
        assert_eq!(sigma_scalar(2, 4, &split).value.to_rational().unwrap(), parse_rational("1/3").unwrap());
        let chi1 = sigma_on_irrep(Irrep::Chi1, 4, 2, &split).unwrap();
        // q (c_even + c_odd) with q = 2
        assert_eq!(chi1.matrix.get(0, 0).to_rational().unwrap(), parse_rational("5/3").unwrap());
    }

    #[test]
    fn sigma_is_periodic_and_on_reflections() {
        let g = DihedralGroup::new(6).unwrap();
        let c = params(6, "1/5", "1/7");
        for n in -6..6 {
            let a = sigma_element(g, n, &c);
            assert!(a.supported_on_reflections());
            assert_eq!(a, sigma_element(g, n + 6, &c));
        }
    }

    #[test]
    fn closed_forms_match() {
        for m in 3..=8 {
            let c = if m % 2 == 0 { params(m, "1/5", "-2/7") } else { params(m, "3/11", "3/11") };
            let parities: &[Parity] = if m % 2 == 0 { &[Parity::All, Parity::Even, Parity::Odd] } else { &[Parity::All] };
            for n in 0..2 * m as i64 {
                for &p in parities {
                    assert_eq!(sigma_direct(m, n, &c, p), sigma_closed(m, n, &c, p), "m={m} n={n} {p:?}");
                }
            }
        }
    }

    #[test]
    fn n_c_values() {
        let c = params(3, "1/2", "1/2");
        assert_eq!(n_c(Irrep::Triv, 3, &c).to_rational().unwrap(), parse_rational("3/2").unwrap());
        for m in 3..=8 {
            let c = if m % 2 == 0 { params(m, "1/5", "1/7") } else { params(m, "1/5", "1/5") };
            for tau in Irrep::all(m) {
                let s = sigma_on_irrep(tau, m, 0, &c).unwrap();
                assert!(s.table_agrees);
                if tau.dim() == 2 {
                    assert!(s.matrix.is_zero());
                }
            }
        }
    }

    #[test]
    fn c_is_a_class_function() {
        for m in 3..=8 {
            let g = DihedralGroup::new(m).unwrap();
            let c = if m % 2 == 0 { params(m, "1/5", "1/7") } else { params(m, "1/5", "1/5") };
            for w in g.elements() {
                for s in g.reflections() {
                    let t = g.conjugate(w, s);
                    assert_eq!(c.c(t.index as i64), c.c(s.index as i64));
                }
            }
        }
    }
}
