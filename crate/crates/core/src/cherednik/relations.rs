use serde_json::json;

use crate::report::{Entry, Status};
use crate::scalars::Cyclotomic;

use super::expr::{generators, half, Expr, Letter};
use super::gram::{contravariant_gram, theta_matrix};
use super::operator::{Comparison, GradedOperator, Space};
use super::{CherednikError, ModuleContext};

/// Which family of scalar-module identities to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationSet {
    /// Weyl-type relations, the `su(1,1)` triple, the Dunkl commutators and
    /// the contravariant form.
    Sl2,
    /// `Z0` and the `u(1,1)` extension.
    U11,
    All,
}

impl RelationSet {
    fn includes(self, other: RelationSet) -> bool {
        self == RelationSet::All || self == other
    }
}

/// Turns a comparison into a report entry.
pub fn comparison_entry(id: &str, anchor: &str, cmp: Comparison) -> Entry {
    let status = match &cmp {
        Comparison::Equal { .. } => Status::Pass,
        Comparison::Differ { .. } => Status::Fail,
        Comparison::EmptyDomain => Status::Skipped("no degree in range".into()),
    };
    let degrees = cmp.degrees();
    Entry::new(id, anchor, status)
        .with_locus(if cmp.holds() { None } else { cmp.locus() })
        .with_data(json!({ "degrees": degrees }))
}

/// Checks `lhs == rhs` as operators on `space`.
pub fn check_identity(
    ctx: &ModuleContext,
    space: Space,
    id: &str,
    anchor: &str,
    lhs: &Expr,
    rhs: &Expr,
) -> Result<Entry, CherednikError> {
    // a side that cancelled symbolically carries no shift information
    let (l, r) = match (lhs.is_zero(), rhs.is_zero()) {
        (false, true) => {
            let l = lhs.materialize(ctx, space)?;
            let r = GradedOperator::zero(ctx, space, l.shift());
            (l, r)
        }
        (true, false) => {
            let r = rhs.materialize(ctx, space)?;
            (GradedOperator::zero(ctx, space, r.shift()), r)
        }
        _ => (lhs.materialize(ctx, space)?, rhs.materialize(ctx, space)?),
    };
    Ok(comparison_entry(id, anchor, l.compare(&r)))
}

/// Checks that an operator does not vanish identically.
pub fn check_nonzero(id: &str, anchor: &str, op: &GradedOperator) -> Entry {
    let status = Status::from_bool(!op.is_zero());
    let witness = op.first_nonzero().map(|(k, r, c)| format!("degree {k}, entry ({r}, {c})"));
    Entry::new(id, anchor, status).with_data(json!({ "witness": witness }))
}

/// Runs the scalar relation suite. Every identity is an exact matrix
/// identity on the degrees where both sides are materialized.
pub fn verify_relations(ctx: &ModuleContext, set: RelationSet) -> Result<Vec<Entry>, CherednikError> {
    let f = ctx.field();
    let g = generators(ctx);
    let (z, zb, ze, zeb) = (Expr::z(f), Expr::zbar(f), Expr::zeta(f), Expr::zetabar(f));
    let (x, y, xi, eta) = (Expr::x(f), Expr::y(f), Expr::xi(f), Expr::eta(f));
    let one = Expr::int(f, 1);
    let sigma = |n: i64| Expr::sigma(ctx, n);
    let group = ctx.group();
    let mut checks: Vec<(String, String, Expr, Expr)> = Vec::new();
    let mut extra = Vec::new();
    let mut eq = |id: &str, anchor: &str, lhs: Expr, rhs: Expr| checks.push((id.to_string(), anchor.to_string(), lhs, rhs));

    if set.includes(RelationSet::Sl2) {
        let lap = ze.mul(&zeb).scale_int(2);
        eq("weyl.lap_x", "[2 zeta zetabar, x] = xi", lap.commutator(&x), xi.clone());
        eq("weyl.lap_y", "[2 zeta zetabar, y] = eta", lap.commutator(&y), eta.clone());
        eq("weyl.eplus_xi", "[E+, xi] = -x", g.e_plus.commutator(&xi), x.neg());
        eq("weyl.eplus_eta", "[E+, eta] = -y", g.e_plus.commutator(&eta), y.neg());
        eq("weyl.symmetry", "[xi, y] = [eta, x]", xi.commutator(&y), eta.commutator(&x));
        eq("weyl.euler_xi", "[H, xi] = -xi", g.h.commutator(&xi), xi.neg());
        eq("weyl.euler_x", "[H, x] = x", g.h.commutator(&x), x.clone());

        eq("sl2.h_eplus", "[H, E+] = 2E+", g.h.commutator(&g.e_plus), g.e_plus.scale_int(2));
        eq("sl2.h_eminus", "[H, E-] = -2E-", g.h.commutator(&g.e_minus), g.e_minus.scale_int(-2));
        eq("sl2.eplus_eminus", "[E+, E-] = H", g.e_plus.commutator(&g.e_minus), g.h.clone());
        extra.push(h_scalar_entry(ctx, &g.h.materialize(ctx, Space::Scalar)?));

        eq("complex.eplus_zeta", "[E+, 2 zeta] = -zbar", g.e_plus.commutator(&ze.scale_int(2)), zb.neg());
        eq("complex.eplus_zetabar", "[E+, 2 zetabar] = -z", g.e_plus.commutator(&zeb.scale_int(2)), z.neg());
        eq("complex.eminus_z", "[E-, z] = -2 zetabar", g.e_minus.commutator(&z), zeb.scale_int(-2));
        eq("complex.eminus_zbar", "[E-, zbar] = -2 zeta", g.e_minus.commutator(&zb), ze.scale_int(-2));
        eq("complex.h_z", "[H, z] = z", g.h.commutator(&z), z.clone());
        eq("complex.h_zbar", "[H, zbar] = zbar", g.h.commutator(&zb), zb.clone());
        eq("complex.h_zeta", "[H, zeta] = -zeta", g.h.commutator(&ze), ze.neg());
        eq("complex.h_zetabar", "[H, zetabar] = -zetabar", g.h.commutator(&zeb), zeb.neg());
        eq("complex.symmetric", "[zeta, z] = [zetabar, zbar]", ze.commutator(&z), zeb.commutator(&zb));

        for k in 1..=ctx.m() as i64 {
            let s = Expr::group(f, group.reflection(k));
            let w = Expr::scalar(f, crate::dihedral::omega(f, ctx.m(), k));
            eq(
                &format!("dunkl.reflect_z.s{k}"),
                "s_k z s_k = omega^k zbar",
                s.mul(&z).mul(&s),
                zb.mul(&w),
            );
        }
        for n in 0..ctx.m() as i64 {
            eq(
                &format!("dunkl.sigma_z.n{n}"),
                "sigma(n) z = zbar sigma(n+1)",
                sigma(n).mul(&z),
                zb.mul(&sigma(n + 1)),
            );
            eq(
                &format!("dunkl.sigma_zbar.n{n}"),
                "sigma(n) zbar = z sigma(n-1)",
                sigma(n).mul(&zb),
                z.mul(&sigma(n - 1)),
            );
        }
        eq("dunkl.zeta_z", "[zeta, z] = 1 - sigma(0)", ze.commutator(&z), one.sub(&sigma(0)));
        eq("dunkl.zetabar_z", "[zetabar, z] = sigma(1)", zeb.commutator(&z), sigma(1));
        eq("dunkl.zeta_zbar", "[zeta, zbar] = sigma(-1)", ze.commutator(&zb), sigma(-1));
        eq("dunkl.zetabar_zbar", "[zetabar, zbar] = 1 - sigma(0)", zeb.commutator(&zb), one.sub(&sigma(0)));
        let mixed = z.mul(&sigma(0)).add(&zb.mul(&sigma(1))).scale(&half(f));
        eq("dunkl.hz_z", "[H_z, z] = z - (z sigma(0) + zbar sigma(1)) / 2", g.h_z.commutator(&z), z.sub(&mixed));
        eq("dunkl.hzbar_z", "[H_zbar, z] = (z sigma(0) + zbar sigma(1)) / 2", g.h_zbar.commutator(&z), mixed);

        for el in group.elements() {
            let s = Expr::group(f, el);
            for (name, op) in [("eplus", &g.e_plus), ("eminus", &g.e_minus), ("h", &g.h)] {
                eq(
                    &format!("invariance.{name}.{}", Letter::Group(el)),
                    "E+, E-, H commute with G",
                    s.commutator(op),
                    Expr::zero(f),
                );
            }
        }
        extra.extend(form_entries(ctx)?);
    }

    if set.includes(RelationSet::U11) {
        eq("u11.z0_eplus", "[Z0, E+] = 0", g.z0.commutator(&g.e_plus), Expr::zero(f));
        eq("u11.z0_eminus", "[Z0, E-] = 0", g.z0.commutator(&g.e_minus), Expr::zero(f));
        eq("u11.z0_h", "[Z0, H] = 0", g.z0.commutator(&g.h), Expr::zero(f));
        eq("u11.x_is_i_z0", "x eta - y xi = -i Z0", x.mul(&eta).sub(&y.mul(&xi)), g.x.neg());
        for a in 0..ctx.m() as i64 {
            let r = Expr::group(f, group.rotation(a));
            eq(&format!("u11.rotation_z0.r{a}"), "rotations commute with Z0", r.commutator(&g.z0), Expr::zero(f));
        }
        for n in 1..=ctx.max_degree() as i64 {
            let (lhs, rhs) = ad_z0_power(ctx, &g.z0, n, false);
            eq(&format!("u11.ad_z0_z.n{n}"), "[Z0, z^n] expansion", lhs, rhs);
            let (lhs, rhs) = ad_z0_power(ctx, &g.z0, n, true);
            eq(&format!("u11.ad_z0_zbar.n{n}"), "[Z0, zbar^n] expansion", lhs, rhs);
        }
        let z0 = g.z0.materialize(ctx, Space::Scalar)?;
        for el in group.reflections() {
            let s = Expr::group(f, el).materialize(ctx, Space::Scalar)?;
            extra.push(check_nonzero(
                &format!("u11.reflection_z0.{}", Letter::Group(el)),
                "reflections do not commute with Z0",
                &z0.commutator(&s),
            ));
        }
        extra.push(theta_entry(ctx, &z0));
    }
    let mut out = Vec::with_capacity(checks.len() + extra.len());
    for (id, anchor, lhs, rhs) in &checks {
        out.push(check_identity(ctx, Space::Scalar, id, anchor, lhs, rhs)?);
    }
    out.extend(extra);
    Ok(out)
}

/// Both sides of the `ad Z0` identity for `z^n` (or `zbar^n` when `bar`).
fn ad_z0_power(ctx: &ModuleContext, z0: &Expr, n: i64, bar: bool) -> (Expr, Expr) {
    let f = ctx.field();
    let (a, b, sign) = if bar { (Letter::Zbar, Letter::Z, -1) } else { (Letter::Z, Letter::Zbar, 1) };
    let pow = |l: Letter, e: i64| Expr::word(f, &vec![l; e as usize]);
    let lhs = z0.commutator(&pow(a, n));
    let mut rhs = pow(a, n)
        .mul(&Expr::int(f, -n).add(&Expr::sigma(ctx, 0)))
        .scale_int(sign)
        .add(&pow(b, n).mul(&Expr::sigma(ctx, sign * n)).scale_int(sign));
    for j in 1..n {
        let term = pow(b, j).mul(&pow(a, n - j)).mul(&Expr::sigma(ctx, sign * j));
        rhs = rhs.add(&term.scale_int(2 * sign));
    }
    (lhs, rhs)
}

/// `H` acts on degree `k` as `(k + 1 - N_c) Id`.
fn h_scalar_entry(ctx: &ModuleContext, h: &GradedOperator) -> Entry {
    let mut degrees = Vec::new();
    let mut locus = None;
    for k in h.degrees() {
        let value = ctx.scalar(k as i64 + 1) - ctx.n_c();
        let expected = crate::linalg::Matrix::scalar(ctx.field(), ctx.dim(k as i64), &value);
        if let Some((r, c)) = h.block(k).expect("degree present").sub(&expected).first_nonzero() {
            locus = Some(format!("degree {k}, entry ({r}, {c})"));
            break;
        }
        degrees.push(k);
    }
    Entry::new("sl2.h_scalar", "H acts on degree k by k + 1 - N_c", Status::from_bool(locus.is_none()))
        .with_locus(locus)
        .with_data(json!({ "degrees": degrees, "n_c": ctx.n_c().to_exact_string() }))
}

/// `theta o Z0 o theta = -Z0` on every degree.
fn theta_entry(ctx: &ModuleContext, z0: &GradedOperator) -> Entry {
    let mut degrees = Vec::new();
    let mut locus = None;
    for k in z0.degrees() {
        let t = theta_matrix(ctx, k);
        let block = z0.block(k).expect("degree present");
        let conj = block.conj_transpose().transpose();
        let lhs = t.mul(&conj).mul(&t);
        if let Some((r, c)) = lhs.add(block).first_nonzero() {
            locus = Some(format!("degree {k}, entry ({r}, {c})"));
            break;
        }
        degrees.push(k);
    }
    Entry::new("u11.theta_z0", "theta Z0 theta = -Z0", Status::from_bool(locus.is_none()))
        .with_locus(locus)
        .with_data(json!({ "degrees": degrees }))
}

/// Hermitian symmetry of the Gram blocks and the adjointness relations
/// `beta(z p, q) = beta(p, 2 zeta q)`, `beta(zbar p, q) = beta(p, 2 zetabar q)`
/// and `beta(s p, q) = beta(p, s q)`.
fn form_entries(ctx: &ModuleContext) -> Result<Vec<Entry>, CherednikError> {
    let f = ctx.field();
    let max = ctx.max_degree();
    let grams = (0..=max).map(|k| contravariant_gram(ctx, k)).collect::<Result<Vec<_>, _>>()?;
    let conj = |m: &crate::linalg::Matrix| m.conj_transpose().transpose();
    let two = Cyclotomic::from_int(f, 2);

    let herm_fail = grams.iter().position(|g| !g.is_hermitian());
    let mut out = vec![Entry::new("form.hermitian", "contravariant form is Hermitian", Status::from_bool(herm_fail.is_none()))
        .with_locus(herm_fail.map(|k| format!("degree {k}")))];

    let pairs = [
        ("form.adjoint_z", "beta(z p, q) = beta(p, 2 zeta q)", Letter::Z, Letter::Zeta),
        ("form.adjoint_zbar", "beta(zbar p, q) = beta(p, 2 zetabar q)", Letter::Zbar, Letter::ZetaBar),
    ];
    for (id, anchor, up, down) in pairs {
        let up = ctx.letter(Space::Scalar, up)?;
        let down = ctx.letter(Space::Scalar, down)?;
        let mut locus = None;
        for k in 0..max {
            let lhs = up.block(k).expect("raising block").transpose().mul(&grams[k + 1]);
            let rhs = grams[k].mul(&conj(&down.block(k + 1).expect("lowering block").scale(&two)));
            if let Some((r, c)) = lhs.sub(&rhs).first_nonzero() {
                locus = Some(format!("degree {k}, entry ({r}, {c})"));
                break;
            }
        }
        out.push(Entry::new(id, anchor, Status::from_bool(locus.is_none())).with_locus(locus));
    }

    let mut locus = None;
    'outer: for el in ctx.group().reflections() {
        let s = ctx.letter(Space::Scalar, Letter::Group(el))?;
        for (k, gram) in grams.iter().enumerate() {
            let sk = s.block(k).expect("group block");
            if let Some((r, c)) = sk.transpose().mul(gram).sub(&gram.mul(&conj(sk))).first_nonzero() {
                locus = Some(format!("{} degree {k}, entry ({r}, {c})", Letter::Group(el)));
                break 'outer;
            }
        }
    }
    out.push(Entry::new("form.adjoint_group", "beta(s p, q) = beta(p, s q)", Status::from_bool(locus.is_none())).with_locus(locus));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::Irrep;
    use crate::scalars::{parse_rational, ParamValues};

    fn failures(m: u32, tau: Irrep, c: ParamValues, max: usize) -> Vec<Entry> {
        let ctx = ModuleContext::new(m, tau, c, max).unwrap();
        verify_relations(&ctx, RelationSet::All)
            .unwrap()
            .into_iter()
            .filter(|e| !e.status.is_pass())
            .collect()
    }

    #[test]
    fn suite_passes_generic_point() {
        let c = ParamValues::uniform(parse_rational("1/3").unwrap());
        let bad = failures(5, Irrep::Triv, c, 8);
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn suite_passes_split_parameters_on_rho() {
        let c = ParamValues::new(4, parse_rational("1/5").unwrap(), parse_rational("1/7").unwrap()).unwrap();
        let bad = failures(4, Irrep::Rho(1), c, 6);
        assert!(bad.is_empty(), "{bad:#?}");
        let c = ParamValues::new(6, parse_rational("1/5").unwrap(), parse_rational("1/7").unwrap()).unwrap();
        let bad = failures(6, Irrep::Chi0, c, 6);
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn classical_point_passes() {
        let bad = failures(3, Irrep::Sign, ParamValues::zero(), 6);
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn wrong_identity_is_caught() {
        let ctx = ModuleContext::new(3, Irrep::Triv, ParamValues::uniform(parse_rational("1/2").unwrap()), 4).unwrap();
        let f = ctx.field();
        let lhs = Expr::zeta(f).commutator(&Expr::z(f));
        let e = check_identity(&ctx, Space::Scalar, "x", "x", &lhs, &Expr::int(f, 1)).unwrap();
        assert!(e.status.is_fail());
        assert!(e.locus.unwrap().starts_with("degree 0"));
    }
}
