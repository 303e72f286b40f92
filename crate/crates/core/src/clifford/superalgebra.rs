use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cherednik::{comparison_entry, generators, z0_eps, Expr, GradedOperator, Letter, ModuleContext, Space};
use crate::dihedral::DihedralElement;
use crate::report::{Entry, Status};
use crate::scalars::Cyclotomic;

use super::{root_pairings, root_vector, tau_s, CliffordElement, CliffordError};

/// The nine `u(2|1)` generators on `K_c(tau)` plus the spinor-Casimir pieces.
#[derive(Clone, Debug)]
pub struct SuperGenerators {
    pub e_plus: Expr,
    pub e_minus: Expr,
    pub h: Expr,
    /// `Z1 = Z0 - Omega_c`.
    pub z1: Expr,
    /// `Z2 = fdag f - 1/2`.
    pub z2: Expr,
    /// `Z = 2 Z2 - Z1`.
    pub z: Expr,
    /// `F+ = zbar fdag`.
    pub f_plus: Expr,
    /// `Fbar+ = z f`.
    pub fbar_plus: Expr,
    /// `F- = 2 zeta fdag`.
    pub f_minus: Expr,
    /// `Fbar- = 2 zetabar f`.
    pub fbar_minus: Expr,
    pub d_plus: Expr,
    pub d_minus: Expr,
    pub omega: Expr,
    /// The real angular momentum `O_12` including its Clifford and reflection parts.
    pub o12: Expr,
    /// `(D- D+ - D+ D- - 1) / 2`.
    pub scasimir: Expr,
    /// `i e1 e2 = 1 - 2 fdag f`.
    pub ie1e2: Expr,
}

impl SuperGenerators {
    /// The nine generators as `(name, expression, odd)`.
    pub fn basis(&self) -> Vec<(&'static str, &Expr, bool)> {
        vec![
            ("E+", &self.e_plus, false),
            ("E-", &self.e_minus, false),
            ("H", &self.h, false),
            ("Z1", &self.z1, false),
            ("Z2", &self.z2, false),
            ("F+", &self.f_plus, true),
            ("Fbar+", &self.fbar_plus, true),
            ("F-", &self.f_minus, true),
            ("Fbar-", &self.fbar_minus, true),
        ]
    }
}

/// `Omega_c = sum_j c_j s_j (x) tau_{s_j}`.
pub fn omega_c(ctx: &ModuleContext) -> Result<Expr, CliffordError> {
    let f = ctx.field();
    let mut out = Expr::zero(f);
    for s in ctx.group().reflections() {
        let j = s.index as i64;
        let c = ctx.params().c_cyc(f, j);
        if c.is_zero() {
            continue;
        }
        let tau = tau_s(f, ctx.m(), j)?.to_expr();
        out = out.add(&Expr::group(f, s).mul(&tau).scale(&c));
    }
    Ok(out)
}

/// `rho(s_j) = s_j (x) alpha_j`.
pub fn rho(ctx: &ModuleContext, s: DihedralElement) -> Expr {
    let f = ctx.field();
    Expr::group(f, s).mul(&root_vector(f, ctx.m(), s.index as i64).to_expr())
}

/// `rho(s_j) rho(s_m)`, an even lift of a rotation.
pub fn rotation_lift(ctx: &ModuleContext, j: i64) -> Expr {
    let g = ctx.group();
    rho(ctx, g.reflection(j)).mul(&rho(ctx, g.reflection(ctx.m() as i64)))
}

pub fn super_generators(ctx: &ModuleContext) -> Result<SuperGenerators, CliffordError> {
    let f = ctx.field();
    let scalar = generators(ctx);
    let half = Cyclotomic::from_int(f, 2).inv().expect("2 is invertible");
    let one = Expr::int(f, 1);
    let (fl, fd) = (Expr::letter(f, Letter::F), Expr::letter(f, Letter::FDag));
    let (e1, e2) = (CliffordElement::e1(f).to_expr(), CliffordElement::e2(f).to_expr());

    let z2 = fd.mul(&fl).sub(&one.scale(&half));
    let omega = omega_c(ctx)?;
    let z1 = scalar.z0.sub(&omega);
    let z = z2.scale_int(2).sub(&z1);
    let f_plus = Expr::zbar(f).mul(&fd);
    let fbar_plus = Expr::z(f).mul(&fl);
    let f_minus = Expr::zeta(f).mul(&fd).scale_int(2);
    let fbar_minus = Expr::zetabar(f).mul(&fl).scale_int(2);
    let d_plus = f_plus.add(&fbar_plus);
    let d_minus = f_minus.add(&fbar_minus);

    let mut o12 = Expr::x(f)
        .mul(&Expr::eta(f))
        .sub(&Expr::y(f).mul(&Expr::xi(f)))
        .add(&e1.mul(&e2).scale(&half));
    for s in ctx.group().reflections() {
        let j = s.index as i64;
        let c = ctx.params().c_cyc(f, j);
        if c.is_zero() {
            continue;
        }
        let (ax, ay) = root_pairings(f, ctx.m(), j);
        let cliff = e1.scale(&ay).sub(&e2.scale(&ax));
        o12 = o12.add(&rho(ctx, s).mul(&cliff).scale(&c));
    }
    let scasimir = d_minus
        .mul(&d_plus)
        .sub(&d_plus.mul(&d_minus))
        .sub(&one)
        .scale(&half);
    let ie1e2 = e1.mul(&e2).scale(&Cyclotomic::i(f));

    Ok(SuperGenerators {
        e_plus: scalar.e_plus,
        e_minus: scalar.e_minus,
        h: scalar.h,
        z1,
        z2,
        z,
        f_plus,
        fbar_plus,
        f_minus,
        fbar_minus,
        d_plus,
        d_minus,
        omega,
        o12,
        scasimir,
        ie1e2,
    })
}

/// Materialized generators, cached on the context.
pub(super) fn spinor_op(ctx: &ModuleContext, name: &str, e: &Expr) -> Result<Arc<GradedOperator>, CliffordError> {
    Ok(ctx.named(Space::Spinor, name, || e.clone())?)
}

/// The generators materialized once on `K_c(tau)`.
struct Ops {
    ep: Arc<GradedOperator>,
    em: Arc<GradedOperator>,
    h: Arc<GradedOperator>,
    z: Arc<GradedOperator>,
    z1: Arc<GradedOperator>,
    z2: Arc<GradedOperator>,
    fp: Arc<GradedOperator>,
    fbp: Arc<GradedOperator>,
    fm: Arc<GradedOperator>,
    fbm: Arc<GradedOperator>,
}

impl Ops {
    fn new(ctx: &ModuleContext, g: &SuperGenerators) -> Result<Self, CliffordError> {
        Ok(Ops {
            ep: spinor_op(ctx, "E+", &g.e_plus)?,
            em: spinor_op(ctx, "E-", &g.e_minus)?,
            h: spinor_op(ctx, "H", &g.h)?,
            z: spinor_op(ctx, "Z", &g.z)?,
            z1: spinor_op(ctx, "Z1", &g.z1)?,
            z2: spinor_op(ctx, "Z2", &g.z2)?,
            fp: spinor_op(ctx, "F+", &g.f_plus)?,
            fbp: spinor_op(ctx, "Fbar+", &g.fbar_plus)?,
            fm: spinor_op(ctx, "F-", &g.f_minus)?,
            fbm: spinor_op(ctx, "Fbar-", &g.fbar_minus)?,
        })
    }

    /// The nine generators as `(name, operator, odd)`.
    fn basis(&self) -> Vec<(&'static str, &GradedOperator, bool)> {
        vec![
            ("E+", &self.ep, false),
            ("E-", &self.em, false),
            ("H", &self.h, false),
            ("Z1", &self.z1, false),
            ("Z2", &self.z2, false),
            ("F+", &self.fp, true),
            ("Fbar+", &self.fbp, true),
            ("F-", &self.fm, true),
            ("Fbar-", &self.fbm, true),
        ]
    }
}

/// `lhs == rhs`, or `lhs == 0` when `rhs` is `None`.
fn op_entry(ctx: &ModuleContext, id: &str, anchor: &str, lhs: &GradedOperator, rhs: Option<GradedOperator>) -> Entry {
    let rhs = rhs.unwrap_or_else(|| GradedOperator::zero(ctx, Space::Spinor, lhs.shift()));
    comparison_entry(id, anchor, lhs.compare(&rhs))
}

/// The `u(2|1)` relations on `K_c(tau)`, exact on every materialized degree.
pub fn verify_superalgebra(ctx: &ModuleContext) -> Result<Vec<Entry>, CliffordError> {
    let g = super_generators(ctx)?;
    let o = Ops::new(ctx, &g)?;
    let (h, z) = (&*o.h, &*o.z);
    let (fp, fbp, fm, fbm) = (&*o.fp, &*o.fbp, &*o.fm, &*o.fbm);
    let (ep, em) = (&*o.ep, &*o.em);
    let int = |v: i64| ctx.scalar(v);
    let anchor_even = "even part: sl2 triple and central Z";
    let anchor_odd = "odd-odd anticommutators";
    let anchor_mixed = "even-odd commutators";
    let anchor_z = "Z-type gradings of the odd generators";

    let mut checks: Vec<(String, &str, GradedOperator, Option<GradedOperator>)> = vec![
        ("super.h_eplus".into(), anchor_even, h.commutator(ep), Some(ep.scale(&int(2)))),
        ("super.h_eminus".into(), anchor_even, h.commutator(em), Some(em.scale(&int(-2)))),
        ("super.eplus_eminus".into(), anchor_even, ep.commutator(em), Some(h.clone())),
        ("super.z_h".into(), anchor_even, z.commutator(h), None),
        ("super.z_eplus".into(), anchor_even, z.commutator(ep), None),
        ("super.z_eminus".into(), anchor_even, z.commutator(em), None),
        ("super.fplus_fplus".into(), anchor_odd, fp.anticommutator(fp), None),
        ("super.fminus_fminus".into(), anchor_odd, fm.anticommutator(fm), None),
        ("super.fbarplus_fbarplus".into(), anchor_odd, fbp.anticommutator(fbp), None),
        ("super.fbarminus_fbarminus".into(), anchor_odd, fbm.anticommutator(fbm), None),
        ("super.fplus_fbarplus".into(), anchor_odd, fp.anticommutator(fbp), Some(ep.scale(&int(2)))),
        ("super.fminus_fbarminus".into(), anchor_odd, fm.anticommutator(fbm), Some(em.scale(&int(-2)))),
        ("super.fplus_fminus".into(), anchor_odd, fp.anticommutator(fm), None),
        ("super.fbarplus_fbarminus".into(), anchor_odd, fbp.anticommutator(fbm), None),
        ("super.fplus_fbarminus".into(), anchor_odd, fp.anticommutator(fbm), Some(h.sub(z))),
        ("super.fminus_fbarplus".into(), anchor_odd, fm.anticommutator(fbp), Some(h.add(z))),
        ("super.eplus_fminus".into(), anchor_mixed, ep.commutator(fm), Some(fp.neg())),
        ("super.eminus_fplus".into(), anchor_mixed, em.commutator(fp), Some(fm.neg())),
        ("super.eplus_fbarminus".into(), anchor_mixed, ep.commutator(fbm), Some(fbp.neg())),
        ("super.eminus_fbarplus".into(), anchor_mixed, em.commutator(fbp), Some(fbm.neg())),
        ("super.eplus_fplus".into(), anchor_mixed, ep.commutator(fp), None),
        ("super.eplus_fbarplus".into(), anchor_mixed, ep.commutator(fbp), None),
        ("super.eminus_fminus".into(), anchor_mixed, em.commutator(fm), None),
        ("super.eminus_fbarminus".into(), anchor_mixed, em.commutator(fbm), None),
        ("super.h_fplus".into(), anchor_mixed, h.commutator(fp), Some(fp.clone())),
        ("super.h_fminus".into(), anchor_mixed, h.commutator(fm), Some(fm.neg())),
        ("super.h_fbarplus".into(), anchor_mixed, h.commutator(fbp), Some(fbp.clone())),
        ("super.h_fbarminus".into(), anchor_mixed, h.commutator(fbm), Some(fbm.neg())),
    ];
    for (name, op) in [("z", z), ("z2", &*o.z2), ("z1", &*o.z1)] {
        for (oname, odd_op, sign) in [("fplus", fp, 1), ("fminus", fm, 1), ("fbarplus", fbp, -1), ("fbarminus", fbm, -1)] {
            checks.push((
                format!("super.{name}_{oname}"),
                anchor_z,
                op.commutator(odd_op),
                Some(odd_op.scale(&int(sign))),
            ));
        }
    }
    let central = o.z1.sub(&o.z2);
    for (name, x, _) in o.basis() {
        checks.push((format!("super.central_z1_minus_z2.{name}"), "Z1 - Z2 is central", central.commutator(x), None));
    }

    let mut out: Vec<Entry> = checks
        .into_iter()
        .map(|(id, anchor, lhs, rhs)| op_entry(ctx, &id, anchor, &lhs, rhs))
        .collect();
    out.extend(z_block_entries(ctx, &o)?);
    out.extend(twist_check(ctx, 8, 0x5eed)?);
    out.extend(rotation_invariance(ctx, &o)?);
    Ok(out)
}

/// `Z1` restricted to spinor degree `l` is `Z0 + (-1)^(l+1) sigma(0)` and
/// `Z2` is `(-1)^(l+1) / 2`.
fn z_block_entries(ctx: &ModuleContext, o: &Ops) -> Result<Vec<Entry>, CliffordError> {
    let f = ctx.field();
    let half = Cyclotomic::from_int(f, 2).inv().expect("2 is invertible");
    let mut out = Vec::new();
    for l in 0..2usize {
        let sign = if l == 0 { -1 } else { 1 };
        let scalar = z0_eps(ctx, &Cyclotomic::from_int(f, sign))?;
        let mut z1_ok = true;
        let mut z2_ok = true;
        let mut locus = None;
        for k in o.z1.degrees() {
            let diag = o.z1.spinor_block(k, l, l).expect("block");
            let off = o.z1.spinor_block(k, 1 - l, l).expect("block");
            if Some(&diag) != scalar.block(k) || !off.is_zero() {
                z1_ok = false;
                locus.get_or_insert(format!("degree {k}"));
            }
            let n = ctx.dim(k as i64);
            let expected = crate::linalg::Matrix::scalar(f, n, &half.scale_int(sign));
            if o.z2.spinor_block(k, l, l).expect("block") != expected || !o.z2.spinor_block(k, 1 - l, l).expect("block").is_zero() {
                z2_ok = false;
            }
        }
        out.push(
            Entry::new(format!("super.z1_block.l{l}"), "Z1 on spinor degree l", Status::from_bool(z1_ok))
                .with_locus(locus)
                .with_data(json!({ "epsilon": sign })),
        );
        out.push(Entry::new(
            format!("super.z2_block.l{l}"),
            "Z2 on spinor degree l",
            Status::from_bool(z2_ok),
        ));
    }
    Ok(out)
}

fn rho_op(ctx: &ModuleContext, s: DihedralElement) -> Result<Arc<GradedOperator>, CliffordError> {
    spinor_op(ctx, &format!("rho(s_{})", s.index), &rho(ctx, s))
}

/// `rho(s) X = (-1)^|X| (s . X) rho(s)` for the generators and for
/// `samples` random words, together with `rho(s)^2 = 1`.
pub fn twist_check(ctx: &ModuleContext, samples: usize, seed: u64) -> Result<Vec<Entry>, CliffordError> {
    let f = ctx.field();
    let group = ctx.group();
    let g = super_generators(ctx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<(String, Expr)> = g.basis().into_iter().map(|(n, e, _)| (n.to_string(), e.clone())).collect();
    let elements = group.elements();
    for i in 0..samples {
        let len = rng.random_range(1..=4);
        let word: Vec<Letter> = (0..len)
            .map(|_| match rng.random_range(0..7) {
                0 => Letter::Z,
                1 => Letter::Zbar,
                2 => Letter::Zeta,
                3 => Letter::ZetaBar,
                4 => Letter::F,
                5 => Letter::FDag,
                _ => Letter::Group(elements[rng.random_range(0..elements.len())]),
            })
            .collect();
        let coef = Cyclotomic::from_int(f, rng.random_range(1..=5));
        xs.push((format!("word{i}"), Expr::word(f, &word).scale(&coef)));
    }
    let materialized: Vec<(String, Arc<GradedOperator>, bool)> = xs
        .iter()
        .map(|(name, x)| Ok((name.clone(), spinor_op(ctx, &format!("twist:{name}"), x)?, x.is_odd())))
        .collect::<Result<_, CliffordError>>()?;

    let mut out = Vec::new();
    for s in group.reflections() {
        let r = rho_op(ctx, s)?;
        let mut failed: Option<String> = None;
        for ((name, x), (_, xop, odd)) in xs.iter().zip(&materialized) {
            let sign = ctx.scalar(if *odd { -1 } else { 1 });
            let acted = x.act(&group, s).materialize(ctx, Space::Spinor)?;
            let lhs = r.compose(xop);
            let rhs = acted.compose(&r).scale(&sign);
            let cmp = lhs.compare(&rhs);
            if !cmp.holds() && failed.is_none() {
                failed = Some(format!("{name}: {}", cmp.locus().unwrap_or_default()));
            }
        }
        out.push(
            Entry::new(
                format!("twist.s{}", s.index),
                "rho(s) X = (-1)^|X| (s.X) rho(s)",
                Status::from_bool(failed.is_none()),
            )
            .with_locus(failed)
            .with_data(json!({ "operators": xs.len() })),
        );
        let id = GradedOperator::identity(ctx, Space::Spinor);
        out.push(comparison_entry(
            &format!("twist.rho_squared.s{}", s.index),
            "rho(s)^2 = 1",
            r.compose(&r).compare(&id),
        ));
    }
    Ok(out)
}

/// The generators commute with every `rho(s_j) rho(s_m)`.
fn rotation_invariance(ctx: &ModuleContext, o: &Ops) -> Result<Vec<Entry>, CliffordError> {
    let group = ctx.group();
    let last = rho_op(ctx, group.reflection(ctx.m() as i64))?;
    let mut out = Vec::new();
    for j in 1..=ctx.m() as i64 {
        let r = rho_op(ctx, group.reflection(j))?.compose(&last);
        let mut failed = None;
        for (name, x, _) in o.basis() {
            let cmp = r.compose(x).compare(&x.compose(&r));
            if !cmp.holds() && failed.is_none() {
                failed = Some(format!("{name}: {}", cmp.locus().unwrap_or_default()));
            }
        }
        out.push(
            Entry::new(
                format!("super.rotation_invariance.j{j}"),
                "generators commute with rho(s_j) rho(s_m)",
                Status::from_bool(failed.is_none()),
            )
            .with_locus(failed),
        );
    }
    Ok(out)
}

/// Relations of the spinor Casimir: `{D+, D-} = 2H`, the `O_12` identities
/// and `O_12` supercommuting with the odd Dirac pieces.
pub fn verify_scasimir(ctx: &ModuleContext) -> Result<Vec<Entry>, CliffordError> {
    let f = ctx.field();
    let g = super_generators(ctx)?;
    let o = Ops::new(ctx, &g)?;
    let i = Cyclotomic::i(f);

    // complex form of i O_12
    let one_half = Expr::int(f, 1).scale(&Cyclotomic::from_int(f, 2).inv().expect("2 is invertible"));
    let fdf = Expr::word(f, &[Letter::FDag, Letter::F]);
    let z0 = generators(ctx).z0;
    let mut complex = z0.add(&one_half).sub(&fdf);
    for s in ctx.group().reflections() {
        let j = s.index as i64;
        let c = ctx.params().c_cyc(f, j);
        if c.is_zero() {
            continue;
        }
        let (ax, ay) = root_pairings(f, ctx.m(), j);
        let z_alpha = &ax + &(&i * &ay);
        let zbar_alpha = &ax - &(&i * &ay);
        let inner = Expr::letter(f, Letter::FDag)
            .scale(&zbar_alpha)
            .sub(&Expr::letter(f, Letter::F).scale(&z_alpha));
        complex = complex.sub(&rho(ctx, s).mul(&inner).scale(&c));
    }

    let dp = o.fp.add(&o.fbp);
    let dm = o.fm.add(&o.fbm);
    let o12 = spinor_op(ctx, "O12", &g.o12)?;
    let io12 = o12.scale(&i);
    let complex = spinor_op(ctx, "iO12 complex", &complex)?;
    let ie1e2 = spinor_op(ctx, "ie1e2", &g.ie1e2)?;
    let one = GradedOperator::identity(ctx, Space::Spinor);
    // D- D+ - D+ D- - 1
    let bracket = dm.compose(&dp).sub(&dp.compose(&dm)).sub(&one);
    let scasimir = bracket.scale(&Cyclotomic::from_int(f, 2).inv().expect("2 is invertible"));

    let anchor = "spinor Casimir and O_12";
    let checks: Vec<(&str, GradedOperator, Option<GradedOperator>)> = vec![
        ("scasimir.dplus_dminus", dp.anticommutator(&dm), Some(o.h.scale(&ctx.scalar(2)))),
        ("scasimir.h_dplus", o.h.commutator(&dp), Some(dp.clone())),
        ("scasimir.h_dminus", o.h.commutator(&dm), Some(dm.neg())),
        ("scasimir.io12_complex_form", io12.clone(), Some((*complex).clone())),
        ("scasimir.z1_minus_z2", o.z1.sub(&o.z2), Some(io12.clone())),
        ("scasimir.io12_factorization", io12.clone(), Some(scasimir.compose(&ie1e2))),
        ("scasimir.io12_via_z2", io12.clone(), Some(bracket.compose(&o.z2).neg())),
        ("scasimir.o12_dplus", o12.commutator(&dp), None),
        ("scasimir.o12_dminus", o12.commutator(&dm), None),
        ("scasimir.o12_h", o12.commutator(&o.h), None),
    ];
    Ok(checks
        .into_iter()
        .map(|(id, lhs, rhs)| op_entry(ctx, id, anchor, &lhs, rhs))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::check_identity;
    use crate::dihedral::Irrep;
    use crate::scalars::{parse_rational, ParamValues};

    fn failures(entries: &[Entry]) -> Vec<String> {
        entries
            .iter()
            .filter(|e| !e.status.is_pass())
            .map(|e| format!("{} {} {:?}", e.id, e.status, e.locus))
            .collect()
    }

    #[test]
    fn superalgebra_generic_point() {
        let ctx = ModuleContext::new(3, Irrep::Triv, ParamValues::uniform(parse_rational("1/3").unwrap()), 6).unwrap();
        let out = verify_superalgebra(&ctx).unwrap();
        assert!(failures(&out).is_empty(), "{:?}", failures(&out));
    }

    #[test]
    fn superalgebra_rho_split() {
        let c = ParamValues::parse(4, "1/5", "1/7").unwrap();
        let ctx = ModuleContext::new(4, Irrep::Rho(1), c, 5).unwrap();
        let out = verify_superalgebra(&ctx).unwrap();
        assert!(failures(&out).is_empty(), "{:?}", failures(&out));
    }

    #[test]
    fn scasimir_split() {
        let c = ParamValues::parse(4, "1/5", "1/7").unwrap();
        for tau in [Irrep::Chi0, Irrep::Rho(1)] {
            let ctx = ModuleContext::new(4, tau, c.clone(), 6).unwrap();
            let out = verify_scasimir(&ctx).unwrap();
            assert!(failures(&out).is_empty(), "{:?}", failures(&out));
        }
    }

    #[test]
    fn broken_generator_is_caught() {
        let ctx = ModuleContext::new(3, Irrep::Triv, ParamValues::uniform(parse_rational("1/3").unwrap()), 4).unwrap();
        let g = super_generators(&ctx).unwrap();
        // dropping the reflection part of Z1 breaks the centrality of Z1 - Z2
        let bad = g.z1.add(&g.omega).sub(&g.z2);
        let e = check_identity(&ctx, Space::Spinor, "bad", "", &bad.commutator(&g.f_plus), &Expr::zero(ctx.field())).unwrap();
        assert!(e.status.is_fail());
    }
}
