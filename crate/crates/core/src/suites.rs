//! Report-level drivers: each function runs one family of checks on a
//! context and returns report entries. The CLI, the acceptance tests and
//! the examples all go through here.

use std::str::FromStr;

use serde_json::json;
use thiserror::Error;

use crate::cherednik::{verify_relations, CherednikError, GramSummary, ModuleContext, RelationSet};
use crate::clifford::{
    mong_decompose, random_harmonic_inputs, spinor_decomposition_report, verify_scasimir, verify_superalgebra, CliffordError,
};
use crate::dihedral::{sigma_on_irrep, sigma_scalar};
use crate::harmonics::{
    complex_json, e_minus_block, eigenvectors, proj_matrix, resonance, scalar_decomposition_report, spectrum, HarmonicsError,
    RESIDUAL_TOL,
};
use crate::report::{Entry, Status};
use crate::scalars::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error(transparent)]
    Cherednik(#[from] CherednikError),
    #[error(transparent)]
    Harmonics(#[from] HarmonicsError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// Relation families selectable by `verify --suite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Sl2,
    U11,
    U21,
    Scasimir,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sl2" => Ok(Suite::Sl2),
            "u11" => Ok(Suite::U11),
            "u21" => Ok(Suite::U21),
            "scasimir" => Ok(Suite::Scasimir),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other}")),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Sl2 => "sl2",
            Suite::U11 => "u11",
            Suite::U21 => "u21",
            Suite::Scasimir => "scasimir",
            Suite::All => "all",
        }
    }
}

/// `sigma_n` directly against its closed form for `n in [0, 2m)`, and the
/// character-table action against the group-algebra action.
pub fn sigma_entries(ctx: &ModuleContext) -> Result<Vec<Entry>, SuiteError> {
    let m = ctx.m();
    let mut out = Vec::new();
    for n in 0..2 * m as i64 {
        let s = sigma_scalar(n, m, ctx.params());
        let table = sigma_on_irrep(ctx.tau(), m, n, ctx.params()).map_err(CherednikError::from)?;
        out.push(
            Entry::new(
                format!("sigma.n{n}"),
                "sigma_n closed form and tau(sigma(n))",
                Status::from_bool(s.closed_form_agrees && table.table_agrees),
            )
            .with_data(json!({
                "n": n,
                "value": s.value.to_exact_string(),
                "closed_form": s.closed_form.to_exact_string(),
                "irrep_table_agrees": table.table_agrees,
            })),
        );
    }
    Ok(out)
}

pub fn verify(ctx: &ModuleContext, suite: Suite) -> Result<Vec<Entry>, SuiteError> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Sl2 | Suite::All) {
        out.extend(sigma_entries(ctx)?);
    }
    match suite {
        Suite::Sl2 => out.extend(verify_relations(ctx, RelationSet::Sl2)?),
        Suite::U11 => out.extend(verify_relations(ctx, RelationSet::U11)?),
        Suite::All => out.extend(verify_relations(ctx, RelationSet::All)?),
        _ => {}
    }
    if matches!(suite, Suite::U21 | Suite::All) {
        out.extend(verify_superalgebra(ctx)?);
    }
    if matches!(suite, Suite::Scasimir | Suite::All) {
        out.extend(verify_scasimir(ctx)?);
    }
    Ok(out)
}

/// `E- Proj_k = 0` and `Proj_k^2 = Proj_k`, exact; skipped at resonance.
pub fn projection_entry(ctx: &ModuleContext, k: usize) -> Result<Entry, SuiteError> {
    let id = format!("projection.k{k}");
    let anchor = "Proj_k onto ker E-";
    if let Some(r) = resonance(ctx, k) {
        return Ok(Entry::new(id, anchor, Status::Skipped(format!("resonant: {r}"))));
    }
    let p = proj_matrix(ctx, k)?;
    let e = e_minus_block(ctx, k)?;
    let annihilated = e.rows() == 0 || e.mul(&p).is_zero();
    let idempotent = p.mul(&p) == p;
    Ok(Entry::new(id, anchor, Status::from_bool(annihilated && idempotent))
        .with_data(json!({ "annihilated": annihilated, "idempotent": idempotent })))
}

/// Float eigenvector residuals at one degree; at `epsilon = -1` (`+1`) the
/// `h^+` (`h^-`) vectors are also checked against `ker zeta` (`ker zetabar`).
pub fn eigenvector_entry(ctx: &ModuleContext, k: usize, epsilon: &Rational) -> Result<Entry, SuiteError> {
    let id = format!("eigenvectors.k{k}");
    let anchor = "closed-form eigenvectors of Z0 + epsilon sigma";
    if let Some(r) = resonance(ctx, k) {
        return Ok(Entry::new(id, anchor, Status::Skipped(format!("resonant: {r}"))));
    }
    let pairs = eigenvectors(ctx, k, epsilon)?;
    let max_res = pairs.iter().map(|p| p.residual).fold(0.0, f64::max);
    let kernel: Vec<f64> = pairs.iter().filter_map(|p| p.kernel_residual).collect();
    let max_kernel = kernel.iter().copied().fold(0.0, f64::max);
    let ok = max_res <= RESIDUAL_TOL && max_kernel <= RESIDUAL_TOL;
    Ok(Entry::new(id, anchor, Status::from_bool(ok)).with_data(json!({
        "vectors": pairs.len(),
        "fallbacks": pairs.iter().filter(|p| p.fallback).count(),
        "max_residual_below_tol": max_res <= RESIDUAL_TOL,
        "kernel_checks": kernel.len(),
        "max_kernel_residual_below_tol": max_kernel <= RESIDUAL_TOL,
        "lambdas": pairs.iter().map(|p| json!({"sign": p.sign.to_string(), "sigma": p.sigma_label, "lambda": complex_json(p.lambda)})).collect::<Vec<_>>(),
    })))
}

pub fn spectrum_entries(ctx: &ModuleContext, epsilon: &Rational) -> Result<Vec<Entry>, SuiteError> {
    let mut out = Vec::new();
    for k in 0..=ctx.max_degree() {
        let datum = spectrum(ctx, k, epsilon)?;
        // at resonance ker E- is larger than the string count predicts
        let status = match &datum.resonance {
            Some(r) => Status::Skipped(format!("resonant: {r}")),
            None => Status::from_bool(datum.charpoly_matches && datum.float_matches()),
        };
        out.push(
            Entry::new(format!("spectrum.k{k}"), "eigenvalues of Z0 + epsilon sigma on H_k", status).with_data(datum.to_json()),
        );
        if k >= 1 {
            out.push(eigenvector_entry(ctx, k, epsilon)?);
        }
        out.push(projection_entry(ctx, k)?);
    }
    out.extend(scalar_decomposition_report(ctx, epsilon)?);
    Ok(out)
}

/// Monogenic tables plus randomized decomposition round trips,
/// `samples` inputs per `(k, l)`.
pub fn spinor_entries(ctx: &ModuleContext, samples: usize, seed: u64) -> Result<Vec<Entry>, SuiteError> {
    let mut out = spinor_decomposition_report(ctx)?;
    for k in 0..=ctx.max_degree() {
        for l in 0..2usize {
            out.push(round_trip_entry(ctx, k, l, samples, seed)?);
        }
    }
    Ok(out)
}

pub fn round_trip_entry(ctx: &ModuleContext, k: usize, l: usize, samples: usize, seed: u64) -> Result<Entry, SuiteError> {
    let id = format!("mongdecomp.k{k}.l{l}");
    let anchor = "H = M_k + F+ M + Fbar+ M + (l1 F+ Fbar+ - l2 Fbar+ F+) M3";
    let inputs = random_harmonic_inputs(ctx, k, l, samples, seed)?;
    if inputs.is_empty() {
        return Ok(Entry::new(id, anchor, Status::Skipped("no Z1-eigenvector in ker E-".into())));
    }
    let mut failed = None;
    let mut degenerate = None;
    let mut lambdas = Vec::new();
    for (i, (h, nu)) in inputs.iter().enumerate() {
        match mong_decompose(ctx, k, l, h, nu) {
            Ok(parts) => {
                let pair = (parts.lambda1.to_exact_string(), parts.lambda2.to_exact_string());
                if !lambdas.contains(&pair) {
                    lambdas.push(pair);
                }
                for (name, ok) in parts.verify(ctx)? {
                    if !ok && failed.is_none() {
                        failed = Some(format!("sample {i}: {name}"));
                    }
                }
            }
            Err(CliffordError::DegenerateDenominator { name }) => {
                degenerate.get_or_insert(format!("sample {i}: {name} = 0"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let status = match (&failed, &degenerate) {
        (Some(_), _) => Status::Fail,
        (None, Some(d)) => Status::Skipped(format!("degenerate denominator, {d}")),
        (None, None) => Status::Pass,
    };
    Ok(Entry::new(id, anchor, status).with_locus(failed).with_data(json!({
        "samples": inputs.len(),
        "lambdas": lambdas.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })))
}

fn round12(x: f64) -> f64 {
    let v = (x * 1e12).round() / 1e12;
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Float positivity of the contravariant form, one entry per degree and a
/// final entry naming the first degree where it fails.
pub fn gram_entries(ctx: &ModuleContext, tol: f64) -> Result<Vec<Entry>, SuiteError> {
    let mut out = Vec::new();
    let mut first_failure = None;
    for k in 0..=ctx.max_degree() {
        let s = GramSummary::compute(ctx, k)?;
        let ok = s.positive(tol);
        if !ok && first_failure.is_none() {
            first_failure = Some(k);
        }
        out.push(
            Entry::new(format!("gram.k{k}"), "contravariant form is positive definite", Status::from_bool(ok)).with_data(json!({
                "k": k,
                "hermitian": s.hermitian,
                "min_eigenvalue": round12(s.min_eigenvalue),
                "max_eigenvalue": round12(s.max_eigenvalue),
            })),
        );
    }
    out.push(
        Entry::new("gram.first_failure", "contravariant form is positive definite", Status::from_bool(first_failure.is_none()))
            .with_locus(first_failure.map(|k| format!("degree {k}")))
            .with_data(json!({ "first_failure": first_failure, "tolerance": tol })),
    );
    Ok(out)
}
