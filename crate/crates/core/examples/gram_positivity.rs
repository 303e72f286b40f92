//! Positivity of the contravariant form as c moves away from 0.
//!
//! Run with `cargo run --example gram_positivity`.

use cherednik_howe::cherednik::{GramSummary, ModuleContext};
use cherednik_howe::dihedral::Irrep;
use cherednik_howe::scalars::ParamValues;

fn main() {
    let max_degree = 8;
    for tau in [Irrep::Triv, Irrep::Sign, Irrep::Rho(1)] {
        for c in ["0", "1/10", "1/3", "1", "2"] {
            let params = ParamValues::parse(5, c, c).expect("valid parameters");
            let ctx = ModuleContext::new(5, tau, params, max_degree).expect("valid context");
            let mut min = f64::INFINITY;
            let mut first_failure = None;
            for k in 0..=max_degree {
                let s = GramSummary::compute(&ctx, k).expect("gram");
                min = min.min(s.min_eigenvalue);
                if !s.positive(1e-8) && first_failure.is_none() {
                    first_failure = Some(k);
                }
            }
            println!("m = 5, tau = {tau:6}, c = {c:4}: min eigenvalue {min:>12.6e}, first failure {first_failure:?}");
        }
    }
}
