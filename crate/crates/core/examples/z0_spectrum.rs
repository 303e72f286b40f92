//! Eigenvalues of Z0 + epsilon sigma on harmonics against the closed formula
//! lambda^2 = (k - N_c)^2 - (1 - epsilon^2) sigma_k^2, and the eigenvectors
//! built from the harmonic projection.
//!
//! Run with `cargo run --example z0_spectrum`.

use cherednik_howe::cherednik::ModuleContext;
use cherednik_howe::dihedral::Irrep;
use cherednik_howe::harmonics::{eigenvectors, spectrum};
use cherednik_howe::scalars::{parse_rational, ParamValues};

fn main() {
    let c = ParamValues::parse(3, "1/10", "1/10").expect("valid parameters");
    let ctx = ModuleContext::new(3, Irrep::Triv, c, 8).expect("valid context");

    for eps in ["0", "-1", "1/2"] {
        let epsilon = parse_rational(eps).expect("rational");
        println!("epsilon = {eps}");
        for k in 0..=6 {
            let d = spectrum(&ctx, k, &epsilon).expect("spectrum");
            let lsq: Vec<String> = d.lambda_squared.iter().map(ToString::to_string).collect();
            println!(
                "  k = {k}: dim H_k = {}, lambda^2 = [{}], charpoly matches: {}, float error {:.1e}",
                d.harmonic_dim,
                lsq.join(", "),
                d.charpoly_matches,
                d.float_error
            );
        }
    }

    // at epsilon = -1 the h^+ vectors are killed by zeta
    let epsilon = parse_rational("-1").expect("rational");
    for pair in eigenvectors(&ctx, 3, &epsilon).expect("eigenvectors") {
        println!(
            "k = 3, h^{} ({}): lambda = {:.6}, residual {:.1e}, zeta residual {:?}",
            pair.sign, pair.sigma_label, pair.lambda, pair.residual, pair.kernel_residual
        );
    }
}
