//! Monogenic spaces, their u(2|1) lowest weights, and the splitting of a
//! harmonic spinor into monogenic pieces.
//!
//! Run with `cargo run --example monogenic_decomposition`.

use cherednik_howe::cherednik::ModuleContext;
use cherednik_howe::clifford::{mong_decompose, monogenics, random_harmonic_inputs};
use cherednik_howe::dihedral::Irrep;
use cherednik_howe::scalars::ParamValues;

fn main() {
    let params = ParamValues::parse(5, "1/4", "1/4").expect("valid parameters");
    let ctx = ModuleContext::new(5, Irrep::Rho(1), params, 6).expect("valid context");
    println!("{}, N_c = {}", ctx.label(), ctx.n_c());

    for k in 0..=4 {
        let dims: Vec<usize> = (0..2).map(|l| monogenics(&ctx, k, l).expect("kernel").dim()).collect();
        println!("  dim M_{k}^0 = {}, dim M_{k}^1 = {}", dims[0], dims[1]);
    }

    let (k, l) = (4, 1);
    for (input, nu) in random_harmonic_inputs(&ctx, k, l, 2, 7).expect("inputs") {
        let parts = mong_decompose(&ctx, k, l, &input, &nu).expect("decomposition");
        println!("Z1 = {nu}: lambda1 = {}, lambda2 = {}", parts.lambda1, parts.lambda2);
        for (check, ok) in parts.verify(&ctx).expect("verify") {
            println!("  {check}: {ok}");
        }
    }
}
