//! The group-algebra elements sigma(n) = sum_j c_j omega^{jn} s_j: their
//! scalar parts, closed forms, and their action on each irrep.
//!
//! Run with `cargo run --example sigma_calculus`.

use cherednik_howe::dihedral::{n_c, sigma_scalar, sigma_set, Irrep};
use cherednik_howe::scalars::ParamValues;

fn main() {
    let m = 6;
    let c = ParamValues::parse(m, "1/5", "1/7").expect("valid parameters");

    println!("sigma_n for m = {m}, c_even = 1/5, c_odd = 1/7");
    for n in 0..2 * m as i64 {
        let s = sigma_scalar(n, m, &c);
        println!("  n = {n:2}: {:>8}  closed form agrees: {}", s.value.to_string(), s.closed_form_agrees);
    }

    for tau in Irrep::all(m) {
        println!("tau = {tau}: N_c(tau) = {}", n_c(tau, m, &c));
        for k in 0..4 {
            let entries = sigma_set(tau, m, k, &c);
            let shown: Vec<String> = entries.iter().map(|e| format!("{} = {}", e.label, e.value)).collect();
            println!("  sigma(tau)_{k}: {}", shown.join(", "));
        }
    }
}
