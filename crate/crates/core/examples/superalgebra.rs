//! The u(2|1) relations, the spinor Casimir and the rho(G) twist on
//! spinor-valued polynomials, with unequal parameters on the two classes.
//!
//! Run with `cargo run --example superalgebra`.

use cherednik_howe::cherednik::ModuleContext;
use cherednik_howe::clifford::{verify_scasimir, verify_superalgebra};
use cherednik_howe::dihedral::Irrep;
use cherednik_howe::report::Entry;
use cherednik_howe::scalars::ParamValues;

fn summarize(name: &str, entries: &[Entry]) {
    let failed: Vec<&str> = entries.iter().filter(|e| e.status.is_fail()).map(|e| e.id.as_str()).collect();
    println!("{name}: {} checks, {} failed {:?}", entries.len(), failed.len(), failed);
}

fn main() {
    let params = ParamValues::parse(4, "1/5", "1/7").expect("valid parameters");
    let ctx = ModuleContext::new(4, Irrep::Rho(1), params, 6).expect("valid context");
    println!("{}", ctx.label());

    let sup = verify_superalgebra(&ctx).expect("superalgebra");
    summarize("u(2|1)", &sup);
    for e in sup.iter().filter(|e| e.id.starts_with("super.z1_block")) {
        println!("  {} {} {}", e.id, e.status.label(), e.data);
    }
    summarize("spinor Casimir", &verify_scasimir(&ctx).expect("scasimir"));
}
