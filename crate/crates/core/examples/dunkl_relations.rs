//! Dunkl operators on the standard module and the sl2 / u(1,1) relation suite.
//!
//! Run with `cargo run --example dunkl_relations`.

use cherednik_howe::cherednik::{verify_relations, ModuleContext, ModuleElement, RelationSet, Var};
use cherednik_howe::dihedral::Irrep;
use cherednik_howe::scalars::{Cyclotomic, ParamValues};

fn show(p: &ModuleElement) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = p.terms().map(|(&(a, b, v), c)| format!("({c}) z^{a} zbar^{b} (x) v{v}")).collect();
    terms.join(" + ")
}

fn main() {
    let c = ParamValues::parse(3, "1/10", "1/10").expect("valid parameters");
    let ctx = ModuleContext::new(3, Irrep::Triv, c, 6).expect("valid context");
    let one = Cyclotomic::one(ctx.field());

    // zeta and zetabar on z^2 and on z zbar
    for (a, b) in [(2, 0), (1, 1), (0, 3)] {
        let p = ModuleElement::monomial(a, b, 0, one.clone());
        println!("p = {}", show(&p));
        println!("  zeta p    = {}", show(&ctx.dunkl_apply(Var::Z, &p)));
        println!("  zetabar p = {}", show(&ctx.dunkl_apply(Var::Zbar, &p)));
    }

    let entries = verify_relations(&ctx, RelationSet::All).expect("relations run");
    let failed: Vec<&str> = entries.iter().filter(|e| e.status.is_fail()).map(|e| e.id.as_str()).collect();
    println!("{} relation checks at {}, failures: {:?}", entries.len(), ctx.label(), failed);
}
