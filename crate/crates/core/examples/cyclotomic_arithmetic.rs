//! Exact arithmetic in Q(zeta_L) and an exact kernel over it.
//!
//! Run with `cargo run --example cyclotomic_arithmetic`.

use cherednik_howe::linalg::Matrix;
use cherednik_howe::scalars::{field_for, Cyclotomic};

fn main() {
    // I_2(5) lives in Q(zeta_20): lcm(4, 2m) with m = 5
    let field = field_for(5);
    println!("field order {}, degree {}", field.order(), field.degree());

    let w = Cyclotomic::root_of_unity(field, 2); // exp(2 pi i / 10)
    let i = Cyclotomic::i(field);
    let one = Cyclotomic::one(field);

    // 2 cos(pi / 5) is the golden ratio: phi^2 = phi + 1
    let phi = &w + &w.conj();
    println!("phi = {} ~ {:.12}", phi, phi.to_complex().re);
    println!("phi^2 - phi - 1 = {}", &(&phi * &phi - &phi) - &one);

    let z = &w + &i;
    let inv = z.inv().expect("nonzero");
    println!("(w + i)^-1 = {inv}");
    println!("(w + i)(w + i)^-1 = {}", &z * &inv);

    // rank-deficient matrix over the field: the second row is phi times the first
    let rows = vec![
        vec![one.clone(), phi.clone(), i.clone()],
        vec![phi.clone(), &phi * &phi, &phi * &i],
        vec![Cyclotomic::zero(field), one.clone(), w.clone()],
    ];
    let a = Matrix::from_rows(field, 3, &rows);
    println!("rank = {}", a.rank());
    for v in a.kernel() {
        let image = a.apply(&v);
        println!("kernel vector {:?}, A v = 0: {}", v.iter().map(ToString::to_string).collect::<Vec<_>>(), image.iter().all(Cyclotomic::is_zero));
    }
}
