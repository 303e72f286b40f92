//! Exact scalars: the cyclotomic field `Q(zeta_L)` and rational parameters.

mod cyclotomic;
mod field;
mod params;

pub use cyclotomic::{cyc_root_of_unity, Cyclotomic};
pub use field::CyclotomicField;
pub use params::{parse_rational, ParamValues};

pub use num_rational::BigRational as Rational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclotomic order {0} is not a positive multiple of 4")]
    InvalidOrder(u32),
    #[error("cannot embed Q(zeta_{0}) into Q(zeta_{1})")]
    IncompatibleOrders(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("c_even and c_odd must agree for odd m (got {0} and {1})")]
    SplitParameterOddM(String, String),
}

/// Field order `lcm(4, 2m)` used for the dihedral group of order `2m`.
pub fn field_order_for(m: u32) -> u32 {
    num_integer::lcm(4, 2 * m)
}

/// The default scalar field for `I_2(m)`.
pub fn field_for(m: u32) -> &'static CyclotomicField {
    CyclotomicField::get(field_order_for(m)).expect("lcm(4, 2m) is a multiple of 4")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(field_order_for(3), 12);
        assert_eq!(field_order_for(4), 8);
        assert_eq!(field_order_for(5), 20);
        assert_eq!(field_order_for(6), 12);
        assert_eq!(field_order_for(8), 16);
    }
}
