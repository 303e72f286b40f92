use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{Cyclotomic, CyclotomicField, ScalarError};

/// Parses `"p/q"`, `"p"` or a short decimal such as `"0.1"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let t = s.trim();
    let bad = || ScalarError::BadRational(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = BigRational::new(int_part * &scale + frac_part, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// The conjugation-invariant parameter: one value per reflection class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamValues {
    pub c_even: BigRational,
    pub c_odd: BigRational,
}

impl ParamValues {
    pub fn uniform(c: BigRational) -> Self {
        ParamValues {
            c_even: c.clone(),
            c_odd: c,
        }
    }

    pub fn zero() -> Self {
        Self::uniform(BigRational::zero())
    }

    /// Builds a split parameter, rejecting `c_even != c_odd` for odd `m`
    /// (all reflections are conjugate then).
    pub fn new(m: u32, c_even: BigRational, c_odd: BigRational) -> Result<Self, ScalarError> {
        if m % 2 == 1 && c_even != c_odd {
            return Err(ScalarError::SplitParameterOddM(c_even.to_string(), c_odd.to_string()));
        }
        Ok(ParamValues { c_even, c_odd })
    }

    pub fn parse(m: u32, c_even: &str, c_odd: &str) -> Result<Self, ScalarError> {
        Self::new(m, parse_rational(c_even)?, parse_rational(c_odd)?)
    }

    /// `c_j = c(s_j)`.
    pub fn c(&self, j: i64) -> &BigRational {
        if j.rem_euclid(2) == 0 {
            &self.c_even
        } else {
            &self.c_odd
        }
    }

    pub fn c_cyc(&self, field: &'static CyclotomicField, j: i64) -> Cyclotomic {
        Cyclotomic::from_rational(field, self.c(j))
    }

    pub fn is_zero(&self) -> bool {
        self.c_even.is_zero() && self.c_odd.is_zero()
    }

    pub fn is_uniform(&self) -> bool {
        self.c_even == self.c_odd
    }

    /// `max |c_j|`.
    pub fn max_abs(&self) -> BigRational {
        let (a, b) = (self.c_even.abs(), self.c_odd.abs());
        if a > b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for ParamValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_uniform() {
            write!(f, "c={}", self.c_even)
        } else {
            write!(f, "c_even={},c_odd={}", self.c_even, self.c_odd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        let tenth = BigRational::new(1.into(), 10.into());
        assert_eq!(parse_rational("1/10").unwrap(), tenth);
        assert_eq!(parse_rational("0.1").unwrap(), tenth);
        assert_eq!(parse_rational("2/20").unwrap(), tenth);
        assert_eq!(parse_rational("-3").unwrap(), BigRational::from_integer((-3).into()));
        assert_eq!(parse_rational("-0.5").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn odd_m_rejects_split() {
        assert!(ParamValues::parse(5, "1/5", "1/7").is_err());
        assert!(ParamValues::parse(4, "1/5", "1/7").is_ok());
        let p = ParamValues::parse(4, "1/5", "1/7").unwrap();
        assert_eq!(p.c(2), &parse_rational("1/5").unwrap());
        assert_eq!(p.c(-1), &parse_rational("1/7").unwrap());
    }
}
