//! Binary floating point at a fixed 128-bit precision, for log-space sums
//! whose terms span hundreds of orders of magnitude.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::FBig;
use dashu_int::UBig;
use num_bigint::BigUint;

/// Working precision in bits.
pub const PRECISION: usize = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct Hp(FBig);

impl Hp {
    pub fn from_f64(x: f64) -> Self {
        let v = FBig::try_from(x).expect("finite input");
        Hp(v.with_precision(PRECISION).value())
    }

    pub fn from_u64(x: u64) -> Self {
        Hp(FBig::from(x).with_precision(PRECISION).value())
    }

    pub fn from_biguint(x: &BigUint) -> Self {
        let u = UBig::from_le_bytes(&x.to_bytes_le());
        Hp(FBig::from(u).with_precision(PRECISION).value())
    }

    pub fn zero() -> Self {
        Self::from_u64(0)
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn ln(&self) -> Self {
        Hp(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        Hp(self.0.exp())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Reads `self` as a natural log and returns the base-10 log.
    pub fn ln_to_log10(&self) -> f64 {
        (self / &Hp::from_u64(10).ln()).to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == FBig::<dashu_float::round::mode::Zero, 2>::ZERO
    }

    pub fn max(self, other: Self) -> Self {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }
}

impl PartialOrd for Hp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for &Hp {
            type Output = Hp;
            fn $f(self, rhs: &Hp) -> Hp {
                Hp($tr::$f(&self.0, &rhs.0))
            }
        }
        impl $tr for Hp {
            type Output = Hp;
            fn $f(self, rhs: Hp) -> Hp {
                Hp($tr::$f(self.0, rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp(-self.0)
    }
}

/// `ln Σ exp(x_i)`; `None` for an empty input.
pub fn log_sum_exp(xs: &[Hp]) -> Option<Hp> {
    let max = xs.iter().cloned().reduce(Hp::max)?;
    let mut acc = Hp::zero();
    for x in xs {
        acc = acc + (x - &max).exp();
    }
    Some(max + acc.ln())
}

/// Formats `10^l10` in scientific notation without going through `f64`
/// overflow, e.g. `1.2345678901e+456`.
pub fn format_pow10(l10: f64) -> String {
    if l10 == f64::NEG_INFINITY {
        return "0".to_string();
    }
    if !l10.is_finite() {
        return "inf".to_string();
    }
    let mut e = l10.floor();
    let mut mant = 10f64.powf(l10 - e);
    if mant >= 9.999_999_999_95 {
        mant = 1.0;
        e += 1.0;
    }
    format!("{mant:.10}e{}{}", if e < 0.0 { "-" } else { "+" }, e.abs() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let two = Hp::from_u64(2);
        assert!((two.ln().to_f64() - std::f64::consts::LN_2).abs() < 1e-15);
        assert!((two.ln().exp().to_f64() - 2.0).abs() < 1e-15);
        let big = BigUint::from(10u32).pow(40);
        assert!((Hp::from_biguint(&big).ln().to_f64() - 40.0 * std::f64::consts::LN_10).abs() < 1e-12);
    }

    #[test]
    fn cancellation_is_resolved() {
        // (1 + 2^-80) - 1 survives at 128 bits.
        let eps = Hp::from_f64(2f64.powi(-80));
        let d = (Hp::one() + eps.clone()) - Hp::one();
        assert_eq!(d, eps);
    }

    #[test]
    fn lse() {
        let xs = [Hp::from_f64(1000.0), Hp::from_f64(1000.0)];
        let l = log_sum_exp(&xs).unwrap().to_f64();
        assert!((l - 1000.0 - std::f64::consts::LN_2).abs() < 1e-12);
        assert!(log_sum_exp(&[]).is_none());
    }

    #[test]
    fn pow10_format() {
        assert_eq!(format_pow10(456.0), "1.0000000000e+456");
        assert_eq!(format_pow10(-2.0 + 0.5f64.log10() + 1.0), "5.0000000000e-2");
        assert_eq!(format_pow10(f64::NEG_INFINITY), "0");
    }
}
