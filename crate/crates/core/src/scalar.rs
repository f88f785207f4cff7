//! Scalar abstraction for element coefficients.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::Debug;

/// Coefficient type for [`crate::Element`] and the graded mode algebra.
///
/// Satisfied by `Rational64`, `BigRational`, `f64`, ... — the verification
/// suites always instantiate an exact rational type.
pub trait Scalar: Num + Signed + FromPrimitive + Clone + PartialEq + Debug {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar must represent small integers")
    }
}

impl<T> Scalar for T where T: Num + Signed + FromPrimitive + Clone + PartialEq + Debug {}

/// Exact `num/den` as a scalar. `den` must be nonzero.
pub fn ratio<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0, "zero denominator");
    S::from_int(num) / S::from_int(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn ratio_is_exact_for_rationals() {
        let half: Rational64 = ratio(1, 2);
        assert_eq!(half + half, Rational64::from_int(1));
        let third: BigRational = ratio(1, 3);
        assert_eq!(&third + &third + &third, BigRational::from_int(1));
    }
}
