//! Seeded random rational elements for the randomized trial suites.
//!
//! Numerators are drawn from [-9, 9] and denominators from [1, 9]: the laws
//! under test are (multi)linear or low-degree polynomial, so small supports
//! exercise them fully while keeping exact arithmetic in machine words.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::scalar::{ratio, Scalar};

/// Deterministic generator for a given seed; the same seed always yields the
/// same element stream on every platform.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One random element with small rational coefficients.
pub fn random_element<S: Scalar>(rng: &mut ChaCha8Rng) -> Element<S> {
    let coeffs = std::array::from_fn(|_| {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=9);
        ratio(num, den)
    });
    Element::from_coeffs(coeffs)
}
