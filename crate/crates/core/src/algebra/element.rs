//! Elements as exact coefficient vectors over `E_0..E_7`, and the basic
//! operations: product, conjugation, bilinear form, commutator, associator,
//! Jacobians, Malcev identity.

use std::ops::{Add, Neg, Sub};

use super::table::{basis_product, AlgebraKind};
use crate::scalar::{ratio, Scalar};

/// A (split-)octonion as eight exact coefficients of `E_0..E_7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<S> {
    coeffs: [S; 8],
}

impl<S: Scalar> Element<S> {
    pub fn zero() -> Self {
        Element {
            coeffs: std::array::from_fn(|_| S::zero()),
        }
    }

    /// The basis element `E_i`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        let mut e = Self::zero();
        e.coeffs[i] = S::one();
        e
    }

    pub fn from_coeffs(coeffs: [S; 8]) -> Self {
        Element { coeffs }
    }

    pub fn from_ints(ints: [i64; 8]) -> Self {
        Element {
            coeffs: std::array::from_fn(|i| S::from_int(ints[i])),
        }
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Real part as a scalar (`A_0`).
    pub fn real(&self) -> &S {
        &self.coeffs[0]
    }

    /// The element with the real coefficient dropped (`A . E`).
    pub fn imaginary(&self) -> Self {
        let mut v = self.clone();
        v.coeffs[0] = S::zero();
        v
    }

    pub fn scaled(&self, c: &S) -> Self {
        Element {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * c.clone()),
        }
    }
}

impl<S: Scalar> Add for &Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: &Element<S>) -> Element<S> {
        Element {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Sub for &Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: &Element<S>) -> Element<S> {
        Element {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Neg for &Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        Element {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

/// Bilinear extension of the Cayley table: `a * b`.
pub fn multiply<S: Scalar>(kind: AlgebraKind, a: &Element<S>, b: &Element<S>) -> Element<S> {
    let mut out = Element::zero();
    for i in 0..8 {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if b.coeffs[j].is_zero() {
                continue;
            }
            let term = a.coeffs[i].clone() * b.coeffs[j].clone();
            let sb = basis_product(kind, i, j);
            let slot: &mut S = &mut out.coeffs[sb.index];
            *slot = if sb.sign >= 0 {
                slot.clone() + term
            } else {
                slot.clone() - term
            };
        }
    }
    out
}

/// Conjugation: negates the imaginary coefficients. Involutive, and an
/// anti-automorphism of both products.
pub fn conjugate<S: Scalar>(a: &Element<S>) -> Element<S> {
    let mut out = a.clone();
    for c in out.coeffs.iter_mut().skip(1) {
        *c = -c.clone();
    }
    out
}

/// `(a, b) = Re(a * conj(b))`.
///
/// Positive definite for the octonion, signature (4,4) for the
/// split-octonion. This operational form disagrees with the component line
/// printed next to it in the source (`gamma^{mu nu} A_mu B_nu`): the two are
/// related by `(a,b) = A_0 B_0 - gamma_{mu nu} a^mu b^nu`.
pub fn bilinear_form<S: Scalar>(kind: AlgebraKind, a: &Element<S>, b: &Element<S>) -> S {
    let prod = multiply(kind, a, &conjugate(b));
    prod.coeffs[0].clone()
}

/// Commutator with the half normalization, `[a,b] = (ab - ba) / 2`.
///
/// Users comparing against the `ab - ba` convention should rescale by
/// [`COMMUTATOR_NORMALIZATION`].
pub fn commutator<S: Scalar>(kind: AlgebraKind, a: &Element<S>, b: &Element<S>) -> Element<S> {
    let half: S = ratio(1, 2);
    (&multiply(kind, a, b) - &multiply(kind, b, a)).scaled(&half)
}

/// The commutator here is `1/2 (ab - ba)`; multiply by this to translate a
/// bracket into the unnormalized `ab - ba` convention.
pub const COMMUTATOR_NORMALIZATION: i64 = 2;

/// Associator `(a, x, b) = (ax)b - a(xb)`.
///
/// This is the standard form, under which flexibility `(a,x,b) = -(b,x,a)`
/// holds; the source misprints the second term as `a(bx)`.
pub fn associator<S: Scalar>(
    kind: AlgebraKind,
    a: &Element<S>,
    x: &Element<S>,
    b: &Element<S>,
) -> Element<S> {
    &multiply(kind, &multiply(kind, a, x), b) - &multiply(kind, a, &multiply(kind, x, b))
}

/// Jacobian `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]` (half-commutator).
///
/// On imaginary basis elements this equals `+3 B_{mu nu kappa}^sigma E_sigma`.
pub fn jacobian_element<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    let t1 = commutator(kind, &commutator(kind, x, y), z);
    let t2 = commutator(kind, &commutator(kind, y, z), x);
    let t3 = commutator(kind, &commutator(kind, z, x), y);
    &(&t1 + &t2) + &t3
}

/// The oppositely nested Jacobian `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
///
/// This is the nesting used where the source relates the Jacobian to the dual
/// tensor as `J = -3 B`; it is the negative of [`jacobian_element`].
pub fn jacobian_nested<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    let t1 = commutator(kind, x, &commutator(kind, y, z));
    let t2 = commutator(kind, y, &commutator(kind, z, x));
    let t3 = commutator(kind, z, &commutator(kind, x, y));
    &(&t1 + &t2) + &t3
}

/// Result of one Malcev identity evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalcevOutcome<S> {
    pub pass: bool,
    /// `J(x,y,[x,z]) - [J(x,y,z),x]`, exactly.
    pub discrepancy: Element<S>,
}

/// Evaluates the Malcev identity `J(x,y,[x,z]) = [J(x,y,z),x]` exactly.
pub fn malcev_check<S: Scalar>(
    kind: AlgebraKind,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> MalcevOutcome<S> {
    let lhs = jacobian_element(kind, x, y, &commutator(kind, x, z));
    let rhs = commutator(kind, &jacobian_element(kind, x, y, z), x);
    let discrepancy = &lhs - &rhs;
    MalcevOutcome {
        pass: discrepancy.is_zero(),
        discrepancy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Coeff, Elem};
    use AlgebraKind::{Octonion, SplitOctonion};

    fn e(i: usize) -> Elem {
        Elem::basis(i)
    }

    #[test]
    fn table_products_extend_bilinearly() {
        assert_eq!(multiply(Octonion, &e(1), &e(2)), e(4));
        let a = Elem::from_ints([3, -1, 0, 2, 0, 0, 5, -7]);
        assert_eq!(multiply(Octonion, &a, &e(0)), a);
        assert_eq!(multiply(SplitOctonion, &e(0), &a), a);
    }

    #[test]
    fn split_zero_divisor() {
        // (E_0 + E_1)(E_0 - E_1) = 0 exhibits the non-divisional algebra.
        let u = &e(0) + &e(1);
        let v = &e(0) - &e(1);
        assert!(multiply(SplitOctonion, &u, &v).is_zero());
        assert!(!multiply(Octonion, &u, &v).is_zero());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let a = Elem::from_ints([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(conjugate(&conjugate(&a)), a);
        assert_eq!(conjugate(&e(0)), e(0));
        assert_eq!(conjugate(&e(3)), -&e(3));
    }

    #[test]
    fn bilinear_form_diagonals() {
        assert_eq!(bilinear_form(Octonion, &e(0), &e(0)), Coeff::from_int(1));
        assert_eq!(bilinear_form(Octonion, &e(3), &e(3)), Coeff::from_int(1));
        // E_1^2 = +E_0 in the split table, so (E_1, E_1) = -1 there.
        assert_eq!(
            bilinear_form(SplitOctonion, &e(1), &e(1)),
            Coeff::from_int(-1)
        );
        // Full split signature (4,4): +1 at indices {0, 2, 6, 7}.
        let diag: Vec<i64> = (0..8)
            .map(|i| *bilinear_form(SplitOctonion, &e(i), &e(i)).numer())
            .collect();
        assert_eq!(diag, vec![1, -1, 1, -1, -1, -1, 1, 1]);
    }

    #[test]
    fn commutator_basics() {
        assert_eq!(commutator(Octonion, &e(1), &e(2)), e(4));
        let a = Elem::from_ints([2, 1, 0, -3, 0, 4, 0, 0]);
        assert!(commutator(Octonion, &a, &a).is_zero());
        assert!(commutator(SplitOctonion, &e(0), &a).is_zero());
    }

    #[test]
    fn associator_flexibility_and_identity_slots() {
        // Quaternionic triple associates.
        assert!(associator(Octonion, &e(1), &e(2), &e(4)).is_zero());
        let x = Elem::from_ints([0, 1, 2, 0, 0, 0, 0, 0]);
        assert!(associator(Octonion, &e(0), &x, &e(5)).is_zero());
        // (E_1, E_2, E_3) is nonzero and flexibility pairs it with the reverse.
        let fwd = associator(Octonion, &e(1), &e(2), &e(3));
        let rev = associator(Octonion, &e(3), &e(2), &e(1));
        assert!(!fwd.is_zero());
        assert_eq!(fwd, -&rev);
    }

    #[test]
    fn jacobian_known_values() {
        assert!(jacobian_element(Octonion, &e(0), &e(2), &e(5)).is_zero());
        assert!(jacobian_element(Octonion, &e(1), &e(2), &e(4)).is_zero());
        // J(E_1,E_2,E_3) = 3 B_{123}^sigma E_sigma = -3 E_6 for the octonion.
        let j = jacobian_element(Octonion, &e(1), &e(2), &e(3));
        assert_eq!(j, e(6).scaled(&Coeff::from_int(-3)));
        assert_eq!(jacobian_nested(Octonion, &e(1), &e(2), &e(3)), -&j);
    }

    #[test]
    fn generic_scalar_path_works_with_big_rationals() {
        use crate::BigElem;
        let a = BigElem::from_ints([1, 2, 0, -3, 0, 0, 4, 5]);
        let b = BigElem::from_ints([0, 7, -6, 0, 2, 1, 0, 0]);
        let small_a = Elem::from_ints([1, 2, 0, -3, 0, 0, 4, 5]);
        let small_b = Elem::from_ints([0, 7, -6, 0, 2, 1, 0, 0]);
        for kind in AlgebraKind::ALL {
            let big = multiply(kind, &a, &b);
            let small = multiply(kind, &small_a, &small_b);
            for i in 0..8 {
                assert_eq!(big.coeff(i), &crate::BigCoeff::from_int(*small.coeff(i).numer()));
            }
        }
    }

    #[test]
    fn malcev_holds_on_degenerate_and_basis_inputs() {
        let x = Elem::from_ints([0, 2, -1, 0, 3, 0, 0, 1]);
        let z = Elem::from_ints([1, 0, 0, 5, 0, -2, 0, 0]);
        assert!(malcev_check(Octonion, &x, &x, &z).pass);
        for kind in AlgebraKind::ALL {
            for (i, j, k) in [(1, 2, 3), (1, 3, 5), (2, 6, 7), (0, 4, 5)] {
                assert!(malcev_check(kind, &e(i), &e(j), &e(k)).pass);
            }
        }
    }
}
