//! Ring-axiom and normal-form properties of the exact arithmetic layer.

use num_rational::BigRational;
use proptest::prelude::*;
use regionsig::exact::{denom_poly, rational, LocElem, PolyZ};

fn poly_strategy() -> impl Strategy<Value = PolyZ> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|cs| PolyZ::from_ints(&cs))
}

fn loc_strategy() -> impl Strategy<Value = LocElem> {
    (poly_strategy(), 0u32..3).prop_map(|(p, k)| LocElem::new(p, k))
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), PolyZ::zero());
    }

    #[test]
    fn poly_degree_of_product(a in poly_strategy(), b in poly_strategy()) {
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!(a.mul(&b).degree(), Some(da + db));
        } else {
            prop_assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn poly_exact_division_roundtrip(a in poly_strategy(), b in poly_strategy()) {
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
        }
    }

    #[test]
    fn poly_eval_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(),
                                   num in -20i64..20, den in 1i64..20) {
        let x0: BigRational = rational(num, den);
        prop_assert_eq!(a.add(&b).eval(&x0), a.eval(&x0) + b.eval(&x0));
        prop_assert_eq!(a.mul(&b).eval(&x0), a.eval(&x0) * b.eval(&x0));
    }

    #[test]
    fn flip_x_matches_negated_evaluation(a in poly_strategy(), num in -9i64..9, den in 1i64..9) {
        let x0 = rational(num, den);
        prop_assert_eq!(a.flip_x().eval(&x0), a.eval(&(-x0.clone())));
        prop_assert_eq!(a.flip_x().flip_x(), a);
    }

    #[test]
    fn loc_normal_form(p in poly_strategy(), k in 0u32..3) {
        let e = LocElem::new(p, k);
        // Either no denominator is left or the numerator is coprime to it.
        if e.denom_exponent() > 0 {
            prop_assert!(e.num().div_exact(&denom_poly()).is_none());
        }
        // Renormalising a normal form changes nothing.
        let again = LocElem::new(e.num().clone(), e.denom_exponent());
        prop_assert_eq!(e, again);
    }

    #[test]
    fn loc_equality_is_cross_multiplied(a in loc_strategy(), b in loc_strategy()) {
        let d = denom_poly();
        let mut lhs = a.num().clone();
        for _ in 0..b.denom_exponent() {
            lhs = lhs.mul(&d);
        }
        let mut rhs = b.num().clone();
        for _ in 0..a.denom_exponent() {
            rhs = rhs.mul(&d);
        }
        prop_assert_eq!(a == b, lhs == rhs);
    }

    #[test]
    fn loc_ring_axioms(a in loc_strategy(), b in loc_strategy(), c in loc_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), LocElem::zero());
        prop_assert_eq!(a.mul(&LocElem::one()), a);
    }

    #[test]
    fn two_x_subring_closed_under_product(a in poly_strategy(), b in poly_strategy()) {
        // Rescale inputs into the subring first.
        let scale = |p: &PolyZ| -> PolyZ {
            PolyZ::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * num_bigint::BigInt::from(2).pow(k as u32))
                    .collect(),
            )
        };
        let (sa, sb) = (scale(&a), scale(&b));
        prop_assert!(sa.in_two_x_subring());
        prop_assert!(sa.mul(&sb).in_two_x_subring());
        prop_assert!(sa.add(&sb).in_two_x_subring());
    }
}
