//! Property tests for the series engine and its supporting exact arithmetic.

use cmconic::{
    fourier_motzkin_feasible, smith_normal_form, GradedModuleExpr, HilbertSeries, IntMat,
    LaurentPolynomial, LinearConstraint,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn expr_strategy() -> impl Strategy<Value = GradedModuleExpr> {
    let leaf = (1u32..=4).prop_map(|m| GradedModuleExpr::poly(m).unwrap());
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), -5i64..=5).prop_map(|(e, s)| e.shift(s)),
            (inner.clone(), 1u32..=4).prop_map(|(e, c)| e.veronese(c).unwrap()),
            (inner.clone(), inner).prop_map(|(a, b)| GradedModuleExpr::segre(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grammar_series_are_nonzero_with_pole(expr in expr_strategy()) {
        let s = expr.series().unwrap();
        prop_assert!(!s.is_zero());
        prop_assert!(s.pole_order() >= 1);
        prop_assert!(s.initial_degree().is_ok());
    }

    #[test]
    fn hadamard_is_coefficientwise(a in expr_strategy(), b in expr_strategy()) {
        let sa = a.series().unwrap();
        let sb = b.series().unwrap();
        let prod = sa.hadamard(&sb).unwrap();
        for k in -10..=30i64 {
            prop_assert_eq!(prod.coefficient(k), sa.coefficient(k) * sb.coefficient(k));
        }
    }

    #[test]
    fn veronese_extracts_progressions(a in expr_strategy(), c in 1u32..=4) {
        let sa = a.series().unwrap();
        let sec = sa.veronese(c).unwrap();
        for k in -10..=30i64 {
            prop_assert_eq!(sec.coefficient(k), sa.coefficient(c as i64 * k));
        }
    }

    #[test]
    fn shift_moves_coefficients(a in expr_strategy(), s in -7i64..=7) {
        let sa = a.series().unwrap();
        let shifted = sa.shift(s);
        for k in -10..=30i64 {
            prop_assert_eq!(shifted.coefficient(k), sa.coefficient(k - s));
        }
        prop_assert_eq!(sa.shift(s).shift(-s), sa);
    }

    #[test]
    fn canonical_reconstruction_roundtrips(a in expr_strategy()) {
        let s = a.series().unwrap();
        let d = s.pole_order();
        let lo = s.numerator().lowest_exponent().unwrap();
        let hi = s.numerator().degree().unwrap();
        // test-side reconstruction: expand, convolve with (1-t)^d, compare
        let coeffs: Vec<BigInt> = (lo..=hi + 3).map(|k| s.coefficient(k)).collect();
        let trunc = LaurentPolynomial::new(lo, coeffs);
        let prod = trunc.mul_one_minus_t_pow(d);
        let kept: Vec<(i64, BigInt)> = prod
            .terms()
            .filter(|&(e, _)| e <= hi)
            .map(|(e, c)| (e, c.clone()))
            .collect();
        let rebuilt = HilbertSeries::new(LaurentPolynomial::from_terms(&kept), d);
        prop_assert_eq!(rebuilt, s);
    }

    #[test]
    fn snf_postconditions_hold(
        rows in 1usize..=4,
        cols in 1usize..=4,
        seed in proptest::collection::vec(-20i64..=20, 16),
    ) {
        let mut data = Vec::with_capacity(rows);
        for r in 0..rows {
            data.push(seed[r * cols..(r + 1) * cols].to_vec());
        }
        let a = IntMat::from_rows(data);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d.clone());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::one());
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let k = rows.min(cols);
        for i in 0..k {
            for j in 0..cols {
                if i != j {
                    prop_assert!(snf.d.get(i, j).is_zero());
                }
            }
            prop_assert!(!snf.d.get(i, i).is_negative());
            if i + 1 < k && !snf.d.get(i + 1, i + 1).is_zero() {
                prop_assert!(!snf.d.get(i, i).is_zero());
                prop_assert!((snf.d.get(i + 1, i + 1) % snf.d.get(i, i)).is_zero());
            }
        }
    }

    #[test]
    fn feasibility_is_sound_at_known_points(
        point in proptest::collection::vec((-6i64..=6, 1i64..=4), 3),
        rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 1..=6),
        slack in proptest::collection::vec(0i64..=3, 6),
    ) {
        // build a system satisfied at the random rational point; it must be
        // reported feasible
        let xs: Vec<BigRational> = point
            .iter()
            .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        let mut system = Vec::new();
        for (ridx, row) in rows.iter().enumerate() {
            let val: BigRational = row
                .iter()
                .zip(&xs)
                .map(|(&c, x)| BigRational::from(BigInt::from(c)) * x)
                .sum();
            let coeffs: Vec<BigRational> =
                row.iter().map(|&c| BigRational::from(BigInt::from(c))).collect();
            let bump = BigRational::from(BigInt::from(slack[ridx % slack.len()]));
            if slack[ridx % slack.len()] > 0 {
                system.push(LinearConstraint::lt(coeffs, val + bump));
            } else {
                system.push(LinearConstraint::le(coeffs, val));
            }
        }
        prop_assert!(fourier_motzkin_feasible(&system));
    }
}
