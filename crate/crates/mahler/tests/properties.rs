//! Property tests for the structural invariants: transforms that must be
//! exact identities hold on arbitrary inputs, and the exact and numeric
//! routes must always agree where both apply.

use mahler::cyclotomic::{is_cyclotomic_product, strip_cyclotomic_factors};
use mahler::geodesic::u_minpoly_from_trace_minpoly;
use mahler::measure::mahler_measure;
use mahler::poly::IntPolynomial;
use mahler::sturm::count_distinct_real_roots;
use mahler::{complex_roots, BoundConstants};
use proptest::prelude::*;

fn poly_from(coeffs: Vec<i64>) -> IntPolynomial {
    IntPolynomial::from_i64(&coeffs)
}

/// Arbitrary nonzero polynomial with nonzero constant term.
fn nonzero_constant_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    (
        prop::collection::vec(-bound..=bound, 0..=max_degree),
        1i64..=bound,
        prop::bool::ANY,
    )
        .prop_map(|(mut high, c0, neg)| {
            let mut coeffs = vec![if neg { -c0 } else { c0 }];
            coeffs.append(&mut high);
            if coeffs.len() == 1 || coeffs.last() == Some(&0) {
                coeffs.push(1);
            }
            poly_from(coeffs)
        })
}

/// Arbitrary monic polynomial of degree 1..=max_degree.
fn monic_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-bound..=bound, 1..=max_degree).prop_map(|mut coeffs| {
        coeffs.push(1);
        poly_from(coeffs)
    })
}

/// Monic with constant term +/-1.
fn monic_unit_constant_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    (
        prop::bool::ANY,
        prop::collection::vec(-bound..=bound, 0..max_degree),
    )
        .prop_map(|(neg, mut mid)| {
            let mut coeffs = vec![if neg { -1 } else { 1 }];
            coeffs.append(&mut mid);
            coeffs.push(1);
            poly_from(coeffs)
        })
}

proptest! {
    #[test]
    fn reciprocal_transform_is_an_involution(p in nonzero_constant_poly(8, 5)) {
        let twice = p
            .reciprocal_transform()
            .unwrap()
            .reciprocal_transform()
            .unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn graeffe_commutes_with_multiplication(
        a in nonzero_constant_poly(5, 3),
        b in nonzero_constant_poly(5, 3),
    ) {
        let lhs = a.multiply(&b).graeffe_step().unwrap();
        let rhs = a
            .graeffe_step()
            .unwrap()
            .multiply(&b.graeffe_step().unwrap())
            .normalize_leading_sign();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclotomic_stripping_is_idempotent(p in monic_poly(8, 2)) {
        let (residual, _) = strip_cyclotomic_factors(&p).unwrap();
        if residual.degree() > 0 {
            let (again, removed) = strip_cyclotomic_factors(&residual).unwrap();
            prop_assert_eq!(again, residual);
            prop_assert_eq!(removed, 0);
        }
    }

    #[test]
    fn trace_transform_roundtrips(q in monic_poly(5, 4)) {
        // build a palindromic polynomial from an arbitrary monic trace
        // polynomial, then recover it
        let lifted = u_minpoly_from_trace_minpoly(&q).unwrap();
        prop_assert_eq!(lifted.degree(), 2 * q.degree());
        prop_assert!(lifted.is_palindromic());
        let trace = lifted.to_trace_polynomial().unwrap();
        prop_assert_eq!(trace.q(), &q);
        prop_assert_eq!(trace.expand(), lifted);
    }

    #[test]
    fn kronecker_exact_and_numeric_agree(p in monic_poly(8, 2)) {
        let exact = is_cyclotomic_product(&p).unwrap();
        let m = mahler_measure(&p, 1e-9).unwrap();
        prop_assert_eq!(exact, (m.value - 1.0).abs() < 1e-9, "{}", p);
        prop_assert!(m.value - m.error_radius >= 1.0 - 1e-12);
    }

    #[test]
    fn sturm_counts_match_numeric_real_roots(p in monic_poly(6, 4)) {
        let sf = p.squarefree_part();
        prop_assume!(sf.degree() >= 1);
        let roots = complex_roots(&sf, 1e-10).unwrap();
        // skip draws where "real" is numerically ambiguous
        let near_axis = roots.iter().filter(|r| r.value.im.abs() < 1e-5).count();
        let clearly_real = roots.iter().filter(|r| r.value.im.abs() < 1e-9).count();
        prop_assume!(near_axis == clearly_real);
        let counted = count_distinct_real_roots(&sf).unwrap();
        prop_assert_eq!(counted, clearly_real, "{}", sf);
    }

    #[test]
    fn measure_is_reciprocal_invariant(p in monic_unit_constant_poly(6, 3)) {
        // monic with constant +/-1: the reversed polynomial has the same
        // measure, since the roots are replaced by their inverses
        let m = mahler_measure(&p, 1e-10).unwrap();
        let mr = mahler_measure(&p.reciprocal_transform().unwrap(), 1e-10).unwrap();
        prop_assert!(
            (m.value - mr.value).abs() <= m.error_radius + mr.error_radius + 1e-12,
            "{}: {} vs {}", p, m.value, mr.value
        );
    }

    #[test]
    fn theorem1b_inverts_exactly(
        systole in 0.01f64..10.0,
        c_n in 0.1f64..10.0,
        dim in 3u32..=7,
    ) {
        let k = BoundConstants { c_n, dim_n: dim, ..BoundConstants::default() };
        let vol = mahler::bounds::theorem1b_volume_lower_bound(systole, &k).unwrap();
        let back = (k.c_n / vol).powf(1.0 / (dim as f64 - 2.0));
        prop_assert!((back - systole).abs() <= 1e-9 * systole);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measure_multiplicativity(
        a in monic_poly(5, 3),
        b in monic_poly(5, 3),
    ) {
        let ma = mahler_measure(&a, 1e-10).unwrap();
        let mb = mahler_measure(&b, 1e-10).unwrap();
        let mab = mahler_measure(&a.multiply(&b), 1e-9).unwrap();
        let combined = mab.error_radius
            + ma.error_radius * mb.value
            + mb.error_radius * ma.value
            + ma.error_radius * mb.error_radius;
        prop_assert!(
            (mab.value - ma.value * mb.value).abs() <= combined,
            "({}) * ({})", a, b
        );
    }

    #[test]
    fn root_estimates_cover_the_cauchy_disk(p in monic_poly(7, 4)) {
        let roots = complex_roots(&p, 1e-9).unwrap();
        prop_assert_eq!(roots.len(), p.degree());
        let cauchy: f64 = 1.0
            + p.coeffs()[..p.degree()]
                .iter()
                .map(|c| num_traits::ToPrimitive::to_f64(c).unwrap().abs())
                .fold(0.0, f64::max);
        for r in &roots {
            prop_assert!(r.value.norm() <= cauchy + 1e-9);
            prop_assert!(r.radius <= 1e-9 * r.value.norm().max(1.0));
        }
    }
}
