//! From trace data of a hyperbolic isometry to its translation length.
//!
//! A hyperbolic element has trace u + 1/u with |u| > 1; if P is the
//! polynomial of u, the displacement is 2 log M(P) in dimension 2 and
//! log M(P) in dimension 3. The lift from the trace's polynomial q(y) to a
//! polynomial satisfied by u eliminates y from q(y) and x^2 - yx + 1 by an
//! exact resultant. The lift may be reducible; since the measure is
//! multiplicative and the lifted roots come in reciprocal pairs, the
//! reported length uses the full lift.

use crate::cyclotomic::is_cyclotomic_product;
use crate::error::{Error, Result};
use crate::measure::{mahler_measure, MeasureResult};
use crate::poly::IntPolynomial;
use crate::resultant::sylvester_resultant;
use num_bigint::BigInt;
use num_traits::Zero;

/// Translation lengths in constant-curvature -1 normalization.
#[derive(Clone, Debug)]
pub struct DisplacementResult {
    /// The polynomial of u whose measure produced the lengths.
    pub u_polynomial: IntPolynomial,
    pub measure: MeasureResult,
    /// 2 log M(P): dimension-2 displacement. Always exactly twice
    /// `length_dim3`.
    pub length_dim2: f64,
    /// log M(P): dimension-3 displacement.
    pub length_dim3: f64,
}

/// Displacement from the polynomial of u directly.
pub fn displacement_from_u_polynomial(p: &IntPolynomial, tol: f64) -> Result<DisplacementResult> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::Domain(
            "displacement requires a monic polynomial".into(),
        ));
    }
    if is_cyclotomic_product(p)? {
        return Err(Error::NotHyperbolic(
            "measure is 1 (the u-polynomial is a cyclotomic product)".into(),
        ));
    }
    let measure = mahler_measure(p, tol)?;
    let length_dim3 = measure.value.ln();
    let length_dim2 = 2.0 * length_dim3;
    Ok(DisplacementResult {
        u_polynomial: p.clone(),
        measure,
        length_dim2,
        length_dim3,
    })
}

/// Lifts the trace's polynomial q(y) to a monic integer polynomial of degree
/// 2 deg(q) whose roots are exactly the u with u + 1/u ranging over the
/// roots of q: the resultant in y of q(y) and x^2 - yx + 1.
pub fn u_minpoly_from_trace_minpoly(q: &IntPolynomial) -> Result<IntPolynomial> {
    if q.is_zero() || !q.is_monic() || q.degree() < 1 {
        return Err(Error::Domain(
            "trace lift requires a monic polynomial of degree >= 1".into(),
        ));
    }
    // coefficients of x^2 - yx + 1 as a polynomial in y
    let g = [
        IntPolynomial::from_i64(&[1, 0, 1]), // x^2 + 1
        IntPolynomial::from_i64(&[0, -1]),   // -x
    ];
    let f: Vec<IntPolynomial> = q
        .coeffs()
        .iter()
        .map(|c| IntPolynomial::constant(c.clone()))
        .collect();
    let lifted = sylvester_resultant(&f, &g).normalize_leading_sign();
    debug_assert!(lifted.is_monic());
    debug_assert_eq!(lifted.degree(), 2 * q.degree());
    Ok(lifted)
}

/// Composition: lift the trace polynomial, then measure the lift. Elliptic
/// and parabolic trace data (all lifted roots on the unit circle) is
/// rejected with the trace class named.
pub fn displacement_from_trace(q: &IntPolynomial, tol: f64) -> Result<DisplacementResult> {
    let lifted = u_minpoly_from_trace_minpoly(q)?;
    if is_cyclotomic_product(&lifted)? {
        let one = BigInt::from(1);
        let minus_one = BigInt::from(-1);
        let parabolic = lifted.eval(&one).is_zero() || lifted.eval(&minus_one).is_zero();
        let class = if parabolic { "parabolic" } else { "elliptic" };
        return Err(Error::NotHyperbolic(format!(
            "trace polynomial {q} lifts to the cyclotomic product {lifted} ({class} element)"
        )));
    }
    displacement_from_u_polynomial(&lifted, tol)
}
