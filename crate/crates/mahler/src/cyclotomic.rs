//! Exact detection and removal of cyclotomic factors.
//!
//! By Kronecker's theorem a monic integer polynomial with nonzero constant
//! term has all roots on the unit circle iff it is a product of cyclotomic
//! polynomials; such factors contribute exactly 1 to the Mahler measure.
//! Roots at 0 are stripped and counted alongside (they also contribute 1),
//! which keeps `is_cyclotomic_product` total on monic inputs.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_traits::{One, Signed};

/// Euler's totient by trial division; `m` stays desk-scale here.
fn euler_phi(m: usize) -> usize {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Removes all roots at 0 and all cyclotomic factors from a monic
/// polynomial. Returns the cyclotomic-free, x-free monic residual and the
/// total degree removed.
///
/// Since phi(m) >= sqrt(m/2), any cyclotomic divisor Phi_m of a degree-d
/// polynomial has m <= 2*d^2; only those m with phi(m) <= d need a gcd.
pub fn strip_cyclotomic_factors(p: &IntPolynomial) -> Result<(IntPolynomial, usize)> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::Domain(
            "cyclotomic stripping requires a monic polynomial".into(),
        ));
    }
    let (mut r, mut removed) = p.strip_zero_roots();
    let mut r_mod = crate::modp::reduce(&r);
    let mut m = 1usize;
    while r.degree() > 0 && m <= 2 * r.degree() * r.degree() {
        if euler_phi(m) <= r.degree() {
            // word-sized screen first: a gcd that is constant mod a prime
            // is constant over the integers
            let coprime = match &r_mod {
                Some(rq) if rq.len() > 1 => {
                    let mut xm = crate::modp::x_pow_mod(rq, m);
                    xm[0] -= 1;
                    if xm[0] < 0 {
                        xm[0] += crate::modp::Q;
                    }
                    crate::modp::gcd_degree(rq.clone(), xm) == 0
                }
                _ => false,
            };
            if !coprime {
                loop {
                    // gcd(r, x^m - 1) via x^m reduced mod r first
                    let mut xm = r.x_pow_mod(m);
                    xm = xm.sub(&IntPolynomial::one());
                    let g = r.gcd(&xm);
                    if g.degree() == 0 {
                        break;
                    }
                    removed += g.degree();
                    r = r.divide_exact(&g).expect("gcd divides");
                }
                r_mod = crate::modp::reduce(&r);
            }
        }
        m += 1;
    }
    Ok((r, removed))
}

/// True iff `p` is a product of cyclotomic polynomials and a power of x,
/// i.e. every root lies on the unit circle or at 0.
pub fn is_cyclotomic_product(p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::Domain(
            "cyclotomic product test requires a monic polynomial".into(),
        ));
    }
    let (r, _) = p.strip_zero_roots();
    if r.degree() == 0 {
        return Ok(true);
    }
    // Necessary conditions, both cheap: roots on the circle force |const| = 1
    // and a root set closed under z -> 1/z, hence P* = +/-P.
    if !r.constant_term().abs().is_one() || !r.is_self_reciprocal() {
        return Ok(false);
    }
    let (residual, _) = strip_cyclotomic_factors(&r)?;
    Ok(residual.degree() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn phi_small_values() {
        let expect = [1usize, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i + 1), *e, "phi({})", i + 1);
        }
        assert_eq!(euler_phi(30), 8);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn strips_fifth_cyclotomic() {
        let (r, removed) = strip_cyclotomic_factors(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(r, IntPolynomial::one());
        assert_eq!(removed, 4);
    }

    #[test]
    fn strips_mixed_product() {
        let prod = p(&[1, 1, 1]).multiply(&p(&[-1, -1, 1]));
        let (r, removed) = strip_cyclotomic_factors(&prod).unwrap();
        assert_eq!(r, p(&[-1, -1, 1]));
        assert_eq!(removed, 2);
    }

    #[test]
    fn lehmer_polynomial_is_cyclotomic_free() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let (r, removed) = strip_cyclotomic_factors(&lehmer).unwrap();
        assert_eq!(r, lehmer);
        assert_eq!(removed, 0);
        assert!(!is_cyclotomic_product(&lehmer).unwrap());
    }

    #[test]
    fn strip_handles_zero_roots_and_multiplicity() {
        // x * (x-1)^2 * Phi_5
        let phi5 = p(&[1, 1, 1, 1, 1]);
        let q = p(&[0, 1])
            .multiply(&p(&[-1, 1]))
            .multiply(&p(&[-1, 1]))
            .multiply(&phi5);
        let (r, removed) = strip_cyclotomic_factors(&q).unwrap();
        assert_eq!(r, IntPolynomial::one());
        assert_eq!(removed, 7);
        assert!(is_cyclotomic_product(&q).unwrap());
    }

    #[test]
    fn stripping_is_idempotent() {
        for coeffs in [
            vec![-1i64, -2, 0, 0, 1],
            vec![1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1],
            vec![-1, 0, 0, 0, 0, 0, 1],
        ] {
            let (r, _) = strip_cyclotomic_factors(&p(&coeffs)).unwrap();
            if r.degree() > 0 {
                let (r2, removed2) = strip_cyclotomic_factors(&r).unwrap();
                assert_eq!(r2, r);
                assert_eq!(removed2, 0);
            }
        }
    }

    #[test]
    fn product_membership() {
        assert!(is_cyclotomic_product(&p(&[-1, 0, 0, 0, 0, 0, 1])).unwrap()); // x^6 - 1
        assert!(!is_cyclotomic_product(&p(&[-1, -1, 1])).unwrap()); // x^2 - x - 1
        assert!(is_cyclotomic_product(&IntPolynomial::one()).unwrap());
        // anti-reciprocal product: x^2 - 1
        assert!(is_cyclotomic_product(&p(&[-1, 0, 1])).unwrap());
        // x^2 - x = x(x-1)
        assert!(is_cyclotomic_product(&p(&[0, -1, 1])).unwrap());
    }

    #[test]
    fn rejects_non_monic() {
        assert!(strip_cyclotomic_factors(&p(&[1, 2])).is_err());
        assert!(is_cyclotomic_product(&p(&[1, 2])).is_err());
    }
}
