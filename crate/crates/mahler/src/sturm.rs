//! Exact real-root counting over rational endpoints via Sturm chains.
//!
//! The chain is kept in primitive integer form; pseudo-remainders use a
//! positive multiplier so the sign-variation count stays valid. Signs at
//! rational points are evaluated with homogenized integer arithmetic, so no
//! rounding ever occurs.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum RealBound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl RealBound {
    fn strictly_below(&self, other: &RealBound) -> bool {
        match (self, other) {
            (RealBound::NegInf, RealBound::NegInf) | (RealBound::PosInf, RealBound::PosInf) => {
                false
            }
            (RealBound::NegInf, _) | (_, RealBound::PosInf) => true,
            (RealBound::Finite(a), RealBound::Finite(b)) => a < b,
            _ => false,
        }
    }
}

/// Sign of `p` at a rational point, computed exactly:
/// sign( sum c_i * num^i * den^(deg-i) ) for den > 0.
fn sign_at(p: &IntPolynomial, x: &BigRational) -> Ordering {
    let num = x.numer();
    let den = x.denom();
    let d = p.degree();
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::from(1);
    // accumulate from the top so each term needs one running power of den
    for i in (0..=d).rev() {
        acc = acc * num + p.coeff(i) * &den_pow;
        if i > 0 {
            den_pow *= den;
        }
    }
    acc.cmp(&BigInt::zero())
}

fn sign_at_bound(p: &IntPolynomial, bound: &RealBound) -> Ordering {
    match bound {
        RealBound::Finite(x) => sign_at(p, x),
        RealBound::PosInf => p.leading().cmp(&BigInt::zero()),
        RealBound::NegInf => {
            let s = p.leading().cmp(&BigInt::zero());
            if p.degree().is_multiple_of(2) {
                s
            } else {
                s.reverse()
            }
        }
    }
}

fn sturm_chain(s: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![s.clone(), s.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == 0 {
            break;
        }
        let r = chain[n - 2].pseudo_rem_abs(&chain[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r.primitive_part());
    }
    chain
}

fn sign_variations(chain: &[IntPolynomial], bound: &RealBound) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for f in chain {
        let s = sign_at_bound(f, bound);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of distinct real roots of `q` in the open interval
/// `(lo, hi)`, either endpoint possibly infinite. Rational roots sitting
/// exactly at a finite endpoint are excluded.
pub fn sturm_count_bounded(q: &IntPolynomial, lo: &RealBound, hi: &RealBound) -> Result<usize> {
    if q.is_zero() {
        return Err(Error::Domain("Sturm count of the zero polynomial".into()));
    }
    if !lo.strictly_below(hi) {
        return Err(Error::Domain("Sturm count requires lo < hi".into()));
    }
    let mut s = q.squarefree_part();
    if s.degree() == 0 {
        return Ok(0);
    }
    // Deflate rational roots at the endpoints so the open-interval count is
    // exactly V(lo) - V(hi).
    for bound in [lo, hi] {
        if let RealBound::Finite(x) = bound {
            while s.degree() > 0 && sign_at(&s, x) == Ordering::Equal {
                let linear = IntPolynomial::new(vec![-x.numer().clone(), x.denom().clone()]);
                s = s
                    .divide_exact(&linear)
                    .expect("endpoint root divides")
                    .primitive_part();
            }
        }
    }
    if s.degree() == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&s);
    let v_lo = sign_variations(&chain, lo);
    let v_hi = sign_variations(&chain, hi);
    debug_assert!(v_lo >= v_hi);
    Ok(v_lo.saturating_sub(v_hi))
}

/// Exact number of distinct real roots of `q` in the open interval
/// `(lo, hi)` with rational endpoints.
pub fn sturm_count(q: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    sturm_count_bounded(
        q,
        &RealBound::Finite(lo.clone()),
        &RealBound::Finite(hi.clone()),
    )
}

/// Total number of distinct real roots.
pub fn count_distinct_real_roots(q: &IntPolynomial) -> Result<usize> {
    sturm_count_bounded(q, &RealBound::NegInf, &RealBound::PosInf)
}
