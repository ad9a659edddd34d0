//! Polynomial arithmetic modulo a fixed word-sized prime, used as a
//! one-sided screen: if gcd(a, b) is constant mod q then it is constant
//! over the integers (for inputs whose leading coefficients q does not
//! divide), so the expensive exact gcd can be skipped. A nonzero screen
//! result always falls through to the exact path, so screening never
//! changes results.

use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Large enough that search-family coefficients never hit 0 mod q, small
/// enough that products fit in i64.
pub(crate) const Q: i64 = 1_073_741_789;

pub(crate) fn reduce(p: &IntPolynomial) -> Option<Vec<i64>> {
    let q = BigInt::from(Q);
    let coeffs: Vec<i64> = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &q) + &q) % &q;
            r.to_i64().expect("reduced below q")
        })
        .collect();
    // an untrustworthy reduction: the true leading coefficient vanished
    if coeffs.last() == Some(&0) && !p.is_zero() {
        return None;
    }
    Some(coeffs)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn mul_mod(a: i64, b: i64) -> i64 {
    (a as i128 * b as i128 % Q as i128) as i64
}

fn pow_mod(mut base: i64, mut exp: i64) -> i64 {
    let mut acc = 1i64;
    base %= Q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: i64) -> i64 {
    pow_mod(a, Q - 2)
}

/// Degree of gcd(a, b) mod Q; 0 means coprime (and hence coprime over Z
/// when the reductions were trustworthy).
pub(crate) fn gcd_degree(mut a: Vec<i64>, mut b: Vec<i64>) -> usize {
    a = trim(a);
    b = trim(b);
    loop {
        if b.len() == 1 {
            return if b[0] == 0 { a.len() - 1 } else { 0 };
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a mod b
        let lead_inv = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let shift = a.len() - b.len();
            let factor = mul_mod(*a.last().unwrap(), lead_inv);
            for i in 0..b.len() {
                let t = a[shift + i] - mul_mod(factor, b[i]);
                a[shift + i] = if t < 0 { t + Q } else { t };
            }
            a = trim(a);
            if a.len() == 1 && a[0] == 0 {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// x^m mod r (mod Q) for monic-mod-Q r of degree >= 1.
pub(crate) fn x_pow_mod(r: &[i64], m: usize) -> Vec<i64> {
    let d = r.len() - 1;
    debug_assert!(d >= 1 && r[d] == 1);
    let mut acc = vec![0i64; d];
    acc[0] = 1;
    for _ in 0..m {
        let top = acc[d - 1];
        for i in (1..d).rev() {
            acc[i] = acc[i - 1];
        }
        acc[0] = 0;
        if top != 0 {
            for i in 0..d {
                let t = acc[i] - mul_mod(top, r[i]);
                acc[i] = if t < 0 { t + Q } else { t };
            }
        }
    }
    acc
}

/// One-sided squarefree test: true means definitely squarefree over Z.
pub(crate) fn definitely_squarefree(p: &IntPolynomial) -> bool {
    if p.is_zero() || p.degree() == 0 {
        return false;
    }
    let Some(a) = reduce(p) else { return false };
    let Some(b) = reduce(&p.derivative()) else {
        return false;
    };
    if b.last() == Some(&0) && b.len() == 1 {
        return false;
    }
    gcd_degree(a, b) == 0
}
