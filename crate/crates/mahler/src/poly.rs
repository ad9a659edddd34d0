//! Exact integer-coefficient polynomials and the structural transforms
//! (reciprocal, Graeffe, trace) that the rest of the crate builds on.
//!
//! Coefficients are arbitrary-precision integers stored in ascending order:
//! index `i` holds the coefficient of `x^i`. The zero polynomial is the
//! single entry `0`; every other polynomial has a nonzero leading entry.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::Mul;

/// An exact polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros above the true degree.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![BigInt::zero()])
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^n - 1`, the polynomial whose roots are the n-th roots of unity.
    pub fn xn_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    /// Parses the wire format: comma-separated integers, constant term first.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        let mut coeffs = Vec::new();
        for token in text.split(',') {
            let t = token.trim();
            if t.is_empty() {
                return Err(Error::Parse(format!(
                    "malformed integer token {token:?} in coefficient list"
                )));
            }
            let value: BigInt = t
                .parse()
                .map_err(|_| Error::Parse(format!("malformed integer token {t:?}")))?;
            coeffs.push(value);
        }
        Ok(Self::new(coeffs))
    }

    /// Ascending coefficients; never empty.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree of a nonzero polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("coefficients are never empty")
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    /// Exact product by convolution.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Number of leading `x` factors, i.e. the multiplicity of the root 0.
    pub fn root_order_at_zero(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Removes `x^k` factors, returning the cofactor and `k`.
    pub fn strip_zero_roots(&self) -> (Self, usize) {
        let k = self.root_order_at_zero();
        if k == 0 {
            return (self.clone(), 0);
        }
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    /// P*(x) = x^deg(p) * p(1/x): the coefficient sequence reversed.
    pub fn reciprocal_transform(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain(
                "reciprocal transform of the zero polynomial".into(),
            ));
        }
        let mut rev = self.coeffs.clone();
        rev.reverse();
        Ok(Self::new(rev))
    }

    /// True iff P* = P or P* = -P.
    pub fn is_self_reciprocal(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let rev = self.reciprocal_transform().expect("nonzero");
        rev == *self || rev == self.neg()
    }

    /// True iff P* = +P (palindromic coefficients).
    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && self.reciprocal_transform().expect("nonzero") == *self
    }

    /// Root-squaring step: returns the polynomial whose roots are the squares
    /// of the roots of `self`, normalized to a positive leading coefficient.
    ///
    /// Writing p(x) = e(x^2) + x*o(x^2), the result is +/-(e(y)^2 - y*o(y)^2).
    pub fn graeffe_step(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("Graeffe step of the zero polynomial".into()));
        }
        let even: Vec<BigInt> = self.coeffs.iter().step_by(2).cloned().collect();
        let odd: Vec<BigInt> = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        let e = Self::new(even);
        let o = if odd.is_empty() {
            Self::zero()
        } else {
            Self::new(odd)
        };
        let result = e.multiply(&e).sub(&o.multiply(&o).shift_up(1));
        Ok(result.normalize_leading_sign())
    }

    /// Flips the global sign if the leading coefficient is negative.
    pub fn normalize_leading_sign(&self) -> Self {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Greatest absolute coefficient value.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("coefficients are never empty")
    }

    /// Integer Cauchy root bound: every root has modulus < 1 + height/|lead|,
    /// rounded up to an integer.
    pub fn cauchy_bound_int(&self) -> BigInt {
        if self.degree() == 0 {
            return BigInt::one();
        }
        let lead = self.leading().abs();
        // ceil(height/lead) + 1
        let h = self.height();
        let q = (&h + &lead - BigInt::one()) / &lead;
        q + BigInt::one()
    }

    /// Long division, valid only when the divisor is monic; exact over the
    /// integers. Returns (quotient, remainder).
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = self.degree();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (d..=n).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            quot[k - d] = c.clone();
            for j in 0..=d {
                let t = &divisor.coeffs[j] * &c;
                rem[k - d + j] -= t;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division: returns `Some(q)` with `self = q * divisor` when the
    /// division leaves no remainder, `None` otherwise.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let d = divisor.degree();
        let n = self.degree();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (d..=n).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&c, lead);
            if !r.is_zero() {
                return None;
            }
            quot[k - d] = q.clone();
            for j in 0..=d {
                let t = &divisor.coeffs[j] * &q;
                rem[k - d + j] -= t;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Positive gcd of all coefficients (content); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Polynomial gcd over the integers (primitive pseudo-remainder
    /// sequence), normalized to a primitive polynomial with positive leading
    /// coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part().normalize_leading_sign();
        let mut b = other.primitive_part().normalize_leading_sign();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem_abs(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().normalize_leading_sign()
    }

    /// Pseudo-remainder of `|lc(b)|^(deg a - deg b + 1) * a` divided by `b`.
    /// The positive multiplier keeps signs usable in Sturm chains.
    pub fn pseudo_rem_abs(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        if self.is_zero() || self.degree() < b.degree() {
            return self.clone();
        }
        let lead = b.leading().abs();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= b.degree() {
            let shift = rem.degree() - b.degree();
            // rem <- lead * rem - sign-matched top-term multiple of b
            let top = rem.leading().clone();
            let scaled = rem.scale(&lead);
            let adj = if b.leading().is_negative() {
                b.scale(&-&top).shift_up(shift)
            } else {
                b.scale(&top).shift_up(shift)
            };
            let next = scaled.sub(&adj);
            debug_assert!(next.is_zero() || next.degree() < rem.degree());
            rem = next;
        }
        rem
    }

    /// Squarefree part: `self / gcd(self, self')`, primitive with positive
    /// leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let w = self.primitive_part().normalize_leading_sign();
        if w.degree() == 0 {
            return Self::one();
        }
        let g = w.gcd(&w.derivative());
        if g.degree() == 0 {
            return w;
        }
        w.divide_exact(&g)
            .expect("gcd divides")
            .primitive_part()
            .normalize_leading_sign()
    }

    /// Yun squarefree decomposition of the primitive part: returns pairs
    /// `(f_i, i)` with `self = sign * content * prod f_i^i`, each `f_i`
    /// squarefree, primitive, positive leading coefficient, degree >= 1.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let w = self.primitive_part().normalize_leading_sign();
        if crate::modp::definitely_squarefree(&w) {
            return vec![(w, 1)];
        }
        let g = w.gcd(&w.derivative());
        if g.degree() == 0 {
            return vec![(w, 1)];
        }
        // Yun's recurrence: the intermediate a, b must keep their exact
        // integer values (no content removal) or the b - a' step drifts.
        let mut out = Vec::new();
        let mut a = w.divide_exact(&g).expect("gcd divides");
        let mut b = w
            .derivative()
            .divide_exact(&g)
            .expect("gcd divides derivative");
        let mut i = 1u32;
        loop {
            let c = b.sub(&a.derivative());
            if c.is_zero() {
                if a.degree() > 0 {
                    out.push((a.primitive_part().normalize_leading_sign(), i));
                }
                break;
            }
            let f = a.gcd(&c);
            if f.degree() > 0 {
                out.push((f.clone(), i));
            }
            a = a.divide_exact(&f).expect("factor divides");
            b = c.divide_exact(&f).expect("factor divides");
            i += 1;
            if a.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Computes `x^m mod self` for monic `self`; used for cyclotomic gcds.
    pub fn x_pow_mod(&self, m: usize) -> Self {
        assert!(self.is_monic());
        let d = self.degree();
        if d == 0 {
            return Self::zero();
        }
        let mut r = vec![BigInt::zero(); d];
        // r starts as x^0
        r[0] = BigInt::one();
        for _ in 0..m {
            // multiply by x, then reduce the x^d term
            let top = r[d - 1].clone();
            for i in (1..d).rev() {
                r[i] = r[i - 1].clone();
            }
            r[0] = BigInt::zero();
            if !top.is_zero() {
                for (ri, ci) in r.iter_mut().zip(&self.coeffs) {
                    *ri -= &top * ci;
                }
            }
        }
        Self::new(r)
    }

    /// Transforms a monic palindromic polynomial of even degree `2s` into its
    /// trace polynomial `q` with `p(x) = x^s * q(x + 1/x)`.
    pub fn to_trace_polynomial(&self) -> Result<TracePolynomial> {
        if self.is_zero() || !self.is_monic() {
            return Err(Error::Domain(
                "trace transform requires a monic polynomial".into(),
            ));
        }
        let rev = self.reciprocal_transform()?;
        if rev == self.neg() && rev != *self {
            return Err(Error::Domain(
                "anti-reciprocal input (P* = -P): factor out (x - 1) or (x + 1) first".into(),
            ));
        }
        if rev != *self {
            return Err(Error::Domain(
                "trace transform requires a self-reciprocal polynomial".into(),
            ));
        }
        let n = self.degree();
        if !n.is_multiple_of(2) {
            return Err(Error::Domain(
                "odd-degree self-reciprocal input: factor out (x + 1) first".into(),
            ));
        }
        let s = n / 2;
        // x^k + x^-k = b_k(t) with b_0 = 2, b_1 = t, b_{k+1} = t*b_k - b_{k-1}
        let mut q = Self::constant(self.coeffs[s].clone());
        let t = Self::from_i64(&[0, 1]);
        let mut b_prev = Self::from_i64(&[2]);
        let mut b_cur = t.clone();
        for k in 1..=s {
            let c = &self.coeffs[s + k];
            if !c.is_zero() {
                q = q.add(&b_cur.scale(c));
            }
            if k < s {
                let b_next = t.multiply(&b_cur).sub(&b_prev);
                b_prev = b_cur;
                b_cur = b_next;
            }
        }
        debug_assert_eq!(q.degree(), s);
        debug_assert!(q.is_monic());
        Ok(TracePolynomial { q, half_degree: s })
    }

    /// Wire format: comma-separated coefficients, constant first.
    pub fn to_wire(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.multiply(rhs)
    }
}

/// The trace polynomial of a self-reciprocal polynomial of even degree 2s:
/// the monic degree-s polynomial `q` with `p(x) = x^s * q(x + 1/x)`.
///
/// Roots of `p` on the unit circle correspond to roots of `q` in (-2, 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePolynomial {
    q: IntPolynomial,
    half_degree: usize,
}

impl TracePolynomial {
    pub fn q(&self) -> &IntPolynomial {
        &self.q
    }

    pub fn half_degree(&self) -> usize {
        self.half_degree
    }

    /// Re-expands `x^s * q(x + 1/x)`, reproducing the original polynomial.
    pub fn expand(&self) -> IntPolynomial {
        let s = self.half_degree;
        // x^s * q(x + 1/x) = sum_j q_j x^(s-j) (x^2 + 1)^j
        let x2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
        let mut acc = IntPolynomial::zero();
        let mut pow = IntPolynomial::one();
        for j in 0..=self.q.degree() {
            let c = self.q.coeff(j);
            if !c.is_zero() {
                acc = acc.add(&pow.scale(&c).shift_up(s - j));
            }
            if j < self.q.degree() {
                pow = pow.multiply(&x2p1);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    /// Lehmer's degree-10 polynomial, constant term first.
    pub(crate) const LEHMER: [i64; 11] = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1];

    #[test]
    fn parse_basic() {
        assert_eq!(IntPolynomial::parse("1,0,1").unwrap(), p(&[1, 0, 1]));
        let lehmer = IntPolynomial::parse("1,1,0,-1,-1,-1,-1,-1,0,1,1").unwrap();
        assert_eq!(lehmer, p(&LEHMER));
        assert_eq!(lehmer.degree(), 10);
        assert!(lehmer.is_monic());
    }

    #[test]
    fn parse_strips_trailing_zeros() {
        let q = IntPolynomial::parse("5,0,0,0").unwrap();
        assert_eq!(q, p(&[5]));
        assert_eq!(q.degree(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(IntPolynomial::parse(""), Err(Error::Parse(_))));
        assert!(matches!(IntPolynomial::parse("  "), Err(Error::Parse(_))));
        let err = IntPolynomial::parse("1,x,3").unwrap_err();
        assert!(err.to_string().contains("\"x\""), "{err}");
        assert!(matches!(IntPolynomial::parse("1,,3"), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_allows_whitespace() {
        assert_eq!(IntPolynomial::parse(" 1 , 2 ,3").unwrap(), p(&[1, 2, 3]));
    }

    #[test]
    fn multiply_cases() {
        // (x-1)(x+1) = x^2 - 1
        assert_eq!(p(&[-1, 1]).multiply(&p(&[1, 1])), p(&[-1, 0, 1]));
        // (x^2+x+1)(x^2-x-1) = (x^2 + (x+1))(x^2 - (x+1)) = x^4 - x^2 - 2x - 1
        assert_eq!(
            p(&[1, 1, 1]).multiply(&p(&[-1, -1, 1])),
            p(&[-1, -2, -1, 0, 1])
        );
        assert_eq!(
            IntPolynomial::zero().multiply(&p(&[2, 0, 0, 1])),
            IntPolynomial::zero()
        );
    }

    #[test]
    fn reciprocal_cases() {
        assert_eq!(
            p(&[1, -3, 1]).reciprocal_transform().unwrap(),
            p(&[1, -3, 1])
        );
        // x^3 - x - 1 -> -x^3 - x^2 + 1
        assert_eq!(
            p(&[-1, -1, 0, 1]).reciprocal_transform().unwrap(),
            p(&[1, 0, -1, -1])
        );
        let lehmer = p(&LEHMER);
        assert_eq!(lehmer.reciprocal_transform().unwrap(), lehmer);
        assert!(lehmer.is_self_reciprocal());
        assert!(!p(&[-1, -1, 0, 1]).is_self_reciprocal());
        // x - 1 satisfies P* = -P
        assert!(p(&[-1, 1]).is_self_reciprocal());
        assert!(!p(&[-1, 1]).is_palindromic());
    }

    #[test]
    fn reciprocal_involution_on_nonzero_constant() {
        for coeffs in [[3i64, -2, 5, 7], [1, 0, 0, 2], [-4, 1, 1, 1]] {
            let q = p(&coeffs);
            assert_eq!(
                q.reciprocal_transform()
                    .unwrap()
                    .reciprocal_transform()
                    .unwrap(),
                q
            );
        }
    }

    #[test]
    fn graeffe_cases() {
        // x - 2 -> x - 4
        assert_eq!(p(&[-2, 1]).graeffe_step().unwrap(), p(&[-4, 1]));
        // x^2 + 1 -> (x+1)^2
        assert_eq!(p(&[1, 0, 1]).graeffe_step().unwrap(), p(&[1, 2, 1]));
        // x^2 - 3x + 1 -> x^2 - 7x + 1
        assert_eq!(p(&[1, -3, 1]).graeffe_step().unwrap(), p(&[1, -7, 1]));
    }

    #[test]
    fn graeffe_multiplicative_up_to_sign() {
        let cases = [
            (vec![1i64, 2, 1], vec![-3i64, 0, 1]),
            (vec![-1, -1, 0, 1], vec![1, 1, 1]),
            (vec![2, -1, 3], vec![5, 1]),
        ];
        for (a, b) in cases {
            let a = p(&a);
            let b = p(&b);
            let lhs = a.multiply(&b).graeffe_step().unwrap();
            let rhs = a
                .graeffe_step()
                .unwrap()
                .multiply(&b.graeffe_step().unwrap())
                .normalize_leading_sign();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn division_and_gcd() {
        let prod = p(&[1, 1, 1]).multiply(&p(&[-1, -1, 1]));
        let (q, r) = prod.div_rem_monic(&p(&[1, 1, 1]));
        assert_eq!(q, p(&[-1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(prod.divide_exact(&p(&[1, 1, 1])).unwrap(), p(&[-1, -1, 1]));
        assert!(p(&[1, 1]).divide_exact(&p(&[0, 1])).is_none());

        let g = prod.gcd(&p(&[1, 1, 1]).multiply(&p(&[7, 1])));
        assert_eq!(g, p(&[1, 1, 1]));
        // coprime inputs
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])).degree(), 0);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (x-1)^2 (x+2)^3
        let f = p(&[-1, 1]);
        let g = p(&[2, 1]);
        let prod = f.multiply(&f).multiply(&g).multiply(&g).multiply(&g);
        let dec = prod.squarefree_decomposition();
        assert_eq!(dec, vec![(f, 2), (g, 3)]);

        let sf = p(&[-2, 0, 1]);
        assert_eq!(sf.squarefree_decomposition(), vec![(sf.clone(), 1)]);
    }

    #[test]
    fn x_pow_mod_matches_long_division() {
        let m = p(&LEHMER);
        for k in [0usize, 1, 7, 23, 64] {
            let mut xe = vec![BigInt::zero(); k + 1];
            xe[k] = BigInt::one();
            let xk = IntPolynomial::new(xe);
            let (_, r) = xk.div_rem_monic(&m);
            assert_eq!(m.x_pow_mod(k), r, "k={k}");
        }
    }

    #[test]
    fn trace_polynomial_cases() {
        // x^2 + 1 -> t
        let t = p(&[1, 0, 1]).to_trace_polynomial().unwrap();
        assert_eq!(t.q(), &p(&[0, 1]));
        assert_eq!(t.half_degree(), 1);
        // x^2 - 3x + 1 -> t - 3
        assert_eq!(
            p(&[1, -3, 1]).to_trace_polynomial().unwrap().q(),
            &p(&[-3, 1])
        );
        // x^4 - x^3 - x^2 - x + 1 -> t^2 - t - 3
        assert_eq!(
            p(&[1, -1, -1, -1, 1]).to_trace_polynomial().unwrap().q(),
            &p(&[-3, -1, 1])
        );
    }

    #[test]
    fn trace_roundtrip_lehmer() {
        let lehmer = p(&LEHMER);
        let t = lehmer.to_trace_polynomial().unwrap();
        assert_eq!(t.expand(), lehmer);
        assert_eq!(t.q(), &p(&[3, 4, -5, -5, 1, 1]));
    }

    #[test]
    fn trace_rejects_bad_inputs() {
        // anti-reciprocal: x^2 - 1
        let err = p(&[-1, 0, 1]).to_trace_polynomial().unwrap_err();
        assert!(err.to_string().contains("factor out"), "{err}");
        // odd degree palindrome: x^3 + 2x^2 + 2x + 1
        let err = p(&[1, 2, 2, 1]).to_trace_polynomial().unwrap_err();
        assert!(err.to_string().contains("factor out"), "{err}");
        // not self-reciprocal at all
        assert!(p(&[-1, -1, 0, 1]).to_trace_polynomial().is_err());
    }

    #[test]
    fn zero_polynomial_invariants() {
        let z = IntPolynomial::parse("0,0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.coeffs().len(), 1);
        assert!(z.reciprocal_transform().is_err());
        assert!(z.graeffe_step().is_err());
    }
}
