//! Simultaneous complex root approximation (Aberth-Ehrlich iteration) with
//! a posteriori error radii.
//!
//! Multiple roots are never iterated on directly: the input is split into
//! squarefree factors first, so the iteration always sees simple roots and
//! the residual-based radii stay tight. On a blown iteration budget the
//! solver escalates working precision once (double-double Newton polish)
//! before reporting failure.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

/// One approximated root together with a radius such that some true root of
/// the input lies within `radius` of `value`.
#[derive(Clone, Copy, Debug)]
pub struct RootEstimate {
    pub value: Complex64,
    pub radius: f64,
}

/// Approximates all deg(p) complex roots (with multiplicity).
pub fn complex_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<RootEstimate>> {
    if p.is_zero() {
        return Err(Error::Domain("root finding on the zero polynomial".into()));
    }
    if p.degree() == 0 {
        return Err(Error::Domain("root finding requires degree >= 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let (core, zeros) = p.strip_zero_roots();
    let mut out = Vec::with_capacity(p.degree());
    for _ in 0..zeros {
        out.push(RootEstimate {
            value: Complex64::zero(),
            radius: 0.0,
        });
    }
    for (factor, mult) in core.squarefree_decomposition() {
        let roots = aberth_squarefree(&factor, tol)?;
        for r in roots {
            for _ in 0..mult {
                out.push(r);
            }
        }
    }
    debug_assert_eq!(out.len(), p.degree());
    Ok(out)
}

/// Double-double value: hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        quick_two_sum(s, e + self.lo + o.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi)
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

/// Complex number in double-double components.
#[derive(Clone, Copy, Debug)]
struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    fn from_c64(z: Complex64) -> Self {
        CDd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Exact coefficients split into double-double pairs.
struct DdCoeffs {
    c: Vec<Dd>,
}

impl DdCoeffs {
    fn from_poly(p: &IntPolynomial) -> Self {
        let c = p
            .coeffs()
            .iter()
            .map(|b| {
                let hi = b.to_f64().unwrap_or(f64::INFINITY);
                let lo = if hi.is_finite() {
                    let hi_int = num_bigint::BigInt::from_f64(hi).expect("finite integral f64");
                    (b - hi_int).to_f64().unwrap_or(0.0)
                } else {
                    0.0
                };
                Dd { hi, lo }
            })
            .collect();
        DdCoeffs { c }
    }

    /// Accurate Horner evaluation in double-double arithmetic.
    fn eval(&self, z: Complex64) -> Complex64 {
        let zd = CDd::from_c64(z);
        let mut acc = CDd {
            re: Dd::from_f64(0.0),
            im: Dd::from_f64(0.0),
        };
        for c in self.c.iter().rev() {
            acc = acc.mul(zd).add(CDd {
                re: *c,
                im: Dd::from_f64(0.0),
            });
        }
        acc.to_c64()
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn aberth_squarefree(p: &IntPolynomial, tol: f64) -> Result<Vec<RootEstimate>> {
    let n = p.degree();
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Domain(
            "coefficients exceed floating-point range".into(),
        ));
    }
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let dd = DdCoeffs::from_poly(p);

    if n == 1 {
        let z = Complex64::new(-coeffs[0] / coeffs[1], 0.0);
        let pv = dd.eval(z).norm();
        let radius = (pv / coeffs[1].abs()).max(f64::EPSILON * (1.0 + z.norm()));
        return Ok(vec![RootEstimate { value: z, radius }]);
    }

    let lead = coeffs[n].abs();
    let cauchy = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs())) / lead;
    let r0 = if coeffs[0] != 0.0 {
        (coeffs[0].abs() / lead).powf(1.0 / n as f64)
    } else {
        0.5 * cauchy
    }
    .clamp(1e-3, cauchy);

    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.618 / n as f64;
            Complex64::from_polar(r0, theta)
        })
        .collect();

    let budget = 200 * n as u32;
    let mut iterations = 0u32;
    while iterations < budget {
        iterations += 1;
        let mut max_step = 0.0f64;
        for i in 0..n {
            let zi = z[i];
            let pv = horner(&coeffs, zi);
            let dv = horner(&deriv, zi);
            if pv.norm() == 0.0 {
                continue;
            }
            if dv.norm() == 0.0 || !dv.is_finite() || !pv.is_finite() {
                // landed on a critical point; nudge deterministically
                z[i] = zi * 1.000_000_1 + Complex64::new(1e-9, 1e-9);
                max_step = f64::MAX;
                continue;
            }
            let newton = pv / dv;
            let mut sum_inv = Complex64::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    sum_inv += (zi - zj).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum_inv;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-15 {
            break;
        }
    }

    // Double-double Newton polish sharpens the residual floor well below
    // plain f64 evaluation noise. The tolerance is taken relative to the
    // root magnitude: a root of size 10^6 cannot be pinned to an absolute
    // 10^-12 in f64 no matter the residual accuracy.
    let accepted = |e: &RootEstimate| e.radius <= tol * e.value.norm().max(1.0);
    polish(&dd, &deriv, &mut z, 3);
    let mut estimates = radii(&dd, &deriv, &z, n);
    if !estimates.iter().all(accepted) {
        // one precision escalation before giving up
        polish(&dd, &deriv, &mut z, 6);
        estimates = radii(&dd, &deriv, &z, n);
        if let Some(bad) = estimates.iter().find(|e| !accepted(e)) {
            let residual = dd.eval(bad.value).norm();
            return Err(Error::Convergence {
                residual,
                iterations,
            });
        }
    }
    Ok(estimates)
}

fn polish(dd: &DdCoeffs, deriv: &[f64], z: &mut [Complex64], rounds: usize) {
    for zi in z.iter_mut() {
        for _ in 0..rounds {
            let pv = dd.eval(*zi);
            let dv = horner(deriv, *zi);
            if dv.norm() == 0.0 || !pv.is_finite() {
                break;
            }
            let step = pv / dv;
            if !step.is_finite() || step.norm() < 1e-320 {
                break;
            }
            *zi -= step;
        }
    }
}

/// A posteriori radius: n|p(z)| / (|p'(z)| - |p(z)| * sum 1/|z - z_j|),
/// with the interaction sum guarding against clustered approximations.
fn radii(dd: &DdCoeffs, deriv: &[f64], z: &[Complex64], n: usize) -> Vec<RootEstimate> {
    z.iter()
        .enumerate()
        .map(|(i, &zi)| {
            let pv = dd.eval(zi).norm();
            let dv = horner(deriv, zi).norm();
            let mut interaction = 0.0f64;
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    interaction += 1.0 / (zi - zj).norm();
                }
            }
            let denom = dv - pv * interaction;
            let radius = if pv == 0.0 {
                0.0
            } else if denom > 0.0 {
                n as f64 * pv / denom
            } else {
                f64::INFINITY
            };
            RootEstimate { value: zi, radius }
        })
        .collect()
}
