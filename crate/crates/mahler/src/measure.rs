//! Mahler measure computation by two independent routes.
//!
//! The primary route multiplies max(1, |root|) over numerically approximated
//! roots, with exact help where it matters: cyclotomic factors are stripped
//! exactly (they contribute 1), and root moduli within 1e-9 of the unit
//! circle are snapped to exactly 1 only when the exact reciprocal-pair count
//! (gcd with the reversed polynomial, then Sturm on the trace polynomial)
//! confirms that many roots really sit on the circle. Salem polynomials have
//! circle roots that are not roots of unity, so both mechanisms are needed.
//!
//! The independent oracle integrates log|p| over the unit circle (Jensen's
//! formula) with a trapezoid rule whose sample phase is offset to dodge
//! roots of unity.

use crate::cyclotomic::strip_cyclotomic_factors;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::roots::complex_roots;
use crate::sturm::sturm_count;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

/// Which route produced a measure value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MeasureMethod {
    RootProduct,
    JensenQuadrature,
    GraeffeCrossCheck,
}

/// A Mahler measure value with a certified error radius.
#[derive(Clone, Debug)]
pub struct MeasureResult {
    /// The measure; at least 1 for integer polynomials.
    pub value: f64,
    /// Certified bound on |value - M(p)|.
    pub error_radius: f64,
    pub method: MeasureMethod,
    /// All root moduli (with multiplicity, ascending), when the root-product
    /// route ran. Exactly-known moduli (0 for x factors, 1 for cyclotomic or
    /// certified circle roots) appear as exact values.
    pub root_moduli: Option<Vec<f64>>,
}

/// Moduli within this band of 1 trigger the exact circle-root count.
const SNAP_BAND: f64 = 1e-9;

/// Computes M(p) = |lead| * prod max(1, |root|) with error radius at most
/// `tol`. Non-monic input is allowed; the leading coefficient then
/// multiplies the product.
pub fn mahler_measure(p: &IntPolynomial, tol: f64) -> Result<MeasureResult> {
    if p.is_zero() {
        return Err(Error::Domain(
            "Mahler measure of the zero polynomial".into(),
        ));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let content = p.content();
    let mut value = content.to_f64().unwrap_or(f64::INFINITY).abs();
    let mut lo = value;
    let mut hi = value;
    let mut moduli: Vec<f64> = Vec::with_capacity(p.degree());

    let mut numeric_count = 0usize;
    for (factor, mult) in p.squarefree_decomposition() {
        let part = factor_measure(&factor, tol)?;
        value *= part.value.powi(mult as i32);
        lo *= part.lo.powi(mult as i32);
        hi *= part.hi.powi(mult as i32);
        numeric_count += part.numeric_count * mult as usize;
        for m in part.moduli {
            for _ in 0..mult {
                moduli.push(m);
            }
        }
    }

    debug_assert_eq!(moduli.len(), p.degree());
    moduli.sort_by(|a, b| a.partial_cmp(b).expect("finite moduli"));
    // the interval product and the root-modulus computation each round once
    // per numeric factor; exact factors (cyclotomic, x powers) contribute
    // the float 1.0 or 0.0 and cost nothing
    let product_rounding = if numeric_count > 0 {
        value * f64::EPSILON * (2 * numeric_count + 4) as f64
    } else {
        0.0
    };
    let error_radius = ((value - lo).max(hi - value) + product_rounding).max(0.0);
    if !error_radius.is_finite() || error_radius > tol {
        return Err(Error::Convergence {
            residual: error_radius,
            iterations: 0,
        });
    }
    Ok(MeasureResult {
        value,
        error_radius,
        method: MeasureMethod::RootProduct,
        root_moduli: Some(moduli),
    })
}

struct FactorMeasure {
    value: f64,
    lo: f64,
    hi: f64,
    moduli: Vec<f64>,
    /// Moduli that came out of the root finder rather than an exact rule.
    numeric_count: usize,
}

/// Measure of one squarefree primitive factor with positive leading
/// coefficient. Exact machinery (cyclotomic stripping, circle-root
/// counting) only runs when some computed modulus lands in the snap band;
/// everything else is a plain certified root product.
fn factor_measure(f: &IntPolynomial, tol: f64) -> Result<FactorMeasure> {
    let mut moduli = Vec::with_capacity(f.degree());
    let (core, zeros) = f.strip_zero_roots();
    moduli.extend(std::iter::repeat_n(0.0, zeros));

    let lead = core.leading().to_f64().unwrap_or(f64::INFINITY).abs();
    if core.degree() == 0 {
        return Ok(FactorMeasure {
            value: lead,
            lo: lead,
            hi: lead,
            moduli,
            numeric_count: 0,
        });
    }

    // Per-root tolerance: tight enough that the product error stays under
    // tol, floored at what f64-representable roots can achieve.
    let root_tol = (tol / (4.0 * (core.degree() + 1) as f64)).clamp(5e-14, 1e-10);
    let roots = complex_roots(&core, root_tol)?;
    let mut pairs: Vec<(f64, f64)> = roots.iter().map(|r| (r.value.norm(), r.radius)).collect();

    if core.is_monic() && pairs.iter().any(|(m, _)| (m - 1.0).abs() <= SNAP_BAND) {
        let (residual, removed) = strip_cyclotomic_factors(&core)?;
        moduli.extend(std::iter::repeat_n(1.0, removed));
        if residual.degree() == 0 {
            pairs.clear();
        } else {
            if removed > 0 {
                let roots = complex_roots(&residual, root_tol)?;
                pairs = roots.iter().map(|r| (r.value.norm(), r.radius)).collect();
            }
            let snap = exact_circle_root_count(&residual)?;
            if snap > 0 {
                // snap the `snap` moduli nearest the circle to exactly 1
                let mut order: Vec<usize> = (0..pairs.len()).collect();
                order.sort_by(|&a, &b| {
                    (pairs[a].0 - 1.0)
                        .abs()
                        .partial_cmp(&(pairs[b].0 - 1.0).abs())
                        .expect("finite moduli")
                });
                for &i in order.iter().take(snap.min(pairs.len())) {
                    pairs[i] = (1.0, 0.0);
                }
            }
        }
    }

    let mut value = lead;
    let mut lo = lead;
    let mut hi = lead;
    let mut numeric_count = 0usize;
    for &(m, r) in &pairs {
        value *= m.max(1.0);
        lo *= (m - r).max(1.0);
        hi *= (m + r).max(1.0);
        moduli.push(m);
        if m != 1.0 || r != 0.0 {
            numeric_count += 1;
        }
    }
    Ok(FactorMeasure {
        value,
        lo,
        hi,
        moduli,
        numeric_count,
    })
}

/// Exact number of roots of a monic cyclotomic-free squarefree polynomial
/// lying on the unit circle. Such roots pair with their inverses, so they
/// divide gcd(r, r*); that gcd is palindromic of even degree and its trace
/// polynomial has one real root in (-2, 2) per circle pair.
fn exact_circle_root_count(r: &IntPolynomial) -> Result<usize> {
    let rev = r.reciprocal_transform()?;
    let c = r.gcd(&rev);
    if c.degree() < 2 || !c.is_palindromic() || !c.degree().is_multiple_of(2) {
        return Ok(0);
    }
    let trace = c.to_trace_polynomial()?;
    let two = BigRational::from(BigInt::from(2));
    let pairs = sturm_count(trace.q(), &(-two.clone()), &two)?;
    Ok(2 * pairs)
}

/// Natural logarithm of the Mahler measure; 0 exactly for cyclotomic
/// products. The measure's error radius transfers to the log at first order
/// (divide by the value), which only shrinks it since M >= 1.
pub fn log_mahler(p: &IntPolynomial, tol: f64) -> Result<f64> {
    Ok(mahler_measure(p, tol)?.value.ln())
}

/// Independent estimate via Jensen's formula: the mean of log|p| over the
/// unit circle equals log M(p). Trapezoid samples are phase-shifted by
/// pi/(7N) so they never land on roots of unity, with a deterministic
/// retry ladder if a sample still hits a zero.
pub fn jensen_measure(p: &IntPolynomial, samples: usize) -> Result<MeasureResult> {
    if p.is_zero() {
        return Err(Error::Domain(
            "Jensen measure of the zero polynomial".into(),
        ));
    }
    if samples < 16 {
        return Err(Error::Domain(
            "Jensen quadrature needs samples >= 16".into(),
        ));
    }
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
    let n = samples;
    let v_full = mean_log_on_circle(&coeffs, n)?;
    let v_half = mean_log_on_circle(&coeffs, n / 2)?;
    let v_quarter = mean_log_on_circle(&coeffs, n / 4)?;

    let value = v_full.exp();
    let d = p.degree() as f64;
    // Empirical Richardson estimate plus an a-priori term covering the
    // O(1/N) contribution of roots on the circle.
    let error_radius = 2.0
        * ((value - v_half.exp()).abs() + (v_half.exp() - v_quarter.exp()).abs())
        + 12.0 * d * value / n as f64
        + 1e-13 * (1.0 + value);
    Ok(MeasureResult {
        value,
        error_radius,
        method: MeasureMethod::JensenQuadrature,
        root_moduli: None,
    })
}

fn mean_log_on_circle(coeffs: &[f64], n: usize) -> Result<f64> {
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
    let guard = 1e-14 * scale.max(1.0);
    let base = std::f64::consts::PI / (7.0 * n as f64);
    'offsets: for attempt in 0..8 {
        let delta = base * (1.0 + attempt as f64 * 0.618_033_988_749_894_9);
        let mut acc = 0.0f64;
        for k in 0..n {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + delta;
            let z = Complex64::from_polar(1.0, theta);
            let mut v = Complex64::new(0.0, 0.0);
            for &c in coeffs.iter().rev() {
                v = v * z + c;
            }
            let norm = v.norm();
            if norm < guard {
                continue 'offsets;
            }
            acc += norm.ln();
        }
        return Ok(acc / n as f64);
    }
    Err(Error::Quadrature(
        "could not place samples away from zeros of p".into(),
    ))
}

/// Cross-check route: the Graeffe step squares the measure, so
/// sqrt(M(graeffe(p))) re-estimates M(p).
pub fn graeffe_cross_check(p: &IntPolynomial, tol: f64) -> Result<MeasureResult> {
    let g = p.graeffe_step()?;
    let m = mahler_measure(&g, tol)?;
    let value = m.value.sqrt();
    let error_radius = m.error_radius / (2.0 * value.max(1.0)) + f64::EPSILON * value;
    Ok(MeasureResult {
        value,
        error_radius,
        method: MeasureMethod::GraeffeCrossCheck,
        root_moduli: None,
    })
}

/// Exact-bisection lower/upper bracket for the largest real root in (lo, hi),
/// using only integer sign evaluations. Used as an independent oracle by
/// tests and kept exact so it never depends on the float pipeline.
pub fn bisect_real_root(p: &IntPolynomial, lo: f64, hi: f64, steps: usize) -> f64 {
    let mut lo = BigRational::from_float(lo).expect("finite");
    let mut hi = BigRational::from_float(hi).expect("finite");
    let sign = |x: &BigRational| -> i32 {
        let num = x.numer();
        let den = x.denom();
        let d = p.degree();
        let mut acc = BigInt::from(0);
        let mut den_pow = BigInt::one();
        for i in (0..=d).rev() {
            acc = acc * num + p.coeff(i) * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    };
    let s_hi = sign(&hi);
    for _ in 0..steps {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        let s = sign(&mid);
        if s == 0 {
            return mid.to_f64().unwrap();
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ((&lo + &hi) / BigRational::from(BigInt::from(2)))
        .to_f64()
        .unwrap()
}
