//! Exact classification of monic integer polynomials.
//!
//! Salem certification is fully exact: after cyclotomic stripping, the
//! residual must be palindromic of even degree 2s >= 4 and its trace
//! polynomial must have, by Sturm counting, exactly one real root above 2
//! and s-1 in (-2, 2). Pisot certification is numeric with a certified
//! margin. Irreducibility is never verified; classification operates on the
//! cyclotomic-stripped residual, which is sufficient because the measure is
//! multiplicative and cyclotomic factors contribute 1.

use crate::cyclotomic::strip_cyclotomic_factors;
use crate::error::{Error, Result};
use crate::measure::mahler_measure;
use crate::poly::IntPolynomial;
use crate::sturm::{sturm_count, sturm_count_bounded, RealBound};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolyKind {
    CyclotomicProduct,
    Salem,
    Pisot,
    Other,
}

/// Classification verdict with its supporting evidence.
#[derive(Clone, Debug, Serialize)]
pub struct PolynomialClass {
    pub kind: PolyKind,
    /// The Salem or Pisot number when applicable.
    pub dominant_root: Option<f64>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Cyclotomic { removed_degree: usize },
    Salem(SalemCertificate),
    Pisot(PisotCertificate),
    Other { note: String },
}

/// Evidence from the exact Salem test. Root counts refer to the trace
/// polynomial of the cyclotomic-free residual.
#[derive(Clone, Debug, Serialize)]
pub struct SalemCertificate {
    pub removed_cyclotomic_degree: usize,
    pub residual_degree: usize,
    pub self_reciprocal: bool,
    pub half_degree: usize,
    #[serde(serialize_with = "crate::classify::wire_opt")]
    pub trace_polynomial: Option<IntPolynomial>,
    pub roots_above_two: usize,
    pub roots_in_band: usize,
    pub roots_at_or_below_minus_two: usize,
    pub boundary_root: bool,
    /// The classical definition asks for a minimal polynomial; this toolkit
    /// certifies the stripped residual without a full factorization.
    pub irreducibility_checked: bool,
    pub reason: Option<String>,
}

pub(crate) fn wire_opt<S: serde::Serializer>(
    v: &Option<IntPolynomial>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(p) => s.serialize_some(&p.to_wire()),
        None => s.serialize_none(),
    }
}

/// Evidence from the numeric Pisot test.
#[derive(Clone, Debug, Serialize)]
pub struct PisotCertificate {
    pub removed_cyclotomic_degree: usize,
    pub residual_degree: usize,
    pub dominant_root: Option<f64>,
    /// Certified gap between 1 and the largest non-dominant modulus
    /// (already reduced by the root error radii).
    pub margin: Option<f64>,
    /// Some non-dominant modulus sat within tolerance of 1, so no verdict.
    pub uncertain: bool,
    pub irreducibility_checked: bool,
    pub reason: Option<String>,
}

/// Exact Salem certification of the cyclotomic-stripped residual.
pub fn is_salem(p: &IntPolynomial) -> Result<(bool, SalemCertificate)> {
    if p.is_zero() || !p.is_monic() || p.degree() < 1 {
        return Err(Error::Domain(
            "Salem test requires a monic polynomial of degree >= 1".into(),
        ));
    }
    let (residual, removed) = strip_cyclotomic_factors(p)?;
    let mut cert = SalemCertificate {
        removed_cyclotomic_degree: removed,
        residual_degree: residual.degree(),
        self_reciprocal: false,
        half_degree: 0,
        trace_polynomial: None,
        roots_above_two: 0,
        roots_in_band: 0,
        roots_at_or_below_minus_two: 0,
        boundary_root: false,
        irreducibility_checked: false,
        reason: None,
    };
    if residual.degree() < 4 {
        cert.reason = Some(format!(
            "cyclotomic-free residual has degree {} < 4",
            residual.degree()
        ));
        return Ok((false, cert));
    }
    // A cyclotomic-free residual cannot have roots at +/-1, so the only
    // self-reciprocal possibility is the palindromic one of even degree.
    if !residual.is_palindromic() {
        cert.reason = Some("residual is not self-reciprocal".into());
        return Ok((false, cert));
    }
    cert.self_reciprocal = true;
    if residual.degree() % 2 != 0 {
        cert.reason = Some("residual has odd degree".into());
        return Ok((false, cert));
    }
    let trace = residual.to_trace_polynomial()?;
    let s = trace.half_degree();
    let q = trace.q().clone();
    cert.half_degree = s;

    let two = BigRational::from(BigInt::from(2));
    let boundary = sign_is_zero(&q, 2) || sign_is_zero(&q, -2);
    cert.boundary_root = boundary;
    cert.trace_polynomial = Some(q.clone());
    if boundary {
        cert.reason = Some("trace polynomial has a root at +/-2".into());
        return Ok((false, cert));
    }
    let above = sturm_count_bounded(&q, &RealBound::Finite(two.clone()), &RealBound::PosInf)?;
    let band = sturm_count(&q, &(-two.clone()), &two)?;
    let below = sturm_count_bounded(&q, &RealBound::NegInf, &RealBound::Finite(-two))?;
    cert.roots_above_two = above;
    cert.roots_in_band = band;
    cert.roots_at_or_below_minus_two = below;

    let ok = above == 1 && band == s - 1 && below == 0;
    if !ok {
        cert.reason = Some(format!(
            "trace root counts (above 2: {above}, in (-2,2): {band}, below -2: {below}) do not match the Salem pattern (1, {}, 0)",
            s - 1
        ));
    }
    Ok((ok, cert))
}

fn sign_is_zero(q: &IntPolynomial, at: i64) -> bool {
    q.eval(&BigInt::from(at)).is_zero()
}

/// Numeric Pisot certification with a certified margin. Cyclotomic factors
/// are stripped first and reported in the certificate.
pub fn is_pisot(p: &IntPolynomial, tol: f64) -> Result<(bool, PisotCertificate)> {
    if p.is_zero() || !p.is_monic() || p.degree() < 1 {
        return Err(Error::Domain(
            "Pisot test requires a monic polynomial of degree >= 1".into(),
        ));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let (residual, removed) = strip_cyclotomic_factors(p)?;
    let mut cert = PisotCertificate {
        removed_cyclotomic_degree: removed,
        residual_degree: residual.degree(),
        dominant_root: None,
        margin: None,
        uncertain: false,
        irreducibility_checked: false,
        reason: None,
    };
    if residual.degree() == 0 {
        cert.reason = Some("input is a cyclotomic product".into());
        return Ok((false, cert));
    }
    let roots = crate::roots::complex_roots(&residual, (tol * 1e-2).min(1e-10))?;
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by(|&a, &b| {
        roots[b]
            .value
            .norm()
            .partial_cmp(&roots[a].value.norm())
            .unwrap_or(Ordering::Equal)
    });
    let dom = &roots[idx[0]];
    let dom_mod = dom.value.norm();

    if dom_mod - dom.radius <= 1.0 {
        cert.uncertain = (dom_mod - 1.0).abs() <= tol;
        cert.reason = Some("largest root modulus is not certifiably above 1".into());
        return Ok((false, cert));
    }
    if dom.value.im.abs() > dom.radius || dom.value.re <= 1.0 {
        cert.reason = Some("dominant root is not a real number greater than 1".into());
        return Ok((false, cert));
    }
    cert.dominant_root = Some(dom.value.re);

    let mut margin = f64::INFINITY;
    for &i in &idx[1..] {
        let m = roots[i].value.norm();
        if (m - 1.0).abs() <= tol {
            cert.uncertain = true;
            cert.reason = Some("a non-dominant root modulus lies within tolerance of 1".into());
            return Ok((false, cert));
        }
        let gap = 1.0 - m - roots[i].radius;
        if gap <= 0.0 {
            cert.reason = Some(format!(
                "non-dominant root modulus {m:.12} is not certifiably inside the unit circle"
            ));
            return Ok((false, cert));
        }
        margin = margin.min(gap);
    }
    if idx.len() == 1 {
        margin = 1.0;
    }
    cert.margin = Some(margin);
    Ok((true, cert))
}

/// Decision tree over the classes: cyclotomic product, else Salem, else
/// Pisot, else other. Deterministic; exactly one class per input.
pub fn classify(p: &IntPolynomial) -> Result<PolynomialClass> {
    if p.is_zero() || !p.is_monic() || p.degree() < 1 {
        return Err(Error::Domain(
            "classification requires a monic polynomial of degree >= 1".into(),
        ));
    }
    if crate::cyclotomic::is_cyclotomic_product(p)? {
        return Ok(PolynomialClass {
            kind: PolyKind::CyclotomicProduct,
            dominant_root: None,
            certificate: Certificate::Cyclotomic {
                removed_degree: p.degree(),
            },
        });
    }
    let (salem, salem_cert) = is_salem(p)?;
    if salem {
        let dominant = dominant_from_measure(p)?;
        return Ok(PolynomialClass {
            kind: PolyKind::Salem,
            dominant_root: Some(dominant),
            certificate: Certificate::Salem(salem_cert),
        });
    }
    let (pisot, pisot_cert) = is_pisot(p, 1e-9)?;
    if pisot {
        let dominant = pisot_cert.dominant_root;
        return Ok(PolynomialClass {
            kind: PolyKind::Pisot,
            dominant_root: dominant,
            certificate: Certificate::Pisot(pisot_cert),
        });
    }
    Ok(PolynomialClass {
        kind: PolyKind::Other,
        dominant_root: None,
        certificate: Certificate::Other {
            note: "neither cyclotomic product, Salem, nor Pisot".into(),
        },
    })
}

/// Largest root modulus, which for Salem and Pisot inputs is the measure.
fn dominant_from_measure(p: &IntPolynomial) -> Result<f64> {
    let m = mahler_measure(p, 1e-9)?;
    Ok(m.root_moduli
        .as_ref()
        .and_then(|v| v.last().copied())
        .unwrap_or(m.value))
}
