//! Evaluators for the inequality chain tying Mahler measures to volumes and
//! systoles of hyperbolic orbifolds, plus the polynomial-regime comparison
//! table for higher dimensions.
//!
//! The constants C1, C2, C3, the aggregate exponent C and C_n are
//! configuration, not derived values; the defaults below are transparent
//! placeholders (C1 = 0.25 is a published effective Dobrowolski-type
//! constant valid for all d >= 2, the rest default to 1 or 0).

use crate::error::{Error, Result};
use serde::Serialize;

/// Configuration bundle for every bound in this module.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundConstants {
    /// Dobrowolski constant C1 > 0.
    pub c1: f64,
    /// Volume inequality slope C2 > 0.
    pub c2: f64,
    /// Volume inequality offset C3.
    pub c3: f64,
    /// Aggregate exponent C > 0 in Vol^C.
    pub c_agg: f64,
    /// Dimension-dependent constant C_n > 0.
    pub c_n: f64,
    /// Manifold dimension n >= 3.
    pub dim_n: u32,
}

impl BoundConstants {
    pub fn new(c1: f64, c2: f64, c3: f64, c_agg: f64, c_n: f64, dim_n: u32) -> Result<Self> {
        if [c1, c2, c_agg, c_n].iter().any(|c| c.is_nan() || *c <= 0.0) {
            return Err(Error::Domain(
                "constants c1, c2, c_agg, c_n must be positive".into(),
            ));
        }
        if !c3.is_finite() {
            return Err(Error::Domain("c3 must be finite".into()));
        }
        if dim_n < 3 {
            return Err(Error::Domain("dimension n must be at least 3".into()));
        }
        Ok(BoundConstants {
            c1,
            c2,
            c3,
            c_agg,
            c_n,
            dim_n,
        })
    }
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants {
            c1: 0.25,
            c2: 1.0,
            c3: 0.0,
            c_agg: 1.0,
            c_n: 1.0,
            dim_n: 3,
        }
    }
}

/// The triple-log kernel c1 * (log log x / log x)^3, shared by the degree
/// form and the volume form of the bound.
pub fn dobrowolski_formula(x: f64, c1: f64) -> f64 {
    let l = x.ln();
    c1 * (l.ln() / l).powi(3)
}

/// Lower bound on log M(P) for a non-cyclotomic polynomial of degree d.
/// May be non-positive (vacuous) for small d; returned as-is.
pub fn dobrowolski_lower_bound(d: u32, k: &BoundConstants) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain(
            "Dobrowolski bound needs degree d >= 2".into(),
        ));
    }
    Ok(dobrowolski_formula(d as f64, k.c1))
}

/// deg(k) >= d/2: the field of definition has at least half the degree of
/// the u-polynomial.
pub fn field_degree_lower_bound(d: u64) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    Ok(d as f64 / 2.0)
}

/// deg(k) <= c2 log Vol + c3.
pub fn degree_volume_upper_bound(vol: f64, k: &BoundConstants) -> Result<f64> {
    if vol.is_nan() || vol <= 0.0 {
        return Err(Error::Domain("volume must be positive".into()));
    }
    Ok(k.c2 * vol.ln() + k.c3)
}

fn systole_volume_kernel(l: f64, k: &BoundConstants) -> Result<f64> {
    if l < std::f64::consts::E - 1e-9 {
        let min_vol = (std::f64::consts::E / k.c_agg).exp();
        return Err(Error::Domain(format!(
            "volume below the validity threshold: need c_agg * log(vol) >= e, i.e. vol >= {min_vol:.6e}"
        )));
    }
    let l1 = l.ln();
    // At the validity boundary log log L is 0 up to float fuzz; clamp the
    // fuzz so the boundary value is exactly 0.
    let l2 = l1.ln().max(0.0);
    Ok(k.c1 * (l2 / l1).powi(3))
}

/// Systole lower bound in the pure-power form: with L = c_agg * log(vol),
/// returns c1 * (log log L / log L)^3. Valid for L >= e.
pub fn systole_volume_lower_bound(vol: f64, k: &BoundConstants) -> Result<f64> {
    if vol.is_nan() || vol <= 0.0 {
        return Err(Error::Domain("volume must be positive".into()));
    }
    systole_volume_kernel(k.c_agg * vol.ln(), k)
}

/// Systole lower bound in the affine form used when c3 != 0:
/// L = c2 * log(vol) + c3 instead of the pure power.
pub fn systole_volume_lower_bound_affine(vol: f64, k: &BoundConstants) -> Result<f64> {
    if vol.is_nan() || vol <= 0.0 {
        return Err(Error::Domain("volume must be positive".into()));
    }
    systole_volume_kernel(k.c2 * vol.ln() + k.c3, k)
}

/// Which systole-volume form a set of constants selects.
pub fn systole_bound_form(k: &BoundConstants) -> &'static str {
    if k.c3 == 0.0 {
        "power"
    } else {
        "affine"
    }
}

/// Vol >= C_n / systole^(n-2) for the non-arithmetic constructions.
pub fn theorem1b_volume_lower_bound(systole: f64, k: &BoundConstants) -> Result<f64> {
    if systole.is_nan() || systole <= 0.0 {
        return Err(Error::Domain("systole must be positive".into()));
    }
    if k.dim_n < 3 {
        return Err(Error::Domain("dimension n must be at least 3".into()));
    }
    Ok(k.c_n / systole.powi(k.dim_n as i32 - 2))
}

/// One row of the growth comparison: at a given volume, the arithmetic
/// triple-log systole floor versus the largest systole the polynomial
/// regime permits (inverting the volume bound).
#[derive(Clone, Copy, Debug)]
pub struct GrowthRow {
    pub volume: f64,
    pub arith_syst_lb: f64,
    pub nonarith_syst_ub: f64,
}

/// Logarithmically spaced comparison table over [vol_min, vol_max]. Uses
/// the power form when c3 = 0 and the affine form otherwise.
pub fn growth_table(
    vol_min: f64,
    vol_max: f64,
    steps: usize,
    k: &BoundConstants,
) -> Result<Vec<GrowthRow>> {
    if steps < 2 {
        return Err(Error::Domain("growth table needs at least 2 steps".into()));
    }
    if vol_min.is_nan() || vol_max.is_nan() || vol_min <= 0.0 || vol_min >= vol_max {
        return Err(Error::Domain(
            "growth table needs 0 < vol_min < vol_max".into(),
        ));
    }
    let affine = k.c3 != 0.0;
    let ln_min = vol_min.ln();
    let ln_max = vol_max.ln();
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let t = i as f64 / (steps - 1) as f64;
        let volume = (ln_min + t * (ln_max - ln_min)).exp();
        let arith = if affine {
            systole_volume_lower_bound_affine(volume, k)?
        } else {
            systole_volume_lower_bound(volume, k)?
        };
        let nonarith = (k.c_n / volume).powf(1.0 / (k.dim_n as f64 - 2.0));
        rows.push(GrowthRow {
            volume,
            arith_syst_lb: arith,
            nonarith_syst_ub: nonarith,
        });
    }
    Ok(rows)
}

/// CSV serialization at full precision (17 significant digits).
pub fn growth_table_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("volume,arith_syst_lb,nonarith_syst_ub\n");
    for r in rows {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e}\n",
            r.volume, r.arith_syst_lb, r.nonarith_syst_ub
        ));
    }
    out
}
