//! Adaptive Gauss–Kronrod (7/15) quadrature and the power-weighted half-line integrals
//! ∫₀^∞ z^{p−1} g(z) dz used by the energy formulas.

#![allow(clippy::excessive_precision)] // Kronrod nodes and weights as published.

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_EVALS: usize = 1_000_000;

// 15-point Kronrod abscissae (nonnegative half) with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Work done by an adaptive integration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct QuadratureDiagnostics {
    pub evaluations: usize,
    pub estimated_abs_error: f64,
    pub intervals: usize,
}

impl QuadratureDiagnostics {
    pub fn merge(self, other: Self) -> Self {
        QuadratureDiagnostics {
            evaluations: self.evaluations + other.evaluations,
            estimated_abs_error: self.estimated_abs_error + other.estimated_abs_error,
            intervals: self.intervals + other.intervals,
        }
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// ∫_a^b f by recursive bisection. An interval is accepted once its Kronrod/Gauss
/// difference is at most `tol` times its share of `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_evals: usize,
) -> Result<(f64, QuadratureDiagnostics)> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "quadrature tolerance must be positive, got {tol}"
        )));
    }
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidArgument(format!(
            "quadrature needs a finite interval a < b, got [{a}, {b}]"
        )));
    }
    let width = b - a;
    let mut diag = QuadratureDiagnostics::default();
    let mut total = 0.0;
    let mut stack = vec![(a, b)];
    while let Some((lo, hi)) = stack.pop() {
        let (value, err) = gk15(&f, lo, hi);
        diag.evaluations += 15;
        if !value.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "integrand is not finite on [{lo}, {hi}]"
            )));
        }
        let allowed = tol * (hi - lo) / width;
        let mid = 0.5 * (lo + hi);
        let unsplittable = mid <= lo || mid >= hi || hi - lo <= 1e-15 * width;
        if err <= allowed {
            total += value;
            diag.estimated_abs_error += err;
            diag.intervals += 1;
            continue;
        }
        if unsplittable || diag.evaluations + 30 > max_evals {
            // An interval too narrow to bisect, or an exhausted budget: the remaining
            // intervals are unresolved and this estimate is a lower bound.
            return Err(Error::Quadrature {
                tol,
                estimate: diag.estimated_abs_error + err,
                evaluations: diag.evaluations,
            });
        }
        stack.push((mid, hi));
        stack.push((lo, mid));
    }
    if diag.estimated_abs_error > tol {
        return Err(Error::Quadrature {
            tol,
            estimate: diag.estimated_abs_error,
            evaluations: diag.evaluations,
        });
    }
    Ok((total, diag))
}

/// ∫₀^∞ z^{p−1} g(z) dz for 0 < p < 2, given g near the origin and its scaled tail.
///
/// * `near(z)` is g(z) on [0, 1].
/// * `far(w)` is z²·g(z) at w = 1/z² ∈ (0, 1], which must stay bounded as w → 0.
///
/// On [0, 1], z = t^{1/p} turns z^{p−1}dz into dt/p. On [1, ∞), z = 1/u gives
/// u^{1−p}·far(u²)du, and u = s^{1/(2−p)} turns that into far(u²)ds/(2 − p).
/// Both pieces are then integrated over [0, 1] with bounded integrands.
pub fn integrate_power_weighted<N, F>(
    p: f64,
    near: N,
    far: F,
    tol: f64,
    max_evals: usize,
) -> Result<(f64, QuadratureDiagnostics)>
where
    N: Fn(f64) -> f64,
    F: Fn(f64) -> f64,
{
    if !(p > 0.0 && p < 2.0) {
        return Err(Error::InvalidArgument(format!(
            "power weight needs 0 < p < 2, got {p}"
        )));
    }
    let inner = 1.0 / p;
    let outer = 2.0 / (2.0 - p);
    let (head, d1) = integrate(|t| near(t.powf(inner)), 0.0, 1.0, 0.5 * tol * p, max_evals)?;
    let (tail, d2) = integrate(
        |s| far(s.powf(outer)),
        0.0,
        1.0,
        0.5 * tol * (2.0 - p),
        max_evals.saturating_sub(d1.evaluations),
    )?;
    let diag = QuadratureDiagnostics {
        estimated_abs_error: d1.estimated_abs_error / p + d2.estimated_abs_error / (2.0 - p),
        ..d1.merge(d2)
    };
    Ok((head / p + tail / (2.0 - p), diag))
}
