//! Integral representations of the p-Schatten energy of a bipartite graph.
//!
//! For a bipartite graph on 2h vertices with b-coefficients b_0..b_h, the characteristic
//! polynomial on the imaginary axis is the positive function
//!
//! ```text
//! ψ(z) = φ(G, iz) = Σ_k b_k z^{2h−2k}
//! ```
//!
//! and, for 0 < p < 2,
//!
//! ```text
//! E_p(G)          = (2 sin(pπ/2)/π)  ∫₀^∞ z^{p−1} (2h − zψ'(z)/ψ(z)) dz
//! E_p(G1)−E_p(G2) = (2p sin(pπ/2)/π) ∫₀^∞ z^{p−1} log(ψ1(z)/ψ2(z)) dz
//! ```
//!
//! Everything here is evaluated from exact b-coefficients, each rounded to `f64` once.
//! Both 2h − zψ'/ψ and log ψ are written as ratios or logarithms of polynomials with
//! nonnegative coefficients in y = z² (for z ≤ 1, after dividing out the zero of ψ at the
//! origin) or in w = 1/z² (for z > 1, after dividing out z^{2h}), so no evaluation suffers
//! cancellation or overflow.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::charpoly::{b_coefficients, char_poly, BCoeffs};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Bipartition, Graph};
use crate::quadrature::{integrate_power_weighted, QuadratureDiagnostics, DEFAULT_MAX_EVALS};
use crate::spectrum::energy_spectral;

pub const DEFAULT_TOL: f64 = 1e-8;
/// Default admissible exponent range for the integral formulas.
pub const P_GUARD: (f64, f64) = (0.05, 1.95);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyOptions {
    /// Absolute tolerance on the returned energy (or energy difference).
    pub tol: f64,
    pub max_evals: usize,
    /// Accept p in (0, 2) outside [`P_GUARD`]; the evaluation budget is widened tenfold.
    pub allow_extreme_p: bool,
}

impl Default for EnergyOptions {
    fn default() -> Self {
        EnergyOptions {
            tol: DEFAULT_TOL,
            max_evals: DEFAULT_MAX_EVALS,
            allow_extreme_p: false,
        }
    }
}

impl EnergyOptions {
    pub fn with_tol(tol: f64) -> Self {
        EnergyOptions {
            tol,
            ..Default::default()
        }
    }

    fn check(&self, p: f64) -> Result<usize> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if !(p > 0.0 && p < 2.0) {
            return Err(Error::InvalidArgument(format!(
                "integral formulas need 0 < p < 2, got {p}"
            )));
        }
        let guarded = (P_GUARD.0..=P_GUARD.1).contains(&p);
        match (guarded, self.allow_extreme_p) {
            (true, _) => Ok(self.max_evals),
            (false, true) => Ok(self.max_evals.saturating_mul(10)),
            (false, false) => Err(Error::InvalidArgument(format!(
                "p = {p} lies outside [{}, {}]; pass the extreme-p override to integrate there",
                P_GUARD.0, P_GUARD.1
            ))),
        }
    }
}

/// ψ(z) = φ(G, iz) for a bipartite graph padded to an even order 2h.
#[derive(Debug, Clone)]
pub struct PsiPoly {
    exact: BCoeffs,
    b: Vec<f64>,
    // Largest k with b_k ≠ 0; ψ vanishes to order 2h − 2·top at the origin.
    top: usize,
}

impl PsiPoly {
    pub fn new(b: &BCoeffs) -> Result<Self> {
        let two_n = b.n() + b.n() % 2;
        let exact = b.padded_to(two_n)?;
        let values = exact.to_f64();
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(
                "b-coefficient too large for floating point".into(),
            ));
        }
        let top = values.iter().rposition(|&x| x != 0.0).unwrap_or(0);
        Ok(PsiPoly {
            exact,
            b: values,
            top,
        })
    }

    /// ψ for `g`, which must be bipartite.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        if let Bipartition::OddCycle(cycle) = is_bipartite(g) {
            return Err(Error::NotBipartite { cycle });
        }
        PsiPoly::new(&b_coefficients(&char_poly(g))?)
    }

    /// Even vertex count 2h after padding.
    pub fn two_n(&self) -> usize {
        self.exact.n()
    }

    pub fn b(&self) -> &BCoeffs {
        &self.exact
    }

    /// Order of the zero of ψ at the origin (the nullity of the graph).
    pub fn zero_order(&self) -> usize {
        self.two_n() - 2 * self.top
    }

    /// ψ(z) evaluated directly.
    pub fn eval(&self, z: f64) -> f64 {
        let y = z * z;
        self.b.iter().fold(0.0, |acc, &c| acc * y + c)
    }

    // D(y) = Σ_{k≤top} b_k y^{top−k} and Σ_{k≤top} 2k b_k y^{top−k}, so that
    // ψ(z) = z^{zero_order}·D(z²).
    fn near_sums(&self, y: f64) -> (f64, f64) {
        let (mut den, mut num) = (0.0, 0.0);
        for k in 0..=self.top {
            den = den * y + self.b[k];
            num = num * y + 2.0 * k as f64 * self.b[k];
        }
        (den, num)
    }

    // Q(w) − 1 = Σ_{k≥1} b_k w^k split as w·R(w), and Σ_{k≥1} 2k b_k w^{k−1}, so that
    // ψ(z) = z^{2h}·(1 + w·R(w)) with w = 1/z².
    fn far_sums(&self, w: f64) -> (f64, f64) {
        let (mut r, mut num) = (0.0, 0.0);
        for k in (1..self.b.len()).rev() {
            r = r * w + self.b[k];
            num = num * w + 2.0 * k as f64 * self.b[k];
        }
        (r, num)
    }

    /// 2h − zψ'(z)/ψ(z), which equals Σ_j 2λ_j²/(z² + λ_j²) over the nonnegative half of the
    /// spectrum. At z = 0 it is the number of nonzero eigenvalues.
    pub fn logderiv_term(&self, z: f64) -> Result<f64> {
        if !(z >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "log-derivative term needs z >= 0, got {z}"
            )));
        }
        let value = if z <= 1.0 {
            let (den, num) = self.near_sums(z * z);
            if !(den > 0.0) {
                return Err(Error::PsiVanishes(z));
            }
            num / den
        } else {
            let w = 1.0 / (z * z);
            let (r, num) = self.far_sums(w);
            let den = 1.0 + w * r;
            if !(den > 0.0) {
                return Err(Error::PsiVanishes(z));
            }
            w * num / den
        };
        Ok(value)
    }

    // g(z) on [0, 1].
    fn near_term(&self, z: f64) -> f64 {
        let (den, num) = self.near_sums(z * z);
        num / den
    }

    // z²·g(z) at w = 1/z².
    fn far_term(&self, w: f64) -> f64 {
        let (r, num) = self.far_sums(w);
        num / (1.0 + w * r)
    }

    // log D(z²) with ψ(z) = z^{zero_order}·D(z²), for z ≤ 1.
    fn near_log(&self, z: f64) -> f64 {
        self.near_sums(z * z).0.ln()
    }

    // log(ψ(z)/z^{2h}) at w = 1/z², for z ≥ 1.
    fn far_log(&self, w: f64) -> f64 {
        (w * self.far_sums(w).0).ln_1p()
    }

    /// log ψ(z) for z > 0.
    pub fn ln_psi(&self, z: f64) -> f64 {
        if z <= 1.0 {
            self.zero_order() as f64 * z.ln() + self.near_log(z)
        } else {
            self.two_n() as f64 * z.ln() + self.far_log(1.0 / (z * z))
        }
    }
}

/// Spectral quantities of the padded graph are those of the original: an isolated vertex
/// adds a zero eigenvalue, and raises both 2h and zψ'/ψ by one.
pub fn pad_to_even(g: &Graph) -> Graph {
    if g.n() % 2 == 1 {
        g.with_isolated(1)
    } else {
        g.clone()
    }
}

/// f(α) = ∫₀^∞ t^α/(t² + 1) dt = π / (2 cos(απ/2)) for −1 < α < 1.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    if !(alpha > -1.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "f(α) diverges unless −1 < α < 1, got {alpha}"
        )));
    }
    Ok(PI / (2.0 * (alpha * FRAC_PI_2).cos()))
}

/// f(α) by quadrature of its defining integral.
pub fn f_alpha_numeric(alpha: f64, tol: f64) -> Result<(f64, QuadratureDiagnostics)> {
    if !(alpha > -1.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "f(α) diverges unless −1 < α < 1, got {alpha}"
        )));
    }
    integrate_power_weighted(
        alpha + 1.0,
        |t| 1.0 / (t * t + 1.0),
        |w| 1.0 / (1.0 + w),
        tol,
        DEFAULT_MAX_EVALS,
    )
}

/// 2h − zψ'(z)/ψ(z); see [`PsiPoly::logderiv_term`].
pub fn psi_logderiv_term(psi: &PsiPoly, z: f64) -> Result<f64> {
    psi.logderiv_term(z)
}

fn coulson_prefactor(p: f64) -> f64 {
    2.0 * (p * FRAC_PI_2).sin() / PI
}

/// E_p from ψ by the Coulson integral, to absolute accuracy `tol`.
pub fn integrate_coulson(psi: &PsiPoly, p: f64, tol: f64) -> Result<(f64, QuadratureDiagnostics)> {
    integrate_coulson_with(psi, p, &EnergyOptions::with_tol(tol))
}

pub fn integrate_coulson_with(
    psi: &PsiPoly,
    p: f64,
    opts: &EnergyOptions,
) -> Result<(f64, QuadratureDiagnostics)> {
    let budget = opts.check(p)?;
    let scale = coulson_prefactor(p);
    let (value, mut diag) = integrate_power_weighted(
        p,
        |z| psi.near_term(z),
        |w| psi.far_term(w),
        opts.tol / scale,
        budget,
    )?;
    diag.estimated_abs_error *= scale;
    Ok((scale * value, diag))
}

/// ∫₀^∞ z^{p−1} log(ψ1/ψ2) dz times 2p sin(pπ/2)/π; both ψ on the same 2h.
pub fn integrate_coulson_jacobs(
    psi1: &PsiPoly,
    psi2: &PsiPoly,
    p: f64,
    opts: &EnergyOptions,
) -> Result<(f64, QuadratureDiagnostics)> {
    if psi1.two_n() != psi2.two_n() {
        return Err(Error::OrderMismatch(psi1.two_n(), psi2.two_n()));
    }
    let budget = opts.check(p)?;
    let scale = p * coulson_prefactor(p);
    // Near the origin log(ψ1/ψ2) = Δ·log z + log(D1/D2) with Δ the difference of zero
    // orders; ∫₀¹ z^{p−1} log z dz = −1/p².
    let delta = psi1.zero_order() as f64 - psi2.zero_order() as f64;
    let singular = -delta / (p * p);
    // log(ψ1/ψ2) = log Q1(w) − log Q2(w) ~ (b1_1 − b2_1)·w on the tail.
    let far = |w: f64| {
        if w == 0.0 {
            let b1 = psi1.b.get(1).copied().unwrap_or(0.0);
            let b2 = psi2.b.get(1).copied().unwrap_or(0.0);
            b1 - b2
        } else {
            (psi1.far_log(w) - psi2.far_log(w)) / w
        }
    };
    let (value, mut diag) = integrate_power_weighted(
        p,
        |z| psi1.near_log(z) - psi2.near_log(z),
        far,
        opts.tol / scale,
        budget,
    )?;
    diag.estimated_abs_error *= scale;
    Ok((scale * (value + singular), diag))
}

/// Energy of one graph or difference of two, computed spectrally and (for 0 < p < 2) by
/// an integral formula.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub p: f64,
    pub spectral: f64,
    pub integral: Option<f64>,
    pub discrepancy: Option<f64>,
    pub diagnostics: Option<QuadratureDiagnostics>,
}

impl EnergyReport {
    pub fn spectral_only(p: f64, spectral: f64) -> Self {
        EnergyReport {
            p,
            spectral,
            integral: None,
            discrepancy: None,
            diagnostics: None,
        }
    }

    fn with_integral(p: f64, spectral: f64, integral: f64, diag: QuadratureDiagnostics) -> Self {
        EnergyReport {
            p,
            spectral,
            integral: Some(integral),
            discrepancy: Some((spectral - integral).abs()),
            diagnostics: Some(diag),
        }
    }
}

/// E_p(G) by the Coulson integral, cross-checked against the spectrum.
pub fn energy_coulson(g: &Graph, p: f64, tol: f64) -> Result<EnergyReport> {
    energy_coulson_with(g, p, &EnergyOptions::with_tol(tol))
}

pub fn energy_coulson_with(g: &Graph, p: f64, opts: &EnergyOptions) -> Result<EnergyReport> {
    opts.check(p)?;
    let psi = PsiPoly::from_graph(&pad_to_even(g))?;
    let (integral, diag) = integrate_coulson_with(&psi, p, opts)?;
    let spectral = energy_spectral(g, p)?;
    Ok(EnergyReport::with_integral(p, spectral, integral, diag))
}

/// E_p(G1) − E_p(G2) by the Coulson–Jacobs integral, cross-checked against the spectra.
/// Both graphs are padded to even order, and those orders must agree.
pub fn energy_difference_cj(g1: &Graph, g2: &Graph, p: f64, tol: f64) -> Result<EnergyReport> {
    energy_difference_cj_with(g1, g2, p, &EnergyOptions::with_tol(tol))
}

pub fn energy_difference_cj_with(
    g1: &Graph,
    g2: &Graph,
    p: f64,
    opts: &EnergyOptions,
) -> Result<EnergyReport> {
    opts.check(p)?;
    let (h1, h2) = (pad_to_even(g1), pad_to_even(g2));
    if h1.n() != h2.n() {
        return Err(Error::OrderMismatch(h1.n(), h2.n()));
    }
    let psi1 = PsiPoly::from_graph(&h1)?;
    let psi2 = PsiPoly::from_graph(&h2)?;
    let (integral, diag) = integrate_coulson_jacobs(&psi1, &psi2, p, opts)?;
    let spectral = energy_spectral(g1, p)? - energy_spectral(g2, p)?;
    Ok(EnergyReport::with_integral(p, spectral, integral, diag))
}
