//! Exhaustive (or sampled) checks of the extremal-tree inequalities.

use serde::Serialize;

use crate::charpoly::{b_coefficients, char_poly, quasi_compare, BCoeffs, QuasiOrder};
use crate::error::{Error, Result};
use crate::graph::{path_graph, star_graph, Graph};
use crate::spectrum::{eigenvalues, Spectrum, DEFAULT_TOL};
use crate::trees::{ahu_code, enumerate_trees, pruefer_encode, CanonicalTree};

/// Tolerance for "the extremal tree attains its own bound".
pub const ATTAINMENT_TOL: f64 = 1e-12;

/// Identifies a tree in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeWitness {
    pub ahu: String,
    pub pruefer: Vec<usize>,
}

impl TreeWitness {
    fn of(t: &CanonicalTree) -> Self {
        TreeWitness {
            ahu: t.code.clone(),
            pruefer: pruefer_encode(&t.graph).unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiOrderViolation {
    pub tree: TreeWitness,
    pub bound: Bound,
    pub verdict: QuasiOrder,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyViolation {
    pub tree: TreeWitness,
    pub p: f64,
    pub bound: Bound,
    pub tree_energy: f64,
    pub bound_energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerP {
    pub p: f64,
    pub violations: usize,
}

/// Outcome of checking E_p(S_n) ≤ E_p(T) ≤ E_p(P_n) and S_n ⪯ T ⪯ P_n over a set of trees.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeBoundsReport {
    pub n: usize,
    pub tree_count: usize,
    pub p_grid: Vec<f64>,
    pub tol: f64,
    pub per_p: Vec<PerP>,
    pub quasi_order_violations: Vec<QuasiOrderViolation>,
    pub energy_violations: Vec<EnergyViolation>,
    /// The star is among the trees and its energy equals the lower bound at every p.
    pub star_attains_lower: bool,
    /// The path is among the trees and its energy equals the upper bound at every p.
    pub path_attains_upper: bool,
}

impl TreeBoundsReport {
    pub fn violation_count(&self) -> usize {
        self.quasi_order_violations.len() + self.energy_violations.len()
    }

    pub fn passed(&self) -> bool {
        self.violation_count() == 0 && self.star_attains_lower && self.path_attains_upper
    }
}

struct Prepared {
    tree: CanonicalTree,
    b: BCoeffs,
    spectrum: Spectrum,
}

fn prepare(t: &CanonicalTree) -> Result<Prepared> {
    Ok(Prepared {
        tree: t.clone(),
        b: b_coefficients(&char_poly(&t.graph))?,
        spectrum: eigenvalues(&t.graph, DEFAULT_TOL)?,
    })
}

fn extremes(n: usize) -> Result<(Graph, Graph)> {
    Ok((star_graph(n)?, path_graph(n)?))
}

/// Runs the check over every free tree on `n ≤ ENUMERATION_CAP` vertices.
pub fn verify_tree_bounds(n: usize, p_grid: &[f64], tol: f64) -> Result<TreeBoundsReport> {
    let trees = enumerate_trees(n)?;
    verify_tree_bounds_over(n, &trees, p_grid, tol)
}

/// Runs the check over the given trees, which must all have `n` vertices.
pub fn verify_tree_bounds_over(
    n: usize,
    trees: &[CanonicalTree],
    p_grid: &[f64],
    tol: f64,
) -> Result<TreeBoundsReport> {
    if let Some(&p) = p_grid.iter().find(|&&p| !(p > 0.0 && p < 2.0)) {
        return Err(Error::InvalidArgument(format!(
            "tree bounds are claimed for 0 < p < 2, got {p}"
        )));
    }
    if trees.iter().any(|t| t.graph.n() != n) {
        return Err(Error::InvalidArgument(format!(
            "all trees must have {n} vertices"
        )));
    }
    let (star, path) = extremes(n)?;
    let (star_code, path_code) = (ahu_code(&star)?, ahu_code(&path)?);
    let star_b = b_coefficients(&char_poly(&star))?;
    let path_b = b_coefficients(&char_poly(&path))?;
    let star_spec = eigenvalues(&star, DEFAULT_TOL)?;
    let path_spec = eigenvalues(&path, DEFAULT_TOL)?;
    let lower: Vec<f64> = p_grid
        .iter()
        .map(|&p| star_spec.schatten_energy(p))
        .collect::<Result<_>>()?;
    let upper: Vec<f64> = p_grid
        .iter()
        .map(|&p| path_spec.schatten_energy(p))
        .collect::<Result<_>>()?;

    let mut quasi_order_violations = Vec::new();
    let mut energy_violations = Vec::new();
    let mut per_p: Vec<PerP> = p_grid.iter().map(|&p| PerP { p, violations: 0 }).collect();
    let mut star_attains_lower = false;
    let mut path_attains_upper = false;

    for t in trees {
        let prep = prepare(t)?;
        let witness = || TreeWitness::of(&prep.tree);
        let low = quasi_compare(&star_b, &prep.b)?;
        if !low.is_le() {
            quasi_order_violations.push(QuasiOrderViolation {
                tree: witness(),
                bound: Bound::Lower,
                verdict: low,
            });
        }
        let high = quasi_compare(&prep.b, &path_b)?;
        if !high.is_le() {
            quasi_order_violations.push(QuasiOrderViolation {
                tree: witness(),
                bound: Bound::Upper,
                verdict: high,
            });
        }
        let energies: Vec<f64> = p_grid
            .iter()
            .map(|&p| prep.spectrum.schatten_energy(p))
            .collect::<Result<_>>()?;
        for (i, &e) in energies.iter().enumerate() {
            if lower[i] > e + tol {
                per_p[i].violations += 1;
                energy_violations.push(EnergyViolation {
                    tree: witness(),
                    p: p_grid[i],
                    bound: Bound::Lower,
                    tree_energy: e,
                    bound_energy: lower[i],
                });
            }
            if e > upper[i] + tol {
                per_p[i].violations += 1;
                energy_violations.push(EnergyViolation {
                    tree: witness(),
                    p: p_grid[i],
                    bound: Bound::Upper,
                    tree_energy: e,
                    bound_energy: upper[i],
                });
            }
        }
        let attains = |bound: &[f64]| {
            energies
                .iter()
                .zip(bound)
                .all(|(e, b)| (e - b).abs() <= ATTAINMENT_TOL)
        };
        if t.code == star_code {
            star_attains_lower = attains(&lower);
        }
        if t.code == path_code {
            path_attains_upper = attains(&upper);
        }
    }

    Ok(TreeBoundsReport {
        n,
        tree_count: trees.len(),
        p_grid: p_grid.to_vec(),
        tol,
        per_p,
        quasi_order_violations,
        energy_violations,
        star_attains_lower,
        path_attains_upper,
    })
}

/// Outcome of checking the reversed chain E_p(S_n) ≥ E_p(T) ≥ E_p(P_n) for even p.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CsikvariReport {
    pub n: usize,
    pub tree_count: usize,
    pub p_grid: Vec<f64>,
    pub tol: f64,
    pub per_p: Vec<PerP>,
    pub violations: Vec<EnergyViolation>,
    /// max |E_2(T) − 2(n − 1)| over all trees, when p = 2 is in the grid.
    pub p2_max_deviation: Option<f64>,
}

impl CsikvariReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.p2_max_deviation.is_none_or(|d| d <= self.tol)
    }
}

/// Is `p` an even integer ≥ 2?
pub fn is_even_exponent(p: f64) -> bool {
    p >= 2.0 && p.fract() == 0.0 && (p / 2.0).fract() == 0.0
}

pub fn check_csikvari_direction(n: usize, p_even_grid: &[f64], tol: f64) -> Result<CsikvariReport> {
    let trees = enumerate_trees(n)?;
    check_csikvari_direction_over(n, &trees, p_even_grid, tol)
}

pub fn check_csikvari_direction_over(
    n: usize,
    trees: &[CanonicalTree],
    p_even_grid: &[f64],
    tol: f64,
) -> Result<CsikvariReport> {
    if let Some(&p) = p_even_grid.iter().find(|&&p| !is_even_exponent(p)) {
        return Err(Error::InvalidArgument(format!(
            "the reversed chain is stated for even integers p >= 2, got {p}"
        )));
    }
    let (star, path) = extremes(n)?;
    let star_spec = eigenvalues(&star, DEFAULT_TOL)?;
    let path_spec = eigenvalues(&path, DEFAULT_TOL)?;
    let mut per_p: Vec<PerP> = p_even_grid
        .iter()
        .map(|&p| PerP { p, violations: 0 })
        .collect();
    let mut violations = Vec::new();
    let mut p2_max_deviation: Option<f64> = None;
    let edges2 = 2.0 * (n as f64 - 1.0);

    for t in trees {
        let spec = eigenvalues(&t.graph, DEFAULT_TOL)?;
        for (i, &p) in p_even_grid.iter().enumerate() {
            let e = spec.schatten_energy(p)?;
            let hi = star_spec.schatten_energy(p)?;
            let lo = path_spec.schatten_energy(p)?;
            if p == 2.0 {
                let d = (e - edges2).abs();
                p2_max_deviation = Some(p2_max_deviation.map_or(d, |m| m.max(d)));
            }
            // Even p: the star is the maximum and the path the minimum.
            if e > hi + tol {
                per_p[i].violations += 1;
                violations.push(EnergyViolation {
                    tree: TreeWitness::of(t),
                    p,
                    bound: Bound::Upper,
                    tree_energy: e,
                    bound_energy: hi,
                });
            }
            if lo > e + tol {
                per_p[i].violations += 1;
                violations.push(EnergyViolation {
                    tree: TreeWitness::of(t),
                    p,
                    bound: Bound::Lower,
                    tree_energy: e,
                    bound_energy: lo,
                });
            }
        }
    }
    Ok(CsikvariReport {
        n,
        tree_count: trees.len(),
        p_grid: p_even_grid.to_vec(),
        tol,
        per_p,
        violations,
        p2_max_deviation,
    })
}
