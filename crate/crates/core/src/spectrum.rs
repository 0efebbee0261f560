//! Adjacency spectra by cyclic Jacobi rotations, and the spectral p-Schatten energy.

// Rotations touch rows and columns of the same matrix; index loops read closest to the math.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-12;
const SWEEP_CAP: usize = 100;

/// Eigenvalues sorted descending, with the off-diagonal Frobenius norm reached by the solver.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    /// Σ |λ|^p with |λ| < 10·tol counted as exactly zero.
    pub fn schatten_energy(&self, p: f64) -> Result<f64> {
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "energy exponent must be positive, got {p}"
            )));
        }
        let cutoff = 10.0 * self.tol;
        Ok(self
            .eigenvalues
            .iter()
            .map(|l| l.abs())
            .filter(|&a| a >= cutoff)
            .map(|a| a.powf(p))
            .sum())
    }
}

/// Eigenvalues of a real symmetric matrix, row-major, by cyclic Jacobi sweeps until the
/// off-diagonal Frobenius norm drops to `tol`.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "eigenvalue tolerance must be positive, got {tol}"
        )));
    }
    let n = a.len();
    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[i][j] * a[i][j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= tol {
            break;
        }
        if sweeps == SWEEP_CAP {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        // Early sweeps skip small elements; later ones rotate everything that is left.
        let threshold = if sweeps < 4 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                let small = 100.0 * apq.abs();
                if sweeps > 4
                    && a[p][p].abs() + small == a[p][p].abs()
                    && a[q][q].abs() + small == a[q][q].abs()
                {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, p, q);
            }
        }
    }
    let achieved = off_norm(&a);
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        tol: achieved.max(tol),
    })
}

// One rotation in the (p, q) plane annihilating a[p][q].
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let n = a.len();
    let apq = a[p][q];
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p];
        let arq = a[r][q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r][p] = new_rp;
        a[p][r] = new_rp;
        a[r][q] = new_rq;
        a[q][r] = new_rq;
    }
}

/// Adjacency eigenvalues of `g`, sorted descending.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    symmetric_eigenvalues(g.adjacency_matrix(), tol)
}

/// E_p(G) = Σ |λ_i|^p, computed from the spectrum at the default tolerance.
pub fn energy_spectral(g: &Graph, p: f64) -> Result<f64> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "energy exponent must be positive, got {p}"
        )));
    }
    eigenvalues(g, DEFAULT_TOL)?.schatten_energy(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph};

    fn close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn closed_form_spectra() {
        let s = eigenvalues(&path_graph(2).unwrap(), DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[1.0, -1.0], 1e-14);
        let r3 = 3f64.sqrt();
        let s = eigenvalues(&star_graph(4).unwrap(), DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[r3, 0.0, 0.0, -r3], 1e-12);
        let s = eigenvalues(&path_graph(5).unwrap(), DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[r3, 1.0, 0.0, -1.0, -r3], 1e-12);
        assert!(eigenvalues(&Graph::empty(0), DEFAULT_TOL)
            .unwrap()
            .eigenvalues
            .is_empty());
    }

    #[test]
    fn energy_examples() {
        let k2 = path_graph(2).unwrap();
        for p in [0.3, 1.0, 2.5] {
            assert!((energy_spectral(&k2, p).unwrap() - 2.0).abs() < 1e-12);
        }
        let e = energy_spectral(&star_graph(4).unwrap(), 1.0).unwrap();
        assert!((e - 3.464101615137754).abs() < 1e-9);
        let e = energy_spectral(&path_graph(4).unwrap(), 1.0).unwrap();
        assert!((e - 4.47213595499958).abs() < 1e-9);
        assert!(energy_spectral(&k2, 0.0).is_err());
        assert!(energy_spectral(&k2, -1.0).is_err());
    }

    #[test]
    fn nullity_does_not_leak_into_small_p() {
        // S_12 has ten zero eigenvalues; at p = 0.05 any noise^p would show up.
        let e = energy_spectral(&star_graph(12).unwrap(), 0.05).unwrap();
        assert!((e - 2.0 * 11f64.powf(0.025)).abs() < 1e-10);
    }

    #[test]
    fn isolated_vertex_leaves_energy_unchanged() {
        let g = path_graph(5).unwrap();
        for p in [0.5, 1.0, 1.5] {
            let a = energy_spectral(&g, p).unwrap();
            let b = energy_spectral(&g.with_isolated(1), p).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn bad_tolerance() {
        assert!(eigenvalues(&path_graph(3).unwrap(), 0.0).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..=25).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..80).prop_map(move |pairs| {
                    let pairs: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                    Graph::from_edge_list(n, &pairs).unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn trace_identities(g in arb_graph()) {
                let s = eigenvalues(&g, DEFAULT_TOL).unwrap();
                let n = g.n() as f64;
                prop_assert_eq!(s.eigenvalues.len(), g.n());
                let sum: f64 = s.eigenvalues.iter().sum();
                let sq: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
                prop_assert!(sum.abs() <= 1e-9 * n.max(1.0));
                prop_assert!((sq - 2.0 * g.m() as f64).abs() <= 1e-9 * n.max(1.0));
                prop_assert!((energy_spectral(&g, 2.0).unwrap() - 2.0 * g.m() as f64).abs() <= 1e-9);
                for w in s.eigenvalues.windows(2) {
                    prop_assert!(w[0] >= w[1]);
                }
            }

            #[test]
            fn energy_is_continuous_in_p(g in arb_graph(), p in 0.1f64..3.0) {
                // |d/dp Σ|λ|^p| = |Σ |λ|^p ln|λ|| ≤ Σ max(|λ|^p, |λ|^{p+δ}) |ln|λ||.
                let s = eigenvalues(&g, DEFAULT_TOL).unwrap();
                let step = 1e-3;
                let bound: f64 = s.eigenvalues.iter().map(|l| l.abs()).filter(|&a| a > 1e-11)
                    .map(|a| a.powf(p).max(a.powf(p + step)) * a.ln().abs()).sum();
                let jump = (s.schatten_energy(p + step).unwrap() - s.schatten_energy(p).unwrap()).abs();
                prop_assert!(jump <= 10.0 * step * bound + 1e-12);
            }
        }
    }
}
