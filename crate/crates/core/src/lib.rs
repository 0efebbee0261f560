//! p-Schatten energy of bipartite graphs.
//!
//! The energy E_p(G) = Σ |λ_i|^p of the adjacency spectrum is computed three ways: directly
//! from the eigenvalues, by a Coulson-type integral of the log-derivative of the
//! characteristic polynomial along the imaginary axis, and, for differences between two
//! graphs, by a Coulson–Jacobs integral of the log-ratio of their characteristic polynomials.
//! The exact b-coefficients of those polynomials drive the quasi-order used to compare trees.

// `!(x > 0.0)` is used on purpose: it rejects NaN along with nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod charpoly;
pub mod cli;
pub mod energy;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod quadrature;
pub mod spectrum;
pub mod trees;
pub mod verify;

pub use charpoly::{
    b_coefficients, char_poly, matching_count, quasi_compare, BCoeffs, CharPoly, QuasiOrder,
};
pub use energy::{
    energy_coulson, energy_difference_cj, f_alpha, integrate_coulson, pad_to_even,
    psi_logderiv_term, EnergyOptions, EnergyReport, PsiPoly,
};
pub use error::{Error, Result};
pub use graph::{is_bipartite, path_graph, star_graph, Bipartition, Graph};
pub use graph6::{parse_graph6, write_graph6};
pub use quadrature::QuadratureDiagnostics;
pub use spectrum::{eigenvalues, energy_spectral, Spectrum};
pub use trees::{enumerate_trees, sample_trees, tree_from_pruefer, CanonicalTree};
pub use verify::{check_csikvari_direction, verify_tree_bounds};
