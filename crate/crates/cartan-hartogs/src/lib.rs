//! Exact computation of the Rawnsley epsilon function on Cartan–Hartogs domains.
//!
//! The epsilon function of a Cartan–Hartogs domain `M^{d0}_Omega(mu)` is a
//! *polynomial* in the quantization parameter `alpha`, so its Engliš expansion
//! `eps = sum_j a_j(x) alpha^{n-j}` terminates at `n = d + d0` and every
//! coefficient `a_j` can be computed exactly over the rationals. This crate
//! does that, and verifies the constancy characterization: some `a_j` with
//! `j >= 2` is constant if and only if the domain is the complex hyperbolic
//! space (`r = 1`, `mu = 1`).
//!
//! Module map:
//! - [`algebra`]: rational scalars, tagged univariate/bivariate polynomials,
//!   finite differences, elementary symmetric polynomials, GCDs and
//!   Sturm-based positive-root isolation;
//! - [`domains`]: the catalog of irreducible bounded symmetric domains and
//!   Cartan–Hartogs parameter bundles;
//! - [`epsilon`]: the chi polynomial, its finite differences, the bivariate
//!   epsilon polynomial, coefficient extraction and constancy loci;
//! - [`verifier`]: per-spec verdicts, the Feng–Tu bridge check, catalog
//!   sweeps and exact locus certification;
//! - [`report`]: deterministic JSON/CSV/table emitters.

pub mod algebra;
pub mod domains;
pub mod epsilon;
mod error;
pub mod report;
pub mod verifier;

pub use error::{Error, Result};
