//! Verification of the constancy characterization across the catalog.
//!
//! The claim under test: for `j >= 2`, the coefficient `a_j` of the epsilon
//! expansion is constant iff the Cartan–Hartogs domain is the complex
//! hyperbolic space, i.e. `r = 1` and `mu = 1`. A grid of `mu` values cannot
//! certify an "iff" over all `mu > 0`, so the sweep pairs two routes:
//!
//! - per grid point, the exact expansion is computed and its constancy
//!   profile compared against `r = 1 && mu = 1` ([`Verdict`]);
//! - per `(domain, d0, j)`, the constancy locus polynomials in `mu` are
//!   reduced to a single GCD whose positive roots are certified by Sturm
//!   counts ([`LocusCertificate`]) — `{1}` expected for rank one, empty
//!   otherwise.
//!
//! Failures are never dropped: each verdict and certificate carries the spec
//! it describes, and [`SweepReport::all_consistent`] gates the exit code.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{
    elementary_symmetric, isolate_positive_roots, rat, rat_int, PositiveRoots, Rational, UniPoly,
    Var,
};
use crate::domains::{CartanDomain, HartogsSpec};
use crate::epsilon::{chi_differences, constancy_locus, extract_coefficients, EpsilonExpansion};
use crate::error::{Error, Result};

/// Outcome for a single `(domain, mu, d0)` spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub spec: HartogsSpec,
    /// Indices `j` with `a_j` constant; always contains 0.
    pub constant_js: BTreeSet<u32>,
    /// When some `a_j` with `j >= 2` is constant: `D^{d-1} chi(d) =
    /// D^{d-2} chi(d) = 0` for `d >= 2`, or `D^0 chi(1) = 0` and `mu = 1`
    /// for `d = 1`. Vacuously true otherwise.
    pub bridge_holds: bool,
    /// `[some a_j constant, j >= 2] <=> [r = 1 and mu = 1]`.
    pub theorem_consistent: bool,
}

/// Exact certification of the constancy locus of `a_j` over all `mu > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusCertificate {
    pub domain: CartanDomain,
    pub d0: u32,
    pub j: u32,
    /// The locus polynomials `mu -> D^k chi(d)`, `k in [max(0, d-j), d-1]`.
    pub polys: Vec<UniPoly>,
    /// Monic GCD of the locus polynomials; its positive roots are exactly
    /// the `mu` at which `a_j` is constant.
    pub gcd: UniPoly,
    pub roots: PositiveRoots,
    /// Roots are `{1}` for `r = 1` and empty for `r >= 2`.
    pub consistent: bool,
}

/// The set `{j : a_j constant}`, computed from the exact expansion.
pub fn constancy_profile(spec: &HartogsSpec) -> Result<BTreeSet<u32>> {
    Ok(profile_of(&extract_coefficients(spec)?))
}

fn profile_of(expansion: &EpsilonExpansion) -> BTreeSet<u32> {
    expansion
        .constant_flags()
        .iter()
        .enumerate()
        .filter(|(_, &flag)| flag)
        .map(|(j, _)| j as u32)
        .collect()
}

/// Verifies that every coefficient of `prod_{j=q}^{n} (alpha - j)` for
/// `q in {2, 3}` is nonzero with absolute value `e_p(q..n)`.
pub fn check_a_nonvanishing(n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("need n >= 2, got {n}")));
    }
    for q in [2u32, 3] {
        let values: Vec<Rational> = (q..=n).map(|j| rat_int(j as i64)).collect();
        let product = UniPoly::from_roots(Var::Alpha, &values);
        let degree = values.len();
        for p in 0..=degree {
            let coeff = product.coeff(degree - p);
            let symmetric = elementary_symmetric(p, &values)?;
            if coeff.is_zero() || coeff.abs() != symmetric {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the bridge property for one spec; see [`Verdict::bridge_holds`].
pub fn verify_bridge(spec: &HartogsSpec) -> Result<bool> {
    let expansion = extract_coefficients(spec)?;
    bridge_of(&expansion)
}

fn bridge_of(expansion: &EpsilonExpansion) -> Result<bool> {
    let spec = expansion.spec();
    if !expansion.has_constant_tail_coefficient() {
        return Ok(true);
    }
    let data = chi_differences(spec.domain(), spec.mu())?;
    let d = spec.domain().d() as usize;
    if d >= 2 {
        Ok(data.differences[d - 1].is_zero() && data.differences[d - 2].is_zero())
    } else {
        Ok(data.differences[0].is_zero() && spec.mu() == &Rational::one())
    }
}

/// Builds the full verdict for one spec.
pub fn verdict_for(spec: &HartogsSpec) -> Result<Verdict> {
    verdict_from_expansion(&extract_coefficients(spec)?)
}

/// Builds the verdict from an already computed expansion.
pub fn verdict_from_expansion(expansion: &EpsilonExpansion) -> Result<Verdict> {
    let spec = expansion.spec().clone();
    let constant_js = profile_of(expansion);
    let bridge_holds = bridge_of(expansion)?;
    let has_constant = expansion.has_constant_tail_coefficient();
    let is_hyperbolic = spec.domain().r() == 1 && spec.mu() == &Rational::one();
    Ok(Verdict {
        spec,
        constant_js,
        bridge_holds,
        theorem_consistent: has_constant == is_hyperbolic,
    })
}

/// Certifies the constancy locus of `a_j` for `(domain, d0)`: computes the
/// locus polynomials, their GCD, and the exact positive root set.
pub fn certify_locus(domain: &CartanDomain, d0: u32, j: u32) -> Result<LocusCertificate> {
    let polys = constancy_locus(domain, d0, j)?;
    let mut gcd = UniPoly::zero(Var::Mu);
    for poly in &polys {
        gcd = gcd.gcd(poly)?;
    }
    let roots = isolate_positive_roots(&gcd);
    let consistent = if domain.r() == 1 {
        roots.is_exactly(&[Rational::one()])
    } else {
        roots.is_empty()
    };
    Ok(LocusCertificate { domain: domain.clone(), d0, j, polys, gcd, roots, consistent })
}

/// Sweep configuration; `default_mu_grid` is `{q/10 : q = 1..=30}`.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub d0_values: Vec<u32>,
    pub mu_grid: Vec<Rational>,
    /// Also run the exact locus certification per `(domain, d0, j)`.
    pub certify_locus: bool,
    /// Test-only: flips every consistency verdict so the failure path is
    /// exercised end to end.
    pub inject_fault: bool,
}

pub fn default_mu_grid() -> Vec<Rational> {
    (1..=30).map(|q| rat(q, 10)).collect()
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            d0_values: vec![1, 2, 3],
            mu_grid: default_mu_grid(),
            certify_locus: true,
            inject_fault: false,
        }
    }
}

/// Everything a sweep produced, in deterministic order: one verdict per
/// `(domain, d0, mu)` and, when enabled, one certificate per
/// `(domain, d0, j >= 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub verdicts: Vec<Verdict>,
    pub certificates: Vec<LocusCertificate>,
}

impl SweepReport {
    pub fn failing_verdicts(&self) -> Vec<&Verdict> {
        self.verdicts
            .iter()
            .filter(|v| !v.theorem_consistent || !v.bridge_holds)
            .collect()
    }

    pub fn failing_certificates(&self) -> Vec<&LocusCertificate> {
        self.certificates.iter().filter(|c| !c.consistent).collect()
    }

    pub fn all_consistent(&self) -> bool {
        self.failing_verdicts().is_empty() && self.failing_certificates().is_empty()
    }
}

/// Runs the sweep over `catalog x d0_values x mu_grid`. Items are evaluated
/// in parallel (`RAYON_NUM_THREADS` caps the workers) and gathered in the
/// fixed `(domain, d0, mu)` order, so the report is schedule-independent.
pub fn verify_theorem_sweep(catalog: &[CartanDomain], config: &SweepConfig) -> Result<SweepReport> {
    if config.mu_grid.is_empty() {
        return Err(Error::InvalidInput("empty grid".into()));
    }
    if config.d0_values.is_empty() {
        return Err(Error::InvalidInput("empty d0 list".into()));
    }
    if let Some(bad) = config.mu_grid.iter().find(|mu| !mu.is_positive()) {
        return Err(Error::InvalidInput(format!("grid value {bad} is not positive")));
    }

    let mut specs = Vec::new();
    for domain in catalog {
        for &d0 in &config.d0_values {
            for mu in &config.mu_grid {
                specs.push(HartogsSpec::new(domain.clone(), mu.clone(), d0)?);
            }
        }
    }
    let mut verdicts = specs
        .par_iter()
        .map(verdict_for)
        .collect::<Result<Vec<_>>>()?;
    if config.inject_fault {
        for verdict in &mut verdicts {
            verdict.theorem_consistent = !verdict.theorem_consistent;
        }
    }
    verdicts.sort_by(|x, y| {
        (x.spec.domain().sort_key(), x.spec.d0(), x.spec.mu())
            .cmp(&(y.spec.domain().sort_key(), y.spec.d0(), y.spec.mu()))
    });

    let mut certificates = Vec::new();
    if config.certify_locus {
        let mut targets = Vec::new();
        for domain in catalog {
            for &d0 in &config.d0_values {
                for j in 2..=domain.d() + d0 {
                    targets.push((domain, d0, j));
                }
            }
        }
        certificates = targets
            .par_iter()
            .map(|(domain, d0, j)| certify_locus(domain, *d0, *j))
            .collect::<Result<Vec<_>>>()?;
        certificates.sort_by_key(|c| (c.domain.sort_key(), c.d0, c.j));
    }

    Ok(SweepReport { verdicts, certificates })
}
