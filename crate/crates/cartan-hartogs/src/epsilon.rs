//! The epsilon polynomial of a Cartan–Hartogs domain and its coefficients.
//!
//! For a base domain with invariants `(r, a, b, d, gamma)` and exponent `mu`,
//! the chi function
//!
//! ```text
//! chi(s) = prod_{k=1}^{r} Gamma(mu s - gamma - (k+1)a/2 + 2 + b + ra)
//!                        / Gamma(mu s - gamma + 1 + (k-1)a/2)
//! ```
//!
//! is a polynomial of degree `d` in `s` with leading coefficient `mu^d`: the
//! argument difference of each Gamma ratio is the integer
//! `m_k = 1 + b + (r-k)a >= 1`, so each ratio is the rising factorial
//! `x_k (x_k + 1) ... (x_k + m_k - 1)` at `x_k = mu s - gamma + 1 + (k-1)a/2`,
//! and `sum_k m_k = d`. Everything downstream is exact rational arithmetic.
//!
//! The epsilon function itself is the finite bivariate polynomial
//!
//! ```text
//! eps(t, alpha) = mu^{-d} sum_{k=0}^{d} D^k chi(d) / k!
//!                 * t^{d-k} * prod_{j=d-k+1}^{d+d0} (alpha - j)
//! ```
//!
//! where `D^k chi(d)` is the k-th alternating finite difference of the
//! samples `chi(d), chi(d-1), ..., chi(0)` and `t` is the fiber coordinate.
//! Collecting powers of `alpha` gives the expansion coefficients
//! `a_j(t) = [alpha^{n-j}] eps` with `n = d + d0`, `a_0 = 1`.

use num::{One, Zero};

use crate::algebra::{
    factorial, finite_difference, rat_int, BiPoly, Rational, UniPoly, Var,
};
use crate::domains::{CartanDomain, HartogsSpec};
use crate::error::{Error, Result};

/// The chi polynomial of `(domain, mu)` together with its samples at
/// `s = d, d-1, ..., 0` and their finite differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiData {
    /// chi as an exact polynomial in `s`, degree `d`, leading coefficient `mu^d`.
    pub chi_poly: UniPoly,
    /// `samples[j] = chi(d - j)` for `j = 0..=d`.
    pub samples: Vec<Rational>,
    /// `differences[k] = D^k chi(d)` for `k = 0..=d`; the top one is `d! mu^d`.
    pub differences: Vec<Rational>,
}

/// The Engliš expansion of one Cartan–Hartogs spec: coefficients
/// `a_0(t) ..= a_n(t)` of `alpha^{n-j}` and their constancy flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonExpansion {
    spec: HartogsSpec,
    coefficients: Vec<UniPoly>,
    constant_flags: Vec<bool>,
}

impl EpsilonExpansion {
    pub fn spec(&self) -> &HartogsSpec {
        &self.spec
    }

    /// `n = d + d0`.
    pub fn n(&self) -> u32 {
        self.spec.n()
    }

    /// `a_j(t)` for `j = 0..=n`, polynomials in `t`.
    pub fn coefficients(&self) -> &[UniPoly] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: u32) -> &UniPoly {
        &self.coefficients[j as usize]
    }

    /// `constant_flags[j]` is true iff `a_j` has `t`-degree at most zero.
    pub fn constant_flags(&self) -> &[bool] {
        &self.constant_flags
    }

    /// True when some `a_j` with `j >= 2` is constant.
    pub fn has_constant_tail_coefficient(&self) -> bool {
        self.constant_flags.iter().skip(2).any(|&flag| flag)
    }

    /// Exact evaluation of `sum_j a_j(t) alpha^{n-j}`.
    pub fn eval(&self, t: &Rational, alpha: &Rational) -> Rational {
        let mut out = Rational::zero();
        for coeff in &self.coefficients {
            out = out * alpha + coeff.eval(t);
        }
        out
    }
}

fn check_mu(mu: &Rational) -> Result<()> {
    if mu.is_zero() {
        return Err(Error::InvalidInput(
            "mu must be nonzero for the chi polynomial to have degree d".into(),
        ));
    }
    Ok(())
}

/// The chi polynomial in `s` for a fixed rational `mu`.
pub fn chi_tilde(domain: &CartanDomain, mu: &Rational) -> Result<UniPoly> {
    check_mu(mu)?;
    chi_poly_generic(domain, Var::S, mu)
}

/// The chi sample `chi(s)` at a fixed integer `s`, as a polynomial in `mu`.
/// Used by the constancy loci, where `mu` is the unknown.
pub fn chi_tilde_in_mu(domain: &CartanDomain, s: i64) -> UniPoly {
    chi_poly_generic(domain, Var::Mu, &rat_int(s)).expect("offsets are nonnegative by construction")
}

/// Shared product over `k = 1..=r` of rising factorials composed with
/// `x_k = slope * var + c_k`, where `c_k = 1 - gamma + (k-1) a/2`. The
/// rising factorial of `x_k` is expanded as the flat product of its linear
/// factors `slope * var + (c_k + i)`, `i = 0..m_k`.
fn chi_poly_generic(domain: &CartanDomain, var: Var, slope: &Rational) -> Result<UniPoly> {
    let a = rat_int(domain.a() as i64);
    let gamma = rat_int(domain.gamma() as i64);
    let mut out = UniPoly::constant(var, Rational::one());
    for (k, m_k) in domain.gamma_ratio_offsets().into_iter().enumerate() {
        let c_k = Rational::one() - &gamma + rat_int(k as i64) * &a / rat_int(2);
        for i in 0..m_k {
            let factor = UniPoly::linear(var, slope.clone(), &c_k + rat_int(i));
            out = out.mul(&factor)?;
        }
    }
    Ok(out)
}

/// The values `chi(d), chi(d-1), ..., chi(0)`, each evaluated as the direct
/// product of linear factors (exactly the factored form of the chi
/// polynomial, which is much cheaper than Horner on the expanded
/// coefficients).
fn chi_samples(domain: &CartanDomain, mu: &Rational) -> Vec<Rational> {
    let d = domain.d() as i64;
    let a = rat_int(domain.a() as i64);
    let gamma = rat_int(domain.gamma() as i64);
    let offsets = domain.gamma_ratio_offsets();
    (0..=d)
        .map(|j| {
            let s = rat_int(d - j);
            let mut out = Rational::one();
            for (k, &m_k) in offsets.iter().enumerate() {
                let x_k = mu * &s + Rational::one() - &gamma + rat_int(k as i64) * &a / rat_int(2);
                for i in 0..m_k {
                    out *= &x_k + rat_int(i);
                }
            }
            out
        })
        .collect()
}

/// Chi samples at `s = d, d-1, ..., 0` and all finite differences
/// `D^k chi(d)`, `k = 0..=d`.
pub fn chi_differences(domain: &CartanDomain, mu: &Rational) -> Result<ChiData> {
    let chi_poly = chi_tilde(domain, mu)?;
    let d = domain.d() as usize;
    debug_assert_eq!(chi_poly.degree(), Some(d));
    let samples = chi_samples(domain, mu);
    let differences: Vec<Rational> = (0..=d)
        .map(|k| finite_difference(&samples, k))
        .collect::<Result<_>>()?;
    debug_assert_eq!(
        differences[d],
        Rational::from_integer(factorial(d as u64)) * mu.pow(d as i32)
    );
    Ok(ChiData { chi_poly, samples, differences })
}

/// `D^k chi(d)` for `k = 0..=d` as polynomials in `mu` (degree at most `d`).
pub fn chi_differences_in_mu(domain: &CartanDomain) -> Vec<UniPoly> {
    let d = domain.d() as i64;
    let samples: Vec<UniPoly> = (0..=d).map(|j| chi_tilde_in_mu(domain, d - j)).collect();
    (0..=d as usize)
        .map(|k| {
            let mut out = UniPoly::zero(Var::Mu);
            for (j, sample) in samples.iter().enumerate().take(k + 1) {
                let mut c = Rational::from_integer(crate::algebra::binomial(k as u64, j as u64));
                if j % 2 == 1 {
                    c = -c;
                }
                out = out.add(&sample.scale(&c)).expect("mu polynomials");
            }
            out
        })
        .collect()
}

/// The epsilon function as a polynomial in `alpha` with coefficients in `t`:
/// degree `n = d + d0` in `alpha`, at most `d` in `t`, leading
/// `alpha`-coefficient identically `1`.
pub fn epsilon_bipoly(spec: &HartogsSpec) -> Result<BiPoly> {
    let data = chi_differences(spec.domain(), spec.mu())?;
    epsilon_from_differences(spec, &data.differences)
}

fn epsilon_from_differences(spec: &HartogsSpec, differences: &[Rational]) -> Result<BiPoly> {
    let d = spec.domain().d() as usize;
    let n = spec.n() as usize;
    let mu_pow_d = spec.mu().pow(d as i32);
    let mut out = BiPoly::zero();
    // alpha_part at k is prod_{j=d-k+1}^{n} (alpha - j), grown one factor
    // per step from the k = 0 product
    let base_roots: Vec<Rational> = (d + 1..=n).map(|j| rat_int(j as i64)).collect();
    let mut alpha_part = UniPoly::from_roots(Var::Alpha, &base_roots);
    let mut k_factorial = Rational::one();
    for (k, difference) in differences.iter().enumerate() {
        if k > 0 {
            let next_root = rat_int((d - k + 1) as i64);
            alpha_part = alpha_part.mul(&UniPoly::linear(Var::Alpha, Rational::one(), -next_root))?;
            k_factorial *= rat_int(k as i64);
        }
        if difference.is_zero() {
            continue;
        }
        let scale = difference / (&k_factorial * &mu_pow_d);
        let t_part = UniPoly::monomial(Var::T, scale, d - k);
        for (m, coeff) in alpha_part.coeffs().iter().enumerate() {
            out.add_alpha_term(m, t_part.scale(coeff))?;
        }
    }
    debug_assert_eq!(out.degree_alpha(), Some(n));
    debug_assert_eq!(
        out.alpha_coeff(n),
        UniPoly::constant(Var::T, Rational::one())
    );
    Ok(out)
}

/// Extracts the expansion coefficients `a_j(t) = [alpha^{n-j}] eps` together
/// with their exact constancy flags.
pub fn extract_coefficients(spec: &HartogsSpec) -> Result<EpsilonExpansion> {
    let bipoly = epsilon_bipoly(spec)?;
    let n = spec.n() as usize;
    let coefficients: Vec<UniPoly> = (0..=n).map(|j| bipoly.alpha_coeff(n - j)).collect();
    let constant_flags: Vec<bool> = coefficients.iter().map(UniPoly::is_constant).collect();
    debug_assert_eq!(coefficients[0], UniPoly::constant(Var::T, Rational::one()));
    Ok(EpsilonExpansion { spec: spec.clone(), coefficients, constant_flags })
}

/// Decides constancy of `a_j` without expanding the polynomial: `a_j` is
/// constant iff `D^k chi(d) = 0` for every `k` in `[max(0, d-j), d-1]`.
///
/// The `k`-th term of the epsilon sum contributes to `a_j` exactly when
/// `k >= d - j`, carries the `t`-power `t^{d-k}` (so distinct `k` cannot
/// cancel), and its `alpha^{n-j}` coefficient is a signed elementary
/// symmetric polynomial of positive integers, hence nonzero.
pub fn constancy_characterization(spec: &HartogsSpec, j: u32) -> Result<bool> {
    if j < 1 || j > spec.n() {
        return Err(Error::InvalidInput(format!(
            "coefficient index j = {j} outside [1, {}]",
            spec.n()
        )));
    }
    let samples = chi_samples(spec.domain(), spec.mu());
    let d = spec.domain().d();
    let k_lo = d.saturating_sub(j) as usize;
    for k in k_lo..d as usize {
        if !finite_difference(&samples, k)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The constancy locus of `a_j` in the variable `mu`: the polynomials
/// `mu -> D^k chi(d)` (the `mu^{-d}` prefactor cleared) for
/// `k in [max(0, d-j), d-1]`. `a_j` is constant at `mu > 0` iff every listed
/// polynomial vanishes there.
pub fn constancy_locus(domain: &CartanDomain, d0: u32, j: u32) -> Result<Vec<UniPoly>> {
    let n = domain.d() + d0;
    if j < 1 || j > n {
        return Err(Error::InvalidInput(format!(
            "coefficient index j = {j} outside [1, {n}]"
        )));
    }
    let diffs = chi_differences_in_mu(domain);
    let d = domain.d();
    let k_lo = d.saturating_sub(j) as usize;
    Ok(diffs[k_lo..d as usize].to_vec())
}

/// Floating-point evaluation of the epsilon sum, independent of the exact
/// polynomial pipeline. Chi samples are products of linear factors (never
/// the Gamma function itself, which has poles at nonpositive integers); the
/// Gamma ratio in `alpha` goes through `ln_gamma` when `alpha > d + d0` and
/// falls back to the direct product otherwise.
pub fn eval_gamma_form(spec: &HartogsSpec, t: f64, alpha: f64) -> f64 {
    let domain = spec.domain();
    let d = domain.d() as usize;
    let d0 = spec.d0() as usize;
    let n = (d + d0) as i64;
    let mu = crate::algebra::rational_to_f64(spec.mu());
    let a = domain.a() as f64;
    let gamma = domain.gamma() as f64;
    let offsets = domain.gamma_ratio_offsets();

    let chi = |s: f64| -> f64 {
        let mut out = 1.0;
        for (k, &m_k) in offsets.iter().enumerate() {
            let x_k = mu * s - gamma + 1.0 + k as f64 * a / 2.0;
            for i in 0..m_k {
                out *= x_k + i as f64;
            }
        }
        out
    };
    let samples: Vec<f64> = (0..=d).map(|j| chi((d - j) as f64)).collect();

    // Pascal row per difference order
    let mut differences = vec![0.0f64; d + 1];
    for (k, slot) in differences.iter_mut().enumerate() {
        let mut binom = 1.0f64;
        let mut acc = 0.0f64;
        for (j, sample) in samples.iter().enumerate().take(k + 1) {
            acc += if j % 2 == 0 { binom * sample } else { -binom * sample };
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        *slot = acc;
    }

    let mut k_factorial = 1.0f64;
    let mut total = 0.0f64;
    for (k, difference) in differences.iter().enumerate() {
        if k > 0 {
            k_factorial *= k as f64;
        }
        let ratio = if alpha > n as f64 {
            libm::exp(libm::lgamma(alpha - d as f64 + k as f64) - libm::lgamma(alpha - n as f64))
        } else {
            let mut prod = 1.0;
            for j in (d - k + 1) as i64..=n {
                prod *= alpha - j as f64;
            }
            prod
        };
        total += difference / k_factorial * t.powi((d - k) as i32) * ratio;
    }
    total / mu.powi(d as i32)
}
