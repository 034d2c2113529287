//! Irreducible bounded symmetric domains and Cartan–Hartogs parameter bundles.
//!
//! A Cartan domain is identified here by its rank `r` and numerical
//! invariants `a`, `b`, which determine the complex dimension
//! `d = r(r-1)a/2 + rb + r` and the genus `gamma = (r-1)a + b + 2`. The
//! catalog enumerates the classical series
//! `I(p,q)` (`r = min(p,q)`, `a = 2`, `b = |p-q|`),
//! `II(n)` (`a = 4`), `III(n)` (`a = 1`), `IV(n)` (`r = 2`, `a = n-2`,
//! `b = 0`) and the two exceptional domains `E6 = (2, 6, 4)` and
//! `E7 = (3, 8, 0)`.
//!
//! Points of a Cartan–Hartogs domain enter the computations only through the
//! fiber coordinate `t = 1 - ||w||^2 / N(z,z)^mu` in `(0, 1]`; the generic
//! norm itself is never evaluated here (for `r = 1`, `N(z,z) = 1 - |z|^2`).

use std::fmt;

use num::{One, Signed};

use crate::algebra::{rat_int, Rational};
use crate::error::{Error, Result};

/// An irreducible bounded symmetric domain, identified by `(r, a, b)` with
/// the derived dimension and genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDomain {
    label: Option<String>,
    r: u32,
    a: u32,
    b: u32,
    d: u32,
    gamma: u32,
}

impl CartanDomain {
    /// Builds a domain from `(r, a, b)`, deriving dimension and genus.
    pub fn new(r: u32, a: u32, b: u32) -> Result<Self> {
        let (d, gamma) = derive_invariants(r, a, b)?;
        Ok(CartanDomain { label: None, r, a, b, d, gamma })
    }

    pub fn with_label(label: impl Into<String>, r: u32, a: u32, b: u32) -> Result<Self> {
        let mut domain = Self::new(r, a, b)?;
        domain.label = Some(label.into());
        Ok(domain)
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Rank.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Complex dimension `r(r-1)a/2 + rb + r`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Genus `(r-1)a + b + 2`.
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    /// Gamma-ratio offsets `m_k = 1 + b + (r-k)a` for `k = 1..=r`; always
    /// positive integers, and their sum is `d`.
    pub fn gamma_ratio_offsets(&self) -> Vec<i64> {
        (1..=self.r as i64)
            .map(|k| 1 + self.b as i64 + (self.r as i64 - k) * self.a as i64)
            .collect()
    }

    /// The Kähler–Einstein parameter `mu_0 = gamma / (d + 1)`.
    pub fn kahler_einstein_mu(&self) -> Rational {
        rat_int(self.gamma as i64) / rat_int(self.d as i64 + 1)
    }

    /// Sort key used everywhere reports need a deterministic order.
    pub fn sort_key(&self) -> (u32, u32, u32, u32) {
        (self.d, self.r, self.a, self.b)
    }
}

impl fmt::Display for CartanDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(label) => write!(f, "{label} (r={}, a={}, b={})", self.r, self.a, self.b),
            None => write!(f, "(r={}, a={}, b={})", self.r, self.a, self.b),
        }
    }
}

/// Dimension and genus from `(r, a, b)`: `d = r(r-1)a/2 + rb + r` and
/// `gamma = (r-1)a + b + 2`. Note `r(r-1)` is always even, so `d` is an
/// integer for every input.
pub fn derive_invariants(r: u32, a: u32, b: u32) -> Result<(u32, u32)> {
    if r == 0 {
        return Err(Error::InvalidInput("rank r must be at least 1".into()));
    }
    let r64 = r as u64;
    let d = r64 * (r64 - 1) / 2 * a as u64 + r64 * b as u64 + r64;
    let gamma = (r64 - 1) * a as u64 + b as u64 + 2;
    if d > u32::MAX as u64 || gamma > u32::MAX as u64 {
        return Err(Error::InvalidInput(format!(
            "invariants overflow for (r={r}, a={a}, b={b})"
        )));
    }
    Ok((d as u32, gamma as u32))
}

/// All catalog domains with dimension at most `max_d`, sorted by
/// `(d, r, a, b)`. Low-dimensional coincidences between the series (for
/// example `IV(3) = III(2)`) are listed once, under the label that comes
/// first in the order I, II, III, IV; rank-one entries store `a = 2` by
/// convention (the value of `a` does not affect anything when `r = 1`).
pub fn catalog(max_d: u32) -> Vec<CartanDomain> {
    let mut entries: Vec<CartanDomain> = Vec::new();
    let mut push = |label: String, r: u32, a: u32, b: u32| {
        let a = if r == 1 { 2 } else { a };
        if entries.iter().any(|e| e.r == r && e.a == a && e.b == b) {
            return;
        }
        let domain = CartanDomain::with_label(label, r, a, b).expect("valid catalog parameters");
        if domain.d <= max_d {
            entries.push(domain);
        }
    };

    // type I: p x q matrices, d = pq
    for p in 1..=max_d {
        if p * p > max_d {
            break;
        }
        for q in p..=max_d {
            if p * q > max_d {
                break;
            }
            push(format!("I({p},{q})"), p, 2, q - p);
        }
    }
    // type II: antisymmetric n x n matrices, d = n(n-1)/2
    for n in 2..=max_d + 2 {
        if n * (n - 1) / 2 > max_d {
            break;
        }
        push(format!("II({n})"), n / 2, 4, if n % 2 == 0 { 0 } else { 2 });
    }
    // type III: symmetric n x n matrices, d = n(n+1)/2
    for n in 1..=max_d {
        if n * (n + 1) / 2 > max_d {
            break;
        }
        push(format!("III({n})"), n, 1, 0);
    }
    // type IV: Lie balls, d = n (n >= 3; smaller n is not irreducible)
    for n in 3..=max_d {
        push(format!("IV({n})"), 2, n - 2, 0);
    }
    push("E6".into(), 2, 6, 4);
    push("E7".into(), 3, 8, 0);

    entries.sort_by_key(CartanDomain::sort_key);
    entries
}

/// Resolves a catalog-style label (`I(p,q)`, `II(n)`, `III(n)`, `IV(n)`,
/// `E6`, `E7`) to a domain.
pub fn parse_label(label: &str) -> Result<CartanDomain> {
    let bad = || Error::InvalidInput(format!("unknown domain label '{label}'"));
    let label = label.trim();
    match label {
        "E6" => return CartanDomain::with_label("E6", 2, 6, 4),
        "E7" => return CartanDomain::with_label("E7", 3, 8, 0),
        _ => {}
    }
    let (series, args) = label.split_once('(').ok_or_else(bad)?;
    let args = args.strip_suffix(')').ok_or_else(bad)?;
    let parse_u32 = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    match series.trim() {
        "I" => {
            let (p, q) = args.split_once(',').ok_or_else(bad)?;
            let (p, q) = (parse_u32(p)?, parse_u32(q)?);
            if p == 0 || q == 0 {
                return Err(bad());
            }
            let (lo, hi) = (p.min(q), p.max(q));
            CartanDomain::with_label(format!("I({lo},{hi})"), lo, 2, hi - lo)
        }
        "II" => {
            let n = parse_u32(args)?;
            if n < 2 {
                return Err(bad());
            }
            let (r, b) = (n / 2, if n % 2 == 0 { 0 } else { 2 });
            let a = if r == 1 { 2 } else { 4 };
            CartanDomain::with_label(format!("II({n})"), r, a, b)
        }
        "III" => {
            let n = parse_u32(args)?;
            if n == 0 {
                return Err(bad());
            }
            let a = if n == 1 { 2 } else { 1 };
            CartanDomain::with_label(format!("III({n})"), n, a, 0)
        }
        "IV" => {
            let n = parse_u32(args)?;
            if n < 3 {
                return Err(bad());
            }
            CartanDomain::with_label(format!("IV({n})"), 2, n - 2, 0)
        }
        _ => Err(bad()),
    }
}

/// A Cartan–Hartogs domain `M^{d0}_Omega(mu)`: base domain, Hartogs exponent
/// `mu > 0` and fiber dimension `d0 >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HartogsSpec {
    domain: CartanDomain,
    mu: Rational,
    d0: u32,
}

impl HartogsSpec {
    pub fn new(domain: CartanDomain, mu: Rational, d0: u32) -> Result<Self> {
        if !mu.is_positive() {
            return Err(Error::InvalidInput(format!("mu must be positive, got {mu}")));
        }
        if d0 == 0 {
            return Err(Error::InvalidInput("fiber dimension d0 must be at least 1".into()));
        }
        Ok(HartogsSpec { domain, mu, d0 })
    }

    pub fn domain(&self) -> &CartanDomain {
        &self.domain
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn d0(&self) -> u32 {
        self.d0
    }

    /// Total dimension `n = d + d0`; the expansion has coefficients
    /// `a_0 ..= a_n`.
    pub fn n(&self) -> u32 {
        self.domain.d + self.d0
    }
}

impl fmt::Display for HartogsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mu={} d0={}", self.domain, self.mu, self.d0)
    }
}

/// The fiber coordinate `t = 1 - ||w||^2 / N^mu`, in `(0, 1]`; `t = 1` is
/// the base point `w = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCoordinate {
    t: Rational,
}

impl FiberCoordinate {
    pub fn new(t: Rational) -> Result<Self> {
        if !t.is_positive() || t > Rational::one() {
            return Err(Error::OutsideDomain(t.to_string()));
        }
        Ok(FiberCoordinate { t })
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

/// Maps a point to its fiber coordinate. The caller supplies `N^mu`
/// pre-computed (it owns any transcendental power); the point lies in the
/// domain iff `||w||^2 < N^mu`.
pub fn fiber_coordinate(w_norm_sq: &Rational, mu_power_of_n: &Rational) -> Result<FiberCoordinate> {
    if w_norm_sq.is_negative() {
        return Err(Error::InvalidInput(format!(
            "||w||^2 must be nonnegative, got {w_norm_sq}"
        )));
    }
    if !mu_power_of_n.is_positive() {
        return Err(Error::InvalidInput(format!(
            "N^mu must be positive, got {mu_power_of_n}"
        )));
    }
    let t = Rational::one() - w_norm_sq / mu_power_of_n;
    if !t.is_positive() {
        return Err(Error::OutsideDomain(t.to_string()));
    }
    FiberCoordinate::new(t)
}
