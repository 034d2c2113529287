//! Exact scalar and polynomial algebra.
//!
//! Everything in this module is computed over arbitrary-precision rationals;
//! no operation ever rounds. Provides:
//! - [`Rational`]: the only scalar type of the exact core ([`num::BigRational`]);
//! - [`Var`]: variable tags (`s`, `t`, `alpha`, `mu`) enforced at every
//!   polynomial operation boundary;
//! - [`UniPoly`]: dense univariate polynomials with a variable tag;
//! - [`BiPoly`]: polynomials in `alpha` whose coefficients are polynomials in `t`;
//! - [`gamma_ratio_poly`]: the rising factorial `x (x+1) ... (x+m-1)`, i.e.
//!   `Gamma(x+m) / Gamma(x)` for integer `m >= 0`;
//! - [`finite_difference`], [`elementary_symmetric`];
//! - [`isolate_positive_roots`]: certified positive real roots via Sturm counts.

mod poly;
mod roots;

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub use poly::{
    elementary_symmetric, finite_difference, gamma_ratio_poly, BiPoly, UniPoly,
};
pub use roots::{isolate_positive_roots, PositiveRoot, PositiveRoots};

/// Arbitrary-precision rational scalar; always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Variable tag carried by every [`UniPoly`]. The tags keep `s`-, `t`-,
/// `alpha`- and `mu`-polynomials from being mixed by accident.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Argument of the chi polynomial.
    S,
    /// Fiber coordinate `t = 1 - ||w||^2 / N^mu`, in `(0, 1]`.
    T,
    /// Quantization parameter.
    Alpha,
    /// Hartogs exponent, treated as a polynomial variable for constancy loci.
    Mu,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Var::S => "s",
            Var::T => "t",
            Var::Alpha => "alpha",
            Var::Mu => "mu",
        };
        f.write_str(name)
    }
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * (n - k + i) / i; // exact at every step
    }
    out
}

/// Parses `"p/q"`, an integer, or a finite decimal (`"0.3"` becomes `3/10`)
/// into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse '{s}' as a rational number"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in '{s}'")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int: BigInt = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = Rational::from_integer(int.abs()) + Rational::new(frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Converts an exact rational to `f64`, correct to a few ulp even when the
/// numerator and denominator individually overflow `f64`.
pub fn rational_to_f64(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let numer = x.numer();
    let denom = x.denom();
    let keep = 96u64;
    let shift_n = numer.bits().saturating_sub(keep);
    let shift_d = denom.bits().saturating_sub(keep);
    let top_n = bigint_to_f64_small(&(numer >> shift_n));
    let top_d = bigint_to_f64_small(&(denom >> shift_d));
    (top_n / top_d) * 2f64.powi(shift_n as i32 - shift_d as i32)
}

fn bigint_to_f64_small(x: &BigInt) -> f64 {
    let (sign, digits) = x.to_u64_digits();
    let mut out = 0.0;
    for &digit in digits.iter().rev() {
        out = out * 18446744073709551616.0 + digit as f64;
    }
    if sign == Sign::Minus {
        -out
    } else {
        out
    }
}
