//! Dense univariate and bivariate polynomial arithmetic over [`Rational`].

use std::fmt;

use num::{One, Signed, Zero};

use crate::algebra::{binomial, Rational, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial over [`Rational`] with a variable tag.
///
/// `coeffs[i]` is the coefficient of `var^i`; trailing zeros are trimmed, so
/// the zero polynomial is the empty coefficient list and otherwise the last
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// The zero polynomial.
    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    /// `slope * x + intercept`.
    pub fn linear(var: Var, slope: Rational, intercept: Rational) -> Self {
        Self::from_coeffs(var, vec![intercept, slope])
    }

    /// `c * x^power`.
    pub fn monomial(var: Var, c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        UniPoly { var, coeffs }
    }

    /// Builds a polynomial from coefficients indexed low-to-high, trimming
    /// trailing zeros.
    pub fn from_coeffs(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    /// The monic product `prod_i (x - roots[i])`; the empty list gives the
    /// constant `1`.
    pub fn from_roots(var: Var, roots: &[Rational]) -> Self {
        let mut out = Self::constant(var, Rational::one());
        for root in roots {
            let factor = Self::linear(var, Rational::one(), -root.clone());
            out = out.mul(&factor).expect("same variable by construction");
        }
        out
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Coefficients low-to-high with trailing zeros trimmed; empty for zero.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the degree is at most zero (includes the zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch { left: self.var, right: other.var })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Ok(Self::from_coeffs(self.var, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::from_coeffs(self.var, coeffs))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut out = Rational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * x + c;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lead) => {
                let inv = Rational::one() / lead;
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_var(divisor)?;
        let dlead = divisor
            .leading_coeff()
            .ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        while rem.len() > ddeg {
            let lead = rem.last().expect("nonempty").clone();
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - ddeg;
            let factor = lead / dlead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = &factor * c;
                rem[shift + i] -= delta;
            }
            debug_assert!(rem.last().expect("nonempty").is_zero());
            rem.pop();
            quot[shift] = factor;
        }
        Ok((
            Self::from_coeffs(self.var, quot),
            Self::from_coeffs(self.var, rem),
        ))
    }

    /// Monic greatest common divisor over the rationals; `gcd(p, 0)` is the
    /// monic normalization of `p`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keep coefficients small; a unit factor does not change the gcd
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Substitutes `x := a * y + b`, returning a polynomial in the variable
    /// `var` of the result.
    pub fn compose_linear(&self, var: Var, a: &Rational, b: &Rational) -> Self {
        let inner = Self::linear(var, a.clone(), b.clone());
        let mut out = Self::zero(var);
        for c in self.coeffs.iter().rev() {
            out = out
                .mul(&inner)
                .and_then(|p| p.add(&Self::constant(var, c.clone())))
                .expect("same variable by construction");
        }
        out
    }
}

impl fmt::Display for UniPoly {
    /// Low-to-high form, e.g. `2 - 1*t + 3/2*t^2`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*{}", self.var)?,
                _ => write!(f, "{magnitude}*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

/// Rising factorial `x (x+1) ... (x+m-1)`, the polynomial identity for
/// `Gamma(x+m) / Gamma(x)` when `m` is a nonnegative integer; `m = 0` gives
/// the constant `1`.
pub fn gamma_ratio_poly(var: Var, m: i64) -> Result<UniPoly> {
    if m < 0 {
        return Err(Error::UnsupportedOffset(m));
    }
    let mut out = UniPoly::constant(var, Rational::one());
    for i in 0..m {
        let factor = UniPoly::linear(var, Rational::one(), Rational::from_integer(i.into()));
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// The `k`-th alternating finite difference `sum_{j=0}^{k} C(k,j) (-1)^j values[j]`.
///
/// With `values[j] = f(d - j)` this is the backward difference `D^k f(d)`.
pub fn finite_difference(values: &[Rational], k: usize) -> Result<Rational> {
    if k >= values.len() {
        return Err(Error::InvalidInput(format!(
            "finite difference order {k} requires at least {} sample values, got {}",
            k + 1,
            values.len()
        )));
    }
    let mut out = Rational::zero();
    for (j, value) in values.iter().enumerate().take(k + 1) {
        let term = Rational::from_integer(binomial(k as u64, j as u64)) * value;
        if j % 2 == 0 {
            out += term;
        } else {
            out -= term;
        }
    }
    Ok(out)
}

/// Elementary symmetric polynomial `e_p(values)`, by the prefix recurrence;
/// `e_0 = 1`.
pub fn elementary_symmetric(p: usize, values: &[Rational]) -> Result<Rational> {
    if p > values.len() {
        return Err(Error::InvalidInput(format!(
            "elementary symmetric index {p} exceeds the number of values {}",
            values.len()
        )));
    }
    let mut e = vec![Rational::zero(); p + 1];
    e[0] = Rational::one();
    for x in values {
        for j in (1..=p).rev() {
            let delta = x * &e[j - 1];
            e[j] += delta;
        }
    }
    Ok(e.pop().expect("length p+1"))
}

/// Polynomial in `alpha` whose coefficients are polynomials in `t`.
///
/// `alpha_coeffs[m]` is the coefficient of `alpha^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    alpha_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { alpha_coeffs: Vec::new() }
    }

    /// Adds `p(t) * alpha^m`. `p` must be tagged [`Var::T`].
    pub fn add_alpha_term(&mut self, m: usize, p: UniPoly) -> Result<()> {
        if p.var() != Var::T {
            return Err(Error::VarMismatch { left: Var::T, right: p.var() });
        }
        while self.alpha_coeffs.len() <= m {
            self.alpha_coeffs.push(UniPoly::zero(Var::T));
        }
        self.alpha_coeffs[m] = self.alpha_coeffs[m].add(&p)?;
        while self.alpha_coeffs.last().is_some_and(UniPoly::is_zero) {
            self.alpha_coeffs.pop();
        }
        Ok(())
    }

    /// Coefficients of `alpha^0, alpha^1, ...`, each a polynomial in `t`.
    pub fn alpha_coeffs(&self) -> &[UniPoly] {
        &self.alpha_coeffs
    }

    /// Coefficient of `alpha^m` as a polynomial in `t`.
    pub fn alpha_coeff(&self, m: usize) -> UniPoly {
        self.alpha_coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::T))
    }

    /// `None` for the zero polynomial.
    pub fn degree_alpha(&self) -> Option<usize> {
        self.alpha_coeffs.len().checked_sub(1)
    }

    /// Largest `t`-degree over all coefficients; `None` when every
    /// coefficient is constant or zero.
    pub fn max_t_degree(&self) -> Option<usize> {
        self.alpha_coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, t: &Rational, alpha: &Rational) -> Rational {
        let mut out = Rational::zero();
        for p in self.alpha_coeffs.iter().rev() {
            out = out * alpha + p.eval(t);
        }
        out
    }
}
