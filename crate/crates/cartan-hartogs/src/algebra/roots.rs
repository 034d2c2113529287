//! Certified positive real roots of a rational polynomial.
//!
//! Roots in `(0, inf)` are counted by Sturm sign variations, so "no positive
//! root" and "exactly these roots" are exact verdicts, not sampling claims.
//! Rational roots are recovered exactly without factoring coefficients: on
//! the monic integer model `q(y) = L^{m-1} p(y/L)` every rational root is an
//! integer, so once an isolating interval is narrower than `1` the only
//! candidate left is the single integer inside it.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::algebra::{Rational, UniPoly};

/// Outcome of [`isolate_positive_roots`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveRoots {
    /// The zero polynomial: every positive value is a root. Distinct from an
    /// empty root list.
    IdenticallyZero,
    /// All distinct roots in `(0, inf)`, ascending.
    Roots(Vec<PositiveRoot>),
}

/// One positive root: exact when rational, otherwise an open isolating
/// interval of width below `10^-6` on which the polynomial changes sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveRoot {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

impl PositiveRoots {
    /// True when the polynomial is nonzero and has no positive roots.
    pub fn is_empty(&self) -> bool {
        matches!(self, PositiveRoots::Roots(r) if r.is_empty())
    }

    /// True when the root set consists exactly of the given rationals, all
    /// certified exact, in ascending order.
    pub fn is_exactly(&self, expected: &[Rational]) -> bool {
        match self {
            PositiveRoots::IdenticallyZero => false,
            PositiveRoots::Roots(roots) => {
                roots.len() == expected.len()
                    && roots
                        .iter()
                        .zip(expected)
                        .all(|(root, want)| matches!(root, PositiveRoot::Exact(x) if x == want))
            }
        }
    }
}

/// Isolates every root of `p` in `(0, inf)`.
pub fn isolate_positive_roots(p: &UniPoly) -> PositiveRoots {
    if p.is_zero() {
        return PositiveRoots::IdenticallyZero;
    }
    // roots at zero are not positive; strip the x^v factor
    let shift = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = UniPoly::from_coeffs(p.var(), p.coeffs()[shift..].to_vec());
    if stripped.is_constant() {
        return PositiveRoots::Roots(Vec::new());
    }
    // square-free part: same root set, all roots simple
    let deriv = stripped.derivative();
    let common = stripped.gcd(&deriv).expect("same variable");
    let (square_free, rem) = stripped.div_rem(&common).expect("same variable");
    debug_assert!(rem.is_zero());

    let (mut q, scale) = monic_integer_model(&square_free);
    // reporting width 10^-6 in original coordinates is scale/10^6 in y = scale*x
    let width_limit = Rational::new(scale.clone(), BigInt::from(1_000_000));

    let mut exact: Vec<Rational> = Vec::new();
    let mut intervals: Vec<(Rational, Rational)>;
    'restart: loop {
        intervals = Vec::new();
        if q.degree().unwrap_or(0) == 0 {
            break;
        }
        let chain = sturm_chain(&q);
        let bound = cauchy_bound(&q);
        let mut stack = vec![(Rational::zero(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = count_roots(&chain, &lo, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 {
                match refine(&q, lo, hi, &width_limit) {
                    Refined::Exact(y) => {
                        q = deflate(&q, &y);
                        exact.push(y);
                        continue 'restart;
                    }
                    Refined::Interval(l, h) => intervals.push((l, h)),
                }
            } else {
                let mid = midpoint(&lo, &hi);
                if q.eval(&mid).is_zero() {
                    q = deflate(&q, &mid);
                    exact.push(mid);
                    continue 'restart;
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
        break;
    }

    // keep isolating intervals clear of the exact roots found earlier
    let intervals: Vec<(Rational, Rational)> = intervals
        .into_iter()
        .map(|(lo, hi)| separate_from(&exact, &q, lo, hi))
        .collect();

    let scale_rat = Rational::from_integer(scale);
    let mut roots: Vec<PositiveRoot> = exact
        .into_iter()
        .map(|y| PositiveRoot::Exact(y / &scale_rat))
        .chain(intervals.into_iter().map(|(lo, hi)| PositiveRoot::Interval {
            lo: lo / &scale_rat,
            hi: hi / &scale_rat,
        }))
        .collect();
    roots.sort_by(|a, b| root_key(a).cmp(root_key(b)));
    PositiveRoots::Roots(roots)
}

fn root_key(root: &PositiveRoot) -> &Rational {
    match root {
        PositiveRoot::Exact(x) => x,
        PositiveRoot::Interval { lo, .. } => lo,
    }
}

fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / Rational::from_integer(BigInt::from(2))
}

/// Shrinks `(lo, hi)` around its unique root of `q` until no previously found
/// exact root lies inside the closed interval.
fn separate_from(
    exact: &[Rational],
    q: &UniPoly,
    mut lo: Rational,
    mut hi: Rational,
) -> (Rational, Rational) {
    let overlaps = |lo: &Rational, hi: &Rational| exact.iter().any(|e| e >= lo && e <= hi);
    let mut flo = q.eval(&lo);
    while overlaps(&lo, &hi) {
        let mid = midpoint(&lo, &hi);
        let fmid = q.eval(&mid);
        debug_assert!(!fmid.is_zero(), "interval isolates an irrational root");
        if fmid.is_negative() == flo.is_negative() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

enum Refined {
    Exact(Rational),
    Interval(Rational, Rational),
}

/// Narrows an interval known to contain exactly one simple root. Detects an
/// exact rational root (necessarily an integer of the monic model) or
/// bisects below the reporting width.
fn refine(q: &UniPoly, mut lo: Rational, mut hi: Rational, width_limit: &Rational) -> Refined {
    let one = Rational::one();
    let mut flo = q.eval(&lo);
    debug_assert!(!flo.is_zero() && !q.eval(&hi).is_zero());
    // narrow to width <= 1: at most one integer candidate remains inside
    while &hi - &lo > one {
        let mid = midpoint(&lo, &hi);
        let fmid = q.eval(&mid);
        if fmid.is_zero() {
            return Refined::Exact(mid);
        }
        if fmid.is_negative() == flo.is_negative() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    let candidate = lo.floor() + one;
    if candidate > lo && candidate < hi && q.eval(&candidate).is_zero() {
        return Refined::Exact(candidate);
    }
    // the root is irrational; bisect down to the reporting width
    while &hi - &lo >= *width_limit {
        let mid = midpoint(&lo, &hi);
        let fmid = q.eval(&mid);
        debug_assert!(!fmid.is_zero());
        if fmid.is_negative() == flo.is_negative() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Refined::Interval(lo, hi)
}

fn deflate(q: &UniPoly, root: &Rational) -> UniPoly {
    debug_assert!(root.is_integer(), "rational root of a monic integer polynomial");
    let linear = UniPoly::linear(q.var(), Rational::one(), -root.clone());
    let (quotient, rem) = q.div_rem(&linear).expect("same variable");
    debug_assert!(rem.is_zero());
    quotient
}

/// Monic integer model: returns `(q, L)` with `q(y) = L^{m-1} p(y/L)` monic
/// with integer coefficients, so `x` is a root of `p` iff `y = L x` is a
/// root of `q`.
fn monic_integer_model(p: &UniPoly) -> (UniPoly, BigInt) {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().expect("nonzero polynomial").is_negative() {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    let m = ints.len() - 1;
    let lead = ints[m].clone();
    debug_assert!(lead.is_positive());
    let coeffs: Vec<Rational> = ints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == m {
                Rational::one()
            } else {
                Rational::from_integer(c * lead.pow((m - 1 - i) as u32))
            }
        })
        .collect();
    (UniPoly::from_coeffs(p.var(), coeffs), lead)
}

/// Strict upper bound on the absolute value of every root of a monic
/// polynomial: `1 + max |coeff|`.
fn cauchy_bound(q: &UniPoly) -> Rational {
    let m = q.degree().expect("nonzero");
    let mut max = Rational::zero();
    for c in &q.coeffs()[..m] {
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    max + Rational::one()
}

/// Sturm chain of a square-free polynomial, each member scaled by a positive
/// constant to keep coefficients small.
fn sturm_chain(q: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![q.clone(), positive_scale(q.derivative())];
    loop {
        let n = chain.len();
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]).expect("same variable");
        if rem.is_zero() {
            break;
        }
        chain.push(positive_scale(rem.neg()));
    }
    chain
}

fn positive_scale(p: UniPoly) -> UniPoly {
    match p.leading_coeff() {
        None => p,
        Some(lead) => {
            let inv = Rational::one() / lead.abs();
            p.scale(&inv)
        }
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots in `(lo, hi)`; endpoints must not be roots.
fn count_roots(chain: &[UniPoly], lo: &Rational, hi: &Rational) -> usize {
    let at_lo = sign_variations(chain, lo);
    let at_hi = sign_variations(chain, hi);
    debug_assert!(at_lo >= at_hi);
    at_lo - at_hi
}
