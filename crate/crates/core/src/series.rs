//! Hilbert series as rational functions `N(t) / (1-t)^d` with Laurent
//! numerator `N` and pole order `d`, plus the invariants read off them:
//! a-invariant, initial degree, Hilbert polynomial, multiplicity.
//!
//! Closure operations (`hadamard`, `veronese`, `shift`) reconstruct the
//! numerator from finitely many exact coefficients: the coefficient function
//! of `N/(1-t)^d` agrees with a polynomial of degree `d-1` from degree
//! `deg N - d + 1` on, so multiplying a long enough truncation by `(1-t)^d`
//! terminates; guard coefficients past the predicted degree are asserted to
//! vanish.

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Extra coefficients computed past the predicted numerator degree; all must
/// come out zero or reconstruction reports an internal inconsistency.
const GUARD: i64 = 3;

/// `binomial(n, k)` for the Taylor-coefficient convention: 0 when `k < 0`
/// or `n < k` (callers never pass `n < 0`).
pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// A Hilbert series in canonical form: when `pole_order > 0` the numerator is
/// not divisible by `(1 - t)`, so equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: LaurentPolynomial,
    pole_order: u32,
}

impl HilbertSeries {
    /// Canonicalizes on construction: strips common `(1-t)` factors.
    pub fn new(mut numerator: LaurentPolynomial, mut pole_order: u32) -> Self {
        if numerator.is_zero() {
            return HilbertSeries {
                numerator,
                pole_order: 0,
            };
        }
        while pole_order > 0 {
            match numerator.div_one_minus_t() {
                Some(q) => {
                    numerator = q;
                    pole_order -= 1;
                }
                None => break,
            }
        }
        HilbertSeries {
            numerator,
            pole_order,
        }
    }

    pub fn zero() -> Self {
        HilbertSeries {
            numerator: LaurentPolynomial::zero(),
            pole_order: 0,
        }
    }

    /// `1 / (1-t)^m`, the series of a polynomial ring in `m` variables.
    pub fn poly_ring(m: u32) -> Self {
        HilbertSeries {
            numerator: LaurentPolynomial::one(),
            pole_order: m,
        }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Exact Taylor coefficient of `t^k`.
    pub fn coefficient(&self, k: i64) -> BigInt {
        let d = self.pole_order as i64;
        if d == 0 {
            return self.numerator.coeff(k);
        }
        let mut acc = BigInt::zero();
        for (e, c) in self.numerator.terms() {
            if e <= k {
                acc += c * binomial(k - e + d - 1, d - 1);
            }
        }
        acc
    }

    /// Multiplies by `t^s` (the series of the shifted module `M(-s)`).
    pub fn shift(&self, s: i64) -> Self {
        HilbertSeries {
            numerator: self.numerator.shift(s),
            pole_order: self.pole_order,
        }
    }

    /// Reconstructs `sum c_k t^k` (given exactly on `lo..=hi`, provably a
    /// polynomial of degree `<= d - 1` from `hi - d + 1` on) as `N/(1-t)^d`.
    fn reconstruct(
        coeff: impl Fn(i64) -> BigInt,
        lo: i64,
        hi: i64,
        d: u32,
        op: &'static str,
    ) -> Result<Self> {
        let top = hi + GUARD;
        let mut run = Vec::with_capacity((top - lo + 1) as usize);
        for k in lo..=top {
            run.push(coeff(k));
        }
        let trunc = LaurentPolynomial::new(lo, run);
        let prod = trunc.mul_one_minus_t_pow(d);
        for g in (hi + 1)..=top {
            if !prod.coeff(g).is_zero() {
                return Err(Error::Inconsistency(format!(
                    "{op}: guard coefficient at degree {g} is nonzero; \
                     numerator reconstruction bound violated"
                )));
            }
        }
        let numerator = LaurentPolynomial::from_terms(
            &prod
                .terms()
                .filter(|&(e, _)| e <= hi)
                .map(|(e, c)| (e, c.clone()))
                .collect::<Vec<_>>(),
        );
        Ok(HilbertSeries::new(numerator, d))
    }

    /// Coefficientwise product: the series of a Segre product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let (d1, d2) = (self.pole_order, other.pole_order);
        // A finite factor truncates the other one.
        if d1 == 0 || d2 == 0 {
            let (poly, full) = if d1 == 0 { (self, other) } else { (other, self) };
            let terms: Vec<(i64, BigInt)> = poly
                .numerator
                .terms()
                .map(|(e, c)| (e, c * full.coefficient(e)))
                .collect();
            return Ok(HilbertSeries::new(LaurentPolynomial::from_terms(&terms), 0));
        }
        let n1 = self.numerator.degree().unwrap();
        let n2 = other.numerator.degree().unwrap();
        let lo = self
            .numerator
            .lowest_exponent()
            .unwrap()
            .max(other.numerator.lowest_exponent().unwrap());
        let d = d1 + d2 - 1;
        // Both coefficient functions are polynomial from k0 on, so the
        // product is a polynomial of degree <= d1 + d2 - 2 there.
        let k0 = (n1 - d1 as i64).max(n2 - d2 as i64) + 1;
        let hi = k0 + d as i64 - 1;
        Self::reconstruct(
            |k| self.coefficient(k) * other.coefficient(k),
            lo,
            hi,
            d,
            "hadamard",
        )
    }

    /// Arithmetic-progression section: coefficient `k` of the result is
    /// coefficient `c*k` of the input (the series of a Veronese subring).
    pub fn veronese(&self, c: u32) -> Result<Self> {
        if c < 1 {
            return Err(Error::InvalidParams(
                "veronese order must be >= 1".to_string(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let c_i = c as i64;
        let lo_in = self.numerator.lowest_exponent().unwrap();
        let lo = lo_in.div_euclid(c_i) + if lo_in.rem_euclid(c_i) == 0 { 0 } else { 1 };
        let d = self.pole_order;
        if d == 0 {
            let hi_in = self.numerator.degree().unwrap();
            let terms: Vec<(i64, BigInt)> = (lo..=hi_in.div_euclid(c_i))
                .map(|k| (k, self.numerator.coeff(c_i * k)))
                .collect();
            return Ok(HilbertSeries::new(LaurentPolynomial::from_terms(&terms), 0));
        }
        let n = self.numerator.degree().unwrap();
        let brk = n - d as i64 + 1;
        let k0 = brk.div_euclid(c_i) + if brk.rem_euclid(c_i) == 0 { 0 } else { 1 };
        let hi = k0 + d as i64 - 1;
        Self::reconstruct(|k| self.coefficient(c_i * k), lo, hi, d, "veronese")
    }

    /// Degree of the series as a rational function.
    pub fn a_invariant(&self) -> Result<i64> {
        let deg = self
            .numerator
            .degree()
            .ok_or(Error::ZeroSeries("a-invariant"))?;
        Ok(deg - self.pole_order as i64)
    }

    /// Least degree with a nonzero coefficient. Requires a module series
    /// (nonnegative coefficients); a negative leading coefficient is the
    /// observable violation and is rejected.
    pub fn initial_degree(&self) -> Result<i64> {
        let lo = self
            .numerator
            .lowest_exponent()
            .ok_or(Error::ZeroSeries("initial degree"))?;
        if self.numerator.coeff(lo).is_negative() {
            return Err(Error::NegativeCoefficient { degree: lo });
        }
        Ok(lo)
    }

    /// Numerator evaluated at `t = 1`; equals `(d-1)!` times the leading
    /// coefficient of the Hilbert polynomial.
    pub fn multiplicity(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroSeries("multiplicity"));
        }
        if self.pole_order == 0 {
            return Err(Error::PoleOrderZero("multiplicity"));
        }
        let e = self.numerator.eval_at_one();
        if !e.is_positive() {
            return Err(Error::NegativeCoefficient {
                degree: self.numerator.degree().unwrap(),
            });
        }
        Ok(e)
    }

    /// The polynomial `P` with `coefficient(k) = P(k)` for all
    /// `k >= valid_from = deg N - d + 1`, of degree `d - 1`.
    pub fn hilbert_polynomial(&self) -> Result<(RationalPolynomial, i64)> {
        if self.is_zero() {
            return Err(Error::ZeroSeries("Hilbert polynomial"));
        }
        let d = self.pole_order;
        if d == 0 {
            return Err(Error::PoleOrderZero("Hilbert polynomial"));
        }
        let mut p = RationalPolynomial::zero();
        for (e, c) in self.numerator.terms() {
            // binomial(k - e + d - 1, d - 1) as a polynomial in k
            let mut term = RationalPolynomial::constant(BigRational::one());
            for i in 1..d as i64 {
                term = term.mul_linear(BigRational::from(BigInt::from(i - e)));
            }
            let fact: BigInt = (1..d as i64).map(BigInt::from).product();
            term = term.scale(&BigRational::new(c.clone(), fact));
            p = p.add(&term);
        }
        let valid_from = self.numerator.degree().unwrap() - d as i64 + 1;
        Ok((p, valid_from))
    }
}

impl std::fmt::Display for HilbertSeries {
    /// Canonical rendering: `(<numerator>)/(1-t)^d`, parenthesizing the
    /// numerator only when it has several terms, and writing `/(1-t)` for a
    /// simple pole.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n_terms = self.numerator.terms().count();
        if self.pole_order == 0 {
            return write!(f, "{}", self.numerator);
        }
        if n_terms > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        if self.pole_order == 1 {
            write!(f, "/(1-t)")
        } else {
            write!(f, "/(1-t)^{}", self.pole_order)
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients, ascending
/// order; used only for Hilbert polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RationalPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = RationalPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut p = RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        };
        p.trim();
        p
    }

    /// Multiplies by `(k + a)`.
    pub fn mul_linear(&self, a: BigRational) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c * &a;
            coeffs[i + 1] += c;
        }
        let mut p = RationalPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn eval(&self, k: i64) -> BigRational {
        let x = BigRational::from(BigInt::from(k));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Evaluation when the value is known to be an integer.
    pub fn eval_int(&self, k: i64) -> BigInt {
        let v = self.eval(k);
        debug_assert!(v.is_integer());
        v.to_integer()
    }
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "k")?,
                1 => write!(f, "{}*k", a)?,
                _ if a.is_one() => write!(f, "k^{}", i)?,
                _ => write!(f, "{}*k^{}", a, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
