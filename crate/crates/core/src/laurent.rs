//! Laurent polynomials over the integers.
//!
//! These are the numerators of the rational functions in [`crate::series`]:
//! finitely many terms, exponents may be negative, coefficients are
//! arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Laurent polynomial in canonical form: `coeffs[k]` is the coefficient of
/// `t^(lowest + k)`, and the first and last entries are nonzero unless the
/// polynomial is zero (empty `coeffs`, `lowest = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    lowest: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    /// Builds a polynomial from a lowest exponent and a coefficient run,
    /// trimming zero coefficients at both ends.
    pub fn new(lowest: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { lowest, coeffs };
        p.canonicalize();
        p
    }

    pub fn zero() -> Self {
        LaurentPolynomial {
            lowest: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPolynomial {
            lowest: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    /// The single term `c * t^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        Self::new(e, vec![c])
    }

    pub fn from_terms(terms: &[(i64, BigInt)]) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|&(e, _)| e).min().unwrap();
        let hi = terms.iter().map(|&(e, _)| e).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.lowest += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lowest = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn lowest_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lowest)
        }
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lowest + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if self.is_zero() || e < self.lowest {
            return BigInt::zero();
        }
        let idx = e - self.lowest;
        if idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms in increasing
    /// exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let lo = self.lowest;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (lo + k as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lowest.min(other.lowest);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lo = self.lowest + other.lowest;
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::new(lo, coeffs)
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            lowest: self.lowest + s,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by `(1 - t)^d`.
    pub fn mul_one_minus_t_pow(&self, d: u32) -> Self {
        let mut acc = self.clone();
        let one_minus_t = LaurentPolynomial::new(0, vec![BigInt::one(), -BigInt::one()]);
        for _ in 0..d {
            acc = acc.mul(&one_minus_t);
        }
        acc
    }

    /// Exact division by `(1 - t)`; returns `None` when not divisible.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // N = (1 - t) Q  =>  q_e = n_e + q_{e-1}, running from the lowest
        // exponent upward; divisibility <=> the running sum ends at zero.
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut run = BigInt::zero();
        for c in &self.coeffs {
            run += c;
            q.push(run.clone());
        }
        if run.is_zero() {
            q.pop();
            Some(Self::new(self.lowest, q))
        } else {
            None
        }
    }

    /// Evaluates the polynomial at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl std::fmt::Display for LaurentPolynomial {
    /// Renders as signed Laurent terms, e.g. `1+t-2t^3` or `t^-2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{}", abs)?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}t", abs)?,
                (_, true) => write!(f, "t^{}", e)?,
                (_, false) => write!(f, "{}t^{}", abs, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lowest: i64, coeffs: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::new(lowest, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_trims_both_ends() {
        let q = p(-2, &[0, 1, 2, 0, 0]);
        assert_eq!(q.lowest_exponent(), Some(-1));
        assert_eq!(q.degree(), Some(0));
        assert_eq!(q.coeff(-1), BigInt::from(1));
        assert_eq!(q.coeff(0), BigInt::from(2));
        assert_eq!(q.coeff(5), BigInt::zero());
    }

    #[test]
    fn zero_is_canonical() {
        let q = p(7, &[0, 0]);
        assert!(q.is_zero());
        assert_eq!(q, LaurentPolynomial::zero());
        assert_eq!(q.lowest_exponent(), None);
    }

    #[test]
    fn mul_and_shift() {
        // (1 + t) * (1 - t) = 1 - t^2
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, -1]);
        assert_eq!(a.mul(&b), p(0, &[1, 0, -1]));
        assert_eq!(a.shift(-3).lowest_exponent(), Some(-3));
    }

    #[test]
    fn divide_by_one_minus_t() {
        let a = p(1, &[2, -1, -1]); // 2t - t^2 - t^3 = (1-t)(2t + t^2)
        assert_eq!(a.div_one_minus_t(), Some(p(1, &[2, 1])));
        assert_eq!(p(0, &[1, 1]).div_one_minus_t(), None);
        let round = p(0, &[3, -2, 1]).mul_one_minus_t_pow(2);
        assert_eq!(
            round.div_one_minus_t().unwrap().div_one_minus_t().unwrap(),
            p(0, &[3, -2, 1])
        );
    }

    #[test]
    fn display_signed_terms() {
        assert_eq!(p(0, &[1, 1]).to_string(), "1+t");
        assert_eq!(p(-2, &[1]).to_string(), "t^-2");
        assert_eq!(p(1, &[3]).to_string(), "3t");
        assert_eq!(p(0, &[2, 0, -1]).to_string(), "2-t^2");
        assert_eq!(p(0, &[-1, 1]).to_string(), "-1+t");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }
}
