//! Symbolic graded-module expressions over polynomial rings, closed under
//! grading shift, Veronese subring, and Segre product, with the textual
//! grammar shared with the CLI:
//!
//! ```text
//! expr := poly(<int>) | shift(<expr>, <int>) | veronese(<expr>, <int>) | segre(<expr>, <expr>)
//! ```

use crate::error::{Error, Result};
use crate::series::HilbertSeries;

/// A graded module built from polynomial rings by shift, Veronese section,
/// and Segre product. `Shift(e, s)` is the module `E(-s)`, nonzero first in
/// degree `s` when `E` starts in degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GradedModuleExpr {
    PolyRing(u32),
    Shift(Box<GradedModuleExpr>, i64),
    Veronese(Box<GradedModuleExpr>, u32),
    Segre(Box<GradedModuleExpr>, Box<GradedModuleExpr>),
}

impl GradedModuleExpr {
    pub fn poly(vars: u32) -> Result<Self> {
        if vars < 1 {
            return Err(Error::InvalidParams(
                "polynomial ring needs at least one variable".to_string(),
            ));
        }
        Ok(GradedModuleExpr::PolyRing(vars))
    }

    pub fn shift(self, s: i64) -> Self {
        GradedModuleExpr::Shift(Box::new(self), s)
    }

    pub fn veronese(self, c: u32) -> Result<Self> {
        if c < 1 {
            return Err(Error::InvalidParams(
                "veronese order must be >= 1".to_string(),
            ));
        }
        Ok(GradedModuleExpr::Veronese(Box::new(self), c))
    }

    pub fn segre(left: Self, right: Self) -> Self {
        GradedModuleExpr::Segre(Box::new(left), Box::new(right))
    }

    /// Krull dimension: `m` for a polynomial ring, preserved by shift and
    /// Veronese, and `dim A + dim B - 1` for a Segre product.
    pub fn krull_dim(&self) -> i64 {
        match self {
            GradedModuleExpr::PolyRing(m) => *m as i64,
            GradedModuleExpr::Shift(e, _) => e.krull_dim(),
            GradedModuleExpr::Veronese(e, _) => e.krull_dim(),
            GradedModuleExpr::Segre(a, b) => a.krull_dim() + b.krull_dim() - 1,
        }
    }

    /// The Hilbert series: coefficient `k` is the dimension of the degree-`k`
    /// graded piece.
    pub fn series(&self) -> Result<HilbertSeries> {
        match self {
            GradedModuleExpr::PolyRing(m) => Ok(HilbertSeries::poly_ring(*m)),
            GradedModuleExpr::Shift(e, s) => Ok(e.series()?.shift(*s)),
            GradedModuleExpr::Veronese(e, c) => e.series()?.veronese(*c),
            GradedModuleExpr::Segre(a, b) => a.series()?.hadamard(&b.series()?),
        }
    }

    /// Parses the textual grammar. ASCII, whitespace-insensitive, integers
    /// optionally signed.
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser {
            bytes: input.as_bytes(),
            pos: 0,
        };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(p.error_here("unexpected trailing input"));
        }
        Ok(expr)
    }
}

impl std::fmt::Display for GradedModuleExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GradedModuleExpr::PolyRing(m) => write!(f, "poly({})", m),
            GradedModuleExpr::Shift(e, s) => write!(f, "shift({}, {})", e, s),
            GradedModuleExpr::Veronese(e, c) => write!(f, "veronese({}, {})", e, c),
            GradedModuleExpr::Segre(a, b) => write!(f, "segre({}, {})", a, b),
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// 1-based position of the current byte; at end of input, the position of
    /// the last byte.
    fn here(&self) -> usize {
        if self.pos >= self.bytes.len() {
            self.bytes.len().max(1)
        } else {
            self.pos + 1
        }
    }

    fn error_here(&self, message: &str) -> Error {
        Error::Parse {
            position: self.here(),
            message: message.to_string(),
        }
    }

    fn expect(&mut self, ch: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == ch {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error_here(&format!("expected '{}'", ch as char)))
        }
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error_here("expected one of poly, shift, veronese, segre"));
        }
        Ok((
            std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .to_string(),
            start + 1,
        ))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.bytes.len() && (self.bytes[self.pos] == b'+' || self.bytes[self.pos] == b'-')
        {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error_here("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| Error::Parse {
                position: start + 1,
                message: "integer out of range".to_string(),
            })
    }

    fn small_positive(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let at = self.here();
        let v = self.integer()?;
        if v < 1 || v > u32::MAX as i64 {
            return Err(Error::Parse {
                position: at,
                message: format!("{} must be >= 1", what),
            });
        }
        Ok(v as u32)
    }

    fn expr(&mut self) -> Result<GradedModuleExpr> {
        let (name, at) = self.ident()?;
        match name.as_str() {
            "poly" => {
                self.expect(b'(')?;
                let m = self.small_positive("variable count")?;
                self.expect(b')')?;
                Ok(GradedModuleExpr::PolyRing(m))
            }
            "shift" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let s = self.integer()?;
                self.expect(b')')?;
                Ok(e.shift(s))
            }
            "veronese" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let c = self.small_positive("veronese order")?;
                self.expect(b')')?;
                Ok(GradedModuleExpr::Veronese(Box::new(e), c))
            }
            "segre" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                Ok(GradedModuleExpr::segre(a, b))
            }
            other => Err(Error::Parse {
                position: at,
                message: format!("unknown constructor `{}`", other),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn poly(m: u32) -> GradedModuleExpr {
        GradedModuleExpr::poly(m).unwrap()
    }

    #[test]
    fn krull_dimensions() {
        assert_eq!(poly(3).krull_dim(), 3);
        assert_eq!(poly(3).shift(5).krull_dim(), 3);
        assert_eq!(poly(3).veronese(2).unwrap().krull_dim(), 3);
        assert_eq!(GradedModuleExpr::segre(poly(2), poly(4)).krull_dim(), 5);
    }

    #[test]
    fn series_of_examples() {
        assert_eq!(poly(2).series().unwrap(), HilbertSeries::poly_ring(2));
        assert_eq!(
            poly(3).shift(2).series().unwrap(),
            HilbertSeries::poly_ring(3).shift(2)
        );
        let sq = GradedModuleExpr::segre(poly(2), poly(2)).series().unwrap();
        assert_eq!(sq.to_string(), "(1+t)/(1-t)^3");
        for k in 0..=10i64 {
            assert_eq!(sq.coefficient(k), BigInt::from((k + 1) * (k + 1)));
        }
    }

    #[test]
    fn initial_degree_through_segre() {
        let e = GradedModuleExpr::segre(poly(4).shift(7), poly(4));
        assert_eq!(e.series().unwrap().initial_degree().unwrap(), 7);
        let e = GradedModuleExpr::segre(poly(2), poly(2).shift(3));
        assert_eq!(e.series().unwrap().initial_degree().unwrap(), 3);
        // the unshifted factor vanishes below 0
        let e = GradedModuleExpr::segre(poly(2), poly(2).shift(-2));
        assert_eq!(e.series().unwrap().initial_degree().unwrap(), 0);
    }

    #[test]
    fn paper_a_invariant_cases() {
        // a(R1 # R2(-i)) = -max(m, n - i) inside the Cohen-Macaulay interval
        let e = GradedModuleExpr::segre(poly(2), poly(2));
        assert_eq!(e.series().unwrap().a_invariant().unwrap(), -2);
        let e = GradedModuleExpr::segre(poly(3), poly(2).shift(1));
        assert_eq!(e.series().unwrap().a_invariant().unwrap(), -3);
    }

    #[test]
    fn parse_roundtrip() {
        let cases = [
            "poly(2)",
            "shift(poly(3), -2)",
            "veronese(shift(poly(2), 5), 3)",
            "segre(poly(2), shift(poly(2), 1))",
            "segre(segre(poly(2), poly(2)), poly(2))",
        ];
        for c in cases {
            let e = GradedModuleExpr::parse(c).unwrap();
            assert_eq!(e.to_string(), c);
            assert_eq!(GradedModuleExpr::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        let a = GradedModuleExpr::parse("segre( poly( 2 ) ,shift(poly(2),+1) )").unwrap();
        let b = GradedModuleExpr::parse("segre(poly(2),shift(poly(2),1))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match GradedModuleExpr::parse("veronese(poly(2)").unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 16),
            other => panic!("unexpected error {other:?}"),
        }
        match GradedModuleExpr::parse("cube(2)").unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 1),
            other => panic!("unexpected error {other:?}"),
        }
        match GradedModuleExpr::parse("poly(0)").unwrap_err() {
            Error::Parse { position, message } => {
                assert_eq!(position, 6);
                assert!(message.contains(">= 1"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        match GradedModuleExpr::parse("poly(2) junk").unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 9),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
