//! Exact rational linear feasibility by Fourier-Motzkin elimination, with
//! strict inequalities tracked through every combination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// A linear inequality `coeffs . x <= rhs` (weak) or `coeffs . x < rhs`
/// (strict) over rational variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub strict: bool,
}

impl LinearConstraint {
    pub fn le(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        LinearConstraint {
            coeffs,
            rhs,
            strict: false,
        }
    }

    pub fn lt(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        LinearConstraint {
            coeffs,
            rhs,
            strict: true,
        }
    }

    pub fn ge(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Self::le(coeffs.into_iter().map(|c| -c).collect(), -rhs)
    }

    pub fn gt(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Self::lt(coeffs.into_iter().map(|c| -c).collect(), -rhs)
    }

    /// Convenience builders over integer data.
    pub fn le_int(coeffs: &[i64], rhs: i64) -> Self {
        Self::le(to_rat(coeffs), BigRational::from(BigInt::from(rhs)))
    }

    pub fn lt_int(coeffs: &[i64], rhs: i64) -> Self {
        Self::lt(to_rat(coeffs), BigRational::from(BigInt::from(rhs)))
    }

    pub fn ge_int(coeffs: &[i64], rhs: i64) -> Self {
        Self::ge(to_rat(coeffs), BigRational::from(BigInt::from(rhs)))
    }

    pub fn gt_int(coeffs: &[i64], rhs: i64) -> Self {
        Self::gt(to_rat(coeffs), BigRational::from(BigInt::from(rhs)))
    }

    /// Renders with exact rationals as `p/q` strings, e.g.
    /// `3x0 - 1/2x2 < 5`.
    pub fn render(&self) -> String {
        let mut lhs = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if lhs.is_empty() {
                if c.is_negative() {
                    lhs.push('-');
                }
            } else if c.is_negative() {
                lhs.push_str(" - ");
            } else {
                lhs.push_str(" + ");
            }
            let a = c.abs();
            if a == BigRational::from(BigInt::from(1)) {
                lhs.push_str(&format!("x{}", i));
            } else {
                lhs.push_str(&format!("{}*x{}", a, i));
            }
        }
        if lhs.is_empty() {
            lhs.push('0');
        }
        format!("{} {} {}", lhs, if self.strict { "<" } else { "<=" }, self.rhs)
    }
}

fn to_rat(coeffs: &[i64]) -> Vec<BigRational> {
    coeffs
        .iter()
        .map(|&c| BigRational::from(BigInt::from(c)))
        .collect()
}

/// Integer-normalized internal form: `coeffs . x + bias >= 0` (or `> 0`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coeffs: Vec<BigInt>,
    bias: BigInt,
    strict: bool,
}

impl Row {
    fn from_constraint(c: &LinearConstraint, width: usize) -> Row {
        // coeffs . x (<|<=) rhs  ==>  -coeffs . x + rhs (>|>=) 0
        let mut denom_lcm = BigInt::from(1);
        for q in c.coeffs.iter().chain(std::iter::once(&c.rhs)) {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
        let scale = |q: &BigRational| -> BigInt { (q * &denom_lcm).to_integer() };
        let mut coeffs: Vec<BigInt> = c.coeffs.iter().map(|q| -scale(q)).collect();
        coeffs.resize(width, BigInt::zero());
        let mut row = Row {
            coeffs,
            bias: scale(&c.rhs),
            strict: c.strict,
        };
        row.normalize();
        row
    }

    fn normalize(&mut self) {
        let mut g = self.bias.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g > BigInt::from(1) {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.bias /= &g;
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn constant_holds(&self) -> bool {
        if self.strict {
            self.bias.is_positive()
        } else {
            !self.bias.is_negative()
        }
    }
}

/// Decides whether a system of strict/weak rational linear inequalities has
/// a rational solution, by exact variable elimination.
pub fn fourier_motzkin_feasible(constraints: &[LinearConstraint]) -> bool {
    let width = constraints.iter().map(|c| c.coeffs.len()).max().unwrap_or(0);
    let rows: Vec<Row> = constraints
        .iter()
        .map(|c| Row::from_constraint(c, width))
        .collect();
    feasible_rows(rows, width)
}

fn feasible_rows(rows: Vec<Row>, width: usize) -> bool {
    // Keep only the tightest bound per coefficient pattern: for identical
    // coefficients, smaller bias is tighter; at equal bias strict dominates.
    let mut tight: BTreeMap<Vec<BigInt>, (BigInt, bool)> = BTreeMap::new();
    for row in rows {
        if row.is_constant() {
            if !row.constant_holds() {
                return false;
            }
            continue;
        }
        match tight.get_mut(&row.coeffs) {
            None => {
                tight.insert(row.coeffs, (row.bias, row.strict));
            }
            Some(entry) => {
                let tighter = row.bias < entry.0 || (row.bias == entry.0 && row.strict);
                if tighter {
                    *entry = (row.bias, row.strict);
                }
            }
        }
    }
    let rows: Vec<Row> = tight
        .into_iter()
        .map(|(coeffs, (bias, strict))| Row {
            coeffs,
            bias,
            strict,
        })
        .collect();
    if rows.is_empty() {
        return true;
    }

    // Pick the variable minimizing the pos x neg fan-out.
    let mut best: Option<(usize, usize)> = None;
    for j in 0..width {
        let pos = rows.iter().filter(|r| r.coeffs[j].is_positive()).count();
        let neg = rows.iter().filter(|r| r.coeffs[j].is_negative()).count();
        if pos + neg == 0 {
            continue;
        }
        let cost = pos * neg;
        if best.map_or(true, |(_, c)| cost < c) {
            best = Some((j, cost));
        }
    }
    let Some((j, _)) = best else {
        // no variable occurs; all rows were constants handled above
        return true;
    };

    let mut lower = Vec::new(); // coefficient of x_j > 0: x_j bounded below
    let mut upper = Vec::new();
    let mut rest = Vec::new();
    for r in rows {
        match r.coeffs[j].sign() {
            num_bigint::Sign::Plus => lower.push(r),
            num_bigint::Sign::Minus => upper.push(r),
            num_bigint::Sign::NoSign => rest.push(r),
        }
    }
    if !lower.is_empty() && !upper.is_empty() {
        for lo in &lower {
            for hi in &upper {
                let a = lo.coeffs[j].clone();
                let b = -hi.coeffs[j].clone();
                let mut coeffs = Vec::with_capacity(width);
                for k in 0..width {
                    coeffs.push(&b * &lo.coeffs[k] + &a * &hi.coeffs[k]);
                }
                let mut combined = Row {
                    bias: &b * &lo.bias + &a * &hi.bias,
                    coeffs,
                    strict: lo.strict || hi.strict,
                };
                combined.normalize();
                rest.push(combined);
            }
        }
    }
    feasible_rows(rest, width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_half_open_intervals_forced_equal() {
        // x = y, 0 < x <= 1, -1 < y <= 0 : infeasible
        let system = vec![
            LinearConstraint::le_int(&[1, -1], 0),
            LinearConstraint::ge_int(&[1, -1], 0),
            LinearConstraint::gt_int(&[1, 0], 0),
            LinearConstraint::le_int(&[1, 0], 1),
            LinearConstraint::gt_int(&[0, 1], -1),
            LinearConstraint::le_int(&[0, 1], 0),
        ];
        assert!(!fourier_motzkin_feasible(&system));
    }

    #[test]
    fn triangle_is_feasible() {
        let system = vec![
            LinearConstraint::gt_int(&[1, 0], 0),
            LinearConstraint::le_int(&[1, 0], 1),
            LinearConstraint::gt_int(&[0, 1], 0),
            LinearConstraint::le_int(&[0, 1], 1),
            LinearConstraint::le_int(&[1, 1], 1),
        ];
        assert!(fourier_motzkin_feasible(&system));
    }

    #[test]
    fn strictly_positive_and_negative_is_infeasible() {
        let system = vec![
            LinearConstraint::gt_int(&[1], 0),
            LinearConstraint::lt_int(&[1], 0),
        ];
        assert!(!fourier_motzkin_feasible(&system));
        // weak versions pin x = 0 and are feasible
        let system = vec![
            LinearConstraint::ge_int(&[1], 0),
            LinearConstraint::le_int(&[1], 0),
        ];
        assert!(fourier_motzkin_feasible(&system));
    }

    #[test]
    fn strictness_survives_combination() {
        // 0 <= x < 1 and x >= 1 is infeasible only because of strictness
        let system = vec![
            LinearConstraint::ge_int(&[1], 0),
            LinearConstraint::lt_int(&[1], 1),
            LinearConstraint::ge_int(&[1], 1),
        ];
        assert!(!fourier_motzkin_feasible(&system));
    }

    #[test]
    fn rational_bounds() {
        // 1/3 < x < 2/3 over one variable
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
        let system = vec![
            LinearConstraint::gt(vec![BigRational::from(BigInt::from(1))], third),
            LinearConstraint::lt(vec![BigRational::from(BigInt::from(1))], two_thirds),
        ];
        assert!(fourier_motzkin_feasible(&system));
    }

    #[test]
    fn empty_system_is_feasible() {
        assert!(fourier_motzkin_feasible(&[]));
    }

    #[test]
    fn known_point_implies_feasible() {
        // systems generated to hold at (2, -3, 1/2) must be feasible
        let point = [
            BigRational::from(BigInt::from(2)),
            BigRational::from(BigInt::from(-3)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        ];
        let candidate_rows = [
            vec![1i64, 0, 0],
            vec![0, 1, 4],
            vec![2, 1, -2],
            vec![-1, -1, 1],
            vec![3, 2, 6],
        ];
        let mut system = Vec::new();
        for row in &candidate_rows {
            let val: BigRational = row
                .iter()
                .zip(&point)
                .map(|(&c, x)| BigRational::from(BigInt::from(c)) * x)
                .sum();
            system.push(LinearConstraint::le(to_rat(row), val.clone()));
            system.push(LinearConstraint::lt(
                to_rat(row),
                val + BigRational::from(BigInt::from(1)),
            ));
        }
        assert!(fourier_motzkin_feasible(&system));
    }

    #[test]
    fn render_uses_p_over_q() {
        let c = LinearConstraint::lt(
            vec![
                BigRational::new(BigInt::from(-1), BigInt::from(2)),
                BigRational::from(BigInt::from(3)),
            ],
            BigRational::new(BigInt::from(7), BigInt::from(3)),
        );
        assert_eq!(c.render(), "-1/2*x0 + 3*x1 < 7/3");
    }
}
