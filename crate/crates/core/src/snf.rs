//! Dense integer matrices and Smith normal form over arbitrary-precision
//! integers: `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with
//! a divisibility chain `d1 | d2 | ...`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Row-major dense matrix over `BigInt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMat {
            rows: r,
            cols: c,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    /// Builds an `s x k` matrix whose columns are the given vectors.
    pub fn from_columns(s: usize, columns: &[Vec<i64>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == s));
        let mut m = Self::zeros(s, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// row_i += q * row_k
    fn add_row_multiple(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(i, j) + q * self.get(k, j);
            self.set(i, j, v);
        }
    }

    /// col_j += q * col_k
    fn add_col_multiple(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, j) + q * self.get(i, k);
            self.set(i, j, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }
}

/// Result of [`smith_normal_form`]: `u * a * v = d`.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k)
            .map(|i| self.d.get(i, i).clone())
            .filter(|v| !v.is_zero())
            .collect()
    }
}

/// Computes the Smith normal form by unimodular row and column operations,
/// exactly.
pub fn smith_normal_form(a: &IntMat) -> SmithNormalForm {
    let (r, c) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMat::identity(r);
    let mut v = IntMat::identity(c);
    let steps = r.min(c);

    for k in 0..steps {
        loop {
            // smallest nonzero |entry| in the remaining block as pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    if d.get(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if d.get(i, j).abs() < d.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return normalize_signs(SmithNormalForm { u, d, v }, k);
            };
            d.swap_rows(pi, k);
            u.swap_rows(pi, k);
            d.swap_cols(pj, k);
            v.swap_cols(pj, k);

            // clear column k below and row k right of the pivot
            let mut dirty = false;
            for i in k + 1..r {
                let q = -(d.get(i, k) / d.get(k, k));
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..c {
                let q = -(d.get(k, j) / d.get(k, k));
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // remainders became new, smaller pivot candidates
            }

            // pivot must divide every remaining entry; otherwise fold the
            // offending row in and restart this step
            let offender = (k + 1..r)
                .flat_map(|i| (k + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !(d.get(i, j) % d.get(k, k)).is_zero());
            match offender {
                Some((i, _)) => {
                    d.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                }
                None => break,
            }
        }
    }
    normalize_signs(SmithNormalForm { u, d, v }, steps)
}

fn normalize_signs(mut snf: SmithNormalForm, upto: usize) -> SmithNormalForm {
    for k in 0..upto {
        if snf.d.get(k, k).is_negative() {
            snf.d.negate_row(k);
            snf.u.negate_row(k);
        }
    }
    snf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_snf_postconditions(a: &IntMat, snf: &SmithNormalForm) {
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert_eq!(snf.u.determinant().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let k = snf.d.rows().min(snf.d.cols());
        for i in 0..k {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
            assert!(!snf.d.get(i, i).is_negative());
            if i + 1 < k && !snf.d.get(i + 1, i + 1).is_zero() {
                assert!(!snf.d.get(i, i).is_zero());
                assert!((snf.d.get(i + 1, i + 1) % snf.d.get(i, i)).is_zero());
            }
        }
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMat::identity(4);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d, a);
        assert_snf_postconditions(&a, &snf);
    }

    #[test]
    fn diag_4_6_has_invariants_2_12() {
        let a = IntMat::from_rows(vec![vec![4, 0], vec![0, 6]]);
        let snf = smith_normal_form(&a);
        assert_snf_postconditions(&a, &snf);
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(12)]
        );
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let a = IntMat::from_rows(vec![vec![2, 4, 6], vec![4, 8, 12]]);
        let snf = smith_normal_form(&a);
        assert_snf_postconditions(&a, &snf);
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn known_4x4() {
        let a = IntMat::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let snf = smith_normal_form(&a);
        assert_snf_postconditions(&a, &snf);
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = IntMat::from_rows(vec![vec![3, 1, -2], vec![0, 4, 5], vec![7, -1, 2]]);
        // 3*(8+5) - 1*(0-35) + (-2)*(0-28) = 39 + 35 + 56 = 130
        assert_eq!(a.determinant(), BigInt::from(130));
        assert_eq!(IntMat::zeros(3, 3).determinant(), BigInt::zero());
    }
}
