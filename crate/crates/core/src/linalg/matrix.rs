use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Dense matrix over the rationals, row-major. Degenerate shapes (zero rows
/// or columns) are legal everywhere: rank 0, empty kernel basis.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds from row slices; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols: ncols,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_assign_at(&mut self, r: usize, c: usize, v: &Rational) {
        let e = &mut self.data[r * self.cols + c];
        *e = &*e + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn matmul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let e = &mut out.data[r * other.cols + c];
                        *e = &*e + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; `self` indexes the major blocks.
    pub fn kron(&self, other: &RationalMatrix) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                for i in 0..other.rows {
                    for j in 0..other.cols {
                        let b = other.get(i, j);
                        if !b.is_zero() {
                            out.set(r * other.rows + i, c * other.cols + j, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Commutator `self*other - other*self`.
    pub fn commutator(&self, other: &RationalMatrix) -> RationalMatrix {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> RationalMatrix {
        Self::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c]).clone()
        })
    }

    /// Exact rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Rows are first scaled to integers; pivots are chosen among the nonzero
    /// candidates of the current column by smallest bit length to limit
    /// coefficient growth.
    pub fn rank_exact(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Scale each row by the lcm of its denominators: rank is unchanged.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut l = BigInt::one();
                for c in 0..self.cols {
                    l = l.lcm(self.get(r, c).denom());
                }
                (0..self.cols)
                    .map(|c| {
                        let e = self.get(r, c);
                        e.numer() * (&l / e.denom())
                    })
                    .collect()
            })
            .collect();

        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            let pivot = (r..self.rows)
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| m[i][c].magnitude().bits());
            let Some(p) = pivot else { continue };
            m.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let t = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                    m[i][j] = t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            rank += 1;
            r += 1;
            if r == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub(crate) fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Smallest nonzero pivot by total bit size keeps entries modest.
            let pivot = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| {
                    let e = m.get(i, c);
                    e.numer().magnitude().bits() + e.denom().bits()
                });
            let Some(p) = pivot else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(&factor * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the right null space `{x : Mx = 0}`, one vector per free
    /// column in ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for &f in &free_cols {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = RationalMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(RationalMatrix::from_fn(n, n, |r, c| {
            red.get(r, n + c).clone()
        }))
    }

    /// Serializes row-major CSV with entries printed as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<RationalMatrix> {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<Rational> = line
                .split(',')
                .map(|f| parse_rational(f).map_err(Error::Invalid))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged CSV rows".into()));
        }
        Ok(RationalMatrix::from_rows(&rows))
    }

    /// Largest absolute value of any entry, as f64 (diagnostics only).
    pub fn max_abs_f64(&self) -> f64 {
        self.data
            .iter()
            .map(|r| to_f64(r).abs())
            .fold(0.0, f64::max)
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    // Good enough for desk-scale magnitudes; exact stages never round-trip
    // through this.
    let num = r.numer();
    let den = r.denom();
    match (num.to_string().parse::<f64>(), den.to_string().parse::<f64>()) {
        (Ok(n), Ok(d)) => n / d,
        _ => f64::NAN,
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c).clone())
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_basics() {
        assert_eq!(RationalMatrix::zeros(3, 3).rank_exact(), 0);
        assert_eq!(RationalMatrix::identity(4).rank_exact(), 4);
        assert_eq!(RationalMatrix::zeros(0, 0).rank_exact(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[3, 6]]).rank_exact(), 1);
        assert_eq!(m(&[&[0, 1], &[0, 0], &[0, 3]]).rank_exact(), 1);
    }

    #[test]
    fn kernel_basics() {
        assert!(RationalMatrix::identity(5).kernel_basis().is_empty());
        let k = RationalMatrix::zeros(2, 4).kernel_basis();
        assert_eq!(k.len(), 4);
        for (i, v) in k.iter().enumerate() {
            for (j, e) in v.iter().enumerate() {
                assert_eq!(*e, if i == j { rat_int(1) } else { rat_int(0) });
            }
        }
        // 0x0 matrices are legal: rank 0, empty kernel.
        assert!(RationalMatrix::zeros(0, 0).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            for r in 0..a.rows() {
                let dot: Rational = (0..3).map(|c| a.get(r, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = RationalMatrix::from_rows(&[
            vec![rat_int(2), rat(1, 3), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(5)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
        ]);
        let inv = a.inverse().expect("invertible");
        assert_eq!(a.matmul(&inv), RationalMatrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn csv_round_trip() {
        let a = RationalMatrix::from_rows(&[
            vec![rat(1, 2), rat_int(-3)],
            vec![rat_int(0), rat(7, 5)],
        ]);
        let b = RationalMatrix::from_csv(&a.to_csv()).unwrap();
        assert_eq!(a, b);
    }

    /// Naive rational Gaussian elimination, kept independent of both
    /// `rank_exact` (Bareiss over integers) and `rref` pivot strategy.
    fn rank_naive(m: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for c in 0..m.cols() {
            let Some(p) = (row..m.rows()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            for i in row + 1..m.rows() {
                if !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[row][c];
                    for j in c..m.cols() {
                        a[i][j] = &a[i][j] - &(&f * &a[row][j]);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows() {
                break;
            }
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_matches_naive_elimination(
            rows in 1usize..6, cols in 1usize..6,
            seed in proptest::collection::vec(-6i64..6, 36),
            dens in proptest::collection::vec(1i64..4, 36),
        ) {
            let a = RationalMatrix::from_fn(rows, cols, |r, c| {
                rat(seed[r * 6 + c], dens[r * 6 + c])
            });
            prop_assert_eq!(a.rank_exact(), rank_naive(&a));
        }

        #[test]
        fn rank_plus_kernel_dim_is_cols(
            rows in 0usize..6, cols in 0usize..6,
            seed in proptest::collection::vec(-5i64..5, 36),
        ) {
            let a = RationalMatrix::from_fn(rows, cols, |r, c| rat_int(seed[r * 6 + c]));
            prop_assert_eq!(a.rank_exact() + a.kernel_basis().len(), cols);
        }
    }
}
