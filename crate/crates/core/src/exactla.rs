//! Exact linear algebra over ℚ and ℤ.
//!
//! Everything downstream (Hom spaces, kernels, presentations, g-vector
//! determinants) reduces to the handful of operations here: reduced row
//! echelon form, kernels, linear solves and integer determinants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

/// Build a scalar from a machine integer.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Build the scalar `n / d`. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational literal such as `"3"`, `"-1/2"` or `" 4 / 6 "`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(n))
        }
    }
}

/// Dense row-major matrix of exact rationals.
///
/// Zero-row and zero-column matrices are legal and act as zero maps, which
/// keeps the representation-theoretic code free of special cases for zero
/// vector spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Build an `rows × cols` matrix from row-major integers.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&v| int(v)).collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Column matrix from a vector.
    pub fn column(v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    /// `self · rhs`, skipping zero entries (most matrices here are sparse).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        *out.get_mut(i, j) += prod;
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation; all blocks must share the row count `rows`.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks must share the column count `cols`.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Overwrite the block starting at `(r0, c0)` with `b`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            if !inv.is_one() {
                for j in c..cols {
                    let v = self.get(r, j);
                    if !v.is_zero() {
                        let nv = v * &inv;
                        self.set(r, j, nv);
                    }
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..cols)
                .filter_map(|j| {
                    let v = self.get(r, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let d = &f * v;
                    *self.get_mut(i, *j) -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminating on the shorter side is cheaper.
        if self.rows < self.cols {
            self.rref().rank
        } else {
            self.transpose().rref().rank
        }
    }

    /// Columns spanning the null space, one per free variable, in
    /// free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { matrix: r, pivots, .. } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let mut k = Matrix::zeros(n, free.len());
        for (kc, &f) in free.iter().enumerate() {
            k.set(f, kc, Scalar::one());
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = r.get(pr, f);
                if !v.is_zero() {
                    k.set(pc, kc, -v);
                }
            }
        }
        k
    }

    /// Rows `y` with `y · self = 0`, stacked as a matrix.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Independent columns spanning the column space (the pivot columns).
    pub fn column_space_basis(&self) -> Matrix {
        let piv = self.rref().pivots;
        self.select_columns(&piv)
    }

    /// Some `x` with `self · x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::Shape(format!("solve: A is {}x{} but b has {} rows", self.rows, self.cols, b.rows)));
        }
        let aug = Matrix::hstack(self.rows, &[self, b]);
        let Rref { matrix: r, pivots, .. } = aug.rref();
        let n = self.cols;
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(pr, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(n, &[self, &Matrix::identity(n)]);
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] >= n {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// `self^k` for a square matrix, by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// |det| of a square integral matrix, by fraction-free Bareiss
    /// elimination.
    pub fn int_det_abs(&self) -> Result<BigUint> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).iter().map(|v| v.to_integer()).collect()).collect();
        Ok(bareiss_det(&mut a).abs().to_biguint().expect("non-negative"))
    }

    /// Entries as machine integers, when integral and in range.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.data.iter().map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None }).collect()
    }
}

/// Fraction-free determinant; consumes `a`.
fn bareiss_det(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of_vectors(len: usize, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    Matrix::from_columns(len, vectors).rank()
}

/// Characteristic polynomial of a square matrix, coefficients from the
/// constant term up (monic). Faddeev–LeVerrier; fine for the small blocks
/// this crate feeds it.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let prev_c = coeffs[n - k + 1].clone();
        mk = &m.mul(&mk) + &id.scale(&prev_c);
        let amk = m.mul(&mk);
        coeffs[n - k] = -amk.trace() / int(k as i64);
    }
    coeffs
}

/// Rational roots of a polynomial given by coefficients (constant first).
/// Returns `None` if the integer candidates are too large to enumerate.
pub fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut p: Vec<Scalar> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.len() <= 1 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    // strip x^k
    let lead_zero = p.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Scalar::zero());
        p.drain(..lead_zero);
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    // clear denominators
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Scalar::from_integer(l.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let dp = divisors(&a0)?;
    let dq = divisors(&an)?;
    for num in &dp {
        for den in &dq {
            for s in [1i64, -1] {
                let cand = Scalar::new(num * BigInt::from(s), den.clone());
                if roots.contains(&cand) {
                    continue;
                }
                if eval_poly(&p, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn eval_poly(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}
