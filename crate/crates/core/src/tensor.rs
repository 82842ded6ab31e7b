//! Exact scalars, vectors, matrices and dense rank-2/rank-3 tensors.
//!
//! Everything here is over [`Scalar`], an arbitrary-precision rational, so
//! every "is zero" question has an exact answer. Dimensions are tiny (a
//! handful of basis elements) and all storage is dense and row-major.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; the denominator is always positive and reduced.
pub type Scalar = BigRational;

/// `n / 1`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with `q > 0`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(q: &Scalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A coordinate vector in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Dense row-major matrix. As a linear map, column `j` holds the image of
/// the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix from nested slices; panics on ragged input.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let mut m = Self::zero(rows.len(), C);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = int(x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = v[i].clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (x, y) in self.entries.iter_mut().zip(&other.entries) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .filter(|&j| !v[j].is_zero())
                        .map(|j| &self[(i, j)] * &v[j])
                        .sum()
                })
                .collect(),
        )
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for j in 0..self.cols {
                let x = &self[(row, j)] * &inv;
                self[(row, j)] = x;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for j in 0..self.cols {
                        let x = &f * &self[(row, j)];
                        self[(r, j)] -= x;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                context: "determinant",
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pivot;
                for j in col..n {
                    let x = &f * &m[(col, j)];
                    m[(r, j)] -= x;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotInvertible("matrix is not square".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotInvertible("matrix is singular".into()));
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -&self[(j, i)]))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format_scalar(&self[(i, j)]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Element `Σ coeff[a][b] e_a ⊗ e_b` of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    coeff: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 {
            dim,
            coeff: vec![Scalar::zero(); dim * dim],
        }
    }

    /// Reads the coefficient array from a square matrix (`coeff[a][b] = m[a][b]`).
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                context: "tensor from matrix",
                expected: m.rows(),
                found: m.cols(),
            });
        }
        Ok(Tensor2 {
            dim: m.rows(),
            coeff: m.entries().to_vec(),
        })
    }

    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_matrix(&Matrix::from_ints(rows)).expect("square integer array")
    }

    /// `u ⊗ v`
    pub fn outer(u: &Vector, v: &Vector) -> Self {
        let n = u.dim();
        let mut t = Self::zero(n);
        for a in 0..n {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..n {
                t[(a, b)] = &u[a] * &v[b];
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeff
    }

    pub fn as_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for a in 0..self.dim {
            for b in 0..self.dim {
                m[(a, b)] = self[(a, b)].clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|a| (0..=a).all(|b| self[(a, b)] == -&self[(b, a)]))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|a| (0..a).all(|b| self[(a, b)] == self[(b, a)]))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Tensor2 {
            dim: self.dim,
            coeff: self.coeff.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Tensor2) {
        if c.is_zero() {
            return;
        }
        for (x, y) in self.coeff.iter_mut().zip(&other.coeff) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }
}

impl Index<(usize, usize)> for Tensor2 {
    type Output = Scalar;
    fn index(&self, (a, b): (usize, usize)) -> &Scalar {
        &self.coeff[a * self.dim + b]
    }
}

impl IndexMut<(usize, usize)> for Tensor2 {
    fn index_mut(&mut self, (a, b): (usize, usize)) -> &mut Scalar {
        &mut self.coeff[a * self.dim + b]
    }
}

impl Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

/// Element `Σ coeff[a][b][c] e_a ⊗ e_b ⊗ e_c` of `A ⊗ A ⊗ A`.
///
/// `(A⊗A)⊗A` and `A⊗(A⊗A)` are both flattened to this type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    coeff: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            coeff: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_coeffs(dim: usize, coeff: Vec<Scalar>) -> Result<Self> {
        if coeff.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "rank-3 tensor",
                expected: dim * dim * dim,
                found: coeff.len(),
            });
        }
        Ok(Tensor3 { dim, coeff })
    }

    /// `t ⊗ v`
    pub fn tensor_right(t: &Tensor2, v: &Vector) -> Self {
        let n = t.dim();
        let mut out = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                if t[(a, b)].is_zero() {
                    continue;
                }
                for c in 0..n {
                    out[(a, b, c)] = &t[(a, b)] * &v[c];
                }
            }
        }
        out
    }

    /// `v ⊗ t`
    pub fn tensor_left(v: &Vector, t: &Tensor2) -> Self {
        let n = t.dim();
        let mut out = Self::zero(n);
        for a in 0..n {
            if v[a].is_zero() {
                continue;
            }
            for b in 0..n {
                for c in 0..n {
                    out[(a, b, c)] = &v[a] * &t[(b, c)];
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Tensor3 {
            dim: self.dim,
            coeff: self.coeff.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Tensor3) {
        if c.is_zero() {
            return;
        }
        for (x, y) in self.coeff.iter_mut().zip(&other.coeff) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    fn permuted(&self, target: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    out[target(a, b, c)] = self[(a, b, c)].clone();
                }
            }
        }
        out
    }

    /// `τ ⊗ id`: swaps the first two factors.
    pub fn swap12(&self) -> Tensor3 {
        self.permuted(|a, b, c| (b, a, c))
    }

    /// `id ⊗ τ`: swaps the last two factors.
    pub fn swap23(&self) -> Tensor3 {
        self.permuted(|a, b, c| (a, c, b))
    }

    /// Applies `m` to one tensor factor (`slot` in `0..3`).
    pub fn apply_slot(&self, slot: usize, m: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zero(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let x = &self[(a, b, c)];
                    if x.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let (idx, f) = match slot {
                            0 => ((k, b, c), &m[(k, a)]),
                            1 => ((a, k, c), &m[(k, b)]),
                            _ => ((a, b, k), &m[(k, c)]),
                        };
                        if !f.is_zero() {
                            out[idx] += f * x;
                        }
                    }
                }
            }
        }
        out
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (a, b, c): (usize, usize, usize)) -> &Scalar {
        &self.coeff[(a * self.dim + b) * self.dim + c]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (a, b, c): (usize, usize, usize)) -> &mut Scalar {
        &mut self.coeff[(a * self.dim + b) * self.dim + c]
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

/// Cyclic shift `x ⊗ y ⊗ z ↦ y ⊗ z ⊗ x`.
pub fn xi_permute(t: &Tensor3) -> Tensor3 {
    t.permuted(|a, b, c| (b, c, a))
}

/// Flip `x ⊗ y ↦ y ⊗ x`.
pub fn tau_swap(t: &Tensor2) -> Tensor2 {
    let n = t.dim();
    let mut out = Tensor2::zero(n);
    for a in 0..n {
        for b in 0..n {
            out[(b, a)] = t[(a, b)].clone();
        }
    }
    out
}

/// `t − τ(t)`.
pub fn skew_part(t: &Tensor2) -> Tensor2 {
    t - &tau_swap(t)
}

/// `(M ⊗ N) t`, i.e. `out[a'][b'] = Σ M[a'][a] N[b'][b] t[a][b]`.
pub fn apply_ops2(m: &Matrix, n: &Matrix, t: &Tensor2) -> Result<Tensor2> {
    let d = t.dim();
    for op in [m, n] {
        if op.rows() != d || op.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "apply_ops2 operator",
                expected: d,
                found: op.rows().max(op.cols()),
            });
        }
    }
    // (M t) N^T in matrix form.
    let mt = m.mul(&t.as_matrix()).mul(&n.transpose());
    Tensor2::from_matrix(&mt)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parse_and_format() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_scalar(&frac(-3, 2)), "-3/2");
        assert_eq!(format_scalar(&frac(4, 2)), "2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn xi_on_basis_monomial() {
        let mut t = Tensor3::zero(2);
        t[(0, 1, 0)] = int(1);
        let s = xi_permute(&t);
        let mut want = Tensor3::zero(2);
        want[(1, 0, 0)] = int(1);
        assert_eq!(s, want);
    }

    #[test]
    fn xi_fixes_constant_tensor() {
        let t = Tensor3::from_coeffs(2, vec![int(7); 8]).unwrap();
        assert_eq!(xi_permute(&t), t);
    }

    #[test]
    fn tau_and_skew_basics() {
        let e12 = Tensor2::from_ints(&[[0, 1], [0, 0]]);
        assert_eq!(tau_swap(&e12), Tensor2::from_ints(&[[0, 0], [1, 0]]));
        assert_eq!(skew_part(&e12), Tensor2::from_ints(&[[0, 1], [-1, 0]]));
        let sym = Tensor2::from_ints(&[[1, 2], [2, 5]]);
        assert_eq!(tau_swap(&sym), sym);
        assert!(skew_part(&sym).is_zero());
        let skew = Tensor2::from_ints(&[[0, 3], [-3, 0]]);
        assert_eq!(skew_part(&skew), skew.scale(&int(2)));
    }

    #[test]
    fn apply_ops2_identity_zero_and_mismatch() {
        let t = Tensor2::from_ints(&[[1, -2], [3, 4]]);
        let id = Matrix::identity(2);
        assert_eq!(apply_ops2(&id, &id, &t).unwrap(), t);
        assert!(apply_ops2(&Matrix::zero(2, 2), &id, &t).unwrap().is_zero());
        assert!(matches!(
            apply_ops2(&Matrix::identity(3), &id, &t),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn determinant_inverse_rank() {
        let m = Matrix::from_ints(&[[2, 1], [1, 1]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
        let s = Matrix::from_ints(&[[1, 2], [2, 4]]);
        assert_eq!(s.determinant().unwrap(), int(0));
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_err());
        let d = Matrix::from_ints(&[[2, 0], [0, 1]]);
        assert_eq!(d.inverse().unwrap()[(0, 0)], frac(1, 2));
    }

    #[test]
    fn slot_application_matches_outer_products() {
        let u = Vector::from_ints(&[1, 2]);
        let v = Vector::from_ints(&[0, -1]);
        let w = Vector::from_ints(&[3, 1]);
        let m = Matrix::from_ints(&[[1, 1], [0, 2]]);
        let t = Tensor3::tensor_right(&Tensor2::outer(&u, &v), &w);
        let got = t.apply_slot(1, &m);
        let want = Tensor3::tensor_right(&Tensor2::outer(&u, &m.apply(&v)), &w);
        assert_eq!(got, want);
        let got0 = t.apply_slot(0, &m);
        assert_eq!(
            got0,
            Tensor3::tensor_right(&Tensor2::outer(&m.apply(&u), &v), &w)
        );
        let got2 = t.apply_slot(2, &m);
        assert_eq!(
            got2,
            Tensor3::tensor_left(&u, &Tensor2::outer(&v, &m.apply(&w)))
        );
    }
}
