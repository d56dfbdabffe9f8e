//! Dense exact linear algebra over a prime field F_p.
//!
//! Matrices act on column vectors. Subspaces are stored by the reduced row
//! echelon form of a spanning set, which is unique, so two subspaces are equal
//! exactly when their stored bases are bit-identical.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted. Products of two residues must fit in `u64`.
pub const MAX_PRIME: u32 = 65_521;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if p <= MAX_PRIME && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn inv(p: u32, a: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// `acc += c * v` componentwise.
pub fn axpy(p: u32, acc: &mut [u32], c: u32, v: &[u32]) {
    if c == 0 {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        if x != 0 {
            *a = add(p, *a, mul(p, c, x));
        }
    }
}

pub fn dot(p: u32, a: &[u32], b: &[u32]) -> u32 {
    let acc: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).fold(0, |s, t| (s + t) % p as u64);
    acc as u32
}

/// Number of elements of F_p^n, saturating.
pub fn space_size(p: u32, n: usize) -> u128 {
    let mut s: u128 = 1;
    for _ in 0..n {
        s = s.saturating_mul(p as u128);
    }
    s
}

/// The vector of F_p^n whose base-p digits (least significant first) are `index`.
pub fn vector_from_index(p: u32, n: usize, mut index: u64) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for x in v.iter_mut() {
        *x = (index % p as u64) as u32;
        index /= p as u64;
    }
    v
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix(p={}, {}x{}) [", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    /// Builds a matrix from rows, rejecting unreduced entries.
    pub fn from_rows(p: u32, rows: usize, cols: usize, entries: &[Vec<u64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {rows}x{cols} matrix, got {} rows of lengths {:?}",
                entries.len(),
                entries.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            for &x in row {
                if x >= p as u64 {
                    return Err(Error::UnreducedEntry { value: x, p });
                }
                data.push(x as u32);
            }
        }
        Ok(Matrix { p, rows, cols, data })
    }

    /// Builds a matrix from residues, reducing mod p.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { p, rows, cols, data }
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % p);
            }
        }
        Matrix { p, rows, cols, data }
    }

    pub fn from_row_vectors(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row has wrong length");
            data.extend(r.iter().map(|&x| x % p));
        }
        Matrix { p, rows: rows.len(), cols, data }
    }

    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(p, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column has wrong length");
            for r in 0..rows {
                m.data[r * cols + c] = col[r] % p;
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn to_rows_u64(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|&x| x as u64).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch {:?} * {:?}", self.shape(), other.shape());
        assert_eq!(self.p, other.p, "matrix product over different fields");
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a != 0 {
                    axpy(p, out_row, a, &other.data[k * other.cols..(k + 1) * other.cols]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(self.p, self.row(r), v)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        let c = c % p;
        let data = self.data.iter().map(|&a| mul(p, a, c)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| neg(p, a)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.p, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(p: u32, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn row_reduce(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.row_reduce_in_place();
        (m, pivots)
    }

    fn row_reduce_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in c..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let lead = self.data[r * cols + c];
            if lead != 1 {
                let li = inv(p, lead);
                for k in c..cols {
                    let x = self.data[r * cols + k];
                    self.data[r * cols + k] = mul(p, x, li);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_tail = &pivot_row[c..];
            for chunk in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let f = chunk[c];
                if f != 0 {
                    axpy(p, &mut chunk[c..], neg(p, f), pivot_tail);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.p, n));
        let (r, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    /// `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.row_reduce();
        let mut vectors = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = neg(self.p, r.get(k, f));
            }
            vectors.push(v);
        }
        Subspace::span(self.p, self.cols, vectors)
    }

    /// Column space as a subspace of F_p^rows.
    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.p, self.rows, (0..self.cols).map(|c| self.column(c)))
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }
}

pub fn row_reduce(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.row_reduce()
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    m.kernel()
}

/// Some `x` with `a * x = b`, free variables set to zero.
pub fn solve_linear(a: &Matrix, b: &[u32]) -> Result<Option<Vec<u32>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let p = a.p();
    let aug = a.hstack(&Matrix::from_columns(p, a.rows(), &[b.iter().map(|&x| x % p).collect()]));
    let (r, pivots) = aug.row_reduce();
    if pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![0u32; a.cols()];
    for (k, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(k, a.cols());
    }
    Ok(Some(x))
}

/// A subspace of F_p^n, stored as the RREF of a spanning set.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in F_{}^{}) {:?}", self.dim(), self.p, self.ambient, self.basis.row_vectors())
    }
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { p, ambient, basis: Matrix::zeros(p, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Subspace { p, ambient, basis: Matrix::identity(p, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span<I: IntoIterator<Item = Vec<u32>>>(p: u32, ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vec<u32>> = vectors.into_iter().collect();
        Self::from_matrix(&Matrix::from_row_vectors(p, ambient, &rows))
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.row_reduce();
        let basis = r.submatrix(0, pivots.len(), 0, m.cols());
        Subspace { p: m.p(), ambient: m.cols(), basis, pivots }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p, other.p));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F_p^{} and F_p^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// `v` minus its projection along the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut w: Vec<u32> = v.iter().map(|&x| x % self.p).collect();
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c != 0 {
                axpy(self.p, &mut w, neg(self.p, c), self.basis.row(k));
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc] % self.p).collect())
    }

    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector has wrong length");
        let mut v = vec![0u32; self.ambient];
        for (k, &c) in coords.iter().enumerate() {
            axpy(self.p, &mut v, c, self.basis.row(k));
        }
        v
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Subspace) -> bool {
        self.p == other.p
            && self.ambient == other.ambient
            && (0..other.dim()).all(|k| self.contains_vector(other.basis.row(k)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other).expect("subspace sum");
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Subspace::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn perp(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.p, self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other).expect("subspace intersection");
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        self.perp().sum(&other.perp()).perp()
    }

    /// Non-pivot positions; the unit vectors there represent a basis of the quotient.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn quotient_reps(&self) -> Vec<Vec<u32>> {
        self.complement_positions()
            .into_iter()
            .map(|c| {
                let mut v = vec![0u32; self.ambient];
                v[c] = 1;
                v
            })
            .collect()
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Coordinates of the class of `v` in ambient/self w.r.t. `quotient_reps`.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let w = self.reduce(v);
        self.complement_positions().into_iter().map(|c| w[c]).collect()
    }

    /// The representative of a quotient class given by coordinates.
    pub fn quotient_lift(&self, coords: &[u32]) -> Vec<u32> {
        let positions = self.complement_positions();
        assert_eq!(coords.len(), positions.len(), "quotient coordinate vector has wrong length");
        let mut v = vec![0u32; self.ambient];
        for (c, &x) in positions.into_iter().zip(coords) {
            v[c] = x % self.p;
        }
        v
    }

    /// Image of the subspace under a linear map given by a matrix acting on columns.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map does not act on this space");
        Subspace::span(self.p, m.rows(), (0..self.dim()).map(|k| m.mul_vec(self.basis.row(k))))
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_stable_under(&self, m: &Matrix) -> bool {
        (0..self.dim()).all(|k| self.contains_vector(&m.mul_vec(self.basis.row(k))))
    }
}

/// Result of [`subspace_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePair {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether the second argument lies in the first.
    pub contains: bool,
    /// Representatives of a basis of ambient/U.
    pub quotient_reps: Vec<Vec<u32>>,
}

pub fn subspace_algebra(u: &Subspace, w: &Subspace) -> Result<SubspacePair> {
    u.check_ambient(w)?;
    Ok(SubspacePair {
        sum: u.sum(w),
        intersection: u.intersection(w),
        contains: u.contains(w),
        quotient_reps: u.quotient_reps(),
    })
}

/// Every subspace of F_p^n, by enumerating RREF matrices. Test-scale only.
pub fn all_subspaces(p: u32, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pv = &pivots;
                    (pv[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let count = space_size(p, free.len()) as u64;
            for idx in 0..count {
                let vals = vector_from_index(p, free.len(), idx);
                let mut m = Matrix::zeros(p, k, n);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, 1);
                }
                for (&(r, c), &x) in free.iter().zip(&vals) {
                    m.set(r, c, x);
                }
                out.push(Subspace::from_matrix(&m));
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_row_vectors(p, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn row_reduce_examples() {
        let (r, piv) = m(2, &[&[0]]).row_reduce();
        assert_eq!(r, m(2, &[&[0]]));
        assert!(piv.is_empty());

        let id = Matrix::identity(3, 2);
        assert_eq!(id.row_reduce(), (id.clone(), vec![0, 1]));

        let (r, piv) = m(2, &[&[1, 1], &[1, 1]]).row_reduce();
        assert_eq!(r, m(2, &[&[1, 1], &[0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_linear(&Matrix::identity(2, 2), &[1, 0]).unwrap(), Some(vec![1, 0]));
        assert_eq!(solve_linear(&m(2, &[&[1, 1]]), &[1]).unwrap(), Some(vec![1, 0]));
        assert_eq!(solve_linear(&m(2, &[&[0, 0]]), &[1]).unwrap(), None);
        assert!(matches!(solve_linear(&m(2, &[&[1, 1]]), &[1, 0]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2, 3).kernel().is_zero());
        assert_eq!(m(2, &[&[1, 1]]).kernel(), Subspace::span(2, 2, vec![vec![1, 1]]));
        assert_eq!(Matrix::zeros(3, 2, 2).kernel(), Subspace::full(3, 2));
    }

    #[test]
    fn subspace_algebra_examples() {
        let full = Subspace::full(2, 2);
        let r = subspace_algebra(&full, &full).unwrap();
        assert_eq!(r.sum, full);
        assert_eq!(r.intersection, full);
        assert!(r.contains);

        let u = Subspace::span(2, 2, vec![vec![1, 0]]);
        let w = Subspace::span(2, 2, vec![vec![0, 1]]);
        let r = subspace_algebra(&u, &w).unwrap();
        assert_eq!(r.sum, full);
        assert!(r.intersection.is_zero());
        assert!(!r.contains);
        assert_eq!(r.quotient_reps, vec![vec![0, 1]]);

        let u = Subspace::span(2, 2, vec![vec![1, 1]]);
        let w = Subspace::span(2, 2, vec![vec![1, 0]]);
        let r = subspace_algebra(&u, &w).unwrap();
        assert_eq!(r.sum.dim() + r.intersection.dim(), 2);
        assert_eq!(r.intersection.dim(), 0);

        let other = Subspace::full(2, 3);
        assert!(subspace_algebra(&u, &other).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let a = m(5, &[&[1, 2], &[3, 4]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), Matrix::identity(5, 2));
        assert!(m(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn quotient_coordinates() {
        let u = Subspace::span(3, 3, vec![vec![1, 2, 0]]);
        assert_eq!(u.complement_positions(), vec![1, 2]);
        assert_eq!(u.quotient_coords(&[1, 2, 0]), vec![0, 0]);
        let v = vec![2, 0, 1];
        let back = u.quotient_lift(&u.quotient_coords(&v));
        assert!(u.contains_vector(&back.iter().zip(&v).map(|(&a, &b)| sub(3, a, b)).collect::<Vec<_>>()));
    }

    #[test]
    fn all_subspaces_counts() {
        // Gaussian binomials: F_2^3 has 1 + 7 + 7 + 1 subspaces, F_3^2 has 1 + 4 + 1.
        assert_eq!(all_subspaces(2, 3).len(), 16);
        assert_eq!(all_subspaces(3, 2).len(), 6);
        assert_eq!(all_subspaces(2, 0).len(), 1);
    }
}
