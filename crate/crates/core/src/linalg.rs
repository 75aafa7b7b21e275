//! Exact dense linear algebra over an exact field.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// An exact ordered field: everything the elimination routines need.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Send
    + Sync
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;
    /// Sign in {-1, 0, 1}.
    fn signum(&self) -> i8;
}

impl Field for Scalar {
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn signum(&self) -> i8 {
        self.sign()
    }
}

impl Field for Rational {
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn signum(&self) -> i8 {
        use num_traits::Signed;
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = F::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>]) -> Self {
        let n = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
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

    pub fn as_flat(&self) -> &[F] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c).collect(),
        }
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + &self[(i, i)];
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + &(a.clone() * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self other - other self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Copy with rows/columns restricted to the given ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, i) in rows.clone().enumerate() {
            for (b, j) in cols.clone().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Stacks rows of `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form and pivot columns; pivots are chosen as the
    /// first nonzero entry of each column.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].try_inv().expect("nonzero pivot");
            let nz: Vec<usize> = (c..cols).filter(|&j| !self[(r, j)].is_zero()).collect();
            for &j in &nz {
                self[(r, j)] = self[(r, j)].clone() * &inv;
            }
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for &j in &nz {
                    let t = f.clone() * &self[(r, j)];
                    self[(i, j)] = self[(i, j)].clone() - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : self v = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut vecs = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r[(k, free)].clone();
            }
            vecs.push(v);
        }
        Subspace::span(n, &vecs)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0..n, n..2 * n))
    }

    /// Determinant by elimination.
    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            det = det * &m[(c, c)];
            let inv = m[(c, c)].try_inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let t = f.clone() * &m[(c, j)];
                    m[(i, j)] = m[(i, j)].clone() - &t;
                }
            }
        }
        det
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Inertia `(negative, zero, positive)` of a symmetric matrix by exact
    /// symmetric Gaussian reduction.
    pub fn signature(&self) -> Result<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let (mut neg, mut pos) = (0, 0);
        let mut i = 0;
        while i < n {
            if a[(i, i)].is_zero() {
                if let Some(k) = (i + 1..n).find(|&k| !a[(k, k)].is_zero()) {
                    a.swap_sym(i, k);
                } else if let Some((p, q)) = (i..n)
                    .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
                    .find(|&(p, q)| !a[(p, q)].is_zero())
                {
                    // All remaining diagonal entries vanish: adding row/col q
                    // to p makes the (p, p) entry 2 a_pq, which is nonzero.
                    a.add_sym(p, q);
                    a.swap_sym(i, p);
                } else {
                    break;
                }
            }
            let d = a[(i, i)].clone();
            match d.signum() {
                1 => pos += 1,
                -1 => neg += 1,
                _ => unreachable!(),
            }
            let inv = d.try_inv().expect("nonzero pivot");
            for k in i + 1..n {
                if a[(k, i)].is_zero() {
                    continue;
                }
                let f = a[(k, i)].clone() * &inv;
                for j in i..n {
                    let t = f.clone() * &a[(i, j)];
                    a[(k, j)] = a[(k, j)].clone() - &t;
                }
                for j in i..n {
                    let t = f.clone() * &a[(j, i)];
                    a[(j, k)] = a[(j, k)].clone() - &t;
                }
            }
            i += 1;
        }
        Ok((neg, n - neg - pos, pos))
    }

    fn swap_sym(&mut self, p: usize, q: usize) {
        if p == q {
            return;
        }
        let n = self.cols;
        for j in 0..n {
            self.data.swap(p * n + j, q * n + j);
        }
        for i in 0..self.rows {
            self.data.swap(i * n + p, i * n + q);
        }
    }

    fn add_sym(&mut self, p: usize, q: usize) {
        let n = self.cols;
        for j in 0..n {
            let t = self[(p, j)].clone() + &self[(q, j)];
            self[(p, j)] = t;
        }
        for i in 0..self.rows {
            let t = self[(i, p)].clone() + &self[(i, q)];
            self[(i, p)] = t;
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b;
                    out[(i, j)] = out[(i, j)].clone() + &t;
                }
            }
        }
        out
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                let c = &cells[i * self.cols + j];
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>w$}", c, w = w)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// A linear subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their stored data
/// are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vecs: Vec<Vec<F>> = (0..ambient).map(|i| unit_vec(ambient, i)).collect();
        Self::span(ambient, &vecs)
    }

    pub fn span(ambient: usize, vecs: &[Vec<F>]) -> Self {
        if vecs.is_empty() {
            return Self::zero(ambient);
        }
        for v in vecs {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
        }
        let m = Matrix::from_rows(vecs.to_vec());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|k| r.row(k).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: n,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rem = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rem.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = r.clone() - &(c.clone() * x);
                }
            }
        }
        rem.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn try_contains(&self, v: &[F]) -> Result<bool> {
        self.check(v.len())?;
        Ok(self.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        other.check(self.ambient)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other.ambient)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Self::span(self.ambient, &vecs))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // Solve sum a_k x_k = sum b_l y_l; the x-part of each solution spans the intersection.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|y| y.iter().map(|c| -c.clone()).collect()));
        let k = Matrix::from_cols(&cols).kernel();
        let vecs: Vec<Vec<F>> = k
            .basis()
            .iter()
            .map(|sol| combine(&self.basis, &sol[..self.basis.len()], self.ambient))
            .collect();
        Ok(Self::span(self.ambient, &vecs))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other.ambient)?;
        Ok(self == other)
    }

    /// Adds vectors, returning the enlarged span.
    pub fn extend(&self, vecs: &[Vec<F>]) -> Self {
        let mut all = self.basis.clone();
        all.extend(vecs.iter().cloned());
        Self::span(self.ambient, &all)
    }
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// `sum_k c_k v_k`.
pub fn combine<F: Field>(vecs: &[Vec<F>], coeffs: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (v, c) in vecs.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.clone() + &(c.clone() * x);
            }
        }
    }
    out
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + &(x.clone() * y);
        }
    }
    acc
}

/// Bilinear form `u^T G v`.
pub fn bilinear<F: Field>(g: &Matrix<F>, u: &[F], v: &[F]) -> F {
    dot(u, &g.mul_vec(v))
}
