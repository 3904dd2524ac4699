//! Small dense matrices over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape("matrix rows must all have length equal to the row count".into()));
        }
        Ok(DenseMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer convenience constructor, mostly for tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DenseMatrix { dim: self.dim, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// `self + c I`.
    pub fn add_identity(&self, c: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m[(i, i)] += c;
        }
        m
    }

    /// Square sub-block starting at `(start, start)`.
    pub fn trailing_block(&self, start: usize) -> Self {
        let dim = self.dim - start;
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = self[(start + i, start + j)].clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Vector-matrix product `v^T M`.
    pub fn left_mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination with the first nonzero pivot.
    pub fn invert(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular { step: col })?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].recip().expect("nonzero pivot");
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &f);
                inv.sub_row_multiple(r, col, &f);
            }
        }
        Ok(inv)
    }

    /// `T^{-1} self T`.
    pub fn conjugate_by_inverse_left(&self, t: &DenseMatrix) -> Result<Self> {
        Ok(&(&t.invert()? * self) * t)
    }

    /// `T self T^{-1}`.
    pub fn conjugate_by_inverse_right(&self, t: &DenseMatrix) -> Result<Self> {
        Ok(&(t * self) * &t.invert()?)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Rows are first scaled to integers by the lcm of their denominators;
    /// elimination then runs over `BigInt` with exact divisions only.
    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = self
            .rows()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = Rational::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// `det(tI + self)` for a dense matrix, by evaluating the determinant
    /// at `dim + 1` nodes `0, 1, -1, 2, -2, ...` and interpolating.
    pub fn shifted_charpoly(&self) -> Poly {
        let points: Vec<(Rational, Rational)> = oracle_nodes(self.dim + 1)
            .into_iter()
            .map(|t0| {
                let det = self.add_identity(&t0).determinant();
                (t0, det)
            })
            .collect();
        Poly::interpolate(&points).expect("oracle nodes are distinct")
    }

    /// First entry, in row-major order, where two matrices differ.
    pub fn first_difference(&self, other: &DenseMatrix) -> Option<(usize, usize)> {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.dim, k % self.dim))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rational) {
        for j in 0..self.dim {
            self[(r, j)] *= c;
        }
    }

    /// `row[r] -= f * row[src]`
    fn sub_row_multiple(&mut self, r: usize, src: usize, f: &Rational) {
        for j in 0..self.dim {
            let d = f * &self[(src, j)];
            self[(r, j)] -= &d;
        }
    }
}

/// Deterministic distinct nodes `0, 1, -1, 2, -2, ...`.
pub fn oracle_nodes(count: usize) -> Vec<Rational> {
    (0..count as i64)
        .map(|k| {
            let m = (k + 1) / 2;
            Rational::from(if k % 2 == 1 { m } else { -m })
        })
        .collect()
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DenseMatrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for DenseMatrix {
    /// Array of rows of canonical rational strings.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}
