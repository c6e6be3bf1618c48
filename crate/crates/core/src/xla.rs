//! Dense exact linear algebra over `Q(i)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

pub type Vector = Vec<GaussianRational>;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} for {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} for {rows} rows",
                    c.len()
                )));
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &ExactMatrix,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<ExactMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> ExactMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for k in 0..self.rows.min(self.cols) {
            acc += self.get(k, k);
        }
        acc
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {} columns",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// If the matrix is `c * I`, returns `c`.
    pub fn scalar_value(&self) -> Option<GaussianRational> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(GaussianRational::zero());
        }
        let c = self.get(0, 0).clone();
        for r in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(r, k);
                if (r == k && *v != c) || (r != k && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

/// Reduced row echelon form and pivot columns. The pivot in each column
/// is the first nonzero entry at or below the current row.
pub fn rref(a: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = m.get(row, col).inv().expect("nonzero pivot");
        for c in col..m.cols {
            let v = m.get(row, c);
            if !v.is_zero() {
                let scaled = v * &inv;
                m.set(row, c, scaled);
            }
        }
        let pivot_row: Vec<GaussianRational> = m.row(row).to_vec();
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..m.cols {
                if !pivot_row[c].is_zero() {
                    let v = m.get(r, c) - &(&factor * &pivot_row[c]);
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank(a: &ExactMatrix) -> usize {
    rref(a).1.len()
}

/// Basis of `{v : A v = 0}`, one vector per free column (that entry 1).
pub fn nullspace(a: &ExactMatrix) -> Vec<Vector> {
    let (r, pivots) = rref(a);
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..a.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![GaussianRational::zero(); a.cols];
            v[free] = GaussianRational::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free);
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when inconsistent. Free
/// variables are set to zero.
pub fn solve(a: &ExactMatrix, b: &[GaussianRational]) -> Result<Option<Vector>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "rhs of length {} for {} rows",
            b.len(),
            a.rows
        )));
    }
    let mut aug = ExactMatrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols, b[r].clone());
    }
    let (m, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![GaussianRational::zero(); a.cols];
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = m.get(k, a.cols).clone();
    }
    Ok(Some(x))
}

/// Incrementally maintained reduced basis of a span.
#[derive(Clone, Debug, Default)]
pub struct SpanBuilder {
    dim: usize,
    rows: Vec<(usize, Vector)>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[GaussianRational]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.reduce(v).iter().all(GaussianRational::is_zero)
    }

    /// Adds `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}
