use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, ScalarText};
use crate::poly::Poly;

/// Dense row-major matrix over one field. Arithmetic operators panic on
/// shape mismatch; the algorithms below report errors instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| self.field.format(e)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`Mat::rref`]: `reduced = transform * input`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub rank: usize,
    pub transform: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: &Elem) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Elem> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|e| !field.contains(e)) {
            return Err(Error::Parse(format!("entry {bad:?} is not in the field")));
        }
        Ok(Mat {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(field: &Field, dim: usize, cols: &[Vec<Elem>]) -> Mat {
        Mat::from_fn(field, dim, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Mat::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: &Field, blocks: &[Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `[[a, b], [c, d]]`.
    pub fn block2(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols);
        let mut out = Mat::zeros(&a.field, a.rows + c.rows, a.cols + b.cols);
        out.set_block(0, 0, a);
        out.set_block(0, a.cols, b);
        out.set_block(a.rows, 0, c);
        out.set_block(a.rows, a.cols, d);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn scale(&self, c: &Elem) -> Mat {
        self.map(|e| self.field.mul(e, c))
    }

    pub fn map(&self, f: impl Fn(&Elem) -> Elem) -> Mat {
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Same shape with entries in another field.
    pub fn map_into(&self, field: &Field, f: impl Fn(&Elem) -> Elem) -> Mat {
        Mat {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|i| dot(f, self.row(i), v))
            .collect()
    }

    pub fn pow(&self, k: usize) -> Mat {
        assert!(self.is_square());
        let mut r = Mat::identity(&self.field, self.rows);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// `self - c * I`.
    pub fn shift(&self, c: &Elem) -> Mat {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = self.field.sub(m.get(i, i), c);
            m.set(i, i, v);
        }
        m
    }

    /// Gauss-Jordan elimination; the pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let mut t = Mat::identity(&self.field, self.rows);
        let (reduced, rank, pivots) = self.eliminate(Some(&mut t));
        Rref {
            reduced,
            rank,
            transform: t,
            pivots,
        }
    }

    /// Reduced form, rank and pivot columns, applying every row operation
    /// to `companion` as well when given.
    pub(crate) fn eliminate(&self, mut companion: Option<&mut Mat>) -> (Mat, usize, Vec<usize>) {
        let f = &self.field;
        let mut r = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !f.is_zero(r.get(i, col))) else {
                continue;
            };
            r.swap_rows(row, p);
            let inv = f.inv(r.get(row, col)).expect("nonzero pivot");
            r.scale_row(row, &inv);
            if let Some(t) = companion.as_deref_mut() {
                t.swap_rows(row, p);
                t.scale_row(row, &inv);
            }
            for i in 0..self.rows {
                if i != row && !f.is_zero(r.get(i, col)) {
                    let c = f.neg(r.get(i, col));
                    r.add_row_multiple(i, row, &c);
                    if let Some(t) = companion.as_deref_mut() {
                        t.add_row_multiple(i, row, &c);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (r, row, pivots)
    }

    pub fn rank(&self) -> usize {
        self.eliminate(None).1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: &Elem) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// row_i += c * row_src
    fn add_row_multiple(&mut self, i: usize, src: usize, c: &Elem) {
        for j in 0..self.cols {
            let v = self.field.add(self.get(i, j), &self.field.mul(c, self.get(src, j)));
            self.set(i, j, v);
        }
    }

    /// Basis of `{x : self * x = 0}` as vectors, one per free column.
    pub(crate) fn kernel_vectors(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (reduced, _, pivots) = self.eliminate(None);
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(reduced.get(r, free));
            }
            out.push(x);
        }
        out
    }

    /// The solution of `self * x = b` whose free variables are zero.
    pub fn solve(&self, b: &[Elem]) -> Result<Vec<Elem>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let aug = Mat::from_fn(f, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (reduced, _, pivots) = aug.eliminate(None);
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(r, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let rr = self.rref();
        if rr.rank < self.rows {
            return Err(Error::DivisionByZero);
        }
        Ok(rr.transform)
    }

    /// `det(t I - self)` by the division-free Berkowitz recurrence.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        // Coefficients high degree first.
        let mut p = vec![f.one()];
        for r in 0..n {
            // Leading principal block of size r + 1 = [[A_r, c], [row, a]].
            let a = self.get(r, r);
            let column: Vec<Elem> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<Elem> = (0..r).map(|j| self.get(r, j).clone()).collect();
            // Toeplitz first column: 1, -a, -row*c, -row*A_r*c, ...
            let mut toeplitz = vec![f.one(), f.neg(a)];
            let mut v = column;
            for _ in 0..r {
                toeplitz.push(f.neg(&dot(f, &row, &v)));
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(f.zero(), |acc, j| {
                            f.add(&acc, &f.mul(self.get(i, j), &v[j]))
                        })
                    })
                    .collect();
            }
            let mut next = vec![f.zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    if i >= j {
                        *slot = f.add(slot, &f.mul(&toeplitz[i - j], pj));
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(Poly::new(f, p))
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        if p.field() != &self.field {
            return Err(Error::MixedFields);
        }
        let mut acc = Mat::zeros(&self.field, self.rows, self.cols);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..self.rows {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }

    /// Entries embedded into an extension whose base is this matrix's field.
    pub fn extend_scalars(&self, ext: &Field) -> Result<Mat> {
        if ext.base() != Some(&self.field) {
            return Err(Error::IncompatibleFields);
        }
        Ok(self.map_into(ext, |e| ext.embed(e)))
    }

    /// Inverse of [`Mat::extend_scalars`] for matrices whose entries all lie
    /// in the base field.
    pub fn restrict_entries(&self) -> Result<Mat> {
        let base = self.field.base().ok_or(Error::IncompatibleFields)?.clone();
        let data = self
            .data
            .iter()
            .map(|e| self.field.unembed(e).ok_or(Error::IncompatibleFields))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            field: base,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn encode(&self) -> Vec<Vec<ScalarText>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| self.field.encode(e)).collect())
            .collect()
    }

    pub fn decode(field: &Field, rows: &[Vec<ScalarText>]) -> Result<Mat> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|t| field.decode(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows(field, rows)
    }
}

pub(crate) fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        debug_assert_eq!(self.field, rhs.field);
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, rhs.get(k, j)));
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;

    fn add(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;

    fn sub(self, rhs: &Mat) -> Mat {
        self + &(-rhs)
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        self.map(|e| self.field.neg(e))
    }
}
