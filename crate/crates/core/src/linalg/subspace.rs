use crate::error::{Error, Result};
use crate::field::{Elem, Field};

use super::matrix::Mat;

/// A subspace of `K^ambient`, stored as the nonzero rows of a reduced row
/// echelon basis so that equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_vectors(field, ambient, &Mat::identity(field, ambient).row_vectors())
    }

    /// Span of the given vectors.
    pub fn from_vectors(field: &Field, ambient: usize, vs: &[Vec<Elem>]) -> Subspace {
        assert!(vs.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let m = Mat::from_fn(field, vs.len(), ambient, |i, j| vs[i][j].clone());
        let (reduced, rank, pivots) = m.eliminate(None);
        Subspace {
            field: field.clone(),
            ambient,
            basis: reduced.row_vectors().into_iter().take(rank).collect(),
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Mat) -> Subspace {
        Subspace::from_vectors(m.field(), m.rows(), &m.transpose().row_vectors())
    }

    /// Null space of `m`.
    pub fn kernel(m: &Mat) -> Subspace {
        Subspace::from_vectors(m.field(), m.cols(), &m.kernel_vectors())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_columns(&self.field, self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.field;
        let c: Vec<Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![f.zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            for (r, bj) in recon.iter_mut().zip(b) {
                *r = f.add(r, &f.mul(ci, bj));
            }
        }
        (recon.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let vs: Vec<Vec<Elem>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors(&self.field, self.ambient, &vs)
    }

    /// Linear functionals vanishing on the subspace, as row vectors.
    pub fn annihilator(&self) -> Vec<Vec<Elem>> {
        let m = Mat::from_fn(&self.field, self.dim(), self.ambient, |i, j| {
            self.basis[i][j].clone()
        });
        m.kernel_vectors()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let eqs: Vec<Vec<Elem>> = self
            .annihilator()
            .into_iter()
            .chain(other.annihilator())
            .collect();
        let m = Mat::from_fn(&self.field, eqs.len(), self.ambient, |i, j| eqs[i][j].clone());
        if eqs.is_empty() {
            return Subspace::full(&self.field, self.ambient);
        }
        Subspace::kernel(&m)
    }

    /// Image under `m`.
    pub fn image(&self, m: &Mat) -> Subspace {
        let vs: Vec<Vec<Elem>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(&self.field, m.rows(), &vs)
    }

    pub fn is_invariant(&self, m: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this subspace, in the stored basis.
    pub fn restrict_operator(&self, m: &Mat) -> Result<Mat> {
        if !m.is_square() || m.rows() != self.ambient {
            return Err(Error::DimensionMismatch("operator does not act on the ambient space".into()));
        }
        let mut cols = Vec::with_capacity(self.dim());
        for v in &self.basis {
            cols.push(self.coordinates(&m.mul_vec(v)).ok_or(Error::NotInvariant)?);
        }
        Ok(Mat::from_columns(&self.field, self.dim(), &cols))
    }

    /// Entries embedded into an extension field.
    pub fn extend_scalars(&self, ext: &Field) -> Result<Subspace> {
        if ext.base() != Some(&self.field) {
            return Err(Error::IncompatibleFields);
        }
        let vs: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(|e| ext.embed(e)).collect())
            .collect();
        Ok(Subspace::from_vectors(ext, self.ambient, &vs))
    }
}

/// Given linear equations with coefficients in an extension `E` of `K`,
/// return the `K`-subspace of `K^ambient` they cut out. Each equation splits
/// into one `K`-equation per coordinate of `E` over `K`.
pub fn restrict_scalars_kernel(ext: &Field, ambient: usize, eqs: &[Vec<Elem>]) -> Result<Subspace> {
    let base = ext.base().ok_or(Error::IncompatibleFields)?.clone();
    let deg = ext.degree();
    let mut rows = Vec::with_capacity(eqs.len() * deg);
    for eq in eqs {
        if eq.len() != ambient {
            return Err(Error::DimensionMismatch("equation length".into()));
        }
        for k in 0..deg {
            rows.push(
                eq.iter()
                    .map(|e| ext.coefficients(e)[k].clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(&base, ambient));
    }
    let m = Mat::from_fn(&base, rows.len(), ambient, |i, j| rows[i][j].clone());
    Ok(Subspace::kernel(&m))
}
