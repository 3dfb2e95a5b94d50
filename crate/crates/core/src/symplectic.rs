//! The standard symplectic structure on `K^{2n}`.
//!
//! The form is `σ(x, y) = xᵀΩy` with `Ω = [[0, I], [-I, 0]]`. A matrix `C`
//! is symplectic when `CᵀΩC = Ω`; its first `n` columns `u` and last `n`
//! columns `w'` then satisfy `σ(u_i, w'_j) = δ_ij`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field, Scalar};
use crate::linalg::{Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    field: Field,
    n: usize,
    omega: Mat,
}

/// Position of a subspace relative to the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Symplectic,
    Isotropic,
    Lagrangian,
    Generic,
}

impl SymplecticSpace {
    pub fn new(field: &Field, n: usize) -> Result<SymplecticSpace> {
        if n == 0 {
            return Err(Error::DimensionMismatch("n must be positive".into()));
        }
        let mut omega = Mat::zeros(field, 2 * n, 2 * n);
        for i in 0..n {
            omega.set(i, n + i, field.one());
            omega.set(n + i, i, field.neg(&field.one()));
        }
        Ok(SymplecticSpace {
            field: field.clone(),
            n,
            omega,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn omega(&self) -> &Mat {
        &self.omega
    }

    /// The same space over a field containing this one.
    pub fn over(&self, field: &Field) -> SymplecticSpace {
        SymplecticSpace::new(field, self.n).expect("n is positive")
    }

    /// `σ(x, y)` without shape checks.
    pub fn form(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let n = self.n;
        (0..n).fold(f.zero(), |acc, i| {
            let t = f.sub(&f.mul(&x[i], &y[n + i]), &f.mul(&x[n + i], &y[i]));
            f.add(&acc, &t)
        })
    }

    pub fn form_eval(&self, x: &[Elem], y: &[Elem]) -> Result<Scalar> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Scalar::new(&self.field, self.form(x, y))
    }

    fn check_vec(&self, x: &[Elem]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    fn check_mat(&self, a: &Mat) -> Result<()> {
        if a.rows() != self.dim() || a.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a space of dimension {}",
                a.rows(),
                a.cols(),
                self.dim()
            )));
        }
        if a.field() != &self.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch("subspace ambient dimension".into()));
        }
        Ok(())
    }

    /// `AᵀΩ = ΩA`.
    pub fn is_self_adjoint(&self, a: &Mat) -> Result<bool> {
        self.check_mat(a)?;
        Ok(&a.transpose() * &self.omega == &self.omega * a)
    }

    /// `-ΩAᵀΩ`, the unique `g` with `σ(gx, y) = σ(x, Ay)`.
    pub fn adjoint(&self, a: &Mat) -> Result<Mat> {
        self.check_mat(a)?;
        Ok(-&(&(&self.omega * &a.transpose()) * &self.omega))
    }

    /// `CᵀΩC = Ω`.
    pub fn is_symplectic_matrix(&self, c: &Mat) -> Result<bool> {
        self.check_mat(c)?;
        Ok(&(&c.transpose() * &self.omega) * c == self.omega)
    }

    /// Inverse of a symplectic matrix, `-ΩCᵀΩ`.
    pub fn symplectic_inverse(&self, c: &Mat) -> Mat {
        -&(&(&self.omega * &c.transpose()) * &self.omega)
    }

    /// Rows `σ(·, v)` for each basis vector `v` of `s`.
    fn pairing_rows(&self, vs: &[Vec<Elem>]) -> Mat {
        let n = self.n;
        let f = &self.field;
        // σ(x, v) = Σ x_i v_{n+i} - x_{n+i} v_i
        Mat::from_fn(f, vs.len(), 2 * n, |r, j| {
            if j < n {
                vs[r][n + j].clone()
            } else {
                f.neg(&vs[r][j - n])
            }
        })
    }

    pub fn symplectic_complement(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        if s.dim() == 0 {
            return Ok(Subspace::full(&self.field, self.dim()));
        }
        Ok(Subspace::kernel(&self.pairing_rows(s.basis())))
    }

    pub fn classify_subspace(&self, s: &Subspace) -> Result<SubspaceKind> {
        let comp = self.symplectic_complement(s)?;
        Ok(if s.dim() > 0 && s.intersect(&comp).dim() == 0 {
            SubspaceKind::Symplectic
        } else if comp.contains_subspace(s) {
            if s.dim() == self.n {
                SubspaceKind::Lagrangian
            } else {
                SubspaceKind::Isotropic
            }
        } else if s.dim() == 0 {
            SubspaceKind::Isotropic
        } else {
            SubspaceKind::Generic
        })
    }

    /// Gram matrix `G_ij = σ(x_i, y_j)`.
    pub fn gram(&self, xs: &[Vec<Elem>], ys: &[Vec<Elem>]) -> Mat {
        Mat::from_fn(&self.field, xs.len(), ys.len(), |i, j| self.form(&xs[i], &ys[j]))
    }

    fn is_isotropic(&self, vs: &[Vec<Elem>]) -> bool {
        self.gram(vs, vs).is_zero()
    }

    /// For isotropic `u` and `w` spanning a symplectic subspace with
    /// `dim u = dim w`, the canonical `u` basis together with the vectors
    /// `w'_j ∈ span(w)` satisfying `σ(u_i, w'_j) = δ_ij`.
    pub fn darboux_in_subspace(
        &self,
        u: &Subspace,
        w: &Subspace,
    ) -> Result<(Vec<Vec<Elem>>, Vec<Vec<Elem>>)> {
        self.check_subspace(u)?;
        self.check_subspace(w)?;
        if u.dim() != w.dim() || !self.is_isotropic(u.basis()) || !self.is_isotropic(w.basis()) {
            return Err(Error::NotLagrangian);
        }
        let g = self.gram(u.basis(), w.basis());
        let ginv = g.inverse().map_err(|_| Error::NotComplementary)?;
        let wb = w.basis_matrix();
        let dual = &wb * &ginv;
        let ws = (0..dual.cols()).map(|j| dual.col(j)).collect();
        Ok((u.basis().to_vec(), ws))
    }

    /// Symplectic `C = [u | w']` adapted to complementary `a`-invariant
    /// lagrangians. `C⁻¹AC = diag(B, Bᵀ)` where `B` is `a` on `U`.
    pub fn darboux_from_lagrangian_pair(&self, a: &Mat, u: &Subspace, w: &Subspace) -> Result<Mat> {
        self.check_mat(a)?;
        for s in [u, w] {
            if self.classify_subspace(s)? != SubspaceKind::Lagrangian {
                return Err(Error::NotLagrangian);
            }
        }
        if u.sum(w).dim() != self.dim() {
            return Err(Error::NotComplementary);
        }
        if !u.is_invariant(a) || !w.is_invariant(a) {
            return Err(Error::NotInvariant);
        }
        let (us, ws) = self.darboux_in_subspace(u, w)?;
        let cols: Vec<Vec<Elem>> = us.into_iter().chain(ws).collect();
        Ok(Mat::from_columns(&self.field, self.dim(), &cols))
    }

    /// Random matrix with entries in `[-2, 2]` mapped into the field.
    fn small_matrix(&self, rng: &mut ChaCha8Rng) -> Mat {
        Mat::from_fn(&self.field, self.n, self.n, |_, _| {
            self.field.from_i64(rng.gen_range(-2..=2))
        })
    }

    fn small_symmetric(&self, rng: &mut ChaCha8Rng) -> Mat {
        let m = self.small_matrix(rng);
        Mat::from_fn(&self.field, self.n, self.n, |i, j| {
            if i <= j {
                m.get(i, j).clone()
            } else {
                m.get(j, i).clone()
            }
        })
    }

    /// A random generator; the word length is uniform in `0..=MAX_WORD`.
    pub fn random_word(&self, rng: &mut ChaCha8Rng) -> Vec<Generator> {
        let len = rng.gen_range(0..=MAX_WORD);
        (0..len)
            .map(|_| match rng.gen_range(0..4) {
                0 => loop {
                    let s = self.small_matrix(rng);
                    if s.rank() == self.n {
                        break Generator::Scale(s);
                    }
                },
                1 => Generator::Upper(self.small_symmetric(rng)),
                2 => Generator::Lower(self.small_symmetric(rng)),
                _ => Generator::Omega,
            })
            .collect()
    }

    pub fn word_matrix(&self, word: &[Generator]) -> Mat {
        word.iter()
            .fold(Mat::identity(&self.field, self.dim()), |acc, g| &acc * &g.matrix(self))
    }

    /// Seeded random symplectic matrix.
    pub fn random_symplectic(&self, seed: u64) -> Mat {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = self.random_word(&mut rng);
        self.word_matrix(&word)
    }
}

/// Longest generator word drawn by [`SymplecticSpace::random_word`].
pub const MAX_WORD: usize = 6;

/// Generators of the symplectic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `diag(S, S⁻ᵀ)` for invertible `S`.
    Scale(Mat),
    /// `[[I, M], [0, I]]` for symmetric `M`.
    Upper(Mat),
    /// `[[I, 0], [N, I]]` for symmetric `N`.
    Lower(Mat),
    Omega,
}

impl Generator {
    pub fn matrix(&self, space: &SymplecticSpace) -> Mat {
        let f = space.field();
        let n = space.n();
        let id = Mat::identity(f, n);
        let z = Mat::zeros(f, n, n);
        match self {
            Generator::Scale(s) => {
                let sit = s.inverse().expect("invertible generator").transpose();
                Mat::block2(s, &z, &z, &sit)
            }
            Generator::Upper(m) => Mat::block2(&id, m, &z, &id),
            Generator::Lower(m) => Mat::block2(&id, &z, m, &id),
            Generator::Omega => space.omega().clone(),
        }
    }
}
