use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{restrict_scalars_kernel, Mat, Subspace};
use crate::poly::Poly;
use crate::symplectic::SymplecticSpace;

use super::assembly::Assembly;
use super::cyclic::{cyclic_decomposition, WConstruction};
use super::primary::charpoly_factorization;
use super::split::push_eigen_component;

/// `E = K[y]/(P)` for an irreducible `P` over a finite field `K`, with the
/// Frobenius `τ: x ↦ x^q`, `q = |K|`. The roots of `P` in `E` are
/// `τ^j(y)` for `j = 0..deg P`.
#[derive(Clone, Debug)]
pub struct ExtensionContext {
    base: Field,
    ext: Field,
    q: BigUint,
    degree: usize,
}

impl ExtensionContext {
    pub fn new(base: &Field, p: &Poly) -> Result<ExtensionContext> {
        let q = base.size().ok_or(Error::NotFiniteField)?;
        let ext = Field::extension(base, p)?;
        Ok(ExtensionContext {
            base: base.clone(),
            degree: ext.degree(),
            ext,
            q,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn field(&self) -> &Field {
        &self.ext
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    /// `τ^j(x)`.
    pub fn tau(&self, x: &Elem, j: usize) -> Elem {
        self.ext.frobenius(x, &self.q, j).expect("finite field")
    }

    pub fn tau_vec(&self, v: &[Elem], j: usize) -> Vec<Elem> {
        v.iter().map(|x| self.tau(x, j)).collect()
    }

    /// The class of `y`, a root of the modulus.
    pub fn root(&self) -> Elem {
        self.ext.generator().expect("extension field")
    }

    /// All roots of the modulus, `τ^j(y)`.
    pub fn roots(&self) -> Vec<Elem> {
        (0..self.degree).map(|j| self.tau(&self.root(), j)).collect()
    }
}

/// Output of [`descent_normal_form`]: `C⁻¹AC = diag(B, Bᵀ)` with `U` and
/// `W` the spans of the first and last `n` columns of `C`.
#[derive(Clone, Debug)]
pub struct Descent {
    pub c: Mat,
    pub b: Mat,
    pub u: Subspace,
    pub w: Subspace,
}

/// Descends the pair of lagrangians built over `E` on the `P`-primary
/// component (`P` irreducible of degree at least 2).
fn push_descended_component(
    space: &SymplecticSpace,
    a: &Mat,
    p: &Poly,
    multiplicity: usize,
    construction: WConstruction,
    asm: &mut Assembly,
) -> Result<()> {
    let ctx = ExtensionContext::new(space.field(), p)?;
    let e = ctx.field();
    let space_e = space.over(e);
    let a_e = a.extend_scalars(e)?;
    let g = a_e.shift(&ctx.root());
    let s0 = Subspace::kernel(&g.pow(multiplicity));
    let pairs = cyclic_decomposition(&space_e, &g, &s0, construction)?;

    let mut u_gens = Vec::new();
    let mut w_gens = Vec::new();
    for j in 0..ctx.degree() {
        for pair in &pairs {
            u_gens.extend(pair.u.iter().map(|v| ctx.tau_vec(v, j)));
            w_gens.extend(pair.w.iter().map(|v| ctx.tau_vec(v, j)));
        }
    }
    let dim = space.dim();
    let u_e = Subspace::from_vectors(e, dim, &u_gens);
    let w_e = Subspace::from_vectors(e, dim, &w_gens);
    let u = restrict_scalars_kernel(e, dim, &u_e.annihilator())?;
    let w = restrict_scalars_kernel(e, dim, &w_e.annihilator())?;
    let expected = ctx.degree() * s0.dim() / 2;
    if u_e.dim() != expected || w_e.dim() != expected || u.dim() != expected || w.dim() != expected
    {
        return Err(Error::InternalDescentFailure);
    }
    let (us, ws) = space.darboux_in_subspace(&u, &w)?;
    let b = u.restrict_operator(a)?;
    asm.push_block(us, ws, b);
    Ok(())
}

/// Normal form over a finite field whose characteristic polynomial may
/// have nonlinear irreducible factors. Linear factors produce Jordan
/// blocks; the other components produce whatever `B` the descended basis
/// gives.
pub fn descent_normal_form(space: &SymplecticSpace, a: &Mat, seed: u64) -> Result<Descent> {
    descent_with(space, a, seed, WConstruction::Solve)
}

pub(crate) fn descent_with(
    space: &SymplecticSpace,
    a: &Mat,
    seed: u64,
    construction: WConstruction,
) -> Result<Descent> {
    let f = space.field();
    if !f.is_finite() {
        return Err(Error::NotFiniteField);
    }
    if !space.is_self_adjoint(a)? {
        return Err(Error::NotSelfAdjoint);
    }
    let fac = charpoly_factorization(a, seed)?;
    let mut asm = Assembly::default();
    for factor in &fac.factors {
        if factor.poly.degree() == Some(1) {
            let lambda = f.neg(&factor.poly.coeff(0));
            push_eigen_component(space, a, &lambda, factor.multiplicity, construction, &mut asm)?;
        } else {
            push_descended_component(
                space,
                a,
                &factor.poly,
                factor.multiplicity,
                construction,
                &mut asm,
            )?;
        }
    }
    let (c, b) = asm.finish(space);
    let n = space.n();
    let cols = |r: std::ops::Range<usize>| -> Vec<Vec<Elem>> { r.map(|j| c.col(j)).collect() };
    let u = Subspace::from_vectors(f, space.dim(), &cols(0..n));
    let w = Subspace::from_vectors(f, space.dim(), &cols(n..2 * n));
    Ok(Descent { c, b, u, w })
}
