use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{Mat, Subspace};
use crate::symplectic::SymplecticSpace;

use super::assembly::Assembly;

/// How the first vector of the dual chain is produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WConstruction {
    /// Canonical solution of `σ(w₁, u_i) = δ_{i1}` inside the subspace.
    #[default]
    Solve,
    /// `v ← v - σ(v, u_{k+1}) f^k(v)` for `k = 1..d-1`, starting from the
    /// canonical `v` with `σ(v, u₁) = 1`.
    Recursion,
    /// The same iteration with coefficient `σ(v, u_k)`. Usually fails the
    /// Darboux post-check; kept for comparison.
    RecursionPrinted,
}

/// Chains `u_i = f^{d-i}(u_d)` and `w_i = f^{i-1}(w₁)` with
/// `σ(w_i, u_j) = δ_ij` and both chains isotropic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPair {
    pub u: Vec<Vec<Elem>>,
    pub w: Vec<Vec<Elem>>,
}

impl CyclicPair {
    pub fn degree(&self) -> usize {
        self.u.len()
    }

    /// Whether the Darboux relations and isotropy hold exactly.
    pub fn is_darboux(&self, space: &SymplecticSpace) -> bool {
        let d = self.degree();
        self.w.len() == d
            && space.gram(&self.w, &self.u) == Mat::identity(space.field(), d)
            && space.gram(&self.u, &self.u).is_zero()
            && space.gram(&self.w, &self.w).is_zero()
    }

    /// Whether the chain relations hold for `g`.
    pub fn is_chain(&self, g: &Mat) -> bool {
        let f = g.field();
        let d = self.degree();
        let zero = vec![f.zero(); g.rows()];
        (0..d).all(|i| {
            let gu = g.mul_vec(&self.u[i]);
            let gw = g.mul_vec(&self.w[i]);
            let u_ok = if i == 0 { gu == zero } else { gu == self.u[i - 1] };
            let w_ok = if i + 1 == d { gw == zero } else { gw == self.w[i + 1] };
            u_ok && w_ok
        })
    }

    pub fn span(&self, space: &SymplecticSpace) -> Subspace {
        let vs: Vec<Vec<Elem>> = self.u.iter().chain(&self.w).cloned().collect();
        Subspace::from_vectors(space.field(), space.dim(), &vs)
    }
}

fn height(g: &Mat, v: &[Elem], bound: usize) -> usize {
    let zero = vec![g.field().zero(); v.len()];
    let mut x = v.to_vec();
    let mut h = 0;
    while x != zero && h <= bound {
        x = g.mul_vec(&x);
        h += 1;
    }
    h
}

/// The vector `v = Σ y_k b_k` of `s` with `σ(v, targets_i) = rhs_i`, free
/// coordinates zero.
fn solve_pairing(
    space: &SymplecticSpace,
    s: &Subspace,
    targets: &[Vec<Elem>],
    rhs: &[Elem],
) -> Result<Vec<Elem>> {
    let f = space.field();
    // σ(b_k, t_i) = -σ(t_i, b_k)
    let r = -&space.gram(targets, s.basis());
    let y = r.solve(rhs).map_err(|_| Error::PostCondition("no dual vector in subspace"))?;
    let mut v = vec![f.zero(); space.dim()];
    for (yk, b) in y.iter().zip(s.basis()) {
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = f.add(vi, &f.mul(yk, bi));
        }
    }
    Ok(v)
}

/// One cyclic pair of maximal height inside the `g`-invariant symplectic
/// subspace `s`, on which `g` must be nilpotent.
pub fn cyclic_pair(
    space: &SymplecticSpace,
    g: &Mat,
    s: &Subspace,
    construction: WConstruction,
) -> Result<CyclicPair> {
    let f = space.field();
    let dim = s.dim();
    if dim == 0 {
        return Err(Error::DimensionMismatch("empty subspace".into()));
    }
    let restricted = s.restrict_operator(g)?;
    if !restricted.pow(dim).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let heights: Vec<usize> = s.basis().iter().map(|b| height(g, b, dim)).collect();
    let d = *heights.iter().max().expect("nonempty basis");
    let start = heights.iter().position(|&h| h == d).expect("maximum attained");

    let mut powers = vec![s.basis()[start].clone()];
    for _ in 1..d {
        let next = g.mul_vec(powers.last().expect("nonempty"));
        powers.push(next);
    }
    // u_i = g^{d-i} u_d, stored 0-based.
    let u: Vec<Vec<Elem>> = (1..=d).map(|i| powers[d - i].clone()).collect();

    let w1 = match construction {
        WConstruction::Solve => {
            let rhs: Vec<Elem> = (0..d).map(|i| if i == 0 { f.one() } else { f.zero() }).collect();
            solve_pairing(space, s, &u, &rhs)?
        }
        WConstruction::Recursion | WConstruction::RecursionPrinted => {
            let mut v = solve_pairing(space, s, &u[..1], &[f.one()])?;
            for k in 1..d {
                let target = if construction == WConstruction::Recursion {
                    &u[k]
                } else {
                    &u[k - 1]
                };
                let coef = space.form(&v, target);
                let fk = g.pow(k).mul_vec(&v);
                v = v
                    .iter()
                    .zip(&fk)
                    .map(|(a, b)| f.sub(a, &f.mul(&coef, b)))
                    .collect();
            }
            v
        }
    };
    let mut w = vec![w1];
    for _ in 1..d {
        let next = g.mul_vec(w.last().expect("nonempty"));
        w.push(next);
    }
    let pair = CyclicPair { u, w };
    if !pair.is_darboux(space) || !pair.is_chain(g) {
        return Err(Error::PostCondition("cyclic pair is not a Darboux chain"));
    }
    Ok(pair)
}

/// Splits `s` into σ-orthogonal cyclic pairs of weakly decreasing degree.
pub fn cyclic_decomposition(
    space: &SymplecticSpace,
    g: &Mat,
    s: &Subspace,
    construction: WConstruction,
) -> Result<Vec<CyclicPair>> {
    let mut rest = s.clone();
    let mut pairs = Vec::new();
    while rest.dim() > 0 {
        let pair = cyclic_pair(space, g, &rest, construction)?;
        let comp = space.symplectic_complement(&pair.span(space))?;
        rest = rest.intersect(&comp);
        pairs.push(pair);
    }
    Ok(pairs)
}

/// Darboux basis `C` and Jordan matrix `B` (nilpotent blocks, weakly
/// decreasing) with `C⁻¹AC = diag(B, Bᵀ)`.
pub fn nilpotent_normal_form(space: &SymplecticSpace, a: &Mat) -> Result<(Mat, Mat)> {
    nilpotent_normal_form_with(space, a, WConstruction::Solve)
}

pub fn nilpotent_normal_form_with(
    space: &SymplecticSpace,
    a: &Mat,
    construction: WConstruction,
) -> Result<(Mat, Mat)> {
    if !space.is_self_adjoint(a)? {
        return Err(Error::NotSelfAdjoint);
    }
    if !a.pow(space.dim()).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let full = Subspace::full(space.field(), space.dim());
    let pairs = cyclic_decomposition(space, a, &full, construction)?;
    let mut asm = Assembly::default();
    asm.push_pairs(space.field(), &space.field().zero(), &pairs);
    Ok(asm.finish(space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn dual_nilpotent(f: &crate::field::Field) -> (SymplecticSpace, Mat) {
        let sp = SymplecticSpace::new(f, 2).unwrap();
        let n = Mat::from_ints(f, &[&[0, 1], &[0, 0]]);
        let z = Mat::zeros(f, 2, 2);
        (sp, Mat::block2(&n, &z, &z, &n.transpose()))
    }

    fn e(f: &Field, i: usize) -> Vec<Elem> {
        (0..4).map(|j| if i == j { f.one() } else { f.zero() }).collect()
    }

    #[test]
    fn dual_block_pair() {
        let q = Field::rational();
        let (sp, a) = dual_nilpotent(&q);
        let full = Subspace::full(&q, 4);
        let pair = cyclic_pair(&sp, &a, &full, WConstruction::Solve).unwrap();
        assert_eq!(pair.u, vec![e(&q, 0), e(&q, 1)]);
        let neg = |v: Vec<Elem>| v.iter().map(|x| q.neg(x)).collect::<Vec<_>>();
        assert_eq!(pair.w, vec![neg(e(&q, 2)), neg(e(&q, 3))]);
        assert_eq!(
            cyclic_pair(&sp, &a, &full, WConstruction::Recursion).unwrap(),
            pair
        );
    }

    #[test]
    fn zero_operator_pair() {
        let f5 = Field::prime(5).unwrap();
        let sp = SymplecticSpace::new(&f5, 1).unwrap();
        let z = Mat::zeros(&f5, 2, 2);
        let pair = cyclic_pair(&sp, &z, &Subspace::full(&f5, 2), WConstruction::Solve).unwrap();
        assert_eq!(pair.degree(), 1);
        assert!(pair.is_darboux(&sp));
    }

    #[test]
    fn nilpotent_examples() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 3).unwrap();
        let (c, b) = nilpotent_normal_form(&sp, &Mat::zeros(&q, 6, 6)).unwrap();
        assert_eq!(c, Mat::identity(&q, 6));
        assert!(b.is_zero());

        let (sp, a) = dual_nilpotent(&q);
        let (c, b) = nilpotent_normal_form(&sp, &a).unwrap();
        assert_eq!(b, Mat::from_ints(&q, &[&[0, 1], &[0, 0]]));
        assert!(sp.is_symplectic_matrix(&c).unwrap());
        let target = Mat::block2(&b, &Mat::zeros(&q, 2, 2), &Mat::zeros(&q, 2, 2), &b.transpose());
        assert_eq!(&a * &c, &c * &target);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 1).unwrap();
        assert_eq!(
            nilpotent_normal_form(&sp, &Mat::identity(&q, 2)),
            Err(Error::NotNilpotent)
        );
    }
}
