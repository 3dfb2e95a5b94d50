use crate::error::{Error, Result};
use crate::factor::{factor, Factorization};
use crate::linalg::{Mat, Subspace};
use crate::poly::{multi_bezout, Poly};
use crate::symplectic::SymplecticSpace;

/// `V_i = ker P_i(A)^{m_i}` for one irreducible factor `P_i` of the
/// characteristic polynomial.
#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub factor: Poly,
    pub multiplicity: usize,
    pub space: Subspace,
    /// The operator on `space`, in its stored basis.
    pub restricted: Mat,
}

fn check_self_adjoint(space: &SymplecticSpace, a: &Mat) -> Result<()> {
    if !space.is_self_adjoint(a)? {
        return Err(Error::NotSelfAdjoint);
    }
    Ok(())
}

/// Factorization of `charpoly(a)`; fails over Q when a factor is left
/// unresolved.
pub fn charpoly_factorization(a: &Mat, seed: u64) -> Result<Factorization> {
    let fac = factor(&a.charpoly()?, seed)?;
    if !fac.is_complete() {
        return Err(Error::UnresolvedFactor);
    }
    Ok(fac)
}

/// Components in the factor order of the factorization.
pub fn primary_decomposition(
    space: &SymplecticSpace,
    a: &Mat,
    seed: u64,
) -> Result<Vec<PrimaryComponent>> {
    check_self_adjoint(space, a)?;
    let fac = charpoly_factorization(a, seed)?;
    fac.factors
        .iter()
        .map(|f| {
            let power = f.poly.pow(f.multiplicity);
            let s = Subspace::kernel(&a.eval_poly(&power)?);
            Ok(PrimaryComponent {
                factor: f.poly.clone(),
                multiplicity: f.multiplicity,
                restricted: s.restrict_operator(a)?,
                space: s,
            })
        })
        .collect()
}

/// `p_i = Q_i(A) R_i(A)` with `R_i = ∏_{j≠i} P_j^{m_j}` and `Σ Q_i R_i = 1`.
pub fn self_adjoint_projections(
    space: &SymplecticSpace,
    a: &Mat,
    factorization: &Factorization,
) -> Result<Vec<Mat>> {
    check_self_adjoint(space, a)?;
    let powers: Vec<Poly> = factorization
        .factors
        .iter()
        .map(|f| f.poly.pow(f.multiplicity))
        .collect();
    let rs: Vec<Poly> = (0..powers.len())
        .map(|i| {
            powers
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Poly::one(a.field()), |acc, (_, p)| acc.mul(p))
        })
        .collect();
    let qs = multi_bezout(&rs)?;
    qs.iter()
        .zip(&rs)
        .map(|(q, r)| a.eval_poly(&q.mul(r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn diag1212() -> (SymplecticSpace, Mat) {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 2).unwrap();
        let a = Mat::from_ints(
            &q,
            &[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 2]],
        );
        (sp, a)
    }

    #[test]
    fn diagonal_components() {
        let (sp, a) = diag1212();
        let q = sp.field().clone();
        let comps = primary_decomposition(&sp, &a, 0).unwrap();
        assert_eq!(comps.len(), 2);
        let e = |i: usize| -> Vec<_> {
            (0..4).map(|j| if i == j { q.one() } else { q.zero() }).collect()
        };
        assert_eq!(comps[0].space, Subspace::from_vectors(&q, 4, &[e(0), e(2)]));
        assert_eq!(comps[1].space, Subspace::from_vectors(&q, 4, &[e(1), e(3)]));
        for c in &comps {
            assert_eq!(
                sp.classify_subspace(&c.space).unwrap(),
                crate::symplectic::SubspaceKind::Symplectic
            );
        }
    }

    #[test]
    fn diagonal_projections() {
        let (sp, a) = diag1212();
        let q = sp.field().clone();
        let fac = charpoly_factorization(&a, 0).unwrap();
        let ps = self_adjoint_projections(&sp, &a, &fac).unwrap();
        let d = |v: [i64; 4]| {
            Mat::from_fn(&q, 4, 4, |i, j| if i == j { q.from_i64(v[i]) } else { q.zero() })
        };
        assert_eq!(ps, vec![d([1, 0, 1, 0]), d([0, 1, 0, 1])]);
    }

    #[test]
    fn single_factor_is_identity() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 2).unwrap();
        let mut a = Mat::zeros(&q, 4, 4);
        a.set(0, 1, q.one());
        a.set(3, 2, q.one());
        let comps = primary_decomposition(&sp, &a, 0).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].factor, Poly::t(&q));
        let fac = charpoly_factorization(&a, 0).unwrap();
        assert_eq!(
            self_adjoint_projections(&sp, &a, &fac).unwrap(),
            vec![Mat::identity(&q, 4)]
        );
    }

    #[test]
    fn rejects_non_self_adjoint() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 1).unwrap();
        let a = Mat::from_ints(&q, &[&[1, 1], &[0, 1]]);
        assert!(matches!(primary_decomposition(&sp, &a, 0), Err(Error::NotSelfAdjoint)));
    }
}
