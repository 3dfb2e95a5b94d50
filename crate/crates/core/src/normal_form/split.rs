use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{Mat, Subspace};
use crate::poly::Poly;
use crate::symplectic::SymplecticSpace;

use super::assembly::Assembly;
use super::cyclic::{cyclic_decomposition, WConstruction};
use super::jordan::{JordanEntry, JordanSpec};

/// Chains of `A - λ` on `ker (A - λ)^m`, appended to `asm`. Returns the
/// block sizes.
pub(crate) fn push_eigen_component(
    space: &SymplecticSpace,
    a: &Mat,
    lambda: &Elem,
    multiplicity: usize,
    construction: WConstruction,
    asm: &mut Assembly,
) -> Result<Vec<usize>> {
    let g = a.shift(lambda);
    let s = Subspace::kernel(&g.pow(multiplicity));
    let pairs = cyclic_decomposition(space, &g, &s, construction)?;
    asm.push_pairs(space.field(), lambda, &pairs);
    Ok(pairs.iter().map(|p| p.degree()).collect())
}

/// Normal form when `charpoly(a) = ∏ (t - λ_i)^{m_i}`. `B` is in Jordan
/// form with eigenvalues ascending and block sizes weakly decreasing.
pub fn split_normal_form(
    space: &SymplecticSpace,
    a: &Mat,
    roots: &[(Elem, usize)],
) -> Result<(Mat, Mat)> {
    let (c, b, _) = split_with(space, a, roots, WConstruction::Solve)?;
    Ok((c, b))
}

pub(crate) fn split_with(
    space: &SymplecticSpace,
    a: &Mat,
    roots: &[(Elem, usize)],
    construction: WConstruction,
) -> Result<(Mat, Mat, JordanSpec)> {
    let f = space.field();
    if !space.is_self_adjoint(a)? {
        return Err(Error::NotSelfAdjoint);
    }
    let product = roots
        .iter()
        .fold(Poly::one(f), |acc, (l, m)| acc.mul(&Poly::linear(f, l).pow(*m)));
    if product != a.charpoly()? {
        return Err(Error::EigenvaluesNotInField);
    }
    let mut sorted = roots.to_vec();
    sorted.sort_by(|x, y| f.cmp(&x.0, &y.0));
    let mut asm = Assembly::default();
    let mut spec = Vec::new();
    for (lambda, m) in &sorted {
        let sizes = push_eigen_component(space, a, lambda, *m, construction, &mut asm)?;
        spec.push(JordanEntry {
            eigenvalue: lambda.clone(),
            sizes,
        });
    }
    let (c, b) = asm.finish(space);
    Ok((c, b, JordanSpec(spec)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn scalar_operator() {
        let f5 = Field::prime(5).unwrap();
        let sp = SymplecticSpace::new(&f5, 3).unwrap();
        let l = f5.from_i64(4);
        let a = Mat::scalar(&f5, 6, &l);
        let (c, b) = split_normal_form(&sp, &a, &[(l.clone(), 6)]).unwrap();
        assert_eq!(c, Mat::identity(&f5, 6));
        assert_eq!(b, Mat::scalar(&f5, 3, &l));
    }

    #[test]
    fn diagonal_operator() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 2).unwrap();
        let a = Mat::from_ints(
            &q,
            &[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 2]],
        );
        let roots = [(q.from_i64(2), 2), (q.from_i64(1), 2)];
        let (c, b) = split_normal_form(&sp, &a, &roots).unwrap();
        assert_eq!(c, Mat::identity(&q, 4));
        assert_eq!(b, Mat::from_ints(&q, &[&[1, 0], &[0, 2]]));
    }

    #[test]
    fn wrong_roots() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 1).unwrap();
        let a = Mat::identity(&q, 2);
        assert_eq!(
            split_normal_form(&sp, &a, &[(q.from_i64(2), 2)]),
            Err(Error::EigenvaluesNotInField)
        );
    }
}
