mod common;

use common::*;
use darboux::codec::CertificateFile;
use darboux::factor::factor;
use darboux::normal_form::{
    cyclic_decomposition, symplectic_normal_form, verify_certificate, Options, WConstruction,
};
use darboux::poly::is_irreducible;
use darboux::symplectic::{SubspaceKind, SymplecticSpace};
use darboux::{Elem, Field, Mat, Poly, Subspace};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::rational()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(101).unwrap()),
        Just(Field::extension_of_degree(3, 2).unwrap()),
    ]
}

fn finite_field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(7).unwrap()),
        Just(Field::extension_of_degree(3, 2).unwrap()),
        Just(Field::extension_of_degree(5, 2).unwrap()),
    ]
}

fn random_mat(f: &Field, r: usize, c: usize, seed: u64) -> Mat {
    let mut g = rng(seed);
    Mat::from_fn(f, r, c, |_, _| f.random(&mut g))
}

fn random_vec(f: &Field, len: usize, seed: u64) -> Vec<Elem> {
    random_mat(f, 1, len, seed).row(0).to_vec()
}

fn random_self_adjoint_raw(sp: &SymplecticSpace, seed: u64) -> Mat {
    // A + adjoint(A) is self-adjoint for any A.
    let a = random_mat(sp.field(), sp.dim(), sp.dim(), seed);
    &a + &sp.adjoint(&a).unwrap()
}

/// Determinant by cofactor expansion along the first row.
fn laplace_det(f: &Field, m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return Poly::one(f);
    }
    let mut acc = Poly::zero(f);
    for j in 0..m.len() {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul(&laplace_det(f, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn laplace_charpoly(a: &Mat) -> Poly {
    let f = a.field();
    let m: Vec<Vec<Poly>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| {
                    let c = Poly::constant(f, f.neg(a.get(i, j)));
                    if i == j { c.add(&Poly::t(f)) } else { c }
                })
                .collect()
        })
        .collect();
    laplace_det(f, &m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn charpoly_matches_cofactor_expansion(f in field_strategy(), n in 1usize..=5, seed: u64) {
        let a = random_mat(&f, n, n, seed);
        prop_assert_eq!(a.charpoly().unwrap(), laplace_charpoly(&a));
    }

    #[test]
    fn rref_transform_and_kernel(f in field_strategy(), r in 1usize..=5, c in 1usize..=5, seed: u64) {
        let a = random_mat(&f, r, c, seed);
        let rr = a.rref();
        prop_assert_eq!(&rr.transform * &a, rr.reduced.clone());
        let k = Subspace::kernel(&a);
        prop_assert_eq!(rr.rank + k.dim(), c);
        let zero = vec![f.zero(); r];
        for v in k.basis() {
            prop_assert_eq!(a.mul_vec(v), zero.clone());
        }
    }

    #[test]
    fn solve_satisfies_system(f in field_strategy(), n in 1usize..=5, seed: u64) {
        let a = random_mat(&f, n, n + 1, seed);
        let x0 = random_vec(&f, n + 1, seed ^ 1);
        let b = a.mul_vec(&x0);
        let x = a.solve(&b).unwrap();
        prop_assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn adjoint_is_an_involution_and_pairs_correctly(f in field_strategy(), n in 1usize..=3, seed: u64) {
        let sp = SymplecticSpace::new(&f, n).unwrap();
        let a = random_mat(&f, 2 * n, 2 * n, seed);
        let g = sp.adjoint(&a).unwrap();
        prop_assert_eq!(sp.adjoint(&g).unwrap(), a.clone());
        let x = random_vec(&f, 2 * n, seed ^ 2);
        let y = random_vec(&f, 2 * n, seed ^ 3);
        prop_assert_eq!(sp.form(&g.mul_vec(&x), &y), sp.form(&x, &a.mul_vec(&y)));
    }

    #[test]
    fn polynomials_of_self_adjoint_are_self_adjoint(f in field_strategy(), n in 1usize..=3, deg in 0usize..4, seed: u64) {
        let sp = SymplecticSpace::new(&f, n).unwrap();
        let a = random_self_adjoint_raw(&sp, seed);
        prop_assert!(sp.is_self_adjoint(&a).unwrap());
        let mut g = rng(seed ^ 4);
        let p = Poly::new(&f, (0..=deg).map(|_| f.random(&mut g)).collect());
        prop_assert!(sp.is_self_adjoint(&a.eval_poly(&p).unwrap()).unwrap());
    }

    #[test]
    fn complement_dimensions_and_double_complement(f in field_strategy(), n in 1usize..=3, k in 0usize..=6, seed: u64) {
        let sp = SymplecticSpace::new(&f, n).unwrap();
        let vs: Vec<Vec<Elem>> = (0..k.min(2 * n)).map(|i| random_vec(&f, 2 * n, seed ^ i as u64)).collect();
        let s = Subspace::from_vectors(&f, 2 * n, &vs);
        let c = sp.symplectic_complement(&s).unwrap();
        prop_assert_eq!(s.dim() + c.dim(), 2 * n);
        prop_assert_eq!(sp.symplectic_complement(&c).unwrap(), s.clone());
        let sym = sp.classify_subspace(&s).unwrap() == SubspaceKind::Symplectic;
        let csym = sp.classify_subspace(&c).unwrap() == SubspaceKind::Symplectic;
        prop_assert_eq!(sym || s.dim() == 0 || c.dim() == 0, csym || s.dim() == 0 || c.dim() == 0);
    }

    #[test]
    fn n1_self_adjoint_iff_scalar(f in field_strategy(), seed: u64) {
        let sp = SymplecticSpace::new(&f, 1).unwrap();
        let a = random_mat(&f, 2, 2, seed);
        let scalar = f.is_zero(a.get(0, 1)) && f.is_zero(a.get(1, 0)) && a.get(0, 0) == a.get(1, 1);
        prop_assert_eq!(sp.is_self_adjoint(&a).unwrap(), scalar);
    }

    #[test]
    fn random_symplectic_is_symplectic(f in field_strategy(), n in 1usize..=4, seed: u64) {
        let sp = SymplecticSpace::new(&f, n).unwrap();
        let c = sp.random_symplectic(seed);
        prop_assert!(sp.is_symplectic_matrix(&c).unwrap());
        prop_assert_eq!(&c * &sp.symplectic_inverse(&c), Mat::identity(&f, 2 * n));
    }

    #[test]
    fn divmod_and_xgcd_identities(f in field_strategy(), da in 0usize..6, db in 0usize..5, seed: u64) {
        let mut g = rng(seed);
        let a = Poly::new(&f, (0..=da).map(|_| f.random(&mut g)).collect());
        let b = Poly::new(&f, (0..=db).map(|_| f.random(&mut g)).collect());
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let (d, s, u) = a.xgcd(&b).unwrap();
        prop_assert_eq!(s.mul(&a).add(&u.mul(&b)), d.clone());
        prop_assert!(a.rem(&d).unwrap().is_zero() && b.rem(&d).unwrap().is_zero());
    }

    #[test]
    fn finite_field_factorization(f in finite_field_strategy(), deg in 1usize..8, seed: u64) {
        let mut g = rng(seed);
        let mut coeffs: Vec<Elem> = (0..deg).map(|_| f.random(&mut g)).collect();
        coeffs.push(f.one());
        let a = Poly::new(&f, coeffs);
        let fac = factor(&a, seed).unwrap();
        prop_assert_eq!(fac.product(), a);
        for x in &fac.factors {
            prop_assert!(is_irreducible(&x.poly).unwrap());
        }
        let again = factor(&fac.product(), seed ^ 7).unwrap();
        prop_assert_eq!(fac, again);
    }

    #[test]
    fn field_axioms(f in field_strategy(), seed: u64) {
        let mut g = rng(seed);
        let (a, b, c) = (f.random(&mut g), f.random(&mut g), f.random(&mut g));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        if f.is_finite() {
            let p = num_bigint::BigUint::from(f.characteristic());
            let frob = |x: &Elem| f.frobenius(x, &p, 1).unwrap();
            prop_assert_eq!(frob(&f.add(&a, &b)), f.add(&frob(&a), &frob(&b)));
            prop_assert_eq!(frob(&f.mul(&a, &b)), f.mul(&frob(&a), &frob(&b)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pipeline_roundtrip(fi in 0usize..5, n in 1usize..=4, seed: u64) {
        let (label, f) = corpus_fields().swap_remove(fi);
        let mut r = rng(seed);
        let inst = instance(&f, label, n, seed, random_spec(&f, n, 0.4, &mut r));
        let cert = symplectic_normal_form(&inst.space, &inst.a, &Options::default()).unwrap();
        prop_assert!(verify_certificate(&cert).passed());
        prop_assert_eq!(&inst.a * &cert.c, &cert.c * &dual_diag(&cert.b));
        if let Some(expected) = inst.spec.jordan_spec() {
            prop_assert_eq!(cert.jordan_spec.clone(), Some(expected));
        }
        let json = CertificateFile::new(&cert, &verify_certificate(&cert)).unwrap().to_json();
        prop_assert_eq!(CertificateFile::from_json(&json).unwrap().decode().unwrap(), cert);
    }

    #[test]
    fn cyclic_chains_are_isotropic(fi in 0usize..5, n in 1usize..=5, seed: u64) {
        let (label, f) = corpus_fields().swap_remove(fi);
        let mut r = rng(seed);
        let inst = instance(&f, label, n, seed, nilpotent_spec(&f, n, &mut r));
        let sp = &inst.space;
        let full = Subspace::full(&f, sp.dim());
        let pairs = cyclic_decomposition(sp, &inst.a, &full, WConstruction::Solve).unwrap();
        let mut vs = Vec::new();
        for p in &pairs {
            prop_assert!(sp.gram(&p.u, &p.u).is_zero());
            prop_assert!(sp.gram(&p.w, &p.w).is_zero());
            prop_assert!(p.is_darboux(sp) && p.is_chain(&inst.a));
            vs.extend(p.u.iter().cloned());
            vs.extend(p.w.iter().cloned());
        }
        prop_assert_eq!(Subspace::from_vectors(&f, sp.dim(), &vs).dim(), sp.dim());
        let degs: Vec<usize> = pairs.iter().map(|p| p.degree()).collect();
        prop_assert!(degs.windows(2).all(|w| w[0] >= w[1]));
    }
}
