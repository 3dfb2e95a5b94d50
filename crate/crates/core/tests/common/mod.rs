#![allow(dead_code)]

use darboux::normal_form::{random_self_adjoint, BlockSpec, InstanceSpec};
use darboux::poly::is_irreducible;
use darboux::symplectic::SymplecticSpace;
use darboux::{Elem, Field, Mat, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus_fields() -> Vec<(&'static str, Field)> {
    vec![
        ("Q", Field::rational()),
        ("F3", Field::prime(3).unwrap()),
        ("F5", Field::prime(5).unwrap()),
        ("F101", Field::prime(101).unwrap()),
        ("F9", Field::extension_of_degree(3, 2).unwrap()),
    ]
}

fn random_eigenvalue(field: &Field, rng: &mut ChaCha8Rng) -> Elem {
    if field.is_rational() && rng.gen_bool(0.25) {
        let num = [-3i64, -1, 1, 3][rng.gen_range(0..4)];
        return field.div(&field.from_i64(num), &field.from_i64(2)).unwrap();
    }
    field.random(rng)
}

/// Random monic irreducible polynomial of degree `d` over a finite field.
pub fn random_irreducible(field: &Field, d: usize, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let mut coeffs: Vec<Elem> = (0..d).map(|_| field.random(rng)).collect();
        coeffs.push(field.one());
        let p = Poly::new(field, coeffs);
        if is_irreducible(&p).unwrap() {
            return p;
        }
    }
}

/// Random spec of total size `n`. Over finite fields, `nonlinear` is the
/// probability of drawing a companion block of an irreducible factor of
/// degree 2 or 3 whenever it fits.
pub fn random_spec(field: &Field, n: usize, nonlinear: f64, rng: &mut ChaCha8Rng) -> InstanceSpec {
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        if field.is_finite() && left >= 2 && rng.gen_bool(nonlinear) {
            let d = if left >= 3 && rng.gen_bool(0.4) { 3 } else { 2 };
            let poly = random_irreducible(field, d, rng);
            let k = if left >= 2 * d && rng.gen_bool(0.3) { 2 } else { 1 };
            blocks.push(BlockSpec::Companion { poly, powers: vec![k] });
            left -= d * k;
        } else {
            let s = rng.gen_range(1..=left.min(3));
            blocks.push(BlockSpec::Jordan {
                eigenvalue: random_eigenvalue(field, rng),
                sizes: vec![s],
            });
            left -= s;
        }
    }
    InstanceSpec::new(field, blocks).unwrap()
}

/// Spec that forces at least one nonlinear irreducible factor.
pub fn descent_spec(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> InstanceSpec {
    assert!(n >= 2);
    let d = if n >= 3 && rng.gen_bool(0.5) { 3 } else { 2 };
    let poly = random_irreducible(field, d, rng);
    let mut blocks = vec![BlockSpec::Companion { poly, powers: vec![1] }];
    if n > d {
        blocks.extend(random_spec(field, n - d, 0.5, rng).blocks);
    }
    InstanceSpec::new(field, blocks).unwrap()
}

/// Random partition of `n` as one nilpotent Jordan entry.
pub fn nilpotent_spec(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> InstanceSpec {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.gen_range(1..=left);
        sizes.push(s);
        left -= s;
    }
    InstanceSpec::new(
        field,
        vec![BlockSpec::Jordan {
            eigenvalue: field.zero(),
            sizes,
        }],
    )
    .unwrap()
}

pub struct Instance {
    pub label: String,
    pub space: SymplecticSpace,
    pub spec: InstanceSpec,
    pub a: Mat,
}

pub fn instance(field: &Field, label: &str, n: usize, seed: u64, spec: InstanceSpec) -> Instance {
    let space = SymplecticSpace::new(field, n).unwrap();
    let a = random_self_adjoint(&space, seed, &spec).unwrap();
    Instance {
        label: format!("{label} n={n} seed={seed} spec={spec}"),
        space,
        spec,
        a,
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `per_cell` instances for every corpus field and `n` in `1..=6`.
pub fn roundtrip_corpus(per_cell: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    for (fi, (label, field)) in corpus_fields().into_iter().enumerate() {
        for n in 1..=6usize {
            for k in 0..per_cell {
                let seed = 1000 * fi as u64 + 100 * n as u64 + k;
                let mut r = rng(seed);
                let spec = random_spec(&field, n, 0.35, &mut r);
                out.push(instance(&field, label, n, seed, spec));
            }
        }
    }
    out
}

/// `rank (m - λ)^k` for `k` in `0..=kmax`.
pub fn rank_sequence(m: &Mat, lambda: &Elem, kmax: usize) -> Vec<usize> {
    let g = m.shift(lambda);
    let mut p = Mat::identity(m.field(), m.rows());
    let mut out = Vec::new();
    for _ in 0..=kmax {
        out.push(p.rank());
        p = &p * &g;
    }
    out
}

pub fn dual_diag(b: &Mat) -> Mat {
    let z = Mat::zeros(b.field(), b.rows(), b.cols());
    Mat::block2(b, &z, &z, &b.transpose())
}
