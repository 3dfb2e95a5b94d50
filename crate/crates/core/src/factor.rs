//! Factorization of univariate polynomials.
//!
//! Over finite fields of odd characteristic: square-free decomposition,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
//! driven by a caller-supplied seed. Over Q only rational roots are split
//! off; whatever remains is reported as an unresolved factor.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::{squarefree_decomposition, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic.
    pub poly: Poly,
    pub multiplicity: usize,
    /// False only for leftover nonlinear factors over Q, which may or may
    /// not be irreducible.
    pub resolved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    /// Sorted by (degree, coefficient key), pairwise distinct.
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// `unit * prod factor^multiplicity`.
    pub fn product(&self) -> Poly {
        let field = self.field();
        self.factors.iter().fold(
            Poly::constant(&field, self.unit.clone()),
            |acc, f| acc.mul(&f.poly.pow(f.multiplicity)),
        )
    }

    fn field(&self) -> Field {
        self.factors
            .first()
            .map(|f| f.poly.field().clone())
            .expect("nonconstant input has factors")
    }

    /// Whether every factor is known to be irreducible.
    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.resolved)
    }

    /// Whether every factor is linear.
    pub fn splits(&self) -> bool {
        self.factors.iter().all(|f| f.poly.degree() == Some(1))
    }

    /// `(root, multiplicity)` for each linear factor.
    pub fn roots(&self) -> Vec<(Elem, usize)> {
        self.factors
            .iter()
            .filter(|f| f.poly.degree() == Some(1))
            .map(|f| {
                let field = f.poly.field();
                (field.neg(&f.poly.coeff(0)), f.multiplicity)
            })
            .collect()
    }
}

/// Factors a nonconstant polynomial. `seed` drives the randomized
/// equal-degree splitting; the result does not depend on it.
pub fn factor(a: &Poly, seed: u64) -> Result<Factorization> {
    let deg = a.degree().ok_or(Error::DivisionByZero)?;
    if deg == 0 {
        return Err(Error::DimensionMismatch(
            "factor expects a nonconstant polynomial".into(),
        ));
    }
    let field = a.field().clone();
    let unit = a.leading().clone();
    let mut factors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (part, mult) in squarefree_decomposition(a)? {
        if field.is_finite() {
            for (bundle, d) in distinct_degree(&part)? {
                for g in equal_degree(&bundle, d, &mut rng)? {
                    factors.push(Factor {
                        poly: g,
                        multiplicity: mult,
                        resolved: true,
                    });
                }
            }
        } else {
            let (roots, rest) = rational_roots(&part)?;
            for r in roots {
                factors.push(Factor {
                    poly: Poly::linear(&field, &r),
                    multiplicity: mult,
                    resolved: true,
                });
            }
            if rest.degree().unwrap_or(0) > 0 {
                factors.push(Factor {
                    poly: rest,
                    multiplicity: mult,
                    resolved: false,
                });
            }
        }
    }
    factors.sort_by(|x, y| x.poly.cmp_key(&y.poly));
    let out = Factorization { unit, factors };
    if out.product() != *a {
        return Err(Error::PostCondition("factorization reproduces its input"));
    }
    Ok(out)
}

/// Splits a monic square-free polynomial over F_q into products of all its
/// irreducible factors of each degree.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let q = field.size().ok_or(Error::NotFiniteField)?;
    let t = Poly::t(field);
    let mut rest = f.clone();
    let mut h = t.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while rest.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(&q, &rest)?;
        let g = h.sub(&t).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest)?;
            out.push((g, i));
        }
    }
    if let Some(d) = rest.degree() {
        if d > 0 {
            out.push((rest, d));
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus for odd q: every factor of `f` has degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field.size().ok_or(Error::NotFiniteField)?;
    let exp = (num_traits::pow(q, d) - BigUint::one()) >> 1;
    let one = Poly::one(field);
    loop {
        let a = Poly::new(field, (0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.powmod(&exp, f)?.sub(&one);
        let g = b.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.exact_div(&g), d, rng)?);
            return Ok(out);
        }
    }
}

/// Positive divisors of a nonzero integer, ascending, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a monic square-free polynomial over Q, ascending, plus
/// the cofactor left after dividing them out.
fn rational_roots(f: &Poly) -> Result<(Vec<Elem>, Poly)> {
    let field = f.field().clone();
    let mut rest = f.clone();
    let mut roots = Vec::new();
    if rest.coeff(0) == field.zero() && rest.degree().unwrap_or(0) > 0 {
        roots.push(field.zero());
        rest = rest.exact_div(&Poly::t(&field));
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Ok((roots, rest));
    }
    let ints = primitive_integer_form(&rest);
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let mut candidates = Vec::new();
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            let r = BigRational::new(p.clone(), q);
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let e = Elem::Rat(c);
        if field.is_zero(&rest.eval_elem(&e)) {
            rest = rest.exact_div(&Poly::linear(&field, &e));
            roots.push(e);
        }
    }
    roots.sort_by(|a, b| field.cmp(a, b));
    Ok((roots, rest))
}

/// Integer coefficients with content 1, proportional to `f`.
fn primitive_integer_form(f: &Poly) -> Vec<BigInt> {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            Elem::Rat(r) => r.clone(),
            _ => unreachable!("rational polynomial"),
        })
        .collect();
    let lcm = rats
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &content).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::is_irreducible;

    #[test]
    fn t2_plus_1_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let a = Poly::from_ints(&f5, &[1, 0, 1]);
        let fac = factor(&a, 1).unwrap();
        let polys: Vec<Poly> = fac.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(
            polys,
            vec![Poly::from_ints(&f5, &[3, 1]), Poly::from_ints(&f5, &[2, 1])]
        );
        assert_eq!(fac.product(), a);
    }

    #[test]
    fn rational_examples() {
        let q = Field::rational();
        let fac = factor(&Poly::from_ints(&q, &[6, -5, 1]), 0).unwrap();
        let polys: Vec<Poly> = fac.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(
            polys,
            vec![Poly::from_ints(&q, &[-2, 1]), Poly::from_ints(&q, &[-3, 1])]
        );
        assert!(fac.splits());

        let fac = factor(&Poly::from_ints(&q, &[1, 0, 1]), 0).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert!(!fac.factors[0].resolved);
        assert!(!fac.is_complete());
    }

    #[test]
    fn rational_roots_with_fractions_and_zero() {
        let q = Field::rational();
        // 3 * t^2 (t - 1/2)(t + 2/3)^2
        let half = q.parse("1/2").unwrap();
        let two_thirds = q.parse("-2/3").unwrap();
        let a = Poly::linear(&q, &half)
            .mul(&Poly::linear(&q, &two_thirds).pow(2))
            .mul(&Poly::t(&q).pow(2))
            .scale(&q.from_i64(3));
        let fac = factor(&a, 0).unwrap();
        assert!(fac.splits());
        assert_eq!(fac.product(), a);
        let mut roots = fac.roots();
        roots.sort_by(|x, y| q.cmp(&x.0, &y.0));
        assert_eq!(
            roots,
            vec![(two_thirds, 2), (q.zero(), 2), (half, 1)]
        );
    }

    #[test]
    fn factors_over_extension_field() {
        let f9 = Field::extension_of_degree(3, 2).unwrap();
        // t^2 + 1 splits over F_9 as (t - a)(t + a)
        let a = Poly::from_ints(&f9, &[1, 0, 1]);
        let fac = factor(&a, 3).unwrap();
        assert!(fac.splits());
        assert_eq!(fac.product(), a);
    }

    #[test]
    fn finite_field_factors_are_irreducible() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3u64, 5, 7, 101] {
            let f = Field::prime(p).unwrap();
            for _ in 0..30 {
                let deg = rng.gen_range(1..9);
                let mut coeffs: Vec<Elem> = (0..deg).map(|_| f.random(&mut rng)).collect();
                coeffs.push(f.from_i64(rng.gen_range(1..p as i64)));
                let a = Poly::new(&f, coeffs);
                let fac = factor(&a, rng.gen()).unwrap();
                assert_eq!(fac.product(), a);
                for fa in &fac.factors {
                    assert!(fa.poly.is_monic());
                    assert!(is_irreducible(&fa.poly).unwrap());
                }
                for w in fac.factors.windows(2) {
                    assert_ne!(w[0].poly, w[1].poly);
                }
            }
        }
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = Field::prime(101).unwrap();
        let a = Poly::from_ints(&f, &[3, 0, 0, 0, 0, 0, 1]);
        let r1 = factor(&a, 1).unwrap();
        let r2 = factor(&a, 999).unwrap();
        assert_eq!(r1, r2);
    }
}
