//! Dense univariate polynomials over any supported field.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Elem, Field, Scalar, ScalarText};

/// Dense polynomial, coefficients low degree first. The coefficient vector is
/// empty for zero and otherwise ends in a nonzero entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.format(c);
            match i {
                0 => write!(f, "{cs}")?,
                _ if self.field.is_one(c) => {}
                _ => write!(f, "{cs}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `t - c`.
    pub fn linear(field: &Field, c: &Elem) -> Poly {
        Poly::new(field, vec![field.neg(c), field.one()])
    }

    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = 0`; only for places where zero is excluded.
    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> &Elem {
        assert!(!self.is_zero(), "leading coefficient of the zero polynomial");
        self.coeffs.last().unwrap()
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.field.is_one(self.leading())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut r = Poly::one(&self.field);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_u64(i as u64)))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let db = b.deg();
        let lead_inv = f.inv(b.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            if f.is_zero(&r[i]) {
                continue;
            }
            let c = f.mul(&r[i], &lead_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = f.sub(&r[k], &f.mul(&c, bj));
            }
            q[i - db] = c;
        }
        r.truncate(db);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(b)?.1)
    }

    /// Exact quotient; panics if `b` does not divide `self`.
    pub(crate) fn exact_div(&self, b: &Poly) -> Poly {
        let (q, r) = self.divmod(b).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, u)` with `g` monic and
    /// `s * self + u * other = g`.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        let f = &self.field;
        if self.is_zero() && other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut u0, mut u1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let u = u0.sub(&q.mul(&u1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (u0, u1) = (u1, u);
        }
        let inv = f.inv(r0.leading())?;
        Ok((r0.scale(&inv), s0.scale(&inv), u0.scale(&inv)))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Poly) -> Result<Poly> {
        let base = self.rem(m)?;
        let mut result = Poly::one(&self.field).rem(m)?;
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m)?;
            if e.bit(i) {
                result = result.mul(&base).rem(m)?;
            }
        }
        Ok(result)
    }

    /// Horner evaluation at a raw element of the same field.
    pub fn eval_elem(&self, x: &Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Checked evaluation.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if x.field() != &self.field {
            return Err(Error::MixedFields);
        }
        Scalar::new(&self.field, self.eval_elem(x.value()))
    }

    /// Canonical order: by degree, then lexicographically on the negated
    /// coefficients from the constant term up, so that linear factors
    /// `t - λ` are ordered by `λ`.
    pub fn cmp_key(&self, other: &Poly) -> Ordering {
        let f = &self.field;
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match f.cmp(&f.neg(a), &f.neg(b)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Applies the field's p-th root to every coefficient of `h(t^p)`,
    /// returning `h`. Requires all exponents to be multiples of p.
    fn pth_root_poly(&self) -> Poly {
        let p = self.field.characteristic() as usize;
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| self.field.pth_root(c).expect("finite field"))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    /// Re-embeds every coefficient into an extension of this field.
    pub fn extend(&self, ext: &Field) -> Result<Poly> {
        if ext.base() != Some(&self.field) {
            return Err(Error::IncompatibleFields);
        }
        Ok(Poly::new(
            ext,
            self.coeffs.iter().map(|c| ext.embed(c)).collect(),
        ))
    }

    /// JSON form: coefficient encodings, low degree first.
    pub fn encode(&self) -> Vec<ScalarText> {
        self.coeffs.iter().map(|c| self.field.encode(c)).collect()
    }

    pub fn decode(field: &Field, items: &[ScalarText]) -> Result<Poly> {
        let coeffs = items
            .iter()
            .map(|t| field.decode(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }
}

/// Cofactors `Q_i` with `sum Q_i * R_i = 1`, computed by folding the
/// extended Euclidean algorithm left to right. The identity is re-checked.
pub fn multi_bezout(rs: &[Poly]) -> Result<Vec<Poly>> {
    let first = rs.first().ok_or(Error::NotCoprime)?;
    let f = first.field().clone();
    if first.is_zero() && rs.len() == 1 {
        return Err(Error::NotCoprime);
    }
    let mut g = first.clone();
    let mut coefs = vec![Poly::one(&f)];
    for r in &rs[1..] {
        let (g2, s, u) = g.xgcd(r)?;
        for c in coefs.iter_mut() {
            *c = c.mul(&s);
        }
        coefs.push(u);
        g = g2;
    }
    if g.is_zero() || g.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let inv = f.inv(g.leading())?;
    for c in coefs.iter_mut() {
        *c = c.scale(&inv);
    }
    let total = coefs
        .iter()
        .zip(rs)
        .fold(Poly::zero(&f), |acc, (q, r)| acc.add(&q.mul(r)));
    if !total.is_one() {
        return Err(Error::PostCondition("Bezout identity"));
    }
    Ok(coefs)
}

/// Pairwise coprime monic square-free parts `g_j` with
/// `a = lc(a) * prod g_j^j`, sorted by multiplicity.
pub fn squarefree_decomposition(a: &Poly) -> Result<Vec<(Poly, usize)>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut out = squarefree_monic(&a.monic());
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp_key(&y.0)));
    Ok(out)
}

fn squarefree_monic(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    if f.deg() == 0 {
        return Vec::new();
    }
    let p = field.characteristic() as usize;
    let d = f.derivative();
    if d.is_zero() {
        // f = h(t^p)
        return squarefree_monic(&f.pth_root_poly())
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&d);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if z.deg() > 0 {
            out.push((z, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.deg() > 0 {
        // Only reachable in characteristic p: what is left is a p-th power.
        out.extend(
            squarefree_monic(&c.pth_root_poly())
                .into_iter()
                .map(|(g, m)| (g, m * p)),
        );
    }
    out
}

/// Irreducibility over a finite field: no gcd with `t^{q^i} - t` for
/// `i <= deg / 2`.
pub fn is_irreducible(a: &Poly) -> Result<bool> {
    let field = a.field();
    let q = field.size().ok_or(Error::NotFiniteField)?;
    let d = match a.degree() {
        None | Some(0) => return Ok(false),
        Some(d) => d,
    };
    let m = a.monic();
    let t = Poly::t(field);
    let mut h = t.rem(&m)?;
    for _ in 1..=d / 2 {
        h = h.powmod(&q, &m)?;
        if !h.sub(&t).gcd(&m).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First monic irreducible polynomial of degree `k` over `field`, in the
/// order obtained by counting the lower coefficients as digits base q with
/// `c_0` least significant.
pub fn first_irreducible(field: &Field, k: usize) -> Poly {
    let elems = field
        .elements(1 << 16)
        .expect("lexicographic search needs a small field");
    let q = elems.len();
    let mut digits = vec![0usize; k];
    loop {
        let mut coeffs: Vec<Elem> = digits.iter().map(|&i| elems[i].clone()).collect();
        coeffs.push(field.one());
        let cand = Poly::new(field, coeffs);
        if is_irreducible(&cand).unwrap_or(false) {
            return cand;
        }
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < k, "irreducible polynomials exist in every degree");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn fp(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn divmod_examples() {
        let f = q();
        let (qq, r) = Poly::from_ints(&f, &[-1, 0, 1])
            .divmod(&Poly::from_ints(&f, &[-1, 1]))
            .unwrap();
        assert_eq!(qq, Poly::from_ints(&f, &[1, 1]));
        assert!(r.is_zero());

        let f3 = fp(3);
        let a = Poly::from_ints(&f3, &[0, 0, 1]);
        let b = Poly::from_ints(&f3, &[1, 1]);
        let (qq, r) = a.divmod(&b).unwrap();
        assert_eq!(qq, Poly::from_ints(&f3, &[2, 1]));
        assert_eq!(r, Poly::from_ints(&f3, &[1]));
        assert_eq!(qq.mul(&b).add(&r), a);

        let (qq, r) = a.divmod(&a).unwrap();
        assert!(qq.is_one() && r.is_zero());
        assert_eq!(a.divmod(&Poly::zero(&f3)), Err(Error::DivisionByZero));
    }

    #[test]
    fn xgcd_examples() {
        let f = q();
        let a = Poly::from_ints(&f, &[1, -2, 1]);
        let b = Poly::from_ints(&f, &[-1, 0, 1]);
        let (g, s, u) = a.xgcd(&b).unwrap();
        assert_eq!(g, Poly::from_ints(&f, &[-1, 1]));
        assert_eq!(s.mul(&a).add(&u.mul(&b)), g);

        // (t-1) - (t-2) = 1
        let a = Poly::from_ints(&f, &[-1, 1]);
        let b = Poly::from_ints(&f, &[-2, 1]);
        let (g, s, u) = a.xgcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(s, Poly::from_ints(&f, &[1]));
        assert_eq!(u, Poly::from_ints(&f, &[-1]));

        let (g, _, _) = Poly::zero(&f).xgcd(&Poly::t(&f)).unwrap();
        assert_eq!(g, Poly::t(&f));
    }

    #[test]
    fn multi_bezout_examples() {
        let f = q();
        let rs = [Poly::from_ints(&f, &[-1, 1]), Poly::from_ints(&f, &[-2, 1])];
        let qs = multi_bezout(&rs).unwrap();
        assert_eq!(qs, vec![Poly::from_ints(&f, &[1]), Poly::from_ints(&f, &[-1])]);

        assert_eq!(multi_bezout(&[Poly::one(&f)]).unwrap(), vec![Poly::one(&f)]);

        let f5 = fp(5);
        let rs: Vec<Poly> = (0..3).map(|c| Poly::from_ints(&f5, &[c, 1])).collect();
        let qs = multi_bezout(&rs).unwrap();
        let total = qs
            .iter()
            .zip(&rs)
            .fold(Poly::zero(&f5), |acc, (a, b)| acc.add(&a.mul(b)));
        assert!(total.is_one());

        let t = Poly::t(&f);
        assert_eq!(
            multi_bezout(&[t.clone(), t.mul(&t)]),
            Err(Error::NotCoprime)
        );
    }

    #[test]
    fn squarefree_examples() {
        let f = q();
        let tm1 = Poly::from_ints(&f, &[-1, 1]);
        let tp1 = Poly::from_ints(&f, &[1, 1]);
        let a = tm1.mul(&tm1).mul(&tp1);
        assert_eq!(
            squarefree_decomposition(&a).unwrap(),
            vec![(tp1, 1), (tm1, 2)]
        );

        let f3 = fp(3);
        let t3 = Poly::from_ints(&f3, &[0, 0, 0, 1]);
        assert_eq!(
            squarefree_decomposition(&t3).unwrap(),
            vec![(Poly::t(&f3), 3)]
        );
        assert_eq!(
            squarefree_decomposition(&Poly::t(&f)).unwrap(),
            vec![(Poly::t(&f), 1)]
        );
    }

    #[test]
    fn squarefree_mixed_multiplicities_char_p() {
        // (t+1)^4 (t+2)^3 t over F_3
        let f3 = fp(3);
        let a = Poly::from_ints(&f3, &[1, 1])
            .pow(4)
            .mul(&Poly::from_ints(&f3, &[2, 1]).pow(3))
            .mul(&Poly::t(&f3));
        let parts = squarefree_decomposition(&a).unwrap();
        assert_eq!(
            parts,
            vec![
                (Poly::t(&f3), 1),
                (Poly::from_ints(&f3, &[2, 1]), 3),
                (Poly::from_ints(&f3, &[1, 1]), 4)
            ]
        );
    }

    #[test]
    fn eval_examples() {
        let f = q();
        let p = Poly::from_ints(&f, &[6, -5, 1]);
        assert!(p.eval(&Scalar::from_i64(&f, 2)).unwrap().is_zero());
        assert_eq!(p.eval(&Scalar::from_i64(&f, 0)).unwrap().to_string(), "6");
        assert!(Poly::zero(&f).eval(&Scalar::from_i64(&f, 9)).unwrap().is_zero());
        assert_eq!(
            p.eval(&Scalar::from_i64(&fp(5), 1)),
            Err(Error::MixedFields)
        );
    }

    #[test]
    fn irreducibility() {
        let f5 = fp(5);
        assert!(!is_irreducible(&Poly::from_ints(&f5, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&Poly::from_ints(&f5, &[2, 0, 1])).unwrap());
        let f3 = fp(3);
        assert_eq!(first_irreducible(&f3, 2), Poly::from_ints(&f3, &[1, 0, 1]));
        assert_eq!(is_irreducible(&Poly::t(&q())), Err(Error::NotFiniteField));
    }
}
