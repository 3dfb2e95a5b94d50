//! Exact arithmetic over Q, prime fields F_p with p odd, and towers of
//! extensions F_q[y]/(m(y)) presented by a monic irreducible modulus.
//!
//! Field elements are plain values ([`Elem`]); all arithmetic goes through a
//! [`Field`] context, which is cheap to clone and compares structurally.
//! [`Scalar`] pairs an element with its field for the checked public API.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{self, Poly};

/// Raw field element. Canonical by construction, so derived equality is
/// field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    /// Reduced fraction with positive denominator.
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Res(u64),
    /// Coefficients `c_0 .. c_{k-1}` over the base field, always of length k.
    Ext(Vec<Elem>),
}

/// User-facing description of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
    /// `F_p[a]/(modulus)`, modulus given low degree first and monic.
    Extension { p: u64, modulus: Vec<u64> },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime { p } => write!(f, "prime:{p}"),
            FieldDescriptor::Extension { p, modulus } => {
                let csv: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "ext:{p}:{}", csv.join(","))
            }
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Parses `rational`, `prime:p` or `ext:p:c0,c1,...,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad field descriptor '{s}'"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["rational"] => Ok(FieldDescriptor::Rational),
            ["prime", p] => Ok(FieldDescriptor::Prime {
                p: p.trim().parse().map_err(|_| bad())?,
            }),
            ["ext", p, csv] => {
                let p: u64 = p.trim().parse().map_err(|_| bad())?;
                let modulus = csv
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FieldDescriptor::Extension { p, modulus })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Rational,
    Prime { p: u64 },
    Extension(Extension),
}

#[derive(Debug, PartialEq, Eq)]
struct Extension {
    base: Field,
    /// Monic, low degree first, length `degree + 1`.
    modulus: Vec<Elem>,
    degree: usize,
    size: BigUint,
    characteristic: u64,
    absolute_degree: usize,
}

/// Arithmetic context for one field.
#[derive(Clone)]
pub struct Field(Arc<Kind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Rational => write!(f, "Q"),
            Kind::Prime { p } => write!(f, "F_{p}"),
            Kind::Extension(ext) => write!(f, "{:?}[y]/({} terms)", ext.base, ext.modulus.len()),
        }
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field {
    pub fn rational() -> Field {
        Field(Arc::new(Kind::Rational))
    }

    /// The prime field F_p; `p` must be an odd prime.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p.to_string()));
        }
        Ok(Field(Arc::new(Kind::Prime { p })))
    }

    /// `base[y]/(modulus)`. The modulus must be monic, of degree at least 2
    /// and irreducible over `base`, which must be finite.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        if base.is_rational() {
            return Err(Error::RationalField);
        }
        if modulus.field() != base {
            return Err(Error::MixedFields);
        }
        let degree = match modulus.degree() {
            Some(d) if d >= 2 => d,
            _ => return Err(Error::BadModulus),
        };
        if !base.is_one(modulus.leading()) {
            return Err(Error::BadModulus);
        }
        if !poly::is_irreducible(modulus)? {
            return Err(Error::ReducibleModulus);
        }
        let base_size = base.size().expect("finite base");
        Ok(Field(Arc::new(Kind::Extension(Extension {
            base: base.clone(),
            modulus: modulus.coeffs().to_vec(),
            degree,
            size: num_traits::pow(base_size, degree),
            characteristic: base.characteristic(),
            absolute_degree: base.absolute_degree() * degree,
        }))))
    }

    /// Builds the context described by `desc`.
    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Field> {
        match desc {
            FieldDescriptor::Rational => Ok(Field::rational()),
            FieldDescriptor::Prime { p } => Field::prime(*p),
            FieldDescriptor::Extension { p, modulus } => {
                let base = Field::prime(*p)?;
                if modulus.iter().any(|&c| c >= *p) {
                    return Err(Error::BadModulus);
                }
                let coeffs = modulus.iter().map(|&c| base.from_u64(c)).collect();
                Field::extension(&base, &Poly::new(&base, coeffs))
            }
        }
    }

    /// F_{p^k} with the first monic irreducible modulus in lexicographic
    /// order, reading `c_0` as the least significant digit.
    pub fn extension_of_degree(p: u64, k: usize) -> Result<Field> {
        let base = Field::prime(p)?;
        if k == 1 {
            return Ok(base);
        }
        let modulus = poly::first_irreducible(&base, k);
        Field::extension(&base, &modulus)
    }

    /// Inverse of [`Field::from_descriptor`]; `None` for towers of depth > 1.
    pub fn descriptor(&self) -> Option<FieldDescriptor> {
        match &*self.0 {
            Kind::Rational => Some(FieldDescriptor::Rational),
            Kind::Prime { p } => Some(FieldDescriptor::Prime { p: *p }),
            Kind::Extension(ext) => match &*ext.base.0 {
                Kind::Prime { p } => Some(FieldDescriptor::Extension {
                    p: *p,
                    modulus: ext
                        .modulus
                        .iter()
                        .map(|c| match c {
                            Elem::Res(r) => *r,
                            _ => unreachable!("prime-field coefficient"),
                        })
                        .collect(),
                }),
                _ => None,
            },
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(&*self.0, Kind::Rational)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rational()
    }

    pub fn is_extension(&self) -> bool {
        matches!(&*self.0, Kind::Extension(_))
    }

    /// 0 for Q.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Rational => 0,
            Kind::Prime { p } => *p,
            Kind::Extension(ext) => ext.characteristic,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn size(&self) -> Option<BigUint> {
        match &*self.0 {
            Kind::Rational => None,
            Kind::Prime { p } => Some(BigUint::from(*p)),
            Kind::Extension(ext) => Some(ext.size.clone()),
        }
    }

    /// Degree over the prime field (1 for Q and F_p).
    pub fn absolute_degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension(ext) => ext.absolute_degree,
            _ => 1,
        }
    }

    /// Degree over the immediate base field.
    pub fn degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension(ext) => ext.degree,
            _ => 1,
        }
    }

    /// Immediate base of an extension.
    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            Kind::Extension(ext) => Some(&ext.base),
            _ => None,
        }
    }

    /// The defining modulus of an extension, as a polynomial over the base.
    pub fn modulus(&self) -> Option<Poly> {
        match &*self.0 {
            Kind::Extension(ext) => Some(Poly::new(&ext.base, ext.modulus.clone())),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            Kind::Rational => Elem::Rat(BigRational::zero()),
            Kind::Prime { .. } => Elem::Res(0),
            Kind::Extension(ext) => Elem::Ext(vec![ext.base.zero(); ext.degree]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_u64(&self, v: u64) -> Elem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Elem {
        match &*self.0 {
            Kind::Rational => Elem::Rat(BigRational::from_integer(v.clone())),
            Kind::Prime { p } => {
                let m = BigInt::from(*p);
                let r = ((v % &m) + &m) % &m;
                Elem::Res(r.to_u64().expect("residue fits"))
            }
            Kind::Extension(_) => self.embed(&self.base().unwrap().from_bigint(v)),
        }
    }

    /// Image of a rational number; only defined over Q.
    pub fn from_rational(&self, v: BigRational) -> Result<Elem> {
        match &*self.0 {
            Kind::Rational => Ok(Elem::Rat(v)),
            _ => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                self.div(&num, &den)
            }
        }
    }

    /// Class of the adjoined variable `y` in an extension.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            Kind::Extension(ext) => {
                let mut c = vec![ext.base.zero(); ext.degree];
                c[1] = ext.base.one();
                Some(Elem::Ext(c))
            }
            _ => None,
        }
    }

    /// Canonical embedding of a base-field element as a constant.
    pub fn embed(&self, x: &Elem) -> Elem {
        match &*self.0 {
            Kind::Extension(ext) => {
                let mut c = vec![ext.base.zero(); ext.degree];
                c[0] = x.clone();
                Elem::Ext(c)
            }
            _ => panic!("embed requires an extension field"),
        }
    }

    /// Inverse of [`Field::embed`] on its image.
    pub fn unembed(&self, x: &Elem) -> Option<Elem> {
        let c = self.coefficients(x);
        let base = self.base()?;
        if c[1..].iter().all(|e| base.is_zero(e)) {
            Some(c[0].clone())
        } else {
            None
        }
    }

    /// Coefficient vector of an extension element.
    pub fn coefficients<'a>(&self, x: &'a Elem) -> &'a [Elem] {
        match x {
            Elem::Ext(c) => c,
            _ => panic!("coefficients requires an extension element"),
        }
    }

    /// Builds an extension element from base coefficients (padded, not reduced
    /// beyond the degree check).
    pub fn from_coefficients(&self, mut c: Vec<Elem>) -> Result<Elem> {
        let ext = match &*self.0 {
            Kind::Extension(ext) => ext,
            _ => return Err(Error::IncompatibleFields),
        };
        if c.len() > ext.degree {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a degree-{} extension",
                c.len(),
                ext.degree
            )));
        }
        c.resize(ext.degree, ext.base.zero());
        Ok(Elem::Ext(c))
    }

    /// Whether `x` is a well-formed canonical element of this field.
    pub fn contains(&self, x: &Elem) -> bool {
        match (&*self.0, x) {
            (Kind::Rational, Elem::Rat(_)) => true,
            (Kind::Prime { p }, Elem::Res(r)) => r < p,
            (Kind::Extension(ext), Elem::Ext(c)) => {
                c.len() == ext.degree && c.iter().all(|e| ext.base.contains(e))
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Rat(r) => r.is_zero(),
            Elem::Res(r) => *r == 0,
            Elem::Ext(c) => {
                let base = self.base().unwrap();
                c.iter().all(|e| base.is_zero(e))
            }
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Rational, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Kind::Prime { p }, Elem::Res(x), Elem::Res(y)) => {
                Elem::Res(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Kind::Extension(ext), Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(
                x.iter()
                    .zip(y)
                    .map(|(u, v)| ext.base.add(u, v))
                    .collect(),
            ),
            _ => panic!("element does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (Kind::Rational, Elem::Rat(x)) => Elem::Rat(-x),
            (Kind::Prime { p }, Elem::Res(x)) => Elem::Res(if *x == 0 { 0 } else { p - x }),
            (Kind::Extension(ext), Elem::Ext(x)) => {
                Elem::Ext(x.iter().map(|u| ext.base.neg(u)).collect())
            }
            _ => panic!("element does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Rational, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Kind::Prime { p }, Elem::Res(x), Elem::Res(y)) => {
                Elem::Res(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Kind::Extension(ext), Elem::Ext(x), Elem::Ext(y)) => ext.mul(x, y),
            _ => panic!("element does not belong to {self:?}"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (Kind::Rational, Elem::Rat(x)) => Elem::Rat(x.recip()),
            (Kind::Prime { p }, Elem::Res(x)) => Elem::Res(inv_mod(*x, *p)),
            (Kind::Extension(ext), _) => {
                let e = &ext.size - BigUint::from(2u8);
                self.pow(a, &e)
            }
            _ => panic!("element does not belong to {self:?}"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub fn pow_u64(&self, a: &Elem, e: u64) -> Elem {
        self.pow(a, &BigUint::from(e))
    }

    /// Applies `y -> y^{q0}` `iterate` times, where `q0` is the size of the
    /// subfield the automorphism should fix.
    pub fn frobenius(&self, x: &Elem, q0: &BigUint, iterate: usize) -> Result<Elem> {
        if self.is_rational() {
            return Err(Error::RationalField);
        }
        let mut y = x.clone();
        for _ in 0..iterate {
            y = self.pow(&y, q0);
        }
        Ok(y)
    }

    /// The unique `y` with `y^p = x`, namely `x^{p^{k-1}}` in F_{p^k}.
    pub fn pth_root(&self, x: &Elem) -> Result<Elem> {
        if self.is_rational() {
            return Err(Error::RationalField);
        }
        let p = BigUint::from(self.characteristic());
        let e = num_traits::pow(p, self.absolute_degree() - 1);
        Ok(self.pow(x, &e))
    }

    /// Uniform element for finite fields; small integer in `[-3, 3]` over Q.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            Kind::Rational => self.from_i64(rng.gen_range(-3..=3)),
            Kind::Prime { p } => Elem::Res(rng.gen_range(0..*p)),
            Kind::Extension(ext) => {
                Elem::Ext((0..ext.degree).map(|_| ext.base.random(rng)).collect())
            }
        }
    }

    /// All elements of a finite field in canonical order; `None` for Q or
    /// for fields with more than `limit` elements.
    pub fn elements(&self, limit: usize) -> Option<Vec<Elem>> {
        let size = self.size()?.to_usize()?;
        if size > limit {
            return None;
        }
        let mut out = match &*self.0 {
            Kind::Rational => unreachable!(),
            Kind::Prime { p } => (0..*p).map(Elem::Res).collect::<Vec<_>>(),
            Kind::Extension(ext) => {
                let base_elems = ext.base.elements(limit)?;
                let mut all: Vec<Vec<Elem>> = vec![Vec::new()];
                for _ in 0..ext.degree {
                    let mut next = Vec::with_capacity(all.len() * base_elems.len());
                    for prefix in &all {
                        for b in &base_elems {
                            let mut v = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    all = next;
                }
                all.into_iter().map(Elem::Ext).collect()
            }
        };
        out.sort_by(|a, b| self.cmp(a, b));
        Some(out)
    }

    /// Canonical total order: numeric on Q, by residue on F_p, and
    /// lexicographic on the coefficient vector `(c_0, c_1, ...)` otherwise.
    pub fn cmp(&self, a: &Elem, b: &Elem) -> Ordering {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => x.cmp(y),
            (Elem::Res(x), Elem::Res(y)) => x.cmp(y),
            (Elem::Ext(x), Elem::Ext(y)) => {
                let base = self.base().unwrap();
                for (u, v) in x.iter().zip(y) {
                    match base.cmp(u, v) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            _ => panic!("element does not belong to {self:?}"),
        }
    }

    /// Human-readable form; matches the text encoding.
    pub fn format(&self, x: &Elem) -> String {
        match self.encode(x) {
            ScalarText::Atom(s) => s,
            list => list.to_string(),
        }
    }

    /// Text encoding used by the JSON formats.
    pub fn encode(&self, x: &Elem) -> ScalarText {
        match x {
            Elem::Rat(r) => {
                if r.denom().is_one() {
                    ScalarText::Atom(r.numer().to_string())
                } else {
                    ScalarText::Atom(format!("{}/{}", r.numer(), r.denom()))
                }
            }
            Elem::Res(r) => ScalarText::Atom(r.to_string()),
            Elem::Ext(c) => {
                let base = self.base().unwrap();
                ScalarText::List(c.iter().map(|e| base.encode(e)).collect())
            }
        }
    }

    /// Parses the text encoding. Extension fields also accept a bare atom,
    /// read as an element of the base field.
    pub fn decode(&self, t: &ScalarText) -> Result<Elem> {
        match (&*self.0, t) {
            (Kind::Rational, ScalarText::Atom(s)) => parse_rational(s).map(Elem::Rat),
            (Kind::Prime { .. }, ScalarText::Atom(s)) => {
                let v: BigInt = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue '{s}'")))?;
                Ok(self.from_bigint(&v))
            }
            (Kind::Extension(ext), ScalarText::List(items)) => {
                if items.len() > ext.degree {
                    return Err(Error::Parse(format!(
                        "{} coefficients for a degree-{} extension",
                        items.len(),
                        ext.degree
                    )));
                }
                let c = items
                    .iter()
                    .map(|i| ext.base.decode(i))
                    .collect::<Result<Vec<_>>>()?;
                self.from_coefficients(c)
            }
            (Kind::Extension(ext), ScalarText::Atom(_)) => Ok(self.embed(&ext.base.decode(t)?)),
            _ => Err(Error::Parse(format!("scalar {t} does not match field"))),
        }
    }

    /// Parses a scalar written as plain text: `3`, `-1/2`, or `[1,2]` for
    /// extension coefficients.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        self.decode(&ScalarText::parse(s)?)
    }
}

impl Extension {
    fn mul(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let base = &self.base;
        let k = self.degree;
        let mut prod = vec![base.zero(); 2 * k - 1];
        for (i, u) in x.iter().enumerate() {
            if base.is_zero(u) {
                continue;
            }
            for (j, v) in y.iter().enumerate() {
                let t = base.mul(u, v);
                prod[i + j] = base.add(&prod[i + j], &t);
            }
        }
        for i in (k..prod.len()).rev() {
            if base.is_zero(&prod[i]) {
                continue;
            }
            let c = prod[i].clone();
            for j in 0..k {
                let t = base.mul(&c, &self.modulus[j]);
                prod[i - k + j] = base.sub(&prod[i - k + j], &t);
            }
            prod[i] = base.zero();
        }
        prod.truncate(k);
        Elem::Ext(prod)
    }
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, x as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// JSON shape of a scalar: a decimal string, or a list of coefficient
/// encodings for extension fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Atom(String),
    List(Vec<ScalarText>),
}

impl ScalarText {
    /// Reads `3`, `1/2`, `[1,2]` or nested lists.
    pub fn parse(s: &str) -> Result<ScalarText> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in '{s}'")))?;
            let mut items = Vec::new();
            let mut depth = 0usize;
            let mut start = 0usize;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '[' => depth += 1,
                    ']' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        items.push(ScalarText::parse(&inner[start..i])?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if !inner.trim().is_empty() {
                items.push(ScalarText::parse(&inner[start..])?);
            }
            Ok(ScalarText::List(items))
        } else if s.is_empty() {
            Err(Error::Parse("empty scalar".into()))
        } else {
            Ok(ScalarText::Atom(s.to_string()))
        }
    }
}

impl fmt::Display for ScalarText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarText::Atom(s) => write!(f, "{s}"),
            ScalarText::List(items) => {
                write!(f, "[")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{it}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A field element together with its field; the checked public API.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: Elem,
}

impl Scalar {
    /// Wraps `value`, rejecting elements that are not canonical in `field`.
    pub fn new(field: &Field, value: Elem) -> Result<Scalar> {
        if !field.contains(&value) {
            return Err(Error::MixedFields);
        }
        Ok(Scalar {
            field: field.clone(),
            value,
        })
    }

    pub fn from_i64(field: &Field, v: i64) -> Scalar {
        Scalar {
            field: field.clone(),
            value: field.from_i64(v),
        }
    }

    pub fn parse(field: &Field, s: &str) -> Result<Scalar> {
        Ok(Scalar {
            field: field.clone(),
            value: field.parse(s)?,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    pub fn into_value(self) -> Elem {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    fn same(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, value: Elem) -> Scalar {
        Scalar {
            field: self.field.clone(),
            value,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(&self.value, &other.value)))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(&self.value, &other.value)))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        Ok(self.wrap(self.field.div(&self.value, &other.value)?))
    }

    pub fn neg(&self) -> Scalar {
        self.wrap(self.field.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Scalar> {
        Ok(self.wrap(self.field.inv(&self.value)?))
    }

    pub fn try_eq(&self, other: &Scalar) -> Result<bool> {
        self.same(other)?;
        Ok(self.value == other.value)
    }

    pub fn pow(&self, e: u64) -> Scalar {
        self.wrap(self.field.pow_u64(&self.value, e))
    }

    /// `x -> x^{q0}` applied `iterate` times.
    pub fn frobenius(&self, q0: &BigUint, iterate: usize) -> Result<Scalar> {
        Ok(self.wrap(self.field.frobenius(&self.value, q0, iterate)?))
    }

    pub fn pth_root(&self) -> Result<Scalar> {
        Ok(self.wrap(self.field.pth_root(&self.value)?))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}
