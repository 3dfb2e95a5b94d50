use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::symplectic::SymplecticSpace;

use super::jordan::{jordan_block, JordanEntry, JordanSpec};

/// One group of blocks of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockSpec {
    /// Jordan blocks `J_s(λ)` for each size `s`.
    Jordan { eigenvalue: Elem, sizes: Vec<usize> },
    /// Companion matrices of `P^k` for each power `k`; `P` monic.
    Companion { poly: Poly, powers: Vec<usize> },
}

/// Block structure of `B` for [`random_self_adjoint`].
///
/// Text form: entries separated by `;`, each `eigenvalue:[sizes]` or
/// `{c0,c1,...,1}:[powers]` with polynomial coefficients listed from the
/// constant term up. Example: `1:[2,1];{1,0,1}:[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    field: Field,
    pub blocks: Vec<BlockSpec>,
}

/// Splits at `sep` outside brackets and braces.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadSpec(msg.into())
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| bad(format!("expected [sizes], got {s:?}")))?;
    let sizes = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad(format!("bad size {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if sizes.contains(&0) {
        return Err(bad("block sizes must be positive"));
    }
    Ok(sizes)
}

impl InstanceSpec {
    pub fn new(field: &Field, blocks: Vec<BlockSpec>) -> Result<InstanceSpec> {
        if blocks.is_empty() {
            return Err(bad("empty spec"));
        }
        for b in &blocks {
            match b {
                BlockSpec::Jordan { eigenvalue, sizes } => {
                    if !field.contains(eigenvalue) {
                        return Err(bad("eigenvalue outside the field"));
                    }
                    if sizes.is_empty() || sizes.contains(&0) {
                        return Err(bad("block sizes must be positive"));
                    }
                }
                BlockSpec::Companion { poly, powers } => {
                    if poly.field() != field {
                        return Err(bad("polynomial over another field"));
                    }
                    if !poly.is_monic() || poly.degree().unwrap_or(0) == 0 {
                        return Err(bad("companion polynomial must be monic and nonconstant"));
                    }
                    if powers.is_empty() || powers.contains(&0) {
                        return Err(bad("powers must be positive"));
                    }
                }
            }
        }
        Ok(InstanceSpec {
            field: field.clone(),
            blocks,
        })
    }

    pub fn parse(field: &Field, s: &str) -> Result<InstanceSpec> {
        let mut blocks = Vec::new();
        for entry in split_top(s.trim(), ';') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let parts = split_top(entry, ':');
            let [head, sizes] = parts[..] else {
                return Err(bad(format!("expected value:[sizes], got {entry:?}")));
            };
            let sizes = parse_sizes(sizes)?;
            let head = head.trim();
            let block = if let Some(inner) = head.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
                let coeffs = split_top(inner, ',')
                    .into_iter()
                    .map(|c| field.parse(c.trim()).map_err(|e| bad(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                BlockSpec::Companion {
                    poly: Poly::new(field, coeffs),
                    powers: sizes,
                }
            } else {
                BlockSpec::Jordan {
                    eigenvalue: field.parse(head).map_err(|e| bad(e.to_string()))?,
                    sizes,
                }
            };
            blocks.push(block);
        }
        InstanceSpec::new(field, blocks)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Size of `B`.
    pub fn dim(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| match b {
                BlockSpec::Jordan { sizes, .. } => sizes.iter().sum(),
                BlockSpec::Companion { poly, powers } => {
                    poly.degree().expect("nonconstant") * powers.iter().sum::<usize>()
                }
            })
            .sum()
    }

    /// `B` in spec order.
    pub fn matrix(&self) -> Mat {
        let f = &self.field;
        let mut blocks = Vec::new();
        for b in &self.blocks {
            match b {
                BlockSpec::Jordan { eigenvalue, sizes } => {
                    blocks.extend(sizes.iter().map(|&s| jordan_block(f, eigenvalue, s)))
                }
                BlockSpec::Companion { poly, powers } => {
                    blocks.extend(powers.iter().map(|&k| companion(&poly.pow(k))))
                }
            }
        }
        Mat::block_diag(f, &blocks)
    }

    /// Canonical Jordan structure of [`InstanceSpec::matrix`] when every
    /// eigenvalue lies in the field. A companion block of `(t - λ)^k` is a
    /// single Jordan block of size `k`.
    pub fn jordan_spec(&self) -> Option<JordanSpec> {
        let f = &self.field;
        let mut entries = Vec::new();
        for b in &self.blocks {
            match b {
                BlockSpec::Jordan { eigenvalue, sizes } => entries.push(JordanEntry {
                    eigenvalue: eigenvalue.clone(),
                    sizes: sizes.clone(),
                }),
                BlockSpec::Companion { poly, powers } => {
                    if poly.degree() != Some(1) {
                        return None;
                    }
                    entries.push(JordanEntry {
                        eigenvalue: f.neg(&poly.coeff(0)),
                        sizes: powers.clone(),
                    });
                }
            }
        }
        Some(JordanSpec(entries).canonical(f))
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        let list = |xs: &[usize]| {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        let entries: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match b {
                BlockSpec::Jordan { eigenvalue, sizes } => {
                    format!("{}:[{}]", f.format(eigenvalue), list(sizes))
                }
                BlockSpec::Companion { poly, powers } => {
                    let cs: Vec<String> = poly.coeffs().iter().map(|c| f.format(c)).collect();
                    format!("{{{}}}:[{}]", cs.join(","), list(powers))
                }
            })
            .collect();
        out.write_str(&entries.join(";"))
    }
}

/// Companion matrix of a monic polynomial: ones below the diagonal and
/// `-c_0, ..., -c_{d-1}` in the last column.
pub fn companion(p: &Poly) -> Mat {
    let f = p.field();
    let d = p.degree().expect("nonconstant");
    Mat::from_fn(f, d, d, |i, j| {
        if j + 1 == d {
            f.neg(&p.coeff(i))
        } else if i == j + 1 {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// `C diag(B, Bᵀ) C⁻¹` with `B` from `spec` and `C` the seeded random
/// symplectic matrix of `space`.
pub fn random_self_adjoint(space: &SymplecticSpace, seed: u64, spec: &InstanceSpec) -> Result<Mat> {
    if spec.field() != space.field() {
        return Err(bad("spec over another field"));
    }
    if spec.dim() != space.n() {
        return Err(bad(format!(
            "spec has dimension {}, expected {}",
            spec.dim(),
            space.n()
        )));
    }
    let b = spec.matrix();
    let z = Mat::zeros(space.field(), space.n(), space.n());
    let a0 = Mat::block2(&b, &z, &z, &b.transpose());
    let c = space.random_symplectic(seed);
    Ok(&(&c * &a0) * &space.symplectic_inverse(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let f5 = Field::prime(5).unwrap();
        let s = InstanceSpec::parse(&f5, "1:[2,1];2:[1]").unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.to_string(), "1:[2,1];2:[1]");
        let c = InstanceSpec::parse(&f5, "{2,0,1}:[1,2]; 3:[1]").unwrap();
        assert_eq!(c.dim(), 7);
        assert_eq!(c.to_string(), "{2,0,1}:[1,2];3:[1]");
        assert_eq!(c.jordan_spec(), None);

        let f9 = Field::extension_of_degree(3, 2).unwrap();
        let e = InstanceSpec::parse(&f9, "[0,1]:[1];{[1,1],1}:[2]").unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(InstanceSpec::parse(&f9, &e.to_string()).unwrap(), e);
    }

    #[test]
    fn parse_errors() {
        let q = Field::rational();
        for bad in ["", "1:[0]", "1:2", "x:[1]", "{1,2}:[1]", "1:[1]:[2]"] {
            assert!(
                matches!(InstanceSpec::parse(&q, bad), Err(Error::BadSpec(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn companion_charpoly() {
        let f3 = Field::prime(3).unwrap();
        let p = Poly::from_ints(&f3, &[2, 1, 0, 1]);
        assert_eq!(companion(&p).charpoly().unwrap(), p);
    }

    #[test]
    fn random_instances_are_self_adjoint() {
        let f5 = Field::prime(5).unwrap();
        let sp = SymplecticSpace::new(&f5, 4).unwrap();
        let spec = InstanceSpec::parse(&f5, "1:[2,1];2:[1]").unwrap();
        for seed in 0..10 {
            let a = random_self_adjoint(&sp, seed, &spec).unwrap();
            assert!(sp.is_self_adjoint(&a).unwrap());
        }
        let small = InstanceSpec::parse(&f5, "1:[1]").unwrap();
        assert!(matches!(
            random_self_adjoint(&sp, 0, &small),
            Err(Error::BadSpec(_))
        ));
    }

    #[test]
    fn nilpotent_spec() {
        let q = Field::rational();
        let sp = SymplecticSpace::new(&q, 3).unwrap();
        let spec = InstanceSpec::parse(&q, "0:[3]").unwrap();
        let a = random_self_adjoint(&sp, 7, &spec).unwrap();
        assert!(!a.pow(2).is_zero());
        assert!(a.pow(3).is_zero());
    }
}
