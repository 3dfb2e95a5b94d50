use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Mat, Subspace};
use crate::symplectic::SymplecticSpace;

use super::jordan::JordanSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Jordan,
    Descent,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::Jordan => "jordan",
            Case::Descent => "descent",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Record `(A, C, B)` claiming `CᵀΩC = Ω` and `C⁻¹AC = diag(B, Bᵀ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormCertificate {
    pub field: Field,
    pub a: Mat,
    pub c: Mat,
    pub b: Mat,
    pub case: Case,
    /// Present exactly when `case` is [`Case::Jordan`].
    pub jordan_spec: Option<JordanSpec>,
}

impl NormalFormCertificate {
    pub fn n(&self) -> usize {
        self.b.rows()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Report {
    /// `CᵀΩC = Ω`.
    pub symplectic: Outcome,
    /// `C` invertible and `C⁻¹AC = diag(B, Bᵀ)`.
    pub conjugation: Outcome,
    /// `B` equals the Jordan matrix of a canonical `jordan_spec`.
    pub jordan: Outcome,
    /// `charpoly(A) = charpoly(B)²`.
    pub charpoly: Outcome,
}

impl Report {
    fn all(o: Outcome) -> Report {
        Report {
            symplectic: o,
            conjugation: o,
            jordan: o,
            charpoly: o,
        }
    }

    pub fn entries(&self) -> [(&'static str, Outcome); 4] {
        [
            ("symplectic", self.symplectic),
            ("conjugation", self.conjugation),
            ("jordan", self.jordan),
            ("charpoly", self.charpoly),
        ]
    }

    pub fn passed(&self) -> bool {
        self.entries().iter().all(|(_, o)| *o != Outcome::Fail)
    }
}

fn dual_diag(b: &Mat) -> Mat {
    let z = Mat::zeros(b.field(), b.rows(), b.cols());
    Mat::block2(b, &z, &z, &b.transpose())
}

/// Recomputes every claim of the certificate from `A`, `C` and `B` alone.
pub fn verify_certificate(cert: &NormalFormCertificate) -> Report {
    let n = cert.b.rows();
    let f = &cert.field;
    let shapes_ok = n > 0
        && cert.b.is_square()
        && [&cert.a, &cert.c].iter().all(|m| m.rows() == 2 * n && m.cols() == 2 * n)
        && [&cert.a, &cert.b, &cert.c].iter().all(|m| m.field() == f);
    if !shapes_ok {
        return Report::all(Outcome::Fail);
    }
    let space = SymplecticSpace::new(f, n).expect("n is positive");
    let symplectic = Outcome::from_bool(space.is_symplectic_matrix(&cert.c).unwrap_or(false));
    let conjugation = Outcome::from_bool(match cert.c.inverse() {
        Ok(ci) => &(&ci * &cert.a) * &cert.c == dual_diag(&cert.b),
        Err(_) => false,
    });
    let jordan = match (cert.case, &cert.jordan_spec) {
        (Case::Descent, _) => Outcome::NotApplicable,
        (Case::Jordan, None) => Outcome::Fail,
        (Case::Jordan, Some(spec)) => Outcome::from_bool(
            spec.dim() == n && spec.is_canonical(f) && spec.matrix(f) == cert.b,
        ),
    };
    let charpoly = Outcome::from_bool(match (cert.a.charpoly(), cert.b.charpoly()) {
        (Ok(pa), Ok(pb)) => pa == pb.pow(2),
        _ => false,
    });
    Report {
        symplectic,
        conjugation,
        jordan,
        charpoly,
    }
}

/// Complementary invariant lagrangians spanned by the two halves of `C`,
/// and the operator `l = B` on `U`, so that `A = C diag(l, lᵀ) C⁻¹`.
pub fn polarize(cert: &NormalFormCertificate) -> Result<(Subspace, Subspace, Mat)> {
    let report = verify_certificate(cert);
    if !report.passed() {
        let failed: Vec<&str> = report
            .entries()
            .iter()
            .filter(|(_, o)| *o == Outcome::Fail)
            .map(|(k, _)| *k)
            .collect();
        return Err(Error::InvalidCertificate(format!("failed checks: {}", failed.join(", "))));
    }
    let n = cert.n();
    let f = &cert.field;
    let half = |r: std::ops::Range<usize>| {
        let cols: Vec<_> = r.map(|j| cert.c.col(j)).collect();
        Subspace::from_vectors(f, 2 * n, &cols)
    };
    Ok((half(0..n), half(n..2 * n), cert.b.clone()))
}

/// `C diag(B, Bᵀ) C⁻¹`.
pub fn reconstruct(cert: &NormalFormCertificate) -> Result<Mat> {
    let ci = cert.c.inverse()?;
    Ok(&(&cert.c * &dual_diag(&cert.b)) * &ci)
}
