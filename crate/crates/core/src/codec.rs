//! JSON formats for instances and certificates.
//!
//! Field elements are written as strings (`"3"`, `"-1/2"`) or, for
//! extension fields, as arrays of base-field coefficients from the constant
//! term up. Fields are named by their descriptor (`rational`, `prime:p`,
//! `ext:p:c0,...,1`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, ScalarText};
use crate::linalg::Mat;
use crate::normal_form::{Case, JordanEntry, JordanSpec, NormalFormCertificate, Report};
use crate::symplectic::SymplecticSpace;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn field_name(field: &Field) -> Result<String> {
    field
        .descriptor()
        .map(|d| d.to_string())
        .ok_or_else(|| Error::Parse("field has no descriptor".into()))
}

fn field_from_name(name: &str) -> Result<Field> {
    let desc: FieldDescriptor = name.parse()?;
    Field::from_descriptor(&desc).map_err(parse_err)
}

fn decode_square(field: &Field, rows: &[Vec<ScalarText>], size: usize, what: &str) -> Result<Mat> {
    let m = Mat::decode(field, rows).map_err(parse_err)?;
    if m.rows() != size || m.cols() != size {
        return Err(Error::Parse(format!(
            "{what} is {}x{}, expected {size}x{size}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// A `2n x 2n` matrix over a named field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub field: String,
    pub n: usize,
    pub matrix: Vec<Vec<ScalarText>>,
}

impl InstanceFile {
    pub fn new(a: &Mat) -> Result<InstanceFile> {
        if !a.is_square() || a.rows() % 2 != 0 || a.rows() == 0 {
            return Err(Error::DimensionMismatch("instance must be 2n x 2n".into()));
        }
        Ok(InstanceFile {
            field: field_name(a.field())?,
            n: a.rows() / 2,
            matrix: a.encode(),
        })
    }

    pub fn decode(&self) -> Result<(SymplecticSpace, Mat)> {
        let field = field_from_name(&self.field)?;
        let space = SymplecticSpace::new(&field, self.n).map_err(parse_err)?;
        let a = decode_square(&field, &self.matrix, 2 * self.n, "matrix")?;
        Ok((space, a))
    }

    pub fn from_json(s: &str) -> Result<InstanceFile> {
        serde_json::from_str(s).map_err(parse_err)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanEntryFile {
    pub eigenvalue: ScalarText,
    pub sizes: Vec<usize>,
}

/// Serialized [`NormalFormCertificate`] plus the check outcomes recorded
/// when it was written. Verification never reads `checks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub field: String,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<ScalarText>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<ScalarText>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<ScalarText>>,
    pub case: String,
    pub jordan_spec: Option<Vec<JordanEntryFile>>,
    #[serde(default)]
    pub checks: BTreeMap<String, String>,
}

impl CertificateFile {
    pub fn new(cert: &NormalFormCertificate, report: &Report) -> Result<CertificateFile> {
        let f = &cert.field;
        Ok(CertificateFile {
            field: field_name(f)?,
            n: cert.n(),
            a: cert.a.encode(),
            c: cert.c.encode(),
            b: cert.b.encode(),
            case: cert.case.as_str().to_string(),
            jordan_spec: cert.jordan_spec.as_ref().map(|spec| {
                spec.0
                    .iter()
                    .map(|e| JordanEntryFile {
                        eigenvalue: f.encode(&e.eigenvalue),
                        sizes: e.sizes.clone(),
                    })
                    .collect()
            }),
            checks: report
                .entries()
                .iter()
                .map(|(k, o)| (k.to_string(), o.as_str().to_string()))
                .collect(),
        })
    }

    pub fn decode(&self) -> Result<NormalFormCertificate> {
        let field = field_from_name(&self.field)?;
        if self.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        let case = match self.case.as_str() {
            "jordan" => Case::Jordan,
            "descent" => Case::Descent,
            other => return Err(Error::Parse(format!("unknown case '{other}'"))),
        };
        let jordan_spec = match &self.jordan_spec {
            None => None,
            Some(entries) => Some(JordanSpec(
                entries
                    .iter()
                    .map(|e| {
                        Ok(JordanEntry {
                            eigenvalue: field.decode(&e.eigenvalue).map_err(parse_err)?,
                            sizes: e.sizes.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            )),
        };
        Ok(NormalFormCertificate {
            a: decode_square(&field, &self.a, 2 * self.n, "A")?,
            c: decode_square(&field, &self.c, 2 * self.n, "C")?,
            b: decode_square(&field, &self.b, self.n, "B")?,
            field,
            case,
            jordan_spec,
        })
    }

    pub fn from_json(s: &str) -> Result<CertificateFile> {
        serde_json::from_str(s).map_err(parse_err)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
