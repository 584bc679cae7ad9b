//! JSON forms of verdicts, certificates and evaluation points.
//!
//! Rationals are written as strings (`"3/4"`) and polynomials in the input
//! grammar, so every emitted certificate can be read back by `verify`.

use ncreal_core::gram::SosCertificate;
use ncreal_core::parse::parse_poly;
use ncreal_core::real::Exactness;
use ncreal_core::{Mat, MatrixPoint, NonRealCertificate, Polynomial, RealnessVerdict, Q};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SosJson {
    pub weights: Vec<String>,
    pub polys: Vec<String>,
}

impl From<&SosCertificate> for SosJson {
    fn from(c: &SosCertificate) -> Self {
        SosJson {
            weights: c.weights.iter().map(ToString::to_string).collect(),
            polys: c.polys.iter().map(ToString::to_string).collect(),
        }
    }
}

impl SosJson {
    pub fn to_certificate(&self, g: usize) -> Result<SosCertificate, CliError> {
        if self.weights.len() != self.polys.len() {
            return Err(CliError::Input(String::from("certificate needs one weight per polynomial")));
        }
        Ok(SosCertificate {
            weights: self.weights.iter().map(|w| rational(w, g)).collect::<Result<_, _>>()?,
            polys: self.polys.iter().map(|p| poly(p, g)).collect::<Result<_, _>>()?,
        })
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CertificateJson {
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub multipliers: Vec<String>,
    #[serde(flatten)]
    pub sos: SosJson,
}

impl From<&NonRealCertificate> for CertificateJson {
    fn from(c: &NonRealCertificate) -> Self {
        let residual = match c.exactness {
            Exactness::Exact => None,
            Exactness::Numeric { residual } => Some(residual),
        };
        CertificateJson {
            exact: c.is_exact(),
            residual,
            multipliers: c.multipliers.iter().map(ToString::to_string).collect(),
            sos: SosJson::from(&c.sos),
        }
    }
}

impl CertificateJson {
    pub fn to_certificate(&self, g: usize) -> Result<NonRealCertificate, CliError> {
        Ok(NonRealCertificate {
            multipliers: self.multipliers.iter().map(|p| poly(p, g)).collect::<Result<_, _>>()?,
            sos: self.sos.to_certificate(g)?,
            exactness: if self.exact {
                Exactness::Exact
            } else {
                Exactness::Numeric { residual: self.residual.unwrap_or(0.0) }
            },
        })
    }

    /// Accepts a bare certificate or a verdict object carrying one.
    pub fn parse(text: &str) -> Result<CertificateJson, CliError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("certificate JSON: {e}")))?;
        let cert = match value.get("certificate") {
            Some(serde_json::Value::Null) => {
                return Err(CliError::Input(String::from("the verdict carries no certificate")))
            }
            Some(inner) => inner.clone(),
            None => value,
        };
        serde_json::from_value(cert).map_err(|e| CliError::Input(format!("certificate JSON: {e}")))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct VerdictJson {
    pub status: String,
    pub method: String,
    pub certificate: Option<CertificateJson>,
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&RealnessVerdict> for VerdictJson {
    fn from(v: &RealnessVerdict) -> Self {
        VerdictJson {
            status: v.status.as_str().to_string(),
            method: v.method.as_str().to_string(),
            certificate: v.certificate.as_ref().map(CertificateJson::from),
            residual: v.residual,
            note: v.note.clone(),
        }
    }
}

/// `{"n": 2, "X": [[[0,1],[0,0]], …], "v": [1, 0]}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PointJson {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: Vec<Vec<Vec<f64>>>,
    pub v: Vec<f64>,
}

impl PointJson {
    pub fn to_point(&self) -> Result<MatrixPoint, CliError> {
        if self.v.len() != self.n {
            return Err(CliError::Input(format!("v has length {} but n = {}", self.v.len(), self.n)));
        }
        let mut mats = Vec::with_capacity(self.x.len());
        for (i, rows) in self.x.iter().enumerate() {
            if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
                return Err(CliError::Input(format!("X{} is not {n}x{n}", i + 1, n = self.n)));
            }
            mats.push(Mat::from_rows(rows));
        }
        MatrixPoint::new(mats, self.v.clone()).map_err(|e| CliError::Input(e.to_string()))
    }
}

fn poly(text: &str, g: usize) -> Result<Polynomial, CliError> {
    parse_poly(text, g).map_err(|e| CliError::Input(format!("{text:?}: {e}")))
}

fn rational(text: &str, g: usize) -> Result<Q, CliError> {
    let p = poly(text, g)?;
    if !p.is_constant() {
        return Err(CliError::Input(format!("{text:?} is not a rational number")));
    }
    Ok(p.constant_term())
}
