//! JSON documents for log data, certificates and wall assignments.
//!
//! Integers travel as JSON numbers in the `i128` range; rationals as strings
//! `"p/q"`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::decider::{Certificate, CertificateStep};
use crate::error::{Error, Result};
use crate::lattice::LatticeVec;
use crate::logdatum::LogDatum;
use crate::poly::{format_rational, parse_poly, parse_rational, BiPoly};
use crate::scalar::Scalar;
use crate::wallfn::WallAssignment;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub e: [i128; 2],
    pub nu: Vec<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDocument {
    pub edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

impl DatumDocument {
    pub fn from_datum<T: Scalar>(s: &LogDatum<T>) -> Result<Self> {
        let edges = s
            .edges()
            .iter()
            .map(|e| {
                Ok(EdgeDocument {
                    e: [e.vector().x.to_i128_c()?, e.vector().y.to_i128_c()?],
                    nu: e
                        .partition()
                        .parts()
                        .iter()
                        .map(|p| p.to_i128_c())
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(DatumDocument {
            edges,
            name: None,
            comment: None,
        })
    }

    pub fn to_datum<T: Scalar>(&self) -> Result<LogDatum<T>> {
        let raw = self
            .edges
            .iter()
            .map(|e| {
                let v = LatticeVec::new(T::from_i128_c(e.e[0])?, T::from_i128_c(e.e[1])?);
                let nu =
                    e.nu.iter()
                        .map(|&p| T::from_i128_c(p))
                        .collect::<Result<Vec<_>>>()?;
                Ok((v, nu))
            })
            .collect::<Result<Vec<_>>>()?;
        LogDatum::validate(raw)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Parses a datum document; malformed JSON is a `Parse` error, a well-formed
/// document violating an invariant reports that invariant.
pub fn datum_from_json<T: Scalar>(text: &str) -> Result<LogDatum<T>> {
    let doc: DatumDocument = serde_json::from_str(text).map_err(parse_err)?;
    doc.to_datum()
}

pub fn datum_to_json<T: Scalar>(s: &LogDatum<T>) -> Result<String> {
    serde_json::to_string(&DatumDocument::from_datum(s)?).map_err(parse_err)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDocument {
    pub edge: usize,
    pub part: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub steps: Vec<StepDocument>,
    pub terminal: DatumDocument,
}

impl CertificateDocument {
    pub fn from_certificate<T: Scalar>(c: &Certificate<T>) -> Result<Self> {
        Ok(CertificateDocument {
            steps: c
                .steps
                .iter()
                .map(|s| {
                    Ok(StepDocument {
                        edge: s.edge,
                        part: s.part.to_i128_c()?,
                    })
                })
                .collect::<Result<_>>()?,
            terminal: DatumDocument::from_datum(&c.terminal)?,
        })
    }

    pub fn to_certificate<T: Scalar>(&self) -> Result<Certificate<T>> {
        Ok(Certificate {
            steps: self
                .steps
                .iter()
                .map(|s| {
                    Ok(CertificateStep {
                        edge: s.edge,
                        part: T::from_i128_c(s.part)?,
                    })
                })
                .collect::<Result<_>>()?,
            terminal: self.terminal.to_datum()?,
        })
    }
}

pub fn certificate_to_json<T: Scalar>(c: &Certificate<T>) -> Result<String> {
    serde_json::to_string(&CertificateDocument::from_certificate(c)?).map_err(parse_err)
}

pub fn certificate_from_json<T: Scalar>(text: &str) -> Result<Certificate<T>> {
    let doc: CertificateDocument = serde_json::from_str(text).map_err(parse_err)?;
    doc.to_certificate()
}

/// A factor as JSON: either a list of `[a, b, "p/q"]` triples for
/// `c * x^a * u^b`, or the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorDocument {
    Terms(Vec<(u32, u32, String)>),
    Text(String),
}

impl FactorDocument {
    pub fn from_poly(f: &BiPoly<BigRational>) -> Self {
        FactorDocument::Terms(
            f.terms()
                .map(|(&(a, b), c)| (a, b, format_rational(c)))
                .collect(),
        )
    }

    pub fn to_poly(&self) -> Result<BiPoly<BigRational>> {
        match self {
            FactorDocument::Text(s) => parse_poly(s),
            FactorDocument::Terms(ts) => Ok(BiPoly::from_terms(
                ts.iter()
                    .map(|(a, b, c)| Ok(((*a, *b), parse_rational(c)?)))
                    .collect::<Result<Vec<_>>>()?,
            )),
        }
    }
}

/// `{"walls": [[factor, ...], ...]}`, one inner list per edge in
/// counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallDocument {
    pub walls: Vec<Vec<FactorDocument>>,
}

impl WallDocument {
    pub fn from_assignment(w: &WallAssignment<BigRational>) -> Self {
        WallDocument {
            walls: w
                .walls
                .iter()
                .map(|wall| wall.iter().map(FactorDocument::from_poly).collect())
                .collect(),
        }
    }

    pub fn to_assignment(&self) -> Result<WallAssignment<BigRational>> {
        Ok(WallAssignment::new(
            self.walls
                .iter()
                .map(|wall| wall.iter().map(FactorDocument::to_poly).collect())
                .collect::<Result<_>>()?,
        ))
    }
}

pub fn walls_from_json(text: &str) -> Result<WallAssignment<BigRational>> {
    let doc: WallDocument = serde_json::from_str(text).map_err(parse_err)?;
    doc.to_assignment()
}

pub fn walls_to_json(w: &WallAssignment<BigRational>) -> Result<String> {
    serde_json::to_string(&WallDocument::from_assignment(w)).map_err(parse_err)
}
