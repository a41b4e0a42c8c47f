//! Log Calabi-Yau surface data, their mutations, and wall functions.
//!
//! A log datum is a closed, angularly ordered list of lattice vectors, each
//! carrying a partition of its lattice length. Mutations reshape the datum;
//! the decider searches for a sequence that ends in rank one with equal
//! partitions. Wall functions attach polynomials to the edges.

// `ok_or(Error::..)` builds and drops an error on every checked operation
#![allow(clippy::unnecessary_lazy_evaluations)]

pub mod decider;
pub mod error;
pub mod io;
pub mod lattice;
pub mod logdatum;
pub mod mutation;
pub mod poly;
pub mod scalar;
pub mod wallfn;

pub use decider::{
    canonicalize, enumerate_zero_mutable, is_zero_mutable, partitions_of, replay,
    verify_certificate, Assignment, CanonicalForm, Certificate, CertificateStep, Limits, Verdict,
};
pub use error::{Error, Result};
pub use io::{
    certificate_from_json, certificate_to_json, datum_from_json, datum_to_json, walls_from_json,
    walls_to_json, CertificateDocument, DatumDocument, WallDocument,
};
pub use lattice::{
    angle_cmp, apply_map, pos_part, primitive_split, sform, shear_positive, LatticeVec,
    UnimodularMap,
};
pub use logdatum::{
    cone_type, ComponentReport, ComponentType, Edge, FanPresentation, LogDatum, NamedDatum,
    Partition, Rank,
};
pub use mutation::{
    height_and_part, index_for_value, legal_mutations, mutate, mutate_by_value, mutate_traced,
    Branch, MutationIndex,
};
pub use poly::{
    format_rational, is_smooth_curve, parse_poly, parse_rational, resultant_u, BiPoly, Coeff, UPoly,
};
pub use scalar::{ext_gcd, Scalar};
pub use wallfn::{
    an_wall_assignment, generic_construction_available, generic_wall_assignment, is_generic,
    is_subordinate, joint_compatible, kinks, restrict_to_u, FactorCheck, KinkReport,
    SubordinationReport, WallAssignment,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Lattice vector with the default fixed-width scalar.
pub type Vec2 = LatticeVec<i128>;
/// Log datum with the default fixed-width scalar.
pub type Datum = LogDatum<i128>;
/// Log datum with arbitrary-precision entries.
pub type BigDatum = LogDatum<BigInt>;
/// Wall function with exact rational coefficients.
pub type WallPoly = BiPoly<BigRational>;
