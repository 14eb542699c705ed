//! Error type shared by all kernels.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::Rat;

/// Errors reported by the exact-geometry kernels.
///
/// Every variant corresponds to a violated precondition or an infeasible
/// request; none of them are "internal" failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A direction was requested for the zero vector.
    ZeroVector,
    /// Coordinate length does not match the ambient rank.
    RankMismatch { expected: usize, actual: usize },
    /// The cone handed in is not a cone of the fan.
    ConeNotInFan,
    /// The pair (τ, σ) is not a codimension-one face pair.
    NotAFacetPair,
    /// A simplicial cone or fan was required.
    NonSimplicial,
    /// The lifted cones do not satisfy the fan axioms.
    NotAFan(String),
    /// Generators of a cone are not strongly convex / not extreme.
    InvalidCone(String),
    /// The divisor is not Cartier; carries the offending cone (as a ray-index
    /// set) and a rational solution of the local system when one exists.
    NotCartier {
        cone: Vec<usize>,
        rational: Option<Vec<Rat>>,
    },
    /// The cone does not bound exactly two cones of the next dimension.
    NotAWall,
    /// The candidate fan does not refine the base fan.
    NotARefinement,
    /// Two models of a b-divisor are not comparable by refinement.
    IncomparableModels,
    /// A weight did not satisfy the balancing condition.
    Unbalanced { cones: Vec<Vec<usize>> },
    /// A piecewise-linear function is not linear on a cone where it must be.
    FunctionNotLinearOnCone,
    /// The weight does not have the expected (co)dimension.
    WrongCodimension { expected: usize, actual: usize },
    /// Dimension of a cone does not match what the operation requires.
    DimensionMismatch { expected: usize, actual: usize },
    /// A linear system over the integers has no solution.
    Infeasible,
    /// The polyhedron P_D is empty.
    EmptyPolytope,
    /// The Newton polytope is a single point.
    DimensionZeroPolytope,
    /// A support function is unbounded below on the fan support.
    UnboundedOnSupport,
    /// The unimodularization heuristic exceeded its iteration budget.
    IterationLimit,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector => write!(f, "the zero vector has no direction"),
            Error::RankMismatch { expected, actual } => {
                write!(f, "rank mismatch: expected {expected}, got {actual}")
            }
            Error::ConeNotInFan => write!(f, "cone is not a cone of the fan"),
            Error::NotAFacetPair => write!(f, "cones do not form a codimension-one face pair"),
            Error::NonSimplicial => write!(f, "a simplicial cone or fan is required"),
            Error::NotAFan(msg) => write!(f, "not a fan: {msg}"),
            Error::InvalidCone(msg) => write!(f, "invalid cone: {msg}"),
            Error::NotCartier { cone, .. } => {
                write!(f, "divisor is not Cartier on cone {cone:?}")
            }
            Error::NotAWall => write!(f, "cone is not a wall"),
            Error::NotARefinement => write!(f, "fan is not a refinement"),
            Error::IncomparableModels => write!(f, "models are not comparable by refinement"),
            Error::Unbalanced { cones } => {
                write!(f, "balancing fails at {} cone(s)", cones.len())
            }
            Error::FunctionNotLinearOnCone => {
                write!(f, "function is not linear on a cone of the support")
            }
            Error::WrongCodimension { expected, actual } => {
                write!(f, "wrong codimension: expected {expected}, got {actual}")
            }
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::Infeasible => write!(f, "no integral solution exists"),
            Error::EmptyPolytope => write!(f, "polytope is empty"),
            Error::DimensionZeroPolytope => {
                write!(f, "Newton polytope is zero-dimensional")
            }
            Error::UnboundedOnSupport => {
                write!(f, "support function is unbounded on the fan support")
            }
            Error::IterationLimit => write!(f, "iteration budget exceeded"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
