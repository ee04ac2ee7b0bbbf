use thiserror::Error;

use crate::algebra::Algebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is only defined for {expected}, got {got}")]
    WrongAlgebra { expected: Algebra, got: Algebra },

    #[error("weight {0} lies outside the Tits cone (negative level or walk budget exhausted)")]
    OutsideTitsCone(String),

    #[error("weight at height {height} lies outside the truncation region")]
    OutOfTruncation { height: i64 },

    #[error("weight {0} has level 0")]
    LevelZero(String),

    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("k = {k} is not in an admissible residue class mod {modulus}")]
    ResidueClass { k: i64, modulus: i64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("requested offset {needed} exceeds computed depth {depth}")]
    DepthInsufficient { needed: i64, depth: i64 },

    #[error("no delta-maximal weight of {highest} above {weight}")]
    NoDeltaMaximal { highest: String, weight: String },

    #[error("negative multiplicity {value} at delta offset {offset}: unitarity violated")]
    NegativeMultiplicity { offset: i64, value: String },

    #[error("no component found within {0} delta levels")]
    NoComponent(i64),

    #[error("degree mismatch: {u} + {v} != {w}")]
    DegreeMismatch { u: u32, v: u32, w: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
