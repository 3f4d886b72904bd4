//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not a negative discriminant (need D < 0, D = 0,1 mod 4)")]
    NotADiscriminant(i64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("d = {d} is not a Hall divisor of N = {n} (need d | N, gcd(d, N/d) = 1, d > 1)")]
    NotAHallDivisor { n: u64, d: u64 },
    #[error("prime {p} divides the level {n}")]
    PrimeDividesLevel { n: u64, p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EllipticError {
    #[error("curve {label} has bad reduction at {p}")]
    BadReduction { label: String, p: u64 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomLatticeError {
    #[error("pairing formula not valid for N = {n}, cond = {m}: N/M = {q} is neither squarefree nor coprime to M")]
    UnsupportedRegime { n: u64, m: u64, q: u64 },
    #[error("conductor {m} does not divide the level {n}")]
    ConductorDoesNotDivide { n: u64, m: u64 },
    #[error("level {0} is outside the validity range N < 778 of the divisor basis")]
    LevelOutOfRange(u64),
    #[error("modular degree of {0} is not in the bundled data")]
    MissingDegree(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CsError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("network unavailable: {0}")]
    NetworkUnavailable(String),
    #[error("snapshot miss for query {0} (offline mode)")]
    SnapshotMiss(String),
    #[error("level {level} does not divide {n}")]
    LevelDoesNotDivide { n: u64, level: u64 },
    #[error("malformed data: {0}")]
    Data(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("divergence from paper-anchored oracle: {0}")]
    Divergence(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error("no rule applies to level {0}")]
    Open(u64),
}
