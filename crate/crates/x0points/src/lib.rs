//! Classification of degree-5 points on the modular curves X_0(N).
//!
//! The engine computes curve invariants (genus, Atkin-Lehner quotient
//! genera, gonality bounds), builds the positive-definite degree pairing on
//! Hom(J_0(N), E) to rule out degree-5 maps to positive-rank elliptic
//! curves, applies Castelnuovo-Severi exclusions, and combines these with
//! bundled arithmetic data (newform factor ranks, elliptic curve tables)
//! into per-level verdicts with replayable proof traces.
//!
//! Modules follow the pipeline:
//!
//! - [`arith`]: multiplicative functions, divisors, class numbers
//! - [`invariants`]: X_0(N) invariants, fixed points, gonality bounds
//! - [`elliptic`]: elliptic curves as data, point counts, Hecke eigenvalues
//! - [`homlattice`]: the degree quadratic form and representability search
//! - [`csfilter`]: Castelnuovo-Severi exclusion certificates
//! - [`ingest`]: LMFDB client with an offline snapshot
//! - [`facts`]: bundled fact tables keyed by level
//! - [`classify`]: the decision engine and report generators

pub mod arith;
pub mod classify;
pub mod csfilter;
pub mod elliptic;
pub mod error;
pub mod facts;
pub mod homlattice;
pub mod ingest;
pub mod invariants;
pub mod report;
