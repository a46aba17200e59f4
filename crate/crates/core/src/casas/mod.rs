//! Counterexample verdicts, searches over finite fields, the elimination
//! cascade, degree coverage and the quadrinomial family.

mod cascade;
mod checkpoint;
mod closure;
mod quad;
mod search;
mod verdict;

pub use cascade::{
    elimination_cascade, theorem_coverage, CascadeTrace, CoverageRule, CoverageVerdict,
    Decomposition, ForcedZero, VanishingBinomial,
};
pub use checkpoint::{Checkpoint, CHECKPOINT_SCHEMA_VERSION};
pub use closure::{
    distinct_degree_factors, quad_closure, roots_in, ClosurePoint, QuadClosureReport,
};
pub use quad::{
    identically_zero_resultants, m_valuation, quad_family, quad_poly, quad_resultants, quad_scan,
    verify_m, verify_quad_point, MFactor, MReport, QuadOptions, QuadResultant, QuadResultants,
    M_DECIMAL, M_FACTORS, QUAD_DEGREE,
};
pub use search::{
    candidate, exhaustive_search, CheckpointConfig, Partition, SearchHit, SearchMethod,
    SearchOptions, SearchReport, DEFAULT_BUDGET,
};
pub use verdict::{
    check_ca, family_counterexample, normalize, normalize_at, CaInstance, CaVerdict, GcdEntry,
    NormalizedForm,
};
