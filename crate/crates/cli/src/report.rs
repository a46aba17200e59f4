//! The versioned JSON report written by `--json`. The layout is documented
//! in `docs/report-schema.md`; any change to it bumps [`SCHEMA_VERSION`].

use casas_core::casas::{
    CaVerdict, CascadeTrace, CoverageVerdict, MReport, QuadClosureReport, QuadResultants,
    SearchReport,
};
use casas_core::multipoly::GbCertificate;
use casas_core::FieldDescriptor;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: u32,
    /// Arguments after the program name, verbatim.
    pub command: Vec<String>,
    /// Coefficient field of the computation; absent for field-free commands
    /// and for symbolic work over the integers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    pub payload: Payload,
    /// Present only with `--timings`, so default reports are reproducible
    /// byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Check {
        polynomial: String,
        verdict: CaVerdict,
    },
    Hasse {
        polynomial: String,
        derivatives: Vec<HasseEntry>,
    },
    Search(SearchReport),
    Cascade(CascadeTrace),
    Coverage {
        max: u64,
        open: Vec<u64>,
        verdicts: Vec<CoverageVerdict>,
    },
    Symbolic(SymbolicResult),
    QuadScan(SearchReport),
    QuadClosure(QuadClosureReport),
    QuadPoint {
        a: String,
        b: String,
        polynomial: String,
        verdict: CaVerdict,
    },
    QuadResultants(QuadResultants),
    VerifyM(MReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseEntry {
    pub i: usize,
    pub derivative: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicResult {
    pub degree: usize,
    /// `"Z"` or the display form of the field.
    pub base: String,
    pub resultants: Vec<SymbolicEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GbCertificate>,
}

/// `Res_X(P, P_i)` of the generic degree-`d` polynomial in `a_1, ..., a_(d-1)`,
/// where `a_j` has weight `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicEntry {
    pub i: usize,
    pub terms: usize,
    /// `None` when the terms have different weighted degrees.
    pub weighted_degree: Option<u32>,
    pub expected_weighted_degree: u32,
    /// Under the weighted order; `None` for the zero polynomial.
    pub leading_monomial: Option<String>,
    pub resultant: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use casas_core::casas::theorem_coverage;

    #[test]
    fn tagged_payloads_round_trip() {
        let report = JsonReport {
            schema_version: SCHEMA_VERSION,
            command: vec!["coverage".into(), "--max".into(), "13".into()],
            field: None,
            payload: Payload::Coverage {
                max: 13,
                open: vec![12],
                verdicts: (1..13).map(theorem_coverage).collect(),
            },
            timings: Some(Timings { wall_ms: 0.25 }),
        };
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains(r#""payload":{"kind":"coverage","max":13"#));
        assert_eq!(serde_json::from_str::<JsonReport>(&text).unwrap(), report);
    }
}
