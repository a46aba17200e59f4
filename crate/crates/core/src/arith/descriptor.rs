use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Self-describing tag for a coefficient field, as written into reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescriptor {
    Rationals,
    Prime {
        #[serde(with = "crate::report::decimal")]
        p: BigUint,
    },
    /// `F_p[t] / (modulus)`; `modulus` is monic, lowest degree first.
    Extension {
        p: u64,
        m: u32,
        modulus: Vec<u64>,
    },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => f.write_str("Q"),
            FieldDescriptor::Prime { p } => write!(f, "F_{p}"),
            FieldDescriptor::Extension { p, m, modulus } => {
                let terms: Vec<String> = modulus
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| **c != 0)
                    .map(|(e, &c)| {
                        let var = match e {
                            0 => String::new(),
                            1 => "t".to_string(),
                            _ => format!("t^{e}"),
                        };
                        match (c, var.is_empty()) {
                            (_, true) => c.to_string(),
                            (1, false) => var,
                            _ => format!("{c}*{var}"),
                        }
                    })
                    .collect();
                write!(f, "F_{{{p}^{m}}} = F_{p}[t]/({})", terms.join("+"))
            }
        }
    }
}
