//! The on-disk instance format: a JSON document with fields `m`, `s`, `u`,
//! `coeffs` (complex scalars as `[re, im]` arrays) and an optional `seed`.

use num_complex::Complex64;
use serde::Deserialize;

use gencirc_core::{CirculantSpec, GenPermMatrix, ShiftPermutation};

use crate::emit::{fmt_real, JsonWriter};
use crate::CliError;

/// Parsed instance file. Field names are the wire names; complex scalars
/// are `[re, im]` pairs throughout.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub m: usize,
    pub s: usize,
    pub u: Vec<[f64; 2]>,
    pub coeffs: Vec<[f64; 2]>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl InstanceDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: InstanceDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("invalid instance document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Structural validation beyond what deserialization enforces.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.m == 0 {
            return Err(CliError::Parse("m must be positive".into()));
        }
        if self.s >= self.m {
            return Err(CliError::Parse(format!(
                "s = {} out of range [0, {})",
                self.s, self.m
            )));
        }
        if self.u.len() != self.m {
            return Err(CliError::Parse(format!(
                "u has {} entries, expected m = {}",
                self.u.len(),
                self.m
            )));
        }
        if self.coeffs.is_empty() {
            return Err(CliError::Parse("coeffs must be non-empty".into()));
        }
        for (label, list) in [("u", &self.u), ("coeffs", &self.coeffs)] {
            for (i, pair) in list.iter().enumerate() {
                if !pair[0].is_finite() || !pair[1].is_finite() {
                    return Err(CliError::Parse(format!(
                        "{label}[{i}] has a non-finite component"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Build the matrix-polynomial specification this document describes.
    pub fn realize(&self) -> Result<CirculantSpec, CliError> {
        let perm = ShiftPermutation::new(self.m, self.s as i64)?;
        let weights: Vec<Complex64> =
            self.u.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        let base = GenPermMatrix::new(perm, weights)?;
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(|p| Complex64::new(p[0], p[1]))
            .collect();
        Ok(CirculantSpec::new(base, coeffs)?)
    }

    /// Deterministic rendering: fixed field order, reals at 17 significant
    /// digits so the document round-trips losslessly.
    pub fn to_json(&self) -> String {
        let mut w = JsonWriter::new();
        w.open_object();
        w.field_raw("m", &self.m.to_string());
        w.field_raw("s", &self.s.to_string());
        w.key("u");
        w.complex_list(&self.u);
        w.key("coeffs");
        w.complex_list(&self.coeffs);
        if let Some(seed) = self.seed {
            w.field_raw("seed", &seed.to_string());
        }
        w.close_object();
        w.finish()
    }
}

/// Render a complex scalar as its wire form `[re, im]`.
pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Convenience for tests and the example command: format one real the same
/// way the writers do.
pub fn format_real(x: f64) -> String {
    fmt_real(x)
}
