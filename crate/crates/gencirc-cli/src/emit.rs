//! Deterministic JSON rendering. Every real is written with 17 significant
//! digits (`{:.16e}`), which round-trips any double losslessly and makes
//! repeated runs byte-identical; serde handles only the parsing direction.

use num_complex::Complex64;
use serde::Deserialize;

use gencirc_core::{
    CaseTag, DegenerateInfo, EigenPair, SpectralDecomposition, Tolerances, VerificationReport,
};

use crate::CliError;

/// 17 significant digits in scientific notation — a valid JSON number.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_complex(z: Complex64) -> String {
    format!("[{}, {}]", fmt_real(z.re), fmt_real(z.im))
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    for ch in text.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Tiny indenting JSON writer; enough structure for the three documents the
/// tool emits, with field order fixed by call order.
pub struct JsonWriter {
    buf: String,
    indent: usize,
    needs_comma: Vec<bool>,
    after_key: bool,
}

impl JsonWriter {
    pub fn new() -> Self {
        JsonWriter {
            buf: String::new(),
            indent: 0,
            needs_comma: Vec::new(),
            after_key: false,
        }
    }

    fn newline(&mut self) {
        self.buf.push('\n');
        for _ in 0..self.indent {
            self.buf.push_str("  ");
        }
    }

    /// Comma/newline bookkeeping before a value or key. A value directly
    /// after `key()` attaches inline instead.
    fn before_item(&mut self) {
        if self.after_key {
            self.after_key = false;
            return;
        }
        if let Some(flag) = self.needs_comma.last_mut() {
            if *flag {
                self.buf.push(',');
            }
            *flag = true;
            self.newline();
        }
    }

    pub fn open_object(&mut self) {
        self.before_item();
        self.buf.push('{');
        self.indent += 1;
        self.needs_comma.push(false);
    }

    pub fn close_object(&mut self) {
        self.indent -= 1;
        let had_items = self.needs_comma.pop().unwrap_or(false);
        if had_items {
            self.newline();
        }
        self.buf.push('}');
    }

    pub fn key(&mut self, key: &str) {
        self.before_item();
        self.buf.push('"');
        self.buf.push_str(key);
        self.buf.push_str("\": ");
        self.after_key = true;
    }

    pub fn value_raw(&mut self, value: &str) {
        self.before_item();
        self.buf.push_str(value);
    }

    pub fn field_raw(&mut self, key: &str, value: &str) {
        self.key(key);
        self.value_raw(value);
    }

    pub fn field_real(&mut self, key: &str, value: f64) {
        self.field_raw(key, &fmt_real(value));
    }

    pub fn field_complex(&mut self, key: &str, value: Complex64) {
        self.field_raw(key, &fmt_complex(value));
    }

    pub fn field_string(&mut self, key: &str, value: &str) {
        self.field_raw(key, &format!("\"{}\"", escape(value)));
    }

    /// An array of `[re, im]` pairs, one per line.
    pub fn complex_list(&mut self, items: &[[f64; 2]]) {
        self.before_item();
        self.buf.push('[');
        self.indent += 1;
        for (i, pair) in items.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            self.newline();
            self.buf.push_str(&format!(
                "[{}, {}]",
                fmt_real(pair[0]),
                fmt_real(pair[1])
            ));
        }
        self.indent -= 1;
        if !items.is_empty() {
            self.newline();
        }
        self.buf.push(']');
    }

    pub fn finish(mut self) -> String {
        self.buf.push('\n');
        self.buf
    }
}

// ---------------------------------------------------------------------------
// Spectrum document
// ---------------------------------------------------------------------------

/// Render a decomposition as the spectrum document: case tag, ω, and the
/// eigenpair records ordered orbit-major then phase.
pub fn spectrum_json(m: usize, s: usize, dec: &SpectralDecomposition) -> String {
    let mut pairs: Vec<&EigenPair> = dec.pairs.iter().collect();
    pairs.sort_by_key(|p| (p.orbit_index, p.phase_index));

    let mut w = JsonWriter::new();
    w.open_object();
    w.field_string("case", dec.case.as_str());
    w.field_raw("m", &m.to_string());
    w.field_raw("s", &s.to_string());
    w.field_complex("omega", dec.omega);
    w.key("pairs");
    w.value_raw("[");
    w.indent += 1;
    for (i, pair) in pairs.iter().enumerate() {
        if i > 0 {
            w.buf.push(',');
        }
        w.newline();
        w.buf.push_str(&format!(
            "{{\"t\": {}, \"p\": {}, \"eigenvalue\": {}, \"eigenvector\": [",
            pair.orbit_index,
            pair.phase_index,
            fmt_complex(pair.value)
        ));
        for (j, v) in pair.vector.iter().enumerate() {
            if j > 0 {
                w.buf.push_str(", ");
            }
            w.buf.push_str(&fmt_complex(*v));
        }
        w.buf.push_str("]}");
    }
    w.indent -= 1;
    if !pairs.is_empty() {
        w.newline();
    }
    w.buf.push(']');

    match &dec.degenerate {
        None => w.field_raw("degenerate", "null"),
        Some(info) => {
            w.key("degenerate");
            w.open_object();
            w.field_complex("eigenvalue", info.eigenvalue);
            w.field_raw(
                "algebraic_multiplicity",
                &info.algebraic_multiplicity.to_string(),
            );
            w.field_raw(
                "zero_positions",
                &format!(
                    "[{}]",
                    info.zero_positions
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            );
            w.close_object();
        }
    }

    w.key("notes");
    w.value_raw("[");
    for (i, note) in dec.notes.iter().enumerate() {
        if i > 0 {
            w.buf.push_str(", ");
        }
        w.buf.push_str(&format!("\"{}\"", escape(note)));
    }
    w.buf.push(']');

    w.close_object();
    w.finish()
}

/// Deserialization mirror of the spectrum document, used by `verify
/// --spectrum` to re-certify previously computed output.
#[derive(Debug, Deserialize)]
pub struct SpectrumDoc {
    pub case: String,
    pub m: usize,
    pub s: usize,
    pub omega: [f64; 2],
    pub pairs: Vec<SpectrumPairDoc>,
    #[serde(default)]
    pub degenerate: Option<SpectrumDegenerateDoc>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct SpectrumPairDoc {
    pub t: usize,
    pub p: usize,
    pub eigenvalue: [f64; 2],
    pub eigenvector: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
pub struct SpectrumDegenerateDoc {
    pub eigenvalue: [f64; 2],
    pub algebraic_multiplicity: usize,
    pub zero_positions: Vec<usize>,
}

impl SpectrumDoc {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("invalid spectrum document: {e}")))
    }

    /// Rebuild the in-memory decomposition this document describes.
    pub fn to_decomposition(&self) -> Result<SpectralDecomposition, CliError> {
        let case = CaseTag::parse(&self.case)
            .ok_or_else(|| CliError::Parse(format!("unknown case tag {:?}", self.case)))?;
        let pairs = self
            .pairs
            .iter()
            .map(|p| EigenPair {
                orbit_index: p.t,
                phase_index: p.p,
                value: Complex64::new(p.eigenvalue[0], p.eigenvalue[1]),
                vector: p
                    .eigenvector
                    .iter()
                    .map(|v| Complex64::new(v[0], v[1]))
                    .collect(),
            })
            .collect();
        let degenerate = self.degenerate.as_ref().map(|d| DegenerateInfo {
            eigenvalue: Complex64::new(d.eigenvalue[0], d.eigenvalue[1]),
            algebraic_multiplicity: d.algebraic_multiplicity,
            zero_positions: d.zero_positions.clone(),
        });
        Ok(SpectralDecomposition {
            case,
            omega: Complex64::new(self.omega[0], self.omega[1]),
            pairs,
            degenerate,
            notes: self.notes.clone(),
        })
    }
}

// ---------------------------------------------------------------------------
// Verification report
// ---------------------------------------------------------------------------

/// Render the oracle's verdict with every measured figure.
pub fn report_json(case: CaseTag, report: &VerificationReport, notes: &[String]) -> String {
    let mut w = JsonWriter::new();
    w.open_object();
    w.field_raw("passed", if report.passed { "true" } else { "false" });
    w.field_string("case", case.as_str());
    w.field_real("max_relative_residual", report.max_relative_residual);
    w.field_raw("rank", &report.rank.to_string());
    w.field_raw("rank_full", if report.rank_verdict { "true" } else { "false" });
    match report.diagonalization_offdiag_norm {
        Some(x) => w.field_real("diagonalization_offdiag_norm", x),
        None => w.field_raw("diagonalization_offdiag_norm", "null"),
    }
    match report.trace_deltas {
        Some(d) => w.field_raw(
            "trace_deltas",
            &format!("[{}, {}, {}]", fmt_real(d[0]), fmt_real(d[1]), fmt_real(d[2])),
        ),
        None => w.field_raw("trace_deltas", "null"),
    }
    match &report.degenerate {
        Some(d) => {
            w.key("degenerate");
            w.open_object();
            w.field_raw("geometric_basis_size", &d.geometric_basis_size.to_string());
            w.field_raw("nullity", &d.nullity.to_string());
            w.field_raw(
                "algebraic_multiplicity",
                &d.algebraic_multiplicity.to_string(),
            );
            w.close_object();
        }
        None => w.field_raw("degenerate", "null"),
    }
    w.key("tolerances");
    w.open_object();
    let Tolerances {
        residual,
        rank_pivot_floor,
        diag_offdiag,
        trace,
    } = report.tolerances;
    w.field_real("residual", residual);
    w.field_real("rank_pivot_floor", rank_pivot_floor);
    w.field_real("diag_offdiag", diag_offdiag);
    w.field_real("trace", trace);
    w.close_object();
    w.key("notes");
    w.value_raw("[");
    for (i, note) in notes.iter().enumerate() {
        if i > 0 {
            w.buf.push_str(", ");
        }
        w.buf.push_str(&format!("\"{}\"", escape(note)));
    }
    w.buf.push(']');
    w.close_object();
    w.finish()
}
