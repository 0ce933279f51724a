use abelrank::algebra::{Rational, UniPoly};
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

/// Ascending coefficients as rational strings; the zero polynomial is `[]`.
pub fn poly_strings(p: &UniPoly) -> Vec<String> {
    coeff_strings(p.coeffs())
}

pub fn coeff_strings(c: &[Rational]) -> Vec<String> {
    c.iter().map(ToString::to_string).collect()
}

pub fn render_poly(p: &UniPoly, format: Format) -> String {
    match format {
        Format::Latex => p.to_latex(),
        _ => p.to_string(),
    }
}

pub fn json_doc(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
