//! Numerical descriptors of perverse sheaves: dimension `g`, Euler
//! characteristic, the Fourier-transformed Chern-MacPherson class restricted
//! to the subring generated by the dual polarization `theta^`, and the
//! signed Poincare polynomials `h_s` of the twists in the spectrum.
//!
//! Presets cover smooth theta divisors, Prym-Tjurin curves and arbitrary
//! sheaves on elliptic curves.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{factorial, parse_rational, rat, Degree, Rational, SymLaurent, UniPoly, Var};
use crate::special::iota;

/// `gamma_s = sum_{i=0}^g c_i theta^^i s^i`.
///
/// The `theta^`-degree always equals the `s`-degree, so only the scalars
/// `c_i` are stored. Products are truncated above `s^g`, and the top-degree
/// evaluation uses `ev(theta^^g) = g!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalClass {
    coeffs: Vec<Rational>,
}

impl DiagonalClass {
    /// `coeffs` is padded with zeros or truncated to length `g + 1`.
    pub fn new(g: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(g + 1, Rational::zero());
        DiagonalClass { coeffs }
    }

    pub fn from_ints(g: usize, coeffs: &[i64]) -> Self {
        Self::new(g, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn one(g: usize) -> Self {
        Self::new(g, vec![Rational::one()])
    }

    pub fn g(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Truncated product in `H^{2*}`.
    pub fn mul(&self, other: &DiagonalClass) -> DiagonalClass {
        assert_eq!(self.g(), other.g(), "diagonal classes on different abelian varieties");
        let g = self.g();
        let mut out = vec![Rational::zero(); g + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(g + 1 - i) {
                out[i + j] += a * b;
            }
        }
        DiagonalClass { coeffs: out }
    }

    pub fn pow(&self, n: u32) -> DiagonalClass {
        (0..n).fold(DiagonalClass::one(self.g()), |acc, _| acc.mul(self))
    }

    /// Pull-back along multiplication by `n`: degree `2i` scales by `n^{2i}`.
    pub fn adams(&self, n: usize) -> DiagonalClass {
        let n2 = BigInt::from(n * n);
        DiagonalClass {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(n2.pow(i as u32)))
                .collect(),
        }
    }

    /// Subtracts `c` from the degree-0 part.
    pub fn minus_constant(&self, c: &Rational) -> DiagonalClass {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= c;
        DiagonalClass { coeffs }
    }

    /// Evaluation of the top-degree part on the fundamental class: `g! c_g`.
    pub fn top_eval(&self) -> Rational {
        Rational::from_integer(factorial(self.g() as u64)) * &self.coeffs[self.g()]
    }
}

/// One character in the finite spectrum, stored as its `h_s` polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    h: UniPoly,
}

impl SpectrumEntry {
    pub fn new(h: UniPoly) -> Self {
        assert_eq!(h.var(), Var::S, "spectrum entries are polynomials in s");
        SpectrumEntry { h }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(UniPoly::from_ints(coeffs, Var::S))
    }

    pub fn h(&self) -> &UniPoly {
        &self.h
    }

    /// Signed Poincare polynomial `b_x = iota(h_s)`.
    pub fn betti(&self) -> SymLaurent {
        iota(&self.h)
    }

    /// `nu_n = (-1)^{n+1} h^n = -a_n` for `n > 0`, where `a_n` is the
    /// coefficient of `x^n` in `b_x`.
    pub fn nu(&self, n: usize) -> Rational {
        -self.betti().coeff(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafDescriptor {
    pub g: usize,
    pub chi: Rational,
    pub gamma: DiagonalClass,
    pub spectrum: Vec<SpectrumEntry>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresetError {
    #[error("{name} requires {param} >= {min}, got {value}")]
    OutOfRange { name: &'static str, param: &'static str, min: u64, value: u64 },
}

impl SheafDescriptor {
    /// `g!` times the top coefficient of `gamma`: the generic rank.
    pub fn generic_rank(&self) -> Rational {
        self.gamma.top_eval()
    }

    /// Euler characteristic as a non-negative integer, if it is one.
    pub fn chi_u32(&self) -> Option<u32> {
        if self.chi.is_integer() && !self.chi.is_negative() {
            u32::try_from(self.chi.to_integer()).ok()
        } else {
            None
        }
    }
}

/// Smooth theta divisor of a principally polarized abelian variety of
/// dimension `g`: `chi = g!`, `c_i = (g-i)!/i!` for `i < g`, and
/// `h_s = g! + sum_{k=1}^{g-1} Catalan(k) s^{g-k}`.
pub fn preset_theta(g: usize) -> Result<SheafDescriptor, PresetError> {
    if g < 1 {
        return Err(PresetError::OutOfRange { name: "theta", param: "g", min: 1, value: g as u64 });
    }
    let fact = |n: usize| Rational::from_integer(factorial(n as u64));
    let gamma = (0..g).map(|i| fact(g - i) / fact(i)).collect();
    let mut h = vec![Rational::zero(); g];
    h[0] = fact(g);
    for k in 1..g {
        let catalan = Rational::from_integer(crate::algebra::binomial(2 * k as u64, k as u64))
            / rat(k as i64 + 1);
        h[g - k] = catalan;
    }
    Ok(SheafDescriptor {
        g,
        chi: fact(g),
        gamma: DiagonalClass::new(g, gamma),
        spectrum: vec![SpectrumEntry::new(UniPoly::new(h, Var::S))],
    })
}

/// Smooth Prym-Tjurin curve of exponent `m` with class `m theta^{g-1}/(g-1)!`:
/// `gamma_s = chi + m theta^ s`, trivial spectrum with `h_s = chi + s`.
pub fn preset_prym(g: usize, m: u64, chi: u64) -> Result<SheafDescriptor, PresetError> {
    if g < 1 {
        return Err(PresetError::OutOfRange { name: "prym", param: "g", min: 1, value: g as u64 });
    }
    if m < 1 {
        return Err(PresetError::OutOfRange { name: "prym", param: "m", min: 1, value: m });
    }
    let chi_r = Rational::from_integer(chi.into());
    Ok(SheafDescriptor {
        g,
        chi: chi_r.clone(),
        gamma: DiagonalClass::new(g, vec![chi_r.clone(), Rational::from_integer(m.into())]),
        spectrum: vec![SpectrumEntry::new(UniPoly::new(vec![chi_r, Rational::one()], Var::S))],
    })
}

/// Jacobian of a genus-`g` curve: the `m = 1`, `chi = 2g - 2` Prym-Tjurin case.
pub fn preset_jacobian(g: usize) -> Result<SheafDescriptor, PresetError> {
    preset_prym(g, 1, 2 * (g as u64).saturating_sub(1))
}

/// Clean perverse sheaf on an elliptic curve with generic rank `r`.
pub fn preset_elliptic(r: u64, chi: u64) -> Result<SheafDescriptor, PresetError> {
    if r < 1 {
        return Err(PresetError::OutOfRange { name: "elliptic", param: "r", min: 1, value: r });
    }
    if chi < 1 {
        return Err(PresetError::OutOfRange { name: "elliptic", param: "chi", min: 1, value: chi });
    }
    let chi_r = Rational::from_integer(chi.into());
    Ok(SheafDescriptor {
        g: 1,
        chi: chi_r.clone(),
        gamma: DiagonalClass::new(1, vec![chi_r, Rational::from_integer(r.into())]),
        spectrum: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `g >= 1`.
    PositiveDimension,
    /// `gamma` has exactly `g + 1` coefficients.
    GammaLength,
    /// `chi` is a non-negative integer.
    ChiNonNegativeInteger,
    /// `gamma_0 = chi`.
    GammaZeroIsChi,
    /// The generic rank `g! c_g` is a non-negative integer.
    GenericRankNonNegativeInteger,
    /// `h_s(0) = chi` for every spectrum entry.
    SpectrumConstantIsChi,
    /// `deg h_s < g` for every spectrum entry.
    SpectrumDegreeBelowG,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::PositiveDimension => "g >= 1",
            Rule::GammaLength => "gamma has g+1 coefficients",
            Rule::ChiNonNegativeInteger => "chi is a non-negative integer",
            Rule::GammaZeroIsChi => "gamma_0 = chi",
            Rule::GenericRankNonNegativeInteger => "generic rank g!*c_g is a non-negative integer",
            Rule::SpectrumConstantIsChi => "h_s(0) = chi",
            Rule::SpectrumDegreeBelowG => "deg h_s < g",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, message: String) {
        self.violations.push(Violation { rule, message });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("descriptor is valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} violated: {}", v.rule, v.message)?;
        }
        Ok(())
    }
}

/// Checks every hypothesis the series engine relies on.
pub fn validate(d: &SheafDescriptor) -> ValidationReport {
    let mut report = ValidationReport::default();
    if d.g < 1 {
        report.push(Rule::PositiveDimension, format!("g = {}", d.g));
    }
    if d.gamma.g() != d.g {
        report.push(
            Rule::GammaLength,
            format!("gamma has {} coefficients, expected {}", d.gamma.coeffs().len(), d.g + 1),
        );
    }
    if d.chi_u32().is_none() {
        report.push(Rule::ChiNonNegativeInteger, format!("chi = {}", d.chi));
    }
    if d.gamma.coeff(0) != &d.chi {
        report.push(Rule::GammaZeroIsChi, format!("gamma_0 = {} but chi = {}", d.gamma.coeff(0), d.chi));
    }
    let rank = d.generic_rank();
    if !rank.is_integer() || rank.is_negative() {
        report.push(Rule::GenericRankNonNegativeInteger, format!("g!*c_g = {rank}"));
    }
    for (i, entry) in d.spectrum.iter().enumerate() {
        let h0 = entry.h().coeff(0);
        if h0 != d.chi {
            report.push(Rule::SpectrumConstantIsChi, format!("spectrum[{i}] has h(0) = {h0}, chi = {}", d.chi));
        }
        if let Degree::Finite(deg) = entry.h().degree() {
            if deg >= d.g {
                report.push(
                    Rule::SpectrumDegreeBelowG,
                    format!("spectrum[{i}] has degree {deg}, must be below g = {}", d.g),
                );
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> DescriptorError {
    DescriptorError::Schema { path: path.into(), message: message.into() }
}

fn rational_at(value: &Value, path: &str) -> Result<Rational, DescriptorError> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|e| schema(path, e.to_string())),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(rat(i)),
            None => Err(schema(path, "numbers must be integers; write fractions as \"p/q\" strings")),
        },
        _ => Err(schema(path, "expected a rational string such as \"1/6\"")),
    }
}

fn rational_array(value: &Value, path: &str) -> Result<Vec<Rational>, DescriptorError> {
    let items = value.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    items.iter().enumerate().map(|(i, v)| rational_at(v, &format!("{path}[{i}]"))).collect()
}

/// Parses the JSON descriptor schema
/// `{"g": 4, "chi": "24", "gamma": [...], "spectrum": [[...], ...]}`.
///
/// Structural problems are reported with a JSON path; the mathematical
/// hypotheses are left to [`validate`].
pub fn parse_descriptor(text: &str) -> Result<SheafDescriptor, DescriptorError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "g" | "chi" | "gamma" | "spectrum") {
            return Err(schema(format!("$.{key}"), "unknown field"));
        }
    }
    let field = |k: &str| obj.get(k).ok_or_else(|| schema(format!("$.{k}"), "missing field"));
    let g = field("g")?
        .as_u64()
        .filter(|&g| g >= 1)
        .ok_or_else(|| schema("$.g", "expected an integer >= 1"))? as usize;
    let chi = rational_at(field("chi")?, "$.chi")?;
    let gamma = rational_array(field("gamma")?, "$.gamma")?;
    if gamma.len() != g + 1 {
        return Err(schema("$.gamma", format!("expected {} entries, found {}", g + 1, gamma.len())));
    }
    let spectrum_items = field("spectrum")?
        .as_array()
        .ok_or_else(|| schema("$.spectrum", "expected an array"))?;
    let mut spectrum = Vec::with_capacity(spectrum_items.len());
    for (i, item) in spectrum_items.iter().enumerate() {
        let path = format!("$.spectrum[{i}]");
        let coeffs = rational_array(item, &path)?;
        if coeffs.len() > g {
            return Err(schema(path, format!("expected at most {g} entries, found {}", coeffs.len())));
        }
        spectrum.push(SpectrumEntry::new(UniPoly::new(coeffs, Var::S)));
    }
    Ok(SheafDescriptor { g, chi, gamma: DiagonalClass::new(g, gamma), spectrum })
}

#[derive(Serialize)]
pub(crate) struct DescriptorDoc {
    g: usize,
    chi: String,
    gamma: Vec<String>,
    spectrum: Vec<Vec<String>>,
}

pub(crate) fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

impl From<&SheafDescriptor> for DescriptorDoc {
    fn from(d: &SheafDescriptor) -> Self {
        DescriptorDoc {
            g: d.g,
            chi: d.chi.to_string(),
            gamma: rational_strings(d.gamma.coeffs()),
            spectrum: d.spectrum.iter().map(|e| rational_strings(e.h().coeffs())).collect(),
        }
    }
}

/// Descriptor as a JSON value, fields in schema order.
pub fn descriptor_json(d: &SheafDescriptor) -> Value {
    serde_json::to_value(DescriptorDoc::from(d)).expect("descriptor serializes")
}

/// Compact single-line JSON; spectrum entries drop trailing zeros.
pub fn serialize_descriptor(d: &SheafDescriptor) -> String {
    serde_json::to_string(&DescriptorDoc::from(d)).expect("descriptor serializes")
}
