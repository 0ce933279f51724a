use std::path::PathBuf;

use abelrank::sheaf::{
    parse_descriptor, preset_elliptic, preset_jacobian, preset_prym, preset_theta, validate, DescriptorError,
    SheafDescriptor,
};
use clap::{Args, ValueEnum};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    /// Two computation routes disagreed; reported like a failed check.
    pub fn internal(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    Theta,
    Prym,
    Jacobian,
    Elliptic,
}

impl PresetName {
    fn params(self) -> &'static [&'static str] {
        match self {
            PresetName::Theta | PresetName::Jacobian => &["g"],
            PresetName::Prym => &["g", "m", "chi"],
            PresetName::Elliptic => &["r", "chi"],
        }
    }
}

#[derive(Args, Clone)]
pub struct SourceArgs {
    /// Built-in descriptor family.
    #[arg(long, value_enum, conflicts_with = "input")]
    pub preset: Option<PresetName>,
    /// Descriptor JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Dimension (theta, prym, jacobian).
    #[arg(long)]
    pub g: Option<u64>,
    /// Prym-Tjurin exponent.
    #[arg(long)]
    pub m: Option<u64>,
    /// Euler characteristic (prym defaults to 2g-2).
    #[arg(long)]
    pub chi: Option<u64>,
    /// Generic rank (elliptic).
    #[arg(long)]
    pub r: Option<u64>,
}

impl SourceArgs {
    fn param(&self, name: &str) -> Option<u64> {
        match name {
            "g" => self.g,
            "m" => self.m,
            "chi" => self.chi,
            "r" => self.r,
            _ => None,
        }
    }

    fn set_param(&mut self, name: &str, value: u64) {
        match name {
            "g" => self.g = Some(value),
            "m" => self.m = Some(value),
            "chi" => self.chi = Some(value),
            "r" => self.r = Some(value),
            _ => unreachable!("parameter names are checked against the preset"),
        }
    }

    fn build_preset(&self, name: PresetName) -> Result<SheafDescriptor, Failure> {
        for p in ["g", "m", "chi", "r"] {
            if self.param(p).is_some() && !name.params().contains(&p) {
                return Err(Failure::usage(format!("--{p} does not apply to this preset")));
            }
        }
        let need = |p: &str| self.param(p).ok_or_else(|| Failure::usage(format!("this preset needs --{p}")));
        let built = match name {
            PresetName::Theta => preset_theta(need("g")? as usize),
            PresetName::Jacobian => preset_jacobian(need("g")? as usize),
            PresetName::Prym => {
                let g = need("g")?;
                let chi = self.chi.unwrap_or((2 * g).saturating_sub(2));
                preset_prym(g as usize, need("m")?, chi)
            }
            PresetName::Elliptic => preset_elliptic(need("r")?, need("chi")?),
        };
        built.map_err(|e| Failure::usage(e.to_string()))
    }

    /// Loads or builds the descriptor and rejects it unless it validates.
    pub fn descriptor(&self) -> Result<SheafDescriptor, Failure> {
        let d = match (&self.preset, &self.input) {
            (Some(name), _) => self.build_preset(*name)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
                parse_descriptor(&text).map_err(|e| match e {
                    DescriptorError::Json(_) => Failure::usage(e.to_string()),
                    DescriptorError::Schema { .. } => Failure::validation(e.to_string()),
                })?
            }
            (None, None) => return Err(Failure::usage("one of --preset or --input is required")),
        };
        let report = validate(&d);
        if !report.is_ok() {
            return Err(Failure::validation(report.to_string()));
        }
        Ok(d)
    }
}

/// `lo..hi` (inclusive) or a single value.
fn parse_range(text: &str) -> Option<Vec<u64>> {
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi): (u64, u64) = (lo.trim().parse().ok()?, hi.trim().parse().ok()?);
            (lo <= hi).then(|| (lo..=hi).collect())
        }
        None => Some(vec![text.trim().parse().ok()?]),
    }
}

/// Every descriptor in the Cartesian product described by `ranges`, e.g.
/// `g=2..6,m=1..3`; the last key varies fastest.
pub fn expand_sweep(base: &SourceArgs, ranges: &str) -> Result<Vec<SheafDescriptor>, Failure> {
    let name = base.preset.ok_or_else(|| Failure::usage("--sweep needs --preset"))?;
    let mut axes: Vec<(String, Vec<u64>)> = Vec::new();
    for item in ranges.split(',').filter(|s| !s.trim().is_empty()) {
        let (key, range) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("sweep entry `{item}` is not of the form key=lo..hi")))?;
        let key = key.trim();
        if !name.params().contains(&key) {
            return Err(Failure::usage(format!("sweep key `{key}` does not apply to this preset")));
        }
        if axes.iter().any(|(k, _)| k == key) {
            return Err(Failure::usage(format!("sweep key `{key}` given twice")));
        }
        let values = parse_range(range).ok_or_else(|| Failure::usage(format!("bad sweep range `{range}`")))?;
        axes.push((key.to_string(), values));
    }
    if axes.is_empty() {
        return Err(Failure::usage("empty --sweep"));
    }
    let mut combos: Vec<SourceArgs> = vec![base.clone()];
    for (key, values) in &axes {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |&v| {
                    let mut next = c.clone();
                    next.set_param(key, v);
                    next
                })
            })
            .collect();
    }
    combos.iter().map(SourceArgs::descriptor).collect()
}
