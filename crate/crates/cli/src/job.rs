//! The JSON job description.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub n: u32,
    #[serde(default)]
    pub symbols: Vec<SymbolSpec>,
    #[serde(default)]
    pub curve: Vec<ComponentSpec>,
    /// Prescribed residues for `cyclify`.
    #[serde(default)]
    pub targets: Vec<TargetSpec>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolSpec {
    pub a: String,
    pub b: String,
    #[serde(default = "one")]
    pub exp: i64,
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub equation: String,
    #[serde(default)]
    pub irreducible: bool,
}

/// A residue at a point of the line over `k0(x)`, with `y` standing for
/// the coordinate and for `theta` in the residue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    /// A polynomial in `y` over `k0(x)`, or `inf`.
    pub point: String,
    pub residue: String,
    /// Asserts: residue of the emitted symbol = `c * w^n * residue`.
    #[serde(default)]
    pub witness: Option<WitnessSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub w: String,
    #[serde(default = "unit")]
    pub c: String,
}

fn unit() -> String {
    "1".into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Options {
    pub seed: u64,
    pub rounds: u32,
    pub factor_bound: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, rounds: 20, factor_bound: 8 }
    }
}
