//! Job configuration: description files, case files, and the exit-code map.
//!
//! Every input format is TOML with `deny_unknown_fields`, so a typo in a key
//! is caught instead of silently ignored. Errors split into three classes
//! mirroring the process exit codes: configuration errors (malformed files,
//! unknown fields, bad field specs) exit 4, validation failures (the
//! described object is invalid, or a computation on it is impossible) exit 2,
//! and exceeded enumeration budgets exit 3.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use qckit::{ctx_new, Error, FieldCtx, InnerProduct, Poly, TGenQc, TwoGenQc, WeightKind};
use serde::Deserialize;

/// CLI-level error with a process exit code.
#[derive(Clone, Debug)]
pub enum CliError {
    /// Malformed configuration or description input (exit 4).
    Config(String),
    /// The described object or requested computation is invalid (exit 2).
    Validation(String),
    /// An enumeration budget or search range was exceeded (exit 3).
    Budget(String),
}

impl CliError {
    /// The process exit status this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 4,
            CliError::Validation(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Validation(msg) => write!(f, "validation failure: {msg}"),
            CliError::Budget(msg) => write!(f, "budget exceeded: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Map a library error raised during computation on validated inputs:
/// budget overruns keep their own exit code, everything else is a
/// validation failure.
pub fn lib_err(e: Error) -> CliError {
    match e {
        Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

/// Map a library error raised while constructing inputs from configuration
/// text (field specs, polynomial parses): always a config error.
pub fn config_err(e: Error) -> CliError {
    CliError::Config(e.to_string())
}

/// Coordinate layout of a code description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// Columns grouped by circulant block: (block 1 | block 2 | ...).
    Block,
    /// Columns interleaved across blocks: (b1c1, b2c1, ..., b1c2, ...).
    Interleaved,
}

impl Layout {
    pub fn name(self) -> &'static str {
        match self {
            Layout::Block => "block",
            Layout::Interleaved => "interleaved",
        }
    }
}

fn default_layout() -> Layout {
    Layout::Block
}

/// Two-generator presentation: generators ([g1], [v1 g1]) and
/// ([v2 g2], [g2]).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoGeneratorSpec {
    pub g1: String,
    pub g2: String,
    pub v1: String,
    pub v2: String,
}

/// A code description file: the field, the block length, the layout, and
/// either general generator rows or a two-generator presentation.
///
/// `generators` rows list the row's divisor of x^m - 1 first, followed by
/// its multiplier polynomials (one per block), so a row `["g", "1", "v"]`
/// spans { a (g, v g) }. The `two_generator` table is required by commands
/// that work at the level of (g1, g2, v1, v2).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDescription {
    /// Field size q = p^gamma.
    pub q: u64,
    /// Extension degree gamma.
    pub gamma: u32,
    /// Block length m.
    pub m: usize,
    /// Coordinate layout; defaults to block.
    #[serde(default = "default_layout")]
    pub layout: Layout,
    /// Generator rows, each [g, k_1, ..., k_l].
    #[serde(default)]
    pub generators: Vec<Vec<String>>,
    /// Optional two-generator presentation.
    #[serde(default)]
    pub two_generator: Option<TwoGeneratorSpec>,
}

/// Derive the prime p from a field size q and extension degree gamma,
/// then build the field context.
pub fn field_ctx(q: u64, gamma: u32) -> Result<Arc<FieldCtx>, CliError> {
    if gamma == 0 {
        return Err(CliError::Config("gamma must be at least 1".into()));
    }
    let p = integer_root(q, gamma).ok_or_else(|| {
        CliError::Config(format!("q = {q} is not a perfect gamma-th power (gamma = {gamma})"))
    })?;
    ctx_new(p, gamma).map_err(config_err)
}

fn integer_root(q: u64, gamma: u32) -> Option<u64> {
    if q < 2 {
        return None;
    }
    if gamma == 1 {
        return Some(q);
    }
    let mut lo = 2u64;
    let mut hi = q;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match (mid as u128).checked_pow(gamma).map(|v| v.cmp(&(q as u128))) {
            Some(std::cmp::Ordering::Equal) => return Some(mid),
            Some(std::cmp::Ordering::Less) => lo = mid + 1,
            _ => {
                if mid == 0 {
                    return None;
                }
                hi = mid - 1;
            }
        }
    }
    None
}

impl CodeDescription {
    /// Build the field context for this description.
    pub fn ctx(&self) -> Result<Arc<FieldCtx>, CliError> {
        field_ctx(self.q, self.gamma)
    }

    /// True when this description carries a two-generator presentation.
    pub fn has_two_generator(&self) -> bool {
        self.two_generator.is_some()
    }

    /// Build the two-generator code, erroring when the description only has
    /// general rows.
    pub fn build_two_gen(&self, ctx: &Arc<FieldCtx>) -> Result<TwoGenQc, CliError> {
        let spec = self.two_generator.as_ref().ok_or_else(|| {
            CliError::Config(
                "this command needs the [two_generator] table (keys g1, g2, v1, v2)".into(),
            )
        })?;
        if !self.generators.is_empty() {
            return Err(CliError::Config(
                "give either generators or [two_generator], not both".into(),
            ));
        }
        let g1 = Poly::parse(ctx, &spec.g1).map_err(config_err)?;
        let g2 = Poly::parse(ctx, &spec.g2).map_err(config_err)?;
        let v1 = Poly::parse(ctx, &spec.v1).map_err(config_err)?;
        let v2 = Poly::parse(ctx, &spec.v2).map_err(config_err)?;
        TwoGenQc::new(self.m, g1, g2, v1, v2).map_err(|e| CliError::Validation(e.to_string()))
    }

    /// Build the general t-generator code from either presentation.
    pub fn build_t_gen(&self, ctx: &Arc<FieldCtx>) -> Result<TGenQc, CliError> {
        if let Some(_spec) = self.two_generator.as_ref() {
            if !self.generators.is_empty() {
                return Err(CliError::Config(
                    "give either generators or [two_generator], not both".into(),
                ));
            }
            return Ok(self.build_two_gen(ctx)?.to_t_gen());
        }
        if self.generators.is_empty() {
            return Err(CliError::Config(
                "description has neither generators nor [two_generator]".into(),
            ));
        }
        let mut rows = Vec::with_capacity(self.generators.len());
        for (i, row) in self.generators.iter().enumerate() {
            if row.len() < 2 {
                return Err(CliError::Config(format!(
                    "generator row {} needs a divisor and at least one multiplier",
                    i + 1
                )));
            }
            let g = Poly::parse(ctx, &row[0]).map_err(config_err)?;
            let ks = row[1..]
                .iter()
                .map(|s| Poly::parse(ctx, s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(config_err)?;
            rows.push((g, ks));
        }
        TGenQc::new(self.m, rows).map_err(|e| CliError::Validation(e.to_string()))
    }
}

/// One per-coset exponent entry of a synchronizable-code build.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExponentEntry {
    pub rep: u64,
    pub e1: usize,
    pub e2: usize,
}

/// Description of a quantum-synchronizable-code build over F_q with
/// m = l p^t: factor exponents for the inner and outer codes, shared
/// multipliers, and optional (a_l, a_r) pairs to evaluate.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyncDescription {
    pub q: u64,
    pub gamma: u32,
    /// Coprime part of the block length (l = 1 for the prime-power case).
    pub l: u64,
    /// Power of p in the block length.
    pub t: u32,
    pub v1: String,
    pub v2: String,
    /// Inner-code exponents per coset representative.
    pub inner: Vec<ExponentEntry>,
    /// Outer-code exponents per coset representative.
    pub outer: Vec<ExponentEntry>,
    /// Misalignment-tolerance pairs (a_l, a_r) to evaluate.
    #[serde(default)]
    pub evaluate: Vec<[u64; 2]>,
    /// Distance-enumeration budget; distances are omitted when exceeded.
    #[serde(default)]
    pub budget: Option<u64>,
}

/// Description of a parameter search over one block length.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchDescription {
    pub q: u64,
    pub gamma: u32,
    pub m: usize,
    /// Inner product whose self-orthogonality gates candidates: E, H, or S.
    pub kind: String,
    /// Upper bound on deg v1 and deg v2.
    pub v_max_degree: usize,
    /// Upper bound on deg g1 (default m).
    #[serde(default)]
    pub g1_max_degree: Option<usize>,
    /// Upper bound on deg g2 (default m).
    #[serde(default)]
    pub g2_max_degree: Option<usize>,
    /// Enumerate every candidate instead of sampling.
    #[serde(default)]
    pub exhaustive: bool,
    /// Number of seeded random candidates when not exhaustive.
    #[serde(default)]
    pub samples: Option<u64>,
    /// Seed for the sampled mode.
    #[serde(default)]
    pub seed: Option<u64>,
    /// Maximum number of results to report (default 10).
    #[serde(default)]
    pub limit: Option<usize>,
    /// Distance-enumeration budget per candidate.
    #[serde(default)]
    pub budget: Option<u64>,
    /// Cap on the estimated candidate count (default 2^20).
    #[serde(default)]
    pub max_candidates: Option<u64>,
}

/// One reproduction case: a command plus its inputs, the published figures
/// the output mirrors, and annotations for any figure the exact algebra
/// contradicts.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    /// Stable identifier; the golden file is named after it.
    pub id: String,
    /// One of check, dual, distance, stabilizer, sync, search.
    pub command: String,
    /// Inner-product kind for commands that take one.
    #[serde(default)]
    pub kind: Option<String>,
    /// Weight kind for the distance command: hamming or symplectic.
    #[serde(default)]
    pub weight: Option<String>,
    /// Enumeration budget override.
    #[serde(default)]
    pub budget: Option<u64>,
    /// Code description for check/dual/distance/stabilizer.
    #[serde(default)]
    pub description: Option<CodeDescription>,
    /// Synchronizable-code description for sync.
    #[serde(default)]
    pub sync: Option<SyncDescription>,
    /// Search description for search.
    #[serde(default)]
    pub search: Option<SearchDescription>,
    /// Published figures this case mirrors, echoed into the report.
    #[serde(default)]
    pub published: BTreeMap<String, String>,
    /// Notes on figures whose oracle-computed value differs.
    #[serde(default)]
    pub annotations: BTreeMap<String, String>,
}

/// Read and parse a TOML file into any deserializable config type.
pub fn load_toml<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::Config(format!("cannot parse {}: {e}", path.display())))
}

/// Parse an inner-product kind from its flag or file value.
pub fn parse_kind(s: &str) -> Result<InnerProduct, CliError> {
    s.parse::<InnerProduct>()
        .map_err(|e| CliError::Config(e.to_string()))
}

/// Parse a weight kind: hamming (default) or symplectic.
pub fn parse_weight(s: &str) -> Result<WeightKind, CliError> {
    match s {
        "hamming" | "Hamming" => Ok(WeightKind::Hamming),
        "symplectic" | "Symplectic" => Ok(WeightKind::Symplectic),
        other => Err(CliError::Config(format!(
            "unknown weight kind {other:?} (expected hamming or symplectic)"
        ))),
    }
}

/// Parse a --field spec "p" or "p^gamma" into a field context.
pub fn parse_field_spec(s: &str) -> Result<Arc<FieldCtx>, CliError> {
    let (p_text, gamma_text) = match s.split_once('^') {
        Some((p, g)) => (p, g),
        None => (s, "1"),
    };
    let p: u64 = p_text
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad field spec {s:?}: expected p or p^gamma")))?;
    let gamma: u32 = gamma_text
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad field spec {s:?}: expected p or p^gamma")))?;
    ctx_new(p, gamma).map_err(config_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ctx_derives_the_prime_from_q_and_gamma() {
        assert_eq!(field_ctx(4, 2).unwrap().p(), 2);
        assert_eq!(field_ctx(9, 2).unwrap().p(), 3);
        assert_eq!(field_ctx(5, 1).unwrap().p(), 5);
        assert!(field_ctx(6, 2).is_err());
        assert!(field_ctx(12, 1).is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = "q = 2\ngamma = 1\nm = 6\nbogus = 1\n";
        let parsed: Result<CodeDescription, _> = toml::from_str(text);
        assert!(parsed.is_err());
    }

    #[test]
    fn two_generator_description_builds() {
        let text = r#"
            q = 2
            gamma = 1
            m = 6
            [two_generator]
            g1 = "x^4+x^3+x+1"
            g2 = "x^5+x^4+x^3+x^2+x+1"
            v1 = "x^5"
            v2 = "x^5+x"
        "#;
        let desc: CodeDescription = toml::from_str(text).unwrap();
        let ctx = desc.ctx().unwrap();
        let code = desc.build_two_gen(&ctx).unwrap();
        assert_eq!(code.dimension().unwrap(), 3);
    }

    #[test]
    fn generator_rows_build_a_t_gen_code() {
        let text = r#"
            q = 2
            gamma = 1
            m = 7
            generators = [["x^3+x+1", "1", "x"]]
        "#;
        let desc: CodeDescription = toml::from_str(text).unwrap();
        let ctx = desc.ctx().unwrap();
        let code = desc.build_t_gen(&ctx).unwrap();
        assert_eq!(code.index(), 2);
        assert_eq!(code.dimension(), 4);
    }

    #[test]
    fn field_spec_flag_accepts_prime_and_power() {
        assert_eq!(parse_field_spec("2").unwrap().q(), 2);
        assert_eq!(parse_field_spec("2^2").unwrap().q(), 4);
        assert!(parse_field_spec("4").is_err());
        assert!(parse_field_spec("x^2").is_err());
    }
}
