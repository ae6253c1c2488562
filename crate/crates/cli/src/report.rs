//! Report types for the subcommands: exact counts with named sides and
//! a pass/fail verdict, printable as plain tables or JSON.
//!
//! Everything that goes to stdout is deterministic for fixed inputs and
//! seed; wall-clock time is reported in JSON (`wall_ms`) and on stderr
//! in table mode, never in table stdout.

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_eq(lhs: u64, rhs: u64) -> Self {
        if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }

    pub fn word(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Which cubic a report talks about, reproducibly: a catalog name,
/// `file:<path>`, or `random:<seed>`, plus field and dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CubicInput {
    pub cubic: String,
    pub p: u64,
    pub dim: u32,
}

/// The per-term counts behind a verdict. Fields that a subcommand does
/// not compute stay absent from JSON.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Breakdown {
    /// `#Y(F_q)`
    pub n1: u64,
    /// `#Y(F_{q^2})`
    pub n2: u64,
    /// rational singular points
    pub n_singular: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines_by_formula: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym2_points: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilb2_points: Option<u64>,
}

/// Outcome of checking one exact counting relation on one cubic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountCheck {
    /// Name of the relation that was checked.
    pub relation: String,
    pub input: CubicInput,
    /// Independently enumerated side.
    pub lhs: u64,
    /// Formula or assembled side.
    pub rhs: u64,
    pub breakdown: Breakdown,
    /// `pass` iff `lhs == rhs` exactly.
    pub verdict: Verdict,
    /// Wall-clock milliseconds for the whole run.
    pub wall_ms: u128,
}

impl CountCheck {
    pub fn identity_line(&self) -> String {
        format!(
            "identity {}: {} = {}   {}",
            self.relation,
            self.lhs,
            self.rhs,
            self.verdict.word()
        )
    }
}

/// One named equality inside a larger report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub lhs: u64,
    pub rhs: u64,
    pub verdict: Verdict,
}

impl NamedCheck {
    pub fn new(name: &str, lhs: u64, rhs: u64) -> Self {
        NamedCheck {
            name: name.to_string(),
            lhs,
            rhs,
            verdict: Verdict::from_eq(lhs, rhs),
        }
    }
}

/// Truncated zeta data for one cubic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZetaReport {
    pub input: CubicInput,
    pub order: u32,
    /// `N_m = #Y(F_{q^m})` for `m = 1 ..= order`.
    pub point_counts: Vec<u64>,
    /// `#Sym^m Y(F_q)` for `m = 0 ..= order`.
    pub sym_counts: Vec<u64>,
    /// Independent cross-checks of the symmetric-power counts.
    pub checks: Vec<NamedCheck>,
    pub verdict: Verdict,
    pub wall_ms: u128,
}

/// One identity of the symbolic suite with its verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub verdict: Verdict,
}

pub fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("cannot serialize report: {e}")))?;
    println!("{text}");
    Ok(())
}

/// Table form of a single counting check.
pub fn print_count_check(check: &CountCheck) {
    println!("relation: {}", check.relation);
    println!(
        "cubic: {} (d={}, p={})",
        check.input.cubic, check.input.dim, check.input.p
    );
    print_breakdown(&check.breakdown);
    println!("lhs = {}   rhs = {}", check.lhs, check.rhs);
    println!("verdict: {}", check.verdict.word());
}

pub fn print_breakdown(b: &Breakdown) {
    println!("N1 = {}   N2 = {}   singular = {}", b.n1, b.n2, b.n_singular);
    if let (Some(lines), Some(formula)) = (b.lines, b.lines_by_formula) {
        println!("lines enumerated = {lines}   lines by formula = {formula}");
    } else if let Some(lines) = b.lines {
        println!("lines = {lines}");
    }
    if let Some(sym2) = b.sym2_points {
        println!("pairs = {sym2}");
    }
    if let Some(hilb2) = b.hilb2_points {
        println!("length-2 subschemes = {hilb2}");
    }
}
