//! The identity catalog: every entry is an exact polynomial equality in
//! `x`, `lambda` (and `alpha` where applicable), swept over a parameter
//! grid. A check passes only if both sides are identical canonical
//! polynomials at every grid point; there are no tolerances.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::{Poly, Rat, Scalar};

/// Catalog entry labels. `T*` entries are the primary closed-form
/// identities between the families; `E*` entries are auxiliary expansion
/// identities checked alongside them.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum IdentityId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    E5,
    E10,
    E13,
    E26,
    E30,
    E34,
    E40,
    E43,
    E44,
    E48,
}

impl IdentityId {
    pub const ALL: [IdentityId; 20] = [
        IdentityId::T1,
        IdentityId::T2,
        IdentityId::T3,
        IdentityId::T4,
        IdentityId::T5,
        IdentityId::T6,
        IdentityId::T7,
        IdentityId::T8,
        IdentityId::T9,
        IdentityId::T10,
        IdentityId::E5,
        IdentityId::E10,
        IdentityId::E13,
        IdentityId::E26,
        IdentityId::E30,
        IdentityId::E34,
        IdentityId::E40,
        IdentityId::E43,
        IdentityId::E44,
        IdentityId::E48,
    ];

    /// What the entry asserts, in words.
    pub fn description(&self) -> &'static str {
        match self {
            IdentityId::T1 => "falling factorial recovered from a binomial convolution of the r-shifted family",
            IdentityId::T2 => "distribution of the r-shifted family over residues, odd modulus",
            IdentityId::T3 => "negative-integer order collapses to a binomial average of shifted falling factorials",
            IdentityId::T4 => "r-shift equals the falling-factorial prefactor on order-alpha Euler polynomials",
            IdentityId::T5 => "leading falling-factorial term split off the order-alpha expansion",
            IdentityId::T6 => "order-alpha Euler numbers through Bell polynomials and Stirling numbers",
            IdentityId::T7 => "falling factorial from the order-alpha family with a Stirling correction sum",
            IdentityId::T8 => "signed average at shifted arguments via order-(alpha-1) Euler numbers",
            IdentityId::T9 => "alternating power sum through Stirling numbers",
            IdentityId::T10 => "r-shifted family expanded over alternating power sums",
            IdentityId::E5 => "argument shift by one as a binomial convolution",
            IdentityId::E10 => "polynomials from numbers by binomial convolution with falling factorials",
            IdentityId::E13 => "negative-integer order expanded in the degenerate falling-factorial basis",
            IdentityId::E26 => "order-alpha numbers through Stirling numbers above the shift order",
            IdentityId::E30 => "order-one collapse of the signed average at shifted arguments",
            IdentityId::E34 => "alternating power sum closed form via Euler polynomials",
            IdentityId::E40 => "degenerate Euler numbers through Stirling numbers",
            IdentityId::E43 => "alternating power sum at even arguments, Stirling closed form",
            IdentityId::E44 => "alternating power sum at odd arguments, halved-step closed form",
            IdentityId::E48 => "signed average of scaled falling factorials via alternating power sums",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .find(|id| id.to_string() == s)
            .copied()
            .ok_or_else(|| Error::InvalidParam {
                name: "identity".into(),
                reason: format!("unknown identity `{s}`"),
            })
    }
}

/// How the symbolic order parameter `alpha` is handled during a sweep.
#[derive(Clone, PartialEq, Debug)]
pub enum AlphaMode {
    /// Compare both sides as polynomials in `alpha`.
    Symbolic,
    /// Substitute each listed rational for `alpha` and compare.
    Specialize(Vec<Rat>),
}

/// Bounds of a verification sweep.
#[derive(Clone, PartialEq, Debug)]
pub struct ParamGrid {
    pub n_max: u32,
    pub r_max: u32,
    pub m_values: Vec<u32>,
    pub alpha_mode: AlphaMode,
    pub k_max: u32,
}

impl ParamGrid {
    /// The distribution identities hold for odd moduli only, so every `m`
    /// must be odd; this is enforced at construction.
    pub fn new(
        n_max: u32,
        r_max: u32,
        m_values: Vec<u32>,
        alpha_mode: AlphaMode,
        k_max: u32,
    ) -> Result<Self> {
        if let Some(&m) = m_values.iter().find(|&&m| m % 2 == 0) {
            return Err(Error::EvenModulus(m));
        }
        Ok(Self { n_max, r_max, m_values, alpha_mode, k_max })
    }

    /// The full sweep: `n <= 10`, `r <= 3`, `m in {1,3,5}`, symbolic
    /// `alpha`, `k <= 10`.
    pub fn default_sweep() -> Self {
        Self::new(10, 3, vec![1, 3, 5], AlphaMode::Symbolic, 10)
            .expect("default moduli are odd")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// The first failing grid point of a check, with both sides in canonical
/// form.
#[derive(Clone, PartialEq, Debug)]
pub struct Counterexample {
    pub params: Vec<(String, String)>,
    pub lhs: Poly,
    pub rhs: Poly,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub points_checked: u64,
    pub status: CheckStatus,
    pub first_counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// The rational constants an identity's right-hand side is built from.
/// Every check reads its literal one-half through here, so a perturbed
/// value demonstrates that the check is not vacuous (it must then fail).
/// The family constructors on the left-hand sides always use the true
/// constants.
#[derive(Clone, Debug)]
pub struct CheckConstants {
    pub half: Rat,
}

impl Default for CheckConstants {
    fn default() -> Self {
        Self { half: Rat::one_half() }
    }
}

/// Run one catalog entry over the grid.
pub fn run_check(id: IdentityId, grid: &ParamGrid) -> CheckReport {
    run_check_with_constants(id, grid, &CheckConstants::default())
}

/// Run one catalog entry with substituted right-hand-side constants (the
/// mutation harness; see [`CheckConstants`]).
pub fn run_check_with_constants(
    id: IdentityId,
    grid: &ParamGrid,
    consts: &CheckConstants,
) -> CheckReport {
    let start = Instant::now();
    let sweep = checks::dispatch(id, grid, consts);
    let (points_checked, first_counterexample) = sweep.into_parts();
    CheckReport {
        identity: id,
        points_checked,
        status: if first_counterexample.is_none() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        first_counterexample,
        elapsed: start.elapsed(),
    }
}

/// Run the whole catalog; checks run in parallel, reports come back in
/// catalog order and never short-circuit on failure.
pub fn run_all(grid: &ParamGrid) -> Vec<CheckReport> {
    IdentityId::ALL
        .par_iter()
        .map(|id| run_check(*id, grid))
        .collect()
}

#[derive(Serialize)]
struct CexJson {
    params: BTreeMap<String, String>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportJson {
    identity: String,
    points: u64,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<CexJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ms: Option<u128>,
}

fn report_json(report: &CheckReport, with_timings: bool) -> ReportJson {
    ReportJson {
        identity: report.identity.to_string(),
        points: report.points_checked,
        status: match report.status {
            CheckStatus::Pass => "pass".into(),
            CheckStatus::Fail => "fail".into(),
        },
        counterexample: report.first_counterexample.as_ref().map(|cex| CexJson {
            params: cex.params.iter().cloned().collect(),
            lhs: cex.lhs.to_string(),
            rhs: cex.rhs.to_string(),
        }),
        ms: with_timings.then_some(report.elapsed.as_millis()),
    }
}

/// JSON report: array of `{identity, points, status, counterexample?, ms?}`.
/// Timings are opt-in so that identical sweeps produce byte-identical
/// reports.
pub fn reports_to_json(reports: &[CheckReport], with_timings: bool) -> String {
    let rows: Vec<ReportJson> = reports.iter().map(|r| report_json(r, with_timings)).collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}

/// One line per check: `T1: pass (44 points)`.
pub fn reports_to_text(reports: &[CheckReport], with_timings: bool) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{}: ", r.identity));
        out.push_str(match r.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
        });
        out.push_str(&format!(" ({} points", r.points_checked));
        if with_timings {
            out.push_str(&format!(", {} ms", r.elapsed.as_millis()));
        }
        out.push(')');
        if let Some(cex) = &r.first_counterexample {
            let params: Vec<String> =
                cex.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "\n  at {}:\n  lhs = {}\n  rhs = {}",
                params.join(", "),
                cex.lhs,
                cex.rhs
            ));
        }
        out.push('\n');
    }
    out
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}
