//! Family tables and their CSV / JSON / LaTeX / text renderings.
//!
//! Rows are indexed by `n` from 0 so the row index always equals the
//! sequence index, even when leading entries vanish. Families with a second
//! index (`stirling2-deg`, `bell`) produce one entry per `k = 0..n` when no
//! fixed `k` parameter is given, and a single-entry column otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{
    aeg_order_series, aeg_series, alt_power_sum, euler_order_series, euler_series,
    genocchi_order_series, AltSumMode, Stirling2Mode,
};
use crate::poly::{falling_factorial, Var};
use crate::scalar::Scalar;
use crate::{families, Poly, Rat};

/// Identifier of a polynomial family, as exposed on the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    /// `(x)_{n,lambda}`
    GenFallingFactorial,
    /// `E_{n,lambda}(x)`
    DegenerateEuler,
    /// `E^{(alpha)}_{n,lambda}(x)`
    DegenerateEulerOrder,
    /// `G^{(rho)}_{n,lambda}(x)`, integer `rho >= 0`
    DegenerateGenocchiOrder,
    /// `A^{(r)}_{n,lambda}(x)`
    EulerGenocchi { r: u32 },
    /// `A^{(r,alpha)}_{n,lambda}(x)`
    EulerGenocchiOrder { r: u32 },
    /// `S_{2,lambda}(n,k)`
    DegenerateStirling2,
    /// `B_{n,k}((1)_{1,lambda}, ..., (1)_{n-k+1,lambda})`
    IncompleteBell,
    /// `T_{k,lambda}(n)`
    AltPowerSum,
}

impl FamilyId {
    pub const NAMES: [&'static str; 9] = [
        "falling",
        "euler",
        "euler-order",
        "genocchi-order",
        "euler-genocchi",
        "euler-genocchi-order",
        "stirling2-deg",
        "bell",
        "alt-power-sum",
    ];

    /// Resolve a CLI family name; `r` is folded into the id where the
    /// family carries it.
    pub fn parse(name: &str, r: u32) -> Option<FamilyId> {
        match name {
            "falling" => Some(FamilyId::GenFallingFactorial),
            "euler" => Some(FamilyId::DegenerateEuler),
            "euler-order" => Some(FamilyId::DegenerateEulerOrder),
            "genocchi-order" => Some(FamilyId::DegenerateGenocchiOrder),
            "euler-genocchi" => Some(FamilyId::EulerGenocchi { r }),
            "euler-genocchi-order" => Some(FamilyId::EulerGenocchiOrder { r }),
            "stirling2-deg" => Some(FamilyId::DegenerateStirling2),
            "bell" => Some(FamilyId::IncompleteBell),
            "alt-power-sum" => Some(FamilyId::AltPowerSum),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyId::GenFallingFactorial => "falling",
            FamilyId::DegenerateEuler => "euler",
            FamilyId::DegenerateEulerOrder => "euler-order",
            FamilyId::DegenerateGenocchiOrder => "genocchi-order",
            FamilyId::EulerGenocchi { .. } => "euler-genocchi",
            FamilyId::EulerGenocchiOrder { .. } => "euler-genocchi-order",
            FamilyId::DegenerateStirling2 => "stirling2-deg",
            FamilyId::IncompleteBell => "bell",
            FamilyId::AltPowerSum => "alt-power-sum",
        };
        write!(f, "{name}")
    }
}

/// A named parameter value: an exact rational or the literal `sym`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamValue {
    Rational(Rat),
    Sym,
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Rational(r) => write!(f, "{r}"),
            ParamValue::Sym => write!(f, "sym"),
        }
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// One table row: the index `n` plus one polynomial entry, or the triangle
/// row `k = 0..n` for doubly-indexed families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub index: u32,
    pub entries: Vec<Poly>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialTable {
    pub family: FamilyId,
    pub parameters: Params,
    pub rows: Vec<TableRow>,
}

/// Output rendering for tables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Csv,
    Json,
    Latex,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::InvalidParam {
                name: "format".into(),
                reason: format!("unknown format `{other}` (csv, json, latex, text)"),
            }),
        }
    }
}

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParam { name: name.into(), reason: reason.into() }
}

// Accepted parameter names per family; anything else is rejected.
fn allowed_params(family: &FamilyId) -> &'static [&'static str] {
    match family {
        FamilyId::GenFallingFactorial | FamilyId::DegenerateEuler => &["x"],
        FamilyId::DegenerateEulerOrder => &["x", "alpha"],
        FamilyId::DegenerateGenocchiOrder => &["x", "alpha"],
        FamilyId::EulerGenocchi { .. } => &["x"],
        FamilyId::EulerGenocchiOrder { .. } => &["x", "alpha"],
        FamilyId::DegenerateStirling2 | FamilyId::IncompleteBell => &["k"],
        FamilyId::AltPowerSum => &["k"],
    }
}

// `x` parameter: symbolic by default, or a fixed rational argument.
fn x_expr(params: &Params) -> Poly {
    match params.get("x") {
        Some(ParamValue::Rational(r)) => Poly::constant(r.clone()),
        _ => Poly::var(Var::X),
    }
}

// `alpha` parameter as a substitution target; `None` means symbolic.
fn alpha_subst(params: &Params) -> Option<Poly> {
    match params.get("alpha") {
        Some(ParamValue::Rational(r)) => Some(Poly::constant(r.clone())),
        _ => None,
    }
}

fn nonneg_int_param(params: &Params, name: &str) -> Result<Option<u32>> {
    match params.get(name) {
        None => Ok(None),
        Some(ParamValue::Sym) => {
            Err(invalid(name, "must be a nonnegative integer, not `sym`"))
        }
        Some(ParamValue::Rational(r)) => {
            if !r.is_integer() || r.is_negative() {
                return Err(invalid(name, format!("must be a nonnegative integer, got {r}")));
            }
            r.numer()
                .to_u32()
                .map(Some)
                .ok_or_else(|| invalid(name, format!("out of range: {r}")))
        }
    }
}

/// Build the table of a family for rows `0..=n_max`.
pub fn build_table(family: FamilyId, params: &Params, n_max: u32) -> Result<PolynomialTable> {
    for name in params.keys() {
        if !allowed_params(&family).contains(&name.as_str()) {
            return Err(invalid(name, format!("not a parameter of family `{family}`")));
        }
    }

    let single = |polys: Vec<Poly>| -> Vec<TableRow> {
        polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| TableRow { index: n as u32, entries: vec![p] })
            .collect()
    };

    let order = n_max as usize;
    let rows = match family {
        FamilyId::GenFallingFactorial => {
            let x = x_expr(params);
            let lam = Poly::var(Var::Lambda);
            single((0..=n_max).map(|n| falling_factorial(&x, n, &lam)).collect())
        }
        FamilyId::DegenerateEuler => {
            single(euler_series(&x_expr(params), order).coeffs().to_vec())
        }
        FamilyId::DegenerateEulerOrder => {
            let series = euler_order_series(&x_expr(params), order);
            let coeffs = match alpha_subst(params) {
                Some(a) => series
                    .coeffs()
                    .iter()
                    .map(|p| p.substitute(Var::Alpha, &a))
                    .collect(),
                None => series.coeffs().to_vec(),
            };
            single(coeffs)
        }
        FamilyId::DegenerateGenocchiOrder => {
            let rho = nonneg_int_param(params, "alpha")?.unwrap_or(1);
            let order = order.max(rho as usize);
            let series = genocchi_order_series(&x_expr(params), rho, order)
                .expect("rho <= order by construction");
            single(series.coeffs()[..=n_max as usize].to_vec())
        }
        FamilyId::EulerGenocchi { r } => {
            let order = order.max(r as usize);
            let series = aeg_series(&x_expr(params), r, order)
                .expect("r <= order by construction");
            single(series.coeffs()[..=n_max as usize].to_vec())
        }
        FamilyId::EulerGenocchiOrder { r } => {
            let order = order.max(r as usize);
            let series = aeg_order_series(&x_expr(params), r, order)
                .expect("r <= order by construction");
            let coeffs: Vec<Poly> = match alpha_subst(params) {
                Some(a) => series.coeffs()[..=n_max as usize]
                    .iter()
                    .map(|p| p.substitute(Var::Alpha, &a))
                    .collect(),
                None => series.coeffs()[..=n_max as usize].to_vec(),
            };
            single(coeffs)
        }
        FamilyId::DegenerateStirling2 => {
            triangle_rows(n_max, nonneg_int_param(params, "k")?, |n, k| {
                families::stirling2_deg(n, k, Stirling2Mode::ExplicitSum)
                    .expect("k <= n in range")
            })
        }
        FamilyId::IncompleteBell => {
            triangle_rows(n_max, nonneg_int_param(params, "k")?, |n, k| {
                families::stirling2_deg(n, k, Stirling2Mode::BellRoute)
                    .expect("k <= n in range")
            })
        }
        FamilyId::AltPowerSum => {
            let k = nonneg_int_param(params, "k")?
                .ok_or_else(|| invalid("k", "required for family `alt-power-sum`"))?;
            single(
                (0..=n_max)
                    .map(|n| alt_power_sum(k, n, AltSumMode::Direct).expect("Direct mode is total"))
                    .collect(),
            )
        }
    };

    Ok(PolynomialTable { family, parameters: params.clone(), rows })
}

// Triangle families: with a fixed k the row n holds the single entry at
// (n, k) (zero when n < k); otherwise the row lists k = 0..n.
fn triangle_rows(n_max: u32, k: Option<u32>, entry: impl Fn(u32, u32) -> Poly) -> Vec<TableRow> {
    (0..=n_max)
        .map(|n| {
            let entries = match k {
                Some(k) if k > n => vec![Poly::zero()],
                Some(k) => vec![entry(n, k)],
                None => (0..=n).map(|k| entry(n, k)).collect(),
            };
            TableRow { index: n, entries }
        })
        .collect()
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonPoly {
    One(String),
    Many(Vec<String>),
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    poly: JsonPoly,
}

impl PolynomialTable {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Latex => self.to_latex(),
            OutputFormat::Text => self.to_text(),
        }
    }

    /// Header `n,polynomial`; triangle rows join their entries with `; `.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,polynomial\n");
        for row in &self.rows {
            let cell: Vec<String> = row.entries.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{},{}\n", row.index, cell.join("; ")));
        }
        out
    }

    /// JSON array of `{n, poly}`; `poly` is a string, or an array of
    /// strings in every row of a triangle table.
    pub fn to_json(&self) -> String {
        let triangle = self.rows.iter().any(|row| row.entries.len() > 1);
        let rows: Vec<JsonRow> = self
            .rows
            .iter()
            .map(|row| JsonRow {
                n: row.index,
                poly: if triangle {
                    JsonPoly::Many(row.entries.iter().map(|p| p.to_string()).collect())
                } else {
                    JsonPoly::One(row.entries[0].to_string())
                },
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("table rows serialize")
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        out.push_str("\\begin{tabular}{rl}\n");
        out.push_str("$n$ & polynomial \\\\\n\\hline\n");
        for row in &self.rows {
            let cell: Vec<String> =
                row.entries.iter().map(|p| format!("${}$", p.latex())).collect();
            out.push_str(&format!("{} & {} \\\\\n", row.index, cell.join(", ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cell: Vec<String> = row.entries.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{}: {}\n", row.index, cell.join(", ")));
        }
        out
    }
}

/// Parse `p/q`, a plain integer, or the literal `sym`.
pub fn parse_param_value(s: &str) -> Result<ParamValue> {
    if s == "sym" {
        return Ok(ParamValue::Sym);
    }
    parse_rational(s).map(ParamValue::Rational)
}

/// Parse an exact rational in `p/q` or integer text form.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let bad = |reason: &str| Error::InvalidParam {
        name: "rational".into(),
        reason: format!("`{s}`: {reason}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: i64 = num.trim().parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: i64 = match den {
        Some(d) => d.trim().parse().map_err(|_| bad("denominator is not an integer"))?,
        None => 1,
    };
    if den == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::from_ratio(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_params() -> Params {
        Params::new()
    }

    #[test]
    fn falling_table_rows() {
        let t = build_table(FamilyId::GenFallingFactorial, &no_params(), 2).unwrap();
        let texts: Vec<String> =
            t.rows.iter().map(|r| r.entries[0].to_string()).collect();
        assert_eq!(texts, ["1", "x", "x^2 - l*x"]);
    }

    #[test]
    fn euler_genocchi_table_rows() {
        let t = build_table(FamilyId::EulerGenocchi { r: 1 }, &no_params(), 3).unwrap();
        let texts: Vec<String> =
            t.rows.iter().map(|r| r.entries[0].to_string()).collect();
        assert_eq!(texts[0], "0");
        assert_eq!(texts[1], "1");
        assert_eq!(texts[2], "2*x - 1");
    }

    #[test]
    fn stirling_triangle_row() {
        let t = build_table(FamilyId::DegenerateStirling2, &no_params(), 4).unwrap();
        let row4 = &t.rows[4];
        assert_eq!(row4.entries.len(), 5);
        assert_eq!(row4.entries[4], Poly::one());
        // S_{2,l}(3,2) = 3 - 3l appears in the JSON rendering
        assert!(t.to_json().contains("-3*l + 3"));
    }

    #[test]
    fn stirling_fixed_k_column() {
        let mut params = Params::new();
        params.insert("k".into(), ParamValue::Rational(Rat::from_int(2)));
        let t = build_table(FamilyId::DegenerateStirling2, &params, 4).unwrap();
        assert!(t.rows[1].entries[0].is_zero());
        assert_eq!(t.rows[3].entries[0].to_string(), "-3*l + 3");
    }

    #[test]
    fn alt_power_sum_requires_k() {
        let err = build_table(FamilyId::AltPowerSum, &no_params(), 3).unwrap_err();
        assert!(matches!(err, Error::InvalidParam { ref name, .. } if name == "k"));
    }

    #[test]
    fn unknown_parameter_is_rejected() {
        let mut params = Params::new();
        params.insert("bogus".into(), ParamValue::Sym);
        let err = build_table(FamilyId::DegenerateEuler, &params, 3).unwrap_err();
        assert!(matches!(err, Error::InvalidParam { ref name, .. } if name == "bogus"));
    }

    #[test]
    fn genocchi_order_param_validation() {
        let mut params = Params::new();
        params.insert("alpha".into(), ParamValue::Rational(Rat::from_ratio(-1, 2)));
        let err = build_table(FamilyId::DegenerateGenocchiOrder, &params, 3).unwrap_err();
        assert!(matches!(err, Error::InvalidParam { ref name, .. } if name == "alpha"));
    }

    #[test]
    fn csv_and_text_render() {
        let t = build_table(FamilyId::GenFallingFactorial, &no_params(), 2).unwrap();
        assert_eq!(t.to_csv(), "n,polynomial\n0,1\n1,x\n2,x^2 - l*x\n");
        assert_eq!(t.to_text(), "0: 1\n1: x\n2: x^2 - l*x\n");
        assert!(t.to_latex().contains("$x^{2} - \\lambda x$"));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/2").unwrap(), Rat::from_ratio(3, 2));
        assert_eq!(parse_rational("-5").unwrap(), Rat::from_int(-5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_param_value("sym").unwrap(), ParamValue::Sym);
    }
}
