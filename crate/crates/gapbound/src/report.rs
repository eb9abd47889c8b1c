//! Structured report documents.
//!
//! One schema serves every subcommand: inputs echoed as canonical strings,
//! the bound ingredients, the per-`n` table, and the lemma-level check
//! results, with sections left empty when a command does not produce them.
//! Rational numbers are serialized as exact `"p/q"` strings, never floats.

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::gaps::{BoundReport, BoundRow};
use crate::lemma::{AuxiliaryFunction, DerivativeValuationCheck, RrIdentity};

/// `"p"` or `"p/q"`.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

fn serialize_opt_rational<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match r {
        Some(v) => s.serialize_some(&rational_string(v)),
        None => s.serialize_none(),
    }
}

/// The auxiliary-function section: kernel vector, heights, valuations.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma2Section {
    pub n: usize,
    pub c: Vec<String>,
    #[serde(rename = "hF")]
    pub h_f: i64,
    #[serde(rename = "v_pF")]
    pub v_p_f: i64,
    pub wronskian_nonzero: bool,
}

impl Lemma2Section {
    pub fn from_aux(n: usize, aux: &AuxiliaryFunction) -> crate::Result<Self> {
        Ok(Lemma2Section {
            n,
            c: aux.coefficients().iter().map(|v| v.to_string()).collect(),
            h_f: aux.height()?,
            v_p_f: aux.achieved_valuation(),
            wronskian_nonzero: true,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RrSection {
    pub lhs: i64,
    pub rhs: i64,
}

impl From<&RrIdentity> for RrSection {
    fn from(r: &RrIdentity) -> Self {
        RrSection {
            lhs: r.lhs,
            rhs: r.rhs,
        }
    }
}

/// The full verification report for one input. Field names are stable; when
/// a section was not computed it serializes as `null` or an empty list.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub f: String,
    pub x: String,
    pub point: String,
    pub order: i64,
    pub height: i64,
    pub s1_count: i64,
    pub s2_count: i64,
    pub s2_sum: i64,
    pub supp_x_count: i64,
    pub rows: Vec<BoundRow>,
    pub lemma2: Option<Lemma2Section>,
    pub prop_checks: Vec<DerivativeValuationCheck>,
    pub rr_check: Option<RrSection>,
    pub pass: bool,
    pub analyzed_f: String,
    pub normalized_exponent: Option<i64>,
    pub is_sharp: bool,
    pub min_slack: Option<i64>,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub limsup_estimate: Option<BigRational>,
    pub limsup_bound: i64,
}

impl ReportDocument {
    pub fn from_bound_report(
        f: String,
        x: String,
        point: String,
        order: i64,
        report: &BoundReport,
    ) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            f,
            x,
            point,
            order,
            height: report.inputs.height,
            s1_count: report.inputs.s1_count,
            s2_count: report.inputs.s2_count,
            s2_sum: report.inputs.s2_sum,
            supp_x_count: report.inputs.supp_x_count,
            rows: report.rows.clone(),
            lemma2: None,
            prop_checks: Vec::new(),
            rr_check: None,
            pass: true,
            analyzed_f: report.analyzed.to_string(),
            normalized_exponent: report.normalized_exponent,
            is_sharp: report.is_sharp,
            min_slack: report.min_slack,
            limsup_estimate: report.limsup_estimate.clone(),
            limsup_bound: report.limsup_bound,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per `n`: `n,a_n,theorem_rhs,corollary_rhs,slack`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,a_n,theorem_rhs,corollary_rhs,slack\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n, r.a_n, r.theorem_rhs, r.corollary_rhs, r.slack
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("gapbound {}\n", self.version));
        out.push_str(&format!("f      = {}\n", self.f));
        out.push_str(&format!("x      = {}\n", self.x));
        out.push_str(&format!("point  = {}\n", self.point));
        out.push_str(&format!("order  = {}\n", self.order));
        if let Some(v) = self.normalized_exponent {
            out.push_str(&format!(
                "analyzed f/x^{v} = {} (input had valuation {v})\n",
                self.analyzed_f
            ));
        }
        out.push_str(&format!(
            "height = {}, #S1 = {}, #S2 = {} (weighted sum {}), #Supp{{x}} = {}\n",
            self.height, self.s1_count, self.s2_count, self.s2_sum, self.supp_x_count
        ));
        if let Some(est) = &self.limsup_estimate {
            out.push_str(&format!(
                "limsup a_n/n: estimate {} <= bound {}\n",
                rational_string(est),
                self.limsup_bound
            ));
        }
        if !self.rows.is_empty() {
            out.push_str("\n    n      a_n  theorem  corollary  slack\n");
            for r in &self.rows {
                out.push_str(&format!(
                    "{:5} {:8} {:8} {:10} {:6}\n",
                    r.n, r.a_n, r.theorem_rhs, r.corollary_rhs, r.slack
                ));
            }
            out.push_str(&format!(
                "sharp: {} (minimum slack {})\n",
                self.is_sharp,
                self.min_slack
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| "n/a".into())
            ));
        }
        if let Some(l) = &self.lemma2 {
            out.push_str(&format!(
                "\nauxiliary function (n = {}): c = [{}], v_p(F) = {}, h(F) = {}, wronskian nonzero: {}\n",
                l.n,
                l.c.join(", "),
                l.v_p_f,
                l.h_f,
                l.wronskian_nonzero
            ));
        }
        if !self.prop_checks.is_empty() {
            let held = self.prop_checks.iter().filter(|c| c.holds).count();
            out.push_str(&format!(
                "derivative valuation checks: {held}/{} hold\n",
                self.prop_checks.len()
            ));
        }
        if let Some(rr) = &self.rr_check {
            out.push_str(&format!(
                "differential degree identity: lhs = {}, rhs = {}\n",
                rr.lhs, rr.rhs
            ));
        }
        out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        out
    }
}

/// Output format selector shared by all subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}
