//! Randomized verification campaigns.
//!
//! A campaign draws random reduced rational functions, expands each one in
//! every parameter of the configured family at the origin, and checks the
//! observed gap exponents against the proven bounds, along with the
//! auxiliary-function construction and the derivative-valuation inequality
//! at small depth. The theorems are the oracles: any failure is an
//! implementation bug and fails the campaign.
//!
//! Trials are drawn sequentially from one seeded generator and verified in
//! parallel; results are merged in trial order, so a fixed seed produces a
//! byte-identical report regardless of scheduling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::gaps::{polynomial_in_x_check, verify_bounds_with, ParameterContext};
use crate::lemma::{
    check_height_decomposition, derivative_valuation_sweep, lemma2_construction,
    check_rr_identity,
};
use crate::parse::parse_rational_function;
use crate::report::RrSection;

/// Campaign parameters. `order` must exceed `max_degree` so that the window
/// always reaches past the first gap exponent.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignConfig {
    pub trials: u64,
    pub max_degree: u32,
    pub coeff_bound: i64,
    pub order: i64,
    pub parameter_family: Vec<String>,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            trials: 100,
            max_degree: 6,
            coeff_bound: 10,
            order: 64,
            parameter_family: vec!["t".into()],
            seed: 0,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.coeff_bound < 1 {
            return Err(Error::Config("coeff-bound must be at least 1".into()));
        }
        if self.order <= self.max_degree as i64 {
            return Err(Error::Config(format!(
                "order {} must exceed max-degree {}",
                self.order, self.max_degree
            )));
        }
        if self.parameter_family.is_empty() {
            return Err(Error::Config("parameter family must be nonempty".into()));
        }
        Ok(())
    }
}

/// Uniform polynomial: degree drawn from `0..=max_degree`, coefficients from
/// `[-bound, bound]`, leading coefficient nonzero.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: u32, bound: i64) -> Polynomial {
    let degree = rng.random_range(0..=max_degree) as usize;
    let mut coeffs: Vec<BigRational> = (0..=degree)
        .map(|_| BigRational::from_integer(BigInt::from(rng.random_range(-bound..=bound))))
        .collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = BigRational::from_integer(BigInt::from(rng.random_range(-bound..=bound)));
    }
    Polynomial::new(coeffs)
}

/// Uniform reduced rational function with nonzero denominator.
pub fn random_rational_function<R: Rng>(
    rng: &mut R,
    max_degree: u32,
    bound: i64,
) -> RationalFunction {
    let num = random_polynomial(rng, max_degree, bound);
    let den = random_polynomial(rng, max_degree, bound);
    RationalFunction::new(num, den).expect("den nonzero")
}

/// Draws until the function is usable for a campaign trial at the origin:
/// nonconstant, valuation zero at `p = 0`, and not a polynomial in any
/// parameter of the family.
pub fn random_campaign_function<R: Rng>(
    rng: &mut R,
    max_degree: u32,
    bound: i64,
    contexts: &[ParameterContext],
) -> Result<RationalFunction> {
    let zero = BigRational::zero();
    loop {
        let f = random_rational_function(rng, max_degree, bound);
        if f.is_constant() {
            continue;
        }
        if f.valuation_at_point(&zero)? != 0 {
            continue;
        }
        let mut poly_in_some_x = false;
        for ctx in contexts {
            if polynomial_in_x_check(&f, ctx.x(), &zero)? {
                poly_in_some_x = true;
                break;
            }
        }
        if poly_in_some_x {
            continue;
        }
        return Ok(f);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignXSummary {
    pub x: String,
    pub trials: u64,
    pub min_slack: i64,
    pub max_slack: i64,
    pub sharp_trials: u64,
    pub rr_check: RrSection,
    pub rr_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub version: String,
    pub config: CampaignConfig,
    pub per_x: Vec<CampaignXSummary>,
    pub min_slack: i64,
    pub max_slack: i64,
    pub failures: Vec<String>,
    pub pass: bool,
}

struct TrialOutcome {
    // per parameter: (min_slack, max_slack, sharp)
    per_x: Vec<(i64, i64, bool)>,
    failures: Vec<String>,
}

fn run_trial(
    trial: u64,
    f: &RationalFunction,
    contexts: &[ParameterContext],
    lemma_depth: usize,
) -> TrialOutcome {
    let zero = BigRational::zero();
    let mut per_x = Vec::with_capacity(contexts.len());
    let mut failures = Vec::new();
    for ctx in contexts {
        let mut min_slack = i64::MAX;
        let mut max_slack = i64::MIN;
        let mut sharp = false;
        match verify_bounds_with(ctx, f, false) {
            Ok(report) => {
                for row in &report.rows {
                    min_slack = min_slack.min(row.slack);
                    max_slack = max_slack.max(row.slack);
                }
                sharp = report.is_sharp;
                // auxiliary-function construction at small depth
                let n_max = lemma_depth.min(report.gaps.len().saturating_sub(1));
                for n in 1..=n_max {
                    match lemma2_construction(f, ctx.x(), &zero, &report.gaps, n) {
                        Ok(aux) => {
                            if let Err(e) = check_height_decomposition(&aux, f, ctx.x(), n) {
                                failures.push(format!(
                                    "trial {trial}, x = {}: {e}",
                                    ctx.x()
                                ));
                            }
                        }
                        Err(e) => failures.push(format!("trial {trial}, x = {}: {e}", ctx.x())),
                    }
                }
                // derivative-valuation inequality at depth 1
                match derivative_valuation_sweep(f, ctx.x(), 1) {
                    Ok(checks) => {
                        for c in checks.iter().filter(|c| !c.holds) {
                            failures.push(format!(
                                "trial {trial}, x = {}: derivative valuation failed at {} n={}: lhs {:?} rhs {}",
                                ctx.x(),
                                c.cluster,
                                c.n,
                                c.lhs,
                                c.rhs
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("trial {trial}, x = {}: {e}", ctx.x())),
                }
            }
            Err(e) => failures.push(format!("trial {trial}, x = {}, f = {f}: {e}", ctx.x())),
        }
        per_x.push((min_slack, max_slack, sharp));
    }
    TrialOutcome { per_x, failures }
}

/// Runs the campaign: every trial exercises every parameter in the family.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let zero = BigRational::zero();
    let mut contexts = Vec::new();
    for text in &config.parameter_family {
        let x = parse_rational_function(text)?;
        contexts.push(ParameterContext::new(&x, &zero, config.order)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut functions = Vec::with_capacity(config.trials as usize);
    for _ in 0..config.trials {
        functions.push(random_campaign_function(
            &mut rng,
            config.max_degree,
            config.coeff_bound,
            &contexts,
        )?);
    }

    let outcomes: Vec<TrialOutcome> = functions
        .par_iter()
        .enumerate()
        .map(|(i, f)| run_trial(i as u64, f, &contexts, 2))
        .collect();

    let mut per_x = Vec::new();
    for (xi, ctx) in contexts.iter().enumerate() {
        let mut min_slack = i64::MAX;
        let mut max_slack = i64::MIN;
        let mut sharp_trials = 0u64;
        for o in &outcomes {
            let (lo, hi, sharp) = o.per_x[xi];
            min_slack = min_slack.min(lo);
            max_slack = max_slack.max(hi);
            if sharp {
                sharp_trials += 1;
            }
        }
        let rr = check_rr_identity(ctx.x())?;
        per_x.push(CampaignXSummary {
            x: ctx.x().to_string(),
            trials: config.trials,
            min_slack,
            max_slack,
            sharp_trials,
            rr_check: RrSection::from(&rr),
            rr_holds: rr.holds,
        });
    }
    let failures: Vec<String> = outcomes.into_iter().flat_map(|o| o.failures).collect();
    let pass = failures.is_empty() && per_x.iter().all(|s| s.rr_holds && s.min_slack >= 0);
    Ok(CampaignReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        min_slack: per_x.iter().map(|s| s.min_slack).min().unwrap_or(0),
        max_slack: per_x.iter().map(|s| s.max_slack).max().unwrap_or(0),
        per_x,
        failures,
        pass,
    })
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "gapbound {} campaign: {} trials, degrees <= {}, |coefficients| <= {}, order {}, seed {}\n",
            self.version,
            self.config.trials,
            self.config.max_degree,
            self.config.coeff_bound,
            self.config.order,
            self.config.seed
        ));
        for s in &self.per_x {
            out.push_str(&format!(
                "x = {}: slack in [{}, {}], sharp in {}/{} trials, degree identity {} = {}\n",
                s.x, s.min_slack, s.max_slack, s.sharp_trials, s.trials, s.rr_check.lhs, s.rr_check.rhs
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("FAILURE: {f}\n"));
        }
        out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        out
    }

    /// One row per parameter: `x,trials,min_slack,max_slack,sharp_trials`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,trials,min_slack,max_slack,sharp_trials\n");
        for s in &self.per_x {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                s.x, s.trials, s.min_slack, s.max_slack, s.sharp_trials
            ));
        }
        out
    }
}
