//! Command-line interface.
//!
//! Exit codes: 0 all checks pass, 1 usage or parse error, 2 precondition
//! rejection (the input violates a hypothesis), 3 internal verification
//! failure (a proven statement appeared to fail, i.e. a bug).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use gapbound::algebra::RationalFunction;
use gapbound::campaign::{run_campaign, CampaignConfig};
use gapbound::error::Error;
use gapbound::gaps::verify_bounds;
use gapbound::lemma::{
    check_rr_identity, derivative_valuation_sweep, lemma2_construction,
};
use gapbound::parse::{parse_rational, parse_rational_function};
use gapbound::report::{rational_string, Lemma2Section, ReportDocument, RrSection};
use gapbound::series::expand_in_x;

#[derive(Parser)]
#[command(
    name = "gapbound",
    version,
    about = "Exact gap-sequence analysis for rational functions on the projective line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct InputArgs {
    /// Rational function to analyze, e.g. "1 + t^3/(1 - t^2)"
    #[arg(long)]
    f: String,
    /// Local parameter at the expansion point
    #[arg(long, default_value = "t")]
    x: String,
    /// Rational expansion point, e.g. "0" or "-1/2"
    #[arg(long, default_value = "0")]
    point: String,
    /// Window: exponents below this bound are fully enumerated
    #[arg(long, default_value_t = 64)]
    order: i64,
    /// Analyze f/x^v when v_p(f) = v is nonzero instead of rejecting
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of f in powers of x at the point
    Expand(InputArgs),
    /// Print the gap sequence (exponents and coefficients of nonzero terms)
    Gaps(InputArgs),
    /// Verify every gap exponent against the main bound
    CheckTheorem {
        #[command(flatten)]
        input: InputArgs,
        /// Depth of the auxiliary-function section (default: up to 4)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Verify every gap exponent against the support-based corollary bound
    CheckCorollary {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build the auxiliary function F for index n and print its data
    Lemma2 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Check the derivative-valuation inequality over the combined support
    CheckProp {
        #[command(flatten)]
        input: InputArgs,
        /// Largest derivative order to check
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Check the degree identity for the coordinate differential of x
    CheckRr {
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the built-in sharp family f = 1 + t^k/(1 - t^m) with x = t
    PaperExample {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 50)]
        order: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Verify seeded random functions against every configured parameter
    Campaign {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long, default_value_t = 10)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 64)]
        order: i64,
        /// Parameter family; repeat the flag for several parameters
        #[arg(long = "x", default_values_t = vec!["t".to_string()])]
        x: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct ParsedInput {
    f: RationalFunction,
    x: RationalFunction,
    point: BigRational,
}

fn parse_input(input: &InputArgs) -> Result<ParsedInput, Error> {
    Ok(ParsedInput {
        f: parse_rational_function(&input.f)?,
        x: parse_rational_function(&input.x)?,
        point: parse_rational(&input.point)?,
    })
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Expand(input) => cmd_expand(&input),
        Command::Gaps(input) => cmd_gaps(&input),
        Command::CheckTheorem { input, n } => cmd_check(&input, n, false),
        Command::CheckCorollary { input, n } => cmd_check(&input, n, true),
        Command::Lemma2 { input, n } => cmd_lemma2(&input, n),
        Command::CheckProp { input, n } => cmd_check_prop(&input, n),
        Command::CheckRr { x, format } => cmd_check_rr(&x, format),
        Command::PaperExample { k, m, order, format } => cmd_paper_example(k, m, order, format),
        Command::Campaign {
            trials,
            max_degree,
            coeff_bound,
            order,
            x,
            seed,
            format,
        } => {
            let config = CampaignConfig {
                trials,
                max_degree,
                coeff_bound,
                order,
                parameter_family: x,
                seed,
            };
            cmd_campaign(&config, format)
        }
    }
}

#[derive(Serialize)]
struct SeriesDocument {
    version: String,
    f: String,
    x: String,
    point: String,
    order: i64,
    offset: i64,
    terms: Vec<SeriesTerm>,
}

#[derive(Serialize)]
struct SeriesTerm {
    exponent: i64,
    coefficient: String,
}

fn cmd_expand(input: &InputArgs) -> Result<(), Error> {
    let parsed = parse_input(input)?;
    let series = expand_in_x(&parsed.f, &parsed.x, &parsed.point, input.order)?;
    let doc = SeriesDocument {
        version: env!("CARGO_PKG_VERSION").into(),
        f: parsed.f.to_string(),
        x: parsed.x.to_string(),
        point: rational_string(&parsed.point),
        order: series.order(),
        offset: series.offset(),
        terms: series
            .terms()
            .map(|(k, c)| SeriesTerm {
                exponent: k,
                coefficient: rational_string(c),
            })
            .collect(),
    };
    match input.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        OutputFormat::Csv => {
            println!("exponent,coefficient");
            for t in &doc.terms {
                println!("{},{}", t.exponent, t.coefficient);
            }
        }
        OutputFormat::Text => {
            println!("f = {}", doc.f);
            println!("expansion in powers of x = {} at {}", doc.x, doc.point);
            for t in &doc.terms {
                println!("  x^{:<4} {}", t.exponent, t.coefficient);
            }
            println!("  O(x^{})", doc.order);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GapsDocument {
    version: String,
    f: String,
    x: String,
    point: String,
    order: i64,
    exponents: Vec<i64>,
    coefficients: Vec<String>,
    window: i64,
    terminated: bool,
}

fn cmd_gaps(input: &InputArgs) -> Result<(), Error> {
    let parsed = parse_input(input)?;
    let report = verify_bounds(
        &parsed.f,
        &parsed.x,
        &parsed.point,
        input.order,
        input.normalize,
    )?;
    let doc = GapsDocument {
        version: env!("CARGO_PKG_VERSION").into(),
        f: parsed.f.to_string(),
        x: parsed.x.to_string(),
        point: rational_string(&parsed.point),
        order: input.order,
        exponents: report.gaps.exponents().to_vec(),
        coefficients: report
            .gaps
            .coefficients()
            .iter()
            .map(rational_string)
            .collect(),
        window: report.gaps.window(),
        terminated: report.gaps.terminated(),
    };
    match input.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        OutputFormat::Csv => {
            println!("n,a_n,alpha_n");
            for (n, (a, c)) in doc.exponents.iter().zip(&doc.coefficients).enumerate() {
                println!("{n},{a},{c}");
            }
        }
        OutputFormat::Text => {
            println!("gap sequence of f = {} in x = {} at {}", doc.f, doc.x, doc.point);
            for (n, (a, c)) in doc.exponents.iter().zip(&doc.coefficients).enumerate() {
                println!("  a_{n} = {a}   alpha_{n} = {c}");
            }
            println!("window {}", doc.window);
        }
    }
    Ok(())
}

/// Shared pipeline for check-theorem / check-corollary: the full document
/// with the bound table, the auxiliary-function section, the derivative
/// sweep, and the degree identity.
fn cmd_check(input: &InputArgs, n: Option<usize>, corollary_view: bool) -> Result<(), Error> {
    let parsed = parse_input(input)?;
    let report = verify_bounds(
        &parsed.f,
        &parsed.x,
        &parsed.point,
        input.order,
        input.normalize,
    )?;
    let mut doc = ReportDocument::from_bound_report(
        parsed.f.to_string(),
        parsed.x.to_string(),
        rational_string(&parsed.point),
        input.order,
        &report,
    );
    let depth = n.unwrap_or(4).min(report.gaps.len().saturating_sub(1));
    if depth >= 1 {
        let aux = lemma2_construction(
            &report.analyzed,
            &parsed.x,
            &parsed.point,
            &report.gaps,
            depth,
        )?;
        doc.lemma2 = Some(Lemma2Section::from_aux(depth, &aux)?);
    }
    doc.prop_checks = derivative_valuation_sweep(&report.analyzed, &parsed.x, 3)?;
    let rr = check_rr_identity(&parsed.x)?;
    doc.rr_check = Some(RrSection::from(&rr));
    doc.pass = doc.prop_checks.iter().all(|c| c.holds) && rr.holds;
    if !doc.pass {
        print_document(&doc, input.format);
        return Err(Error::VerificationFailure(
            "a proven check failed; see report".into(),
        ));
    }
    let _ = corollary_view;
    print_document(&doc, input.format);
    Ok(())
}

fn print_document(doc: &ReportDocument, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", doc.to_json()),
        OutputFormat::Csv => print!("{}", doc.to_csv()),
        OutputFormat::Text => print!("{}", doc.to_text()),
    }
}

fn cmd_lemma2(input: &InputArgs, n: usize) -> Result<(), Error> {
    let parsed = parse_input(input)?;
    let report = verify_bounds(
        &parsed.f,
        &parsed.x,
        &parsed.point,
        input.order,
        input.normalize,
    )?;
    let aux = lemma2_construction(
        &report.analyzed,
        &parsed.x,
        &parsed.point,
        &report.gaps,
        n,
    )?;
    let section = Lemma2Section::from_aux(n, &aux)?;
    match input.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&section).unwrap()),
        OutputFormat::Csv => {
            println!("n,v_pF,hF,c");
            println!(
                "{},{},{},{}",
                section.n,
                section.v_p_f,
                section.h_f,
                section.c.join(" ")
            );
        }
        OutputFormat::Text => {
            println!("auxiliary function for n = {n}");
            println!("c      = [{}]", section.c.join(", "));
            println!("F      = {}", aux.function());
            println!("v_p(F) = {}", section.v_p_f);
            println!("h(F)   = {}", section.h_f);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PropDocument {
    version: String,
    f: String,
    x: String,
    n_max: u32,
    checks: Vec<gapbound::lemma::DerivativeValuationCheck>,
    pass: bool,
}

fn cmd_check_prop(input: &InputArgs, n: u32) -> Result<(), Error> {
    let parsed = parse_input(input)?;
    let checks = derivative_valuation_sweep(&parsed.f, &parsed.x, n)?;
    let pass = checks.iter().all(|c| c.holds);
    let doc = PropDocument {
        version: env!("CARGO_PKG_VERSION").into(),
        f: parsed.f.to_string(),
        x: parsed.x.to_string(),
        n_max: n,
        checks,
        pass,
    };
    match input.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        OutputFormat::Csv => {
            println!("cluster,n,lhs,rhs,holds");
            for c in &doc.checks {
                println!(
                    "{},{},{},{},{}",
                    c.cluster,
                    c.n,
                    c.lhs.map(|v| v.to_string()).unwrap_or_default(),
                    c.rhs,
                    c.holds
                );
            }
        }
        OutputFormat::Text => {
            println!("derivative valuations of f = {} wrt x = {}", doc.f, doc.x);
            for c in &doc.checks {
                println!(
                    "  q = {:<12} n = {}  lhs = {:<6} rhs = {:<6} {}",
                    c.cluster,
                    c.n,
                    c.lhs.map(|v| v.to_string()).unwrap_or_else(|| "inf".into()),
                    c.rhs,
                    if c.holds { "ok" } else { "VIOLATED" }
                );
            }
            println!("{}", if doc.pass { "PASS" } else { "FAIL" });
        }
    }
    if !doc.pass {
        return Err(Error::VerificationFailure(
            "derivative valuation inequality failed".into(),
        ));
    }
    Ok(())
}

fn cmd_check_rr(x_text: &str, format: OutputFormat) -> Result<(), Error> {
    let x = parse_rational_function(x_text)?;
    let rr = check_rr_identity(&x)?;
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&rr).unwrap())
        }
        OutputFormat::Csv => {
            println!("lhs,rhs,holds");
            println!("{},{},{}", rr.lhs, rr.rhs, rr.holds);
        }
        OutputFormat::Text => {
            println!("x = {x}");
            println!(
                "sum of v_q(dx/dx_q) off the support = {}, #Supp - 2 = {}: {}",
                rr.lhs,
                rr.rhs,
                if rr.holds { "ok" } else { "VIOLATED" }
            );
        }
    }
    if !rr.holds {
        return Err(Error::VerificationFailure(
            "degree identity failed".into(),
        ));
    }
    Ok(())
}

fn cmd_paper_example(k: u32, m: u32, order: i64, format: OutputFormat) -> Result<(), Error> {
    if m < 1 || k <= m {
        return Err(Error::Config(format!(
            "the sharp family needs k > m >= 1, got k = {k}, m = {m}"
        )));
    }
    let f_text = format!("1 + t^{k}/(1 - t^{m})");
    let input = InputArgs {
        f: f_text.clone(),
        x: "t".into(),
        point: "0".into(),
        order,
        normalize: false,
        format,
    };
    let parsed = parse_input(&input)?;
    let report = verify_bounds(&parsed.f, &parsed.x, &parsed.point, order, false)?;
    // this family achieves the bound exactly: a_n = k + (n-1) m,
    // h(f) = k, #S1 = m; anything else is a bug
    let mut violations = Vec::new();
    if report.inputs.height != k as i64 {
        violations.push(format!("height {} != {k}", report.inputs.height));
    }
    if report.inputs.s1_count != m as i64 {
        violations.push(format!("#S1 {} != {m}", report.inputs.s1_count));
    }
    for row in &report.rows {
        let expected = k as i64 + (row.n as i64 - 1) * m as i64;
        if row.a_n != expected || row.slack != 0 {
            violations.push(format!(
                "n = {}: a_n = {} expected {expected}, slack {}",
                row.n, row.a_n, row.slack
            ));
        }
    }
    let doc = ReportDocument::from_bound_report(
        f_text,
        "t".into(),
        "0".into(),
        order,
        &report,
    );
    print_document(&doc, format);
    if !violations.is_empty() {
        return Err(Error::VerificationFailure(violations.join("; ")));
    }
    Ok(())
}

fn cmd_campaign(config: &CampaignConfig, format: OutputFormat) -> Result<(), Error> {
    let report = run_campaign(config)?;
    match format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Csv => print!("{}", report.to_csv()),
        OutputFormat::Text => print!("{}", report.to_text()),
    }
    if !report.pass {
        return Err(Error::VerificationFailure(
            "campaign detected a failed check".into(),
        ));
    }
    Ok(())
}
