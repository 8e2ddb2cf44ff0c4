//! `cmconic hilbert` - evaluate a series expression and print its
//! invariants.

use crate::out::{emit, parse_window, CliError, OutputFormat};
use clap::Args as ClapArgs;
use cmconic::GradedModuleExpr;
use serde_json::json;
use std::path::PathBuf;

#[derive(ClapArgs, Debug)]
pub struct Args {
    /// Expression over poly(<int>), shift(<expr>, <int>),
    /// veronese(<expr>, <int>), segre(<expr>, <expr>)
    pub expr: String,

    /// Coefficient range to print, as a:b (inclusive)
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    pub coeffs: Option<(i64, i64)>,

    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &Args) -> Result<(), CliError> {
    if matches!(args.format, OutputFormat::Csv | OutputFormat::Svg) {
        return Err(CliError::Usage(
            "hilbert supports --format text or json".to_string(),
        ));
    }
    let expr = GradedModuleExpr::parse(&args.expr)?;
    let series = expr.series()?;
    let a = series.a_invariant()?;
    let r = series.initial_degree()?;
    let e = series.multiplicity()?;
    let (hp, valid_from) = series.hilbert_polynomial()?;
    let coeff_range = args.coeffs.unwrap_or((r, r + 9));
    let coeffs: Vec<(i64, String)> = (coeff_range.0..=coeff_range.1)
        .map(|k| (k, series.coefficient(k).to_string()))
        .collect();

    let content = match args.format {
        OutputFormat::Text => {
            let mut s = String::new();
            s.push_str(&format!("expression:         {}\n", expr));
            s.push_str(&format!("series:             {}\n", series));
            s.push_str(&format!("a-invariant:        {}\n", a));
            s.push_str(&format!("initial degree:     {}\n", r));
            s.push_str(&format!("multiplicity:       {}\n", e));
            s.push_str(&format!(
                "hilbert polynomial: {}   (valid from k = {})\n",
                hp, valid_from
            ));
            s.push_str(&format!(
                "coefficients {}..{}:",
                coeff_range.0, coeff_range.1
            ));
            for (_, c) in &coeffs {
                s.push_str(&format!(" {c}"));
            }
            s.push('\n');
            s
        }
        OutputFormat::Json => {
            let v = json!({
                "expression": expr.to_string(),
                "series": series.to_string(),
                "a_invariant": a,
                "initial_degree": r,
                "multiplicity": e.to_string(),
                "hilbert_polynomial": hp.to_string(),
                "valid_from": valid_from,
                "coefficients": coeffs
                    .iter()
                    .map(|(k, c)| json!({"k": k, "value": c}))
                    .collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        _ => unreachable!(),
    };
    emit(&args.out, &content)
}
