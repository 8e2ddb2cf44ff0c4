//! `cmconic veronese2` - classify every divisor class of the Segre product
//! of two Veronese subrings, with the three conic routes side by side.

use crate::out::{emit, parse_window, CliError, OutputFormat};
use crate::svg::{self, Cell};
use clap::Args as ClapArgs;
use cmconic::{
    bezout_pair, classify_veronese2, cm_set_veronese2, conic_set_veronese2, veronese2_formulas,
    SupportPresentation, Veronese2Params,
};
use serde_json::json;
use std::path::PathBuf;

#[derive(ClapArgs, Debug)]
pub struct Args {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub c: u32,
    #[arg(long)]
    pub d: u32,

    /// Clamp the DISPLAY window to a:b (computation always uses the
    /// provably sufficient window)
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Option<(i64, i64)>,

    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps (default: all cores); never changes output
    #[arg(long)]
    pub threads: Option<usize>,
}

struct Record {
    i: i64,
    cm: bool,
    conic: bool,
    lhs1: i64,
    rhs1: i64,
    lhs2: i64,
    rhs2: i64,
}

pub fn run(args: &Args) -> Result<(), CliError> {
    let params = Veronese2Params::new(args.m, args.n, args.c, args.d)?;
    let bz = bezout_pair(params.c, params.d)?;
    let (wlo, whi) = params.window();
    let display = match args.window {
        Some((lo, hi)) => (lo.max(wlo), hi.min(whi)),
        None => (wlo, whi),
    };

    let cm_set = cm_set_veronese2(&params)?;
    let conic = conic_set_veronese2(&params)?;
    let formulas = veronese2_formulas(&params);
    let pres = SupportPresentation::veronese2(&params);
    let class_group = pres.class_group();
    let (glo, ghi) = params.guaranteed_range();
    let outside: Vec<i64> = cm_set
        .iter()
        .copied()
        .filter(|i| *i < glo || *i > ghi)
        .collect();

    // conic classes must be Cohen-Macaulay
    for label in &conic.generic_labels {
        if !cm_set.contains(label) {
            return Err(CliError::Failure(format!(
                "class {label} is conic but not Cohen-Macaulay"
            )));
        }
    }

    let mut records = Vec::new();
    for i in display.0..=display.1 {
        let decision = classify_veronese2(&params, i)?;
        let eval = &decision.certificates[0].1;
        records.push(Record {
            i,
            cm: decision.is_cm,
            conic: conic.generic_labels.contains(&i),
            lhs1: eval.a1 + 1,
            rhs1: eval.r2,
            lhs2: eval.a2 + 1,
            rhs2: eval.r1,
        });
    }

    let mut discrepancies: Vec<String> = Vec::new();
    if !conic.formula_agrees() {
        discrepancies.push(format!(
            "closed-form conic count m+n+c+d-3 = {} differs from the generic enumerator \
             count {} (equality defect (d-1)(m-1)+(c-1)(n-1) = {})",
            conic.formula_value,
            conic.generic_labels.len(),
            conic.equality_defect
        ));
    }
    if !conic.parameterization_agrees() {
        discrepancies.push(format!(
            "parameterization route {:?} differs from the generic enumerator {:?}",
            conic.parameterization_labels, conic.generic_labels
        ));
    }
    if !conic.interval_agrees() {
        discrepancies.push(format!(
            "conjectured interval (-dm, cn) = {:?} differs from the generic enumerator {:?}",
            conic.conjectured_interval, conic.generic_labels
        ));
    }

    let formula_level = params.m < 2 || params.n < 2;

    let content = match args.format {
        OutputFormat::Csv => {
            let mut s = String::from("i,cm,conic,lhs1,rhs1,lhs2,rhs2\n");
            for r in &records {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.i, r.cm, r.conic, r.lhs1, r.rhs1, r.lhs2, r.rhs2
                ));
            }
            s
        }
        OutputFormat::Json => {
            let v = json!({
                "params": {
                    "family": "veronese2",
                    "m": params.m, "n": params.n, "c": params.c, "d": params.d,
                    "bezout": {"u": bz.u, "v": bz.v},
                },
                "counts": {
                    "cm": cm_set.len(),
                    "conic": conic.generic_labels.len(),
                    "window": [wlo, whi],
                    "display_window": [display.0, display.1],
                    "guaranteed_range": [glo, ghi],
                    "cm_outside_guaranteed_range": outside,
                },
                "formulas": {
                    "conic": formulas.conic_formula,
                    "cm_lower_bound": formulas.cm_lower_bound,
                    "conic_routes": {
                        "generic": conic.generic_labels.iter().collect::<Vec<_>>(),
                        "parameterization": conic.parameterization_labels.iter().collect::<Vec<_>>(),
                        "conjectured_interval": conic.conjectured_interval.iter().collect::<Vec<_>>(),
                        "formula_agrees": conic.formula_agrees(),
                        "parameterization_agrees": conic.parameterization_agrees(),
                        "interval_agrees": conic.interval_agrees(),
                        "equality_defect": conic.equality_defect,
                    },
                    "formula_level_verdicts": formula_level,
                },
                "class_group": {
                    "free_rank": class_group.free_rank,
                    "torsion": class_group.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                },
                "classes": records.iter().map(|r| json!({
                    "i": r.i,
                    "cm": r.cm,
                    "conic": r.conic,
                    "lhs1": r.lhs1, "rhs1": r.rhs1, "lhs2": r.lhs2, "rhs2": r.rhs2,
                })).collect::<Vec<_>>(),
                "discrepancies": discrepancies,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        OutputFormat::Svg => svg::region_map_svg(
            &format!(
                "veronese2 m={} n={} c={} d={}: CM {} / conic {}",
                params.m,
                params.n,
                params.c,
                params.d,
                cm_set.len(),
                conic.generic_labels.len()
            ),
            display,
            (0, 0),
            |i, _| {
                if conic.generic_labels.contains(&i) {
                    Cell::Conic
                } else if cm_set.contains(&i) {
                    Cell::CmOnly
                } else {
                    Cell::NotCm
                }
            },
        ),
        OutputFormat::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "veronese2  m={} n={} c={} d={}   (bezout u={}, v={})\n",
                params.m, params.n, params.c, params.d, bz.u, bz.v
            ));
            s.push_str(&format!(
                "class group: free rank {}, torsion {:?}\n",
                class_group.free_rank,
                class_group
                    .torsion
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
            ));
            if let Some(w) = pres.redundancy_warning() {
                s.push_str(&format!("warning: {w}\n"));
            }
            if formula_level {
                s.push_str(
                    "note: m or n is 1, so the dimension hypothesis of the product criterion \
                     fails; verdicts below are formula-level\n",
                );
            }
            s.push('\n');
            s.push_str(&format!(
                "conic classes (generic enumerator, ground truth): {:?}  count {}\n",
                conic.generic_labels,
                conic.generic_labels.len()
            ));
            s.push_str(&format!(
                "  parameterization route: {:?}  {}\n",
                conic.parameterization_labels,
                if conic.parameterization_agrees() {
                    "agrees"
                } else {
                    "DIFFERS"
                }
            ));
            s.push_str(&format!(
                "  conjectured interval -dm < k < cn: {:?}  {}\n",
                conic.conjectured_interval,
                if conic.interval_agrees() { "agrees" } else { "DIFFERS" }
            ));
            s.push_str(&format!(
                "  closed-form count m+n+c+d-3 = {}  {}\n",
                conic.formula_value,
                if conic.formula_agrees() {
                    "agrees"
                } else {
                    "DIFFERS from ground truth"
                }
            ));
            s.push_str(&format!(
                "\nCohen-Macaulay classes in window [{}, {}]: {:?}  count {} (formula lower bound {})\n",
                wlo,
                whi,
                cm_set,
                cm_set.len(),
                formulas.cm_lower_bound
            ));
            s.push_str(&format!(
                "  guaranteed range [{glo}, {ghi}]; outside it: {}\n",
                if outside.is_empty() {
                    "none".to_string()
                } else {
                    format!("{outside:?}")
                }
            ));
            s.push_str("conic <= CM: ok\n");
            if discrepancies.is_empty() {
                s.push_str("discrepancies: none\n");
            } else {
                s.push_str("discrepancies:\n");
                for d in &discrepancies {
                    s.push_str(&format!("  - {d}\n"));
                }
            }
            s.push_str("\nclasses:\n");
            s.push_str("     i  cm     conic  lhs1 <= rhs1 | lhs2 <= rhs2\n");
            for r in &records {
                s.push_str(&format!(
                    "  {:>4}  {:<5}  {:<5}  {:>4} <= {:>4} | {:>4} <= {:>4}\n",
                    r.i, r.cm, r.conic, r.lhs1, r.rhs1, r.lhs2, r.rhs2
                ));
            }
            s
        }
    };
    emit(&args.out, &content)
}
