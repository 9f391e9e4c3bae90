use num_traits::Zero;
use serde_json::json;
use tableaux_core::graded_graphs::{
    check_coordinate_convex, check_minimum_closed, construct_phi, verify_phi_conditions, GraphKind, PhiSeries,
};
use tableaux_core::scalar::format_rational;
use tableaux_core::ExponentVector;
use tableaux_core::Rational as BigRational;

use super::{json_line, Output};
use crate::budget::Budget;
use crate::failure::Failure;
use crate::{graph, Format, PhiArgs};

fn render_term(e: &ExponentVector, c: &BigRational) -> String {
    let vars: Vec<String> = e
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| if d == 1 { format!("x{}", i + 1) } else { format!("x{}^{d}", i + 1) })
        .collect();
    if vars.is_empty() {
        format_rational(c)
    } else {
        format!("{}*{}", format_rational(c), vars.join("*"))
    }
}

/// Non-zero terms, largest exponent first.
fn render(series: &PhiSeries) -> String {
    let terms: Vec<String> =
        series.coeffs.iter().rev().filter(|(_, c)| !c.is_zero()).map(|(e, c)| render_term(e, c)).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn largest_entry(kind: &GraphKind) -> i64 {
    match kind {
        GraphKind::CustomBox { vertices, .. } => {
            vertices.iter().flat_map(|v| v.entries().iter().copied()).max().unwrap_or(0)
        }
        _ => 0,
    }
}

pub fn phi(a: &PhiArgs, budget: &Budget) -> Result<Output, Failure> {
    let kind = graph::build(&a.graph, budget)?;
    let v = graph::resolve(&kind, Some(&a.v), None)?.expect("vertex given");
    budget.levels(a.max_degree - v.degree())?;
    if matches!(kind, GraphKind::CustomBox { .. }) {
        let bound = largest_entry(&kind);
        for report in [check_minimum_closed(&kind, bound), check_coordinate_convex(&kind, bound)] {
            if !report.is_ok() {
                return Ok(Output { text: format!("hypothesis violated: {report}\n"), ok: false });
            }
        }
    }
    let series = match construct_phi(&kind, &v, a.max_degree) {
        Ok(s) => s,
        Err(tableaux_core::Error::Hypothesis(at, why)) => {
            return Ok(Output { text: format!("hypothesis violated at {at:?}: {why}\n"), ok: false });
        }
        Err(e) => return Err(e.into()),
    };
    let mut report = verify_phi_conditions(&kind, &v, &series, a.max_degree);
    if a.no_timing {
        report = report.without_timing();
    }
    let text = match a.format {
        Format::Plain => {
            let status = if report.passed() {
                "pass".to_string()
            } else {
                format!("FAIL {}", report.witness.clone().unwrap_or_default())
            };
            format!("{}\nconditions up to degree {}: {status}\n", render(&series), a.max_degree)
        }
        Format::Json => {
            let coeffs: serde_json::Map<String, serde_json::Value> = series
                .coeffs
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e.to_string(), json!(format_rational(c))))
                .collect();
            let verification: serde_json::Value = serde_json::from_str(&report.to_json_line()).expect("report is json");
            json_line(&json!({
                "graph": kind.to_string(),
                "v": v.to_string(),
                "degree_bound": series.degree_bound.to_string(),
                "coefficients": coeffs,
                "verification": verification,
            }))
        }
        Format::Csv => return Err(Failure::usage("phi prints plain or json")),
    };
    Ok(Output { text, ok: report.passed() })
}
