use serde_json::json;
use tableaux_core::formulas::{multinomial_paths, skew_syt_count, strict_skew_count, strict_vertex_to_partition};
use tableaux_core::graded_graphs::{coefficient_path_count, construct_phi, count_paths_dp, GraphKind};
use tableaux_core::ExponentVector;
use tableaux_core::Integer as BigInt;

use super::{json_line, Output};
use crate::budget::Budget;
use crate::failure::Failure;
use crate::{graph, CountArgs, Format, Method};

fn by_formula(kind: &GraphKind, from: &ExponentVector, to: &ExponentVector) -> Result<BigInt, Failure> {
    Ok(match kind {
        GraphKind::Pascal(_) => {
            if !to.majorates(from) {
                return Ok(BigInt::from(0));
            }
            let steps: Vec<u64> = (to - from).entries().iter().map(|&c| c as u64).collect();
            multinomial_paths(&steps)
        }
        GraphKind::RestrictedYoung(_) => skew_syt_count(from, to)?,
        GraphKind::StrictPartitions(k) => {
            strict_skew_count(&strict_vertex_to_partition(from)?, &strict_vertex_to_partition(to)?, *k)?
        }
        GraphKind::CustomBox { .. } => {
            return Err(Failure::usage("custom graphs have no closed form; use --method oracle or phi"));
        }
    })
}

fn by_phi(kind: &GraphKind, from: &ExponentVector, to: &ExponentVector) -> Result<BigInt, Failure> {
    if to.degree() < from.degree() {
        return Ok(BigInt::from(0));
    }
    let phi = construct_phi(kind, from, to.degree())?;
    Ok(coefficient_path_count(kind, &phi, from, to)?)
}

pub fn count(a: &CountArgs, budget: &Budget) -> Result<Output, Failure> {
    let kind = graph::build(&a.graph, budget)?;
    let from = match graph::resolve(&kind, a.from.as_deref(), a.from_partition.as_deref())? {
        Some(v) => v,
        None => kind.base_vertex().ok_or_else(|| Failure::usage("the graph has no vertices"))?,
    };
    let to = graph::resolve(&kind, a.to.as_deref(), a.to_partition.as_deref())?
        .ok_or_else(|| Failure::usage("a target vertex is required"))?;
    budget.levels(to.degree() - from.degree())?;

    let methods = match a.method {
        Method::All => vec![Method::Formula, Method::Oracle, Method::Phi],
        m => vec![m],
    };
    let mut counts = Vec::new();
    for m in methods {
        let (name, value) = match m {
            Method::Formula => ("formula", by_formula(&kind, &from, &to)?),
            Method::Oracle => ("oracle", count_paths_dp(&kind, &from, &to)?),
            Method::Phi => ("phi", by_phi(&kind, &from, &to)?),
            Method::All => unreachable!(),
        };
        counts.push((name, value));
    }
    let agree = counts.windows(2).all(|w| w[0].1 == w[1].1);

    let text = match a.format {
        Format::Plain if agree => format!("{}\n", counts[0].1),
        Format::Plain => counts.iter().map(|(name, c)| format!("{name}: {c}\n")).collect(),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                counts.iter().map(|(name, c)| (name.to_string(), json!(c.to_string()))).collect();
            json_line(&json!({
                "graph": kind.to_string(),
                "from": from.to_string(),
                "to": to.to_string(),
                "counts": map,
                "agree": agree,
            }))
        }
        Format::Csv => return Err(Failure::usage("count prints plain or json")),
    };
    Ok(Output { text, ok: agree })
}
