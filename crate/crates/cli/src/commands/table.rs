use serde_json::json;
use tableaux_core::formulas::{multinomial_paths, strict_count, strict_vertex_to_partition, syt_count};
use tableaux_core::graded_graphs::{count_paths_from, GraphKind};
use tableaux_core::{ExponentVector, Integer};

use super::{json_line, Output};
use crate::budget::Budget;
use crate::failure::Failure;
use crate::{graph, Format, TableArgs};

fn from_base(kind: &GraphKind, v: &ExponentVector) -> Result<Option<Integer>, Failure> {
    Ok(match kind {
        GraphKind::Pascal(_) => {
            let m: Vec<u64> = v.entries().iter().map(|&c| c as u64).collect();
            Some(multinomial_paths(&m))
        }
        GraphKind::RestrictedYoung(_) => Some(syt_count(v)?),
        GraphKind::StrictPartitions(_) => Some(strict_count(&strict_vertex_to_partition(v)?)),
        GraphKind::CustomBox { .. } => None,
    })
}

/// Oracle counts from the base vertex to every vertex of total degree at most
/// `--deg`; built-in graphs are checked against their closed form on the way.
pub fn table(a: &TableArgs, budget: &Budget) -> Result<Output, Failure> {
    let kind = graph::build(&a.graph, budget)?;
    let base = kind.base_vertex().ok_or_else(|| Failure::usage("the graph has no vertices"))?;
    budget.levels(a.deg - base.degree())?;
    let oracle = count_paths_from(&kind, &base, a.deg.max(base.degree()))?;
    let mut rows: Vec<(ExponentVector, Integer)> = Vec::new();
    let mut mismatch = None;
    for d in base.degree()..=a.deg {
        for v in kind.vertices_of_degree(d) {
            let count = oracle.get(&v).cloned().unwrap_or_default();
            if let Some(formula) = from_base(&kind, &v)? {
                if formula != count && mismatch.is_none() {
                    mismatch = Some(format!("{v}: oracle {count}, formula {formula}"));
                }
            }
            rows.push((v, count));
        }
    }
    let text = match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["vertex", "count"]).map_err(|e| Failure::Mismatch(e.to_string()))?;
            for (v, c) in &rows {
                w.write_record([v.to_string(), c.to_string()]).map_err(|e| Failure::Mismatch(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::Mismatch(e.to_string()))?).expect("csv is utf-8")
        }
        Format::Json => {
            rows.iter().map(|(v, c)| json_line(&json!({"vertex": v.to_string(), "count": c.to_string()}))).collect()
        }
        Format::Plain => rows.iter().map(|(v, c)| format!("{v}\t{c}\n")).collect(),
    };
    match mismatch {
        Some(m) => Ok(Output { text: format!("{text}mismatch: {m}\n"), ok: false }),
        None => Ok(Output::ok(text)),
    }
}
