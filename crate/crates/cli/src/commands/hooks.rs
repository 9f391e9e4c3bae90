use serde_json::json;
use tableaux_core::formulas::{hook_lengths, hook_product, syt_count_hook, Partition};

use super::{json_line, Output};
use crate::budget::Budget;
use crate::failure::Failure;
use crate::{Format, HooksArgs};

pub fn hooks(a: &HooksArgs, budget: &Budget) -> Result<Output, Failure> {
    let lambda: Partition = a.partition.parse()?;
    budget.cells(lambda.size())?;
    let hooks = hook_lengths(&lambda);
    let product = hook_product(&lambda);
    let count = syt_count_hook(&lambda);
    let text = match a.format {
        Format::Plain => {
            let mut out = String::new();
            for row in &hooks.rows {
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out.push_str(&format!("product {product}\ncount {count}\n"));
            out
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = hooks.rows.iter().map(|r| r.iter().map(u64::to_string).collect()).collect();
            json_line(&json!({
                "partition": lambda.to_string(),
                "hooks": rows,
                "product": product.to_string(),
                "count": count.to_string(),
            }))
        }
        Format::Csv => return Err(Failure::usage("hooks prints plain or json")),
    };
    Ok(Output::ok(text))
}
