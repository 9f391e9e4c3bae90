use tableaux_core::formulas::{partition_to_young_vertex, strict_partition_to_vertex, Partition, StrictPartition};
use tableaux_core::graded_graphs::GraphKind;
use tableaux_core::ExponentVector;

use crate::budget::Budget;
use crate::failure::Failure;
use crate::{GraphArgs, GraphName};

pub fn build(args: &GraphArgs, budget: &Budget) -> Result<GraphKind, Failure> {
    budget.k(args.k)?;
    if args.k == 0 {
        return Err(Failure::usage("k must be at least 1"));
    }
    if args.vertices.is_some() && args.graph != GraphName::Custom {
        return Err(Failure::usage("--vertices only applies to --graph custom"));
    }
    Ok(match args.graph {
        GraphName::Pascal => GraphKind::Pascal(args.k),
        GraphName::Young => GraphKind::RestrictedYoung(args.k),
        GraphName::Strict => GraphKind::StrictPartitions(args.k),
        GraphName::Custom => {
            let raw = args.vertices.as_deref().ok_or_else(|| Failure::usage("--graph custom needs --vertices"))?;
            let vertices =
                raw.split(';').filter(|s| !s.trim().is_empty()).map(vertex).collect::<Result<Vec<_>, _>>()?;
            if vertices.is_empty() {
                return Err(Failure::usage("--vertices lists no vertex"));
            }
            GraphKind::custom(args.k, vertices)?
        }
    })
}

pub fn vertex(raw: &str) -> Result<ExponentVector, Failure> {
    Ok(raw.parse::<ExponentVector>()?)
}

/// A vertex given either directly or as a diagram.
pub fn resolve(
    kind: &GraphKind,
    direct: Option<&str>,
    partition: Option<&str>,
) -> Result<Option<ExponentVector>, Failure> {
    let v = match (direct, partition) {
        (Some(raw), _) => vertex(raw)?,
        (None, Some(raw)) => match kind {
            GraphKind::RestrictedYoung(k) => partition_to_young_vertex(&raw.parse::<Partition>()?, *k)?,
            GraphKind::StrictPartitions(k) => strict_partition_to_vertex(&raw.parse::<StrictPartition>()?, *k)?,
            _ => return Err(Failure::usage(format!("{} vertices cannot be given as partitions", kind.name()))),
        },
        (None, None) => return Ok(None),
    };
    v.check_dim(kind.k())?;
    if !kind.contains(&v)? {
        return Err(Failure::usage(format!("{v} is not a vertex of {kind}")));
    }
    Ok(Some(v))
}
