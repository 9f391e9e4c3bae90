use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::formulas::{
    multinomial_paths, skew_syt_count, strict_count, strict_skew_count, strict_vertex_to_partition, syt_count,
    syt_count_hook, young_vertex_to_partition,
};
use crate::graded_graphs::{count_paths_dp, count_paths_from, GraphKind};
use crate::report::VerifyReport;

/// Which vertices [`cross_validate`] compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sample {
    /// Every vertex up to the bound, counted from the base vertex.
    All,
    /// Random pairs `v1 <= v2` of vertices up to the bound.
    Random { count: usize, seed: u64 },
}

fn closed_form_from_base(kind: &GraphKind, v: &ExponentVector) -> Result<Vec<BigInt>> {
    Ok(match kind {
        GraphKind::Pascal(_) => {
            let m: Vec<u64> = v.entries().iter().map(|&c| c as u64).collect();
            vec![multinomial_paths(&m)]
        }
        GraphKind::RestrictedYoung(_) => vec![syt_count(v)?, syt_count_hook(&young_vertex_to_partition(v)?)],
        GraphKind::StrictPartitions(_) => vec![strict_count(&strict_vertex_to_partition(v)?)],
        GraphKind::CustomBox { .. } => unreachable!("rejected by cross_validate"),
    })
}

fn closed_form_between(kind: &GraphKind, v1: &ExponentVector, v2: &ExponentVector) -> Result<BigInt> {
    match kind {
        GraphKind::Pascal(_) => {
            if !v2.majorates(v1) {
                return Ok(BigInt::from(0));
            }
            let m: Vec<u64> = (v2 - v1).entries().iter().map(|&c| c as u64).collect();
            Ok(multinomial_paths(&m))
        }
        GraphKind::RestrictedYoung(_) => skew_syt_count(v1, v2),
        GraphKind::StrictPartitions(k) => {
            strict_skew_count(&strict_vertex_to_partition(v1)?, &strict_vertex_to_partition(v2)?, *k)
        }
        GraphKind::CustomBox { .. } => unreachable!("rejected by cross_validate"),
    }
}

/// Compares the closed-form counts for `kind` with the path-counting oracle
/// on every vertex at most `levels` above the base vertex, or on random pairs
/// of such vertices. The first mismatch becomes the witness.
pub fn cross_validate(kind: &GraphKind, levels: i64, sample: Sample) -> Result<VerifyReport> {
    if matches!(kind, GraphKind::CustomBox { .. }) {
        return Err(Error::Precondition {
            witness: kind.to_string(),
            reason: "custom graphs have no closed form".into(),
        });
    }
    let base = kind.base_vertex().expect("built-in graphs have a base vertex");
    let top = base.degree() + levels;
    let vertices: Vec<ExponentVector> = (base.degree()..=top).flat_map(|d| kind.vertices_of_degree(d)).collect();
    let mut report = VerifyReport::new("cross_validate").param("graph", kind).param("levels", levels);
    let run = |report: &mut VerifyReport| -> Result<()> {
        match sample {
            Sample::All => {
                report.params.insert("sample".into(), "all".into());
                let oracle: BTreeMap<ExponentVector, BigInt> = count_paths_from(kind, &base, top)?;
                for v in &vertices {
                    let dp = oracle.get(v).cloned().unwrap_or_default();
                    for formula in closed_form_from_base(kind, v)? {
                        if formula != dp {
                            report.fail(format!("{v:?}: formula {formula}, oracle {dp}"));
                            return Ok(());
                        }
                    }
                }
                report.detail("checked", vertices.len());
            }
            Sample::Random { count, seed } => {
                report.params.insert("sample".into(), format!("random({count})"));
                report.seed = Some(seed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..count {
                    let Some(v2) = vertices.choose(&mut rng) else { break };
                    let below: Vec<&ExponentVector> = vertices.iter().filter(|v| v2.majorates(v)).collect();
                    let v1 = *below.choose(&mut rng).expect("v2 majorates itself");
                    let formula = closed_form_between(kind, v1, v2)?;
                    let dp = count_paths_dp(kind, v1, v2)?;
                    if formula != dp {
                        report.fail(format!("{v1:?} -> {v2:?}: formula {formula}, oracle {dp}"));
                        return Ok(());
                    }
                }
                report.detail("checked", count);
            }
        }
        Ok(())
    };
    let start = Instant::now();
    run(&mut report)?;
    report.millis = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}
