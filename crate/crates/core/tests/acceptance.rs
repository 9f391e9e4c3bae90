//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tableaux_core::formulas::{
    hook_claim_holds, partition_to_young_vertex, skew_syt_count, strict_count, strict_partition_to_vertex,
    strict_skew_count, syt_count, syt_count_hook, Partition, StrictPartition,
};
use tableaux_core::graded_graphs::{
    coefficient_path_count, construct_phi, count_paths_dp, verify_phi_conditions, GraphKind,
};
use tableaux_core::identity_suite::{cross_validate, sweep_m_vectors, Check, Sample};
use tableaux_core::laurent::verify_pfaffian_product;
use tableaux_core::report::VerifyReport;
use tableaux_core::ExponentVector;

const SKEW_SEED: u64 = 20_240_601;
const CLAIM_SEED: u64 = 9;
const SKEW_PAIRS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(report: VerifyReport) -> Result<VerifyReport, String> {
    if report.passed() {
        Ok(report)
    } else {
        Err(format!("{} {:?}: {}", report.identity, report.params, report.witness.unwrap_or_default()))
    }
}

fn run_checks(checks: &[Check]) -> Outcome {
    for c in checks {
        ensure(c.run().map_err(|e| format!("{c}: {e}"))?)?;
        let control = c.run_control().map_err(|e| format!("{c} control: {e}"))?;
        if control.passed() || control.witness.is_none() {
            return Err(format!("negative control of {c} was not caught"));
        }
    }
    Ok(format!("{} checks, {} controls caught", checks.len(), checks.len()))
}

fn pascal() -> Outcome {
    let r = ensure(cross_validate(&GraphKind::Pascal(3), 9, Sample::All).map_err(|e| e.to_string())?)?;
    Ok(format!("{} vertices", r.details["checked"]))
}

fn young() -> Outcome {
    let mut vertices = 0usize;
    for k in [2, 3, 4] {
        let kind = GraphKind::RestrictedYoung(k);
        let r = ensure(cross_validate(&kind, 12, Sample::All).map_err(|e| e.to_string())?)?;
        vertices += r.details["checked"].parse::<usize>().unwrap();
        let pairs = Sample::Random { count: SKEW_PAIRS, seed: SKEW_SEED + k as u64 };
        ensure(cross_validate(&kind, 12, pairs).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{vertices} vertices, {} skew pairs", 3 * SKEW_PAIRS))
}

fn strict() -> Outcome {
    let mut vertices = 0usize;
    for k in [2, 3, 4] {
        let kind = GraphKind::StrictPartitions(k);
        let r = ensure(cross_validate(&kind, 12, Sample::All).map_err(|e| e.to_string())?)?;
        vertices += r.details["checked"].parse::<usize>().unwrap();
        let pairs = Sample::Random { count: SKEW_PAIRS, seed: SKEW_SEED + k as u64 };
        ensure(cross_validate(&kind, 12, pairs).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{vertices} vertices, {} skew pairs", 3 * SKEW_PAIRS))
}

fn identities() -> Outcome {
    let mut checks = Vec::new();
    for k in 1..=3 {
        for n in 0..=5 {
            checks.push(Check::Vandermonde { k, n });
            checks.push(Check::Multinomial { k, n });
            checks.push(Check::HookIdentity { k, n });
            for m in sweep_m_vectors(k) {
                checks.push(Check::SkewIdentity { m, n });
            }
        }
    }
    run_checks(&checks)
}

fn laurent() -> Outcome {
    let mut checks = Vec::new();
    for k in [2, 3] {
        for n in 0..=4 {
            checks.push(Check::Polycomponent { k, n });
        }
        for sigma in ["", "1", "2", "2,1"] {
            let sigma: StrictPartition = sigma.parse().unwrap();
            let m = sigma.size();
            for n in m..=m + 3 {
                checks.push(Check::Ivanov { sigma: sigma.clone(), k, n });
            }
        }
    }
    run_checks(&checks)
}

fn pfaffian() -> Outcome {
    let mut signs = Vec::new();
    for k in [2, 4, 6] {
        let r = ensure(verify_pfaffian_product(k))?;
        let eps = r.details["epsilon"].clone();
        if eps != "1" && eps != "-1" {
            return Err(format!("k = {k}: epsilon {eps}"));
        }
        signs.push(format!("k={k}: {eps}"));
    }
    run_checks(&[Check::Pfaffian { k: 2 }, Check::Pfaffian { k: 4 }])?;
    Ok(signs.join(", "))
}

fn phi_constructor() -> Outcome {
    const D: i64 = 6;
    let mut compared = 0usize;
    for kind in [GraphKind::Pascal(3), GraphKind::RestrictedYoung(3), GraphKind::StrictPartitions(3)] {
        let base = kind.base_vertex().unwrap();
        let phi = construct_phi(&kind, &base, D).map_err(|e| format!("{kind}: {e}"))?;
        ensure(verify_phi_conditions(&kind, &base, &phi, D))?;
        for d in base.degree()..=D {
            for u in kind.vertices_of_degree(d) {
                let via_phi =
                    coefficient_path_count(&kind, &phi, &base, &u).map_err(|e| format!("{kind} {u:?}: {e}"))?;
                let dp = count_paths_dp(&kind, &base, &u).map_err(|e| e.to_string())?;
                if via_phi != dp {
                    return Err(format!("{kind} {u:?}: phi gives {via_phi}, oracle {dp}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} vertices"))
}

fn spot_values() -> Outcome {
    let young = |rows: &str, k: usize| partition_to_young_vertex(&rows.parse::<Partition>().unwrap(), k).unwrap();
    let staircase = |k: usize| ExponentVector::new((0..k as i64).collect());
    let mut cases: Vec<(&str, BigInt, Vec<BigInt>)> = Vec::new();
    for (rows, k, expected) in [("2,1", 2, 2), ("2,2", 2, 2), ("3,2,1", 3, 16)] {
        let v = young(rows, k);
        let dp = count_paths_dp(&GraphKind::RestrictedYoung(k), &staircase(k), &v).unwrap();
        let lambda: Partition = rows.parse().unwrap();
        cases.push((rows, expected.into(), vec![dp, syt_count(&v).unwrap(), syt_count_hook(&lambda)]));
    }
    for (rows, expected) in [("2,1", 1), ("3,1", 2)] {
        let sigma: StrictPartition = rows.parse().unwrap();
        let v = strict_partition_to_vertex(&sigma, 2).unwrap();
        let dp = count_paths_dp(&GraphKind::StrictPartitions(2), &ExponentVector::zero(2), &v).unwrap();
        cases.push((rows, expected.into(), vec![dp, strict_count(&sigma)]));
    }
    let (v1, v2) = (ExponentVector::from([0, 2]), ExponentVector::from([1, 3]));
    let dp = count_paths_dp(&GraphKind::RestrictedYoung(2), &v1, &v2).unwrap();
    cases.push(("(0,2)->(1,3)", 2.into(), vec![dp, skew_syt_count(&v1, &v2).unwrap()]));
    let (from, to): (StrictPartition, StrictPartition) = ("1".parse().unwrap(), "2,1".parse().unwrap());
    let dp = count_paths_dp(
        &GraphKind::StrictPartitions(2),
        &strict_partition_to_vertex(&from, 2).unwrap(),
        &strict_partition_to_vertex(&to, 2).unwrap(),
    )
    .unwrap();
    cases.push(("(1)->(2,1)", 1.into(), vec![dp, strict_skew_count(&from, &to, 2).unwrap()]));
    for (name, expected, got) in &cases {
        if got.iter().any(|g| g != expected) {
            return Err(format!("{name}: expected {expected}, got {got:?}"));
        }
    }
    Ok(format!("{} values", cases.len()))
}

fn random_partition(rng: &mut ChaCha8Rng) -> Partition {
    loop {
        let rows = rng.gen_range(1..=6);
        let mut parts: Vec<u64> = (0..rows).map(|_| rng.gen_range(1..=15)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().sum::<u64>() <= 30 {
            return Partition::new(parts).unwrap();
        }
    }
}

fn claim() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(CLAIM_SEED);
    for _ in 0..50 {
        let lambda = random_partition(&mut rng);
        if !hook_claim_holds(&lambda) {
            return Err(format!("claim fails for {lambda}"));
        }
    }
    Ok(format!("50 partitions, seed {CLAIM_SEED}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("pascal: multinomial = oracle, k=3, degree <= 9", Duration::from_secs(5), pascal),
        ("young: hook formulas = oracle, k=2..4, 12 cells, skew pairs", Duration::from_secs(30), young),
        ("strict: closed forms = oracle, k=2..4, size <= 12, skew pairs", Duration::from_secs(60), strict),
        ("identity suite: k=1..3, n<=5, three m per k, controls", Duration::from_secs(10), identities),
        ("laurent: polynomial components and strict expansions", Duration::from_secs(60), laurent),
        ("pfaffian product, k=2,4,6", Duration::from_secs(10), pfaffian),
        ("phi constructor, three graphs, D=6", Duration::from_secs(30), phi_constructor),
        ("spot values", Duration::from_secs(5), spot_values),
        ("hook product claim, 50 random partitions", Duration::from_secs(5), claim),
    ];
    let mut failed = 0;
    for (idx, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, note) = match outcome {
            Ok(_) if elapsed > *bound => ("FAIL", format!("over the {} s bound", bound.as_secs())),
            Ok(note) => ("PASS", note),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {status} {name} [{} ms / {} s] {note}", idx + 1, elapsed.as_millis(), bound.as_secs());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
