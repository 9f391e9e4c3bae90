use tableaux_core::formulas::StrictPartition;
use tableaux_core::graded_graphs::GraphKind;
use tableaux_core::identity_suite::{cross_validate, default_sweep, run_all, Check, Sample};
use tableaux_core::report::VerifyReport;

use super::Output;
use crate::budget::Budget;
use crate::failure::Failure;
use crate::{GraphName, Identity, VerifyArgs};

fn need<T: Copy>(value: Option<T>, flag: &str, identity: Identity) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("{identity:?} needs --{flag}").to_lowercase()))
}

fn parse_m(raw: &str) -> Result<Vec<u64>, Failure> {
    raw.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Failure::usage(format!("bad entry {p:?} in --m"))))
        .collect()
}

fn single(a: &VerifyArgs) -> Result<Check, Failure> {
    let id = a.identity;
    Ok(match id {
        Identity::Vandermonde => Check::Vandermonde { k: need(a.k, "k", id)?, n: need(a.n, "n", id)? },
        Identity::Multinomial => Check::Multinomial { k: need(a.k, "k", id)?, n: need(a.n, "n", id)? },
        Identity::Hook => Check::HookIdentity { k: need(a.k, "k", id)?, n: need(a.n, "n", id)? },
        Identity::Skew => {
            let m = parse_m(a.m.as_deref().ok_or_else(|| Failure::usage("skew needs --m"))?)?;
            if let Some(k) = a.k {
                if k != m.len() {
                    return Err(Failure::usage(format!("--m has {} entries but --k is {k}", m.len())));
                }
            }
            Check::SkewIdentity { m, n: need(a.n, "n", id)? }
        }
        Identity::Polycomponent => Check::Polycomponent { k: need(a.k, "k", id)?, n: need(a.n, "n", id)? },
        Identity::Ivanov => {
            let sigma: StrictPartition =
                a.sigma.as_deref().ok_or_else(|| Failure::usage("ivanov needs --sigma"))?.parse()?;
            Check::Ivanov { sigma, k: need(a.k, "k", id)?, n: need(a.n, "n", id)? }
        }
        Identity::Pfaffian => Check::Pfaffian { k: need(a.k, "k", id)? },
        Identity::Cross | Identity::All => unreachable!("handled by the caller"),
    })
}

fn matches(identity: Identity, c: &Check) -> bool {
    matches!(
        (identity, c),
        (Identity::All, _)
            | (Identity::Vandermonde, Check::Vandermonde { .. })
            | (Identity::Multinomial, Check::Multinomial { .. })
            | (Identity::Hook, Check::HookIdentity { .. })
            | (Identity::Skew, Check::SkewIdentity { .. })
            | (Identity::Polycomponent, Check::Polycomponent { .. })
            | (Identity::Ivanov, Check::Ivanov { .. })
            | (Identity::Pfaffian, Check::Pfaffian { .. })
    )
}

fn within_budget(c: &Check, budget: &Budget) -> Result<(), Failure> {
    match c {
        Check::Vandermonde { k, n }
        | Check::Multinomial { k, n }
        | Check::HookIdentity { k, n }
        | Check::Polycomponent { k, n } => {
            budget.k(*k)?;
            budget.n(*n)
        }
        Check::SkewIdentity { m, n } => {
            budget.k(m.len())?;
            budget.n(*n)?;
            budget.levels(m.iter().copied().max().unwrap_or(0) as i64)
        }
        Check::Ivanov { sigma, k, n } => {
            budget.k(*k)?;
            budget.n(*n)?;
            budget.levels(sigma.size() as i64)
        }
        Check::Pfaffian { k } => budget.pfaffian_k(*k),
    }
}

fn graph_kind(name: GraphName, k: usize) -> Result<GraphKind, Failure> {
    Ok(match name {
        GraphName::Pascal => GraphKind::Pascal(k),
        GraphName::Young => GraphKind::RestrictedYoung(k),
        GraphName::Strict => GraphKind::StrictPartitions(k),
        GraphName::Custom => return Err(Failure::usage("custom graphs have no closed form to cross-validate")),
    })
}

fn cross_reports(a: &VerifyArgs, budget: &Budget) -> Result<Vec<VerifyReport>, Failure> {
    let sample = match a.samples {
        Some(count) => {
            budget.samples(count)?;
            Sample::Random { count, seed: a.seed }
        }
        None => Sample::All,
    };
    let targets: Vec<(GraphKind, i64)> = if a.sweep {
        [GraphName::Pascal, GraphName::Young, GraphName::Strict]
            .into_iter()
            .flat_map(|g| (2..=3).map(move |k| (g, k)))
            .map(|(g, k)| graph_kind(g, k).map(|kind| (kind, 8)))
            .collect::<Result<_, _>>()?
    } else {
        let id = Identity::Cross;
        vec![(graph_kind(need(a.graph, "graph", id)?, need(a.k, "k", id)?)?, need(a.levels, "levels", id)?)]
    };
    let mut out = Vec::new();
    for (kind, levels) in targets {
        budget.k(kind.k())?;
        budget.levels(levels)?;
        out.push(cross_validate(&kind, levels, sample)?);
    }
    Ok(out)
}

pub fn verify(a: &VerifyArgs, budget: &Budget) -> Result<Output, Failure> {
    if a.identity == Identity::All && !a.sweep {
        return Err(Failure::usage("`all` needs --sweep"));
    }
    let mut reports = Vec::new();
    if a.identity != Identity::Cross {
        let checks: Vec<Check> = if a.sweep {
            default_sweep().into_iter().filter(|c| matches(a.identity, c)).collect()
        } else {
            vec![single(a)?]
        };
        for c in &checks {
            within_budget(c, budget)?;
        }
        for r in run_all(&checks, a.threads) {
            reports.push(r?);
        }
    }
    if matches!(a.identity, Identity::Cross | Identity::All) {
        reports.extend(cross_reports(a, budget)?);
    }
    let ok = reports.iter().all(VerifyReport::passed);
    let text = reports
        .into_iter()
        .map(|r| if a.no_timing { r.without_timing() } else { r })
        .map(|r| format!("{}\n", r.to_json_line()))
        .collect();
    Ok(Output { text, ok })
}
