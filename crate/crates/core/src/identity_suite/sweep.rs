use std::fmt;
use std::thread;

use super::{polynomial, series};
use crate::error::Result;
use crate::formulas::StrictPartition;
use crate::laurent::pfaffian_product;
use crate::report::{timed, VerifyReport};

/// One identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Vandermonde { k: usize, n: u64 },
    Multinomial { k: usize, n: u64 },
    HookIdentity { k: usize, n: u64 },
    SkewIdentity { m: Vec<u64>, n: u64 },
    Polycomponent { k: usize, n: u64 },
    Ivanov { sigma: StrictPartition, k: usize, n: u64 },
    Pfaffian { k: usize },
}

impl Check {
    pub fn run(&self) -> Result<VerifyReport> {
        self.execute(false)
    }

    /// The same check with its right-hand side perturbed; a sound checker
    /// fails this with a witness.
    pub fn run_control(&self) -> Result<VerifyReport> {
        self.execute(true)
    }

    fn execute(&self, perturb: bool) -> Result<VerifyReport> {
        match self {
            Check::Vandermonde { k, n } => polynomial::vandermonde(*k, *n, perturb),
            Check::Multinomial { k, n } => polynomial::multinomial(*k, *n, perturb),
            Check::HookIdentity { k, n } => polynomial::hook_identity(*k, *n, perturb),
            Check::SkewIdentity { m, n } => polynomial::skew_identity(m, *n, perturb),
            Check::Polycomponent { k, n } => series::polycomponent(*k, *n, perturb),
            Check::Ivanov { sigma, k, n } => series::ivanov_identity(sigma, *k, *n, perturb),
            Check::Pfaffian { k } => Ok(timed(|| pfaffian_product(*k, perturb))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Vandermonde { k, n } => write!(f, "vandermonde(k={k}, n={n})"),
            Check::Multinomial { k, n } => write!(f, "multinomial(k={k}, n={n})"),
            Check::HookIdentity { k, n } => write!(f, "hook_identity(k={k}, n={n})"),
            Check::SkewIdentity { m, n } => write!(f, "skew_identity(m={}, n={n})", super::join(m)),
            Check::Polycomponent { k, n } => write!(f, "polycomponent(k={k}, n={n})"),
            Check::Ivanov { sigma, k, n } => write!(f, "ivanov_identity(sigma={sigma}, k={k}, n={n})"),
            Check::Pfaffian { k } => write!(f, "pfaffian_product(k={k})"),
        }
    }
}

/// Three increasing `m` per `k`, the staircase first.
pub fn sweep_m_vectors(k: usize) -> Vec<Vec<u64>> {
    match k {
        1 => vec![vec![0], vec![1], vec![3]],
        2 => vec![vec![0, 1], vec![0, 2], vec![1, 3]],
        3 => vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 4]],
        _ => {
            let stair: Vec<u64> = (0..k as u64).collect();
            let mut gap = stair.clone();
            gap[k - 1] += 1;
            let shifted = stair.iter().map(|m| m + 1).collect();
            vec![stair, gap, shifted]
        }
    }
}

/// Two strict partitions per `k`.
pub fn sweep_sigmas(k: usize) -> Vec<StrictPartition> {
    let rows: &[&[u64]] = match k {
        1 => &[&[], &[2]],
        2 => &[&[1], &[2, 1]],
        _ => &[&[2], &[2, 1]],
    };
    rows.iter().map(|r| StrictPartition::new(r.to_vec()).expect("strict rows")).collect()
}

/// The default parameter sweep: `k` in 1..=3 and `n` in 0..=5 for the
/// polynomial identities with three `m` per `k`; `n` up to 4 for the
/// polynomial component; two `sigma` per `k` with `n` up to `|sigma| + 2`;
/// and the Pfaffian for `k` in {2, 4, 6}.
pub fn default_sweep() -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=3 {
        for n in 0..=5 {
            out.push(Check::Vandermonde { k, n });
            out.push(Check::Multinomial { k, n });
            out.push(Check::HookIdentity { k, n });
            for m in sweep_m_vectors(k) {
                out.push(Check::SkewIdentity { m, n });
            }
        }
        for n in 0..=4 {
            out.push(Check::Polycomponent { k, n });
        }
        for sigma in sweep_sigmas(k) {
            let m = sigma.size();
            for n in m..=m + 2 {
                out.push(Check::Ivanov { sigma: sigma.clone(), k, n });
            }
        }
    }
    for k in [2, 4, 6] {
        out.push(Check::Pfaffian { k });
    }
    out
}

/// Runs the checks on up to `threads` workers; results come back in input
/// order.
pub fn run_all(checks: &[Check], threads: usize) -> Vec<Result<VerifyReport>> {
    let threads = threads.clamp(1, checks.len().max(1));
    let mut slots: Vec<Option<Result<VerifyReport>>> = (0..checks.len()).map(|_| None).collect();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    checks.iter().enumerate().skip(t).step_by(threads).map(|(i, c)| (i, c.run())).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("check worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every check ran")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_shape() {
        let sweep = default_sweep();
        assert!(sweep.contains(&Check::Vandermonde { k: 1, n: 0 }));
        assert!(sweep.contains(&Check::SkewIdentity { m: vec![0, 1, 3], n: 5 }));
        assert_eq!(sweep.iter().filter(|c| matches!(c, Check::SkewIdentity { .. })).count(), 3 * 6 * 3);
        for k in 1..=5 {
            let ms = sweep_m_vectors(k);
            assert_eq!(ms.len(), 3);
            assert!(ms.iter().all(|m| m.len() == k && m.windows(2).all(|w| w[0] < w[1])));
        }
    }

    #[test]
    fn parallel_order_is_input_order() {
        let checks = vec![
            Check::Multinomial { k: 2, n: 1 },
            Check::Vandermonde { k: 1, n: 2 },
            Check::HookIdentity { k: 2, n: 0 },
            Check::Pfaffian { k: 2 },
        ];
        let reports = run_all(&checks, 3);
        let names: Vec<String> = reports.into_iter().map(|r| r.unwrap().identity).collect();
        assert_eq!(names, ["multinomial", "vandermonde", "hook_identity", "pfaffian_product"]);
    }

    #[test]
    fn controls_fail() {
        let checks = [
            Check::Vandermonde { k: 1, n: 0 },
            Check::SkewIdentity { m: vec![3], n: 0 },
            Check::Polycomponent { k: 1, n: 0 },
            Check::Ivanov { sigma: StrictPartition::empty(), k: 1, n: 0 },
            Check::Pfaffian { k: 2 },
        ];
        for c in checks {
            let r = c.run_control().unwrap();
            assert!(!r.passed() && r.witness.is_some(), "{c}");
        }
    }
}
