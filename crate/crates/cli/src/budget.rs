use crate::failure::Failure;

pub const OVERRIDE_VAR: &str = "TABLEAUX_BUDGET_OVERRIDE";

/// Size limits checked before any work starts. The defaults cover the
/// acceptance ranges; `TABLEAUX_BUDGET_OVERRIDE=<factor>` scales every limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_k: usize,
    pub max_pfaffian_k: usize,
    /// Levels above the starting vertex, for counts, tables and phi.
    pub max_levels: i64,
    pub max_n: u64,
    pub max_cells: u64,
    pub max_samples: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_k: 4, max_pfaffian_k: 6, max_levels: 12, max_n: 6, max_cells: 100, max_samples: 1000 }
    }
}

impl Budget {
    pub fn from_env() -> Result<Self, Failure> {
        match std::env::var(OVERRIDE_VAR) {
            Ok(raw) => {
                let factor: f64 =
                    raw.trim().parse().ok().filter(|f: &f64| f.is_finite() && *f > 0.0).ok_or_else(|| {
                        Failure::usage(format!("{OVERRIDE_VAR} must be a positive number, got {raw:?}"))
                    })?;
                Ok(Budget::default().scaled(factor))
            }
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn scaled(self, factor: f64) -> Self {
        let s = |x: f64| (x * factor).floor();
        Budget {
            max_k: s(self.max_k as f64) as usize,
            max_pfaffian_k: s(self.max_pfaffian_k as f64) as usize,
            max_levels: s(self.max_levels as f64) as i64,
            max_n: s(self.max_n as f64) as u64,
            max_cells: s(self.max_cells as f64) as u64,
            max_samples: s(self.max_samples as f64) as usize,
        }
    }

    fn over(what: &str, got: impl std::fmt::Display, limit: impl std::fmt::Display) -> Failure {
        Failure::usage(format!("over budget: {what} = {got} exceeds {limit} (raise with {OVERRIDE_VAR})"))
    }

    pub fn k(&self, k: usize) -> Result<(), Failure> {
        if k > self.max_k {
            return Err(Self::over("k", k, self.max_k));
        }
        Ok(())
    }

    pub fn pfaffian_k(&self, k: usize) -> Result<(), Failure> {
        if k > self.max_pfaffian_k {
            return Err(Self::over("k", k, self.max_pfaffian_k));
        }
        Ok(())
    }

    pub fn levels(&self, levels: i64) -> Result<(), Failure> {
        if levels > self.max_levels {
            return Err(Self::over("levels", levels, self.max_levels));
        }
        Ok(())
    }

    pub fn n(&self, n: u64) -> Result<(), Failure> {
        if n > self.max_n {
            return Err(Self::over("n", n, self.max_n));
        }
        Ok(())
    }

    pub fn cells(&self, cells: u64) -> Result<(), Failure> {
        if cells > self.max_cells {
            return Err(Self::over("cells", cells, self.max_cells));
        }
        Ok(())
    }

    pub fn samples(&self, count: usize) -> Result<(), Failure> {
        if count > self.max_samples {
            return Err(Self::over("samples", count, self.max_samples));
        }
        Ok(())
    }
}
