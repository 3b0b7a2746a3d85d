use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps for the exponential searches. Exceeding any of them is reported as
/// [`Error::LimitExceeded`]; no search ever degrades to an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_n: usize,
    pub node_budget: u64,
    pub time_budget_ms: u64,
}

const DEFAULT_NODES: u64 = 200_000_000;
const DEFAULT_TIME_MS: u64 = 120_000;

impl SearchLimits {
    pub const fn new(max_n: usize, node_budget: u64, time_budget_ms: u64) -> Self {
        Self {
            max_n,
            node_budget,
            time_budget_ms,
        }
    }

    pub const fn with_max_n(max_n: usize) -> Self {
        Self::new(max_n, DEFAULT_NODES, DEFAULT_TIME_MS)
    }

    pub const fn bandwidth() -> Self {
        Self::with_max_n(12)
    }

    pub const fn ccw() -> Self {
        Self::with_max_n(10)
    }

    pub const fn orientation() -> Self {
        Self::with_max_n(16)
    }

    pub const fn udim() -> Self {
        Self::with_max_n(7)
    }

    /// Induced-star search: the cost is exponential in the maximum degree,
    /// which is capped at 128 independently of `max_n`.
    pub const fn star() -> Self {
        Self::with_max_n(usize::MAX)
    }

    pub fn check_n(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_n {
            return Err(Error::LimitExceeded(format!(
                "{what}: {n} vertices exceeds max_n = {}",
                self.max_n
            )));
        }
        Ok(())
    }

    pub(crate) fn budget(&self, what: &'static str) -> Budget {
        Budget {
            what,
            nodes: 0,
            node_cap: self.node_budget,
            deadline: Instant::now() + Duration::from_millis(self.time_budget_ms),
        }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self::ccw()
    }
}

/// Running node/time counter for one search.
pub(crate) struct Budget {
    what: &'static str,
    nodes: u64,
    node_cap: u64,
    deadline: Instant,
}

impl Budget {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::LimitExceeded(format!(
                "{}: node budget of {} exhausted",
                self.what, self.node_cap
            )));
        }
        if self.nodes & 0xfff == 0 && Instant::now() > self.deadline {
            return Err(Error::LimitExceeded(format!("{}: time budget exhausted", self.what)));
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_cap_trips() {
        let limits = SearchLimits::new(10, 3, 1000);
        let mut b = limits.budget("test");
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(matches!(b.tick(), Err(Error::LimitExceeded(_))));
        assert_eq!(b.nodes(), 4);
    }

    #[test]
    fn max_n_check() {
        assert!(SearchLimits::ccw().check_n(10, "ccw").is_ok());
        assert!(SearchLimits::ccw().check_n(11, "ccw").is_err());
    }
}
