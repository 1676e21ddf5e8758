//! Size limits for the exhaustive enumerators and the Fock-space linear algebra.
//!
//! The defaults keep every operation at desk scale. Setting the environment
//! variable `EXC_BUDGET` to a positive integer multiplies every limit by that
//! factor.

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "EXC_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on the number of candidate states an enumerator may visit.
    pub enumeration_states: u128,
    /// Upper bound on the dimension of a Fock space `H_{m,d}`.
    pub fock_dimension: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration_states: 1 << 30,
            fock_dimension: 100_000,
        }
    }
}

impl Budget {
    pub fn scaled(factor: u128) -> Self {
        let base = Budget::default();
        Budget {
            enumeration_states: base.enumeration_states.saturating_mul(factor),
            fock_dimension: base.fock_dimension.saturating_mul(factor),
        }
    }

    /// Reads `EXC_BUDGET`; unset means the default budget.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Err(_) => Ok(Budget::default()),
            Ok(raw) => match raw.trim().parse::<u128>() {
                Ok(factor) if factor > 0 => Ok(Budget::scaled(factor)),
                _ => Err(Error::InvalidParameters(format!(
                    "{BUDGET_ENV} must be a positive integer, got {raw:?}"
                ))),
            },
        }
    }

    pub(crate) fn check_states(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.enumeration_states {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                limit: self.enumeration_states,
            });
        }
        Ok(())
    }

    pub(crate) fn check_fock(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.fock_dimension {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                limit: self.fock_dimension,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_multiplies_limits() {
        let b = Budget::scaled(3);
        assert_eq!(b.fock_dimension, 300_000);
        assert!(b.check_fock("x", 250_000).is_ok());
        assert!(matches!(
            Budget::default().check_fock("x", 250_000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
