//! Size guards. Setting `TANABE_GUARD_OVERRIDE` to anything but `0` lifts them.

use crate::error::{Error, Result};

pub const OVERRIDE_VAR: &str = "TANABE_GUARD_OVERRIDE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ambient diagram size `k` for exhaustive enumeration.
    pub max_ambient: usize,
    /// Largest block count whose coarsenings may be listed.
    pub max_coarsen_blocks: usize,
    /// Largest tensor space dimension `n^k`.
    pub max_tensor_dim: usize,
    /// Largest number of unknowns in a centralizer solve.
    pub max_unknowns: usize,
    pub max_cyclotomic_order: u32,
    pub max_group_order: usize,
    /// Bratteli towers are normally stopped at `floor(n/2)`.
    pub tower_stable_only: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ambient: 4,
            max_coarsen_blocks: 12,
            max_tensor_dim: 4096,
            max_unknowns: 70_000,
            max_cyclotomic_order: 64,
            max_group_order: 200_000,
            tower_stable_only: true,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_ambient: usize::MAX,
            max_coarsen_blocks: usize::MAX,
            max_tensor_dim: usize::MAX,
            max_unknowns: usize::MAX,
            max_cyclotomic_order: u32::MAX,
            max_group_order: usize::MAX,
            tower_stable_only: false,
        }
    }

    pub fn from_env() -> Self {
        match std::env::var(OVERRIDE_VAR) {
            Ok(v) if !v.is_empty() && v != "0" => Limits::unbounded(),
            _ => Limits::default(),
        }
    }

    pub(crate) fn check(what: &str, value: usize, max: usize) -> Result<()> {
        if value > max {
            Err(Error::SizeLimit(format!("{what} = {value} exceeds {max}")))
        } else {
            Ok(())
        }
    }
}
