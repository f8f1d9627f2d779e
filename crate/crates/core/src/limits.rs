use crate::error::{Error, Result};

/// Environment variable that caps the number of cells of any single table.
pub const MAX_CELLS_ENV: &str = "TWISTLAB_MAX_CELLS";

/// Size bounds for the exhaustive searches.
///
/// Exceeding a bound is always reported as [`Error::SizeBound`]; nothing is
/// silently truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest algebra whose subuniverses are enumerated.
    pub max_sub: usize,
    /// Largest algebra whose congruence lattice is computed.
    pub max_con: usize,
    /// Largest base algebra whose twist-product admissibles are enumerated.
    pub max_twist_base: usize,
    /// Largest number of cells (`size * size`) of a constructed table.
    pub max_cells: usize,
    /// Largest number of down-sets in a subvariety lattice.
    pub max_ideals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sub: 30,
            max_con: 40,
            max_twist_base: 12,
            max_cells: usize::MAX,
            max_ideals: 1 << 20,
        }
    }
}

impl Limits {
    /// Defaults, with `max_cells` taken from `TWISTLAB_MAX_CELLS` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_CELLS_ENV) {
            let cells: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::pre(format!("{MAX_CELLS_ENV} must be a positive integer, got {raw:?}")))?;
            if cells == 0 {
                return Err(Error::pre(format!("{MAX_CELLS_ENV} must be positive")));
            }
            limits.max_cells = cells;
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::SizeBound { what, actual, limit })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_cells(&self, size: usize) -> Result<()> {
        Self::check("table cells", size.saturating_mul(size), self.max_cells)
    }
}
