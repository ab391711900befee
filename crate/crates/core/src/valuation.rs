use std::fmt;

use serde::{Deserialize, Serialize};

/// The valuation set `{0, .., s-1} ∪ {∞}`.
///
/// `Finite` is declared first so the derived order puts every finite value
/// below `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u32),
    Infinity,
}

impl Valuation {
    /// Sum in the valuation monoid of a ring with nilpotency index `s`:
    /// anything reaching `s` collapses to `Infinity`.
    pub fn saturating_add(self, other: Valuation, s: u32) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) if a + b < s => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}
