//! Linear simplex codes of type alpha and beta over finite chain rings.
//!
//! The crate builds three families of chain rings (`Z_{p^s}`, Galois rings
//! and `F_q[u]/(u^s)`), constructs the simplex generator matrices over them,
//! enumerates the codes exhaustively and compares the resulting Hamming and
//! homogeneous weight distributions, Gray-image parameters and Griesmer
//! verdicts against their closed forms.
//!
//! ```
//! use std::sync::Arc;
//! use chainring::{CodeFamily, Limits, Ring, RingSpec, SimplexCode, WeightKind};
//! use chainring::weights::{empirical_distribution, predicted_distribution};
//!
//! let ring = Arc::new(Ring::new(RingSpec::zps(3, 2)).unwrap());
//! let code = SimplexCode::new(ring, CodeFamily::Beta, 2, &Limits::default()).unwrap();
//! let found = empirical_distribution(&code, WeightKind::Hamming, &Limits::default()).unwrap();
//! let expected = predicted_distribution(CodeFamily::Beta, WeightKind::Hamming, 3, 2, 2).unwrap();
//! assert_eq!(found, expected);
//! ```

pub mod error;
pub mod export;
pub mod field;
pub mod gh;
pub mod gray;
pub mod griesmer;
pub mod ring;
pub mod simplex;
pub mod structure;
pub mod valuation;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldVector, ResidueField};
pub use gray::{GrayMap, GrayMatrix};
pub use griesmer::GriesmerReport;
pub use ring::{Family, Ring, RingElement, RingSpec};
pub use simplex::{CodeFamily, Codeword, GeneratorMatrix, MatrixKind, SimplexCode};
pub use valuation::Valuation;
pub use weights::{WeightDistribution, WeightKind};

/// Size caps for rings, generator matrices and codeword enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: u64,
    pub max_columns: u64,
    pub max_codewords: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_elements: 1 << 16, max_columns: 1 << 24, max_codewords: 1 << 24 }
    }
}
