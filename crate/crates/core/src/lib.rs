//! Local Besov/Hölder seminorms of lattice-sampled random fields, computed
//! through compactly supported wavelet bases, together with cluster
//! Monte-Carlo machinery for the critical two-dimensional Ising model.
//!
//! The crate is organised around five subsystems:
//!
//! * [`wavelet`] — Daubechies filters, cascade tabulation, tensor-product
//!   2D wavelets and their pairings with piecewise-constant fields;
//! * [`besov`] — coefficient pyramids over adapted regions, local Besov
//!   seminorms, Hölder dictionary norms, embeddings and truncated
//!   reconstructions;
//! * [`ising`] — FK random-cluster / Ising sampling via the Edwards–Sokal
//!   coupling (Swendsen–Wang and Wolff dynamics) plus exact enumeration
//!   oracles on tiny graphs;
//! * [`tightness`] — magnetization fields, wavelet-moment scaling reports,
//!   exponent fits and the tightness verdict;
//! * [`cli`] — reproducible experiment runner (config parsing, manifests,
//!   deterministic outputs).

pub mod besov;
pub mod cli;
pub mod error;
pub mod field;
pub mod ising;
pub mod rng;
pub mod stats;
pub mod tightness;
pub mod wavelet;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
