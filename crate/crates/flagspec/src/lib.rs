//! Exact spectral invariants of Spin^c Dirac operators on generalized flag
//! varieties.
//!
//! A generalized flag variety is determined by a finite simple Lie type and a
//! non-empty set of *painted* nodes on its Dynkin diagram. This crate builds
//! the underlying root-system combinatorics ([`root_system`]), the Weyl group
//! machinery and Borel–Weil–Bott classification ([`weyl`]), the geometry of
//! the flag variety itself (Picard lattice, Kähler cone, scalar curvature,
//! slopes; [`flag`]), and the spectral data of the associated Spin^c Dirac
//! operators such as Weitzenböck eigenvalue multisets and harmonic spinor
//! counts ([`spectral`]).
//!
//! # Exact arithmetic
//!
//! Every quantity is computed over the rationals (with an explicit π-power
//! bookkept by [`PiScalar`]); nothing is ever rounded. Multiplicities and
//! dimensions are arbitrary-precision integers, and internal consistency
//! checks such as the integrality of dimension products are asserted rather
//! than assumed.
//!
//! # Conventions
//!
//! Nodes of the Dynkin diagram are numbered 1..=rank in Bourbaki order.
//! Weights are row vectors of rationals in the fundamental-weight basis;
//! roots are integer vectors in the simple-root basis. The invariant form is
//! the minimal Weyl-invariant one, scaled so long roots have squared length
//! 2; all spectral outputs are ratios of pairings and therefore do not
//! depend on that normalization.

pub mod error;
pub mod flag;
pub mod pi;
pub mod root_system;
pub mod spectral;
pub mod weyl;

pub use error::{Error, Result};
pub use flag::{FlagVariety, KahlerClass, LineBundleClass};
pub use pi::PiScalar;
pub use root_system::{Family, LieType, Root, RootSystem, Weight};
pub use spectral::{
    HarmonicOutcome, HarmonicReport, ImaginaryRat, Spectrum, SpectrumData, DEFAULT_MAX_DISTINCT,
};
pub use weyl::{CohomologyReport, DominantDescent, WeylWord};

/// Arbitrary-precision signed integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision unsigned integer (multiplicities, dimensions).
pub type Nat = num_bigint::BigUint;
/// Arbitrary-precision rational number; all coordinates and pairings.
pub type Rat = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
