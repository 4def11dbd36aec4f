//! Finite bounded lattices, their point-free spectra, and the comparison
//! maps between them.
//!
//! The objects here are finite lattices presented by covers or by an order
//! predicate ([`FiniteLattice`]), maps between them carrying explicit
//! preservation certificates ([`LatticeMap`]), and finite topological spaces
//! ([`FiniteSpace`]). On top of those sit:
//!
//! - [`props`]: decision procedures (distributive, modular, semimodular,
//!   spatial, coherent) returning verdicts with least counterexamples;
//! - [`spectra`]: semipoints and points of a lattice — the two-valued maps
//!   preserving joins, respectively joins, finite meets and top — with the
//!   spaces they form and exhaustive oracles backing the fast paths;
//! - [`adjunctions`]: the free spatial frame on the join structure, the
//!   frame of opens of the point spectrum, the classification of the unit
//!   as an isomorphism exactly in the distributive case, and the
//!   correspondence between join-preserving maps into an open-set lattice
//!   and support data on a space;
//! - [`compare`]: Hochster duality for finite sober spaces, restriction of
//!   points along a designated bounded sublattice, the join-prime spectrum,
//!   and its homeomorphism with the dual point spectrum for distributive
//!   lattices;
//! - [`gallery`]: worked lattices with frozen expected values, replayable
//!   through [`gallery::verify_expected`].
//!
//! Operations whose cost is exponential in the lattice size take an explicit
//! `limit` and refuse larger inputs with [`LatticeError::SizeGuard`];
//! [`DEFAULT_SIZE_LIMIT`] is the conventional bound.

pub mod adjunctions;
pub mod bits;
pub mod compare;
pub mod error;
pub mod gallery;
pub mod lattice;
pub mod props;
pub mod space;
pub mod spectra;

pub use adjunctions::{Classification, FrameApproximation, SupportDatum};
pub use bits::Mask;
pub use compare::{
    BalmerComparison, MatsuiComparison, NcDualSpectrum, SublatticeDesignation, SublatticeTag,
};
pub use error::{BinOp, BoundKind, Flag, LatticeError, Result};
pub use gallery::{Expected, GalleryEntry};
pub use lattice::{Elt, FiniteLattice, LatticeMap, MapFlags, DEFAULT_SIZE_LIMIT};
pub use props::PropertyReport;
pub use space::{FiniteSpace, OpenSetLattice, SpaceMap};
pub use spectra::{PointKind, TwoPoint};
