//! Exact principal minors of Fourier matrices over the cyclotomic integers.
//!
//! * [`cyclotomic`]: the ring `Z[ω]`, `ω = e^{2πi/N}`, in the power basis
//!   reduced modulo `Φ_N`.
//! * [`minors`]: index sets, exact determinants of Fourier submatrices and
//!   the closed forms for small minors.
//! * [`theorems`]: checks for square-free `N`, singular witnesses for the
//!   remaining `N`, and exhaustive scans.
//! * [`search`]: column permutations whose principal minors all survive.

mod bits;
pub mod cyclotomic;
pub mod error;
pub mod minors;
pub mod search;
pub mod theorems;

pub use cyclotomic::{CycElem, CycRing};
pub use error::{Error, Result};
pub use minors::{CheckMode, IndexSet};
