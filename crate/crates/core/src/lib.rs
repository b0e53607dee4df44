//! Genus-0 BPS invariants of the Calabi-Yau resolutions `G-Hilb(ℂ³)` of
//! ADE polyhedral singularities, computed two independent ways:
//!
//! * **folding** ([`folding`]): project the positive roots of the ADE root
//!   system onto the surviving curve classes and count fibers; the invariant
//!   of a class is half its fiber size.
//! * **localization** ([`localize`]): evaluate `ch χ(O_C, O_C)` by
//!   Atiyah-Bott residues over the `ℂ*`-fixed loci of the surface resolution
//!   and the threefold, split it into Ext groups, and take the Euler-class
//!   ratio `e(Ext²)/e(Ext¹)`.
//!
//! All arithmetic is exact ([`symring`]). The built-in case is the icosahedral
//! group `A5 ⊂ SO(3)`, whose double cover gives the `E8` diagram.
//!
//! ```
//! use ade_bps::folding::{CurveClass, Marking};
//! use ade_bps::localize::{GeometryDescriptor, Localizer};
//!
//! let marking = Marking::e8_a5();
//! let descriptor = GeometryDescriptor::e8_a5();
//! let engine = Localizer::new(&marking, &descriptor).unwrap();
//! let n = engine.bps_invariant(&CurveClass::new(vec![2, 4, 3, 2])).unwrap();
//! assert_eq!(n.to_string(), "2");
//! ```

pub mod cli;
pub mod error;
pub mod folding;
pub mod localize;
pub mod rootsys;
pub mod symring;
pub mod verify;

pub use error::{Error, Result};
