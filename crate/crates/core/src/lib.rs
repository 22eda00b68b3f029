//! Exact-arithmetic check of the Hikita correspondence for the minimal
//! nilpotent orbit of a simply-laced simple Lie algebra.
//!
//! One side is the cohomology of the minimal resolution of the Kleinian
//! singularity with the same Dynkin diagram ([`resolution`]). The other is the
//! coordinate ring of the minimal orbit closure intersected with the Cartan
//! subalgebra ([`orbit_ideal`]), built from a Chevalley basis
//! ([`chevalley`]) and the split Casimir. Everything runs over the rationals
//! with [`linalgx`]; [`sln_oracle`] recomputes the type A case from matrix
//! equations. [`verify`] ties the pieces together.
//!
//! ```
//! use hikita_core::{verify, Family, ModeRequest, SimpleType};
//!
//! let t = SimpleType::new(Family::D, 4).unwrap();
//! let report = verify(t, 4, ModeRequest::Full).unwrap();
//! assert_eq!(report.projected_rank, 10);
//! assert_eq!(report.quotient_hilbert, vec![1, 4, 0, 0, 0]);
//! assert!(report.hikita_match);
//! ```

pub mod chevalley;
pub mod error;
pub mod linalgx;
pub mod orbit_ideal;
pub mod resolution;
pub mod rootsys;
pub mod sln_oracle;
pub mod verify;

pub use error::{Error, Result};
pub use orbit_ideal::{HilbertFunction, Mode};
pub use rootsys::{Family, SimpleType};
pub use verify::{
    emit_report, emit_reports, verify, verify_all, Format, ModeRequest, VerificationReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/root_systems.md")]
    pub struct RootSystems;
    #[doc = include_str!("../../../book/src/casimir.md")]
    pub struct Casimir;
    #[doc = include_str!("../../../book/src/ideal.md")]
    pub struct Ideal;
    #[doc = include_str!("../../../book/src/resolution.md")]
    pub struct Resolution;
    #[doc = include_str!("../../../book/src/sln_oracle.md")]
    pub struct SlnOracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
