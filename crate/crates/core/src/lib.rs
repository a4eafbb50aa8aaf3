//! Nilpotency of group actions, executable.
//!
//! The crate works with finite groups as multiplication tables
//! ([`grpcore`]), finitely generated abelian groups and their automorphisms
//! ([`abelian`]), group actions and their commutator series ([`actions`]),
//! Frattini subgroups ([`frattini`]), localization of finite nilpotent groups
//! at a prime ([`localize`]) and self-equivalence groups of
//! Eilenberg–MacLane spaces ([`homotopy`]). [`cli`] holds the catalog format
//! and the verification suite driven by the `nilact` binary.

pub mod abelian;
pub mod actions;
pub mod cli;
pub mod error;
pub mod frattini;
pub mod grpcore;
pub mod homotopy;
mod limits;
pub mod localize;
pub mod num;

pub use error::{Error, Result};
pub use limits::Limits;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/abelian.md")]
    mod abelian {}
    #[doc = include_str!("../../../book/src/actions.md")]
    mod actions {}
    #[doc = include_str!("../../../book/src/frattini.md")]
    mod frattini {}
    #[doc = include_str!("../../../book/src/localization.md")]
    mod localization {}
    #[doc = include_str!("../../../book/src/em-spaces.md")]
    mod em_spaces {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
