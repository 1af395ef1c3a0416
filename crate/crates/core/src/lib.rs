//! Weak-value simulation of quantum Cheshire cat scenarios.
//!
//! * [`qstate`]: dense states and operators over labeled tensor-product spaces.
//! * [`weakvalue`]: weak values for pre-/post-selected pairs.
//! * [`cheshire_single`]: the single-photon Cheshire cat baseline.
//! * [`wp_states`]: two-photon wave/particle states and attribute weak values.
//! * [`optical_network`]: element-level simulation of the verification network.
//! * [`circuit_parser`]: the `.circuit` text format.
//! * [`cli`]: command implementations behind the `wpsep` binary.

pub mod angle;
pub mod cheshire_single;
pub mod circuit_parser;
pub mod cli;
pub mod error;
pub mod optical_network;
pub mod qstate;
pub mod weakvalue;
pub mod wp_states;

pub use error::{Error, Result};
