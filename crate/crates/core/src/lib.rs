//! Mutations of quivers with potentials.
//!
//! The crate is organized bottom-up:
//!
//! - [`quiver`]: loop-free quivers, three-step mutation, exchange matrices
//! - [`linalg`]: exact rational linear algebra
//! - [`pathalg`]: truncated complete path algebra, potentials, cyclic
//!   derivatives and substitutions
//! - [`jacobian`]: Jacobian ideals and truncated Jacobian algebra dimensions
//! - [`reduction`]: splitting a QP into trivial and reduced parts
//! - [`mutation`]: QP mutation at an arbitrary vertex
//! - [`decorated`]: decorated representations and reflection functors
//! - [`format`], [`cli`], [`session`], [`server`]: JSON formats, command
//!   line operations and the exploration server

pub mod cli;
pub mod decorated;
pub mod error;
pub mod format;
pub mod jacobian;
pub mod linalg;
pub mod mutation;
pub mod pathalg;
pub mod quiver;
pub mod reduction;
pub mod server;
pub mod session;

pub use error::{Error, Result};
