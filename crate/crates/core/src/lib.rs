//! Encode Dung argumentation frameworks as inconsistent single-table databases.
//!
//! An argumentation framework (AF) becomes a table with one tuple per argument:
//! conflicts turn into functional dependencies (FDs), defense turns into
//! inclusion dependencies (IDs), and the range of a set of arguments becomes the
//! set of values its tuples cover. Extensions of the AF then line up with
//! (maximal, maximally covering or fully covering) subset repairs of the table.
//!
//! The crate is split along those lines:
//!
//! * [`af`] parses frameworks (APX / TGF) and enumerates extensions.
//! * [`rdb`] is a small in-memory table with FD/ID checking and repair enumeration.
//! * [`translate`] builds the conflict, defense, combined and range databases.
//! * [`verify`] cross-checks both sides on worked and randomly generated frameworks.
//! * [`samples`] holds the two running examples.
//! * [`cli`] is the command-line front end used by the `af2db` binary.

pub mod af;
pub mod cli;
pub mod rdb;
pub mod samples;
pub mod translate;
pub mod verify;

mod cap;
mod subsets;

pub use cap::{CapExceeded, EnumCap, DEFAULT_ENUM_CAP, ENUM_CAP_ENV, MAX_ENUM_CAP};
