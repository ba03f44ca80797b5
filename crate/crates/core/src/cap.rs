use std::fmt;

use thiserror::Error;

/// Default number of elements (arguments or tuples) the exhaustive solvers accept.
pub const DEFAULT_ENUM_CAP: usize = 20;

/// Subsets are encoded as `u64` bit masks, so no cap can go beyond this.
pub const MAX_ENUM_CAP: usize = 63;

/// Environment variable read by the command-line front end to override the cap.
pub const ENUM_CAP_ENV: &str = "AF2DB_ENUM_CAP";

/// Upper bound on the size of the ground set handed to a `2^n` enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumCap(usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{size} elements exceed the enumeration cap of {cap}")]
pub struct CapExceeded {
    pub size: usize,
    pub cap: usize,
}

impl EnumCap {
    /// Values above [`MAX_ENUM_CAP`] are clamped.
    pub fn new(cap: usize) -> Self {
        EnumCap(cap.min(MAX_ENUM_CAP))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Reads [`ENUM_CAP_ENV`]; an unset variable yields the default.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(ENUM_CAP_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(EnumCap::new)
                .map_err(|_| format!("{ENUM_CAP_ENV}={raw:?} is not a natural number")),
            Err(std::env::VarError::NotPresent) => Ok(EnumCap::default()),
            Err(e) => Err(format!("{ENUM_CAP_ENV}: {e}")),
        }
    }

    pub fn check(self, size: usize) -> Result<(), CapExceeded> {
        if size > self.0 {
            Err(CapExceeded { size, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap(DEFAULT_ENUM_CAP)
    }
}

impl fmt::Display for EnumCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
