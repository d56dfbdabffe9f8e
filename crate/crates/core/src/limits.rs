//! Global caps on brute-force enumeration.
//!
//! Every routine that enumerates a vector space checks its size against one
//! of these caps first and fails with [`Error::EnumerationCap`] instead of
//! running for an unbounded time.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::linalg::space_size;

static MAX_ENUM: AtomicU64 = AtomicU64::new(1 << 16);
static MAX_LATTICE: AtomicU64 = AtomicU64::new(1 << 20);

/// Cap for enumerating elements of Hom/End spaces and residue algebras.
pub fn max_enum() -> u64 {
    MAX_ENUM.load(Ordering::Relaxed)
}

pub fn set_max_enum(n: u64) {
    MAX_ENUM.store(n, Ordering::Relaxed);
}

/// Cap on the number of vectors scanned while spinning submodule lattices.
pub fn max_lattice() -> u64 {
    MAX_LATTICE.load(Ordering::Relaxed)
}

pub fn set_max_lattice(n: u64) {
    MAX_LATTICE.store(n, Ordering::Relaxed);
}

pub(crate) fn check_space(what: &str, p: u32, dim: usize, cap: u64) -> Result<u64> {
    let needed = space_size(p, dim);
    if needed > cap as u128 {
        return Err(Error::EnumerationCap { what: what.to_string(), needed, cap });
    }
    Ok(needed as u64)
}
