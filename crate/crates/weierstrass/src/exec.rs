//! Execution-mode switch for the data-parallel kernels.
//!
//! All heavy passes are pure monotone bit operations, so the member sets they
//! produce are identical in both modes; the switch exists for benchmarking and
//! for single-threaded environments.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

/// Mode for the box kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// Rayon data-parallel passes. Only effective with the `parallel` feature.
    Parallel,
}

pub fn set_mode(mode: Mode) {
    PARALLEL.store(
        matches!(mode, Mode::Parallel) && cfg!(feature = "parallel"),
        Ordering::Relaxed,
    );
}

pub fn mode() -> Mode {
    if PARALLEL.load(Ordering::Relaxed) {
        Mode::Parallel
    } else {
        Mode::Sequential
    }
}

/// True when a kernel over `words` machine words should fan out.
#[cfg(feature = "parallel")]
pub(crate) fn parallel_active(words: usize) -> bool {
    PARALLEL.load(Ordering::Relaxed) && words >= (1 << 16)
}
