//! Wall-clock measurement, reduced to the one thing the crate needs: elapsed
//! milliseconds around a closure.  Without the `std` feature the duration is
//! reported as zero; nothing downstream depends on it for correctness.

/// Runs `f`, returning its value together with the elapsed wall time in
/// milliseconds (zero when built without `std`).
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    #[cfg(feature = "std")]
    {
        let start = std::time::Instant::now();
        let value = f();
        let ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
        (value, ms)
    }
    #[cfg(not(feature = "std"))]
    {
        (f(), 0)
    }
}
