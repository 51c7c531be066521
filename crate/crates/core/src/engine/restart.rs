/// True when each of the last `window` steps of `trace` improved the cost by
/// a relative amount below `threshold`.
///
/// Needs at least `window + 1` entries. Relative improvement of a step is
/// `(prev - curr) / max(|prev|, 1e-300)`.
pub fn check_restart(trace: &[f64], window: usize, threshold: f64) -> bool {
    if window == 0 || trace.len() < window + 1 {
        return false;
    }
    trace[trace.len() - window - 1..].windows(2).all(|w| {
        let (prev, curr) = (w[0], w[1]);
        (prev - curr) / prev.abs().max(1e-300) < threshold
    })
}
