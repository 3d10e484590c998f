//! Conversion between real-time bounds (seconds) and sample indices.

/// Interval upper bounds at or above this many seconds denote a
/// whole-stream operator rather than a finite window.
pub const WHOLE_STREAM_SECONDS: f64 = 1e9;

/// Relative tolerance for timestamp uniformity checks, in units of the
/// sample period.
pub const JITTER_REL_TOL: f64 = 1e-9;

/// Snap products like `0.3 * 10` that land within 1e-9 of an integer back
/// onto it, so second↔sample conversion is insensitive to decimal dust.
fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * r.abs().max(1.0) {
        r
    } else {
        x
    }
}

/// Lower interval bound in samples: `ceil(seconds * fs)`.
pub fn lo_index(seconds: f64, fs: f64) -> usize {
    snap(seconds * fs).ceil() as usize
}

/// Upper interval bound in samples: `floor(seconds * fs)`.
pub fn hi_index(seconds: f64, fs: f64) -> usize {
    snap(seconds * fs).floor() as usize
}

/// Trailing-window width in samples: `ceil(fs * tau)`, never zero for
/// positive `tau`.
pub fn window_width(tau: f64, fs: f64) -> usize {
    (snap(fs * tau).ceil() as usize).max(1)
}

/// Timestamp of sample `index` on a uniform grid.
pub fn sample_time(t0: f64, fs: f64, index: usize) -> f64 {
    t0 + (index as f64) / fs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversion_is_stable_against_decimal_dust() {
        // 0.3 * 10 and 0.1 * 10 must not fall a ulp short of the integer.
        assert_eq!(hi_index(0.3, 10.0), 3);
        assert_eq!(hi_index(0.1, 10.0), 1);
        assert_eq!(lo_index(0.1, 10.0), 1);
        assert_eq!(window_width(1.0, 30.0), 30);
        assert_eq!(window_width(1.0, 10.0), 10);
    }

    #[test]
    fn non_aligned_bounds_round_conservatively() {
        // [0.11, 0.19] s at 10 Hz: ceil(1.1)=2, floor(1.9)=1.
        assert_eq!(lo_index(0.11, 10.0), 2);
        assert_eq!(hi_index(0.19, 10.0), 1);
    }

    #[test]
    fn doubling_tau_doubles_width_within_one() {
        for fs in [1.0, 10.0, 30.0] {
            for tau in [0.05, 0.3, 1.0, 1.7] {
                let w = window_width(tau, fs) as i64;
                let w2 = window_width(2.0 * tau, fs) as i64;
                assert!((w2 - 2 * w).abs() <= 1, "fs={fs} tau={tau}: {w} -> {w2}");
            }
        }
    }
}
