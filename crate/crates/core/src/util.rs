//! Small shared numeric helpers.

/// Binomial coefficient with the convention `C(a, k) = 0` for `a < k` or
/// `k < 0`, and `C(0, 0) = 1`.
pub(crate) fn binom(a: i64, k: i64) -> i64 {
    if k < 0 || a < k {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * (a - t) / (t + 1);
    }
    acc
}
