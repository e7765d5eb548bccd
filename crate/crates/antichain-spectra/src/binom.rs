//! Exact binomial coefficients in u128.

/// C(n, k); 0 when k > n. Panics on u128 overflow (first at n >= 132 for
/// central k, far beyond any ground set handled here).
pub fn binom(n: u64, k: u64) -> u128 {
    checked_binom(n, k).expect("binomial coefficient overflows u128")
}

/// C(n, k) or None on overflow; 0 when k > n.
pub fn checked_binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // Exact at every step: the running product of j consecutive
        // integers is divisible by j!.
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// C(n, k) with signed arguments; 0 when k < 0, n < 0 or k > n. Matches the
/// convention used by the separated-antichain window bounds, where lower
/// indices like k - 5 may go negative.
pub fn binom_i(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binom(n as u64, k as u64)
    }
}

/// C(x, k) for real x >= k - 1, as used by the Lovász form of the
/// Kruskal-Katona bound.
pub fn binom_real(x: f64, k: u64) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - i as f64) / (i as f64 + 1.0);
    }
    acc
}
