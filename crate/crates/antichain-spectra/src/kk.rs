//! Cascade representations, minimum shadows and the Lovász bound.

use crate::binom::{binom, binom_real, checked_binom};

/// Greedy cascade t = binom(a_k, k) + binom(a_{k-1}, k-1) + ... with
/// strictly decreasing a_i; terms whose binomial is zero are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cascade {
    pub k: u32,
    /// (a_i, i) pairs, i descending from k.
    pub terms: Vec<(u64, u32)>,
}

impl Cascade {
    pub fn value(&self) -> u128 {
        self.terms.iter().map(|&(a, i)| binom(a, i as u64)).sum()
    }

    /// Sum of binom(a_i, i-1): the shadow of the corresponding squashed
    /// prefix.
    pub fn shadow(&self) -> u128 {
        self.terms.iter().map(|&(a, i)| binom(a, (i - 1) as u64)).sum()
    }
}

pub fn cascade(t: u128, k: u32) -> Cascade {
    assert!(k >= 1, "cascade needs k >= 1");
    let mut terms = Vec::new();
    let mut rem = t;
    let mut i = k;
    while rem > 0 {
        debug_assert!(i >= 1);
        // Largest a with binom(a, i) <= rem. The remainder after
        // subtracting is < binom(a, i-1), so the next index stays below a
        // automatically.
        let mut a = i as u64 - 1;
        while checked_binom(a + 1, i as u64).map_or(false, |v| v <= rem) {
            a += 1;
        }
        let v = binom(a, i as u64);
        if v > 0 {
            terms.push((a, i));
            rem -= v;
        }
        if i == 1 {
            debug_assert_eq!(rem, 0);
            break;
        }
        i -= 1;
    }
    Cascade { k, terms }
}

/// Exact minimum shadow size over t-element k-uniform families
/// (Kruskal-Katona; attained by the first t k-sets in squashed order).
pub fn kk_min_shadow(t: u128, k: u32) -> u128 {
    if t == 0 {
        return 0;
    }
    cascade(t, k).shadow()
}

/// Lovász form of the lower bound: binom(x, k-1) where x >= k-1 is the real
/// solution of binom(x, k) = t. Never exceeds kk_min_shadow.
pub fn lovasz_bound(t: u128, k: u32) -> f64 {
    assert!(k >= 1);
    if t == 0 {
        return 0.0;
    }
    let target = t as f64;
    let mut lo = (k - 1) as f64;
    let mut hi = k as f64;
    while binom_real(hi, k as u64) < target {
        hi *= 2.0;
        if !hi.is_finite() {
            return f64::INFINITY;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binom_real(mid, k as u64) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi.max(1.0) {
            break;
        }
    }
    binom_real(0.5 * (lo + hi), (k - 1) as u64)
}

/// Sum of the first l Catalan numbers: C_1 = 1, C_2 = 3, C_3 = 8, C_4 = 22.
pub fn catalan_prefix(l: u32) -> u128 {
    (1..=l as u64).map(|i| binom(2 * i, i) / (i as u128 + 1)).sum()
}

/// Minimum size over maximal squashed flat antichains on levels k, k-1 of
/// B_n, the k-set count of the minimizing prefix and its cascade indices
/// a_2, ..., a_k (the prefix is sum of binom(a_i, i)).
pub fn min_squashed_flat_size(n: u32, k: u32) -> (u128, u128, Vec<u64>) {
    assert!(k >= 2 && k + 1 < n, "need 2 <= k <= n-2");
    let size = binom(n as u64, (k - 1) as u64).min(binom(n as u64, k as u64))
        - catalan_prefix((k - 1).min(n - k));
    let mut a_seq = Vec::with_capacity((k - 1) as usize);
    for i in 2..=k as u64 {
        let a = if i <= (n - k + 1) as u64 { 2 * i - 2 } else { (n - k - 1) as u64 + i };
        a_seq.push(a);
    }
    let max_ksets = a_seq
        .iter()
        .zip(2..=k as u64)
        .map(|(&a, i)| binom(a, i))
        .sum();
    (size, max_ksets, a_seq)
}
