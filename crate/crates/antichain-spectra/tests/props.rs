//! Randomized structural invariants. Each property is a law the library must
//! satisfy on every input, checked against naive models built inside the test
//! rather than against the implementation's own helpers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use antichain_spectra::{
    binom, construct_any_mac, enumerate_uniform_families, enumerate_Y, is_maximal_antichain,
    kk_min_shadow, sigma, squash_prefix, squash_rank, squash_unrank, w_fn, ElementSet, Error,
    IntSpectrum, UniformFamily,
};

/// A uniform family on [n] with 2 <= n <= 9, 1 <= k <= n, drawn by keeping a
/// random subset of the full level.
fn arb_family() -> impl Strategy<Value = UniformFamily> {
    (2u32..=9, 1u32..=9)
        .prop_flat_map(|(n, kraw)| {
            let k = kraw.min(n);
            let level = binom(n as u64, k as u64) as usize;
            (Just(n), Just(k), proptest::collection::vec(any::<bool>(), level))
        })
        .prop_map(|(n, k, picks)| {
            let all = squash_prefix(k, binom(n as u64, k as u64)).unwrap();
            let sets: Vec<ElementSet> = all
                .into_iter()
                .zip(picks)
                .filter_map(|(s, keep)| keep.then_some(s))
                .collect();
            UniformFamily::new(n, k, sets).unwrap()
        })
}

/// Same ground and level twice, for two-family laws.
fn arb_family_pair() -> impl Strategy<Value = (UniformFamily, UniformFamily)> {
    (2u32..=9, 1u32..=9)
        .prop_flat_map(|(n, kraw)| {
            let k = kraw.min(n);
            let level = binom(n as u64, k as u64) as usize;
            (
                Just(n),
                Just(k),
                proptest::collection::vec(any::<bool>(), level),
                proptest::collection::vec(any::<bool>(), level),
            )
        })
        .prop_map(|(n, k, p1, p2)| {
            let all = squash_prefix(k, binom(n as u64, k as u64)).unwrap();
            let pick = |picks: &[bool]| {
                let sets: Vec<ElementSet> = all
                    .iter()
                    .zip(picks)
                    .filter_map(|(s, keep)| keep.then_some(*s))
                    .collect();
                UniformFamily::new(n, k, sets).unwrap()
            };
            (pick(&p1), pick(&p2))
        })
}

fn naive_max_antichain(n: u32, members: &[u64]) -> (bool, bool) {
    let comparable = |a: u64, b: u64| a & b == a || a & b == b;
    let anti = members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| !comparable(a, b)));
    if !anti {
        return (false, false);
    }
    let maximal = !members.is_empty()
        && (0u64..1 << n)
            .all(|x| members.contains(&x) || members.iter().any(|&a| comparable(x, a)));
    (true, maximal)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    /// Normalized matching: a family at level k of B_n, 1 <= k, satisfies
    /// (n - k + 1) |dF| >= k |F|.
    #[test]
    fn nmp_inequality(f in arb_family()) {
        let shadow = f.shadow().unwrap();
        let lhs = (f.n() - f.k() + 1) as u128 * shadow.len() as u128;
        let rhs = f.k() as u128 * f.len() as u128;
        prop_assert!(lhs >= rhs, "NMP fails: n={}, k={}, |F|={}, |dF|={}", f.n(), f.k(), f.len(), shadow.len());
    }

    /// |d(F u G)| <= |dF| + |dG|, and the union shadow dominates each part.
    #[test]
    fn shadow_subadditive((f, g) in arb_family_pair()) {
        let mut sets = f.sets().to_vec();
        sets.extend_from_slice(g.sets());
        sets.sort_unstable();
        sets.dedup();
        let u = UniformFamily::new(f.n(), f.k(), sets).unwrap();
        let du = u.shadow().unwrap().len();
        let df = f.shadow().unwrap().len();
        let dg = g.shadow().unwrap().len();
        prop_assert!(du <= df + dg);
        prop_assert!(du >= df.max(dg));
    }

    /// Complementing inside [n] swaps shadow and shade:
    /// d(F*) = (nabla F)* where S* = [n] \ S.
    #[test]
    fn complement_duality(f in arb_family()) {
        prop_assume!(f.k() < f.n());
        let lhs = f.complement().shadow().unwrap();
        let rhs = f.shade().complement();
        prop_assert_eq!(lhs.sets(), rhs.sets());
    }

    /// Colex rank and unrank are mutually inverse.
    #[test]
    fn rank_unrank_roundtrip(k in 1u32..=12, m in 1u128..=1_000_000, bits in 1u64..(1u64 << 40)) {
        let cap = binom(40, k as u64);
        let m = 1 + (m - 1) % cap;
        let s = squash_unrank(k, m).unwrap();
        prop_assert_eq!(s.len(), k);
        prop_assert_eq!(squash_rank(s), m);

        let s2 = ElementSet::from_bits(bits);
        let r = squash_rank(s2);
        prop_assert_eq!(squash_unrank(s2.len(), r).unwrap(), s2);
    }

    /// The cascade minimum is the true minimum shadow over every family the
    /// budget can enumerate, one random cell at a time.
    #[test]
    fn cascade_matches_enumeration(n in 3u32..=7, k in 1u32..=3, t in 1u128..=8) {
        let level = binom(n as u64, k as u64);
        prop_assume!(t <= level);
        let mut sub_rank = vec![0u32; 1 << n];
        for (i, s) in squash_prefix(k - 1, binom(n as u64, k as u64 - 1)).unwrap().iter().enumerate() {
            sub_rank[s.bits() as usize] = i as u32;
        }
        let mut mask_of = vec![0u64; 1 << n];
        for s in squash_prefix(k, level).unwrap() {
            let mut m = 0u64;
            let mut bits = s.bits();
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                m |= 1u64 << sub_rank[(s.bits() ^ low) as usize];
                bits ^= low;
            }
            mask_of[s.bits() as usize] = m;
        }
        let mut min_seen = u128::MAX;
        let walk = enumerate_uniform_families(n, k, t as usize, 200_000, |fam| {
            let shadow = fam
                .iter()
                .fold(0u64, |acc, s| acc | mask_of[s.bits() as usize])
                .count_ones() as u128;
            min_seen = min_seen.min(shadow);
            true
        });
        match walk {
            Ok(_) => prop_assert_eq!(min_seen, kk_min_shadow(t, k)),
            Err(Error::Budget { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("enumeration failed: {e}"))),
        }
    }

    /// IntSpectrum agrees with a BTreeSet model on every query.
    #[test]
    fn intspectrum_model(
        a in proptest::collection::vec(-40i64..=40, 0..40),
        b in proptest::collection::vec(-40i64..=40, 0..40),
        lo in -45i64..=45,
        span in 0i64..=20,
        delta in -30i64..=30,
        c in -30i64..=30,
    ) {
        let sa = IntSpectrum::from_values(a.iter().copied());
        let sb = IntSpectrum::from_values(b.iter().copied());
        let ma: BTreeSet<i64> = a.iter().copied().collect();
        let mb: BTreeSet<i64> = b.iter().copied().collect();

        prop_assert_eq!(sa.count(), ma.len() as u128);
        prop_assert_eq!(sa.min(), ma.first().copied());
        prop_assert_eq!(sa.max(), ma.last().copied());
        for v in -45..=45 {
            prop_assert_eq!(sa.contains(v), ma.contains(&v), "contains({})", v);
        }

        let su = sa.union(&sb);
        let mu: BTreeSet<i64> = ma.union(&mb).copied().collect();
        prop_assert_eq!(su.iter_values().collect::<Vec<_>>(), mu.iter().copied().collect::<Vec<_>>());

        let hi = lo + span;
        let sc = sa.clip(lo, hi);
        let mc: Vec<i64> = ma.iter().copied().filter(|&v| lo <= v && v <= hi).collect();
        prop_assert_eq!(sc.iter_values().collect::<Vec<_>>(), mc);

        let comp = sa.complement_within(lo, hi);
        let mcomp: Vec<i64> = (lo..=hi).filter(|v| !ma.contains(v)).collect();
        prop_assert_eq!(comp.iter_values().collect::<Vec<_>>(), mcomp);

        let sh = sa.shift(delta);
        let msh: Vec<i64> = ma.iter().map(|v| v + delta).collect();
        prop_assert_eq!(sh.iter_values().collect::<Vec<_>>(), msh);

        let re = sa.reflect(c);
        let mre: Vec<i64> = ma.iter().rev().map(|v| c - v).collect();
        prop_assert_eq!(re.iter_values().collect::<Vec<_>>(), mre);
    }

    /// The maximality checker agrees with a full 2^n sweep written from the
    /// definition.
    #[test]
    fn maximality_matches_naive(n in 2u32..=8, raw in proptest::collection::vec(any::<u64>(), 0..12)) {
        let mut members: Vec<u64> = raw.iter().map(|x| x & ((1 << n) - 1)).collect();
        members.sort_unstable();
        members.dedup();
        let sets: Vec<ElementSet> = members.iter().map(|&b| ElementSet::from_bits(b)).collect();
        let got = is_maximal_antichain(n, &sets).unwrap();
        prop_assert_eq!(got, naive_max_antichain(n, &members));
    }

    /// Complementing every member of a maximal antichain gives another
    /// maximal antichain of the same size.
    #[test]
    fn mac_complement_closure(n in 6u32..=9, seed in 0u128..=10_000) {
        let hi = w_fn(n) as u128;
        let m = 1 + seed % hi;
        let w = match construct_any_mac(n, m) {
            Ok(w) => w,
            Err(_) => return Ok(()),
        };
        let full = ElementSet::full(n);
        let flipped: Vec<ElementSet> = w.all_sets().iter().map(|s| full.minus(*s)).collect();
        prop_assert_eq!(flipped.len() as u128, m);
        let (anti, maximal) = is_maximal_antichain(n, &flipped).unwrap();
        prop_assert!(anti && maximal, "complement of the size-{} witness on [{}]", m, n);
    }

    /// sigma(t, k) = sigma(t, k-1) + t, value by value.
    #[test]
    fn sigma_shift_identity(t in 1u64..=12, k in 2u64..=40) {
        prop_assume!(t <= k);
        let shifted = sigma(t, k - 1).unwrap().shift(t as i64);
        prop_assert_eq!(sigma(t, k).unwrap(), shifted);
    }
}

/// Consecutive achievable sizes among the squashed flat antichains on levels
/// k, k-1 never jump by more than max(k-1, n-k).
#[test]
fn y_gaps_are_small() {
    for n in 7u32..=13 {
        for k in n / 2..=n.saturating_sub(3) {
            if k == 0 {
                continue;
            }
            let table = enumerate_Y(n, k).unwrap();
            let sizes: Vec<i64> = table.sizes.iter_values().collect();
            let cap = (k - 1).max(n - k) as i64;
            for pair in sizes.windows(2) {
                assert!(
                    pair[1] - pair[0] <= cap,
                    "gap {} > {} between sizes {} and {} at n={n}, k={k}",
                    pair[1] - pair[0],
                    cap,
                    pair[0],
                    pair[1]
                );
            }
        }
    }
}
