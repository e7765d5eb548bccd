//! Bitmask kernels for subsets of [n] = {1, ..., n}, n <= 64, and k-uniform
//! families.
//!
//! A set is one 64-bit word with bit i-1 standing for element i. Numeric
//! order on the words is exactly colexicographic (squashed) order on the
//! sets, so all squashed-order machinery reduces to integer comparison.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::binom::{binom, checked_binom};
use crate::error::{Error, Result};

pub const MAX_GROUND: u32 = 64;

/// A subset of [n] for some n <= 64, as a bit word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds from 1-based elements; rejects 0, values over 64 and repeats.
    pub fn from_elements(elems: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &e in elems {
            if e == 0 || e > MAX_GROUND {
                return Err(Error::Domain(format!("element {e} outside 1..=64")));
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(Error::Domain(format!("repeated element {e}")));
            }
            bits |= b;
        }
        Ok(ElementSet(bits))
    }

    pub fn singleton(e: u32) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    /// The full ground set [n].
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        e >= 1 && e <= MAX_GROUND && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn insert(self, e: u32) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&e));
        ElementSet(self.0 | 1u64 << (e - 1))
    }

    pub fn remove(self, e: u32) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&e));
        ElementSet(self.0 & !(1u64 << (e - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_element(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_element(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.len() as usize);
        let mut bits = self.0;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            v.push(low.trailing_zeros() + 1);
            bits ^= low;
        }
        v
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A k-uniform family over [n], stored sorted in colex order, deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformFamily {
    n: u32,
    k: u32,
    sets: Vec<ElementSet>,
}

impl UniformFamily {
    pub fn new(n: u32, k: u32, mut sets: Vec<ElementSet>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::Domain(format!("ground size {n} outside 1..=64")));
        }
        let full = ElementSet::full(n);
        for s in &sets {
            if s.len() != k {
                return Err(Error::Domain(format!("set {s} is not a {k}-set")));
            }
            if !s.is_subset_of(full) {
                return Err(Error::Domain(format!("set {s} not inside [{n}]")));
            }
        }
        sets.sort_unstable();
        if sets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("duplicate set in family".into()));
        }
        Ok(UniformFamily { n, k, sets })
    }

    pub fn empty(n: u32, k: u32) -> Self {
        UniformFamily { n, k, sets: Vec::new() }
    }

    /// The whole level binom([n], k).
    pub fn full_level(n: u32, k: u32) -> Result<Self> {
        let m = binom(n as u64, k as u64);
        let sets = squash_prefix(k, m)?;
        UniformFamily::new(n, k, sets)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// All (k-1)-sets contained in some member.
    pub fn shadow(&self) -> Result<UniformFamily> {
        if self.k == 0 {
            if self.sets.is_empty() {
                return Ok(UniformFamily::empty(self.n, 0));
            }
            return Err(Error::Domain("shadow of a 0-uniform family".into()));
        }
        let mut out: HashSet<u64> = HashSet::with_capacity(self.sets.len() * self.k as usize);
        for s in &self.sets {
            let mut bits = s.bits();
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                out.insert(s.bits() ^ low);
                bits ^= low;
            }
        }
        let mut sets: Vec<ElementSet> = out.into_iter().map(ElementSet::from_bits).collect();
        sets.sort_unstable();
        Ok(UniformFamily { n: self.n, k: self.k - 1, sets })
    }

    /// All (k+1)-sets within [n] containing some member.
    pub fn shade(&self) -> UniformFamily {
        let full = ElementSet::full(self.n).bits();
        let mut out: HashSet<u64> = HashSet::new();
        for s in &self.sets {
            let mut rest = full & !s.bits();
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                out.insert(s.bits() | low);
                rest ^= low;
            }
        }
        let mut sets: Vec<ElementSet> = out.into_iter().map(ElementSet::from_bits).collect();
        sets.sort_unstable();
        UniformFamily { n: self.n, k: self.k + 1, sets }
    }

    /// The family of complements within [n]; (n-k)-uniform.
    pub fn complement(&self) -> UniformFamily {
        let full = ElementSet::full(self.n);
        let mut sets: Vec<ElementSet> = self.sets.iter().map(|s| full.minus(*s)).collect();
        sets.sort_unstable();
        UniformFamily { n: self.n, k: self.n - self.k, sets }
    }
}

/// 1-based colexicographic rank: the m-th smallest k-set has rank m.
pub fn squash_rank(s: ElementSet) -> u128 {
    let mut r: u128 = 1;
    for (i, e) in s.elements().into_iter().enumerate() {
        r += binom((e - 1) as u64, (i + 1) as u64);
    }
    r
}

/// The m-th k-set in colex order (1-based). Errors if the set would need an
/// element beyond 64.
pub fn squash_unrank(k: u32, m: u128) -> Result<ElementSet> {
    if m == 0 {
        return Err(Error::Domain("squashed ranks are 1-based".into()));
    }
    let mut rem = m - 1;
    let mut out = ElementSet::EMPTY;
    for i in (1..=k).rev() {
        // Largest a with binom(a, i) <= rem; then element a+1 is placed.
        let mut a = (i - 1) as u64;
        loop {
            match checked_binom(a + 1, i as u64) {
                Some(v) if v <= rem => a += 1,
                _ => break,
            }
            if a >= MAX_GROUND as u64 {
                return Err(Error::Range(format!(
                    "rank {m} needs an element beyond {MAX_GROUND}"
                )));
            }
        }
        out = out.insert((a + 1) as u32);
        rem -= binom(a, i as u64);
    }
    debug_assert_eq!(rem, 0);
    Ok(out)
}

/// Next k-set in colex order (Gosper's hack); None past the last set in [64].
pub fn next_colex(s: ElementSet) -> Option<ElementSet> {
    let x = s.bits();
    if x == 0 {
        return None;
    }
    let u = x & x.wrapping_neg();
    let v = x.checked_add(u)?;
    Some(ElementSet(v | (((x ^ v) / u) >> 2)))
}

/// First m k-sets in colex order.
pub fn squash_prefix(k: u32, m: u128) -> Result<Vec<ElementSet>> {
    const PREFIX_BUDGET: u128 = 50_000_000;
    if m > PREFIX_BUDGET {
        return Err(Error::Budget { required: m, budget: PREFIX_BUDGET });
    }
    if m > binom(MAX_GROUND as u64, k as u64) {
        return Err(Error::Range(format!(
            "only binom(64,{k}) {k}-sets exist within [64]"
        )));
    }
    let mut out = Vec::with_capacity(m as usize);
    if m == 0 {
        return Ok(out);
    }
    let mut cur = ElementSet::full(k); // {1, ..., k} is the colex minimum
    out.push(cur);
    for _ in 1..m {
        cur = next_colex(cur).expect("count checked against binom(64, k)");
        out.push(cur);
    }
    Ok(out)
}

/// Shadow-size increments along the squashed order: entry i is the number of
/// new shadow sets contributed by the (i+1)-st k-set of the colex prefix.
pub fn marginal_shadow_vector(k: u32, m: u128) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::Domain("marginal shadows need k >= 1".into()));
    }
    let prefix = squash_prefix(k, m)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::with_capacity(prefix.len());
    for s in prefix {
        let mut fresh = 0u64;
        let mut bits = s.bits();
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if seen.insert(s.bits() ^ low) {
                fresh += 1;
            }
            bits ^= low;
        }
        out.push(fresh);
    }
    Ok(out)
}

const LEVEL_SCAN_BUDGET: u128 = 16_000_000;

/// Antichain and maximality flags for an arbitrary collection of subsets of
/// [n]: (pairwise incomparable, nothing outside is incomparable to all).
///
/// Scans only the levels adjacent to the collection's own levels: a set
/// below the bottom level is addable iff one of its supersets at the bottom
/// level minus one is (and dually above the top), so the adjacent levels
/// decide maximality. A full 2^n sweep stands in when the level scan would
/// blow its budget and n <= 20.
pub fn is_maximal_antichain(n: u32, sets: &[ElementSet]) -> Result<(bool, bool)> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::Domain(format!("ground size {n} outside 1..=64")));
    }
    let full = ElementSet::full(n);
    for s in sets {
        if !s.is_subset_of(full) {
            return Err(Error::Domain(format!("set {s} not inside [{n}]")));
        }
    }
    let mut members: Vec<ElementSet> = sets.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.is_empty() {
        return Ok((true, false));
    }
    match level_scan(n, &members) {
        Ok(r) => {
            #[cfg(debug_assertions)]
            if n <= 14 {
                assert_eq!(r, full_scan(n, &members), "level scan vs full scan");
            }
            Ok(r)
        }
        Err(Error::Budget { required, budget }) => {
            if n <= 20 {
                Ok(full_scan(n, &members))
            } else {
                Err(Error::Budget { required, budget })
            }
        }
        Err(e) => Err(e),
    }
}

fn expand_up(n: u32, from: &HashSet<u64>) -> HashSet<u64> {
    let full = ElementSet::full(n).bits();
    let mut out = HashSet::with_capacity(from.len() * 2);
    for &x in from {
        let mut rest = full & !x;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            out.insert(x | low);
            rest ^= low;
        }
    }
    out
}

fn expand_down(from: &HashSet<u64>) -> HashSet<u64> {
    let mut out = HashSet::with_capacity(from.len());
    for &x in from {
        let mut bits = x;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            out.insert(x ^ low);
            bits ^= low;
        }
    }
    out
}

fn level_scan(n: u32, members: &[ElementSet]) -> Result<(bool, bool)> {
    let mut by_level: BTreeMap<u32, HashSet<u64>> = BTreeMap::new();
    for s in members {
        by_level.entry(s.len()).or_default().insert(s.bits());
    }
    let lmin = *by_level.keys().next().unwrap();
    let lmax = *by_level.keys().next_back().unwrap();

    let mut needed: u128 = 0;
    for l in lmin.saturating_sub(1)..=(lmax + 1).min(n) {
        needed += binom(n as u64, l as u64);
    }
    if needed > LEVEL_SCAN_BUDGET {
        return Err(Error::Budget { required: needed, budget: LEVEL_SCAN_BUDGET });
    }

    let empty: HashSet<u64> = HashSet::new();
    let mems = |l: u32| by_level.get(&l).unwrap_or(&empty);

    // Ascending pass: up[l] = sets at level l strictly containing a member.
    let mut up: BTreeMap<u32, HashSet<u64>> = BTreeMap::new();
    up.insert(lmin, HashSet::new());
    for l in (lmin + 1)..=lmax {
        let mut src = up[&(l - 1)].clone();
        src.extend(mems(l - 1).iter().copied());
        up.insert(l, expand_up(n, &src));
    }
    if (lmin..=lmax).any(|l| mems(l).iter().any(|x| up[&l].contains(x))) {
        return Ok((false, false));
    }

    let mut addable = false;

    // Above the top level.
    if lmax < n {
        let mut src = up[&lmax].clone();
        src.extend(mems(lmax).iter().copied());
        let top = expand_up(n, &src);
        if (top.len() as u128) < binom(n as u64, (lmax + 1) as u64) {
            addable = true;
        }
    }

    // Descending pass with the middle-level union counts. Since the family
    // is an antichain, members are disjoint from both closures, so
    // |up ∪ down ∪ members| = |members| + |up| + |down| - |up ∩ down|.
    let mut down: HashSet<u64> = HashSet::new();
    for l in (lmin..=lmax).rev() {
        if l < lmax {
            let mut src = down;
            src.extend(mems(l + 1).iter().copied());
            down = expand_down(&src);
        }
        let up_l = &up[&l];
        let (small, large) = if up_l.len() <= down.len() { (up_l, &down) } else { (&down, up_l) };
        let overlap = small.iter().filter(|x| large.contains(*x)).count();
        let covered = mems(l).len() + up_l.len() + down.len() - overlap;
        if (covered as u128) < binom(n as u64, l as u64) {
            addable = true;
        }
    }

    // Below the bottom level.
    if lmin > 0 {
        let mut src = down;
        src.extend(mems(lmin).iter().copied());
        let bottom = expand_down(&src);
        if (bottom.len() as u128) < binom(n as u64, (lmin - 1) as u64) {
            addable = true;
        }
    }

    Ok((true, !addable))
}

/// Reference check over all 2^n subsets; n <= 20.
fn full_scan(n: u32, members: &[ElementSet]) -> (bool, bool) {
    assert!(n <= 20);
    const MEMBER: u8 = 1;
    const ABOVE: u8 = 2; // strictly contains a member
    const BELOW: u8 = 4; // strictly contained in a member
    let size = 1usize << n;
    let full = (size - 1) as u64;
    let mut flags = vec![0u8; size];
    for s in members {
        flags[s.bits() as usize] |= MEMBER;
    }
    for x in 0..size as u64 {
        let mut bits = x;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if flags[(x ^ low) as usize] & (MEMBER | ABOVE) != 0 {
                flags[x as usize] |= ABOVE;
                break;
            }
            bits ^= low;
        }
    }
    for x in (0..size as u64).rev() {
        let mut rest = full & !x;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            if flags[(x | low) as usize] & (MEMBER | BELOW) != 0 {
                flags[x as usize] |= BELOW;
                break;
            }
            rest ^= low;
        }
    }
    let antichain = flags.iter().all(|f| f & MEMBER == 0 || f & ABOVE == 0);
    let maximal = antichain && flags.iter().all(|f| *f != 0);
    (antichain, maximal)
}

/// Checked count of index combinations: binom(total, t) if it fits.
pub(crate) fn index_comb_count(total: usize, t: usize) -> Option<u128> {
    checked_binom(total as u64, t as u64)
}

/// Visits t-element index combinations of {0, ..., total-1} in colex order,
/// 0-based ranks start..end. The visitor returns false to stop early.
/// Returns the number visited.
pub(crate) fn for_each_index_combination_range(
    total: usize,
    t: usize,
    start: u128,
    end: u128,
    mut visitor: impl FnMut(&[usize]) -> bool,
) -> u128 {
    let count = match index_comb_count(total, t) {
        Some(c) => c,
        None => u128::MAX,
    };
    let end = end.min(count);
    if start >= end {
        return 0;
    }
    let mut idx = index_comb_unrank(total, t, start);
    let mut visited: u128 = 0;
    let todo = end - start;
    loop {
        visited += 1;
        if !visitor(&idx) || visited == todo {
            return visited;
        }
        // Colex successor: bump the lowest slot that has headroom, reset the
        // slots below it to 0..i-1.
        let mut i = 0;
        loop {
            let cap = if i + 1 < t { idx[i + 1] } else { total };
            if idx[i] + 1 < cap {
                idx[i] += 1;
                for (j, slot) in idx.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
            debug_assert!(i < t, "ran past the last combination");
        }
    }
}

/// 0-based colex unranking of a t-combination of {0, ..., total-1}.
fn index_comb_unrank(total: usize, t: usize, rank: u128) -> Vec<usize> {
    let mut out = vec![0usize; t];
    let mut rem = rank;
    let mut hi = total;
    for i in (1..=t).rev() {
        // Largest c < hi with binom(c, i) <= rem.
        let mut lo = i - 1;
        let mut hi_s = hi;
        while lo + 1 < hi_s {
            let mid = (lo + hi_s) / 2;
            let v = checked_binom(mid as u64, i as u64).unwrap_or(u128::MAX);
            if v <= rem {
                lo = mid;
            } else {
                hi_s = mid;
            }
        }
        out[i - 1] = lo;
        rem -= checked_binom(lo as u64, i as u64).unwrap_or(0);
        hi = lo;
    }
    debug_assert_eq!(rem, 0);
    out
}

/// Calls the visitor on every t-subset of binom([n], k) in deterministic
/// (colex-of-colex-indices) order; returns how many families were visited.
/// The visitor may return false to stop early.
pub fn enumerate_uniform_families(
    n: u32,
    k: u32,
    t: usize,
    budget: u128,
    visitor: impl FnMut(&[ElementSet]) -> bool,
) -> Result<u128> {
    let total128 = binom(n as u64, k as u64);
    let count = index_comb_count(total128 as usize, t).unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::Budget { required: count, budget });
    }
    enumerate_uniform_families_range(n, k, t, 0, count, visitor)
}

/// Rank-range shard of `enumerate_uniform_families`: families with 0-based
/// colex ranks in [start, end). Shards partition the full enumeration, so
/// parallel callers can split [0, binom(binom(n,k), t)) however they like.
pub fn enumerate_uniform_families_range(
    n: u32,
    k: u32,
    t: usize,
    start: u128,
    end: u128,
    mut visitor: impl FnMut(&[ElementSet]) -> bool,
) -> Result<u128> {
    let total128 = binom(n as u64, k as u64);
    let all = squash_prefix(k, total128)?;
    let mut scratch = vec![ElementSet::EMPTY; t];
    let visited = for_each_index_combination_range(all.len(), t, start, end, |idx| {
        for (slot, &i) in scratch.iter_mut().zip(idx) {
            *slot = all[i];
        }
        visitor(&scratch)
    });
    Ok(visited)
}
