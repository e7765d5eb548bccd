//! Certified gaps in sigma(t, k) beyond the t <= k+1 range, from the
//! complete characterizations at k = 3 and k = 4, cross-checked against the
//! exhaustive oracle.
//!
//! Run with: cargo run --release --example leck_gaps

use antichain_spectra::{kk_min_shadow, leck_gap_predicate, sigma_bruteforce, LeckVerdict};

fn main() {
    for &(t, k) in &[(4u64, 3u64), (6, 3), (5, 4), (6, 4)] {
        let oracle = sigma_bruteforce(t, k, None).expect("small enough to enumerate");
        let floor = kk_min_shadow(t as u128, k as u32) as u64;
        let mut gaps = Vec::new();
        for s in 0..=t * k {
            let verdict = leck_gap_predicate(s, t, k);
            let member = oracle.contains(s as i64);
            match verdict {
                LeckVerdict::Gap => {
                    assert!(!member, "false gap at s={s}, t={t}, k={k}");
                    if s >= floor {
                        gaps.push(s);
                    }
                }
                LeckVerdict::Member => {
                    assert!(member, "false member at s={s}, t={t}, k={k}")
                }
                LeckVerdict::Unknown => {}
            }
        }
        let shown = if gaps.is_empty() {
            String::from("none")
        } else {
            gaps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
        };
        println!("sigma({t}, {k}) on [{floor}, {}]: interior gaps {shown}", t * k);
    }
}
