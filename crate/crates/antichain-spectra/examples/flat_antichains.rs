//! Flat maximal antichains on levels 3, 2 of B_6 in which every 3-set
//! contains {1, 2}: one witness per achievable size 10..=13, each verified
//! by an explicit scan.
//!
//! Run with: cargo run --release --example flat_antichains

use antichain_spectra::{is_maximal_antichain, separated_antichain};

fn main() {
    for m in 10..=13u128 {
        let w = separated_antichain(6, 3, m).expect("the window at (6, 3) is [10, 13]");
        let (anti, maximal) = is_maximal_antichain(6, &w.all_sets()).expect("n fits the scanner");
        assert!(anti && maximal);
        println!("size {m}:");
        for (k, sets) in w.levels() {
            let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
            println!("  level {k}: {}", shown.join(" "));
        }
    }
}
