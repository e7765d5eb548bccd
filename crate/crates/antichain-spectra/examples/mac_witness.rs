//! A maximal antichain of size 101 in B_9, verified by an explicit scan, and
//! its complementary antichain of the same size.
//!
//! Run with: cargo run --release --example mac_witness

use antichain_spectra::{construct_any_mac, is_maximal_antichain};

fn main() {
    let w = construct_any_mac(9, 101).expect("101 is an achievable size in B_9");
    println!("maximal antichain of size {} in B_{}:", w.size(), w.n());
    for (k, sets) in w.levels() {
        println!("  level {k}: {} sets", sets.len());
    }
    let (anti, maximal) = is_maximal_antichain(9, &w.all_sets()).expect("n fits the scanner");
    assert!(anti && maximal);
    println!("explicit scan: antichain and maximal");

    let c = w.complement();
    println!("\ncomplement (X -> [9] \\ X), size {}:", c.size());
    for (k, sets) in c.levels() {
        println!("  level {k}: {} sets", sets.len());
    }
    let (anti, maximal) = is_maximal_antichain(9, &c.all_sets()).expect("n fits the scanner");
    assert!(anti && maximal);
    println!("explicit scan: antichain and maximal");
}
