//! A concrete family of 12 fifty-sets whose shadow has exactly 558 elements,
//! one more than psi(50): the witness that 558 is attained.
//!
//! The family lives on the ground set [54] and its shadow size is recomputed
//! from scratch before printing.
//!
//! Run with: cargo run --release --example shadow_witness

use antichain_spectra::witness_family;

fn main() {
    let (s, t, k) = (558u64, 12u64, 50u64);
    let f = witness_family(s, t, k).expect("558 is in sigma(12, 50)");
    let shadow = f.shadow().expect("k >= 1");
    println!("family: {} {}-sets on [{}]", f.len(), f.k(), f.n());
    for set in f.sets() {
        println!("  {set}");
    }
    println!("recomputed |shadow| = {}", shadow.len());
    assert_eq!(shadow.len() as u64, s);
    println!("matches the requested size {s}");
}
