//! S(6) by exhaustive search over all antichains of B_6, against the
//! membership test for every candidate size. The first hole is phi(6) = 16.
//!
//! Run with: cargo run --release --example brute_spectrum

use antichain_spectra::{brute_S, phi, theorem1_member};

fn main() {
    let s6 = brute_S(6, None).expect("B_6 fits the default budget");
    let runs: Vec<String> = s6
        .runs()
        .iter()
        .map(|(lo, hi)| if lo == hi { format!("{{{lo}}}") } else { format!("[{lo},{hi}]") })
        .collect();
    println!("S(6) = {}", runs.join(" u "));
    println!("phi(6) = {}", phi(6).expect("n >= 1"));
    // the near-top test decides sizes from binom(6,3) - 3^2 = 11 up
    for m in 11..=20u128 {
        let member = theorem1_member(6, m).expect("m is in the decidable window");
        assert_eq!(member, s6.contains(m as i64), "membership test broke at m={m}");
        let mark = if member { "achievable" } else { "missing" };
        println!("  m={m:>2}: {mark}");
    }
}
