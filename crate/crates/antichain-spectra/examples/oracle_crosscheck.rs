//! The interval description of sigma(t, k) against the exhaustive oracle
//! that enumerates every t-element k-uniform family on [k+4], for each small
//! (t, k) the oracle can finish.
//!
//! Run with: cargo run --release --example oracle_crosscheck

use antichain_spectra::{sigma, sigma_bruteforce};

fn main() {
    for k in 2..=4u64 {
        for t in 1..=k + 1 {
            let fast = sigma(t, k).expect("t <= k+1");
            let brute = sigma_bruteforce(t, k, None).expect("ground [k+4] fits the budget");
            assert_eq!(fast, brute, "mismatch at t={t}, k={k}");
            println!(
                "sigma({t}, {k}): {} sizes in {} runs, oracle agrees",
                fast.count(),
                fast.runs().len()
            );
        }
    }
}
