//! phi(n), the smallest size no maximal antichain in B_n attains, for
//! n <= 20, next to the certified near-top non-size from the gap formula.
//!
//! Run with: cargo run --release --example phi_table

use antichain_spectra::{missing_size_witness, phi, theorem1_member};

fn main() {
    println!("{:>3} {:>16} {:>20}", "n", "phi(n)", "near-top non-size");
    for n in 1..=20u32 {
        let p = phi(n).expect("n >= 1");
        let near = if n >= 7 {
            let w = missing_size_witness(n).expect("the gap formula certifies itself");
            assert!(!theorem1_member(n, w).expect("membership is decidable here"));
            w.to_string()
        } else {
            String::from("-")
        };
        println!("{:>3} {:>16} {:>20}", n, p, near);
    }
}
