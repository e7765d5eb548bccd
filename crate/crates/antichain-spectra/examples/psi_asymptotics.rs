//! Convergence of psi(k) to its asymptotic form sqrt(2) k^{3/2} + 8^{1/4} k^{5/4}.
//!
//! Prints the normalized error |psi(k) - asymptote| / k for doubling k, which
//! should stay bounded and shrink as k grows.
//!
//! Run with: cargo run --release --example psi_asymptotics

use antichain_spectra::{psi, psi_asymptotic};

fn main() {
    println!("{:>8} {:>14} {:>16} {:>12}", "k", "psi(k)", "asymptote", "error/k");
    let mut k = 256u64;
    while k <= 16384 {
        let report = psi(k).expect("k is large enough");
        let approx = psi_asymptotic(k);
        let err = (report.psi as f64 - approx).abs() / k as f64;
        println!("{:>8} {:>14} {:>16.2} {:>12.6}", k, report.psi, approx, err);
        k *= 2;
    }
}
