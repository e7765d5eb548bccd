//! psi(k) for 3 <= k <= 60, from the exact spectrum below k^2, next to the
//! closed form t*(k)·k - f(t*) - 1. The two agree on the whole range even
//! though the closed form is only proven from some point on.
//!
//! Run with: cargo run --release --example psi_scan

use antichain_spectra::psi;

fn main() {
    println!("{:>4} {:>6} {:>8} {:>12}", "k", "t*(k)", "psi(k)", "closed form");
    for k in 3..=60u64 {
        let r = psi(k).expect("k >= 3");
        let cf = r.closed_form();
        assert_eq!(cf, r.psi as i64, "closed form disagrees at k={k}");
        println!("{:>4} {:>6} {:>8} {:>12}", k, r.t_star, r.psi, cf);
    }
}
