//! The shadow spectrum sigma(t, 50) near the threshold t*(50), as interval
//! unions, together with t*(50) and psi(50).
//!
//! Run with: cargo run --release --example sigma_table

use antichain_spectra::{psi, sigma};

fn main() {
    for t in 10..=14u64 {
        let spec = sigma(t, 50).expect("t <= k+1");
        let runs: Vec<String> = spec
            .runs()
            .iter()
            .map(|(lo, hi)| if lo == hi { format!("{{{lo}}}") } else { format!("[{lo},{hi}]") })
            .collect();
        println!("sigma({t:>2}, 50) = {}", runs.join(" u "));
    }
    let report = psi(50).expect("psi is defined for k >= 3");
    println!();
    println!("t*(50)  = {}", report.t_star);
    println!("psi(50) = {} (largest shadow size no family attains)", report.psi);
}
