//! The maximal squashed flat antichains on levels 5, 4 of B_10: how many
//! k-set prefixes complete to maximal antichains, which sizes they produce,
//! and the guaranteed interval I(10, 5) after the three-level repair.
//!
//! Run with: cargo run --release --example y_table

use antichain_spectra::{enumerate_Y, interval_Ink};

fn main() {
    let table = enumerate_Y(10, 5).expect("floor(n/2) <= k <= n-3");
    println!(
        "Y(10, 5): {} maximal squashed prefixes, sizes {}..{}",
        table.entries.len(),
        table.sizes.min().unwrap(),
        table.sizes.max().unwrap()
    );
    for e in table.entries.iter().take(8) {
        println!("  {:>3} five-sets -> size {}", e.ksets, e.size);
    }
    if table.entries.len() > 8 {
        println!("  ... {} more", table.entries.len() - 8);
    }
    let runs: Vec<String> =
        table.sizes.runs().iter().map(|(lo, hi)| format!("[{lo},{hi}]")).collect();
    println!("size spectrum: {}", runs.join(" u "));

    let (lo, hi) = interval_Ink(10, 5).expect("n >= 7");
    println!("I(10, 5) = [{lo}, {hi}]");
}
