//! Minimum shadow sizes: the cascade representation of t, the exact
//! Kruskal-Katona minimum it yields, and the Lovász lower bound, for a few
//! (t, k). The colex prefix of length t attains the exact value.
//!
//! Run with: cargo run --release --example kk_bounds

use antichain_spectra::{cascade, kk_min_shadow, lovasz_bound, squash_prefix, UniformFamily};

fn main() {
    println!("{:>6} {:>3} {:>24} {:>8} {:>10}", "t", "k", "cascade", "exact", "lovasz");
    for &(t, k) in &[(10u128, 3u32), (17, 5), (35, 4), (100, 6), (1000, 8)] {
        let c = cascade(t, k);
        let terms: Vec<String> =
            c.terms.iter().map(|(a, i)| format!("C({a},{i})")).collect();
        let exact = kk_min_shadow(t, k);
        let lov = lovasz_bound(t, k);
        assert!(lov <= exact as f64 + 1e-9);
        println!("{:>6} {:>3} {:>24} {:>8} {:>10.3}", t, k, terms.join("+"), exact, lov);
    }

    // the prefix of the first 17 five-sets in colex order realizes the bound
    let prefix = squash_prefix(5, 17).expect("17 five-sets exist");
    let n = prefix.iter().map(|s| s.max_element().unwrap()).max().unwrap();
    let f = UniformFamily::new(n, 5, prefix).expect("prefix is duplicate-free");
    assert_eq!(f.shadow().expect("k >= 1").len() as u128, kk_min_shadow(17, 5));
    println!("\ncolex prefix of 17 five-sets: |shadow| = {}", kk_min_shadow(17, 5));
}
