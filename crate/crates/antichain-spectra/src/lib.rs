#![forbid(unsafe_code)]

//! Exact combinatorics of shadow spectra and maximal antichain sizes in the
//! Boolean lattice.
//!
//! The crate answers two families of questions with verifiable witnesses:
//!
//! * Which shadow sizes can a t-element k-uniform family attain? See
//!   [`sigma`], [`witness_family`], [`psi`], and the Kruskal-Katona helpers
//!   in [`kk`].
//! * Which sizes can a maximal antichain in B_n attain? See
//!   [`theorem1_member`], [`construct_any_mac`], [`phi`], and the exhaustive
//!   oracle [`brute_S`].
//!
//! Everything is exact integer arithmetic; every witness can be re-verified
//! from its raw sets.

pub mod binom;
pub mod cli;
pub mod error;
pub mod intspec;
pub mod io;
pub mod kk;
pub mod mac;
pub mod setfam;
pub mod spectrum;

pub use binom::{binom, binom_i, binom_real, checked_binom};
pub use error::{Error, Result};
pub use intspec::IntSpectrum;
pub use kk::{cascade, kk_min_shadow, lovasz_bound, min_squashed_flat_size, Cascade};
pub use mac::{
    brute_S, chain_witness, construct_any_mac, construct_large_mac, construct_mid_mac,
    enumerate_Y, full_level_witness, interval_Ink, interval_Ink_closed, lift_antichain,
    mac_from_family, missing_size_witness, phi, separated_antichain, theorem1_member, w_fn,
    witness_flat_range, LiftMode, MacWitness, YEntry, YTable,
};
pub use setfam::{
    enumerate_uniform_families, is_maximal_antichain, squash_prefix, squash_rank, squash_unrank,
    ElementSet, UniformFamily, MAX_GROUND,
};
pub use spectrum::{
    big_sigma, f_cap, glued_family, jstar, leck_gap_predicate, psi, psi_asymptotic, set_I, sigma,
    sigma_bruteforce, star_family, witness_family, GluedSpec, LeckVerdict, PsiReport, StarSpec,
};
