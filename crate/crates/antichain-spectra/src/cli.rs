//! Command-line front end: spectrum tables, witness emission, verification,
//! figure-data export, and brute-force cross-checks.
//!
//! Exit codes: 0 success, 2 unachievable or invalid request, 3 budget
//! refusal, 4 parse failure. Failures print a JSON object to stderr; stdout
//! carries data only, and identical invocations produce identical bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::intspec::IntSpectrum;
use crate::io::{mac_to_json, mac_to_text, parse_witness, shadow_witness_to_text, WitnessFile};
use crate::mac::{brute_S, construct_any_mac, phi, theorem1_member};
use crate::setfam::{is_maximal_antichain, ElementSet, UniformFamily, MAX_GROUND};
use crate::spectrum::{psi, sigma, sigma_bruteforce_opts, witness_family, ORACLE_BUDGET_DEFAULT};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    /// A uniform family with a prescribed shadow size.
    Shadow,
    /// A maximal antichain with a prescribed size.
    Mac,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Compare sigma(t, k) against exhaustive family enumeration.
    Sigma,
    /// Compare the size decisions for B_n against exhaustive antichain search.
    Sn,
}

#[derive(Copy, Clone, Debug)]
pub struct RangeArg {
    pub lo: u128,
    pub hi: u128,
}

fn parse_range(s: &str) -> std::result::Result<RangeArg, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u128 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: u128 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(RangeArg { lo, hi })
}

#[derive(Parser, Debug)]
#[command(
    name = "antichain-spectra",
    version,
    about = "Shadow spectra of uniform set families and maximal antichain sizes in the Boolean lattice"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the shadow spectra sigma(t, k) for t = 1..=t_max, one row per t
    Sigma {
        #[arg(long)]
        k: u64,
        /// Largest t to print (defaults to k+1, the characterized range)
        #[arg(long = "t")]
        t_max: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest shadow size missing from every sigma(t, k), with its threshold t*
    Psi {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest size that no maximal antichain in B_n attains
    Phi {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide for each m in a range whether B_n has a maximal antichain of size m
    Sn {
        #[arg(long)]
        n: u32,
        /// Inclusive size range lo..hi
        #[arg(long, value_parser = parse_range)]
        range: RangeArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a witness file after re-verifying it from scratch
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        /// Level of the family (shadow witnesses)
        #[arg(long)]
        k: Option<u64>,
        /// Number of sets in the family (shadow witnesses)
        #[arg(long)]
        t: Option<u64>,
        /// Ground set size (antichain witnesses)
        #[arg(long)]
        n: Option<u32>,
        /// Target value: shadow size or antichain size
        #[arg(long)]
        m: Option<u128>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every claim in a witness file and report pass/fail
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the spectra sigma(1..=14, 50) as plot-ready data
    Fig1 {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check closed forms against brute-force enumeration
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        n: Option<u32>,
        /// Enumeration work budget (node or family count)
        #[arg(long)]
        budget: Option<u128>,
        /// Worker threads for sharded enumeration (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: &Option<PathBuf>, data: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, data)?;
            Ok(())
        }
        None => {
            print!("{data}");
            Ok(())
        }
    }
}

fn spectrum_text(s: &IntSpectrum) -> String {
    if s.is_empty() {
        return "-".into();
    }
    s.runs()
        .iter()
        .map(|&(lo, hi)| if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn runs_json(s: &IntSpectrum) -> serde_json::Value {
    serde_json::json!(s.runs())
}

fn require<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Domain(format!("{what} needs {flag}")))
}

/// Rows of sigma(t, k) for t = 1..=t_max in the requested format.
pub fn run_sigma_table(k: u64, t_max: u64, format: Format) -> Result<String> {
    if t_max < 1 || t_max > k + 1 {
        return Err(Error::Domain(format!(
            "spectra are characterized for 1 <= t <= k+1 = {}; got t_max = {t_max}",
            k + 1
        )));
    }
    let mut rows = Vec::new();
    for t in 1..=t_max {
        rows.push((t, sigma(t, k)?));
    }
    let mut out = String::new();
    match format {
        Format::Csv => {
            for (_, s) in &rows {
                out.push_str(&s.to_csv_cell());
                out.push('\n');
            }
        }
        Format::Text => {
            for (_, s) in &rows {
                out.push_str(&spectrum_text(s));
                out.push('\n');
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(t, s)| serde_json::json!({"t": t, "runs": runs_json(s)}))
                .collect();
            let v = serde_json::json!({"k": k, "rows": rows});
            out = serde_json::to_string_pretty(&v).expect("table serializes");
            out.push('\n');
        }
    }
    Ok(out)
}

fn run_psi(k: u64, format: Format) -> Result<String> {
    let report = psi(k)?;
    Ok(match format {
        Format::Text => format!("psi({k})={}\nt_star({k})={}\n", report.psi, report.t_star),
        Format::Csv => format!("{k},{},{}\n", report.psi, report.t_star),
        Format::Json => {
            let v = serde_json::json!({"k": k, "psi": report.psi, "t_star": report.t_star});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
        }
    })
}

fn run_phi(n: u32, format: Format) -> Result<String> {
    let value = phi(n)?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("{n},{value}\n"),
        Format::Json => {
            let v = serde_json::json!({"n": n, "phi": value});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
        }
    })
}

/// Decides one size: "yes" (witness built), "no" (certified impossible), or
/// "unknown" (outside both the certified window and every construction).
fn sn_status(n: u32, m: u128) -> Result<&'static str> {
    if m == 0 {
        return Ok("no");
    }
    match theorem1_member(n, m) {
        Ok(true) => Ok("yes"),
        Ok(false) => Ok("no"),
        Err(Error::Range(_)) => match construct_any_mac(n, m) {
            Ok(_) => Ok("yes"),
            Err(Error::Budget { required, budget }) => Err(Error::Budget { required, budget }),
            Err(_) => Ok("unknown"),
        },
        Err(Error::Domain(_)) => Ok("no"),
        Err(e) => Err(e),
    }
}

fn run_sn(n: u32, range: RangeArg, format: Format) -> Result<String> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::Domain(format!("ground size {n} outside 1..=64")));
    }
    let mut rows = Vec::new();
    for m in range.lo..=range.hi {
        rows.push((m, sn_status(n, m)?));
    }
    let mut out = String::new();
    match format {
        Format::Csv => {
            for (m, s) in &rows {
                writeln!(out, "{m},{s}").expect("write to string");
            }
        }
        Format::Text => {
            for (m, s) in &rows {
                writeln!(out, "{m} {s}").expect("write to string");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(m, s)| serde_json::json!({"m": m, "status": s}))
                .collect();
            let v = serde_json::json!({"n": n, "lo": range.lo, "hi": range.hi, "sizes": rows});
            out = serde_json::to_string_pretty(&v).expect("report serializes");
            out.push('\n');
        }
    }
    Ok(out)
}

fn shadow_witness_json(f: &UniformFamily, shadow: u128) -> String {
    let sets: Vec<Vec<u32>> = f.sets().iter().map(|s| s.elements()).collect();
    let v = serde_json::json!({
        "n": f.n(),
        "k": f.k(),
        "t": f.len(),
        "shadow": shadow,
        "sets": sets,
    });
    format!("{}\n", serde_json::to_string_pretty(&v).expect("witness serializes"))
}

/// Builds the requested witness, re-verifies it from the raw sets, and
/// renders it; nothing is emitted unless the re-verification passes.
pub fn run_witness(
    kind: WitnessKind,
    k: Option<u64>,
    t: Option<u64>,
    n: Option<u32>,
    m: Option<u128>,
    format: Option<Format>,
) -> Result<String> {
    match kind {
        WitnessKind::Shadow => {
            let k = require(k, "--k", "a shadow witness")?;
            let t = require(t, "--t", "a shadow witness")?;
            let s = require(m, "--m", "a shadow witness")?;
            if s > u64::MAX as u128 {
                return Err(Error::Domain(format!("shadow size {s} out of range")));
            }
            let f = witness_family(s as u64, t, k)?;
            let recomputed = f.shadow()?.len() as u128;
            if recomputed != s || f.len() as u64 != t {
                return Err(Error::Domain(format!(
                    "re-verification failed: built family has {} sets and shadow {recomputed}",
                    f.len()
                )));
            }
            Ok(match format.unwrap_or(Format::Text) {
                Format::Json => shadow_witness_json(&f, s),
                _ => shadow_witness_to_text(&f, s),
            })
        }
        WitnessKind::Mac => {
            let n = require(n, "--n", "an antichain witness")?;
            let m = require(m, "--m", "an antichain witness")?;
            let w = construct_any_mac(n, m)?;
            let (antichain, maximal) = is_maximal_antichain(n, &w.all_sets())?;
            if !antichain || !maximal || w.size() != m {
                return Err(Error::Domain(
                    "re-verification failed: constructed witness does not check out".into(),
                ));
            }
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => format!("{}\n", mac_to_json(&w)),
                _ => mac_to_text(&w),
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub claims: Vec<ClaimReport>,
}

impl VerifyReport {
    fn add(&mut self, name: &'static str, pass: bool, detail: String) {
        self.claims.push(ClaimReport { name, pass, detail });
    }

    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Recomputes every claim carried by a parsed witness file.
pub fn verify_claims(w: &WitnessFile) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if w.n == 0 || w.n > MAX_GROUND {
        report.add("ground", false, format!("ground size {} outside 1..=64", w.n));
        return Ok(report);
    }
    let full = ElementSet::full(w.n);
    let stray: Vec<String> = w
        .sets
        .iter()
        .filter(|s| !s.is_subset_of(full))
        .map(|s| s.to_string())
        .collect();
    report.add(
        "ground",
        stray.is_empty(),
        if stray.is_empty() {
            format!("{} sets inside [{}]", w.sets.len(), w.n)
        } else {
            format!("sets outside [{}]: {}", w.n, stray.join(" "))
        },
    );
    let mut sorted = w.sets.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let distinct = sorted.len() == w.sets.len();
    report.add(
        "distinct",
        distinct,
        format!("{} listed, {} distinct", w.sets.len(), sorted.len()),
    );
    if let Some(levels) = &w.levels {
        let mislabeled: Vec<String> = levels
            .iter()
            .flat_map(|(k, sets)| {
                sets.iter()
                    .filter(move |s| s.len() != *k)
                    .map(move |s| format!("{s} under level {k}"))
            })
            .collect();
        report.add(
            "levels",
            mislabeled.is_empty(),
            if mislabeled.is_empty() {
                format!("{} level labels consistent", levels.len())
            } else {
                mislabeled.join("; ")
            },
        );
    }
    if let Some(k) = w.claimed_k {
        let uniform = w.sets.iter().all(|s| s.len() == k);
        report.add("uniform", uniform, format!("claimed level {k}"));
    }
    if let Some(t) = w.claimed_t {
        let ok = w.sets.len() as u128 == t;
        report.add("count", ok, format!("claimed {t}, found {}", w.sets.len()));
    }
    if let Some(claimed) = w.claimed_shadow {
        let k = w.claimed_k.unwrap_or_else(|| w.sets.first().map_or(0, |s| s.len()));
        let uniform = k > 0 && w.sets.iter().all(|s| s.len() == k);
        if !uniform {
            report.add("shadow", false, "family is not uniform, shadow undefined".into());
        } else {
            match UniformFamily::new(w.n, k, sorted.clone()) {
                Ok(f) => {
                    let got = f.shadow()?.len() as u128;
                    report.add(
                        "shadow",
                        got == claimed,
                        format!("claimed {claimed}, recomputed {got}"),
                    );
                }
                Err(e) => report.add("shadow", false, e.to_string()),
            }
        }
    }
    if let Some(size) = w.claimed_size {
        let ok = sorted.len() as u128 == size;
        report.add("size", ok, format!("claimed {size}, found {} distinct sets", sorted.len()));
    }
    if w.is_mac() && stray.is_empty() {
        let (antichain, maximal) = is_maximal_antichain(w.n, &sorted)?;
        report.add(
            "antichain",
            antichain,
            if antichain { "no set contains another".into() } else { "comparable pair found".into() },
        );
        if let Some(claimed) = w.claimed_maximal {
            report.add(
                "maximal",
                antichain && maximal == claimed,
                format!("claimed {claimed}, recomputed {maximal}"),
            );
        } else {
            report.add("maximal", antichain && maximal, format!("recomputed {maximal}"));
        }
    }
    Ok(report)
}

fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in &report.claims {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", c.name, c.detail).expect("write to string");
            }
            writeln!(out, "result: {}", if report.pass() { "pass" } else { "fail" })
                .expect("write to string");
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for c in &report.claims {
                writeln!(out, "{},{}", c.name, c.pass).expect("write to string");
            }
            out
        }
        Format::Json => {
            let claims: Vec<serde_json::Value> = report
                .claims
                .iter()
                .map(|c| serde_json::json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                .collect();
            let v = serde_json::json!({"pass": report.pass(), "claims": claims});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
        }
    }
}

/// Parses a witness file, recomputes its claims, and renders the report.
pub fn run_verify(path: &PathBuf, format: Format) -> Result<(String, bool)> {
    let content = std::fs::read_to_string(path)?;
    let parsed = parse_witness(&content)?;
    let report = verify_claims(&parsed)?;
    Ok((render_verify(&report, format), report.pass()))
}

fn run_fig1(format: Format) -> Result<String> {
    let k = 50u64;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("t,lo,hi\n");
            for t in 1..=14u64 {
                for &(lo, hi) in sigma(t, k)?.runs() {
                    writeln!(out, "{t},{lo},{hi}").expect("write to string");
                }
            }
        }
        Format::Text => {
            for t in 1..=14u64 {
                writeln!(out, "t={t}: {}", spectrum_text(&sigma(t, k)?)).expect("write to string");
            }
        }
        Format::Json => {
            let mut spectra = Vec::new();
            for t in 1..=14u64 {
                spectra.push(serde_json::json!({"t": t, "runs": runs_json(&sigma(t, k)?)}));
            }
            let v = serde_json::json!({"k": k, "spectra": spectra});
            out = serde_json::to_string_pretty(&v).expect("table serializes");
            out.push('\n');
        }
    }
    Ok(out)
}

fn run_oracle(
    kind: OracleKind,
    k: Option<u64>,
    t: Option<u64>,
    n: Option<u32>,
    budget: Option<u128>,
    jobs: usize,
    format: Format,
) -> Result<String> {
    match kind {
        OracleKind::Sigma => {
            let k = require(k, "--k", "the sigma oracle")?;
            let t = require(t, "--t", "the sigma oracle")?;
            let closed = sigma(t, k)?;
            eprintln!("enumerating {t}-set families at level {k}...");
            let brute = sigma_bruteforce_opts(
                t,
                k,
                None,
                budget.unwrap_or(ORACLE_BUDGET_DEFAULT),
                jobs,
            )?;
            let agree = closed == brute;
            let out = match format {
                Format::Json => {
                    let v = serde_json::json!({
                        "kind": "sigma", "t": t, "k": k, "agree": agree,
                        "closed": runs_json(&closed), "enumerated": runs_json(&brute),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
                }
                _ => format!(
                    "sigma({t},{k}) closed: {}\nsigma({t},{k}) enumerated: {}\nagree: {agree}\n",
                    spectrum_text(&closed),
                    spectrum_text(&brute)
                ),
            };
            if !agree {
                print!("{out}");
                return Err(Error::Domain(format!(
                    "closed form disagrees with enumeration for sigma({t},{k})"
                )));
            }
            Ok(out)
        }
        OracleKind::Sn => {
            let n = require(n, "--n", "the antichain oracle")?;
            eprintln!("enumerating antichains of B_{n}...");
            let brute = brute_S(n, budget)?;
            let top = binom(n as u64, (n as u64 + 1) / 2);
            let mut contradictions = Vec::new();
            let mut unknown = 0u64;
            for m in 1..=top {
                let status = sn_status(n, m)?;
                let member = brute.contains(m as i64);
                match (status, member) {
                    ("yes", false) => contradictions.push(format!("{m}: constructed but not found")),
                    ("no", true) => contradictions.push(format!("{m}: certified out but found")),
                    ("unknown", _) => unknown += 1,
                    _ => {}
                }
            }
            let agree = contradictions.is_empty();
            let out = match format {
                Format::Json => {
                    let v = serde_json::json!({
                        "kind": "sn", "n": n, "agree": agree, "unknown": unknown,
                        "sizes": runs_json(&brute),
                        "contradictions": contradictions,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
                }
                _ => format!(
                    "S({n}) enumerated: {}\nundecided sizes: {unknown}\nagree: {agree}\n{}",
                    spectrum_text(&brute),
                    contradictions.join("\n")
                ),
            };
            if !agree {
                print!("{out}");
                return Err(Error::Domain(format!(
                    "size decisions contradict exhaustive search for B_{n}"
                )));
            }
            Ok(out)
        }
    }
}

/// Dispatches a parsed command line; errors carry the process exit code.
pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sigma { k, t_max, format, out } => {
            let data = run_sigma_table(k, t_max.unwrap_or(k + 1), format)?;
            emit(&out, &data)
        }
        Command::Psi { k, format, out } => {
            let data = run_psi(k, format)?;
            emit(&out, &data)
        }
        Command::Phi { n, format, out } => {
            let data = run_phi(n, format)?;
            emit(&out, &data)
        }
        Command::Sn { n, range, format, out } => {
            let data = run_sn(n, range, format)?;
            emit(&out, &data)
        }
        Command::Witness { kind, k, t, n, m, format, out } => {
            let data = run_witness(kind, k, t, n, m, format)?;
            emit(&out, &data)
        }
        Command::Verify { path, format, out } => {
            let (data, pass) = run_verify(&path, format)?;
            emit(&out, &data)?;
            if !pass {
                return Err(Error::NotAchievable("witness verification failed".into()));
            }
            Ok(())
        }
        Command::Fig1 { format, out } => {
            let data = run_fig1(format)?;
            emit(&out, &data)
        }
        Command::Oracle { kind, k, t, n, budget, jobs, format, out } => {
            let data = run_oracle(kind, k, t, n, budget, jobs, format)?;
            emit(&out, &data)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_table_rows() {
        let rows = run_sigma_table(50, 14, Format::Csv).unwrap();
        let lines: Vec<&str> = rows.lines().collect();
        assert_eq!(lines.len(), 14);
        assert_eq!(lines[11], "534,534;544,545;552,555;558,600");
        let single = run_sigma_table(5, 1, Format::Text).unwrap();
        assert_eq!(single, "5\n");
        assert!(matches!(run_sigma_table(4, 6, Format::Csv), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_row() {
        assert_eq!(run_psi(50, Format::Csv).unwrap(), "50,557,12\n");
    }

    #[test]
    fn phi_row() {
        assert_eq!(run_phi(6, Format::Text).unwrap(), "16\n");
        assert_eq!(run_phi(9, Format::Csv).unwrap(), "9,120\n");
    }

    #[test]
    fn sn_statuses() {
        let rows = run_sn(6, RangeArg { lo: 14, hi: 18 }, Format::Csv).unwrap();
        assert_eq!(rows, "14,yes\n15,yes\n16,no\n17,yes\n18,no\n");
    }

    #[test]
    fn witness_round_trips_through_verify() {
        let shadow = run_witness(
            WitnessKind::Shadow,
            Some(50),
            Some(12),
            None,
            Some(558),
            None,
        )
        .unwrap();
        let parsed = parse_witness(&shadow).unwrap();
        let report = verify_claims(&parsed).unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!(parsed.claimed_t, Some(12));
        assert_eq!(parsed.claimed_shadow, Some(558));
        assert!(parsed.sets.iter().all(|s| s.len() == 50));

        let mac = run_witness(WitnessKind::Mac, None, None, Some(9), Some(101), None).unwrap();
        let report = verify_claims(&parse_witness(&mac).unwrap()).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn witness_mac_failure_names_the_gap() {
        let err = run_witness(WitnessKind::Mac, None, None, Some(9), Some(120), None).unwrap_err();
        match err {
            Error::NotAchievable(msg) => assert!(msg.contains("certified non-size"), "{msg}"),
            other => panic!("expected NotAchievable, got {other}"),
        }
    }

    #[test]
    fn verify_catches_a_removed_set() {
        let shadow = run_witness(
            WitnessKind::Shadow,
            Some(6),
            Some(3),
            None,
            Some(16),
            None,
        )
        .unwrap();
        let mut lines: Vec<&str> = shadow.lines().collect();
        lines.pop();
        let broken = lines.join("\n");
        let report = verify_claims(&parse_witness(&broken).unwrap()).unwrap();
        assert!(!report.pass());
        let failed: Vec<&str> = report
            .claims
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        assert!(failed.contains(&"count") || failed.contains(&"shadow"), "{failed:?}");
    }

    #[test]
    fn verify_passes_stored_fixture() {
        let mac = run_witness(WitnessKind::Mac, None, None, Some(6), Some(9), None).unwrap();
        let report = verify_claims(&parse_witness(&mac).unwrap()).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn fig1_has_all_rows() {
        let csv = run_fig1(Format::Csv).unwrap();
        assert!(csv.starts_with("t,lo,hi\n"));
        assert!(csv.contains("12,534,534"));
        assert!(csv.contains("12,558,600"));
        let text = run_fig1(Format::Text).unwrap();
        assert_eq!(text.lines().count(), 14);
        assert!(text.starts_with("t=1: 50\n"));
    }

    #[test]
    fn oracle_sigma_small() {
        let out = run_oracle(
            OracleKind::Sigma,
            Some(3),
            Some(2),
            None,
            None,
            1,
            Format::Text,
        )
        .unwrap();
        assert!(out.contains("agree: true"));
    }

    #[test]
    fn oracle_sn_small() {
        let out = run_oracle(OracleKind::Sn, None, None, Some(4), None, 1, Format::Text).unwrap();
        assert!(out.contains("agree: true"), "{out}");
        assert!(out.contains("undecided sizes: 0"), "{out}");
    }

    #[test]
    fn byte_determinism() {
        let a = run_sigma_table(12, 13, Format::Json).unwrap();
        let b = run_sigma_table(12, 13, Format::Json).unwrap();
        assert_eq!(a, b);
        let w1 = run_witness(WitnessKind::Mac, None, None, Some(8), Some(58), None).unwrap();
        let w2 = run_witness(WitnessKind::Mac, None, None, Some(8), Some(58), None).unwrap();
        assert_eq!(w1, w2);
    }
}
