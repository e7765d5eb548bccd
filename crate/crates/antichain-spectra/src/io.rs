//! Witness file serialization.
//!
//! Two formats are supported and detected automatically:
//!
//! * plain text: `key=value` header lines followed by one set per line,
//!   elements comma-separated ascending. The header `n=<n>` is required;
//!   optional headers `k`, `t`, `shadow`, `size`, `maximal` carry claims
//!   that verification rechecks.
//! * JSON: `{"n": n, "levels": {"k": [[elements...], ...]}, "size": m,
//!   "maximal": bool}` for antichain witnesses, or `{"n": n, "k": k,
//!   "t": t, "shadow": s, "sets": [[elements...], ...]}` for shadow
//!   witnesses.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::mac::MacWitness;
use crate::setfam::{ElementSet, UniformFamily};

/// A parsed witness file. Claims are carried verbatim; nothing is verified
/// at parse time beyond well-formedness.
#[derive(Clone, Debug, Default)]
pub struct WitnessFile {
    pub n: u32,
    pub sets: Vec<ElementSet>,
    /// Level labels from the JSON format, if that is what was read.
    pub levels: Option<BTreeMap<u32, Vec<ElementSet>>>,
    pub claimed_k: Option<u32>,
    pub claimed_t: Option<u128>,
    pub claimed_shadow: Option<u128>,
    pub claimed_size: Option<u128>,
    pub claimed_maximal: Option<bool>,
}

impl WitnessFile {
    /// True when the file carries antichain claims rather than family ones.
    pub fn is_mac(&self) -> bool {
        self.levels.is_some() || self.claimed_size.is_some() || self.claimed_maximal.is_some()
    }
}

fn parse_set_line(line: &str) -> Result<ElementSet> {
    let mut elements = Vec::new();
    for part in line.split(',') {
        let part = part.trim();
        let e: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {part:?} in set line {line:?}")))?;
        elements.push(e);
    }
    for w in elements.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Parse(format!("elements not strictly ascending in {line:?}")));
        }
    }
    ElementSet::from_elements(&elements).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_text(content: &str) -> Result<WitnessFile> {
    let mut out = WitnessFile::default();
    let mut have_n = false;
    for line in content.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            let bad = |what: &str| Error::Parse(format!("bad {what} header value {value:?}"));
            match key.trim() {
                "n" => {
                    out.n = value.trim().parse().map_err(|_| bad("n"))?;
                    have_n = true;
                }
                "k" => out.claimed_k = Some(value.trim().parse().map_err(|_| bad("k"))?),
                "t" => out.claimed_t = Some(value.trim().parse().map_err(|_| bad("t"))?),
                "shadow" => {
                    out.claimed_shadow = Some(value.trim().parse().map_err(|_| bad("shadow"))?)
                }
                "size" => out.claimed_size = Some(value.trim().parse().map_err(|_| bad("size"))?),
                "maximal" => {
                    out.claimed_maximal = Some(value.trim().parse().map_err(|_| bad("maximal"))?)
                }
                other => {
                    return Err(Error::Parse(format!("unknown header key {other:?}")));
                }
            }
            continue;
        }
        out.sets.push(parse_set_line(line)?);
    }
    if !have_n {
        return Err(Error::Parse("missing required header n=<n>".into()));
    }
    Ok(out)
}

#[derive(Deserialize)]
struct WitnessJson {
    n: u32,
    #[serde(default)]
    levels: Option<BTreeMap<String, Vec<Vec<u32>>>>,
    #[serde(default)]
    sets: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    k: Option<u32>,
    #[serde(default)]
    t: Option<u128>,
    #[serde(default)]
    shadow: Option<u128>,
    #[serde(default)]
    size: Option<u128>,
    #[serde(default)]
    maximal: Option<bool>,
}

fn parse_json(content: &str) -> Result<WitnessFile> {
    let raw: WitnessJson =
        serde_json::from_str(content).map_err(|e| Error::Parse(format!("bad witness JSON: {e}")))?;
    let mut sets = Vec::new();
    let levels = match raw.levels {
        Some(raw_levels) => {
            let mut levels: BTreeMap<u32, Vec<ElementSet>> = BTreeMap::new();
            for (key, level_sets) in raw_levels {
                let k: u32 = key
                    .parse()
                    .map_err(|_| Error::Parse(format!("level label {key:?} is not an integer")))?;
                let mut parsed = Vec::new();
                for elements in level_sets {
                    let s = ElementSet::from_elements(&elements)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    parsed.push(s);
                }
                sets.extend(parsed.iter().copied());
                levels.insert(k, parsed);
            }
            Some(levels)
        }
        None => {
            let flat = raw
                .sets
                .ok_or_else(|| Error::Parse("witness JSON needs either levels or sets".into()))?;
            for elements in flat {
                let s = ElementSet::from_elements(&elements)
                    .map_err(|e| Error::Parse(e.to_string()))?;
                sets.push(s);
            }
            None
        }
    };
    Ok(WitnessFile {
        n: raw.n,
        sets,
        levels,
        claimed_k: raw.k,
        claimed_t: raw.t,
        claimed_shadow: raw.shadow,
        claimed_size: raw.size,
        claimed_maximal: raw.maximal,
    })
}

/// Parses either witness format, detected by a leading `{`.
pub fn parse_witness(content: &str) -> Result<WitnessFile> {
    if content.trim_start().starts_with('{') {
        parse_json(content)
    } else {
        parse_text(content)
    }
}

fn push_set_lines(out: &mut String, sets: &[ElementSet]) {
    for s in sets {
        let elements: Vec<String> = s.elements().iter().map(u32::to_string).collect();
        out.push_str(&elements.join(","));
        out.push('\n');
    }
}

/// Text form of a shadow witness: the family plus its claimed shadow size.
pub fn shadow_witness_to_text(f: &UniformFamily, shadow: u128) -> String {
    let mut out = String::new();
    out.push_str(&format!("n={}\n", f.n()));
    out.push_str(&format!("k={}\n", f.k()));
    out.push_str(&format!("t={}\n", f.len()));
    out.push_str(&format!("shadow={shadow}\n"));
    push_set_lines(&mut out, f.sets());
    out
}

/// Text form of an antichain witness.
pub fn mac_to_text(w: &MacWitness) -> String {
    let mut out = String::new();
    out.push_str(&format!("n={}\n", w.n()));
    out.push_str(&format!("size={}\n", w.size()));
    out.push_str(&format!("maximal={}\n", w.maximal()));
    for sets in w.levels().values() {
        push_set_lines(&mut out, sets);
    }
    out
}

/// JSON form of an antichain witness; keys and sets are emitted in a fixed
/// order so identical witnesses serialize byte-identically.
pub fn mac_to_json(w: &MacWitness) -> String {
    let mut levels = serde_json::Map::new();
    for (k, sets) in w.levels() {
        let arr: Vec<serde_json::Value> = sets
            .iter()
            .map(|s| serde_json::json!(s.elements()))
            .collect();
        levels.insert(k.to_string(), serde_json::Value::Array(arr));
    }
    let value = serde_json::json!({
        "n": w.n(),
        "levels": levels,
        "size": w.size(),
        "maximal": w.maximal(),
    });
    serde_json::to_string_pretty(&value).expect("witness JSON serializes")
}
