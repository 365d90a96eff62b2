//! On-disk cache of orbits with their words. A stale or damaged entry is
//! recomputed and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Vector;
use crate::roots::RootSystem;
use crate::weyl::{orbit, Orbit, WeylWord};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct Entry {
    label: String,
    base: Vector,
    elements: Vec<Vector>,
    parent_words: Vec<WeylWord>,
    tool_version: String,
}

// FNV-1a, stable across builds unlike the std hasher.
fn fnv(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub fn entry_path(dir: &Path, sys: &RootSystem, base: &Vector) -> PathBuf {
    dir.join(format!("{}-{:016x}.json", sys.label(), fnv(&base.to_string())))
}

fn load(path: &Path, sys: &RootSystem, base: &Vector) -> Option<Orbit> {
    let entry: Entry = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if entry.label != sys.label().to_string()
        || &entry.base != base
        || entry.tool_version != TOOL_VERSION
        || entry.elements.len() != entry.parent_words.len()
    {
        return None;
    }
    let g = sys.simple_roots();
    for (x, w) in entry.elements.iter().zip(&entry.parent_words) {
        if w.apply(g, base).ok()? != *x {
            return None;
        }
    }
    Orbit::from_parts(base.clone(), entry.elements.into_iter().zip(entry.parent_words).collect()).ok()
}

/// The `W`-orbit of `base`, read from `dir` when a valid entry exists.
/// Returns the orbit and whether it came from the cache.
pub fn cached_orbit(dir: &Path, sys: &RootSystem, base: &Vector, cap: usize) -> Result<(Orbit, bool)> {
    let path = entry_path(dir, sys, base);
    if let Some(o) = load(&path, sys, base) {
        return Ok((o, true));
    }
    let o = orbit(sys.simple_roots(), base, cap)?;
    let entry = Entry {
        label: sys.label().to_string(),
        base: base.clone(),
        elements: o.words().keys().cloned().collect(),
        parent_words: o.words().values().cloned().collect(),
        tool_version: TOOL_VERSION.into(),
    };
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string(&entry)?)?;
    fs::rename(&tmp, &path).map_err(Error::Io)?;
    Ok((o, false))
}
