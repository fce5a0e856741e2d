//! One JSON file per (name, normalization); a stored series serves every
//! request up to its order. Writes go through a temp file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use q_forms::Normalization;
use serde_json::{json, Value};
use series_core::json::{frac_from_json, frac_to_json};
use series_core::{FracSeries, Rational};

pub const SCHEMA_VERSION: u64 = 1;
const SUFFIX: &str = ".mc.json";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub name: String,
    pub order: usize,
    pub e3_denominator: i64,
    pub path: PathBuf,
}

/// Outcome of a lookup, kept for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Missing,
    TooShort,
    Invalid,
}

pub struct Cache {
    dir: PathBuf,
}

/// Flag, then the MIRRORCAYLEY_CACHE variable (both via clap), then the
/// platform cache directory.
pub fn default_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("mirrorcayley");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("mirrorcayley");
    }
    std::env::temp_dir().join("mirrorcayley")
}

fn file_stem(name: &str, norm: Normalization) -> String {
    let safe: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{safe}.e3-{}", norm.e3_denominator)
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, name: &str, norm: Normalization) -> PathBuf {
        self.dir.join(format!("{}{SUFFIX}", file_stem(name, norm)))
    }

    pub fn load(&self, name: &str, order: usize, norm: Normalization) -> (Lookup, Option<FracSeries<Rational>>) {
        let Ok(text) = fs::read_to_string(self.path(name, norm)) else {
            return (Lookup::Missing, None);
        };
        let parsed = serde_json::from_str::<Value>(&text).ok().and_then(|v| {
            let ok = v["schema"].as_u64() == Some(SCHEMA_VERSION)
                && v["name"].as_str() == Some(name)
                && v["e3_denominator"].as_i64() == Some(norm.e3_denominator);
            if !ok {
                return None;
            }
            let stored = v["order"].as_u64()? as usize;
            let s = frac_from_json::<Rational>(&v["series"]).ok()?;
            Some((stored, s))
        });
        match parsed {
            None => (Lookup::Invalid, None),
            Some((stored, _)) if stored < order => (Lookup::TooShort, None),
            Some((_, s)) => {
                let cut = s.with_body_trunc(order.min(s.body().trunc()));
                (Lookup::Hit, Some(cut))
            }
        }
    }

    pub fn store(&self, name: &str, order: usize, norm: Normalization, s: &FracSeries<Rational>) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let payload = json!({
            "schema": SCHEMA_VERSION,
            "name": name,
            "e3_denominator": norm.e3_denominator,
            "order": order,
            "series": frac_to_json(s),
        });
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(payload.to_string().as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(name, norm)).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn list(&self) -> std::io::Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        let Ok(rd) = fs::read_dir(&self.dir) else {
            return Ok(out);
        };
        for e in rd {
            let path = e?.path();
            if !path.to_string_lossy().ends_with(SUFFIX) {
                continue;
            }
            let Some(v) = fs::read_to_string(&path).ok().and_then(|t| serde_json::from_str::<Value>(&t).ok()) else {
                continue;
            };
            if let (Some(name), Some(order), Some(d)) = (v["name"].as_str(), v["order"].as_u64(), v["e3_denominator"].as_i64()) {
                out.push(CacheEntry { name: name.into(), order: order as usize, e3_denominator: d, path });
            }
        }
        out.sort_by(|a, b| (&a.name, a.e3_denominator).cmp(&(&b.name, b.e3_denominator)));
        Ok(out)
    }

    /// Removes every cache file; returns how many.
    pub fn clear(&self) -> std::io::Result<usize> {
        let mut n = 0;
        let Ok(rd) = fs::read_dir(&self.dir) else {
            return Ok(0);
        };
        for e in rd {
            let path = e?.path();
            if path.to_string_lossy().ends_with(SUFFIX) {
                fs::remove_file(path)?;
                n += 1;
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::{rat, PowerSeries};

    fn series(order: usize) -> FracSeries<Rational> {
        let coeffs: Vec<Rational> = (0..=order).map(|n| rat(n as i64 + 1, 3)).collect();
        FracSeries::new(rat(1, 3), PowerSeries::new("q", coeffs, order))
    }

    #[test]
    fn round_trip_and_truncation() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::new(d.path());
        let n = Normalization::default();
        c.store("C3", 8, n, &series(8)).unwrap();
        let (l, s) = c.load("C3", 8, n);
        assert_eq!(l, Lookup::Hit);
        assert_eq!(s.unwrap(), series(8));
        assert_eq!(c.load("C3", 5, n).1.unwrap(), series(5));
        assert_eq!(c.load("C3", 9, n).0, Lookup::TooShort);
        assert_eq!(c.load("C3", 5, Normalization { e3_denominator: 3 }).0, Lookup::Missing);
    }

    #[test]
    fn corrupted_and_foreign_files() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::new(d.path());
        let n = Normalization::default();
        c.store("E3", 4, n, &series(4)).unwrap();
        fs::write(c.path("E3", n), "{\"schema\": 1, \"name\": \"E3\", \"ord").unwrap();
        assert_eq!(c.load("E3", 4, n).0, Lookup::Invalid);
        let mut v: Value = json!({"schema": 99, "name": "E3", "e3_denominator": 4, "order": 4, "series": frac_to_json(&series(4))});
        fs::write(c.path("E3", n), v.to_string()).unwrap();
        assert_eq!(c.load("E3", 4, n).0, Lookup::Invalid);
        v["schema"] = json!(SCHEMA_VERSION);
        fs::write(c.path("E3", n), v.to_string()).unwrap();
        assert_eq!(c.load("E3", 4, n).0, Lookup::Hit);
    }

    #[test]
    fn list_and_clear() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::new(d.path());
        let n = Normalization::default();
        c.store("cayley:C3", 6, n, &series(6)).unwrap();
        c.store("A3", 3, n, &series(3)).unwrap();
        fs::write(d.path().join("unrelated.txt"), "x").unwrap();
        let l = c.list().unwrap();
        assert_eq!(l.iter().map(|e| e.name.as_str()).collect::<Vec<_>>(), vec!["A3", "cayley:C3"]);
        assert_eq!(c.clear().unwrap(), 2);
        assert!(c.list().unwrap().is_empty());
        assert!(d.path().join("unrelated.txt").exists());
    }
}
