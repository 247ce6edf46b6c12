//! Append-only JSON-lines store of exact decompositions, keyed by
//! `(coeffs, r, v)`. One line per entry:
//!
//! ```text
//! {"coeffs":["1","-2"],"r":2,"v":1,"zeta":{"3":"10"},"constant":"-12"}
//! ```

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::decompose::{decompose, ZetaCombination};
use crate::error::{Error, Result};
use crate::exact::serial::poly_to_json;
use crate::exact::IntPolynomial;

type Key = (Vec<String>, u32, u32);

fn key(poly: &IntPolynomial, r: u32, v: u32) -> Key {
    (poly.coeffs().iter().map(|c| c.to_string()).collect(), r, v)
}

struct Inner {
    entries: HashMap<Key, ZetaCombination>,
    file: File,
}

pub struct Cache {
    inner: Mutex<Inner>,
}

impl Cache {
    /// Opens (creating if needed) the cache file and loads every entry.
    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let v: Value = serde_json::from_str(&line)
                    .map_err(|e| Error::Parse(format!("cache line {}: {e}", i + 1)))?;
                let (k, combo) = parse_entry(&v)
                    .map_err(|e| Error::Parse(format!("cache line {}: {e}", i + 1)))?;
                entries.insert(k, combo);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Cache {
            inner: Mutex::new(Inner { entries, file }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, poly: &IntPolynomial, r: u32, v: u32) -> Option<ZetaCombination> {
        self.inner
            .lock()
            .unwrap()
            .entries
            .get(&key(poly, r, v))
            .cloned()
    }

    /// Cached combination, or a fresh one that is appended to the file.
    pub fn decompose(&self, poly: &IntPolynomial, r: u32, v: u32) -> Result<ZetaCombination> {
        if let Some(c) = self.get(poly, r, v) {
            return Ok(c);
        }
        let combo = decompose(poly, r, v)?;
        let mut inner = self.inner.lock().unwrap();
        let k = key(poly, r, v);
        if !inner.entries.contains_key(&k) {
            let mut line = combo.to_json();
            line["coeffs"] = poly_to_json(poly);
            line["r"] = json!(r);
            line["v"] = json!(v);
            writeln!(inner.file, "{}", serde_json::to_string(&line)?)?;
            inner.file.flush()?;
            inner.entries.insert(k, combo.clone());
        }
        Ok(combo)
    }
}

fn parse_entry(v: &Value) -> Result<(Key, ZetaCombination)> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"coeffs\"".into()))?
        .iter()
        .map(|c| {
            c.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let small = |name: &str| {
        v.get(name)
            .and_then(Value::as_u64)
            .and_then(|x| u32::try_from(x).ok())
            .ok_or_else(|| Error::Parse(format!("missing \"{name}\"")))
    };
    let combo = ZetaCombination::from_json(v)?;
    Ok(((coeffs, small("r")?, small("v")?), combo))
}
