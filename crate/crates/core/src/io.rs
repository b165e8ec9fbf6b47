//! JSON forms of matroids, set functions and piecewise families.
//!
//! ```text
//! {"n": 3, "bases": [[1,2],[1,3],[2,3]]}
//! {"n": 3, "z": {"1": 6, "2": 6, "3": 6, "1,2": 10, "1,3": 10, "2,3": 10, "1,2,3": 12}}
//! {"n": 2, "family": {"1,2": "x1^3", "2,1": "x2^3"}}
//! ```
//!
//! Elements are 1-indexed; subset and permutation keys are comma-joined.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly};
use crate::matroid::{GroundSubset, Matroid, MatroidError, MAX_GROUND};
use crate::perm::{factorial, Permutation};
use crate::plaur::{PiecewiseLaurent, PlaurError};
use crate::polytope::{PolytopeError, SetFunction};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{what}: malformed JSON: {msg}")]
    Json { what: String, msg: String },
    #[error("{what}: key {key:?}: {msg}")]
    Key { what: String, key: String, msg: String },
    #[error("{what}: missing value for {key}")]
    Missing { what: String, key: String },
    #[error("{what}: entry {key}: {source}")]
    Polynomial {
        what: String,
        key: String,
        source: LaurentError,
    },
    #[error("{what}: not a matroid: {source}")]
    Matroid { what: String, source: MatroidError },
    #[error("{what}: {source}")]
    SetFunction { what: String, source: PolytopeError },
    #[error("{what}: {source}")]
    Family { what: String, source: PlaurError },
    #[error("{what}: ground set size {n} exceeds the limit {MAX_GROUND}")]
    TooLarge { what: String, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFunctionJson {
    pub n: usize,
    pub z: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub n: usize,
    pub family: BTreeMap<String, String>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json {
        what: what.to_string(),
        msg: e.to_string(),
    })
}

pub fn read_file(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn key_error(what: &str, key: &str, msg: impl Into<String>) -> InputError {
    InputError::Key {
        what: what.to_string(),
        key: key.to_string(),
        msg: msg.into(),
    }
}

fn check_size(what: &str, n: usize) -> Result<(), InputError> {
    if n > MAX_GROUND {
        return Err(InputError::TooLarge {
            what: what.to_string(),
            n,
        });
    }
    Ok(())
}

pub fn matroid_from_json(text: &str, what: &str) -> Result<Matroid, InputError> {
    let raw: MatroidJson = parse_json(text, what)?;
    check_size(what, raw.n)?;
    let mut bases = Vec::with_capacity(raw.bases.len());
    for b in &raw.bases {
        let key = format!("{b:?}");
        if b.iter().any(|&e| e == 0 || e > raw.n) {
            return Err(key_error(what, &key, format!("elements must lie in 1..={}", raw.n)));
        }
        let set = GroundSubset::from_one_indexed(b).expect("range checked");
        if set.len() != b.len() {
            return Err(key_error(what, &key, "repeated element"));
        }
        bases.push(set);
    }
    Matroid::new(raw.n, bases).map_err(|source| InputError::Matroid {
        what: what.to_string(),
        source,
    })
}

pub fn matroid_to_json(m: &Matroid) -> String {
    let raw = MatroidJson {
        n: m.n(),
        bases: m.bases_one_indexed(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

fn subset_key(what: &str, key: &str, n: usize) -> Result<GroundSubset, InputError> {
    let s = GroundSubset::parse_key(key)
        .ok_or_else(|| key_error(what, key, "expected comma-joined elements like \"1,3\""))?;
    if !s.is_subset(GroundSubset::full(n)) {
        return Err(key_error(what, key, format!("elements must lie in 1..={n}")));
    }
    if s.key() != key.replace(' ', "") {
        return Err(key_error(what, key, "elements must be sorted and distinct"));
    }
    Ok(s)
}

/// Parses a set function; the empty set is omitted and every nonempty subset
/// must be present. No submodularity check.
pub fn set_function_from_json(text: &str, what: &str) -> Result<SetFunction, InputError> {
    let raw: SetFunctionJson = parse_json(text, what)?;
    check_size(what, raw.n)?;
    let mut values = vec![None; 1 << raw.n];
    values[0] = Some(0);
    for (key, &v) in &raw.z {
        let s = subset_key(what, key, raw.n)?;
        if s.is_empty() {
            if v != 0 {
                return Err(key_error(what, key, "value on the empty set must be 0"));
            }
            continue;
        }
        values[s.0 as usize] = Some(v);
    }
    let mut out = Vec::with_capacity(values.len());
    for (mask, v) in values.into_iter().enumerate() {
        match v {
            Some(v) => out.push(v),
            None => {
                return Err(InputError::Missing {
                    what: what.to_string(),
                    key: format!("\"{}\"", GroundSubset(mask as u32).key()),
                })
            }
        }
    }
    SetFunction::new(raw.n, out).map_err(|source| InputError::SetFunction {
        what: what.to_string(),
        source,
    })
}

pub fn set_function_to_json(z: &SetFunction) -> String {
    let raw = SetFunctionJson {
        n: z.n(),
        z: z.keyed_values().into_iter().collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Parses a family and checks the gluing condition.
pub fn family_from_json(text: &str, what: &str) -> Result<PiecewiseLaurent, InputError> {
    let raw: FamilyJson = parse_json(text, what)?;
    if raw.n > 8 {
        return Err(InputError::TooLarge {
            what: what.to_string(),
            n: raw.n,
        });
    }
    let mut entries: Vec<Option<LaurentPoly>> = vec![None; factorial(raw.n)];
    for (key, poly) in &raw.family {
        let word: Option<Vec<usize>> = key.split(',').map(|t| t.trim().parse().ok()).collect();
        let sigma = word
            .filter(|w| w.len() == raw.n || raw.n == 0)
            .and_then(|w| {
                if raw.n == 0 {
                    Some(Permutation::identity(0))
                } else {
                    Permutation::from_one_indexed(&w)
                }
            })
            .ok_or_else(|| key_error(what, key, format!("expected a permutation of 1..={}", raw.n)))?;
        let p = LaurentPoly::parse(poly, raw.n).map_err(|source| InputError::Polynomial {
            what: what.to_string(),
            key: key.clone(),
            source,
        })?;
        entries[sigma.rank()] = Some(p);
    }
    let mut family = Vec::with_capacity(entries.len());
    for (r, e) in entries.into_iter().enumerate() {
        match e {
            Some(p) => family.push(p),
            None => {
                return Err(InputError::Missing {
                    what: what.to_string(),
                    key: format!("\"{}\"", Permutation::unrank(raw.n, r).key()),
                })
            }
        }
    }
    let family_err = |source| InputError::Family {
        what: what.to_string(),
        source,
    };
    let f = PiecewiseLaurent::new(raw.n, family).map_err(family_err)?;
    f.validate().map_err(family_err)?;
    Ok(f)
}

pub fn family_to_json(f: &PiecewiseLaurent) -> String {
    let raw = FamilyJson {
        n: f.n(),
        family: f.keyed_entries().into_iter().collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}
