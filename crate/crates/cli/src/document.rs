//! JSON algebra documents: parsing, validation and canonical emission.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use nilsplit_core::catalog::{self, CatalogEntry};
use nilsplit_core::lie::{Bracket, LieAlgebraSpec};
use nilsplit_core::linalg::fmt_rational;
use nilsplit_core::Rational;
use num::{BigInt, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational written as a string: `"3"`, `"-1/2"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalString(pub Rational);

impl FromStr for RationalString {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid rational `{s}`");
        let int = |t: &str| -> Result<BigInt, String> {
            let t = t.trim();
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let q = match s.split_once('/') {
            None => Rational::from_integer(int(s)?),
            Some((n, d)) => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(format!("invalid rational `{s}`: zero denominator"));
                }
                Rational::new(int(n)?, d)
            }
        };
        Ok(RationalString(q))
    }
}

impl<'de> Deserialize<'de> for RationalString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Serialize for RationalString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: RationalString,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaRecord {
    pub i: usize,
    pub j: usize,
    pub c: RationalString,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<BracketRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<OmegaRecord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("{origin}:{line}:{column}: {path}: {message}")]
    Syntax {
        origin: String,
        line: usize,
        column: usize,
        path: String,
        message: String,
    },
    #[error("{origin}: {path}: {message}")]
    Field {
        origin: String,
        path: String,
        message: String,
    },
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error(
        "`{0}` is neither a readable file nor a catalog entry (try `nilsplit catalog --list`)"
    )]
    NotFound(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
}

/// A parsed document together with the exact bytes it came from.
#[derive(Debug, Clone)]
pub struct Input {
    pub document: AlgebraDocument,
    pub bytes: Vec<u8>,
}

impl AlgebraDocument {
    pub fn parse(text: &str, origin: &str) -> Result<Self, DocumentError> {
        let syntax = |path: String, e: serde_json::Error| DocumentError::Syntax {
            origin: origin.to_string(),
            line: e.line(),
            column: e.column(),
            path,
            message: strip_position(&e.to_string()),
        };
        let mut de = serde_json::Deserializer::from_str(text);
        let doc: AlgebraDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            syntax(path, e.into_inner())
        })?;
        de.end().map_err(|e| syntax(".".into(), e))?;
        doc.check(origin)?;
        Ok(doc)
    }

    fn check(&self, origin: &str) -> Result<(), DocumentError> {
        let err = |path: String, message: String| DocumentError::Field {
            origin: origin.to_string(),
            path,
            message,
        };
        if self.dim == 0 {
            return Err(err("dim".into(), "must be at least 1".into()));
        }
        let n = self.dim;
        for (p, b) in self.brackets.iter().enumerate() {
            if !(1 <= b.i && b.i < b.j && b.j <= n) {
                return Err(err(
                    format!("brackets[{p}]"),
                    format!("need 1 <= i < j <= {n}, got i = {}, j = {}", b.i, b.j),
                ));
            }
            if !(1..=n).contains(&b.k) {
                return Err(err(
                    format!("brackets[{p}].k"),
                    format!("need 1 <= k <= {n}, got {}", b.k),
                ));
            }
            if self.brackets[..p]
                .iter()
                .any(|o| (o.i, o.j, o.k) == (b.i, b.j, b.k))
            {
                return Err(err(
                    format!("brackets[{p}]"),
                    format!("duplicate entry for ({}, {}, {})", b.i, b.j, b.k),
                ));
            }
        }
        for (p, w) in self.omega.iter().flatten().enumerate() {
            if !(1 <= w.i && w.i < w.j && w.j <= n) {
                return Err(err(
                    format!("omega[{p}]"),
                    format!("need 1 <= i < j <= {n}, got i = {}, j = {}", w.i, w.j),
                ));
            }
            if self
                .omega
                .iter()
                .flatten()
                .take(p)
                .any(|o| (o.i, o.j) == (w.i, w.j))
            {
                return Err(err(
                    format!("omega[{p}]"),
                    format!("duplicate entry for ({}, {})", w.i, w.j),
                ));
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> LieAlgebraSpec {
        let brackets = self
            .brackets
            .iter()
            .map(|b| Bracket::new(b.i, b.j, b.k, b.c.0.clone()))
            .collect();
        LieAlgebraSpec::new(self.dim, brackets).expect("document indices checked on parse")
    }

    pub fn omega_coefficients(&self) -> Option<Vec<(usize, usize, Rational)>> {
        self.omega
            .as_ref()
            .map(|w| w.iter().map(|r| (r.i, r.j, r.c.0.clone())).collect())
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        AlgebraDocument {
            name: entry.name.to_string(),
            dim: entry.spec.dim(),
            brackets: entry
                .spec
                .brackets()
                .iter()
                .map(|b| BracketRecord {
                    i: b.i,
                    j: b.j,
                    k: b.k,
                    c: RationalString(b.c.clone()),
                })
                .collect(),
            omega: entry.omega.as_ref().map(|w| {
                w.iter()
                    .map(|(i, j, c)| OmegaRecord {
                        i: *i,
                        j: *j,
                        c: RationalString(c.clone()),
                    })
                    .collect()
            }),
        }
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(p) => message[..p].to_string(),
        None => message.to_string(),
    }
}

pub fn catalog_input(name: &str) -> Result<Input, DocumentError> {
    let entry = catalog::get(name).ok_or_else(|| DocumentError::UnknownEntry(name.to_string()))?;
    let document = AlgebraDocument::from_entry(&entry);
    Ok(Input {
        bytes: document.emit().into_bytes(),
        document,
    })
}

/// `catalog:NAME`, then a file path, then a bare catalog name.
pub fn resolve(arg: &str) -> Result<Input, DocumentError> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return catalog_input(name);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let bytes =
            std::fs::read(path).map_err(|e| DocumentError::Io(arg.to_string(), e.to_string()))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| DocumentError::Io(arg.to_string(), "not valid UTF-8".into()))?;
        let document = AlgebraDocument::parse(&text, arg)?;
        return Ok(Input { document, bytes });
    }
    if catalog::get(arg).is_some() {
        return catalog_input(arg);
    }
    Err(DocumentError::NotFound(arg.to_string()))
}

impl fmt::Display for RationalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}
