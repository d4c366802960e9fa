//! JSON interchange: polyhedron files with exact rational strings, complex
//! dumps and command reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::lattice::{Rat, RatPoint};
use crate::polyhedron::Polyhedron;
use crate::simplicial::{den_simplex, is_regular, Complex, Simplex};

/// An exact rational written as `"p/q"` or `"p"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatString(pub Rat);

impl FromStr for RatString {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t = s.trim();
        let bad = || format!("invalid rational {s:?}");
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let int = |x: &str| -> std::result::Result<BigInt, String> {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        let (p, q) = (int(p)?, int(q)?);
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(RatString(Rat::new(p, q)))
    }
}

impl fmt::Display for RatString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for RatString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for RatString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatString;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"3/7\" or \"-2\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatString, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_str(V)
    }
}

/// On-disk polyhedron: a dimension and a list of simplexes, each a list of
/// vertices given as rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronFile {
    pub dim: usize,
    pub simplexes: Vec<Vec<Vec<RatString>>>,
}

/// Errors from reading interchange files.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("simplex {index}: {source}")]
    Geometry { index: usize, source: Error },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl PolyhedronFile {
    pub fn parse(text: &str) -> std::result::Result<Self, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn simplexes(&self) -> std::result::Result<Vec<Simplex>, InputError> {
        self.simplexes
            .iter()
            .enumerate()
            .map(|(index, verts)| {
                let pts: Vec<RatPoint> =
                    verts.iter().map(|v| RatPoint::new(v.iter().map(|r| r.0.clone()).collect())).collect();
                if let Some(p) = pts.iter().find(|p| p.dim() != self.dim) {
                    let source = Error::DimensionMismatch { expected: self.dim, got: p.dim() };
                    return Err(InputError::Geometry { index, source });
                }
                Simplex::new(pts).map_err(|source| InputError::Geometry { index, source })
            })
            .collect()
    }

    pub fn to_polyhedron(&self) -> std::result::Result<Polyhedron, InputError> {
        Polyhedron::new(self.dim, self.simplexes()?).map_err(|source| InputError::Geometry { index: 0, source })
    }

    pub fn to_complex(&self) -> std::result::Result<Complex, InputError> {
        Ok(Complex::from_maximal(self.dim, self.simplexes()?))
    }

    pub fn from_simplexes<'a>(dim: usize, simplexes: impl IntoIterator<Item = &'a Simplex>) -> Self {
        PolyhedronFile {
            dim,
            simplexes: simplexes
                .into_iter()
                .map(|s| s.vertices().iter().map(|v| v.coords().iter().cloned().map(RatString).collect()).collect())
                .collect(),
        }
    }

    pub fn from_polyhedron(p: &Polyhedron) -> Self {
        Self::from_simplexes(p.ambient_dim(), p.simplexes())
    }

    /// The maximal simplexes of `c`.
    pub fn from_complex(c: &Complex) -> Self {
        Self::from_simplexes(c.ambient_dim(), c.maximal())
    }
}

pub fn read_polyhedron_file(path: &std::path::Path) -> std::result::Result<(PolyhedronFile, String), InputError> {
    let text = std::fs::read_to_string(path)?;
    Ok((PolyhedronFile::parse(&text)?, text))
}

pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

fn vertex_strings(s: &Simplex) -> Value {
    Value::Array(
        s.vertices()
            .iter()
            .map(|v| Value::Array(v.coords().iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

/// A complex dump readable as a [`PolyhedronFile`]: the `simplexes` field
/// lists the maximal simplexes, and `details` adds each one's denominator
/// (null when not regular) and regularity bit.
pub fn complex_dump(c: &Complex) -> Value {
    let maximal = c.maximal();
    let details: Vec<Value> = maximal
        .iter()
        .map(|s| {
            let regular = is_regular(s);
            let den = if regular { Value::String(den_simplex(s).expect("regular").to_string()) } else { Value::Null };
            serde_json::json!({ "dim": s.dim(), "den": den, "regular": regular })
        })
        .collect();
    serde_json::json!({
        "dim": c.ambient_dim(),
        "simplexes": maximal.iter().map(|s| vertex_strings(s)).collect::<Vec<_>>(),
        "details": details,
    })
}

/// Hex SHA-256 of the concatenated inputs.
pub fn input_digest<'a>(inputs: impl IntoIterator<Item = &'a str>) -> String {
    let mut h = Sha256::new();
    for s in inputs {
        h.update(s.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

/// One row of a verification table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub trials: usize,
    pub passed: bool,
    /// Failing instance, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

/// The JSON document every command prints.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input_digest: String,
    pub results: Value,
    pub timing_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<Vec<PropertyResult>>,
}

impl Report {
    /// Human-readable rendering.
    pub fn pretty(&self) -> String {
        let mut out = format!("command: {}\ninput: {}\n", self.command.join(" "), self.input_digest);
        out.push_str(&serde_json::to_string_pretty(&self.results).unwrap_or_default());
        out.push('\n');
        if let Some(props) = &self.properties {
            for p in props {
                let status = if p.trials == 0 {
                    "SKIP (0 trials)"
                } else if p.passed {
                    "PASS"
                } else {
                    "FAIL"
                };
                out.push_str(&format!("{status:<16} {:<28} trials={}\n", p.name, p.trials));
                if let Some(c) = &p.counterexample {
                    out.push_str(&format!("    counterexample: {c}\n"));
                }
            }
        }
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}
