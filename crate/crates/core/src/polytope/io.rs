//! Polytope file format.
//!
//! JSON: `{"vertices": [[x, y, z], ...], "facets": [{"normal": [a, b, c], "offset": k}, ...]}`.
//! Facets are optional on input; when present they must agree with the
//! recomputed hull. Output always carries them.
//!
//! Plain text: one point per line, coordinates separated by whitespace or
//! commas, optional surrounding parentheses. `#` starts a comment.

use serde::{Deserialize, Serialize};

use super::{hull, Facet, LatticePolytope, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub vertices: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Facet>>,
}

impl PolytopeFile {
    pub fn into_polytope(self) -> Result<LatticePolytope> {
        let p = hull(&self.vertices)?;
        if let Some(mut given) = self.facets {
            given.sort();
            if given != p.facets() {
                return Err(Error::Format(
                    "listed facets do not match the hull of the vertices".into(),
                ));
            }
        }
        Ok(p)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolytopeFile::deserialize(d)?
            .into_polytope()
            .map_err(serde::de::Error::custom)
    }
}

/// Parses either format; JSON is detected by a leading `{`.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    if text.trim_start().starts_with('{') {
        let file: PolytopeFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        return file.into_polytope();
    }
    let mut vertices = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cleaned = line.trim_start_matches('(').trim_end_matches(')');
        let coords: Vec<i64> = cleaned
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Format(format!("line {}: {e}", lineno + 1)))?;
        let point: Point = coords.try_into().map_err(|c: Vec<i64>| {
            Error::Format(format!(
                "line {}: expected 3 coordinates, found {}",
                lineno + 1,
                c.len()
            ))
        })?;
        vertices.push(point);
    }
    hull(&vertices)
}

pub fn to_json(p: &LatticePolytope) -> String {
    serde_json::to_string_pretty(p).expect("polytope serializes")
}
