//! TSPLIB instance parsing and exact EUC_2D distances.
//!
//! Supported grammar (a strict subset of TSPLIB): header lines `NAME`,
//! `TYPE` (must be `TSP`), `COMMENT` (ignored), `DIMENSION` and
//! `EDGE_WEIGHT_TYPE` (must be `EUC_2D`) in any order, followed by
//! `NODE_COORD_SECTION` with one `<id> <x> <y>` line per city and an
//! optional trailing `EOF`. Both `KEY: value` and `KEY : value` spacings
//! are accepted.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

/// Distinct cities with coincident coordinates round to distance 0; their
/// heuristic weight is clamped to `1 / EPSILON_DISTANCE` so transition
/// probabilities stay finite.
pub const EPSILON_DISTANCE: f64 = 1e-6;

/// Supported edge weight types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeWeightType {
    Euc2d,
}

impl fmt::Display for EdgeWeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeWeightType::Euc2d => write!(f, "EUC_2D"),
        }
    }
}

/// A parsed TSP instance: named set of city coordinates with EUC_2D
/// distances. Immutable after construction and safe to share across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    name: String,
    coords: Vec<(f64, f64)>,
    edge_weight_type: EdgeWeightType,
}

/// Errors produced while parsing a TSPLIB document. Line numbers are 1-based.
#[derive(Clone, Debug, PartialEq)]
pub enum ParseError {
    /// A required keyword never appeared.
    MissingKeyword(&'static str),
    /// A header line did not match `KEY: value`, held an unknown key, or an
    /// unparseable value.
    MalformedHeader { line: usize, content: String },
    /// `TYPE` was present but not `TSP`.
    UnsupportedType { line: usize, found: String },
    /// `EDGE_WEIGHT_TYPE` was present but not `EUC_2D`.
    UnsupportedEdgeWeightType { line: usize, found: String },
    /// `DIMENSION` was below 3; a closed tour needs at least 3 cities.
    DimensionTooSmall { found: usize },
    /// The coordinate section held a different number of rows than
    /// `DIMENSION` announced.
    CoordinateCountMismatch { expected: usize, found: usize },
    /// A coordinate row did not have exactly `<id> <x> <y>` fields.
    MalformedCoordinate { line: usize },
    /// A coordinate field failed to parse as a number.
    NonNumericCoordinate { line: usize, token: String },
    /// A node id was outside `1..=DIMENSION`.
    NodeIdOutOfRange { line: usize, id: String },
    /// The same node id appeared twice.
    DuplicateNodeId { line: usize, id: usize },
    /// Content after the coordinate section that is neither `EOF` nor blank.
    TrailingContent { line: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingKeyword(kw) => write!(f, "missing required keyword {kw}"),
            ParseError::MalformedHeader { line, content } => {
                write!(f, "line {line}: malformed header line {content:?}")
            }
            ParseError::UnsupportedType { line, found } => {
                write!(f, "line {line}: unsupported TYPE {found:?} (only TSP)")
            }
            ParseError::UnsupportedEdgeWeightType { line, found } => {
                write!(
                    f,
                    "line {line}: unsupported EDGE_WEIGHT_TYPE {found:?} (only EUC_2D)"
                )
            }
            ParseError::DimensionTooSmall { found } => {
                write!(f, "DIMENSION is {found}, need at least 3 cities")
            }
            ParseError::CoordinateCountMismatch { expected, found } => {
                write!(f, "expected {expected} coordinate rows, found {found}")
            }
            ParseError::MalformedCoordinate { line } => {
                write!(f, "line {line}: coordinate row is not `<id> <x> <y>`")
            }
            ParseError::NonNumericCoordinate { line, token } => {
                write!(f, "line {line}: non-numeric coordinate {token:?}")
            }
            ParseError::NodeIdOutOfRange { line, id } => {
                write!(f, "line {line}: node id {id} outside 1..=DIMENSION")
            }
            ParseError::DuplicateNodeId { line, id } => {
                write!(f, "line {line}: node id {id} repeated")
            }
            ParseError::TrailingContent { line } => {
                write!(f, "line {line}: unexpected content after coordinate section")
            }
        }
    }
}

impl core::error::Error for ParseError {}

impl Instance {
    /// Builds an instance directly from coordinates, bypassing the text
    /// format. Fails with [`ParseError::DimensionTooSmall`] for fewer than 3
    /// cities.
    pub fn from_coords(name: &str, coords: Vec<(f64, f64)>) -> Result<Self, ParseError> {
        if coords.len() < 3 {
            return Err(ParseError::DimensionTooSmall {
                found: coords.len(),
            });
        }
        Ok(Instance {
            name: name.to_string(),
            coords,
            edge_weight_type: EdgeWeightType::Euc2d,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of cities `n`.
    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// Coordinates in node-index order (TSPLIB id `i + 1` is index `i`).
    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn edge_weight_type(&self) -> EdgeWeightType {
        self.edge_weight_type
    }
}

fn split_header(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    Some((key.trim(), value.trim()))
}

/// Parses a TSPLIB document string into an [`Instance`].
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut name: Option<String> = None;
    let mut dimension: Option<usize> = None;
    let mut weight_type: Option<EdgeWeightType> = None;
    let mut saw_section = false;

    let mut lines = text.lines().enumerate();
    for (idx, raw) in lines.by_ref() {
        let line = raw.trim();
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        if line == "NODE_COORD_SECTION" {
            saw_section = true;
            break;
        }
        let (key, value) = split_header(line).ok_or(ParseError::MalformedHeader {
            line: line_no,
            content: line.to_string(),
        })?;
        match key {
            "NAME" => name = Some(value.to_string()),
            "COMMENT" => {}
            "TYPE" => {
                if value != "TSP" {
                    return Err(ParseError::UnsupportedType {
                        line: line_no,
                        found: value.to_string(),
                    });
                }
            }
            "DIMENSION" => {
                let dim = value.parse::<usize>().map_err(|_| ParseError::MalformedHeader {
                    line: line_no,
                    content: line.to_string(),
                })?;
                dimension = Some(dim);
            }
            "EDGE_WEIGHT_TYPE" => {
                if value != "EUC_2D" {
                    return Err(ParseError::UnsupportedEdgeWeightType {
                        line: line_no,
                        found: value.to_string(),
                    });
                }
                weight_type = Some(EdgeWeightType::Euc2d);
            }
            _ => {
                return Err(ParseError::MalformedHeader {
                    line: line_no,
                    content: line.to_string(),
                })
            }
        }
    }

    let dimension = dimension.ok_or(ParseError::MissingKeyword("DIMENSION"))?;
    weight_type.ok_or(ParseError::MissingKeyword("EDGE_WEIGHT_TYPE"))?;
    if !saw_section {
        return Err(ParseError::MissingKeyword("NODE_COORD_SECTION"));
    }
    if dimension < 3 {
        return Err(ParseError::DimensionTooSmall { found: dimension });
    }

    let mut slots: Vec<Option<(f64, f64)>> = vec![None; dimension];
    let mut found = 0usize;
    let mut after_eof = false;
    for (idx, raw) in lines {
        let line = raw.trim();
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        if line == "EOF" {
            after_eof = true;
            continue;
        }
        if after_eof {
            return Err(ParseError::TrailingContent { line: line_no });
        }
        if found == dimension {
            // One row too many is still a count mismatch, not trailing junk.
            return Err(ParseError::CoordinateCountMismatch {
                expected: dimension,
                found: found + 1,
            });
        }
        let mut fields = line.split_whitespace();
        let (id_tok, x_tok, y_tok) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => return Err(ParseError::MalformedCoordinate { line: line_no }),
        };
        if fields.next().is_some() {
            return Err(ParseError::MalformedCoordinate { line: line_no });
        }
        let id = id_tok
            .parse::<usize>()
            .map_err(|_| ParseError::NodeIdOutOfRange {
                line: line_no,
                id: id_tok.to_string(),
            })?;
        if id < 1 || id > dimension {
            return Err(ParseError::NodeIdOutOfRange {
                line: line_no,
                id: id_tok.to_string(),
            });
        }
        let x = x_tok
            .parse::<f64>()
            .map_err(|_| ParseError::NonNumericCoordinate {
                line: line_no,
                token: x_tok.to_string(),
            })?;
        let y = y_tok
            .parse::<f64>()
            .map_err(|_| ParseError::NonNumericCoordinate {
                line: line_no,
                token: y_tok.to_string(),
            })?;
        if slots[id - 1].is_some() {
            return Err(ParseError::DuplicateNodeId { line: line_no, id });
        }
        slots[id - 1] = Some((x, y));
        found += 1;
    }
    if found != dimension {
        return Err(ParseError::CoordinateCountMismatch {
            expected: dimension,
            found,
        });
    }

    let coords = slots.into_iter().map(|s| s.expect("all slots filled")).collect();
    Ok(Instance {
        name: name.unwrap_or_default(),
        coords,
        edge_weight_type: EdgeWeightType::Euc2d,
    })
}

/// Serializes an instance back to TSPLIB text. Re-parsing the output yields
/// an identical [`Instance`].
pub fn to_tsplib_string(inst: &Instance) -> String {
    let mut out = String::new();
    out.push_str(&format!("NAME: {}\n", inst.name));
    out.push_str("TYPE: TSP\n");
    out.push_str(&format!("DIMENSION: {}\n", inst.dimension()));
    out.push_str(&format!("EDGE_WEIGHT_TYPE: {}\n", inst.edge_weight_type));
    out.push_str("NODE_COORD_SECTION\n");
    for (i, (x, y)) in inst.coords.iter().enumerate() {
        out.push_str(&format!("{} {} {}\n", i + 1, x, y));
    }
    out.push_str("EOF\n");
    out
}

/// TSPLIB EUC_2D distance: Euclidean distance rounded to the nearest
/// integer. Symmetric, and `distance(i, i) == 0`.
///
/// Panics if `i` or `j` is out of range.
pub fn distance(inst: &Instance, i: usize, j: usize) -> u64 {
    let (xi, yi) = inst.coords[i];
    let (xj, yj) = inst.coords[j];
    let dx = xi - xj;
    let dy = yi - yj;
    nint((dx * dx + dy * dy).sqrt())
}

/// TSPLIB `nint`: round half up to the nearest integer.
fn nint(x: f64) -> u64 {
    (x + 0.5).floor() as u64
}

/// Precomputed distances plus the companion heuristic table `eta = 1 / d`.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u64>,
    eta: Vec<f64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> u64 {
        self.dist[i * self.n + j]
    }

    /// Heuristic weight of edge `(i, j)`; zero on the diagonal.
    #[inline]
    pub fn eta(&self, i: usize, j: usize) -> f64 {
        self.eta[i * self.n + j]
    }
}

/// Builds the full symmetric distance matrix and its heuristic companion.
pub fn build_distance_matrix(inst: &Instance) -> DistanceMatrix {
    let n = inst.dimension();
    let mut dist = vec![0u64; n * n];
    let mut eta = vec![0.0f64; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance(inst, i, j);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
            let e = if d == 0 {
                1.0 / EPSILON_DISTANCE
            } else {
                1.0 / d as f64
            };
            eta[i * n + j] = e;
            eta[j * n + i] = e;
        }
    }
    DistanceMatrix { n, dist, eta }
}
