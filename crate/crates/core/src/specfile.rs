//! Algebra files: JSON with 1-based indices and exact rational strings.
//!
//! ```json
//! {
//!   "label": "type-V minus (0, 0, 1)",
//!   "dim": 3,
//!   "bilinear": [{ "i": 2, "j": 3, "k": 3, "c": "-1" }],
//!   "trilinear": [{ "i": 2, "j": 3, "k": 2, "l": 1, "c": "1" }]
//! }
//! ```
//!
//! `bilinear` entries mean `e_i · e_j ∋ c e_k`, `trilinear` entries
//! `(e_i, e_j, e_k) ∋ c e_l`. Both lists may be omitted or empty. Unknown
//! fields, repeated index tuples, indices outside `1..=dim` and coefficients
//! that are not `"p"` or `"p/q"` strings are rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraSpec;
use crate::linalg::rational::{format_rational, parse_rational};
use crate::linalg::{Tensor3, Tensor4};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecFileError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dim must be at least 1")]
    ZeroDim,
    #[error("{list} entry {entry}: index {index} outside 1..={dim}")]
    IndexOutOfRange {
        list: &'static str,
        entry: usize,
        index: usize,
        dim: usize,
    },
    #[error("{list} entry {entry}: malformed rational {text:?}")]
    MalformedRational {
        list: &'static str,
        entry: usize,
        text: String,
    },
    #[error("{list} entry {entry}: index tuple {indices:?} already given")]
    Duplicate {
        list: &'static str,
        entry: usize,
        indices: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BilinearEntry {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TrilinearEntry {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    #[serde(default)]
    label: String,
    dim: usize,
    #[serde(default)]
    bilinear: Vec<BilinearEntry>,
    #[serde(default)]
    trilinear: Vec<TrilinearEntry>,
}

fn to_zero_based<const N: usize>(
    list: &'static str,
    entry: usize,
    idx: [usize; N],
    dim: usize,
) -> Result<[usize; N], SpecFileError> {
    let mut out = [0; N];
    for (o, &i) in out.iter_mut().zip(&idx) {
        if i == 0 || i > dim {
            return Err(SpecFileError::IndexOutOfRange {
                list,
                entry,
                index: i,
                dim,
            });
        }
        *o = i - 1;
    }
    Ok(out)
}

/// Parse an algebra file.
pub fn parse_algebra(text: &str) -> Result<AlgebraSpec, SpecFileError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| SpecFileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.dim == 0 {
        return Err(SpecFileError::ZeroDim);
    }
    let dim = file.dim;
    let mut seen3 = std::collections::BTreeSet::new();
    let mut bil = Tensor3::new(dim);
    for (n, e) in file.bilinear.iter().enumerate() {
        let entry = n + 1;
        let idx = to_zero_based("bilinear", entry, [e.i, e.j, e.k], dim)?;
        if !seen3.insert(idx) {
            return Err(SpecFileError::Duplicate {
                list: "bilinear",
                entry,
                indices: vec![e.i, e.j, e.k],
            });
        }
        let c = parse_rational(&e.c).map_err(|_| SpecFileError::MalformedRational {
            list: "bilinear",
            entry,
            text: e.c.clone(),
        })?;
        bil.set(idx, c).expect("index checked");
    }
    let mut seen4 = std::collections::BTreeSet::new();
    let mut tri = Tensor4::new(dim);
    for (n, e) in file.trilinear.iter().enumerate() {
        let entry = n + 1;
        let idx = to_zero_based("trilinear", entry, [e.i, e.j, e.k, e.l], dim)?;
        if !seen4.insert(idx) {
            return Err(SpecFileError::Duplicate {
                list: "trilinear",
                entry,
                indices: vec![e.i, e.j, e.k, e.l],
            });
        }
        let c = parse_rational(&e.c).map_err(|_| SpecFileError::MalformedRational {
            list: "trilinear",
            entry,
            text: e.c.clone(),
        })?;
        tri.set(idx, c).expect("index checked");
    }
    Ok(AlgebraSpec::new(file.label, bil, tri).expect("same dim"))
}

/// Canonical file text: nonzero entries in index order, two-space
/// indentation, trailing newline.
pub fn emit_algebra(alg: &AlgebraSpec) -> String {
    let file = AlgebraFile {
        label: alg.label.clone(),
        dim: alg.dim(),
        bilinear: alg
            .bilinear
            .iter()
            .map(|(&[i, j, k], c)| BilinearEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                c: format_rational(c),
            })
            .collect(),
        trilinear: alg
            .trilinear
            .iter()
            .map(|(&[i, j, k, l], c)| TrilinearEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                l: l + 1,
                c: format_rational(c),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
    s.push('\n');
    s
}
