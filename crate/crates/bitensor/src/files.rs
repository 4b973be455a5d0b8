//! JSON documents for states, component reports, and decision verdicts.
//!
//! Complex numbers serialize as `[re, im]` pairs. Floats are written in the
//! shortest form that parses back to the identical f64, so write/read round
//! trips are lossless. Every document renders as pretty-printed JSON with a
//! trailing newline.

use crate::bitensors::BitensorSet;
use crate::detect::Verdict;
use crate::error::Error;
use crate::matrix::Mat4c;
use crate::states::TwoParticleState;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A complex value on disk: `[re, im]`.
pub type Pair = [f64; 2];

fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

fn unpair(p: Pair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// State document: `{"psi": [[[re, im]; 4]; 4]}`, row-major, with Alice's
/// index as the row. The field name and shape are a stable contract.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateDoc {
    pub psi: [[Pair; 4]; 4],
}

impl StateDoc {
    pub fn from_state(state: &TwoParticleState) -> Self {
        let m = state.coefficients();
        let mut psi = [[[0.0; 2]; 4]; 4];
        for (r, row) in psi.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = pair(m[(r, c)]);
            }
        }
        StateDoc { psi }
    }

    /// Validates through the state constructor: zero or non-finite
    /// coefficient matrices are rejected.
    pub fn to_state(&self) -> Result<TwoParticleState, Error> {
        let mut m = Mat4c::zero();
        for (r, row) in self.psi.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                m[(r, c)] = unpair(*entry);
            }
        }
        TwoParticleState::from_coefficients(m)
    }
}

/// Component report: the 36 values by name plus a magnitude summary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "I1")]
    pub i1: Pair,
    #[serde(rename = "I2")]
    pub i2: Pair,
    #[serde(rename = "I2A")]
    pub i2a: Pair,
    #[serde(rename = "I2B")]
    pub i2b: Pair,
    #[serde(rename = "KA")]
    pub ka: [Pair; 4],
    #[serde(rename = "KB")]
    pub kb: [Pair; 4],
    #[serde(rename = "LA")]
    pub la: [Pair; 4],
    #[serde(rename = "LB")]
    pub lb: [Pair; 4],
    #[serde(rename = "KAB")]
    pub kab: [[Pair; 4]; 4],
    pub max_abs: f64,
}

impl Report {
    pub fn from_set(set: &BitensorSet) -> Self {
        Report {
            i1: pair(set.i1),
            i2: pair(set.i2),
            i2a: pair(set.i2a),
            i2b: pair(set.i2b),
            ka: set.ka.map(pair),
            kb: set.kb.map(pair),
            la: set.la.map(pair),
            lb: set.lb.map(pair),
            kab: set.kab.map(|row| row.map(pair)),
            max_abs: set.max_abs(),
        }
    }
}

/// Decision document: `{"is_product", "max_indicator", "tolerance",
/// "sigma_ratio"}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub is_product: bool,
    pub max_indicator: f64,
    pub tolerance: f64,
    pub sigma_ratio: f64,
}

impl VerdictDoc {
    pub fn new(verdict: &Verdict, sigma_ratio: f64) -> Self {
        VerdictDoc {
            is_product: verdict.is_product,
            max_indicator: verdict.max_indicator,
            tolerance: verdict.tolerance_used,
            sigma_ratio,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document types serialize");
    s.push('\n');
    s
}

/// Parses a state document; `origin` names the source in diagnostics.
pub fn parse_state(text: &str, origin: &Path) -> Result<TwoParticleState, Error> {
    let doc: StateDoc = serde_json::from_str(text).map_err(|source| Error::Json {
        path: origin.to_path_buf(),
        source,
    })?;
    doc.to_state()
}

pub fn read_state(path: &Path) -> Result<TwoParticleState, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_state(&text, path)
}

pub fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_state(path: &Path, state: &TwoParticleState) -> Result<(), Error> {
    write_text(path, &to_json(&StateDoc::from_state(state)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitensors::compute_all;
    use crate::detect::{decide, nearest_rank_one_gap, DEFAULT_DECISION_TOL};
    use crate::states::random_state;

    #[test]
    fn state_round_trip_is_bit_exact() {
        for rank in 1..=4usize {
            let s = random_state(7 + rank as u64, rank).unwrap();
            let doc = StateDoc::from_state(&s);
            let text = to_json(&doc);
            let back: StateDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(doc, back);
            let recovered = back.to_state().unwrap();
            assert_eq!(recovered.coefficients().max_diff(s.coefficients()), 0.0);
        }
    }

    #[test]
    fn rendered_documents_are_pretty_and_newline_terminated() {
        let s = random_state(11, 2).unwrap();
        let text = to_json(&StateDoc::from_state(&s));
        assert!(text.ends_with('\n'));
        assert!(text.starts_with("{\n"));
        assert!(text.contains("\"psi\""));
    }

    #[test]
    fn report_carries_all_named_sections() {
        let s = random_state(12, 3).unwrap();
        let set = compute_all(&s);
        let report = Report::from_set(&set);
        let text = to_json(&report);
        for key in [
            "I1", "I2", "I2A", "I2B", "KA", "KB", "LA", "LB", "KAB", "max_abs",
        ] {
            assert!(text.contains(&format!("\"{key}\"")), "missing {key}");
        }
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(report, back);
        assert_eq!(report.max_abs, set.max_abs());
    }

    #[test]
    fn verdict_document_round_trips() {
        let s = random_state(13, 1).unwrap();
        let v = decide(&s, DEFAULT_DECISION_TOL).unwrap();
        let doc = VerdictDoc::new(&v, nearest_rank_one_gap(&s));
        let text = to_json(&doc);
        let back: VerdictDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, back);
        assert!(back.is_product);
        assert_eq!(back.tolerance, DEFAULT_DECISION_TOL);
    }

    #[test]
    fn parse_diagnostics_name_the_offending_field() {
        let err = parse_state("{\"psy\": []}", Path::new("bad.json")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.json"), "{msg}");
        assert!(msg.contains("psi"), "{msg}");

        let zero = "{\"psi\": [[[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]],\
                              [[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]],\
                              [[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]],\
                              [[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]]}";
        let err = parse_state(zero, Path::new("zero.json")).unwrap_err();
        assert!(err.to_string().contains("psi"));
    }

    #[test]
    fn read_state_reports_missing_files_with_the_path() {
        let err = read_state(Path::new("/nonexistent/state.json")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/state.json"));
    }

    #[test]
    fn write_then_read_preserves_the_state() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        let s = random_state(14, 4).unwrap();
        write_state(&path, &s).unwrap();
        let back = read_state(&path).unwrap();
        assert_eq!(back.coefficients().max_diff(s.coefficients()), 0.0);
    }
}
