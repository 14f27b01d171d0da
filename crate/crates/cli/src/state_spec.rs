//! JSON description of a qubit or two-qubit state.
//!
//! Accepted shapes:
//!
//! ```text
//! {"bloch": [x, y, z]}                          pure qubit, unit vector
//! {"matrix2": [[[re, im], [re, im]], ...]}      2x2, row-major
//! {"matrix4": [[[re, im], ...], ...]}           4x4, row-major
//! {"separable": [{"w": p, "blochX": [..] | "matrix2X": .., "blochY": [..] | "matrix2Y": ..}, ...]}
//! {"named": "bell-phi-plus" | "max-mixed-2" | "max-mixed-4"}
//! ```
//!
//! Bloch vectors inside a separable term may have length below one (mixed
//! components).

use hvdiscord::discord::{BipartiteState, SeparableTerm};
use hvdiscord::qmcore::{ComplexMatrix, DensityMatrix, UnitVector3};
use hvdiscord::Error;
use num_complex::Complex64;
use serde::Deserialize;

use crate::cli::AUTO_NORMALIZE_WINDOW;

type Entries = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum StateSpec {
    #[serde(rename = "bloch")]
    Bloch([f64; 3]),
    #[serde(rename = "matrix2")]
    Matrix2(Entries),
    #[serde(rename = "matrix4")]
    Matrix4(Entries),
    #[serde(rename = "separable")]
    Separable(Vec<SeparableEntry>),
    #[serde(rename = "named")]
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeparableEntry {
    pub w: f64,
    #[serde(rename = "blochX")]
    pub bloch_x: Option<[f64; 3]>,
    #[serde(rename = "matrix2X")]
    pub matrix2_x: Option<Entries>,
    #[serde(rename = "blochY")]
    pub bloch_y: Option<[f64; 3]>,
    #[serde(rename = "matrix2Y")]
    pub matrix2_y: Option<Entries>,
}

/// A parsed state: a single qubit or a two-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedState {
    Qubit(DensityMatrix<f64>),
    Pair(BipartiteState<f64>),
}

impl ParsedState {
    pub fn into_bipartite(self) -> hvdiscord::Result<BipartiteState<f64>> {
        match self {
            ParsedState::Pair(s) => Ok(s),
            ParsedState::Qubit(_) => Err(Error::DimensionError { expected: 4, found: 2 }),
        }
    }
}

impl StateSpec {
    /// Parses `named:<preset>` or an inline JSON document.
    pub fn from_arg(arg: &str) -> Result<Self, String> {
        match arg.strip_prefix("named:") {
            Some(name) => Ok(StateSpec::Named(name.to_owned())),
            None => Self::from_json(arg),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid state JSON: {e}"))
    }

    pub fn build(&self) -> hvdiscord::Result<ParsedState> {
        match self {
            StateSpec::Bloch(v) => {
                let s = UnitVector3::normalized_within(v[0], v[1], v[2], AUTO_NORMALIZE_WINDOW)?;
                Ok(ParsedState::Qubit(DensityMatrix::pure_qubit(s)))
            }
            StateSpec::Matrix2(e) => Ok(ParsedState::Qubit(DensityMatrix::new(matrix(e, 2)?)?)),
            StateSpec::Matrix4(e) => Ok(ParsedState::Pair(BipartiteState::new(DensityMatrix::new(matrix(
                e, 4,
            )?)?)?)),
            StateSpec::Separable(terms) => {
                let terms = terms
                    .iter()
                    .map(|t| {
                        Ok(SeparableTerm {
                            weight: t.w,
                            rho_x: component(t.bloch_x, t.matrix2_x.as_ref(), "X")?,
                            rho_y: component(t.bloch_y, t.matrix2_y.as_ref(), "Y")?,
                        })
                    })
                    .collect::<hvdiscord::Result<Vec<_>>>()?;
                Ok(ParsedState::Pair(BipartiteState::separable(terms)?))
            }
            StateSpec::Named(name) => match name.as_str() {
                "bell-phi-plus" => Ok(ParsedState::Pair(BipartiteState::new(DensityMatrix::bell_phi_plus())?)),
                "max-mixed-2" => Ok(ParsedState::Qubit(DensityMatrix::maximally_mixed(2))),
                "max-mixed-4" => Ok(ParsedState::Pair(BipartiteState::new(DensityMatrix::maximally_mixed(
                    4,
                ))?)),
                other => Err(Error::ArgumentError(format!(
                    "unknown named state '{other}' (expected bell-phi-plus, max-mixed-2 or max-mixed-4)"
                ))),
            },
        }
    }
}

fn matrix(entries: &Entries, dim: usize) -> hvdiscord::Result<ComplexMatrix<f64>> {
    if entries.len() != dim {
        return Err(Error::DimensionError {
            expected: dim,
            found: entries.len(),
        });
    }
    let rows = entries
        .iter()
        .map(|row| {
            if row.len() != dim {
                return Err(Error::DimensionError {
                    expected: dim,
                    found: row.len(),
                });
            }
            Ok(row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        })
        .collect::<hvdiscord::Result<Vec<Vec<Complex64>>>>()?;
    ComplexMatrix::from_rows(&rows)
}

fn component(bloch: Option<[f64; 3]>, mat: Option<&Entries>, side: &str) -> hvdiscord::Result<DensityMatrix<f64>> {
    match (bloch, mat) {
        (Some(r), None) => DensityMatrix::qubit_from_bloch_ball(r),
        (None, Some(e)) => DensityMatrix::new(matrix(e, 2)?),
        _ => Err(Error::ArgumentError(format!(
            "separable term needs exactly one of bloch{side} or matrix2{side}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_presets() {
        assert!(matches!(
            StateSpec::from_arg("named:bell-phi-plus").unwrap().build().unwrap(),
            ParsedState::Pair(_)
        ));
        assert!(matches!(
            StateSpec::from_arg("named:max-mixed-2").unwrap().build().unwrap(),
            ParsedState::Qubit(_)
        ));
        assert!(StateSpec::from_arg("named:ghz").unwrap().build().is_err());
    }

    #[test]
    fn json_shapes() {
        let bloch = StateSpec::from_json(r#"{"bloch":[0,0,1]}"#).unwrap();
        assert_eq!(bloch, StateSpec::Bloch([0.0, 0.0, 1.0]));
        let m2 = r#"{"matrix2":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]}"#;
        assert!(matches!(
            StateSpec::from_json(m2).unwrap().build().unwrap(),
            ParsedState::Qubit(_)
        ));
        let sep = r#"{"separable":[{"w":0.5,"blochX":[0,0,1],"blochY":[0.3,0,0]},
                                   {"w":0.5,"blochX":[0,0,-1],"matrix2Y":[[[1,0],[0,0]],[[0,0],[0,0]]]}]}"#;
        assert!(matches!(
            StateSpec::from_json(sep).unwrap().build().unwrap(),
            ParsedState::Pair(_)
        ));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(StateSpec::from_json(r#"{"bloch":[0,0,2]}"#).unwrap().build().is_err());
        assert!(StateSpec::from_json(r#"{"spin":[0,0,1]}"#).is_err());
        let not_psd = r#"{"matrix2":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}"#;
        assert!(StateSpec::from_json(not_psd).unwrap().build().is_err());
        let both =
            r#"{"separable":[{"w":1,"blochX":[0,0,1],"matrix2X":[[[1,0],[0,0]],[[0,0],[0,0]]],"blochY":[0,0,1]}]}"#;
        assert!(StateSpec::from_json(both).unwrap().build().is_err());
        let wrong_dim = r#"{"matrix4":[[[1,0]]]}"#;
        assert!(StateSpec::from_json(wrong_dim).unwrap().build().is_err());
    }
}
