//! Instance and matrix files.
//!
//! Both are single JSON documents. Scalars are always JSON strings in the
//! text format of [`newtonbez_core::parse_scalar`], so exact rationals
//! survive a round trip.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use newtonbez_core::poly::Instance;
use newtonbez_core::{DenseMatrix, Field, NodeVector, Rational};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    F64,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Rational => "rational",
            FieldKind::F64 => "f64",
        })
    }
}

impl FromStr for FieldKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "rational" => Ok(FieldKind::Rational),
            "f64" => Ok(FieldKind::F64),
            other => Err(CliError::Usage(format!("unknown field {other:?}"))),
        }
    }
}

/// `{"field": ..., "nodes": [...], "F": [...], "G": [...]}`, coefficients
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldKind,
    pub nodes: Vec<String>,
    #[serde(rename = "F")]
    pub f: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<String>,
}

fn parse_all<F: Field>(values: &[String]) -> Result<Vec<F>, CliError> {
    values.iter().map(|v| F::parse(v).map_err(CliError::from)).collect()
}

fn format_all<F: Field>(values: &[F]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn from_instance<F: Field>(inst: &Instance<F>, field: FieldKind) -> Self {
        Self {
            field,
            nodes: format_all(inst.nodes().as_slice()),
            f: format_all(inst.f.coeffs()),
            g: format_all(inst.g.coeffs()),
        }
    }

    /// Parses the scalars into field `F` and checks the file invariants:
    /// `len(F) = len(nodes) + 1`, `len(G) ≤ len(F)`, last entry of `F`
    /// nonzero.
    pub fn to_instance<F: Field>(&self) -> Result<Instance<F>, CliError> {
        let nodes = parse_all::<F>(&self.nodes)?;
        let f = parse_all::<F>(&self.f)?;
        let g = parse_all::<F>(&self.g)?;
        if nodes.is_empty() {
            return Err(CliError::Precondition("instance needs at least one node".into()));
        }
        if f.len() != nodes.len() + 1 {
            return Err(CliError::Precondition(format!(
                "F has {} coefficients, expected len(nodes) + 1 = {}",
                f.len(),
                nodes.len() + 1
            )));
        }
        if g.len() > f.len() {
            return Err(CliError::Precondition(format!(
                "G has {} coefficients but F only {} (m > n)",
                g.len(),
                f.len()
            )));
        }
        if f.last().is_some_and(Field::is_zero) {
            return Err(CliError::Precondition("leading coefficient of F is zero".into()));
        }
        Ok(Instance::new(NodeVector::new(nodes)?, f, g)?)
    }

    /// Exact view of the instance; float scalars convert to the rational
    /// with the same binary value.
    pub fn to_exact_instance(&self) -> Result<Instance<Rational>, CliError> {
        match self.field {
            FieldKind::Rational => self.to_instance(),
            FieldKind::F64 => {
                let inst = self.to_instance::<f64>()?;
                let exact = |v: &[f64]| -> Result<Vec<Rational>, CliError> {
                    v.iter()
                        .map(|x| {
                            BigRational::from_float(*x)
                                .ok_or_else(|| CliError::Precondition(format!("non-finite scalar {x}")))
                        })
                        .collect()
                };
                Ok(Instance::new(
                    NodeVector::new(exact(inst.nodes().as_slice())?)?,
                    exact(inst.f.coeffs())?,
                    exact(inst.g.coeffs())?,
                )?)
            }
        }
    }
}

/// `{"rows": n, "cols": n, "entries": [...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl MatrixFile {
    pub fn from_matrix<F: Field>(m: &DenseMatrix<F>) -> Self {
        Self { rows: m.rows(), cols: m.cols(), entries: format_all(m.entries()) }
    }

    pub fn to_matrix<F: Field>(&self) -> Result<DenseMatrix<F>, CliError> {
        Ok(DenseMatrix::new(self.rows, self.cols, parse_all(&self.entries)?)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("matrix serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Write { path: p.into(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use newtonbez_core::poly::random_instance;
    use proptest::prelude::*;

    fn example() -> InstanceFile {
        InstanceFile::from_json(
            r#"{"field": "rational", "nodes": ["-1", "0", "2"], "F": ["1", "2", "3", "4"], "G": ["5", "6", "7"]}"#,
        )
        .unwrap()
    }

    #[test]
    fn parses_example() {
        let inst = example().to_instance::<Rational>().unwrap();
        assert_eq!(inst.f.degree(), Some(3));
        assert_eq!(inst.g.degree(), Some(2));
    }

    #[test]
    fn rejects_long_g() {
        let mut file = example();
        file.g = vec!["1".into(); 5];
        let err = file.to_instance::<Rational>().unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn rejects_zero_lead_and_bad_lengths() {
        let mut file = example();
        file.f[3] = "0".into();
        assert_eq!(file.to_instance::<Rational>().unwrap_err().exit_code(), 3);
        let mut file = example();
        file.f.pop();
        assert_eq!(file.to_instance::<Rational>().unwrap_err().exit_code(), 3);
    }

    #[test]
    fn bad_scalar_is_parse_error() {
        let mut file = example();
        file.nodes[0] = "1/0".into();
        assert_eq!(file.to_instance::<Rational>().unwrap_err().exit_code(), 2);
        let mut file = example();
        file.g[0] = "x".into();
        assert_eq!(file.to_instance::<Rational>().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn bad_json_is_parse_error() {
        assert_eq!(InstanceFile::from_json("{").unwrap_err().exit_code(), 2);
        assert_eq!(
            InstanceFile::from_json(r#"{"field": "complex", "nodes": [], "F": [], "G": []}"#).unwrap_err().exit_code(),
            2
        );
        // numbers must be strings
        assert!(InstanceFile::from_json(r#"{"field": "rational", "nodes": [1], "F": ["1", "1"], "G": ["1"]}"#).is_err());
    }

    #[test]
    fn float_file_converts_exactly() {
        let file = InstanceFile {
            field: FieldKind::F64,
            nodes: vec!["0.5".into()],
            f: vec!["1".into(), "0.25".into()],
            g: vec!["3".into()],
        };
        let inst = file.to_exact_instance().unwrap();
        assert_eq!(inst.nodes().as_slice()[0], Rational::new(1.into(), 2.into()));
        assert_eq!(inst.f.coeffs()[1], Rational::new(1.into(), 4.into()));
    }

    #[test]
    fn matrix_file_shape() {
        let m = DenseMatrix::<Rational>::identity(2);
        let text = MatrixFile::from_matrix(&m).to_json();
        assert_eq!(text, "{\"rows\":2,\"cols\":2,\"entries\":[\"1\",\"0\",\"0\",\"1\"]}\n");
        assert_eq!(MatrixFile::from_json(&text).unwrap().to_matrix::<Rational>().unwrap(), m);
    }

    proptest! {
        #[test]
        fn instance_file_round_trip(n in 1usize..=9, m_frac in 0.0f64..1.0, seed in any::<u64>()) {
            let m = 1 + ((n - 1) as f64 * m_frac) as usize;
            let inst = random_instance::<Rational>(n, m, seed).unwrap();
            let file = InstanceFile::from_instance(&inst, FieldKind::Rational);
            let reparsed = InstanceFile::from_json(&file.to_json()).unwrap();
            prop_assert_eq!(&reparsed, &file);
            prop_assert_eq!(reparsed.to_instance::<Rational>().unwrap(), inst);
        }
    }
}
