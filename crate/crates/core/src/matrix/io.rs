use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// On-disk matrix: `{ "t": 2, "entries": [["1/1", "0/1"], ["0/1", "1/1"]] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub t: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<Matrix<Rational>> {
        if self.entries.len() != self.t {
            return Err(Error::Dimension(format!(
                "declared t = {} but {} rows given",
                self.t,
                self.entries.len()
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<Rational>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    pub fn from_matrix(m: &Matrix<Rational>) -> Self {
        MatrixFile {
            t: m.size(),
            entries: m
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl Matrix<Rational> {
    /// Parses the JSON matrix file format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.to_matrix()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixFile::from_matrix(self)).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn round_trip() {
        let a = Matrix::from_rows(vec![vec![q(1, 2), q(-3, 1)], vec![q(0, 1), q(7, 5)]]).unwrap();
        let s = a.to_json();
        assert_eq!(s, r#"{"t":2,"entries":[["1/2","-3/1"],["0/1","7/5"]]}"#);
        assert_eq!(Matrix::from_json(&s).unwrap(), a);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"t":2,"entries":[["1"]]}"#,
            r#"{"t":1,"entries":[["1","2"]]}"#,
            r#"{"t":1,"entries":[["1/0"]]}"#,
            r#"{"t":0,"entries":[]}"#,
            r#"{"t":1,"entries":[["x"]]}"#,
            r#"{"t":1,"entries":[["1"]],"extra":1}"#,
            r#"[1,2]"#,
        ] {
            assert!(Matrix::from_json(bad).is_err(), "{bad}");
        }
    }
}
