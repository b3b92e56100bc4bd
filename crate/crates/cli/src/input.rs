//! JSON input documents.
//!
//! ```json
//! {"genus": 1, "weights": [2, 2], "alpha": {"rank": 2, "flags": [[1], [1]]}}
//! ```
//!
//! `flags[i]` holds the `w_i − 1` proper flag dimensions at point `i`; a point
//! with `w_i = 1` has an empty array.

use std::fs;
use std::io::{self, Read};

use parbun::{DimVector, WeightType};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSpec {
    pub rank: i64,
    pub flags: Vec<Vec<i64>>,
}

impl From<&DimVector> for AlphaSpec {
    fn from(v: &DimVector) -> Self {
        Self {
            rank: v.rank(),
            flags: v.rows().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    /// Required by `decide` and `dims`; ignored by `decomps`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    pub weights: Vec<usize>,
    pub alpha: AlphaSpec,
}

impl ProblemSpec {
    pub fn weight_type(&self) -> Result<WeightType, CliError> {
        Ok(WeightType::new(self.weights.clone())?)
    }

    pub fn dimvec(&self) -> Result<DimVector, CliError> {
        let wt = self.weight_type()?;
        parse_vector(&self.alpha, &wt)
    }

    pub fn require_genus(&self) -> Result<u32, CliError> {
        self.genus
            .ok_or_else(|| CliError::BadInput("missing field `genus`".into()))
    }

    /// Validated `(vector, genus)`, rejecting rank 0.
    pub fn problem(&self) -> Result<(DimVector, u32), CliError> {
        let a = self.dimvec()?;
        if a.rank() == 0 {
            return Err(parbun::Error::ZeroRank.into());
        }
        Ok((a, self.require_genus()?))
    }
}

/// Input of the `euler` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EulerSpec {
    pub weights: Vec<usize>,
    pub a: AlphaSpec,
    pub b: AlphaSpec,
}

impl EulerSpec {
    pub fn vectors(&self) -> Result<(DimVector, DimVector), CliError> {
        let wt = WeightType::new(self.weights.clone())?;
        Ok((parse_vector(&self.a, &wt)?, parse_vector(&self.b, &wt)?))
    }
}

fn parse_vector(spec: &AlphaSpec, wt: &WeightType) -> Result<DimVector, CliError> {
    Ok(DimVector::validate(spec.rank, spec.flags.clone(), wt)?)
}

/// Reads the whole document from a path, or from standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::BadInput(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| CliError::BadInput(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let spec: ProblemSpec =
            parse(r#"{"genus":0,"weights":[2,2],"alpha":{"rank":2,"flags":[[1],[1]]}}"#).unwrap();
        let (a, g) = spec.problem().unwrap();
        assert_eq!((a.to_string(), g), ("(2;[1],[1])".to_string(), 0));
    }

    #[test]
    fn rejects_bad_documents() {
        let bad = [
            r#"{"genus":-1,"weights":[],"alpha":{"rank":2,"flags":[]}}"#,
            r#"{"genus":1,"weights":[2],"alpha":{"rank":1,"flags":[[2]]}}"#,
            r#"{"genus":1,"weights":[2],"alpha":{"rank":2,"flags":[]}}"#,
            r#"{"genus":1,"weights":[0],"alpha":{"rank":2,"flags":[[]]}}"#,
            r#"{"genus":1,"weights":[],"alpha":{"rank":0,"flags":[]}}"#,
            r#"{"weights":[],"alpha":{"rank":2,"flags":[]}}"#,
            r#"{"genus":1,"weights":[],"alpha":{"rank":2,"flags":[]},"extra":1}"#,
            "not json",
        ];
        for text in bad {
            let result = parse::<ProblemSpec>(text).and_then(|s| s.problem());
            assert!(matches!(result, Err(CliError::BadInput(_))), "{text}");
        }
    }
}
