use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_rat, Rat, Series};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Wire form: coefficients as `"p"` or `"p/q"` decimal strings.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

/// JSON `{"order": N, "coeffs": ["p/q", …]}` or CSV `n,numerator,denominator`.
pub fn export_series(s: &Series, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let j = SeriesJson {
                order: s.order(),
                coeffs: s.coeffs().iter().map(Rat::to_string).collect(),
            };
            let mut out = serde_json::to_vec(&j).expect("serializable");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["n", "numerator", "denominator"])
                .expect("in-memory write");
            for (n, c) in s.coeffs().iter().enumerate() {
                w.write_record([n.to_string(), c.numer().to_string(), c.denom().to_string()])
                    .expect("in-memory write");
            }
            w.into_inner().expect("in-memory write")
        }
    }
}

/// Inverse of [`export_series`].
pub fn import_series(bytes: &[u8], format: Format) -> Result<Series> {
    match format {
        Format::Json => {
            let j: SeriesJson = serde_json::from_slice(bytes)?;
            if j.coeffs.len() != j.order {
                return Err(Error::Parse(format!(
                    "order {} but {} coefficients",
                    j.order,
                    j.coeffs.len()
                )));
            }
            Ok(Series::from_coeffs(
                j.coeffs
                    .iter()
                    .map(|c| parse_rat(c))
                    .collect::<Result<_>>()?,
            ))
        }
        Format::Csv => {
            let mut r = csv::Reader::from_reader(bytes);
            let bad = |e: csv::Error| Error::Parse(format!("csv: {e}"));
            if r.headers().map_err(bad)? != vec!["n", "numerator", "denominator"] {
                return Err(Error::Parse(
                    "csv header must be n,numerator,denominator".into(),
                ));
            }
            let mut c = vec![];
            for (i, rec) in r.records().enumerate() {
                let rec = rec.map_err(bad)?;
                if rec.get(0).and_then(|n| n.parse::<usize>().ok()) != Some(i) {
                    return Err(Error::Parse(format!(
                        "csv row {} is out of sequence",
                        i + 1
                    )));
                }
                c.push(parse_rat(&format!("{}/{}", &rec[1], &rec[2]))?);
            }
            Ok(Series::from_coeffs(c))
        }
    }
}
