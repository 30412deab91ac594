use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Series;
use crate::binary::BinaryWeights;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OeisSource {
    BundledFixture,
    Fetched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisRecord {
    pub id: String,
    pub terms: Vec<BigInt>,
    pub source: OeisSource,
}

impl fmt::Display for OeisRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.terms.iter().take(10).map(BigInt::to_string).collect();
        write!(
            f,
            "{} ({} terms): {}, …",
            self.id,
            self.terms.len(),
            head.join(", ")
        )
    }
}

const FIXTURES: [(&str, &str); 7] = [
    ("A000108", include_str!("../../fixtures/b000108.txt")),
    ("A005159", include_str!("../../fixtures/b005159.txt")),
    ("A006318", include_str!("../../fixtures/b006318.txt")),
    ("A047891", include_str!("../../fixtures/b047891.txt")),
    ("A052701", include_str!("../../fixtures/b052701.txt")),
    ("A082298", include_str!("../../fixtures/b082298.txt")),
    ("A103210", include_str!("../../fixtures/b103210.txt")),
];

/// Terms of a b-file: lines `n a(n)` with consecutive `n`; lines starting
/// with `#` and blank lines are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>> {
    let mut terms = vec![];
    let mut prev: Option<i64> = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::MalformedBFile { line: i + 1, msg };
        let mut parts = line.split_whitespace();
        let (Some(n), Some(a), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("expected `n a(n)`, got {line:?}")));
        };
        let n: i64 = n.parse().map_err(|_| bad(format!("bad index {n:?}")))?;
        let a: BigInt = a.parse().map_err(|_| bad(format!("bad term {a:?}")))?;
        if prev.is_some_and(|p| n != p + 1) {
            return Err(bad(format!("index {n} does not follow {}", prev.unwrap())));
        }
        prev = Some(n);
        terms.push(a);
    }
    if terms.is_empty() {
        return Err(Error::MalformedBFile {
            line: text.lines().count(),
            msg: "no terms".into(),
        });
    }
    Ok(terms)
}

/// The bundled records.
pub fn fixtures() -> Vec<OeisRecord> {
    FIXTURES
        .iter()
        .map(|(id, text)| OeisRecord {
            id: id.to_string(),
            terms: parse_bfile(text).expect("bundled fixtures are well formed"),
            source: OeisSource::BundledFixture,
        })
        .collect()
}

pub fn fixture(id: &str) -> Option<OeisRecord> {
    fixtures().into_iter().find(|r| r.id == id)
}

/// Weight vectors `(v1, v2, w1, w2, w3)` whose total series are the bundled sequences.
pub fn named_weight_vectors() -> Vec<(&'static str, BinaryWeights)> {
    vec![
        ("A000108", BinaryWeights::ints([0, 0, 1, 0, 0])),
        ("A052701", BinaryWeights::ints([0, 0, 0, 0, 1])),
        ("A005159", BinaryWeights::ints([0, 0, 0, 1, 1])),
        ("A006318", BinaryWeights::ints([0, 1, 1, 0, 0])),
        ("A047891", BinaryWeights::ints([1, 0, 1, 0, 0])),
        ("A082298", BinaryWeights::ints([1, 1, 1, 0, 0])),
        ("A103210", BinaryWeights::ints([1, 0, 0, 0, 1])),
    ]
}

fn strip_zeros(v: &[BigInt]) -> &[BigInt] {
    let k = v.iter().position(|x| !x.is_zero()).unwrap_or(v.len());
    &v[k..]
}

/// A-numbers among `records` whose terms agree with the series on a common
/// prefix of at least `min_terms` terms, after dropping leading zeros on both
/// sides (which absorbs offset conventions).
pub fn oeis_match_in(s: &Series, min_terms: usize, records: &[OeisRecord]) -> Result<Vec<String>> {
    if min_terms < 8 {
        return Err(Error::Invalid(format!(
            "min_terms must be at least 8, got {min_terms}"
        )));
    }
    let ints = s.to_integers().map_err(Error::NonIntegerCoefficients)?;
    let ours = strip_zeros(&ints);
    Ok(records
        .iter()
        .filter(|r| {
            let theirs = strip_zeros(&r.terms);
            let k = ours.len().min(theirs.len());
            k >= min_terms && ours[..k] == theirs[..k]
        })
        .map(|r| r.id.clone())
        .collect())
}

/// [`oeis_match_in`] against the bundled fixtures.
pub fn oeis_match(s: &Series, min_terms: usize) -> Result<Vec<String>> {
    oeis_match_in(s, min_terms, &fixtures())
}

fn check_id(id: &str) -> Result<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::Parse(format!("not an A-number: {id:?}")))
    }
}

/// Downloads and parses the b-file of `id`. Requires `allow_network`.
pub fn oeis_fetch(id: &str, allow_network: bool) -> Result<OeisRecord> {
    check_id(id)?;
    if !allow_network {
        return Err(Error::NetworkDisabled);
    }
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let text = ureq::get(&url)
        .call()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?
        .into_string()?;
    Ok(OeisRecord {
        id: id.to_string(),
        terms: parse_bfile(&text)?,
        source: OeisSource::Fetched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, Rat};
    use crate::binary::binary_T;

    #[test]
    fn bfile_format() {
        let t = parse_bfile("# comment\n0 1\n1 -2\n\n2 123456789012345678901234567890\n").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[2].to_string(), "123456789012345678901234567890");
        let e = parse_bfile("0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::MalformedBFile { line: 2, .. }));
        assert!(matches!(
            parse_bfile("0 1\n2 1\n"),
            Err(Error::MalformedBFile { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 2\n"),
            Err(Error::MalformedBFile { line: 1, .. })
        ));
        assert!(parse_bfile("# only\n").is_err());
    }

    #[test]
    fn fixtures_load() {
        let f = fixtures();
        assert_eq!(f.len(), 7);
        assert!(f
            .iter()
            .all(|r| r.terms.len() >= 20 && r.source == OeisSource::BundledFixture));
    }

    #[test]
    fn catalan_and_schroeder() {
        let cat = binary_T(&BinaryWeights::ints([0, 0, 1, 0, 0]), 15);
        assert_eq!(oeis_match(&cat, 12).unwrap(), vec!["A000108"]);
        let sch = binary_T(&BinaryWeights::ints([0, 1, 1, 0, 0]), 15);
        assert_eq!(oeis_match(&sch, 12).unwrap(), vec!["A006318"]);
        // the weight v1 enters as 2v1: 1, 3, 12, 57, …
        let tri = binary_T(&BinaryWeights::ints([1, 0, 1, 0, 0]), 15);
        assert_eq!(oeis_match(&tri, 12).unwrap(), vec!["A047891"]);
    }

    #[test]
    fn short_or_rational_series() {
        let cat = binary_T(&BinaryWeights::ints([0, 0, 1, 0, 0]), 6);
        assert!(oeis_match(&cat, 8).unwrap().is_empty());
        assert!(oeis_match(&cat, 5).is_err());
        let mut c = cat.coeffs().to_vec();
        c[3] = ratio(1, 2);
        assert!(matches!(
            oeis_match(&Series::from_coeffs(c), 8),
            Err(Error::NonIntegerCoefficients(3))
        ));
        let _: Rat = ratio(1, 1);
    }

    #[test]
    fn offline_by_default() {
        assert!(matches!(
            oeis_fetch("A000108", false),
            Err(Error::NetworkDisabled)
        ));
        assert!(oeis_fetch("B12", true).is_err());
    }
}
