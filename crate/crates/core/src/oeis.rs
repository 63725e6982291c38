//! OEIS b-file loading and term-by-term comparison against computed series.
//!
//! Fixtures are bundled into the library; a fixture directory on disk or
//! the live b-file endpoint can be used instead, but only when asked for.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::OeisError;
use crate::series::Series;

/// Environment variable naming a directory of `bNNNNNN.txt` files that
/// replaces the bundled fixtures.
pub const FIXTURE_DIR_ENV: &str = "DYCK_ODD_FIXTURES";

const BUNDLED: &[(&str, &str)] = &[
    ("A101785", include_str!("../fixtures/b101785.txt")),
    ("A113337", include_str!("../fixtures/b113337.txt")),
    ("A143017", include_str!("../fixtures/b143017.txt")),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    /// Index of the first term.
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

/// Where to read a sequence from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// The fixtures compiled into the library.
    Bundled,
    /// `b<digits>.txt` files in a directory.
    Directory(PathBuf),
    /// `https://oeis.org/Annnnnn/bnnnnnn.txt`.
    Network { timeout: Duration },
}

impl Source {
    /// `Directory` if [`FIXTURE_DIR_ENV`] is set, otherwise `Bundled`.
    pub fn fixture_from_env() -> Self {
        match std::env::var_os(FIXTURE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Source::Directory(dir.into()),
            _ => Source::Bundled,
        }
    }
}

/// Checks the `A` + six digits pattern.
pub fn is_valid_id(id: &str) -> bool {
    id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit())
}

fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

pub fn load(id: &str, source: &Source) -> Result<SequenceRecord, OeisError> {
    if !is_valid_id(id) {
        return Err(OeisError::NotFound(id.to_string()));
    }
    let text = match source {
        Source::Bundled => BUNDLED
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| OeisError::NotFound(id.to_string()))?,
        Source::Directory(dir) => read_fixture(dir, id)?,
        Source::Network { timeout } => fetch(id, *timeout)?,
    };
    parse_bfile(id, &text)
}

fn read_fixture(dir: &Path, id: &str) -> Result<String, OeisError> {
    let path = dir.join(bfile_name(id));
    match std::fs::read_to_string(&path) {
        Ok(t) => Ok(t),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(OeisError::NotFound(id.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

fn fetch(id: &str, timeout: Duration) -> Result<String, OeisError> {
    let url = format!("https://oeis.org/{id}/{}", bfile_name(id));
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into();
    let net = |e: ureq::Error| OeisError::NetworkError {
        id: id.to_string(),
        message: e.to_string(),
    };
    match agent.get(&url).call() {
        Ok(mut resp) => resp.body_mut().read_to_string().map_err(net),
        Err(ureq::Error::StatusCode(404)) => Err(OeisError::NotFound(id.to_string())),
        Err(e) => Err(net(e)),
    }
}

/// Parses b-file text: `index value` per line, `#` comments and blank
/// lines ignored. Indices must be consecutive.
pub fn parse_bfile(id: &str, text: &str) -> Result<SequenceRecord, OeisError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = || OeisError::ParseError {
            id: id.to_string(),
            line: lineno + 1,
            text: line.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad());
        };
        let index: i64 = index.parse().map_err(|_| bad())?;
        let value: BigInt = value.parse().map_err(|_| bad())?;
        let first = *offset.get_or_insert(index);
        if index != first + terms.len() as i64 {
            return Err(bad());
        }
        terms.push(value);
    }
    let Some(offset) = offset else {
        return Err(OeisError::NotFound(id.to_string()));
    };
    Ok(SequenceRecord {
        id: id.to_string(),
        offset,
        terms,
    })
}

/// One aligned pair in a comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparedTerm {
    /// Index in the sequence.
    pub index: i64,
    /// Exponent of `Z` in the series.
    pub power: i64,
    pub expected: BigInt,
    pub actual: BigRational,
}

impl ComparedTerm {
    pub fn matches(&self) -> bool {
        self.actual == BigRational::from_integer(self.expected.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub id: String,
    /// Series power aligned with the sequence's first term.
    pub start_power: i64,
    pub terms: Vec<ComparedTerm>,
}

impl ComparisonReport {
    /// Sequence index of the first disagreement.
    pub fn first_mismatch(&self) -> Option<i64> {
        self.terms.iter().find(|t| !t.matches()).map(|t| t.index)
    }

    pub fn all_equal(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(first) = self.terms.first() else {
            return write!(f, "{}: nothing compared", self.id);
        };
        write!(
            f,
            "{}: a({}) <-> [Z^{}], {} terms: ",
            self.id,
            first.index,
            self.start_power,
            self.terms.len()
        )?;
        match self.terms.iter().find(|t| !t.matches()) {
            None => write!(f, "all equal"),
            Some(t) => write!(
                f,
                "first mismatch at index {}: sequence has {}, series has {}",
                t.index, t.expected, t.actual
            ),
        }
    }
}

/// Compares the first `count` terms of `rec` with the coefficients of
/// `Z^start_power, Z^(start_power+1), ...` in `series`.
pub fn compare(
    series: &Series,
    rec: &SequenceRecord,
    start_power: i64,
    count: usize,
) -> Result<ComparisonReport, OeisError> {
    if rec.terms.len() < count {
        return Err(OeisError::InsufficientTerms {
            id: rec.id.clone(),
            available: rec.terms.len(),
            needed: count,
        });
    }
    let last = start_power + count as i64 - 1;
    if count > 0 && last >= series.precision() {
        return Err(OeisError::InsufficientPrecision {
            precision: series.precision(),
            needed: last,
        });
    }
    let terms = rec.terms[..count]
        .iter()
        .enumerate()
        .map(|(k, expected)| {
            let power = start_power + k as i64;
            Ok(ComparedTerm {
                index: rec.offset + k as i64,
                power,
                expected: expected.clone(),
                actual: series.coeff(power)?,
            })
        })
        .collect::<Result<_, OeisError>>()?;
    Ok(ComparisonReport {
        id: rec.id.clone(),
        start_power,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_parse() {
        for (id, _) in BUNDLED {
            let rec = load(id, &Source::Bundled).unwrap();
            assert!(rec.terms.len() >= 20, "{id}");
        }
    }

    #[test]
    fn bad_ids() {
        for id in ["X000001", "A10178", "A1017855", "a101785", "A10178x"] {
            assert!(matches!(
                load(id, &Source::Bundled),
                Err(OeisError::NotFound(_))
            ));
        }
        assert!(matches!(
            load("A000045", &Source::Bundled),
            Err(OeisError::NotFound(_))
        ));
    }

    #[test]
    fn parse_skips_comments() {
        let rec = parse_bfile("A000001", "# hello\n\n3 5\n4 7\n  # more\n5 -1\n").unwrap();
        assert_eq!(rec.offset, 3);
        assert_eq!(rec.terms, vec![5.into(), 7.into(), BigInt::from(-1)]);
    }

    #[test]
    fn parse_errors() {
        for text in ["1 2 3", "1", "x 2", "1 y", "1 2\n3 4"] {
            assert!(
                matches!(
                    parse_bfile("A000001", text),
                    Err(OeisError::ParseError { .. })
                ),
                "{text:?}"
            );
        }
        assert!(matches!(
            parse_bfile("A000001", "# only comments\n"),
            Err(OeisError::NotFound(_))
        ));
    }

    #[test]
    fn compare_alignment() {
        let rec = parse_bfile("A000001", "1 1\n2 2\n3 4\n").unwrap();
        let s = Series::from_ints(1, &[1, 2, 4], 6);
        let r = compare(&s, &rec, 1, 3).unwrap();
        assert!(r.all_equal());
        let r = compare(&s, &rec, 0, 3).unwrap();
        assert_eq!(r.first_mismatch(), Some(1));
        assert!(matches!(
            compare(&s, &rec, 1, 4),
            Err(OeisError::InsufficientTerms { .. })
        ));
        assert!(matches!(
            compare(&s, &rec, 4, 3),
            Err(OeisError::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn directory_source() {
        let dir = std::env::temp_dir().join(format!("dyck-odd-oeis-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("b000007.txt"), "0 1\n1 0\n").unwrap();
        let rec = load("A000007", &Source::Directory(dir.clone())).unwrap();
        assert_eq!(rec.terms.len(), 2);
        assert!(matches!(
            load("A000008", &Source::Directory(dir.clone())),
            Err(OeisError::NotFound(_))
        ));
        std::fs::remove_dir_all(dir).unwrap();
    }
}
