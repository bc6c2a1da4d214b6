//! OEIS b-file client with an on-disk cache and bundled fixtures.
//!
//! Offline lookups consult the cache first, then the fixtures compiled into
//! the crate. Online lookups go cache, then network, and write the cache on
//! success. The network path needs the `online` feature.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequences::{self, SequenceId};

pub const CACHE_ENV: &str = "CUBELAB_OEIS_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Network => "network",
            Source::Cache => "cache",
            Source::Fixture => "fixture",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub anum: String,
    pub terms: Vec<(i64, BigInt)>,
    pub source: Source,
}

impl BFile {
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.terms[pos].1)
    }

    pub fn first_index(&self) -> Option<i64> {
        self.terms.first().map(|(i, _)| *i)
    }
}

/// Checks the `A` + six digits shape; `A000000` is not a sequence.
pub fn validate_anum(anum: &str) -> Result<()> {
    let digits = anum.strip_prefix('A').unwrap_or("");
    if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) || digits == "000000" {
        return Err(Error::InvalidAnum(anum.to_string()));
    }
    Ok(())
}

/// Parses b-file text: `# comment` lines, blank lines, and `index value` pairs
/// with strictly increasing indices.
pub fn parse_bfile(anum: &str, text: &str, source: Source) -> Result<BFile> {
    validate_anum(anum)?;
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = || Error::MalformedBFile { line: no + 1, content: line.to_string() };
        let mut toks = trimmed.split_whitespace();
        let (Some(i), Some(v), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(bad());
        };
        let index: i64 = i.parse().map_err(|_| bad())?;
        let value: BigInt = v.parse().map_err(|_| bad())?;
        if terms.last().is_some_and(|(prev, _)| *prev >= index) {
            return Err(bad());
        }
        terms.push((index, value));
    }
    Ok(BFile { anum: anum.to_string(), terms, source })
}

pub fn to_bfile_text(b: &BFile) -> String {
    let mut out = String::new();
    for (i, v) in &b.terms {
        out.push_str(&format!("{i} {v}\n"));
    }
    out
}

/// Fixture text compiled into the crate, if any.
pub fn bundled(anum: &str) -> Option<&'static str> {
    macro_rules! fixtures {
        ($($a:literal => $file:literal),* $(,)?) => {
            match anum {
                $($a => Some(include_str!(concat!("../fixtures/oeis/", $file))),)*
                _ => None,
            }
        };
    }
    fixtures! {
        "A003946" => "b003946.txt",
        "A013609" => "b013609.txt",
        "A023444" => "b023444.txt",
        "A027907" => "b027907.txt",
        "A038220" => "b038220.txt",
        "A038717" => "b038717.txt",
        "A060188" => "b060188.txt",
        "A072221" => "b072221.txt",
        "A075848" => "b075848.txt",
        "A080956" => "b080956.txt",
        "A120908" => "b120908.txt",
        "A279019" => "b279019.txt",
    }
}

/// `$CUBELAB_OEIS_CACHE`, else `<platform cache dir>/cubelab/oeis`.
pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => dirs::cache_dir()
            .unwrap_or_else(std::env::temp_dir)
            .join("cubelab")
            .join("oeis"),
    }
}

fn cache_path(dir: &Path, anum: &str) -> PathBuf {
    dir.join(format!("b{}.txt", &anum[1..]))
}

fn writer_lock(anum: &str) -> Arc<Mutex<()>> {
    static LOCKS: OnceLock<Mutex<HashMap<String, Arc<Mutex<()>>>>> = OnceLock::new();
    let mut map = LOCKS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    map.entry(anum.to_string()).or_default().clone()
}

/// Writes through a temporary file and a rename so readers never see a
/// partial b-file; writers to the same identifier are serialized.
pub fn write_cache(dir: &Path, b: &BFile) -> Result<PathBuf> {
    validate_anum(&b.anum)?;
    let lock = writer_lock(&b.anum);
    let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let path = cache_path(dir, &b.anum);
    let tmp = dir.join(format!(".{}.{}.tmp", b.anum, std::process::id()));
    let mut file = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
    file.write_all(to_bfile_text(b).as_bytes())
        .and_then(|_| file.sync_all())
        .map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

fn read_cache(dir: &Path, anum: &str) -> Result<Option<BFile>> {
    let path = cache_path(dir, anum);
    match fs::read_to_string(&path) {
        Ok(text) => parse_bfile(anum, &text, Source::Cache).map(Some),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::io(path, e)),
    }
}

pub fn bfile_url(anum: &str) -> String {
    format!("https://oeis.org/{anum}/b{}.txt", &anum[1..])
}

#[cfg(feature = "online")]
fn download(anum: &str) -> Result<String> {
    let config = ureq::Agent::config_builder()
        .timeout_global(Some(std::time::Duration::from_secs(30)))
        .build();
    let agent = ureq::Agent::new_with_config(config);
    let net = |e: ureq::Error| Error::Network { anum: anum.to_string(), reason: e.to_string() };
    agent
        .get(&bfile_url(anum))
        .call()
        .map_err(net)?
        .body_mut()
        .read_to_string()
        .map_err(net)
}

#[cfg(not(feature = "online"))]
fn download(anum: &str) -> Result<String> {
    Err(Error::Network {
        anum: anum.to_string(),
        reason: "built without the `online` feature".into(),
    })
}

/// Looks up a b-file in the given cache directory.
pub fn fetch_in(anum: &str, offline: bool, cache_dir: &Path) -> Result<BFile> {
    validate_anum(anum)?;
    if let Some(b) = read_cache(cache_dir, anum)? {
        return Ok(b);
    }
    if offline {
        return match bundled(anum) {
            Some(text) => parse_bfile(anum, text, Source::Fixture),
            None => Err(Error::NotCached { anum: anum.to_string() }),
        };
    }
    let mut b = parse_bfile(anum, &download(anum)?, Source::Network)?;
    write_cache(cache_dir, &b)?;
    b.source = Source::Network;
    Ok(b)
}

/// Looks up a b-file in [`default_cache_dir`].
pub fn fetch(anum: &str, offline: bool) -> Result<BFile> {
    fetch_in(anum, offline, &default_cache_dir())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub position: usize,
    pub index: i64,
    pub local: String,
    pub remote: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// Positions present on both sides with equal values.
    pub matched: usize,
    /// Positions present on both sides.
    pub overlap: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `local[i]` with the remote term at index `offset + i`.
pub fn compare(local: &[BigInt], remote: &BFile, offset: i64) -> Comparison {
    let mut out = Comparison { matched: 0, overlap: 0, first_mismatch: None };
    for (pos, value) in local.iter().enumerate() {
        let index = offset + pos as i64;
        let Some(r) = remote.get(index) else { continue };
        out.overlap += 1;
        if r == value {
            out.matched += 1;
        } else if out.first_mismatch.is_none() {
            out.first_mismatch = Some(Mismatch {
                position: pos,
                index,
                local: value.to_string(),
                remote: r.to_string(),
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub id: String,
    pub anum: String,
    pub source: Source,
    pub terms: usize,
    pub comparison: Comparison,
}

/// Cross-checks the first `count` terms of a generator against its OEIS
/// entry, applying the index shift and sign of [`SequenceId::oeis`].
pub fn check_generator(id: SequenceId, count: usize, offline: bool, cache_dir: &Path) -> Result<Option<GeneratorCheck>> {
    let Some(link) = id.oeis() else { return Ok(None) };
    let remote = fetch_in(link.anum, offline, cache_dir)?;
    let start = if id.is_triangle() { 0 } else { id.first_index() as i64 } + link.shift;
    // local terms that fall before the remote entry's offset are skipped
    let skip = remote.first_index().map_or(0, |first| (first - start).max(0) as usize);
    let local = sequences::to_integers(&sequences::generate(id, count + skip)?)?;
    let local: Vec<BigInt> = local
        .into_iter()
        .skip(skip)
        .map(|v| if link.negate { -v } else { v })
        .collect();
    let comparison = compare(&local, &remote, start + skip as i64);
    Ok(Some(GeneratorCheck {
        id: id.tag().to_string(),
        anum: link.anum.to_string(),
        source: remote.source,
        terms: count,
        comparison,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn anum_validation() {
        assert!(validate_anum("A038717").is_ok());
        for bad in ["A000000", "A12345", "B038717", "A0387170", "a038717", "A03871x", ""] {
            assert!(matches!(validate_anum(bad), Err(Error::InvalidAnum(_))), "{bad}");
        }
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(fetch_in("A000000", true, dir.path()), Err(Error::InvalidAnum(_))));
        assert!(matches!(fetch_in("A000000", false, dir.path()), Err(Error::InvalidAnum(_))));
    }

    #[test]
    fn parser_rules() {
        let b = parse_bfile("A000045", "# fib\n0 0\n1 1\n2 1\n\n3 2\n", Source::Fixture).unwrap();
        assert_eq!(b.terms.len(), 4);
        assert_eq!(b.get(3), Some(&BigInt::from(2)));
        let huge = parse_bfile("A000045", "7 123456789012345678901234567890\n", Source::Fixture).unwrap();
        assert_eq!(huge.terms[0].1.to_string(), "123456789012345678901234567890");
        for bad in ["0 1 2", "0", "x 1", "0 1.5", "1 1\n1 2", "2 1\n1 1", "// c"] {
            assert!(
                matches!(parse_bfile("A000045", bad, Source::Fixture), Err(Error::MalformedBFile { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn fixtures_parse() {
        let dir = tempfile::tempdir().unwrap();
        for id in SequenceId::ALL {
            if let Some(link) = id.oeis() {
                let b = fetch_in(link.anum, true, dir.path()).unwrap();
                assert_eq!(b.source, Source::Fixture);
                assert!(b.terms.len() >= 20, "{}", link.anum);
            }
        }
        let b = fetch_in("A038717", true, dir.path()).unwrap();
        assert_eq!(b.terms[..4].iter().map(|t| t.1.clone()).collect::<Vec<_>>(), ints(&[1, 1, 1, 0]));
        assert!(fetch_in("A023444", true, dir.path()).is_ok());
        assert!(matches!(fetch_in("A000045", true, dir.path()), Err(Error::NotCached { .. })));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let fixture = fetch_in("A075848", true, dir.path()).unwrap();
        let path = write_cache(dir.path(), &fixture).unwrap();
        let before = fs::read(&path).unwrap();
        let cached = fetch_in("A075848", true, dir.path()).unwrap();
        assert_eq!(cached.source, Source::Cache);
        assert_eq!(cached.terms, fixture.terms);
        write_cache(dir.path(), &cached).unwrap();
        assert_eq!(fs::read(&path).unwrap(), before);
        // cache wins over the fixture once present
        let custom = BFile { anum: "A075848".into(), terms: vec![(0, BigInt::from(7))], source: Source::Network };
        write_cache(dir.path(), &custom).unwrap();
        assert_eq!(fetch_in("A075848", true, dir.path()).unwrap().terms, custom.terms);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1, "no temp files left behind");
    }

    #[test]
    fn concurrent_cache_writers() {
        let dir = tempfile::tempdir().unwrap();
        let fixture = fetch_in("A060188", true, dir.path()).unwrap();
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| write_cache(dir.path(), &fixture).unwrap());
            }
        });
        assert_eq!(fetch_in("A060188", true, dir.path()).unwrap().terms, fixture.terms);
    }

    #[cfg(not(feature = "online"))]
    #[test]
    fn online_without_feature_fails() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(fetch_in("A000045", false, dir.path()), Err(Error::Network { .. })));
    }

    #[test]
    fn compare_examples() {
        let remote = parse_bfile("A000001", "0 1\n1 2\n2 3\n", Source::Fixture).unwrap();
        let same = compare(&ints(&[1, 2, 3]), &remote, 0);
        assert_eq!((same.matched, same.overlap, same.is_match()), (3, 3, true));
        let altered = compare(&ints(&[1, 5, 3]), &remote, 0);
        assert_eq!(altered.matched, 2);
        assert_eq!(altered.first_mismatch.as_ref().map(|m| m.position), Some(1));
        let longer = compare(&ints(&[1, 2, 3, 4, 5]), &remote, 0);
        assert_eq!((longer.matched, longer.overlap, longer.is_match()), (3, 3, true));
        let shifted = compare(&ints(&[2, 3]), &remote, 1);
        assert_eq!(shifted.matched, 2);
    }

    #[test]
    fn generators_match_fixtures() {
        let dir = tempfile::tempdir().unwrap();
        for id in SequenceId::ALL {
            let Some(check) = check_generator(id, 15, true, dir.path()).unwrap() else {
                assert!(matches!(id, SequenceId::ProdSeq | SequenceId::BallCoeff));
                continue;
            };
            assert_eq!(check.comparison.overlap, 15, "{id}");
            assert!(check.comparison.is_match(), "{id}: {:?}", check.comparison.first_mismatch);
        }
    }

    #[test]
    fn shifted_links_catch_wrong_offsets() {
        // the negated links only line up with the documented shift
        let dir = tempfile::tempdir().unwrap();
        let remote = fetch_in("A080956", true, dir.path()).unwrap();
        let local: Vec<BigInt> = sequences::to_integers(&sequences::generate(SequenceId::A080956Neg, 10).unwrap())
            .unwrap()
            .into_iter()
            .map(|v| -v)
            .collect();
        assert!(!compare(&local, &remote, 0).is_match());
        assert!(compare(&local, &remote, -1).is_match());
    }
}
