//! OEIS b-file retrieval with a local cache, and prefix identification.
//!
//! The cache is a directory of verbatim b-file copies (`bNNNNNN.txt`) plus an
//! `index.json` recording when each was fetched. A handful of b-file
//! snapshots are bundled so that everything works without a network.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::OeisError;
use crate::seq::Sequence;

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const CACHE_ENV: &str = "HOPFSEQ_OEIS_CACHE";
pub const DEFAULT_FRESHNESS: Duration = Duration::from_secs(30 * 24 * 60 * 60);

const INDEX_FILE: &str = "index.json";

static FIXTURES: &[(&str, &str)] = &[
    ("A000108", include_str!("../fixtures/oeis/b000108.txt")),
    ("A000110", include_str!("../fixtures/oeis/b000110.txt")),
    ("A000142", include_str!("../fixtures/oeis/b000142.txt")),
    ("A001037", include_str!("../fixtures/oeis/b001037.txt")),
    ("A003319", include_str!("../fixtures/oeis/b003319.txt")),
    ("A022553", include_str!("../fixtures/oeis/b022553.txt")),
    ("A059966", include_str!("../fixtures/oeis/b059966.txt")),
    ("A085686", include_str!("../fixtures/oeis/b085686.txt")),
];

/// A-numbers with a bundled snapshot.
pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(id, _)| *id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::Network => "network",
            Source::Cache => "cache",
            Source::Fixture => "fixture",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OeisEntry {
    pub a_number: String,
    /// Index of the first line of the b-file.
    pub offset: i64,
    /// Terms as listed, starting at `offset`.
    #[serde(with = "decimal_strings")]
    pub raw: Vec<BigInt>,
    /// Terms re-indexed from 1; entries at indices below 1 (the constant
    /// term of a generating function) are dropped.
    #[serde(with = "decimal_strings")]
    pub aligned: Vec<BigInt>,
    pub source: Source,
    /// Unix seconds of the download; `None` for bundled snapshots.
    pub fetched_at: Option<u64>,
}

// Big integers as JSON strings, like `Sequence` entries.
mod decimal_strings {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect()
    }
}

impl OeisEntry {
    fn from_bfile(a_number: &str, parsed: &BFile, max_terms: usize, source: Source, fetched_at: Option<u64>) -> Self {
        let skip = if parsed.offset < 1 { (1 - parsed.offset) as usize } else { 0 };
        Self {
            a_number: a_number.to_string(),
            offset: parsed.offset,
            raw: parsed.values.iter().take(max_terms).cloned().collect(),
            aligned: parsed.values.iter().skip(skip).take(max_terms).cloned().collect(),
            source,
            fetched_at,
        }
    }

    pub fn raw_sequence(&self) -> Sequence {
        Sequence::new(self.raw.iter().map(|v| v.clone().into()).collect())
    }

    /// The 1-indexed view, matching sequences written without their 0th term.
    pub fn terms(&self) -> Sequence {
        Sequence::new(self.aligned.iter().map(|v| v.clone().into()).collect())
    }
}

/// A parsed b-file: consecutive indices starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub offset: i64,
    pub values: Vec<BigInt>,
}

/// Parses `index value` lines, skipping blanks and `#` comments. Indices
/// must be consecutive.
pub fn parse_bfile(text: &str) -> Result<BFile, OeisError> {
    let mut offset = None;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = || OeisError::Parse {
            line: i + 1,
            content: line.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let index: i64 = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
        let value: BigInt = fields.next().and_then(|f| f.parse().ok()).ok_or_else(bad)?;
        if fields.next().is_some_and(|f| !f.starts_with('#')) {
            return Err(bad());
        }
        let start = *offset.get_or_insert(index);
        if index != start + values.len() as i64 {
            return Err(bad());
        }
        values.push(value);
    }
    Ok(BFile {
        offset: offset.unwrap_or(0),
        values,
    })
}

/// Canonical `A` + six digits form; a lowercase `a` is accepted.
pub fn normalize_id(id: &str) -> Result<String, OeisError> {
    let id = id.trim();
    let digits = id.strip_prefix('A').or_else(|| id.strip_prefix('a'));
    match digits {
        Some(d) if d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()) => Ok(format!("A{d}")),
        _ => Err(OeisError::InvalidId(id.to_string())),
    }
}

fn bfile_name(a_number: &str) -> String {
    format!("b{}.txt", &a_number[1..])
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn fixture(a_number: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(id, _)| *id == a_number).map(|(_, t)| *t)
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
struct IndexRecord {
    fetched_at: u64,
}

fn lock_for(key: String) -> Arc<Mutex<()>> {
    static LOCKS: OnceLock<Mutex<HashMap<String, Arc<Mutex<()>>>>> = OnceLock::new();
    let mut locks = LOCKS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    locks.entry(key).or_default().clone()
}

// Write-then-rename so readers never see a partial file.
fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    static COUNTER: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);
    let n = COUNTER.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    let tmp = path.with_extension(format!("tmp.{}.{n}", std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Match {
    pub a_number: String,
    /// b-file index of the term equal to the query's first entry.
    pub start_index: i64,
    /// `start_index` relative to the 1-indexed view: 0 means the query is a
    /// prefix of [`OeisEntry::terms`].
    pub shift: i64,
}

#[derive(Clone, Debug)]
pub struct OeisClient {
    cache_dir: PathBuf,
    base_url: String,
    offline: bool,
    freshness: Duration,
    timeout: Duration,
}

impl OeisClient {
    pub fn new(cache_dir: impl Into<PathBuf>) -> Self {
        Self {
            cache_dir: cache_dir.into(),
            base_url: DEFAULT_BASE_URL.to_string(),
            offline: false,
            freshness: DEFAULT_FRESHNESS,
            timeout: Duration::from_secs(20),
        }
    }

    /// Cache directory from `HOPFSEQ_OEIS_CACHE`, else the user cache dir.
    pub fn from_env() -> Self {
        Self::new(default_cache_dir())
    }

    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into().trim_end_matches('/').to_string();
        self
    }

    pub fn with_freshness(mut self, window: Duration) -> Self {
        self.freshness = window;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn is_offline(&self) -> bool {
        self.offline
    }

    fn read_index(&self) -> BTreeMap<String, IndexRecord> {
        fs::read_to_string(self.cache_dir.join(INDEX_FILE))
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default()
    }

    fn cached(&self, a_number: &str) -> Option<(String, Option<u64>)> {
        let text = fs::read_to_string(self.cache_dir.join(bfile_name(a_number))).ok()?;
        let stamp = self.read_index().get(a_number).map(|r| r.fetched_at);
        Some((text, stamp))
    }

    fn persist(&self, a_number: &str, body: &str, fetched_at: u64) -> Result<(), OeisError> {
        fs::create_dir_all(&self.cache_dir)?;
        write_atomic(&self.cache_dir.join(bfile_name(a_number)), body.as_bytes())?;
        let guard = lock_for(format!("{}#index", self.cache_dir.display()));
        let _held = guard.lock().unwrap_or_else(|e| e.into_inner());
        let mut index = self.read_index();
        index.insert(a_number.to_string(), IndexRecord { fetched_at });
        let json = serde_json::to_vec_pretty(&index).expect("index serializes");
        write_atomic(&self.cache_dir.join(INDEX_FILE), &json)?;
        Ok(())
    }

    pub fn bfile_url(&self, a_number: &str) -> String {
        format!("{}/{}/{}", self.base_url, a_number, bfile_name(a_number))
    }

    fn download(&self, a_number: &str) -> Result<String, DownloadError> {
        let agent = ureq::AgentBuilder::new().timeout(self.timeout).build();
        match agent.get(&self.bfile_url(a_number)).call() {
            Ok(resp) => resp
                .into_string()
                .map_err(|e| DownloadError::Other(e.to_string())),
            Err(ureq::Error::Status(404, _)) => Err(DownloadError::NotFound),
            Err(ureq::Error::Status(code, _)) => Err(DownloadError::Other(format!("HTTP {code}"))),
            Err(e) => Err(DownloadError::Other(e.to_string())),
        }
    }

    /// Up to `max_terms` terms of `id`.
    ///
    /// Tries, in order: a fresh cache copy, one download (unless offline),
    /// a stale cache copy, a bundled snapshot.
    pub fn fetch(&self, id: &str, max_terms: usize) -> Result<OeisEntry, OeisError> {
        let a_number = normalize_id(id)?;
        if max_terms == 0 {
            return Err(OeisError::InvalidQuery("max_terms must be positive".into()));
        }
        let guard = lock_for(format!("{}#{a_number}", self.cache_dir.display()));
        let _held = guard.lock().unwrap_or_else(|e| e.into_inner());

        let cached = self.cached(&a_number);
        if let Some((text, Some(stamp))) = &cached {
            if now().saturating_sub(*stamp) < self.freshness.as_secs() {
                let parsed = parse_bfile(text)?;
                return Ok(OeisEntry::from_bfile(&a_number, &parsed, max_terms, Source::Cache, Some(*stamp)));
            }
        }

        let mut reason = "offline mode".to_string();
        if !self.offline {
            match self.download(&a_number) {
                Ok(body) => {
                    let parsed = parse_bfile(&body)?;
                    let stamp = now();
                    self.persist(&a_number, &body, stamp)?;
                    return Ok(OeisEntry::from_bfile(&a_number, &parsed, max_terms, Source::Network, Some(stamp)));
                }
                Err(DownloadError::NotFound) => return Err(OeisError::NotFound(a_number)),
                Err(DownloadError::Other(e)) => reason = e,
            }
        }

        if let Some((text, stamp)) = cached {
            let parsed = parse_bfile(&text)?;
            return Ok(OeisEntry::from_bfile(&a_number, &parsed, max_terms, Source::Cache, stamp));
        }
        if let Some(text) = fixture(&a_number) {
            let parsed = parse_bfile(text)?;
            return Ok(OeisEntry::from_bfile(&a_number, &parsed, max_terms, Source::Fixture, None));
        }
        Err(OeisError::Unavailable { a_number, reason })
    }

    /// Every local sequence (cache copies override bundled snapshots), by A-number.
    fn local_sequences(&self) -> BTreeMap<String, BFile> {
        let mut out: BTreeMap<String, BFile> = BTreeMap::new();
        for (id, text) in FIXTURES {
            if let Ok(parsed) = parse_bfile(text) {
                out.insert(id.to_string(), parsed);
            }
        }
        if let Ok(dir) = fs::read_dir(&self.cache_dir) {
            for entry in dir.flatten() {
                let name = entry.file_name().to_string_lossy().into_owned();
                let Some(digits) = name.strip_prefix('b').and_then(|n| n.strip_suffix(".txt")) else {
                    continue;
                };
                let Ok(id) = normalize_id(&format!("A{digits}")) else { continue };
                if let Some(parsed) = fs::read_to_string(entry.path())
                    .ok()
                    .and_then(|t| parse_bfile(&t).ok())
                {
                    out.insert(id, parsed);
                }
            }
        }
        out
    }

    /// Local sequences containing `s` as a contiguous run, with the first
    /// position where it occurs. Never touches the network.
    pub fn identify(&self, s: &Sequence) -> Result<Vec<Match>, OeisError> {
        if s.len() < 4 {
            return Err(OeisError::InvalidQuery(format!(
                "need at least 4 terms to identify, got {}",
                s.len()
            )));
        }
        let query = s.to_integers().ok_or_else(|| {
            OeisError::InvalidQuery(format!("query has non-integral entries: {s}"))
        })?;
        Ok(self
            .local_sequences()
            .into_iter()
            .filter_map(|(a_number, bf)| {
                let pos = bf.values.windows(query.len()).position(|w| w == query.as_slice())?;
                let start_index = bf.offset + pos as i64;
                Some(Match {
                    a_number,
                    start_index,
                    shift: start_index - bf.offset.max(1),
                })
            })
            .collect())
    }
}

enum DownloadError {
    NotFound,
    Other(String),
}

pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("hopfseq").join("oeis")
}
