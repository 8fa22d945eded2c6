//! Exploration sessions: an append-only history of known families `K`,
//! each with the addition that produced it and a candidate table.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use energy_core::completion::CompletionError;
use energy_core::spectrum::{cycle_spectrum, golden_ratio};
use energy_core::{complete_spectrum, KnownFamily, SearchResult};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::{fmt4, rows, CandidateRow};
use crate::values::parse_value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("m must be positive")]
    NoEdges,
    #[error("|K| = {known} exceeds n - 2 = {limit}")]
    TooManyKnown { known: usize, limit: usize },
    #[error("sum of squares D = {d} exceeds 2m = {two_m}")]
    SquaresExceedEdges { d: f64, two_m: f64 },
    #[error("n = {0} is too small; at least two unknown eigenvalues are needed")]
    TooFewVertices(usize),
    #[error("{0}")]
    Value(#[from] crate::values::ValueError),
    #[error("snapshot {0} does not exist")]
    NoSnapshot(usize),
    #[error("no candidate with p = {p}, root = {root} in the current table")]
    NoCandidate { p: usize, root: usize },
    #[error("invalid motif: {0}")]
    Motif(String),
    #[error("count {count} exceeds the multiplicity {available} of the adopted value")]
    AdoptCount { count: usize, available: usize },
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("session {0} not found")]
    NotFound(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed session document: {0}")]
    Json(#[from] serde_json::Error),
}

impl SessionError {
    /// True for errors caused by an input that cannot be satisfied, as
    /// opposed to a malformed one.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            SessionError::NoEdges
                | SessionError::TooManyKnown { .. }
                | SessionError::SquaresExceedEdges { .. }
                | SessionError::TooFewVertices(_)
                | SessionError::AdoptCount { .. }
        )
    }
}

/// A value as given by a client: a number, or a closed form such as
/// `"phi-1"` or `"-sqrt(2)"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueInput {
    Number(f64),
    Text(String),
}

impl ValueInput {
    fn resolve(&self) -> Result<KnownValue, SessionError> {
        match self {
            ValueInput::Number(v) => Ok(KnownValue::plain(*v)),
            ValueInput::Text(t) => {
                let v = parse_value(t)?;
                let exact = t.trim();
                Ok(if exact.parse::<f64>().is_ok() {
                    KnownValue::plain(v)
                } else {
                    KnownValue::exact(v, exact)
                })
            }
        }
    }
}

/// A member of `K` at full precision, with its closed form when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnownValue {
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub display: String,
}

impl KnownValue {
    pub fn plain(value: f64) -> Self {
        KnownValue { value, exact: None, display: fmt4(value) }
    }

    pub fn exact(value: f64, form: &str) -> Self {
        KnownValue { value, exact: Some(form.to_owned()), display: fmt4(value) }
    }
}

/// Eigenvalue patterns contributed by a substructure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Motif {
    /// `count` disjoint cycles of `length` in the complement of a regular
    /// graph. Each copy gives `-v-1` for every cycle eigenvalue `v != 2`
    /// and one `-3` for its component; with `leading`, the first copy's
    /// `-3` is left out since that component is carried by the index.
    CycleInComplement {
        length: usize,
        #[serde(default = "one")]
        count: usize,
        #[serde(default)]
        leading: bool,
    },
    ExplicitValues { values: Vec<ValueInput> },
}

fn one() -> usize {
    1
}

/// `-2cos(2 pi j / len) - 1` in closed form where one exists.
fn complement_cycle_value(len: usize, j: usize) -> KnownValue {
    let phi = golden_ratio();
    // cos(2 pi j / len) for the cases with rational or golden values
    let c = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / len as f64).cos();
    let snapped = c.round();
    if (c - snapped).abs() < 1e-9 {
        return KnownValue::plain(-snapped - 1.0);
    }
    if len == 5 {
        return if c > 0.0 {
            KnownValue::exact(-phi, "-phi")
        } else {
            KnownValue::exact(phi - 1.0, "phi-1")
        };
    }
    KnownValue::exact(-c - 1.0, &format!("-2cos(2pi*{j}/{len})-1"))
}

impl Motif {
    /// The eigenvalues this motif adds to `K`.
    pub fn contributed(&self) -> Result<Vec<KnownValue>, SessionError> {
        match self {
            Motif::CycleInComplement { length, count, leading } => {
                let len = *length;
                cycle_spectrum(len).map_err(|e| SessionError::Motif(e.to_string()))?;
                if *count == 0 {
                    return Err(SessionError::Motif("count must be positive".into()));
                }
                let mut out = Vec::new();
                for copy in 0..*count {
                    // j = len is the eigenvalue 2
                    out.extend((1..len).map(|j| complement_cycle_value(len, j)));
                    if !(copy == 0 && *leading) {
                        out.push(KnownValue::plain(-3.0));
                    }
                }
                Ok(out)
            }
            Motif::ExplicitValues { values } => values.iter().map(ValueInput::resolve).collect(),
        }
    }
}

/// Which value of a candidate row to adopt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    X,
    Y,
}

/// One extension step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Addition {
    Values { values: Vec<ValueInput> },
    /// Copies of `x` (or `y`) from row `(p, root)` of the current table;
    /// `count` defaults to that value's full multiplicity.
    Adopt {
        p: usize,
        root: usize,
        which: Which,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        count: Option<usize>,
    },
    Motif { motif: Motif },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    Initial,
    ManualValues,
    AdoptedCandidate { p: usize, root: usize, which: Which, count: usize, value: f64 },
    Motif { motif: Motif },
}

/// A finished realization request attached to a snapshot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealizationRecord {
    pub job_id: String,
    pub target: Vec<f64>,
    pub result: Option<SearchResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub index: usize,
    pub known: Vec<KnownValue>,
    pub provenance: Provenance,
    /// The addition that produced this snapshot from the previous one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub addition: Option<Addition>,
    #[serde(default)]
    pub realizations: Vec<RealizationRecord>,
}

impl Snapshot {
    pub fn family(&self) -> KnownFamily {
        KnownFamily::new(self.known.iter().map(|k| k.value).collect())
    }
}

/// Candidate table for one snapshot. An infeasible system gives an empty
/// table with the reason.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateTable {
    pub snapshot: usize,
    pub n: usize,
    pub m: usize,
    pub c_plus: f64,
    pub c_minus: f64,
    pub d: f64,
    pub rows: Vec<CandidateRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infeasible: Option<String>,
}

impl CandidateTable {
    pub fn compute(n: usize, m: usize, snapshot: usize, known: &KnownFamily) -> Self {
        let (rows, infeasible) = match complete_spectrum(n, m, known) {
            Ok(c) => (rows(&c), None),
            Err(e @ CompletionError::Infeasible { .. }) => (Vec::new(), Some(e.to_string())),
            Err(e) => (Vec::new(), Some(e.to_string())),
        };
        CandidateTable {
            snapshot,
            n,
            m,
            c_plus: known.c_plus,
            c_minus: known.c_minus,
            d: known.d,
            rows,
            infeasible,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Session {
    pub schema_version: u32,
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub history: Vec<Snapshot>,
    #[serde(skip)]
    tables: BTreeMap<usize, CandidateTable>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        (self.schema_version, &self.id, self.n, self.m, &self.history)
            == (other.schema_version, &other.id, other.n, other.m, &other.history)
    }
}

fn check_family(n: usize, m: usize, known: &[KnownValue]) -> Result<(), SessionError> {
    if m == 0 {
        return Err(SessionError::NoEdges);
    }
    if n < 2 {
        return Err(SessionError::TooFewVertices(n));
    }
    if known.len() > n - 2 {
        return Err(SessionError::TooManyKnown { known: known.len(), limit: n - 2 });
    }
    let d: f64 = known.iter().map(|k| k.value * k.value).sum();
    let two_m = 2.0 * m as f64;
    if d > two_m + 1e-9 {
        return Err(SessionError::SquaresExceedEdges { d, two_m });
    }
    Ok(())
}

impl Session {
    pub fn create(id: String, n: usize, m: usize, initial: &[ValueInput]) -> Result<Self, SessionError> {
        let known = initial.iter().map(ValueInput::resolve).collect::<Result<Vec<_>, _>>()?;
        check_family(n, m, &known)?;
        Ok(Session {
            schema_version: SCHEMA_VERSION,
            id,
            n,
            m,
            history: vec![Snapshot {
                index: 0,
                known,
                provenance: Provenance::Initial,
                addition: None,
                realizations: Vec::new(),
            }],
            tables: BTreeMap::new(),
        })
    }

    pub fn current(&self) -> &Snapshot {
        self.history.last().expect("history is never empty")
    }

    pub fn snapshot(&self, index: usize) -> Result<&Snapshot, SessionError> {
        self.history.get(index).ok_or(SessionError::NoSnapshot(index))
    }

    /// Candidate table of a snapshot, computed on first use.
    pub fn candidates(&mut self, index: usize) -> Result<&CandidateTable, SessionError> {
        let family = self.snapshot(index)?.family();
        let (n, m) = (self.n, self.m);
        Ok(self
            .tables
            .entry(index)
            .or_insert_with(|| CandidateTable::compute(n, m, index, &family)))
    }

    /// Row `(p, root)` of the current table.
    pub fn candidate(&mut self, p: usize, root: usize) -> Result<CandidateRow, SessionError> {
        let last = self.history.len() - 1;
        self.candidates(last)?
            .rows
            .iter()
            .find(|r| r.p == p && r.root == root)
            .cloned()
            .ok_or(SessionError::NoCandidate { p, root })
    }

    /// Appends a snapshot. The history is unchanged on error.
    pub fn extend(&mut self, addition: Addition) -> Result<&Snapshot, SessionError> {
        let (added, provenance) = match &addition {
            Addition::Values { values } => (
                values.iter().map(ValueInput::resolve).collect::<Result<Vec<_>, _>>()?,
                Provenance::ManualValues,
            ),
            Addition::Adopt { p, root, which, count } => {
                let row = self.candidate(*p, *root)?;
                let (value, available) = match which {
                    Which::X => (row.x, row.p),
                    Which::Y => (row.y, row.q),
                };
                let count = count.unwrap_or(available);
                if count == 0 || count > available {
                    return Err(SessionError::AdoptCount { count, available });
                }
                (
                    vec![KnownValue::plain(value); count],
                    Provenance::AdoptedCandidate { p: *p, root: *root, which: *which, count, value },
                )
            }
            Addition::Motif { motif } => (motif.contributed()?, Provenance::Motif { motif: motif.clone() }),
        };
        let mut known = self.current().known.clone();
        known.extend(added);
        check_family(self.n, self.m, &known)?;
        self.history.push(Snapshot {
            index: self.history.len(),
            known,
            provenance,
            addition: Some(addition),
            realizations: Vec::new(),
        });
        Ok(self.current())
    }

    pub fn attach_realization(&mut self, index: usize, record: RealizationRecord) -> Result<(), SessionError> {
        let snap = self.history.get_mut(index).ok_or(SessionError::NoSnapshot(index))?;
        snap.realizations.push(record);
        Ok(())
    }

    /// Rebuilds the session from its initial values and recorded additions.
    pub fn replay(&self) -> Result<Session, SessionError> {
        let first = &self.history[0];
        let initial: Vec<ValueInput> = first
            .known
            .iter()
            .map(|k| match &k.exact {
                Some(form) => ValueInput::Text(form.clone()),
                None => ValueInput::Number(k.value),
            })
            .collect();
        let mut s = Session::create(self.id.clone(), self.n, self.m, &initial)?;
        for snap in &self.history[1..] {
            if let Some(a) = &snap.addition {
                s.extend(a.clone())?;
            }
        }
        Ok(s)
    }

    /// Replaying reproduces every `K` and every candidate table bit for bit.
    pub fn replay_matches(&self) -> bool {
        let Ok(mut fresh) = self.replay() else {
            return false;
        };
        if fresh.history.len() != self.history.len() {
            return false;
        }
        let mut this = self.clone();
        (0..self.history.len()).all(|i| {
            let a: Vec<u64> = self.history[i].known.iter().map(|k| k.value.to_bits()).collect();
            let b: Vec<u64> = fresh.history[i].known.iter().map(|k| k.value.to_bits()).collect();
            let ta = serde_json::to_string(&this.candidates(i).ok()).ok();
            let tb = serde_json::to_string(&fresh.candidates(i).ok()).ok();
            a == b && ta == tb
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sessions always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, SessionError> {
        let s: Session = serde_json::from_str(text)?;
        if s.schema_version != SCHEMA_VERSION {
            return Err(SessionError::Schema(s.schema_version));
        }
        Ok(s)
    }
}

/// Motifs worth considering for the current session, never applied
/// automatically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifSuggestion {
    pub motif: Motif,
    pub contributed: Vec<KnownValue>,
    pub note: String,
}

/// For a regular-looking session (`2m / n` equal to the index in `K`),
/// cycle motifs in the complement that still fit within `|K| <= n - 2`.
pub fn suggest_motifs(session: &Session) -> Vec<MotifSuggestion> {
    let cur = session.current();
    let n = session.n;
    let degree = 2.0 * session.m as f64 / n as f64;
    let regular_index = cur.known.iter().any(|k| (k.value - degree).abs() < 1e-9);
    let free = (n - 2).saturating_sub(cur.known.len());
    let mut out = Vec::new();
    if !regular_index || degree.fract() != 0.0 || (n as f64 - 1.0 - degree - 2.0).abs() > 1e-9 {
        return out;
    }
    // complement is 2-regular: a disjoint union of cycles
    for length in 3..=n {
        for count in 1..=n / length {
            let motif = Motif::CycleInComplement { length, count, leading: false };
            let Ok(contributed) = motif.contributed() else { continue };
            if contributed.len() > free {
                break;
            }
            out.push(MotifSuggestion {
                note: format!("{count} x C{length} in the complement"),
                motif,
                contributed,
            });
        }
    }
    out
}

/// In-memory sessions with explicit save and load.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: BTreeMap<String, Session>,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: Session) {
        self.sessions.insert(s.id.clone(), s);
    }

    pub fn get(&self, id: &str) -> Result<&Session, SessionError> {
        self.sessions.get(id).ok_or_else(|| SessionError::NotFound(id.to_owned()))
    }

    pub fn get_mut(&mut self, id: &str) -> Result<&mut Session, SessionError> {
        self.sessions.get_mut(id).ok_or_else(|| SessionError::NotFound(id.to_owned()))
    }

    pub fn len(&self) -> usize {
        self.sessions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sessions.is_empty()
    }

    pub fn path_for(dir: &Path, id: &str) -> PathBuf {
        dir.join(format!("{id}.json"))
    }

    pub fn save_one(&self, dir: &Path, id: &str) -> Result<(), SessionError> {
        let s = self.get(id)?;
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{id}.json.tmp"));
        fs::write(&tmp, s.to_json())?;
        fs::rename(tmp, Self::path_for(dir, id))?;
        Ok(())
    }

    pub fn save(&self, dir: &Path) -> Result<(), SessionError> {
        self.sessions.keys().try_for_each(|id| self.save_one(dir, id))
    }

    /// Loads every `*.json` session document in `dir`.
    pub fn load(dir: &Path) -> Result<Self, SessionError> {
        let mut store = SessionStore::new();
        if !dir.exists() {
            return Ok(store);
        }
        for entry in fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                store.insert(Session::from_json(&fs::read_to_string(&path)?)?);
            }
        }
        Ok(store)
    }
}
