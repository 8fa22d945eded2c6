//! REST service over sessions and realization jobs. Field names are listed
//! in `docs/API.md`.

use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use energy_core::search::{self, Budget, Constraints, DEFAULT_MATCH_TOL};
use energy_core::{SearchSpec, Spectrum};
use serde::{Deserialize, Serialize};

use crate::jobs::{JobRegistry, JobView};
use crate::session::{
    suggest_motifs, Addition, CandidateTable, MotifSuggestion, RealizationRecord, Session, SessionError,
    SessionStore, ValueInput,
};

pub struct AppState {
    pub store: Mutex<SessionStore>,
    pub jobs: JobRegistry,
    /// Sessions are written here after every change when set.
    pub session_dir: Option<PathBuf>,
}

impl AppState {
    pub fn in_memory() -> Arc<Self> {
        Arc::new(AppState { store: Mutex::new(SessionStore::new()), jobs: JobRegistry::new(), session_dir: None })
    }

    /// Loads existing sessions from `dir` and persists to it from then on.
    pub fn with_dir(dir: PathBuf) -> Result<Arc<Self>, SessionError> {
        let store = SessionStore::load(&dir)?;
        Ok(Arc::new(AppState { store: Mutex::new(store), jobs: JobRegistry::new(), session_dir: Some(dir) }))
    }

    fn persist(&self, store: &SessionStore, id: &str) -> Result<(), ApiError> {
        match &self.session_dir {
            Some(dir) => store.save_one(dir, id).map_err(ApiError::from),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: ErrorDetail,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorDetail {
    /// `format`, `infeasible`, `not_found` or `internal`.
    pub code: String,
    pub message: String,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn format(message: impl Into<String>) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, code: "format", message: message.into() }
    }

    fn infeasible(message: impl Into<String>) -> Self {
        ApiError { status: StatusCode::UNPROCESSABLE_ENTITY, code: "infeasible", message: message.into() }
    }

    fn not_found(message: impl Into<String>) -> Self {
        ApiError { status: StatusCode::NOT_FOUND, code: "not_found", message: message.into() }
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        match &e {
            SessionError::NotFound(_) | SessionError::NoSnapshot(_) | SessionError::NoCandidate { .. } => {
                ApiError::not_found(e.to_string())
            }
            SessionError::Io(_) => ApiError {
                status: StatusCode::INTERNAL_SERVER_ERROR,
                code: "internal",
                message: e.to_string(),
            },
            _ if e.is_infeasible() => ApiError::infeasible(e.to_string()),
            _ => ApiError::format(e.to_string()),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError::format(e.body_text())
    }
}

impl From<QueryRejection> for ApiError {
    fn from(e: QueryRejection) -> Self {
        ApiError::format(e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody { error: ErrorDetail { code: self.code.to_owned(), message: self.message } };
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

#[derive(Debug, Serialize, Deserialize)]
pub struct CreateSession {
    pub n: usize,
    pub m: usize,
    #[serde(default)]
    pub known: Vec<ValueInput>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CandidatesQuery {
    /// Defaults to the current snapshot.
    pub snapshot: Option<usize>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CandidateRef {
    pub p: usize,
    pub root: usize,
}

/// Exactly one of `candidate` and `spectrum`.
#[derive(Debug, Serialize, Deserialize)]
pub struct RealizeRequest {
    #[serde(default)]
    pub snapshot: Option<usize>,
    #[serde(default)]
    pub candidate: Option<CandidateRef>,
    #[serde(default)]
    pub spectrum: Option<Vec<ValueInput>>,
    #[serde(default)]
    pub constraints: Constraints,
    #[serde(default)]
    pub tol: Option<f64>,
    #[serde(default)]
    pub budget: Option<Budget>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RealizeAccepted {
    pub job: JobView,
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/extend", post(extend_session))
        .route("/sessions/{id}/candidates", get(get_candidates))
        .route("/sessions/{id}/motifs", get(get_motifs))
        .route("/sessions/{id}/realize", post(realize))
        .route("/jobs/{id}", get(get_job))
        .with_state(state)
}

async fn create_session(
    State(st): State<Arc<AppState>>,
    body: Result<Json<CreateSession>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<Session>)> {
    let Json(req) = body?;
    let id = uuid::Uuid::new_v4().simple().to_string();
    let session = Session::create(id.clone(), req.n, req.m, &req.known)?;
    let mut store = st.store.lock().unwrap();
    store.insert(session.clone());
    st.persist(&store, &id)?;
    Ok((StatusCode::CREATED, Json(session)))
}

async fn get_session(State(st): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<Session>> {
    Ok(Json(st.store.lock().unwrap().get(&id)?.clone()))
}

async fn extend_session(
    State(st): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Result<Json<Addition>, JsonRejection>,
) -> ApiResult<Json<Session>> {
    let Json(addition) = body?;
    let mut store = st.store.lock().unwrap();
    let session = store.get_mut(&id)?;
    session.extend(addition)?;
    let out = session.clone();
    st.persist(&store, &id)?;
    Ok(Json(out))
}

async fn get_candidates(
    State(st): State<Arc<AppState>>,
    Path(id): Path<String>,
    query: Result<Query<CandidatesQuery>, QueryRejection>,
) -> ApiResult<Json<CandidateTable>> {
    let Query(q) = query?;
    let mut store = st.store.lock().unwrap();
    let session = store.get_mut(&id)?;
    let index = q.snapshot.unwrap_or(session.history.len() - 1);
    Ok(Json(session.candidates(index)?.clone()))
}

async fn get_motifs(State(st): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<Vec<MotifSuggestion>>> {
    let store = st.store.lock().unwrap();
    Ok(Json(suggest_motifs(store.get(&id)?)))
}

/// The target spectrum and class for a realization request.
fn realization_spec(session: &mut Session, req: &RealizeRequest) -> ApiResult<(usize, SearchSpec)> {
    let index = req.snapshot.unwrap_or(session.history.len() - 1);
    let known = session.snapshot(index)?.family();
    let target: Vec<f64> = match (&req.candidate, &req.spectrum) {
        (Some(c), None) => {
            let table = session.candidates(index)?;
            let row = table
                .rows
                .iter()
                .find(|r| r.p == c.p && r.root == c.root)
                .ok_or(SessionError::NoCandidate { p: c.p, root: c.root })?;
            let mut v = known.values().to_vec();
            v.extend(std::iter::repeat_n(row.x, row.p));
            v.extend(std::iter::repeat_n(row.y, row.q));
            v
        }
        (None, Some(values)) => {
            let mut v = Vec::with_capacity(values.len());
            for value in values {
                v.push(match value {
                    ValueInput::Number(x) => *x,
                    ValueInput::Text(t) => crate::values::parse_value(t).map_err(SessionError::from)?,
                });
            }
            v
        }
        _ => return Err(ApiError::format("give exactly one of `candidate` and `spectrum`")),
    };
    if target.len() != session.n {
        return Err(ApiError::infeasible(format!(
            "target has {} values, the session has n = {}",
            target.len(),
            session.n
        )));
    }
    let mut spec = SearchSpec::new(session.n).edges(session.m);
    spec.constraints = req.constraints.clone();
    spec = spec.realize(Spectrum::new(target), req.tol.unwrap_or(DEFAULT_MATCH_TOL));
    if let Some(b) = req.budget {
        spec = spec.budget(b);
    }
    spec.validate().map_err(|e| ApiError::infeasible(e.to_string()))?;
    Ok((index, spec))
}

async fn realize(
    State(st): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Result<Json<RealizeRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<RealizeAccepted>)> {
    let Json(req) = body?;
    let (index, spec) = {
        let mut store = st.store.lock().unwrap();
        realization_spec(store.get_mut(&id)?, &req)?
    };
    let target = spec_target(&spec);
    let done_state = st.clone();
    let session_id = id.clone();
    let job_id = st.jobs.spawn(
        Some((id.clone(), index)),
        move |progress| search::realize_spectrum_with(&spec, progress).map_err(|e| e.to_string()),
        move |job_id, outcome| {
            let record = RealizationRecord {
                job_id: job_id.to_owned(),
                target,
                result: outcome.as_ref().ok().cloned(),
                error: outcome.as_ref().err().cloned(),
            };
            let mut store = done_state.store.lock().unwrap();
            if let Ok(s) = store.get_mut(&session_id) {
                if s.attach_realization(index, record).is_ok() {
                    let _ = done_state.persist(&store, &session_id);
                }
            }
        },
    );
    let job = st.jobs.view(&job_id).expect("job was just registered");
    Ok((StatusCode::ACCEPTED, Json(RealizeAccepted { job })))
}

fn spec_target(spec: &SearchSpec) -> Vec<f64> {
    match &spec.objective {
        search::SearchObjective::Realize { target, .. } => target.values().to_vec(),
        _ => Vec::new(),
    }
}

async fn get_job(State(st): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult<Json<JobView>> {
    st.jobs.view(&id).map(Json).ok_or_else(|| ApiError::not_found(format!("job {id} not found")))
}

/// Serves `router` on `addr` until the process ends.
pub async fn serve(state: Arc<AppState>, addr: std::net::SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(state)).await
}
