//! HTTP/JSON session server.
//!
//! - `POST /sessions` with `{"qp": ...}` creates a session, returning `{"id"}`
//! - `GET /sessions/{id}` returns the full [`SessionState`]
//! - `POST /sessions/{id}/mutate` with `{"vertex"}` mutates the current QP
//! - `POST /sessions/{id}/checkout` with `{"node"}` moves to a history node
//!
//! Failed mathematical preconditions answer 409 with the error code, bad
//! input 400 and unknown sessions or nodes 404. Errors carry the same
//! `{"error", "detail"}` body the command line prints.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::format::{qp_from_json, QpJson};
use crate::session::{Session, SessionSnapshot, SessionState};

type Shared = Arc<Mutex<Session>>;

/// Sessions by id. Each session has its own lock, so a long mutation only
/// blocks requests to the same session.
#[derive(Default)]
pub struct AppState {
    sessions: Mutex<BTreeMap<String, Shared>>,
    next_id: Mutex<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub detail: String,
}

impl ErrorBody {
    pub fn from_error(e: &Error) -> Self {
        ErrorBody { error: e.code().to_string(), detail: e.to_string() }
    }
}

struct ApiError(Error);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match &self.0 {
            Error::UnknownSession(_) | Error::UnknownNode(_) => StatusCode::NOT_FOUND,
            e if e.is_precondition() => StatusCode::CONFLICT,
            _ => StatusCode::BAD_REQUEST,
        };
        (status, Json(ErrorBody::from_error(&self.0))).into_response()
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        ApiError(e)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CreateRequest {
    pub qp: QpJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CreateResponse {
    pub id: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MutateRequest {
    pub vertex: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckoutRequest {
    pub node: String,
}

impl AppState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a session under a fresh id `s1`, `s2`, ...
    pub fn create(&self, qp: crate::jacobian::Qp) -> String {
        let mut next = self.next_id.lock().expect("lock");
        let mut sessions = self.sessions.lock().expect("lock");
        let id = loop {
            *next += 1;
            let id = format!("s{next}");
            if !sessions.contains_key(&id) {
                break id;
            }
        };
        sessions.insert(id.clone(), Arc::new(Mutex::new(Session::new(id.clone(), qp))));
        id
    }

    fn get(&self, id: &str) -> Result<Shared, Error> {
        self.sessions.lock().expect("lock").get(id).cloned().ok_or_else(|| Error::UnknownSession(id.to_string()))
    }

    pub fn snapshot(&self) -> Vec<SessionSnapshot> {
        let sessions: Vec<Shared> = self.sessions.lock().expect("lock").values().cloned().collect();
        sessions.iter().map(|s| s.lock().expect("lock").snapshot()).collect()
    }

    pub fn restore(snapshots: &[SessionSnapshot]) -> crate::Result<Self> {
        let state = AppState::new();
        {
            let mut sessions = state.sessions.lock().expect("lock");
            for s in snapshots {
                sessions.insert(s.id.clone(), Arc::new(Mutex::new(Session::restore(s)?)));
            }
        }
        Ok(state)
    }
}

async fn create(State(app): State<Arc<AppState>>, Json(req): Json<CreateRequest>) -> Result<Json<CreateResponse>, ApiError> {
    let qp = qp_from_json(&req.qp)?;
    Ok(Json(CreateResponse { id: app.create(qp) }))
}

async fn show(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Json<SessionState>, ApiError> {
    let s = app.get(&id)?;
    Ok(Json(blocking(move || Ok(s.lock().expect("lock").state())).await?))
}

async fn mutate(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Json(req): Json<MutateRequest>,
) -> Result<Json<SessionState>, ApiError> {
    let s = app.get(&id)?;
    let state = blocking(move || {
        let mut s = s.lock().expect("lock");
        s.mutate(&req.vertex)?;
        Ok(s.state())
    })
    .await?;
    Ok(Json(state))
}

async fn checkout(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    Json(req): Json<CheckoutRequest>,
) -> Result<Json<SessionState>, ApiError> {
    let s = app.get(&id)?;
    let state = blocking(move || {
        let mut s = s.lock().expect("lock");
        s.checkout(&req.node)?;
        Ok(s.state())
    })
    .await?;
    Ok(Json(state))
}

/// Runs algebra off the async workers.
async fn blocking<T: Send + 'static>(f: impl FnOnce() -> crate::Result<T> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f).await.expect("worker panicked").map_err(ApiError)
}

pub fn router(app: Arc<AppState>) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/mutate", post(mutate))
        .route("/sessions/{id}/checkout", post(checkout))
        .with_state(app)
}

/// Where sessions are saved on shutdown and loaded from on start.
#[derive(Debug, Clone, Default)]
pub struct ServeOptions {
    pub port: u16,
    pub snapshot: Option<PathBuf>,
}

/// Serves until interrupted, then writes the snapshot if one is configured.
pub async fn serve(app: Arc<AppState>, opts: &ServeOptions) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", opts.port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(app.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = &opts.snapshot {
        std::fs::write(path, crate::format::to_string(&app.snapshot()))?;
    }
    Ok(())
}

/// Loads saved sessions, or starts empty when the file does not exist.
pub fn load_snapshot(path: &std::path::Path) -> crate::Result<AppState> {
    match std::fs::read_to_string(path) {
        Ok(text) => AppState::restore(&crate::format::from_str::<Vec<SessionSnapshot>>(&text)?),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(AppState::new()),
        Err(e) => Err(Error::Parse(format!("{}: {e}", path.display()))),
    }
}
