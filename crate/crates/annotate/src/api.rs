//! HTTP API under `/api/v1`. Every route except `/health` requires an
//! `Authorization: Bearer <token>` header naming a configured annotator.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::{SystemTime, UNIX_EPOCH};

use axum::extract::{FromRequestParts, Path, State};
use axum::http::request::Parts;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use codescope_core::corpus::CorpusManifest;
use codescope_core::gold::{taxonomy_stats, CategoryStats, GoldRecord, TAXONOMY};
use codescope_core::linkers::LinkSet;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::config::{Annotator, ServiceConfig};
use crate::store::{AgreementReport, AnnotationTask, ConflictKind, LabelRecord, Status, Store, StoreError, TaskLine};

pub struct AppState {
    store: Mutex<Store>,
    config: ServiceConfig,
    manifest: Option<CorpusManifest>,
}

impl AppState {
    pub fn new(store: Store, config: ServiceConfig, manifest: Option<CorpusManifest>) -> Arc<Self> {
        Arc::new(Self {
            store: Mutex::new(store),
            config,
            manifest,
        })
    }

    /// All writes go through this one lock, so reads see consistent state.
    pub fn store(&self) -> MutexGuard<'_, Store> {
        self.store.lock().unwrap_or_else(|e| e.into_inner())
    }
}

#[derive(Debug)]
pub struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

impl From<StoreError> for ApiError {
    fn from(e: StoreError) -> Self {
        let code = match &e {
            StoreError::UnknownTask(_) => StatusCode::NOT_FOUND,
            StoreError::NotAssignee { .. } | StoreError::ResolverIsAssignee { .. } => StatusCode::FORBIDDEN,
            StoreError::AlreadySubmitted { .. } | StoreError::WrongStatus { .. } => StatusCode::CONFLICT,
            StoreError::Io(_) | StoreError::Json(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError(code, e.to_string())
    }
}

type ApiResult<T> = Result<T, ApiError>;

/// The authenticated annotator.
pub struct Caller(pub Annotator);

impl FromRequestParts<Arc<AppState>> for Caller {
    type Rejection = ApiError;

    async fn from_request_parts(parts: &mut Parts, state: &Arc<AppState>) -> Result<Self, Self::Rejection> {
        let token = parts
            .headers
            .get(header::AUTHORIZATION)
            .and_then(|v| v.to_str().ok())
            .and_then(|v| v.strip_prefix("Bearer "))
            .ok_or_else(|| ApiError(StatusCode::UNAUTHORIZED, "missing bearer token".into()))?;
        state
            .config
            .by_token(token.trim())
            .cloned()
            .map(Caller)
            .ok_or_else(|| ApiError(StatusCode::UNAUTHORIZED, "unknown token".into()))
    }
}

impl Caller {
    fn require_admin(&self) -> ApiResult<()> {
        if self.0.admin {
            Ok(())
        } else {
            Err(ApiError(StatusCode::FORBIDDEN, "admin only".into()))
        }
    }
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskSummary {
    pub task_id: String,
    pub path: String,
    pub comment_id: String,
    pub status: Status,
}

impl From<&AnnotationTask> for TaskSummary {
    fn from(t: &AnnotationTask) -> Self {
        Self {
            task_id: t.task_id.clone(),
            path: t.path.clone(),
            comment_id: t.comment_id.clone(),
            status: t.status,
        }
    }
}

/// What an annotator sees: numbered method lines, which of them may be
/// selected, and the comment under review.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskView {
    pub task_id: String,
    pub path: String,
    pub status: Status,
    pub assignees: [String; 2],
    pub comment: CommentView,
    pub lines: Vec<TaskLine>,
    pub categories: Vec<String>,
    /// The caller's own label, if submitted.
    pub label: Option<LabelRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommentView {
    pub id: String,
    pub text: String,
    pub start_line: usize,
    pub end_line: usize,
}

fn task_view(store: &Store, task: &AnnotationTask, caller: &str) -> TaskView {
    TaskView {
        task_id: task.task_id.clone(),
        path: task.path.clone(),
        status: task.status,
        assignees: task.assignees.clone(),
        comment: CommentView {
            id: task.comment_id.clone(),
            text: task.comment_text.clone(),
            start_line: task.comment_start,
            end_line: task.comment_end,
        },
        lines: task.lines.clone(),
        categories: store.categories(),
        label: store
            .labels(&task.task_id)
            .iter()
            .find(|r| r.annotator_id == caller)
            .cloned(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelBody {
    pub categories: BTreeSet<String>,
    #[serde(default)]
    pub links: LinkSet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubmitResponse {
    pub task_id: String,
    pub status: Status,
    pub conflict: Option<ConflictKind>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConflictView {
    pub task_id: String,
    pub path: String,
    pub kind: ConflictKind,
    pub records: Vec<LabelRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryList {
    pub taxonomy: Vec<String>,
    pub extensions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewCategory {
    pub name: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BatchRequest {
    pub seed: Option<u64>,
    pub per_file_cap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchResponse {
    pub created: usize,
    pub task_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Export {
    pub gold: Vec<GoldRecord>,
    pub taxonomy: Vec<CategoryStats>,
}

pub fn router(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/api/v1/health", get(|| async { Json(json!({ "status": "ok" })) }))
        .route("/api/v1/me", get(me))
        .route("/api/v1/assignments", get(assignments))
        .route("/api/v1/assignments/next", get(next_assignment))
        .route("/api/v1/tasks/{id}", get(fetch_task))
        .route("/api/v1/tasks/{id}/labels", post(submit_label))
        .route("/api/v1/categories", get(categories).post(add_category))
        .route("/api/v1/conflicts", get(conflicts))
        .route("/api/v1/conflicts/{id}/resolution", post(resolve))
        .route("/api/v1/batches", post(create_batch))
        .route("/api/v1/export", get(export))
        .route("/api/v1/report", get(report))
        .with_state(state)
}

async fn me(Caller(a): Caller) -> Json<serde_json::Value> {
    Json(json!({ "id": a.id, "admin": a.admin }))
}

async fn assignments(State(st): State<Arc<AppState>>, Caller(a): Caller) -> Json<Vec<TaskSummary>> {
    let store = st.store();
    Json(store.assignments(&a.id).into_iter().map(TaskSummary::from).collect())
}

async fn next_assignment(State(st): State<Arc<AppState>>, Caller(a): Caller) -> Response {
    let store = st.store();
    match store.assignments(&a.id).first() {
        Some(t) => Json(task_view(&store, t, &a.id)).into_response(),
        None => StatusCode::NO_CONTENT.into_response(),
    }
}

async fn fetch_task(
    State(st): State<Arc<AppState>>,
    Caller(a): Caller,
    Path(id): Path<String>,
) -> ApiResult<Json<TaskView>> {
    let store = st.store();
    let task = store.task(&id)?;
    Ok(Json(task_view(&store, task, &a.id)))
}

async fn submit_label(
    State(st): State<Arc<AppState>>,
    Caller(a): Caller,
    Path(id): Path<String>,
    Json(body): Json<LabelBody>,
) -> ApiResult<Json<SubmitResponse>> {
    let mut store = st.store();
    let status = store.submit_label(LabelRecord {
        task_id: id.clone(),
        annotator_id: a.id,
        categories: body.categories,
        links: body.links,
        timestamp: now_ms(),
    })?;
    let conflict = store.conflict(&id).map(|c| c.kind);
    Ok(Json(SubmitResponse {
        task_id: id,
        status,
        conflict,
    }))
}

async fn categories(State(st): State<Arc<AppState>>, _: Caller) -> Json<CategoryList> {
    let store = st.store();
    Json(CategoryList {
        taxonomy: TAXONOMY.iter().map(|s| s.to_string()).collect(),
        extensions: store.extensions().iter().cloned().collect(),
    })
}

async fn add_category(
    State(st): State<Arc<AppState>>,
    _: Caller,
    Json(body): Json<NewCategory>,
) -> ApiResult<StatusCode> {
    let added = st.store().add_category(&body.name)?;
    Ok(if added { StatusCode::CREATED } else { StatusCode::OK })
}

async fn conflicts(State(st): State<Arc<AppState>>, Caller(a): Caller) -> ApiResult<Json<Vec<ConflictView>>> {
    let store = st.store();
    let mut out = Vec::new();
    for c in store.open_conflicts(&a.id) {
        out.push(ConflictView {
            task_id: c.task_id.clone(),
            path: store.task(&c.task_id)?.path.clone(),
            kind: c.kind,
            records: store.labels(&c.task_id).to_vec(),
        });
    }
    Ok(Json(out))
}

async fn resolve(
    State(st): State<Arc<AppState>>,
    Caller(a): Caller,
    Path(id): Path<String>,
    Json(body): Json<LabelBody>,
) -> ApiResult<Json<SubmitResponse>> {
    let mut store = st.store();
    let status = store.resolve(LabelRecord {
        task_id: id.clone(),
        annotator_id: a.id,
        categories: body.categories,
        links: body.links,
        timestamp: now_ms(),
    })?;
    let conflict = store.conflict(&id).map(|c| c.kind);
    Ok(Json(SubmitResponse {
        task_id: id,
        status,
        conflict,
    }))
}

async fn create_batch(
    State(st): State<Arc<AppState>>,
    caller: Caller,
    body: Option<Json<BatchRequest>>,
) -> ApiResult<(StatusCode, Json<BatchResponse>)> {
    caller.require_admin()?;
    let req = body.map(|Json(b)| b).unwrap_or_default();
    let manifest = st
        .manifest
        .as_ref()
        .ok_or_else(|| ApiError(StatusCode::UNPROCESSABLE_ENTITY, "service started without a manifest".into()))?;
    let cap = req.per_file_cap.unwrap_or(st.config.per_file_cap);
    if cap == 0 {
        return Err(ApiError(StatusCode::UNPROCESSABLE_ENTITY, "per_file_cap must be positive".into()));
    }
    let tasks = st.store().create_batch(
        manifest,
        &st.config.pool(),
        cap,
        req.seed.unwrap_or(st.config.seed),
    )?;
    Ok((
        StatusCode::CREATED,
        Json(BatchResponse {
            created: tasks.len(),
            task_ids: tasks.into_iter().map(|t| t.task_id).collect(),
        }),
    ))
}

async fn export(State(st): State<Arc<AppState>>, caller: Caller) -> ApiResult<Json<Export>> {
    caller.require_admin()?;
    let gold = st.store().export_gold();
    let taxonomy = taxonomy_stats(&gold);
    Ok(Json(Export { gold, taxonomy }))
}

async fn report(State(st): State<Arc<AppState>>, caller: Caller) -> ApiResult<Json<AgreementReport>> {
    caller.require_admin()?;
    Ok(Json(st.store().agreement()))
}

/// Binds `addr` and serves until the process is stopped.
pub async fn serve(addr: &str, state: Arc<AppState>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("annotation service listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state)).await
}
