//! Double-annotation workflow for inner comments: per-file sampling, two
//! labelers per file, conflict detection, third-party resolution and gold
//! export, with an HTTP front end.

pub mod api;
pub mod config;
pub mod store;

pub use api::{router, serve, AppState};
pub use config::{Annotator, ServiceConfig};
pub use store::{
    conflict_kind, AgreementReport, AnnotationTask, Conflict, ConflictKind, LabelRecord, Status, Store,
    StoreError,
};
