mod common;

use std::sync::Arc;

use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use codescope_annotate::api::{BatchResponse, ConflictView, Export, SubmitResponse, TaskSummary, TaskView};
use codescope_annotate::{AppState, ServiceConfig, Status, Store};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use common::{class_with_comments, manifest};

const CONFIG: &str = r#"
seed = 11
[[annotators]]
id = "ann1"
token = "tok-1"
admin = true
[[annotators]]
id = "ann2"
token = "tok-2"
[[annotators]]
id = "ann3"
token = "tok-3"
"#;

fn app() -> Router {
    let cfg = ServiceConfig::from_toml(CONFIG).unwrap();
    let m = manifest(&[("A.java", class_with_comments("A", 2)), ("B.java", class_with_comments("B", 12))]);
    codescope_annotate::router(AppState::new(Store::in_memory(), cfg, Some(m)))
}

async fn call(app: &Router, method: Method, uri: &str, token: Option<&str>, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    if let Some(t) = token {
        req = req.header(header::AUTHORIZATION, format!("Bearer {t}"));
    }
    let req = match body {
        Some(b) => req
            .header(header::CONTENT_TYPE, "application/json")
            .body(Body::from(b.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, value)
}

fn token_of(id: &str) -> &'static str {
    match id {
        "ann1" => "tok-1",
        "ann2" => "tok-2",
        _ => "tok-3",
    }
}

#[tokio::test]
async fn authentication() {
    let app = app();
    let (s, _) = call(&app, Method::GET, "/api/v1/health", None, None).await;
    assert_eq!(s, StatusCode::OK);
    let (s, _) = call(&app, Method::GET, "/api/v1/assignments", None, None).await;
    assert_eq!(s, StatusCode::UNAUTHORIZED);
    let (s, _) = call(&app, Method::GET, "/api/v1/assignments", Some("bogus"), None).await;
    assert_eq!(s, StatusCode::UNAUTHORIZED);
    let (s, me) = call(&app, Method::GET, "/api/v1/me", Some("tok-2"), None).await;
    assert_eq!((s, me["id"].as_str()), (StatusCode::OK, Some("ann2")));
    let (s, _) = call(&app, Method::POST, "/api/v1/batches", Some("tok-2"), Some(json!({}))).await;
    assert_eq!(s, StatusCode::FORBIDDEN);
    let (s, _) = call(&app, Method::GET, "/api/v1/export", Some("tok-3"), None).await;
    assert_eq!(s, StatusCode::FORBIDDEN);
}

#[tokio::test]
async fn full_labeling_workflow() {
    let app = app();
    let (s, v) = call(&app, Method::POST, "/api/v1/batches", Some("tok-1"), Some(json!({}))).await;
    assert_eq!(s, StatusCode::CREATED);
    let batch: BatchResponse = serde_json::from_value(v).unwrap();
    assert_eq!(batch.created, 2 + 10);

    // Fetch one task through the next-assignment route of its first assignee.
    let (_, v) = call(&app, Method::GET, "/api/v1/tasks/T000001", Some("tok-3"), None).await;
    let view: TaskView = serde_json::from_value(v).unwrap();
    let [a, b] = view.assignees.clone();
    let (s, v) = call(&app, Method::GET, "/api/v1/assignments/next", Some(token_of(&a)), None).await;
    assert_eq!(s, StatusCode::OK);
    let next: TaskView = serde_json::from_value(v).unwrap();
    assert_eq!(next.task_id, "T000001");
    assert!(next.lines.iter().any(|l| !l.linkable), "comment lines are not selectable");
    assert_eq!(next.comment.start_line, 2);
    assert!(next.categories.contains(&"summary".to_string()));

    // Non-assignee cannot submit.
    let third = ["ann1", "ann2", "ann3"].into_iter().find(|x| *x != a && *x != b).unwrap();
    let body = json!({"categories": ["summary"], "links": [3]});
    let (s, _) = call(&app, Method::POST, "/api/v1/tasks/T000001/labels", Some(token_of(third)), Some(body.clone())).await;
    assert_eq!(s, StatusCode::FORBIDDEN);

    // Invalid links are rejected.
    let (s, _) = call(
        &app,
        Method::POST,
        "/api/v1/tasks/T000001/labels",
        Some(token_of(&a)),
        Some(json!({"categories": ["summary"], "links": [2]})),
    )
    .await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);

    let (s, v) = call(&app, Method::POST, "/api/v1/tasks/T000001/labels", Some(token_of(&a)), Some(body.clone())).await;
    assert_eq!(s, StatusCode::OK);
    let r: SubmitResponse = serde_json::from_value(v).unwrap();
    assert_eq!(r.status, Status::PartiallyLabeled);
    let (s, _) = call(&app, Method::POST, "/api/v1/tasks/T000001/labels", Some(token_of(&a)), Some(body)).await;
    assert_eq!(s, StatusCode::CONFLICT);

    // The re-opened task shows exactly what was stored.
    let (_, v) = call(&app, Method::GET, "/api/v1/tasks/T000001", Some(token_of(&a)), None).await;
    let view: TaskView = serde_json::from_value(v).unwrap();
    let own = view.label.unwrap();
    assert_eq!(own.links.iter().collect::<Vec<_>>(), [3]);

    // Second annotator disagrees on links.
    let (_, v) = call(
        &app,
        Method::POST,
        "/api/v1/tasks/T000001/labels",
        Some(token_of(&b)),
        Some(json!({"categories": ["summary"], "links": [3, 5]})),
    )
    .await;
    let r: SubmitResponse = serde_json::from_value(v).unwrap();
    assert_eq!(r.status, Status::Conflicted);
    assert_eq!(r.conflict, Some(codescope_annotate::ConflictKind::Link));

    let (_, v) = call(&app, Method::GET, "/api/v1/conflicts", Some(token_of(&a)), None).await;
    assert!(serde_json::from_value::<Vec<ConflictView>>(v).unwrap().is_empty());
    let (_, v) = call(&app, Method::GET, "/api/v1/conflicts", Some(token_of(third)), None).await;
    let open: Vec<ConflictView> = serde_json::from_value(v).unwrap();
    assert_eq!(open.len(), 1);
    assert_eq!(open[0].records.len(), 2);

    let resolution = json!({"categories": ["summary"], "links": [3]});
    let (s, _) = call(&app, Method::POST, "/api/v1/conflicts/T000001/resolution", Some(token_of(&b)), Some(resolution.clone())).await;
    assert_eq!(s, StatusCode::FORBIDDEN);
    let (s, v) = call(&app, Method::POST, "/api/v1/conflicts/T000001/resolution", Some(token_of(third)), Some(resolution)).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(v["status"], "resolved");

    // Second task labeled in agreement.
    let (_, v) = call(&app, Method::GET, "/api/v1/tasks/T000002", Some("tok-1"), None).await;
    let t2: TaskView = serde_json::from_value(v).unwrap();
    for who in t2.assignees.iter() {
        let (s, _) = call(
            &app,
            Method::POST,
            "/api/v1/tasks/T000002/labels",
            Some(token_of(who)),
            Some(json!({"categories": ["rationale"], "links": []})),
        )
        .await;
        assert_eq!(s, StatusCode::OK);
    }

    let (s, v) = call(&app, Method::GET, "/api/v1/export", Some("tok-1"), None).await;
    assert_eq!(s, StatusCode::OK);
    let export: Export = serde_json::from_value(v).unwrap();
    assert_eq!(export.gold.len(), 2);
    assert_eq!(export.gold[0].task_id, "T000001");

    let (_, v) = call(&app, Method::GET, "/api/v1/report", Some("tok-1"), None).await;
    assert_eq!(v["double_labeled"], 2);
    assert_eq!(v["link"], 1);
}

#[tokio::test]
async fn assignments_are_fifo_and_drain() {
    let app = app();
    call(&app, Method::POST, "/api/v1/batches", Some("tok-1"), Some(json!({"per_file_cap": 1}))).await;
    let (_, v) = call(&app, Method::GET, "/api/v1/assignments", Some("tok-1"), None).await;
    let list: Vec<TaskSummary> = serde_json::from_value(v).unwrap();
    assert!(!list.is_empty());
    let ids: Vec<_> = list.iter().map(|t| t.task_id.clone()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for id in &ids {
        let (s, _) = call(
            &app,
            Method::POST,
            &format!("/api/v1/tasks/{id}/labels"),
            Some("tok-1"),
            Some(json!({"categories": ["orphan"]})),
        )
        .await;
        assert_eq!(s, StatusCode::OK);
    }
    let (s, _) = call(&app, Method::GET, "/api/v1/assignments/next", Some("tok-1"), None).await;
    assert_eq!(s, StatusCode::NO_CONTENT);
}

#[tokio::test]
async fn categories_and_unknown_tasks() {
    let app = app();
    let (s, _) = call(&app, Method::POST, "/api/v1/categories", Some("tok-2"), Some(json!({"name": "ext:license"}))).await;
    assert_eq!(s, StatusCode::CREATED);
    let (s, _) = call(&app, Method::POST, "/api/v1/categories", Some("tok-3"), Some(json!({"name": "ext:license"}))).await;
    assert_eq!(s, StatusCode::OK);
    let (s, _) = call(&app, Method::POST, "/api/v1/categories", Some("tok-3"), Some(json!({"name": "plain"}))).await;
    assert_eq!(s, StatusCode::UNPROCESSABLE_ENTITY);
    let (_, v) = call(&app, Method::GET, "/api/v1/categories", Some("tok-3"), None).await;
    assert_eq!(v["extensions"], json!(["ext:license"]));
    assert_eq!(v["taxonomy"].as_array().unwrap().len(), 12);
    let (s, _) = call(&app, Method::GET, "/api/v1/tasks/T424242", Some("tok-3"), None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn concurrent_second_submissions() {
    let cfg = ServiceConfig::from_toml(CONFIG).unwrap();
    let files: Vec<(String, String)> = (0..8)
        .map(|i| (format!("C{i}.java"), class_with_comments(&format!("C{i}"), 1)))
        .collect();
    let refs: Vec<(&str, String)> = files.iter().map(|(p, c)| (p.as_str(), c.clone())).collect();
    let state = AppState::new(Store::in_memory(), cfg, Some(manifest(&refs)));
    let app = codescope_annotate::router(Arc::clone(&state));
    call(&app, Method::POST, "/api/v1/batches", Some("tok-1"), Some(json!({}))).await;
    let tasks: Vec<_> = state.store().tasks().cloned().collect();
    assert_eq!(tasks.len(), 8);

    let mut handles = Vec::new();
    for t in &tasks {
        for who in t.assignees.clone() {
            let app = app.clone();
            let uri = format!("/api/v1/tasks/{}/labels", t.task_id);
            handles.push(tokio::spawn(async move {
                call(&app, Method::POST, &uri, Some(token_of(&who)), Some(json!({"categories": ["summary"], "links": [3]}))).await.0
            }));
        }
    }
    for h in handles {
        assert_eq!(h.await.unwrap(), StatusCode::OK);
    }
    let store = state.store();
    assert!(store.tasks().all(|t| t.status == Status::Labeled));
    assert_eq!(store.export_gold().len(), 8);
}
