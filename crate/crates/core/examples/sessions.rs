//! Exploration sessions and the HTTP API, driven in process.
//!
//! Run with `cargo run --example sessions`. The same API is served by
//! `qpmut serve --port 8080 --qp examples/data/triangle_qp.json`.

use std::sync::Arc;

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use qpmut::format::{from_str, qp_from_json, QpJson};
use qpmut::server::{router, AppState};
use qpmut::session::Session;
use tower::ServiceExt;

async fn call(app: &axum::Router, method: &str, uri: &str, body: serde_json::Value) -> (u16, serde_json::Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status().as_u16();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(serde_json::Value::Null))
}

#[tokio::main]
async fn main() -> qpmut::Result<()> {
    let qp = qp_from_json(&from_str::<QpJson>(include_str!("data/triangle_qp.json"))?)?;
    let mut s = Session::new("demo", qp);
    for k in ["2", "1", "2"] {
        let node = s.mutate(k)?;
        println!("mutated at {k} -> {node}");
    }
    s.checkout("n1")?;
    s.mutate("3")?;
    // repeating an explored mutation returns to the existing node
    s.checkout("n0")?;
    println!("mutating the root at 2 again -> {}", s.mutate("2")?);
    for n in s.history() {
        println!("  {} parent {:?} via {:?}: {} arrows, order {}", n.id, n.parent, n.vertex, n.num_arrows, n.order);
    }
    let state = s.state();
    println!("current {} with Jacobian dims {:?}", state.current, state.jacobian_dims.dims);

    let app = router(Arc::new(AppState::new()));
    let qp: serde_json::Value = serde_json::from_str(include_str!("data/triangle_qp.json")).unwrap();
    let (_, created) = call(&app, "POST", "/sessions", serde_json::json!({ "qp": qp })).await;
    let id = created["id"].as_str().unwrap().to_string();
    let (status, state) = call(&app, "POST", &format!("/sessions/{id}/mutate"), serde_json::json!({"vertex": "2"})).await;
    println!("POST /sessions/{id}/mutate -> {status}, current {}", state["current"]);
    let (status, err) = call(&app, "POST", &format!("/sessions/{id}/mutate"), serde_json::json!({"vertex": "7"})).await;
    println!("mutating at an unknown vertex -> {status} {err}");
    Ok(())
}
