// The REST service driven in-process: create a session, read its table,
// start a realization job and poll it.

use std::time::Duration;

use axum::body::Body;
use axum::http::Request;
use energy_explorer::api::{router, AppState};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(state: &std::sync::Arc<AppState>, method: &str, uri: &str, body: Option<Value>) -> Value {
    let body = body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty);
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body)
        .expect("valid request");
    let resp = router(state.clone()).oneshot(req).await.expect("infallible");
    let bytes = resp.into_body().collect().await.expect("body").to_bytes();
    serde_json::from_slice(&bytes).expect("json body")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(async {
        let st = AppState::in_memory();
        let session = call(&st, "POST", "/sessions", Some(json!({ "n": 16, "m": 80, "known": [10] }))).await;
        let id = session["id"].as_str().ok_or("no id")?.to_owned();
        let table = call(&st, "GET", &format!("/sessions/{id}/candidates"), None).await;
        for row in table["rows"].as_array().ok_or("no rows")? {
            let d = &row["display"];
            println!("p={} x={} y={} E={} {}", row["p"], d["x"], d["y"], d["energy"], d["mark"]);
        }
        let accepted = call(
            &st,
            "POST",
            &format!("/sessions/{id}/realize"),
            Some(json!({ "candidate": { "p": 5, "root": 0 }, "constraints": { "regular": 10 } })),
        )
        .await;
        let job_id = accepted["job"]["id"].as_str().ok_or("no job")?.to_owned();
        let job = loop {
            let job = call(&st, "GET", &format!("/jobs/{job_id}"), None).await;
            if job["status"] == "succeeded" || job["status"] == "failed" {
                break job;
            }
            tokio::time::sleep(Duration::from_millis(10)).await;
        };
        println!("job {}: {}", job["status"], job["result"]["best"][0]["graph6"]);
        if job["result"]["best"].as_array().map_or(0, Vec::len) != 1 {
            return Err("expected exactly one realisation".into());
        }
        Ok::<(), Box<dyn std::error::Error>>(())
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
