//! Drives the JSON API in-process: create a game, play against the engine,
//! read the verdict.
//!
//! `cargo run -p coeffgame-service --example api_session`

use std::sync::Arc;

use axum::body::Body;
use axum::http::Request;
use axum::Router;
use coeffgame_service::http::router;
use coeffgame_service::session::SessionStore;
use http_body_util::BodyExt;
use serde_json::{json, Value as Json};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Json>) -> Json {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or(Body::empty(), |b| Body::from(b.to_string())))
        .unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    let j: Json = serde_json::from_slice(&bytes).unwrap();
    println!("{method} {uri} -> {status}");
    j
}

#[tokio::main]
async fn main() {
    let app = router(Arc::new(SessionStore::in_memory()));
    let body = json!({"config": {"domain": "integers", "degree": 3, "player_one": "wanda"}, "engine_sides": ["nora"]});
    let game = call(&app, "POST", "/v1/games", Some(body)).await;
    let id = game["id"].as_str().unwrap().to_string();

    let rejected = call(&app, "POST", &format!("/v1/games/{id}/moves"), Some(json!({"index": 0, "value": "0"}))).await;
    println!("  {}", rejected["error"]);

    for (index, value) in [(2, "-12"), (0, "4")] {
        call(&app, "POST", &format!("/v1/games/{id}/moves"), Some(json!({"index": index, "value": value}))).await;
        let reply = call(&app, "POST", &format!("/v1/games/{id}/engine-move"), None).await;
        println!("  engine: {} via {} ({})", reply["move"], reply["policy_name"], reply["explanation"]);
    }

    let verdict = call(&app, "GET", &format!("/v1/games/{id}/verdict"), None).await;
    println!("  winner {} with {}", verdict["winner"], verdict["certificate"]["summary"]);
}
