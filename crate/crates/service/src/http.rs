//! JSON API under `/v1`.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use coeffgame::checks::{all_checks, theorem_table_check};
use coeffgame::error::GameError;
use coeffgame::wire::{config_from_json, move_from_json, move_to_json, player_from_json, verdict_to_json, WireError};
use serde_json::{json, Value as Json};

use crate::session::{ServiceError, SessionStore};

pub type AppState = Arc<SessionStore>;

pub struct ApiError(ServiceError);

impl<E: Into<ServiceError>> From<E> for ApiError {
    fn from(e: E) -> Self {
        ApiError(e.into())
    }
}

fn status_for(e: &ServiceError) -> StatusCode {
    match e {
        ServiceError::NotFound(_) => StatusCode::NOT_FOUND,
        ServiceError::NotEngineTurn(_) => StatusCode::CONFLICT,
        ServiceError::Storage(_) => StatusCode::INTERNAL_SERVER_ERROR,
        ServiceError::Wire(WireError::Malformed(_)) => StatusCode::BAD_REQUEST,
        ServiceError::Wire(WireError::Game(g)) | ServiceError::Game(g) => match g {
            GameError::IncompleteGame => StatusCode::NOT_FOUND,
            GameError::GameOver | GameError::NotLastMove | GameError::Inapplicable(_) => StatusCode::CONFLICT,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        },
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({"error": {"code": self.0.code(), "message": self.0.to_string()}});
        (status_for(&self.0), axum::Json(body)).into_response()
    }
}

type ApiResult = Result<Response, ApiError>;

fn parse_body(body: &Bytes) -> Result<Json, ApiError> {
    if body.is_empty() {
        return Ok(json!({}));
    }
    serde_json::from_slice(body).map_err(|e| ApiError(ServiceError::Wire(WireError::Malformed(e.to_string()))))
}

fn ok(j: Json) -> ApiResult {
    Ok(axum::Json(j).into_response())
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    tokio::task::spawn_blocking(f).await.expect("worker task panicked")
}

async fn create_game(State(store): State<AppState>, body: Bytes) -> ApiResult {
    let j = parse_body(&body)?;
    let config = config_from_json(j.get("config").unwrap_or(&Json::Null))?;
    let engine_sides = match j.get("engine_sides") {
        None | Some(Json::Null) => Vec::new(),
        Some(Json::Array(items)) => items.iter().map(player_from_json).collect::<Result<_, _>>()?,
        Some(_) => return Err(WireError::Malformed("engine_sides must be an array".into()).into()),
    };
    let use_solver = j.get("use_solver").and_then(Json::as_bool).unwrap_or(false);
    let snap = store.create(config, engine_sides, use_solver)?;
    Ok((StatusCode::CREATED, axum::Json(snap.to_json())).into_response())
}

async fn get_game(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    ok(store.get(&id)?.to_json())
}

async fn post_move(State(store): State<AppState>, Path(id): Path<String>, body: Bytes) -> ApiResult {
    let j = parse_body(&body)?;
    let snap = store.get(&id)?;
    let mv = move_from_json(snap.state.domain(), &j)?;
    ok(store.play(&id, mv)?.to_json())
}

async fn engine_move(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let (mv, snap) = blocking(move || store.engine_move(&id)).await?;
    ok(json!({
        "move": move_to_json(&mv.mv),
        "policy_name": mv.policy,
        "explanation": mv.explanation,
        "game": snap.to_json(),
    }))
}

async fn verdict(State(store): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let v = blocking(move || store.verdict(&id)).await?;
    ok(verdict_to_json(&v))
}

/// The worked-example checks plus the finite-field table.
pub fn verify_report() -> Json {
    let checks = all_checks();
    let (_, table) = theorem_table_check();
    json!({
        "all_pass": checks.iter().all(|c| c.pass),
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "table": table.to_json(),
    })
}

async fn verify() -> ApiResult {
    ok(blocking(verify_report).await)
}

pub fn router(store: AppState) -> Router {
    Router::new()
        .route("/v1/games", post(create_game))
        .route("/v1/games/{id}", get(get_game))
        .route("/v1/games/{id}/moves", post(post_move))
        .route("/v1/games/{id}/engine-move", post(engine_move))
        .route("/v1/games/{id}/verdict", get(verdict))
        .route("/v1/verify", get(verify))
        .with_state(store)
}

pub async fn serve(addr: &str, store: AppState) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(store)).await
}
