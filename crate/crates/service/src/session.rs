//! Live games keyed by id, optionally persisted as one JSON file per game.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use coeffgame::error::GameError;
use coeffgame::game::{new_game, DomainSpec, GameConfig, GameState, Move, Player, Verdict};
use coeffgame::solver::{best_move_fq, solve_fq, SolveResult, MAX_DEGREE, MAX_Q};
use coeffgame::strategies::{policy_move, EngineMove};
use coeffgame::wire::{player_from_json, state_to_json, GameRecord, WireError};
use serde_json::{json, Value as Json};

#[derive(Debug)]
pub enum ServiceError {
    NotFound(String),
    NotEngineTurn(Player),
    Game(GameError),
    Wire(WireError),
    Storage(String),
}

impl ServiceError {
    pub fn code(&self) -> &'static str {
        match self {
            ServiceError::NotFound(_) => "SessionNotFound",
            ServiceError::NotEngineTurn(_) => "NotEngineTurn",
            ServiceError::Game(e) => e.code(),
            ServiceError::Wire(e) => e.code(),
            ServiceError::Storage(_) => "StorageError",
        }
    }
}

impl std::fmt::Display for ServiceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ServiceError::NotFound(id) => write!(f, "no game with id {id:?}"),
            ServiceError::NotEngineTurn(p) => write!(f, "the engine does not play for {p}"),
            ServiceError::Game(e) => write!(f, "{e}"),
            ServiceError::Wire(e) => write!(f, "{e}"),
            ServiceError::Storage(m) => write!(f, "storage: {m}"),
        }
    }
}

impl std::error::Error for ServiceError {}

impl From<GameError> for ServiceError {
    fn from(e: GameError) -> Self {
        ServiceError::Game(e)
    }
}

impl From<WireError> for ServiceError {
    fn from(e: WireError) -> Self {
        ServiceError::Wire(e)
    }
}

struct Session {
    state: GameState,
    engine_sides: Vec<Player>,
    use_solver: bool,
    solved: Option<Arc<SolveResult>>,
}

/// A copy of one game taken under its lock.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub id: String,
    pub state: GameState,
    pub engine_sides: Vec<Player>,
    pub use_solver: bool,
}

impl Snapshot {
    pub fn to_json(&self) -> Json {
        json!({
            "id": self.id,
            "engine_sides": self.engine_sides.iter().map(|p| p.name()).collect::<Vec<_>>(),
            "use_solver": self.use_solver,
            "state": state_to_json(&self.state),
        })
    }
}

fn solvable(config: &GameConfig) -> bool {
    matches!(config.domain, DomainSpec::FiniteField(f) if f.q() <= MAX_Q) && config.degree <= MAX_DEGREE
}

impl Session {
    fn snapshot(&self, id: &str) -> Snapshot {
        Snapshot { id: id.into(), state: self.state.clone(), engine_sides: self.engine_sides.clone(), use_solver: self.use_solver }
    }

    fn file_json(&self, id: &str) -> Result<Json, GameError> {
        let mut j = self.snapshot(id).to_json();
        j.as_object_mut().expect("snapshot is an object").remove("state");
        j["record"] = GameRecord::from_state(&self.state)?.to_json();
        Ok(j)
    }

    fn from_file_json(j: &Json) -> Result<(String, Session), ServiceError> {
        let bad = |m: &str| ServiceError::Storage(m.into());
        let id = j.get("id").and_then(Json::as_str).ok_or_else(|| bad("missing id"))?.to_string();
        let engine_sides = j
            .get("engine_sides")
            .and_then(Json::as_array)
            .ok_or_else(|| bad("missing engine_sides"))?
            .iter()
            .map(player_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        let use_solver = j.get("use_solver").and_then(Json::as_bool).unwrap_or(false);
        let record = GameRecord::from_json(j.get("record").ok_or_else(|| bad("missing record"))?)?;
        let state = record.replay()?;
        Ok((id, Session { state, engine_sides, use_solver, solved: None }))
    }

    fn engine_move(&mut self) -> Result<EngineMove, ServiceError> {
        let player = self.state.to_move().ok_or(GameError::GameOver)?;
        if !self.engine_sides.contains(&player) {
            return Err(ServiceError::NotEngineTurn(player));
        }
        if self.use_solver && solvable(self.state.config()) {
            if self.solved.is_none() {
                self.solved = Some(Arc::new(solve_fq(self.state.config())?));
            }
            let solved = self.solved.as_ref().expect("just solved");
            return Ok(best_move_fq(solved, &self.state)?);
        }
        Ok(policy_move(&self.state)?)
    }
}

/// Thread-safe map of live games. Mutations of one game are serialized by
/// that game's lock; distinct games proceed in parallel.
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    dir: Option<PathBuf>,
    next: AtomicU64,
}

impl Default for SessionStore {
    fn default() -> Self {
        Self::in_memory()
    }
}

fn numeric_suffix(id: &str) -> Option<u64> {
    id.strip_prefix('g').and_then(|n| n.parse().ok())
}

impl SessionStore {
    pub fn in_memory() -> Self {
        SessionStore { sessions: RwLock::new(HashMap::new()), dir: None, next: AtomicU64::new(1) }
    }

    /// Opens `dir`, creating it if needed, and loads every `*.json` game in it.
    pub fn persistent(dir: impl AsRef<Path>) -> Result<Self, ServiceError> {
        let dir = dir.as_ref().to_path_buf();
        let io = |e: std::io::Error| ServiceError::Storage(e.to_string());
        fs::create_dir_all(&dir).map_err(io)?;
        let mut sessions = HashMap::new();
        let mut next = 1;
        for entry in fs::read_dir(&dir).map_err(io)? {
            let path = entry.map_err(io)?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let text = fs::read_to_string(&path).map_err(io)?;
            let j: Json = serde_json::from_str(&text).map_err(|e| ServiceError::Storage(format!("{}: {e}", path.display())))?;
            let (id, session) = Session::from_file_json(&j)?;
            next = next.max(numeric_suffix(&id).map_or(0, |n| n + 1));
            sessions.insert(id, Arc::new(Mutex::new(session)));
        }
        Ok(SessionStore { sessions: RwLock::new(sessions), dir: Some(dir), next: AtomicU64::new(next) })
    }

    pub fn len(&self) -> usize {
        self.sessions.read().expect("store lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.sessions.read().expect("store lock").keys().cloned().collect();
        ids.sort();
        ids
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ServiceError> {
        self.sessions.read().expect("store lock").get(id).cloned().ok_or_else(|| ServiceError::NotFound(id.into()))
    }

    fn persist(&self, id: &str, session: &Session) -> Result<(), ServiceError> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let text = serde_json::to_string_pretty(&session.file_json(id)?).expect("JSON values always serialize");
        let tmp = dir.join(format!("{id}.json.tmp"));
        let io = |e: std::io::Error| ServiceError::Storage(e.to_string());
        fs::write(&tmp, text).map_err(io)?;
        fs::rename(&tmp, dir.join(format!("{id}.json"))).map_err(io)
    }

    pub fn create(&self, config: GameConfig, engine_sides: Vec<Player>, use_solver: bool) -> Result<Snapshot, ServiceError> {
        let state = new_game(config)?;
        let id = format!("g{:06}", self.next.fetch_add(1, Ordering::SeqCst));
        let session = Session { state, engine_sides, use_solver, solved: None };
        self.persist(&id, &session)?;
        let snap = session.snapshot(&id);
        self.sessions.write().expect("store lock").insert(id, Arc::new(Mutex::new(session)));
        Ok(snap)
    }

    pub fn get(&self, id: &str) -> Result<Snapshot, ServiceError> {
        let s = self.session(id)?;
        let guard = s.lock().expect("session lock");
        Ok(guard.snapshot(id))
    }

    pub fn play(&self, id: &str, mv: Move) -> Result<Snapshot, ServiceError> {
        let s = self.session(id)?;
        let mut guard = s.lock().expect("session lock");
        let next = guard.state.apply(mv)?;
        let previous = std::mem::replace(&mut guard.state, next);
        if let Err(e) = self.persist(id, &guard) {
            guard.state = previous;
            return Err(e);
        }
        Ok(guard.snapshot(id))
    }

    /// Plays one engine move for the side to move, which must be an engine side.
    pub fn engine_move(&self, id: &str) -> Result<(EngineMove, Snapshot), ServiceError> {
        let s = self.session(id)?;
        let mut guard = s.lock().expect("session lock");
        let mv = guard.engine_move()?;
        let next = guard.state.apply(mv.mv.clone())?;
        let previous = std::mem::replace(&mut guard.state, next);
        if let Err(e) = self.persist(id, &guard) {
            guard.state = previous;
            return Err(e);
        }
        Ok((mv, guard.snapshot(id)))
    }

    pub fn verdict(&self, id: &str) -> Result<Verdict, ServiceError> {
        Ok(self.get(id)?.state.verdict()?)
    }
}
