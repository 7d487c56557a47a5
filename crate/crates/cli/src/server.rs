//! JSON API for the explorer. Sessions hold a seed and its chain in memory
//! and are evicted least-recently-used first.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use ibox_core::seed::SeedContext;
use ibox_core::{Chain, Error, Seed, TypeLabel};
use serde::{Deserialize, Serialize};

use crate::commands::{build_seed, connect_chains, kr_descriptor, parse_chain, setup_for_chain, verify_report};
use crate::config::{Config, Setup};
use crate::schema::{ChainReportJson, QCharJson, SeedJson, SequenceJson, TypeJson};

/// Number of sessions kept before eviction.
pub const SESSION_CAP: usize = 256;

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        Self { status, message: message.into() }
    }
}

impl From<anyhow::Error> for ApiError {
    fn from(e: anyhow::Error) -> Self {
        let status = match e.downcast_ref::<Error>() {
            Some(Error::Frozen(_) | Error::NotMovable(_)) => StatusCode::CONFLICT,
            Some(Error::CapExceeded(_)) => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        Self::new(status, format!("{e:#}"))
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

#[derive(Serialize)]
struct ErrorBody {
    error: String,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(ErrorBody { error: self.message })).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

struct Session {
    setup: Setup,
    ctx: SeedContext,
    seed: Seed,
    history: Vec<String>,
}

#[derive(Default)]
struct Store {
    tick: u64,
    next_id: u64,
    sessions: HashMap<u64, (u64, Arc<Mutex<Session>>)>,
}

impl Store {
    fn insert(&mut self, session: Session) -> u64 {
        if self.sessions.len() >= SESSION_CAP {
            if let Some(&oldest) = self.sessions.iter().min_by_key(|(_, (t, _))| *t).map(|(id, _)| id) {
                self.sessions.remove(&oldest);
            }
        }
        self.next_id += 1;
        self.tick += 1;
        self.sessions.insert(self.next_id, (self.tick, Arc::new(Mutex::new(session))));
        self.next_id
    }

    fn get(&mut self, id: u64) -> Option<Arc<Mutex<Session>>> {
        self.tick += 1;
        let tick = self.tick;
        self.sessions.get_mut(&id).map(|(t, s)| {
            *t = tick;
            s.clone()
        })
    }
}

#[derive(Clone, Default)]
pub struct AppState {
    store: Arc<Mutex<Store>>,
}

impl AppState {
    pub fn session_count(&self) -> usize {
        self.store.lock().expect("store lock").sessions.len()
    }

    fn session(&self, id: u64) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.store
            .lock()
            .expect("store lock")
            .get(id)
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session {id}")))
    }
}

/// A session's state as sent to the explorer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionJson {
    pub session: u64,
    pub seed: SeedJson,
    pub chain: Option<ChainReportJson>,
    pub history: Vec<String>,
}

fn view(id: u64, s: &Session) -> Result<SessionJson, ApiError> {
    let chain = s.seed.chain().map(|c| ChainReportJson::new(&s.setup.seq, c)).transpose()?;
    Ok(SessionJson { session: id, seed: SeedJson::new(&s.setup.seq, &s.seed), chain, history: s.history.clone() })
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/types", get(types))
        .route("/sequence", get(sequence))
        .route("/chains", get(chains))
        .route("/seed", get(seed))
        .route("/mutate", post(mutate))
        .route("/boxmove", post(boxmove))
        .route("/connect", post(connect))
        .route("/qchar", get(qchar))
        .route("/verify", get(verify))
        .with_state(state)
}

pub async fn serve(bind: &str, port: u16) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind((bind, port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(AppState::default())).await?;
    Ok(())
}

async fn types() -> Json<Vec<TypeJson>> {
    Json(
        TypeLabel::all()
            .into_iter()
            .map(|t| {
                let root = ibox_core::RootData::new(t);
                TypeJson {
                    type_label: t.to_string(),
                    rank: root.rank(),
                    coxeter: root.coxeter_number(),
                    longest: root.longest_len(),
                    oracle: ibox_core::qchar::oracle_supported(&root),
                }
            })
            .collect(),
    )
}

async fn sequence(Query(config): Query<Config>) -> ApiResult<SequenceJson> {
    let setup = config.build()?;
    Ok(Json(SequenceJson::new(&setup.seq, &setup.orientation, setup.range)))
}

async fn chains(Query(config): Query<Config>) -> ApiResult<Vec<ChainReportJson>> {
    let setup = config.build()?;
    let range = setup.require_range()?;
    let all = ibox_core::chain::enumerate_chains(range)?;
    Ok(Json(all.iter().map(|c| ChainReportJson::new(&setup.seq, c)).collect::<Result<_, _>>()?))
}

#[derive(Deserialize)]
struct SeedQuery {
    #[serde(flatten)]
    config: Config,
    chain: Option<String>,
}

async fn seed(State(state): State<AppState>, Query(q): Query<SeedQuery>) -> ApiResult<SessionJson> {
    let chain = q.chain.as_deref().map(parse_chain).transpose()?;
    let chain = match chain {
        Some(c) => c,
        None => Chain::canonical(q.config.build()?.require_range()?),
    };
    let setup = setup_for_chain(&q.config, &chain)?;
    let ctx = setup.context();
    let seed = build_seed(&setup, &ctx, Some(&chain), &[])?;
    let session = Session { setup, ctx, seed, history: Vec::new() };
    let body = view(0, &session)?;
    let id = state.store.lock().expect("store lock").insert(session);
    Ok(Json(SessionJson { session: id, ..body }))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MutateRequest {
    pub session: u64,
    pub k: usize,
}

async fn mutate(State(state): State<AppState>, Json(req): Json<MutateRequest>) -> ApiResult<SessionJson> {
    let handle = state.session(req.session)?;
    let mut s = handle.lock().expect("session lock");
    s.seed = s.seed.mutate(&s.ctx, req.k)?;
    s.history.push(format!("mutate {}", req.k));
    Ok(Json(view(req.session, &s)?))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxMoveRequest {
    pub session: u64,
    pub s: usize,
}

async fn boxmove(State(state): State<AppState>, Json(req): Json<BoxMoveRequest>) -> ApiResult<SessionJson> {
    let handle = state.session(req.session)?;
    let mut s = handle.lock().expect("session lock");
    let chain = s.seed.chain().cloned().ok_or_else(|| {
        ApiError::new(StatusCode::CONFLICT, "the seed was mutated away from its chain; box moves are unavailable")
    })?;
    s.seed = s.seed.transport(&s.ctx, &chain, req.s)?;
    s.history.push(format!("boxmove {}", req.s));
    Ok(Json(view(req.session, &s)?))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnectRequest {
    pub from: String,
    pub to: String,
    #[serde(rename = "type", default)]
    pub type_label: Option<String>,
    #[serde(default)]
    pub orientation: Option<String>,
}

async fn connect(Json(req): Json<ConnectRequest>) -> ApiResult<crate::schema::ConnectJson> {
    let (from, to) = (parse_chain(&req.from)?, parse_chain(&req.to)?);
    let setup = match req.type_label {
        Some(t) => {
            let config = Config { type_label: Some(t), orientation: req.orientation, ..Config::default() };
            Some(setup_for_chain(&config, &from)?)
        }
        None => None,
    };
    Ok(Json(connect_chains(setup.as_ref(), &from, &to)?))
}

#[derive(Deserialize)]
struct QCharQuery {
    #[serde(flatten)]
    config: Config,
    #[serde(rename = "box")]
    ibox: Option<String>,
    node: Option<String>,
    t: Option<String>,
    count: Option<String>,
}

async fn qchar(Query(q): Query<QCharQuery>) -> ApiResult<QCharJson> {
    let setup = q.config.build()?;
    let num = |name: &str, v: &Option<String>| -> Result<Option<i64>, ApiError> {
        v.as_deref()
            .map(|x| x.parse::<i64>().map_err(|_| ApiError::new(StatusCode::BAD_REQUEST, format!("bad {name} `{x}`"))))
            .transpose()
    };
    let node = num("node", &q.node)?.map(|n| n.max(0) as usize);
    let count = num("count", &q.count)?.unwrap_or(1).max(0) as usize;
    let desc = kr_descriptor(&setup, q.ibox.as_deref(), node, num("t", &q.t)?, count)?;
    let ch = ibox_core::qchar::kr_qcharacter(&setup.root, &desc, setup.cap)?;
    Ok(Json(QCharJson::new(setup.type_label(), &ch)))
}

async fn verify(Query(config): Query<Config>) -> ApiResult<crate::schema::VerifyJson> {
    let setup = config.build()?;
    Ok(Json(verify_report(&setup, None)?))
}
