//! Background search jobs with pollable progress.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::thread;

use energy_core::search::Progress;
use energy_core::SearchResult;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JobStatus {
    Queued,
    Running,
    Succeeded,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobView {
    pub id: String,
    pub status: JobStatus,
    /// Complete class members examined so far.
    pub graphs_examined: u64,
    /// Canonical graphs generated so far, partial ones included.
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub session_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshot: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<SearchResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug)]
struct Job {
    progress: Arc<Progress>,
    state: Mutex<(JobStatus, Option<Result<SearchResult, String>>)>,
    session_id: Option<String>,
    snapshot: Option<usize>,
}

#[derive(Debug, Default, Clone)]
pub struct JobRegistry {
    jobs: Arc<Mutex<HashMap<String, Arc<Job>>>>,
}

impl JobRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts `work` on its own thread. `on_done` runs on that thread with
    /// the outcome before the job is marked finished.
    pub fn spawn<W, D>(&self, session: Option<(String, usize)>, work: W, on_done: D) -> String
    where
        W: FnOnce(&Progress) -> Result<SearchResult, String> + Send + 'static,
        D: FnOnce(&str, &Result<SearchResult, String>) + Send + 'static,
    {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let (session_id, snapshot) = session.unzip();
        let job = Arc::new(Job {
            progress: Arc::new(Progress::new()),
            state: Mutex::new((JobStatus::Queued, None)),
            session_id,
            snapshot,
        });
        self.jobs.lock().unwrap().insert(id.clone(), job.clone());
        let job_id = id.clone();
        thread::spawn(move || {
            job.state.lock().unwrap().0 = JobStatus::Running;
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| work(&job.progress)))
                .unwrap_or_else(|_| Err("search panicked".to_owned()));
            on_done(&job_id, &outcome);
            let status = if outcome.is_ok() { JobStatus::Succeeded } else { JobStatus::Failed };
            *job.state.lock().unwrap() = (status, Some(outcome));
        });
        id
    }

    pub fn view(&self, id: &str) -> Option<JobView> {
        let job = self.jobs.lock().unwrap().get(id)?.clone();
        let state = job.state.lock().unwrap();
        let (result, error) = match &state.1 {
            Some(Ok(r)) => (Some(r.clone()), None),
            Some(Err(e)) => (None, Some(e.clone())),
            None => (None, None),
        };
        Some(JobView {
            id: id.to_owned(),
            status: state.0,
            graphs_examined: job.progress.graphs_examined(),
            nodes: job.progress.nodes(),
            session_id: job.session_id.clone(),
            snapshot: job.snapshot,
            result,
            error,
        })
    }

    pub fn cancel(&self, id: &str) -> bool {
        match self.jobs.lock().unwrap().get(id) {
            Some(job) => {
                job.progress.cancel();
                true
            }
            None => false,
        }
    }
}
