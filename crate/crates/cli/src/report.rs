use std::path::{Path, PathBuf};
use std::time::Instant;

use ccwidth::{Error, SearchLimits};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Exit codes.
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;
pub const EXIT_RECOGNITION: u8 = 5;

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Machine-readable result of one invocation. Everything except `timing`
/// is a function of the command line and the input bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: serde_json::Value,
    pub witnesses: Vec<String>,
    pub notices: Vec<String>,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded(_) => EXIT_LIMIT,
            Error::InvalidCover(_) | Error::NotAnIntersection(_) | Error::DegenerateWidth(_) => EXIT_VERIFY,
            Error::NotIncomparability | Error::CyclicOrientation | Error::NotTransitive(_) => EXIT_RECOGNITION,
            Error::Parse { .. }
            | Error::IndexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::NotAPermutation(_)
            | Error::InvalidQuery(_)
            | Error::InvalidArgument(_) => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;

/// What a command hands back: the report body and the exit code to use
/// after printing it.
pub struct Outcome {
    pub results: serde_json::Value,
    pub code: u8,
}

impl Outcome {
    pub fn ok(results: serde_json::Value) -> Self {
        Self { results, code: 0 }
    }
}

/// Per-invocation state shared by the commands: global options, the inputs
/// read so far and the witness files written.
pub struct Context {
    pub out: Option<PathBuf>,
    pub seed: u64,
    limits_n: Option<usize>,
    limits_time: Option<u64>,
    pub inputs: Vec<InputDigest>,
    pub witnesses: Vec<String>,
    pub notices: Vec<String>,
    started: Instant,
}

impl Context {
    pub fn new(out: Option<PathBuf>, seed: u64, limits_n: Option<usize>, limits_time: Option<u64>) -> Self {
        Self {
            out,
            seed,
            limits_n,
            limits_time,
            inputs: Vec::new(),
            witnesses: Vec::new(),
            notices: Vec::new(),
            started: Instant::now(),
        }
    }

    /// `preset` with the `--limits-*` overrides applied.
    pub fn limits(&self, preset: SearchLimits) -> SearchLimits {
        let mut l = preset;
        if let Some(n) = self.limits_n {
            l.max_n = n;
        }
        if let Some(t) = self.limits_time {
            l.time_budget_ms = t;
        }
        l
    }

    /// Reads a file (or stdin for `-`) and records its digest.
    pub fn read(&mut self, path: &Path) -> CmdResult<String> {
        let bytes = if path == Path::new("-") {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("reading stdin: {e}")))?;
            buf
        } else {
            std::fs::read(path).map_err(|e| Failure::new(EXIT_PARSE, format!("reading {}: {e}", path.display())))?
        };
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex(&Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|_| Failure::new(EXIT_PARSE, format!("{} is not UTF-8", path.display())))
    }

    /// Writes a witness file under `--out` when one was given.
    pub fn witness(&mut self, name: &str, contents: &str) -> CmdResult<()> {
        let Some(dir) = &self.out else {
            return Ok(());
        };
        std::fs::create_dir_all(dir).map_err(|e| Failure::new(1, format!("creating {}: {e}", dir.display())))?;
        let path = dir.join(name);
        std::fs::write(&path, contents).map_err(|e| Failure::new(1, format!("writing {}: {e}", path.display())))?;
        self.witnesses.push(path.display().to_string());
        Ok(())
    }

    pub fn notice(&mut self, msg: impl Into<String>) {
        self.notices.push(msg.into());
    }

    pub fn finish(self, command: Vec<String>, results: serde_json::Value) -> RunReport {
        RunReport {
            command,
            inputs: self.inputs,
            results,
            witnesses: self.witnesses,
            notices: self.notices,
            timing: Timing {
                elapsed_ms: self.started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
