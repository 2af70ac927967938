use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use sqclique::graph::parse_vertex_list;
use sqclique::{Graph, VertexSet};

pub const SCHEMA_VERSION: u32 = 1;

/// Everything but `timing` is a function of the inputs and flags.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: &'static str,
    /// Input path -> sha256 of its contents.
    pub inputs: BTreeMap<String, String>,
    pub parameters: Value,
    pub outputs: Value,
    /// Wall-clock milliseconds per stage.
    pub timing: BTreeMap<&'static str, f64>,
}

impl RunReport {
    pub fn new(command: &'static str, parameters: Value) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command,
            inputs: BTreeMap::new(),
            parameters,
            outputs: Value::Null,
            timing: BTreeMap::new(),
        }
    }

    pub fn read_input(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.insert(path.display().to_string(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    pub fn read_graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read_input(path)?;
        Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn read_clique(&mut self, path: &Path) -> Result<VertexSet> {
        let text = self.read_input(path)?;
        parse_vertex_list(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Runs `f` and records its wall-clock time under `stage`.
    pub fn time<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timing.insert(stage, start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn set_outputs(&mut self, outputs: impl Serialize) -> Result<()> {
        self.outputs = serde_json::to_value(outputs)?;
        Ok(())
    }

    /// Writes the report to `path`, or to stdout when `path` is `None`.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(self)? + "\n";
        match path {
            Some(p) => write_file(p, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// `FILE` -> `FILE.meta.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}
