//! Scenario fixtures: a flat parameter document plus an optional `t4` sweep.

use gaudin::model::ModelParams;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// A named parameter set with the sweep values its figures are drawn at.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Scenario {
    #[serde(default)]
    pub name: String,
    #[serde(flatten)]
    pub params: ParamsDoc,
    #[serde(default)]
    pub t4_sweep: Vec<f64>,
}

/// The flat key-value parameter schema. Missing entries default to the unit
/// weights, unit linear strength, and vanishing couplings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ParamsDoc {
    #[serde(rename = "R1", default = "one")]
    pub r1: f64,
    #[serde(rename = "R2", default = "one")]
    pub r2: f64,
    #[serde(default = "one")]
    pub w: f64,
    #[serde(default)]
    pub t0: f64,
    #[serde(default)]
    pub t1: f64,
    #[serde(default)]
    pub t2: f64,
    #[serde(default)]
    pub t3: f64,
    #[serde(default)]
    pub t4: f64,
}

fn one() -> f64 {
    1.0
}

/// Schema violation with the offending field path.
#[derive(Debug)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl Scenario {
    pub fn model_params(&self) -> Result<ModelParams, SchemaError> {
        ModelParams::new(
            self.params.r1,
            self.params.r2,
            self.params.w,
            [self.params.t0, self.params.t1, self.params.t2, self.params.t3, self.params.t4],
        )
        .map_err(|e| SchemaError { path: "R1/R2".into(), message: e.to_string() })
    }

    pub fn validate(&self) -> Result<(), SchemaError> {
        self.model_params()?;
        for (i, w) in self.t4_sweep.windows(2).enumerate() {
            if !(w[0] < w[1]) {
                return Err(SchemaError {
                    path: format!("t4_sweep[{}]", i + 1),
                    message: "sweep values must be strictly increasing".into(),
                });
            }
        }
        for (i, v) in self.t4_sweep.iter().enumerate() {
            if !v.is_finite() {
                return Err(SchemaError {
                    path: format!("t4_sweep[{i}]"),
                    message: "sweep values must be finite".into(),
                });
            }
        }
        Ok(())
    }
}

/// Directory holding the shipped fixtures; overridden by
/// `GAUDIN_SCENARIO_DIR`.
pub fn scenario_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("GAUDIN_SCENARIO_DIR") {
        return PathBuf::from(dir);
    }
    // workspace-relative default: scenarios/ next to the binary's manifest
    let mut candidates: Vec<PathBuf> = Vec::new();
    if let Ok(exe) = std::env::current_exe() {
        let mut p = exe;
        for _ in 0..5 {
            if !p.pop() {
                break;
            }
            candidates.push(p.join("scenarios"));
        }
    }
    candidates.push(PathBuf::from("scenarios"));
    candidates
        .into_iter()
        .find(|p| p.is_dir())
        .unwrap_or_else(|| PathBuf::from("scenarios"))
}

/// Loads a scenario by fixture name or explicit path.
pub fn load_scenario(spec: &str) -> Result<Scenario, SchemaError> {
    let path = if Path::new(spec).exists() {
        PathBuf::from(spec)
    } else {
        let named = scenario_dir().join(format!("{spec}.json"));
        if !named.exists() {
            return Err(SchemaError {
                path: spec.to_string(),
                message: format!(
                    "no such scenario file or fixture (searched {})",
                    named.display()
                ),
            });
        }
        named
    };
    let text = std::fs::read_to_string(&path).map_err(|e| SchemaError {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let mut scenario: Scenario =
        serde_json::from_str(&text).map_err(|e| SchemaError {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    if scenario.name.is_empty() {
        scenario.name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
    }
    scenario.validate()?;
    Ok(scenario)
}
