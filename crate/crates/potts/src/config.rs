//! Settings file and environment overrides.
//!
//! The settings file is TOML with these optional keys:
//!
//! ```toml
//! max_vertices = 16          # oracle vertex cap
//! max_views = 5000           # local-view table cap
//! max_solves = 64            # LP solves per scan
//! scan_grid = ["1/8", "1/4"] # default lam grid for `lp scan`
//! ```
//!
//! `POTTS_MAX_VERTICES` and `POTTS_MAX_VIEWS` override the file; command
//! line flags override both.

use std::path::Path;

use potts_core::lp::default_grid;
use potts_core::Rational;

pub const ENV_MAX_VERTICES: &str = "POTTS_MAX_VERTICES";
pub const ENV_MAX_VIEWS: &str = "POTTS_MAX_VIEWS";
pub const DEFAULT_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub max_vertices: usize,
    pub max_views: Option<usize>,
    pub max_solves: Option<usize>,
    pub scan_grid: Vec<Rational>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_views: None,
            max_solves: None,
            scan_grid: default_grid(),
        }
    }
}

fn positive(key: &str, value: &toml::Value) -> Result<usize, String> {
    match value.as_integer() {
        Some(n) if n > 0 => Ok(n as usize),
        _ => Err(format!("config key '{key}' must be a positive integer")),
    }
}

fn env_usize(name: &str, raw: &str) -> Result<usize, String> {
    raw.trim()
        .parse::<usize>()
        .map_err(|_| format!("environment variable {name}='{raw}' is not a non-negative integer"))
}

impl Settings {
    pub fn from_toml(text: &str) -> Result<Settings, String> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| {
            format!("config: {}", e.message())
        })?;
        let mut s = Settings::default();
        for (key, value) in &table {
            match key.as_str() {
                "max_vertices" => s.max_vertices = positive(key, value)?,
                "max_views" => s.max_views = Some(positive(key, value)?),
                "max_solves" => s.max_solves = Some(positive(key, value)?),
                "scan_grid" => {
                    let items = value
                        .as_array()
                        .ok_or_else(|| String::from("config key 'scan_grid' must be an array of \"p/q\" strings"))?;
                    s.scan_grid = items
                        .iter()
                        .map(|v| {
                            let text = v.as_str().ok_or_else(|| {
                                String::from("config key 'scan_grid' must be an array of \"p/q\" strings")
                            })?;
                            crate::cli::parse_rational(text)
                        })
                        .collect::<Result<_, _>>()?;
                }
                other => return Err(format!("unknown config key '{other}'")),
            }
        }
        Ok(s)
    }

    /// File (if any), then environment.
    pub fn load(path: Option<&Path>, env: impl Fn(&str) -> Option<String>) -> Result<Settings, String> {
        let mut s = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read config '{}': {e}", p.display()))?;
                Settings::from_toml(&text)?
            }
            None => Settings::default(),
        };
        if let Some(raw) = env(ENV_MAX_VERTICES) {
            s.max_vertices = env_usize(ENV_MAX_VERTICES, &raw)?;
        }
        if let Some(raw) = env(ENV_MAX_VIEWS) {
            s.max_views = Some(env_usize(ENV_MAX_VIEWS, &raw)?);
        }
        Ok(s)
    }
}
