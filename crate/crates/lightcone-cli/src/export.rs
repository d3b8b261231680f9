//! Path exports: one row per grid node with the base curve, the frame, the
//! curvature fields and the causal classification. CSV values use the
//! shortest decimal representation that round-trips, so re-importing a file
//! reproduces the numbers bit for bit.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use lightcone_core::{classify_point, CurvatureQuintuple, FramedCurvePath};

use crate::CliError;

pub const CSV_HEADER: &str = "t,gamma1,gamma2,gamma3,lplus1,lplus2,lplus3,\
lminus1,lminus2,lminus3,n1,n2,n3,kappa1,kappa2,kappa3,alpha,beta,causal,singular";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExportRow {
    pub t: f64,
    pub gamma: [f64; 3],
    pub lplus: [f64; 3],
    pub lminus: [f64; 3],
    pub n: [f64; 3],
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub alpha: f64,
    pub beta: f64,
    pub causal: String,
    pub singular: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PathExport {
    pub t0: f64,
    pub t1: f64,
    pub samples: usize,
    pub delta4_drift: f64,
    pub rows: Vec<ExportRow>,
}

impl PathExport {
    /// Tabulate a path with the curvature quintuple that describes it.
    pub fn build(
        path: &FramedCurvePath,
        quintuple: &CurvatureQuintuple,
        classify_tol: f64,
    ) -> Result<Self, CliError> {
        let mut rows = Vec::with_capacity(path.len());
        for i in 0..path.len() {
            let t = path.t(i);
            let [kappa1, kappa2, kappa3, alpha, beta] =
                quintuple.eval(t).map_err(CliError::from_core)?;
            let (causal, singular) =
                classify_point(quintuple, t, classify_tol).map_err(CliError::from_core)?;
            let as_array =
                |v: lightcone_core::MinkowskiVec| -> [f64; 3] { [v.x1, v.x2, v.x3] };
            rows.push(ExportRow {
                t,
                gamma: as_array(path.gammas()[i]),
                lplus: as_array(path.lplus()[i]),
                lminus: as_array(path.lminus()[i]),
                n: as_array(path.normals()[i]),
                kappa1,
                kappa2,
                kappa3,
                alpha,
                beta,
                causal: causal.to_string(),
                singular,
            });
        }
        Ok(Self {
            t0: path.interval().t0,
            t1: path.interval().t1,
            samples: path.len(),
            delta4_drift: path.delta4_drift(),
            rows,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * 128);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let mut fields: Vec<String> = Vec::with_capacity(20);
            fields.push(format!("{}", r.t));
            for triple in [r.gamma, r.lplus, r.lminus, r.n] {
                for v in triple {
                    fields.push(format!("{v}"));
                }
            }
            for v in [r.kappa1, r.kappa2, r.kappa3, r.alpha, r.beta] {
                fields.push(format!("{v}"));
            }
            fields.push(r.causal.clone());
            fields.push(if r.singular { "1" } else { "0" }.to_string());
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| CliError::input("empty csv".to_string()))?;
        if header != CSV_HEADER {
            return Err(CliError::input(format!(
                "unexpected csv header: {header}"
            )));
        }
        let mut rows = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != 20 {
                return Err(CliError::input(format!(
                    "csv line {}: expected 20 fields, got {}",
                    lineno + 2,
                    cells.len()
                )));
            }
            let num = |i: usize| -> Result<f64, CliError> {
                cells[i].parse().map_err(|e| {
                    CliError::input(format!("csv line {}: field {}: {e}", lineno + 2, i + 1))
                })
            };
            let triple = |i: usize| -> Result<[f64; 3], CliError> {
                Ok([num(i)?, num(i + 1)?, num(i + 2)?])
            };
            rows.push(ExportRow {
                t: num(0)?,
                gamma: triple(1)?,
                lplus: triple(4)?,
                lminus: triple(7)?,
                n: triple(10)?,
                kappa1: num(13)?,
                kappa2: num(14)?,
                kappa3: num(15)?,
                alpha: num(16)?,
                beta: num(17)?,
                causal: cells[18].to_string(),
                singular: cells[19] == "1",
            });
        }
        let (t0, t1) = match (rows.first(), rows.last()) {
            (Some(a), Some(b)) => (a.t, b.t),
            _ => (0.0, 0.0),
        };
        Ok(Self {
            t0,
            t1,
            samples: rows.len(),
            delta4_drift: 0.0,
            rows,
        })
    }

    pub fn write(&self, path: &Path, format: ExportFormat) -> Result<(), CliError> {
        let payload = match format {
            ExportFormat::Csv => self.to_csv(),
            ExportFormat::Json => serde_json::to_string_pretty(self)
                .map_err(|e| CliError::input(format!("json encoding: {e}")))?,
        };
        write_atomic(path, payload.as_bytes())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ExportFormat {
    #[default]
    Csv,
    Json,
}

impl ExportFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
        }
    }
}

/// Whole-file atomic write: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
        None => std::path::PathBuf::from(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
    };
    let io_err = |e: std::io::Error| CliError::input(format!("writing {}: {e}", path.display()));
    {
        let mut f = std::fs::File::create(&tmp).map_err(io_err)?;
        f.write_all(bytes).map_err(io_err)?;
        f.sync_all().map_err(io_err)?;
    }
    std::fs::rename(&tmp, path).map_err(io_err)
}

/// Singular parameter values joined as the `singular_t` summary value
/// (4 decimal places, comma separated).
pub fn format_singular_ts(ts: &[f64]) -> String {
    ts.iter()
        .map(|t| format!("{t:.4}"))
        .collect::<Vec<_>>()
        .join(",")
}
