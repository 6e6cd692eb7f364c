//! Parameter grids and CSV sweep output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// One sweep axis, parsed from `lo:hi:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
    pub log: bool,
}

impl GridAxis {
    pub fn parse(text: &str, log: bool) -> Result<GridAxis, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let [lo, hi, steps] = parts.as_slice() else {
            return Err(format!("grid spec must be lo:hi:steps, got `{text}`"));
        };
        let lo: f64 = lo
            .parse()
            .map_err(|_| format!("invalid grid bound `{lo}` in `{text}`"))?;
        let hi: f64 = hi
            .parse()
            .map_err(|_| format!("invalid grid bound `{hi}` in `{text}`"))?;
        let steps: usize = steps
            .parse()
            .map_err(|_| format!("invalid step count `{steps}` in `{text}`"))?;
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(format!("grid bounds must be finite in `{text}`"));
        }
        if steps == 0 {
            return Err(format!("grid needs at least one point in `{text}`"));
        }
        if log && !(lo > 0.0 && hi > 0.0) {
            return Err(format!("log grid bounds must be positive in `{text}`"));
        }
        Ok(GridAxis { lo, hi, steps, log })
    }

    /// The axis points, endpoints included, linearly or geometrically spaced.
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                let f = i as f64 / last;
                if self.log {
                    self.lo * (self.hi / self.lo).powf(f)
                } else {
                    self.lo + (self.hi - self.lo) * f
                }
            })
            .collect()
    }
}

/// One CSV row. Missing values render as empty cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub p1: f64,
    pub p2: f64,
    pub curvature: Option<f64>,
    pub classification: String,
    pub det: Option<f64>,
}

impl Row {
    /// A per-point failure; the sweep continues past it.
    pub fn error(p1: f64, p2: f64) -> Row {
        Row {
            p1,
            p2,
            curvature: None,
            classification: "error".to_string(),
            det: None,
        }
    }
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

/// Write the rows as CSV, returning how many were written.
pub fn write_csv(path: &Path, rows: &[Row]) -> io::Result<usize> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "param1,param2,S,classification,det_g")?;
    for row in rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            row.p1,
            row.p2,
            cell(row.curvature),
            row.classification,
            cell(row.det)
        )?;
    }
    w.flush()?;
    Ok(rows.len())
}
