//! Report and CSV emission.
//!
//! Reports are serialized with stable key order and shortest-roundtrip
//! float formatting, so identical runs produce byte-identical files.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use conecheck_core::{ApexRecord, Graze, IsopticCurve, TheoremReport};
use serde::Serialize;

pub fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}

/// Write to the path, or to stdout when no path is given.
pub fn emit(path: Option<&str>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => {
            if let Some(parent) = Path::new(p).parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent).map_err(|e| format!("{p}: {e}"))?;
                }
            }
            fs::write(p, content).map_err(|e| format!("{p}: {e}"))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

pub fn graze_csv(graze: &Graze) -> String {
    let n = graze.dim();
    let mut s = String::from("azimuth");
    for i in 1..=n {
        s.push_str(&format!(",u{i}"));
    }
    for i in 1..=n {
        s.push_str(&format!(",k{i}"));
    }
    s.push('\n');
    for (j, c) in graze.contacts.iter().enumerate() {
        s.push_str(&format!("{j}"));
        for v in &c.normal {
            s.push_str(&format!(",{v}"));
        }
        for v in &c.point {
            s.push_str(&format!(",{v}"));
        }
        s.push('\n');
    }
    s
}

pub fn records_csv(records: &[ApexRecord]) -> String {
    let mut s = String::from("index,apex,partner,distance,ratio\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.index,
            join_point(Some(&r.apex)),
            join_point(r.partner.as_deref()),
            r.distance.map(|d| d.to_string()).unwrap_or_default(),
            r.ratio.map(|d| d.to_string()).unwrap_or_default(),
        ));
    }
    s
}

fn join_point(p: Option<&[f64]>) -> String {
    match p {
        Some(p) => p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";"),
        None => String::new(),
    }
}

pub fn isoptic_csv(curve: &IsopticCurve) -> String {
    let mut s = String::from("theta,z1,z2\n");
    for (theta, z) in curve.thetas.iter().zip(&curve.vertices) {
        s.push_str(&format!("{theta},{},{}\n", z[0], z[1]));
    }
    s
}

/// Exit code for a theorem report per the taxonomy: 0 verified,
/// 2 hypothesis failed, 3 conclusion failed.
pub fn verdict_exit_code(report: &TheoremReport) -> i32 {
    match report.verdict {
        conecheck_core::Verdict::Verified => 0,
        conecheck_core::Verdict::HypothesisFailed => 2,
        conecheck_core::Verdict::ConclusionFailed => 3,
    }
}
