//! Scenario file schema and conversion into core types.
//!
//! The schema is strict: unknown keys anywhere in the document are rejected
//! before any computation starts, so a misspelled tolerance can never
//! silently fall back to a default.

use conecheck_core::{ConvexBody, PlanarBody, Perturbation, Scenario, StarSurface, Tolerances};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub body: BodySpec,
    #[serde(default)]
    pub surface: Option<SurfaceSpec>,
    #[serde(default)]
    pub sampling: SamplingSpec,
    #[serde(default)]
    pub tolerances: ToleranceSpec,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub kind: String,
    #[serde(default)]
    pub params: BodyParams,
    #[serde(default)]
    pub center: Option<Vec<f64>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BodyParams {
    /// Ellipsoid shape matrix, rows of an n x n symmetric matrix.
    pub matrix: Option<Vec<Vec<f64>>>,
    /// lp ball exponent.
    pub p: Option<f64>,
    /// lp ball radius.
    pub radius: Option<f64>,
    /// Minkowski sum parts.
    pub summands: Option<Vec<BodySpec>>,
    /// Planar support series constant term.
    pub a0: Option<f64>,
    /// Planar support series cosine coefficients (m = 1, 2, ...).
    pub cos: Option<Vec<f64>>,
    /// Planar support series sine coefficients.
    pub sin: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub kind: String,
    pub center: Vec<f64>,
    pub radius: f64,
    #[serde(default)]
    pub perturbations: Vec<PerturbationSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerturbationSpec {
    pub epsilon: f64,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplingSpec {
    #[serde(rename = "N", default = "default_samples")]
    pub samples: usize,
    #[serde(rename = "M", default = "default_meridians")]
    pub meridians: usize,
    #[serde(default)]
    pub grid_seed: u64,
}

fn default_samples() -> usize {
    200
}

fn default_meridians() -> usize {
    256
}

impl Default for SamplingSpec {
    fn default() -> Self {
        SamplingSpec { samples: 200, meridians: 256, grid_seed: 0 }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ToleranceSpec {
    pub congruence: f64,
    pub ratio: f64,
    pub center: f64,
    pub symmetry: f64,
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        ToleranceSpec { congruence: 1e-6, ratio: 1e-6, center: 1e-6, symmetry: 1e-6 }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSpec {
    pub report_path: Option<String>,
    pub csv_dir: Option<String>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("scenario schema violation: {e}"))
    }

    /// Build the spatial body; planar series bodies are rejected here and
    /// only reachable through [`ScenarioFile::planar_body`].
    pub fn convex_body(&self) -> Result<ConvexBody, String> {
        build_convex_body(&self.body)
    }

    pub fn planar_body(&self) -> Result<PlanarBody, String> {
        if self.body.kind != "trig_series" {
            return Err(format!(
                "body kind '{}' is not planar; the isoptic subcommand needs kind 'trig_series'",
                self.body.kind
            ));
        }
        let p = &self.body.params;
        reject(p.matrix.is_some(), "trig_series takes no 'matrix'")?;
        reject(p.p.is_some() || p.radius.is_some(), "trig_series takes no 'p'/'radius'")?;
        reject(p.summands.is_some(), "trig_series takes no 'summands'")?;
        let a0 = p.a0.ok_or("trig_series needs 'a0'")?;
        let mut cos = p.cos.clone().unwrap_or_default();
        let mut sin = p.sin.clone().unwrap_or_default();
        // a translation adds <c, u(theta)> to the support series, i.e. the
        // first harmonic
        if let Some(c) = &self.body.center {
            if c.len() != 2 {
                return Err("trig_series center must have two coordinates".into());
            }
            if cos.is_empty() {
                cos.push(0.0);
            }
            if sin.is_empty() {
                sin.push(0.0);
            }
            cos[0] += c[0];
            sin[0] += c[1];
        }
        PlanarBody::new(a0, cos, sin).map_err(|e| e.to_string())
    }

    pub fn star_surface(&self) -> Result<StarSurface, String> {
        let spec = self.surface.as_ref().ok_or("scenario is missing the 'surface' section")?;
        let perturbations: Vec<Perturbation> = spec
            .perturbations
            .iter()
            .map(|p| Perturbation { epsilon: p.epsilon, exponents: p.exponents.clone() })
            .collect();
        match spec.kind.as_str() {
            "sphere" => {
                if !perturbations.is_empty() {
                    return Err("surface kind 'sphere' takes no perturbations".into());
                }
                StarSurface::sphere(spec.radius, spec.center.clone()).map_err(|e| e.to_string())
            }
            "perturbed" => StarSurface::new(spec.radius, spec.center.clone(), perturbations)
                .map_err(|e| e.to_string()),
            other => Err(format!("unknown surface kind '{other}'")),
        }
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            congruence: self.tolerances.congruence,
            ratio: self.tolerances.ratio,
            center: self.tolerances.center,
            symmetry: self.tolerances.symmetry,
        }
    }

    /// Assemble and validate the full scenario (containment check included).
    pub fn scenario(&self) -> Result<Scenario, String> {
        Scenario::new(
            self.convex_body()?,
            self.star_surface()?,
            self.sampling.samples,
            self.sampling.meridians,
            self.tolerances(),
            self.sampling.grid_seed,
        )
        .map_err(|e| e.to_string())
    }
}

fn build_convex_body(spec: &BodySpec) -> Result<ConvexBody, String> {
    let p = &spec.params;
    match spec.kind.as_str() {
        "ellipsoid" => {
            reject(p.p.is_some() || p.radius.is_some(), "ellipsoid takes no 'p'/'radius'")?;
            reject(p.summands.is_some(), "ellipsoid takes no 'summands'")?;
            reject_planar(p)?;
            let rows = p.matrix.as_ref().ok_or("ellipsoid needs 'matrix'")?;
            let n = rows.len();
            if rows.iter().any(|r| r.len() != n) {
                return Err("ellipsoid matrix must be square".into());
            }
            let flat: Vec<f64> = rows.iter().flatten().copied().collect();
            let center = spec.center.clone().unwrap_or_else(|| vec![0.0; n]);
            if center.len() != n {
                return Err("ellipsoid center dimension must match the matrix".into());
            }
            ConvexBody::ellipsoid(flat, center).map_err(|e| e.to_string())
        }
        "lp_ball" => {
            reject(p.matrix.is_some(), "lp_ball takes no 'matrix'")?;
            reject(p.summands.is_some(), "lp_ball takes no 'summands'")?;
            reject_planar(p)?;
            let exponent = p.p.ok_or("lp_ball needs 'p'")?;
            let radius = p.radius.ok_or("lp_ball needs 'radius'")?;
            let center = spec.center.clone().ok_or("lp_ball needs 'center' (it sets the dimension)")?;
            ConvexBody::lp_ball(exponent, radius, center).map_err(|e| e.to_string())
        }
        "minkowski_sum" => {
            reject(p.matrix.is_some() || p.p.is_some() || p.radius.is_some(), "minkowski_sum takes only 'summands'")?;
            reject_planar(p)?;
            reject(spec.center.is_some(), "minkowski_sum takes no 'center'; translate a summand instead")?;
            let summands = p.summands.as_ref().ok_or("minkowski_sum needs 'summands'")?;
            let parts: Result<Vec<ConvexBody>, String> =
                summands.iter().map(build_convex_body).collect();
            ConvexBody::minkowski_sum(parts?).map_err(|e| e.to_string())
        }
        "trig_series" => Err("planar body only supported by the isoptic subcommand".into()),
        other => Err(format!("unknown body kind '{other}'")),
    }
}

fn reject(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Err(msg.into())
    } else {
        Ok(())
    }
}

fn reject_planar(p: &BodyParams) -> Result<(), String> {
    reject(
        p.a0.is_some() || p.cos.is_some() || p.sin.is_some(),
        "'a0'/'cos'/'sin' belong to trig_series bodies",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const BALL_IN_SPHERE: &str = r#"{
        "body": {"kind": "lp_ball", "params": {"p": 2.0, "radius": 1.0}, "center": [0.0, 0.0, 0.0]},
        "surface": {"kind": "sphere", "center": [0.0, 0.0, 0.0], "radius": 3.0},
        "sampling": {"N": 16, "M": 16, "grid_seed": 7}
    }"#;

    #[test]
    fn parses_and_builds() {
        let f = ScenarioFile::parse(BALL_IN_SPHERE).unwrap();
        let s = f.scenario().unwrap();
        assert_eq!(s.samples, 16);
        assert_eq!(s.seed, 7);
        assert!((s.tolerances.congruence - 1e-6).abs() < 1e-20);
    }

    #[test]
    fn unknown_keys_fail_loudly() {
        let bad = BALL_IN_SPHERE.replace("\"grid_seed\": 7", "\"grid_sed\": 7");
        assert!(ScenarioFile::parse(&bad).unwrap_err().contains("grid_sed"));
        let bad = BALL_IN_SPHERE.replace("\"sampling\"", "\"samplng\"");
        assert!(ScenarioFile::parse(&bad).is_err());
    }

    #[test]
    fn kind_specific_params_enforced() {
        let f = ScenarioFile::parse(
            r#"{"body": {"kind": "ellipsoid", "params": {"p": 2.0}}}"#,
        )
        .unwrap();
        assert!(f.convex_body().is_err());
        let f = ScenarioFile::parse(
            r#"{"body": {"kind": "nonagon", "params": {}}}"#,
        )
        .unwrap();
        assert!(f.convex_body().unwrap_err().contains("unknown body kind"));
    }

    #[test]
    fn planar_center_folds_into_first_harmonic() {
        let f = ScenarioFile::parse(
            r#"{"body": {"kind": "trig_series", "params": {"a0": 1.0}, "center": [0.25, -0.5]}}"#,
        )
        .unwrap();
        let b = f.planar_body().unwrap();
        assert!((b.support(0.0) - 1.25).abs() < 1e-15);
        assert!((b.support(core::f64::consts::FRAC_PI_2) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn minkowski_nested() {
        let f = ScenarioFile::parse(
            r#"{
                "body": {"kind": "minkowski_sum", "params": {"summands": [
                    {"kind": "lp_ball", "params": {"p": 2.0, "radius": 1.0}, "center": [0.0, 0.0, 0.0]},
                    {"kind": "ellipsoid", "params": {"matrix": [[4.0,0.0,0.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]}}
                ]}},
                "surface": {"kind": "sphere", "center": [0.0,0.0,0.0], "radius": 6.0}
            }"#,
        )
        .unwrap();
        let b = f.convex_body().unwrap();
        assert!((b.support(&[1.0, 0.0, 0.0]).unwrap() - 3.0).abs() < 1e-12);
    }
}
