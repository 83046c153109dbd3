//! Report serialization: every constant is paired with the name of the
//! operation that produced it, and field order is fixed so reports are
//! byte-stable for a given input.

use orbiframe::certifier::{FrameCertificate, Verdict};
use orbiframe::oracle::{BasisProfile, FrameBounds};
use orbiframe::separation::Decomposition;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ConstantOut {
    pub name: String,
    pub value: f64,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct BoundsOut {
    pub lower: f64,
    pub upper: f64,
}

impl From<FrameBounds> for BoundsOut {
    fn from(fb: FrameBounds) -> Self {
        BoundsOut {
            lower: fb.lower,
            upper: fb.upper,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GroupOut {
    pub level: usize,
    pub size: usize,
    pub representatives: usize,
    pub gamma: f64,
    pub eta: f64,
}

#[derive(Debug, Serialize)]
pub struct DecompositionOut {
    pub m: usize,
    pub levels: Vec<usize>,
    pub groups: Vec<GroupOut>,
}

impl From<&Decomposition> for DecompositionOut {
    fn from(d: &Decomposition) -> Self {
        DecompositionOut {
            m: d.m,
            levels: d.levels(),
            groups: d
                .groups
                .iter()
                .map(|g| GroupOut {
                    level: g.level,
                    size: g.points.len(),
                    representatives: g.representatives.len(),
                    gamma: g.gamma,
                    eta: g.eta,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateGroupOut {
    pub level: usize,
    pub gamma: f64,
    pub eta: f64,
    pub d1_sq: f64,
    pub d0_sq: f64,
    pub eps: f64,
    pub diff_bessel_sq: f64,
    pub bound: f64,
}

#[derive(Debug, Serialize)]
pub struct CertificateOut {
    pub verdict: String,
    pub lower_bound: f64,
    pub eta: f64,
    pub d0_sq: f64,
    pub d1_sq: f64,
    pub eps: Vec<(usize, f64)>,
    pub groups: Vec<CertificateGroupOut>,
    pub diagnostics: Vec<ConstantOut>,
}

pub fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedFrame => "certified_frame",
        Verdict::CertifiedNotFrame => "certified_not_frame",
        Verdict::Inconclusive => "inconclusive",
    }
}

impl From<&FrameCertificate> for CertificateOut {
    fn from(c: &FrameCertificate) -> Self {
        CertificateOut {
            verdict: verdict_label(c.verdict).to_string(),
            lower_bound: c.lower_bound,
            eta: c.eta,
            d0_sq: c.d0_sq,
            d1_sq: c.d1_sq,
            eps: c.eps.clone(),
            groups: c
                .groups
                .iter()
                .map(|g| CertificateGroupOut {
                    level: g.level,
                    gamma: g.gamma,
                    eta: g.eta,
                    d1_sq: g.d1_sq,
                    d0_sq: g.d0_sq,
                    eps: g.eps,
                    diff_bessel_sq: g.diff_bessel_sq,
                    bound: g.bound,
                })
                .collect(),
            diagnostics: c
                .diagnostics
                .iter()
                .map(|d| ConstantOut {
                    name: d.name.clone(),
                    value: d.value,
                    source: d.source.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProfileOut {
    pub ratios: Vec<f64>,
    pub zero_coordinates: Vec<usize>,
    pub min: f64,
    pub max: f64,
}

impl From<&BasisProfile> for ProfileOut {
    fn from(p: &BasisProfile) -> Self {
        ProfileOut {
            ratios: p.ratios.clone(),
            zero_coordinates: p.zero_coordinates.clone(),
            min: p.min,
            max: p.max,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InstanceSummary {
    pub digest: String,
    pub points: usize,
    pub orbits: usize,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub instance: InstanceSummary,
    pub oracle: BoundsOut,
    pub basis_profile: ProfileOut,
    pub certificate: CertificateOut,
    pub decomposition: DecompositionOut,
    pub constants: Vec<ConstantOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serializes");
    out.push('\n');
    out
}
