//! Instance file format: eigenvalues and seed vectors as (re, im) pairs,
//! plus optional generator metadata.

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use orbiframe::disk::{DiskPoint, PointSequence};
use orbiframe::linalg::CVector;
use orbiframe::oracle::OrbitSystem;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub eigenvalues: Vec<[f64; 2]>,
    pub vectors: Vec<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl InstanceFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let parsed: InstanceFile = serde_json::from_str(&text).map_err(|e| {
            anyhow!(
                "parse error in {} at line {}, column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            )
        })?;
        Ok(parsed)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("instance serializes");
        out.push('\n');
        out
    }

    /// Validate the geometry and assemble the orbit system.
    pub fn to_system(&self) -> Result<OrbitSystem> {
        let mut points: PointSequence = Vec::with_capacity(self.eigenvalues.len());
        for (j, &[re, im]) in self.eigenvalues.iter().enumerate() {
            let p = DiskPoint::from_re_im(re, im).map_err(|_| {
                anyhow!("eigenvalue {j} = {re}{im:+}i lies outside the open unit disk")
            })?;
            points.push(p);
        }
        if self.vectors.is_empty() {
            bail!("instance has no seed vectors");
        }
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (i, entries) in self.vectors.iter().enumerate() {
            if entries.len() != points.len() {
                bail!(
                    "vector {i} has {} entries, expected {}",
                    entries.len(),
                    points.len()
                );
            }
            vectors.push(CVector::from_fn(points.len(), |r, _| {
                Complex64::new(entries[r][0], entries[r][1])
            }));
        }
        OrbitSystem::new(points, vectors).map_err(|e| anyhow!("{e}"))
    }

    pub fn from_system(system: &OrbitSystem, metadata: Option<Metadata>) -> Self {
        InstanceFile {
            eigenvalues: system
                .eigenvalues
                .iter()
                .map(|p| [p.value().re, p.value().im])
                .collect(),
            vectors: system
                .vectors
                .iter()
                .map(|v| v.iter().map(|c| [c.re, c.im]).collect())
                .collect(),
            metadata,
        }
    }
}

/// FNV-1a hash of the canonical serialization, used as the instance digest.
pub fn digest(instance: &InstanceFile) -> String {
    let bytes = instance.to_json().into_bytes();
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a:{h:016x}")
}
