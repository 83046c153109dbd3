mod instance;
mod report;
mod svg;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use orbiframe::blaschke::BlaschkeProduct;
use orbiframe::carleson::carleson_norm;
use orbiframe::carleson::AtomicMeasure;
use orbiframe::certifier::{certify, certify_necessary, CertifyConfig};
use orbiframe::disk::DiskPoint;
use orbiframe::generators;
use orbiframe::linalg::CVector;
use orbiframe::oracle::{
    exact_frame_bounds, normalize, standard_basis_profile, tail_lower_bound,
    truncated_orbit_bounds, OrbitSystem,
};
use orbiframe::separation::{decompose, separation_radius, DecomposeConfig};
use report::{
    to_json, AnalyzeReport, BoundsOut, CertificateOut, ConstantOut, DecompositionOut,
    InstanceSummary, ProfileOut,
};
use serde::Serialize;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "orbiframe", version, about = "Frame certification for operator orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Svg,
}

#[derive(Copy, Clone, ValueEnum)]
enum Generator {
    Radial,
    PerturbedPairs,
    Clustered,
    RandomCarleson,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: oracle bounds, certificate, decomposition and constants
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Initial eta fraction handed to the decomposition (must be < 0.1)
        #[arg(long)]
        eta: Option<f64>,
        /// Include wall-clock timing (makes the report non-reproducible)
        #[arg(long)]
        timing: bool,
    },
    /// Certificate only
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        eta: Option<f64>,
    },
    /// Exact frame bounds and the standard-basis profile
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also report truncated orbit bounds at this order
        #[arg(long)]
        trunc: Option<usize>,
        /// Also report the orbit tail bound from this starting index
        #[arg(long)]
        n0: Option<u32>,
    },
    /// Decomposition of the eigenvalue sequence into separated layers
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cluster multiplicity; defaults to the number of seed vectors
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        eta: Option<f64>,
    },
    /// Emit a generated instance file
    Gen {
        #[arg(value_enum)]
        kind: Generator,
        #[arg(long, default_value_t = 16)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of orbits (seed vectors)
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suite and print pass/fail counts
    CheckAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn certify_config(eta: Option<f64>) -> Result<CertifyConfig> {
    let mut config = CertifyConfig::default();
    if let Some(f) = eta {
        if !(f > 0.0 && f < 0.1) {
            bail!("--eta must lie in (0, 0.1), got {f}");
        }
        config.eta_fraction = f;
    }
    Ok(config)
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Analyze {
            input,
            out,
            format,
            eta,
            timing,
        } => {
            let start = Instant::now();
            let file = instance::InstanceFile::load(&input)?;
            let system = file.to_system()?;
            let ns = normalize(&system).map_err(|e| anyhow::anyhow!("{e}"))?;
            let m = system.m();
            let oracle = exact_frame_bounds(&ns);
            let profile = standard_basis_profile(&system);

            let mut config = certify_config(eta)?;
            config.oracle_lower = Some(oracle.lower);
            let cert = certify(&ns.eigenvalues, &ns.alpha, m, config)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let dec = decompose(
                &ns.eigenvalues,
                m,
                DecomposeConfig {
                    eta_fraction: eta.unwrap_or(1.0 / 20.0),
                },
            )
            .map_err(|e| anyhow::anyhow!("{e}"))?;

            match format {
                Format::Svg => emit(&out, &svg::render(&dec))?,
                Format::Json => {
                    let mut constants = vec![
                        ConstantOut {
                            name: "delta_B".into(),
                            value: BlaschkeProduct::new(ns.eigenvalues.clone()).delta(),
                            source: "blaschke delta of the eigenvalue sequence".into(),
                        },
                        ConstantOut {
                            name: "carleson_norm".into(),
                            value: carleson_norm(&AtomicMeasure::new(ns.eigenvalues.clone()))
                                .map_err(|e| anyhow::anyhow!("{e}"))?,
                            source: "carleson norm of the weighted atomic measure".into(),
                        },
                        ConstantOut {
                            name: "separation_radius".into(),
                            value: separation_radius(&ns.eigenvalues, m)
                                .map_err(|e| anyhow::anyhow!("{e}"))?,
                            source: "largest dyadic radius with ball counts <= m".into(),
                        },
                    ];
                    if oracle.lower > 0.0 {
                        let nec = certify_necessary(&ns.eigenvalues, &ns.alpha, m, oracle.lower)
                            .map_err(|e| anyhow::anyhow!("{e}"))?;
                        constants.push(ConstantOut {
                            name: "necessity_eta".into(),
                            value: nec.eta,
                            source: "necessity check at the oracle lower bound".into(),
                        });
                        constants.push(ConstantOut {
                            name: "necessity_d0_sq".into(),
                            value: nec.d0_sq,
                            source: "necessity check at the oracle lower bound".into(),
                        });
                        constants.push(ConstantOut {
                            name: "necessity_pass".into(),
                            value: if nec.pass { 1.0 } else { 0.0 },
                            source: "necessity check at the oracle lower bound".into(),
                        });
                    }
                    let report = AnalyzeReport {
                        instance: InstanceSummary {
                            digest: instance::digest(&file),
                            points: system.dim(),
                            orbits: m,
                        },
                        oracle: oracle.into(),
                        basis_profile: ProfileOut::from(&profile),
                        certificate: CertificateOut::from(&cert),
                        decomposition: DecompositionOut::from(&dec),
                        constants,
                        timing_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
                    };
                    emit(&out, &to_json(&report))?;
                }
            }
            Ok(())
        }

        Command::Certify { input, out, eta } => {
            let file = instance::InstanceFile::load(&input)?;
            let system = file.to_system()?;
            let ns = normalize(&system).map_err(|e| anyhow::anyhow!("{e}"))?;
            let mut config = certify_config(eta)?;
            config.oracle_lower = Some(exact_frame_bounds(&ns).lower);
            let cert = certify(&ns.eigenvalues, &ns.alpha, system.m(), config)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            #[derive(Serialize)]
            struct Out {
                certificate: CertificateOut,
            }
            emit(
                &out,
                &to_json(&Out {
                    certificate: CertificateOut::from(&cert),
                }),
            )
        }

        Command::Oracle {
            input,
            out,
            trunc,
            n0,
        } => {
            let file = instance::InstanceFile::load(&input)?;
            let system = file.to_system()?;
            let ns = normalize(&system).map_err(|e| anyhow::anyhow!("{e}"))?;
            #[derive(Serialize)]
            struct TruncatedOut {
                order: usize,
                bounds: BoundsOut,
                tail_bound: f64,
            }
            #[derive(Serialize)]
            struct TailOut {
                n0: u32,
                predicted: f64,
                exact: f64,
                degenerate: bool,
            }
            #[derive(Serialize)]
            struct Out {
                oracle: BoundsOut,
                basis_profile: ProfileOut,
                #[serde(skip_serializing_if = "Option::is_none")]
                truncated: Option<TruncatedOut>,
                #[serde(skip_serializing_if = "Option::is_none")]
                tail: Option<TailOut>,
            }
            let truncated = trunc.map(|order| {
                let (bounds, tail_bound) = truncated_orbit_bounds(&ns, order);
                TruncatedOut {
                    order,
                    bounds: bounds.into(),
                    tail_bound,
                }
            });
            let tail = n0.map(|n| {
                let tb = tail_lower_bound(&ns, n);
                TailOut {
                    n0: n,
                    predicted: tb.predicted,
                    exact: tb.exact,
                    degenerate: tb.degenerate,
                }
            });
            emit(
                &out,
                &to_json(&Out {
                    oracle: exact_frame_bounds(&ns).into(),
                    basis_profile: ProfileOut::from(&standard_basis_profile(&system)),
                    truncated,
                    tail,
                }),
            )
        }

        Command::Decompose {
            input,
            out,
            format,
            m,
            eta,
        } => {
            let file = instance::InstanceFile::load(&input)?;
            let system = file.to_system()?;
            let m = m.unwrap_or(system.m());
            let dec = decompose(
                &system.eigenvalues,
                m,
                DecomposeConfig {
                    eta_fraction: eta.unwrap_or(1.0 / 20.0),
                },
            )
            .map_err(|e| anyhow::anyhow!("{e}"))?;
            match format {
                Format::Json => emit(&out, &to_json(&DecompositionOut::from(&dec))),
                Format::Svg => emit(&out, &svg::render(&dec)),
            }
        }

        Command::Gen {
            kind,
            size,
            seed,
            m,
            out,
        } => {
            if m == 0 {
                bail!("--m must be at least 1");
            }
            let (points, description) = match kind {
                Generator::Radial => (generators::radial(size), format!("radial {size}")),
                Generator::PerturbedPairs => (
                    generators::perturbed_pairs(size, 0.6, 0.02),
                    format!("perturbed pairs {size}"),
                ),
                Generator::Clustered => (
                    generators::clustered(size, m, 0.7, 0.01, seed),
                    format!("clustered {size}x{m}"),
                ),
                Generator::RandomCarleson => (
                    generators::random_carleson(size, 6.0, seed),
                    format!("random carleson {size}"),
                ),
            };
            let j = points.len();
            let alpha = if m == 1 {
                orbiframe::alpha::AlphaMatrix::ones(j)
            } else {
                generators::random_alpha(m, j, seed.wrapping_add(1))
            };
            let vectors: Vec<CVector> = (0..m)
                .map(|i| {
                    CVector::from_fn(j, |c, _| {
                        alpha.entry(i, c).conj()
                            * Complex64::from(points[c].weight().sqrt())
                    })
                })
                .collect();
            let system = OrbitSystem::new(points, vectors).map_err(|e| anyhow::anyhow!("{e}"))?;
            let file = instance::InstanceFile::from_system(
                &system,
                Some(instance::Metadata {
                    seed: Some(seed),
                    description: Some(description),
                }),
            );
            emit(&out, &file.to_json())
        }

        Command::CheckAll { seed } => check_all(seed),
    }
}

/// A compact run of the library invariants on seeded instances; exits
/// nonzero when any check fails.
fn check_all(seed: u64) -> Result<()> {
    let mut passed = 0usize;
    let mut failed = 0usize;
    let mut check = |name: &str, ok: bool| {
        if ok {
            passed += 1;
        } else {
            failed += 1;
            eprintln!("check failed: {name}");
        }
    };

    let points = generators::radial(12);
    let dec = decompose(&points, 1, DecomposeConfig::default());
    check(
        "radial decomposition invariants",
        dec.as_ref()
            .map(|d| d.verify(&points).is_ok())
            .unwrap_or(false),
    );

    for (k, pts) in [
        generators::random_carleson(20, 6.0, seed),
        generators::clustered(4, 2, 0.7, 0.01, seed.wrapping_add(7)),
        generators::perturbed_pairs(5, 0.5, 0.02),
    ]
    .into_iter()
    .enumerate()
    {
        let d = decompose(&pts, 2, DecomposeConfig::default());
        check(
            &format!("decomposition invariants on generated set {k}"),
            d.as_ref().map(|d| d.verify(&pts).is_ok()).unwrap_or(false),
        );
    }

    let v = CVector::from_fn(points.len(), |r, _| {
        Complex64::from(points[r].weight().sqrt())
    });
    let system = OrbitSystem::new(points.clone(), vec![v]).unwrap();
    let ns = normalize(&system).unwrap();
    let oracle = exact_frame_bounds(&ns);
    check("radial oracle lower bound positive", oracle.lower > 0.0);

    let nec = certify_necessary(&ns.eigenvalues, &ns.alpha, 1, oracle.lower);
    check(
        "necessity holds at the oracle bound",
        nec.map(|n| n.pass).unwrap_or(false),
    );

    let cert = certify(&ns.eigenvalues, &ns.alpha, 1, CertifyConfig::default());
    check(
        "radial certificate sound against the oracle",
        cert.map(|c| c.lower_bound > 0.0 && c.lower_bound <= oracle.lower + 1e-8)
            .unwrap_or(false),
    );

    let n = orbiframe::oracle::tail_truncation_order(&ns, 1e-8, 1_000_000);
    let (fb, tail) = truncated_orbit_bounds(&ns, n);
    check(
        "truncated orbit bounds match the closed form",
        tail < 1e-8
            && (fb.lower - oracle.lower).abs() <= 1e-7
            && (fb.upper - oracle.upper).abs() <= 1e-7,
    );

    let delta = BlaschkeProduct::new(points.clone()).delta();
    check("radial sequence uniformly separated", delta > 0.0);
    check(
        "carleson norm finite and positive",
        carleson_norm(&AtomicMeasure::new(points))
            .map(|v| v > 0.0)
            .unwrap_or(false),
    );

    let rank_deficient = {
        let p = DiskPoint::real(0.4);
        let w = Complex64::from(p.weight().sqrt());
        let sys = OrbitSystem::new(
            vec![p, p],
            vec![CVector::from_element(2, w), CVector::from_element(2, w)],
        )
        .unwrap();
        exact_frame_bounds(&normalize(&sys).unwrap()).lower < 1e-10
    };
    check("rank-deficient pair refuted", rank_deficient);

    println!("{passed} passed, {failed} failed");
    if failed > 0 {
        bail!("{failed} checks failed");
    }
    Ok(())
}
