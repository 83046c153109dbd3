//! m-separation detection and the constructive decomposition of a finite
//! sequence into layers of clustered points with separated representatives.

use crate::disk::{rho, Ball, DiskPoint, PointSequence};
use crate::error::{Error, Result};

/// Largest number of points (counting repetitions, center included) that a
/// ball Δ(z, β) centered at a sequence point holds.
pub fn max_ball_count(points: &[DiskPoint], beta: f64) -> usize {
    points
        .iter()
        .map(|&z| points.iter().filter(|&&w| rho(z, w) < beta).count())
        .max()
        .unwrap_or(0)
}

fn check_separated(points: &[DiskPoint], m: usize, beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::BadBeta(beta));
    }
    for &z in points {
        let count = points.iter().filter(|&&w| rho(z, w) < beta).count();
        if count > m {
            return Err(Error::NotSeparated {
                m,
                beta,
                witness: z.value(),
                count,
            });
        }
    }
    Ok(())
}

/// Split an m-separated sequence (radius ≥ β) into m sequences, each
/// separated with radius ≥ β/4m.
///
/// Connected components of the intersection graph of the balls
/// Δ(z_n, β/4m) hold at most m balls each; within a component the points
/// are assigned to distinct output sequences by ascending index. Some of
/// the returned sequences may be empty.
pub fn split_separated(
    points: &[DiskPoint],
    m: usize,
    beta: f64,
) -> Result<Vec<PointSequence>> {
    check_separated(points, m, beta)?;
    let n = points.len();
    let r = beta / (4.0 * m as f64);
    let balls: Vec<Ball> = points
        .iter()
        .map(|&z| Ball::new(z, r).expect("radius in (0,1)"))
        .collect();

    // connected components by breadth-first traversal
    let mut component = vec![usize::MAX; n];
    let mut next_component = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let mut queue = vec![start];
        component[start] = next_component;
        while let Some(a) = queue.pop() {
            for b in 0..n {
                if component[b] == usize::MAX
                    && crate::disk::balls_intersect(&balls[a], &balls[b]).expect("equal radii")
                {
                    component[b] = next_component;
                    queue.push(b);
                }
            }
        }
        next_component += 1;
    }

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); next_component];
    for (idx, &c) in component.iter().enumerate() {
        members[c].push(idx);
    }

    let mut out: Vec<PointSequence> = vec![Vec::new(); m];
    for comp in &members {
        debug_assert!(comp.len() <= m, "component exceeds m balls");
        for (slot, &idx) in comp.iter().enumerate() {
            out[slot].push(points[idx]);
        }
    }
    Ok(out)
}

/// Configuration for the decomposition: the fraction of γ_p used for η_p.
#[derive(Debug, Clone, Copy)]
pub struct DecomposeConfig {
    pub eta_fraction: f64,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig {
            eta_fraction: 1.0 / 20.0,
        }
    }
}

/// One layer of the decomposition: the clustered points S_p, their
/// representatives S'_p (single multiplicity), and the layer parameters.
#[derive(Debug, Clone)]
pub struct Group {
    /// Cluster size p: each representative ball holds exactly p points.
    pub level: usize,
    pub points: PointSequence,
    pub representatives: PointSequence,
    pub gamma: f64,
    pub eta: f64,
}

/// Output of the reverse-induction decomposition. Groups are stored in
/// descending level order; levels with no clusters are absent.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub m: usize,
    pub groups: Vec<Group>,
}

impl Decomposition {
    pub fn levels(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.level).collect()
    }

    pub fn group(&self, level: usize) -> Option<&Group> {
        self.groups.iter().find(|g| g.level == level)
    }

    /// Check the structural invariants against the original input:
    /// multiset-exact union, representative separation > γ_p, inter-layer
    /// distance > (4/5)·γ_p for p > k, exact ball counts, η_p < γ_p/10.
    pub fn verify(&self, original: &[DiskPoint]) -> std::result::Result<(), String> {
        let mut union: Vec<DiskPoint> = Vec::new();
        for g in &self.groups {
            union.extend_from_slice(&g.points);
        }
        if !same_multiset(&union, original) {
            return Err("union of groups differs from the input multiset".into());
        }
        for g in &self.groups {
            if !(g.eta > 0.0 && g.eta < g.gamma / 10.0) {
                return Err(format!(
                    "level {}: eta {} not in (0, gamma/10) with gamma {}",
                    g.level, g.eta, g.gamma
                ));
            }
            for (a, &za) in g.representatives.iter().enumerate() {
                for &zb in g.representatives.iter().skip(a + 1) {
                    if rho(za, zb) <= g.gamma {
                        return Err(format!(
                            "level {}: representatives at distance {} <= gamma {}",
                            g.level,
                            rho(za, zb),
                            g.gamma
                        ));
                    }
                }
            }
            for &z in &g.representatives {
                let count = g.points.iter().filter(|&&w| rho(z, w) < g.eta).count();
                if count != g.level {
                    return Err(format!(
                        "level {}: ball at {} holds {} points, expected {}",
                        g.level,
                        z.value(),
                        count,
                        g.level
                    ));
                }
            }
        }
        for (i, gp) in self.groups.iter().enumerate() {
            for gk in self.groups.iter().skip(i + 1) {
                // groups are in descending level order, so gp.level > gk.level
                for &zp in &gp.points {
                    for &zk in &gk.points {
                        if rho(zp, zk) <= 0.8 * gp.gamma {
                            return Err(format!(
                                "levels {}/{}: inter-group distance {} <= (4/5) gamma {}",
                                gp.level,
                                gk.level,
                                rho(zp, zk),
                                gp.gamma
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn same_multiset(a: &[DiskPoint], b: &[DiskPoint]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let key = |p: &DiskPoint| (p.value().re.to_bits(), p.value().im.to_bits());
    let mut ka: Vec<_> = a.iter().map(key).collect();
    let mut kb: Vec<_> = b.iter().map(key).collect();
    ka.sort_unstable();
    kb.sort_unstable();
    ka == kb
}

/// Largest β on the geometric grid {2⁻ᵏ : k = 1..40} at which the sequence
/// is m-separated.
pub fn separation_radius(points: &[DiskPoint], m: usize) -> Result<f64> {
    (1..=40)
        .map(|k| 0.5f64.powi(k))
        .find(|&beta| max_ball_count(points, beta) <= m)
        .ok_or(Error::SeparationGridExhausted)
}

/// Reverse-induction decomposition: peel off the level-m clusters, then
/// recurse on the remainder with radius η_p/2 until the sequence is
/// exhausted. Deterministic given the configuration and input order.
pub fn decompose(
    points: &[DiskPoint],
    m: usize,
    config: DecomposeConfig,
) -> Result<Decomposition> {
    assert!(m >= 1, "m must be at least 1");
    assert!(
        config.eta_fraction > 0.0 && config.eta_fraction < 0.1,
        "eta_fraction must lie in (0, 1/10)"
    );
    let mut remaining = points.to_vec();
    let mut groups = Vec::new();
    if remaining.is_empty() {
        return Ok(Decomposition { m, groups });
    }

    let mut beta = separation_radius(&remaining, m)?;
    for p in (1..=m).rev() {
        if remaining.is_empty() {
            break;
        }
        let gamma = beta / (4.0 * p as f64);
        let eta = gamma * config.eta_fraction;
        let parts = split_separated(&remaining, p, beta)?;
        let representatives: PointSequence = parts[p - 1]
            .iter()
            .copied()
            .filter(|&z| remaining.iter().filter(|&&w| rho(z, w) < eta).count() == p)
            .collect();
        if !representatives.is_empty() {
            let (captured, rest): (Vec<_>, Vec<_>) = remaining.iter().partition(|&&w| {
                representatives.iter().any(|&z| rho(z, w) < eta)
            });
            remaining = rest;
            groups.push(Group {
                level: p,
                points: captured,
                representatives,
                gamma,
                eta,
            });
        }
        // the remainder is (p-1)-separated with radius eta/2
        beta = eta / 2.0;
    }
    debug_assert!(
        remaining.is_empty(),
        "decomposition left {} points unassigned",
        remaining.len()
    );
    Ok(Decomposition { m, groups })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::mobius;

    fn radial(n: usize) -> PointSequence {
        (1..=n)
            .map(|j| DiskPoint::real(1.0 - 0.5f64.powi(j as i32)))
            .collect()
    }

    #[test]
    fn max_ball_count_examples() {
        // separated points with pairwise rho >= 2*beta
        let pts = vec![DiskPoint::real(0.0), DiskPoint::real(0.8)];
        assert_eq!(max_ball_count(&pts, 0.2), 1);

        let p = DiskPoint::real(0.3);
        assert_eq!(max_ball_count(&[p, p, p], 0.05), 3);

        let pts = vec![
            DiskPoint::real(0.0),
            DiskPoint::real(0.1),
            DiskPoint::real(0.5),
        ];
        assert_eq!(max_ball_count(&pts, 0.15), 2);
    }

    #[test]
    fn split_separated_identity_for_m1() {
        let pts = radial(6);
        let beta = separation_radius(&pts, 1).unwrap();
        let parts = split_separated(&pts, 1, beta).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].len(), pts.len());
    }

    #[test]
    fn split_separated_close_pair() {
        // two points with intersecting beta/4m balls form one component
        // split across the outputs
        let beta = 0.2;
        let a = DiskPoint::real(0.0);
        let b = DiskPoint::real(0.03);
        let parts = split_separated(&[a, b], 2, beta).unwrap();
        assert_eq!(parts[0].len(), 1);
        assert_eq!(parts[1].len(), 1);
    }

    #[test]
    fn split_separated_repetitions() {
        let p = DiskPoint::real(0.4);
        let parts = split_separated(&[p, p, p], 3, 0.3).unwrap();
        for part in &parts {
            assert_eq!(part.len(), 1);
            assert_eq!(part[0].value(), p.value());
        }
    }

    #[test]
    fn split_separated_refuses_crowded_input() {
        let p = DiskPoint::real(0.4);
        let err = split_separated(&[p, p, p], 2, 0.3).unwrap_err();
        match err {
            Error::NotSeparated { count, .. } => assert_eq!(count, 3),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn decompose_separated_sequence() {
        let pts = radial(8);
        let d = decompose(&pts, 1, DecomposeConfig::default()).unwrap();
        assert_eq!(d.levels(), vec![1]);
        let g = d.group(1).unwrap();
        assert_eq!(g.points.len(), 8);
        assert_eq!(g.representatives.len(), 8);
        d.verify(&pts).unwrap();
    }

    #[test]
    fn decompose_tight_pairs() {
        // far-apart anchors, each with a companion at distance 0.001,
        // well inside the eta ball of the top layer
        let anchors = [
            DiskPoint::real(0.0),
            DiskPoint::real(0.7),
            DiskPoint::real(-0.7),
            DiskPoint::from_re_im(0.0, 0.7).unwrap(),
        ];
        let mut pts = Vec::new();
        for &z in &anchors {
            pts.push(z);
            pts.push(DiskPoint::new(mobius(z, DiskPoint::real(0.001), false)).unwrap());
        }
        let d = decompose(&pts, 2, DecomposeConfig::default()).unwrap();
        assert_eq!(d.levels(), vec![2]);
        let g = d.group(2).unwrap();
        assert_eq!(g.representatives.len(), anchors.len());
        d.verify(&pts).unwrap();
    }

    #[test]
    fn decompose_mixed_instance() {
        // 8 far singletons and 4 tight pairs
        let singles: Vec<DiskPoint> = (0..8)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * k as f64 / 8.0;
                DiskPoint::new(num_complex::Complex64::from_polar(0.45, th)).unwrap()
            })
            .collect();
        let anchors: Vec<DiskPoint> = (0..4)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / 4.0;
                DiskPoint::new(num_complex::Complex64::from_polar(0.85, th)).unwrap()
            })
            .collect();
        let mut pts = singles.clone();
        for &z in &anchors {
            pts.push(z);
            pts.push(DiskPoint::new(mobius(z, DiskPoint::real(0.001), false)).unwrap());
        }
        let d = decompose(&pts, 2, DecomposeConfig::default()).unwrap();
        assert_eq!(d.levels(), vec![2, 1]);
        assert_eq!(d.group(2).unwrap().points.len(), 8);
        assert_eq!(d.group(1).unwrap().points.len(), 8);
        d.verify(&pts).unwrap();
    }

    #[test]
    fn decompose_remainder_property() {
        let mut pts = radial(6);
        let p = DiskPoint::real(0.3);
        pts.push(p);
        pts.push(p);
        let d = decompose(&pts, 2, DecomposeConfig::default()).unwrap();
        d.verify(&pts).unwrap();
        // removing the top layer leaves a 1-separated remainder at eta/2
        let top = d.groups.first().unwrap();
        let mut rest = pts.clone();
        for z in &top.points {
            let pos = rest
                .iter()
                .position(|w| w.value() == z.value())
                .expect("group point in input");
            rest.remove(pos);
        }
        assert!(max_ball_count(&rest, top.eta / 2.0) < top.level);
    }
}
