//! Seeded self-check suite comparing numerical routes against closed forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    bb84_upper, bb84_zero_crossing, corollary7_bound, delta_objective, dephasing_upper,
    hashing_lower, no_cloning_line, theorem6_bound, uniform_grid, DeltaOptions,
};
use crate::channels::{
    amplitude_damping, bb84_degradable_limit, bb84_extension, dep_uv_extension, depolarizing,
    entanglement_fidelity, flagged_extension, n_uv, n_uv_is_degradable, twirl, FlaggedChannel,
    KrausChannel,
};
use crate::coherent_info::{bb84_alpha_scan, q1_maximize, CoherentObjective, Q1Options};
use crate::error::Result;
use crate::numerics::random::random_density;
use crate::numerics::{conditional_entropy, DensityMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Replaces every per-check threshold when set.
    pub tol: Option<f64>,
    pub q1: Q1Options,
    pub delta: DeltaOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub max_deviation: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:<28} max_dev={:.3e} tol={:.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.max_deviation,
            self.threshold
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// A degradable qubit channel, either plain or flagged.
#[derive(Debug, Clone)]
pub enum DegradableInstance {
    Plain(KrausChannel<f64>),
    Flagged(FlaggedChannel<f64>),
}

impl DegradableInstance {
    pub fn coherent_information(&self, phi: &DensityMatrix<f64>) -> Result<f64> {
        match self {
            Self::Plain(ch) => CoherentObjective::coherent_information(ch, phi),
            Self::Flagged(fc) => CoherentObjective::coherent_information(fc, phi),
        }
    }

    /// A single channel whose complement is the instance's environment
    /// (the flag, if any, is held by both sides).
    pub fn channel(&self) -> KrausChannel<f64> {
        match self {
            Self::Plain(ch) => ch.clone(),
            Self::Flagged(fc) => fc.materialize(),
        }
    }
}

fn random_uv<R: Rng>(rng: &mut R) -> (f64, f64) {
    loop {
        let u = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let v = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        if n_uv_is_degradable(u, v) {
            return (u, v);
        }
    }
}

fn random_plain<R: Rng>(rng: &mut R) -> KrausChannel<f64> {
    if rng.random_bool(0.5) {
        let (u, v) = random_uv(rng);
        n_uv(u, v)
    } else {
        amplitude_damping(rng.random_range(0.0..=0.5)).expect("γ in range")
    }
}

/// Draws from in-region `N_(u,v)`, amplitude damping with `γ ≤ 1/2`, and
/// flagged mixtures of these (random, Clifford-twirled, or BB84-type).
pub fn random_degradable_instance<R: Rng>(rng: &mut R) -> DegradableInstance {
    match rng.random_range(0..5) {
        0 | 1 => DegradableInstance::Plain(random_plain(rng)),
        2 => {
            let (u, v) = random_uv(rng);
            DegradableInstance::Flagged(dep_uv_extension(u, v).expect("in region"))
        }
        3 => {
            let q = rng.random_range(0.0..=bb84_degradable_limit::<f64>());
            DegradableInstance::Flagged(bb84_extension(q).expect("q in range"))
        }
        _ => {
            let k = rng.random_range(2..=3);
            let raw: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
            let total: f64 = raw.iter().sum();
            let branches = raw.iter().map(|w| (w / total, random_plain(rng))).collect();
            DegradableInstance::Flagged(flagged_extension(branches).expect("valid weights"))
        }
    }
}

/// `H(V|B)` and `H(V|E)` for the cq state `Σ_i p_i |i⟩⟨i| ⊗ U φ_i U†`.
pub fn ensemble_conditional_entropies(
    ch: &KrausChannel<f64>,
    phi0: &DensityMatrix<f64>,
    phi1: &DensityMatrix<f64>,
    p: f64,
) -> Result<(f64, f64)> {
    let comp = ch.complementary();
    let cq = |map: &KrausChannel<f64>| -> Result<f64> {
        let a = DensityMatrix::basis(2, 0).tensor(&map.apply(phi0)?);
        let b = DensityMatrix::basis(2, 1).tensor(&map.apply(phi1)?);
        conditional_entropy(&a.mix(&b, p), &[2, map.out_dim()], &[1])
    };
    Ok((cq(ch)?, cq(&comp)?))
}

struct Check {
    name: &'static str,
    default_tol: f64,
    deviation: f64,
}

fn flagged_depolarizing_q1(opts: &VerifyOptions) -> Result<Check> {
    let mut worst = 0.0f64;
    for i in 0..5 {
        let u = 0.1 + 0.3 * i as f64;
        let v_max = 0.98 * u.cos().abs().asin();
        for j in 0..5 {
            let v = -v_max + 2.0 * v_max * j as f64 / 4.0;
            let fc = dep_uv_extension(u, v)?;
            let r = q1_maximize(&fc, &opts.q1)?;
            worst = worst.max((r.value - delta_objective(u, v)).abs());
        }
    }
    Ok(Check {
        name: "dep_extension_q1",
        default_tol: 1e-5,
        deviation: worst,
    })
}

fn twirl_checks(rng: &mut ChaCha8Rng) -> Result<[Check; 2]> {
    let (mut fid, mut choi) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let u = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let v = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let tw = twirl(&n_uv(u, v))?;
        let f = entanglement_fidelity(&tw)?;
        let expected = (u / 2.0).cos().powi(2) * (v / 2.0).cos().powi(2);
        fid = fid.max((f - expected).abs());
        choi = choi.max(tw.choi_distance(&depolarizing((1.0 - f).clamp(0.0, 1.0))?)?);
    }
    Ok([
        Check {
            name: "twirl_fidelity",
            default_tol: 1e-10,
            deviation: fid,
        },
        Check {
            name: "twirl_is_depolarizing",
            default_tol: 1e-9,
            deviation: choi,
        },
    ])
}

fn bb84_checks(opts: &VerifyOptions) -> Result<[Check; 3]> {
    let (mut scan, mut q1) = (0.0f64, 0.0f64);
    for q in [0.0f64, 0.02, 0.05, 0.1, 0.14] {
        let closed = bb84_upper(q)?;
        scan = scan.max((bb84_alpha_scan(q, 0.0)? - closed).abs());
        let r = q1_maximize(&bb84_extension(q)?, &opts.q1)?;
        q1 = q1.max((r.value - closed).abs());
    }
    let root = (bb84_zero_crossing::<f64>() - bb84_degradable_limit::<f64>()).abs();
    Ok([
        Check {
            name: "bb84_alpha_scan",
            default_tol: 1e-12,
            deviation: scan,
        },
        Check {
            name: "bb84_extension_q1",
            default_tol: 1e-5,
            deviation: q1,
        },
        Check {
            name: "bb84_zero_crossing",
            default_tol: 1e-6,
            deviation: root,
        },
    ])
}

fn concavity_checks(rng: &mut ChaCha8Rng) -> Result<[Check; 2]> {
    let (mut concave, mut dpi) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let inst = random_degradable_instance(rng);
        let phi0 = random_density::<f64, _>(rng, 2);
        let phi1 = random_density::<f64, _>(rng, 2);
        let p: f64 = rng.random();
        let mixed = phi0.mix(&phi1, p);
        let lhs =
            p * inst.coherent_information(&phi0)? + (1.0 - p) * inst.coherent_information(&phi1)?;
        concave = concave.max(lhs - inst.coherent_information(&mixed)?);
        let (vb, ve) = ensemble_conditional_entropies(&inst.channel(), &phi0, &phi1, p)?;
        dpi = dpi.max(vb - ve);
    }
    Ok([
        Check {
            name: "concavity",
            default_tol: 1e-9,
            deviation: concave.max(0.0),
        },
        Check {
            name: "conditional_entropy_order",
            default_tol: 1e-9,
            deviation: dpi.max(0.0),
        },
    ])
}

fn ordering(opts: &VerifyOptions) -> Result<Check> {
    let grid = uniform_grid(0.0f64, 0.25, 500)?;
    let thm6 = theorem6_bound(&grid, &opts.delta)?;
    let cor7 = corollary7_bound(&grid)?;
    let mut worst = 0.0f64;
    for (k, &p) in grid.iter().enumerate() {
        let (t, c) = (thm6.values()[k], cor7.values()[k]);
        let cap = dephasing_upper(p)?.min(no_cloning_line(p));
        worst = worst.max(hashing_lower(p)? - t).max(t - c).max(c - cap);
    }
    Ok(Check {
        name: "bound_ordering",
        default_tol: 1e-6,
        deviation: worst.max(0.0),
    })
}

/// Runs every check; individual failures are reported, not raised.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut raw = vec![flagged_depolarizing_q1(opts)?];
    raw.extend(twirl_checks(&mut rng)?);
    raw.extend(bb84_checks(opts)?);
    raw.extend(concavity_checks(&mut rng)?);
    raw.push(ordering(opts)?);

    let checks = raw
        .into_iter()
        .map(|c| {
            let threshold = opts.tol.unwrap_or(c.default_tol);
            CheckOutcome {
                name: c.name,
                max_deviation: c.deviation,
                threshold,
                passed: c.deviation <= threshold,
            }
        })
        .collect();
    Ok(VerifyReport { checks })
}
