//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its worst deviation and wall time; the test fails if any line fails.

use std::time::{Duration, Instant};

use qcap::bounds::{
    bb84_zero_crossing, corollary7_bound, theorem6_bound, uniform_grid, DeltaOptions,
};
use qcap::channels::{
    amplitude_damping, bb84_extension, dep_uv_extension, depolarizing, entanglement_fidelity,
    find_degrading_map, n_uv, no_cloning_extension, twirl, DegradingSearch,
};
use qcap::coherent_info::{bb84_alpha_scan, q1_maximize, Q1Options};
use qcap::numerics::random::{random_density, random_hermitian, random_unitary};
use qcap::numerics::{hermitian_eig, von_neumann_entropy};
use qcap::verify::{ensemble_conditional_entropies, random_degradable_instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn h(x: f64) -> f64 {
    let t = |y: f64| if y <= 0.0 { 0.0 } else { -y * y.log2() };
    t(x) + t(1.0 - x)
}

struct Outcome {
    id: usize,
    title: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(
    id: usize,
    title: &'static str,
    limit_s: u64,
    body: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = body();
    Outcome {
        id,
        title,
        ok,
        detail,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_s),
    }
}

fn flagged_depolarizing_q1() -> (bool, String) {
    let opts = Q1Options::default();
    let mut worst = 0.0f64;
    for i in 0..5 {
        let u = 0.1 + 0.3 * i as f64;
        let v_max = 0.98 * u.cos().abs().asin();
        for j in 0..5 {
            let v = -v_max + v_max * j as f64 / 2.0;
            assert!(v.sin().abs() <= u.cos().abs());
            let r = q1_maximize(&dep_uv_extension(u, v).unwrap(), &opts).unwrap();
            let closed = h(0.5 * (1.0 + u.sin() * v.sin())) - h(0.5 * (1.0 + u.cos() * v.cos()));
            worst = worst.max((r.value - closed).abs());
        }
    }
    (
        worst <= 1e-5,
        format!("max |Q1 - closed form| = {worst:.2e} over 25 points"),
    )
}

fn twirled_n_uv() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut fid, mut choi) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let u = rng.random_range(-3.2..3.2);
        let v = rng.random_range(-3.2..3.2);
        let tw = twirl(&n_uv(u, v)).unwrap();
        let f = entanglement_fidelity(&tw).unwrap();
        let expected = (u / 2.0f64).cos().powi(2) * (v / 2.0f64).cos().powi(2);
        fid = fid.max((f - expected).abs());
        choi = choi.max(
            tw.choi_distance(&depolarizing(1.0 - expected).unwrap())
                .unwrap(),
        );
    }
    (
        fid <= 1e-10 && choi <= 1e-9,
        format!("fidelity dev {fid:.2e}, Choi dev {choi:.2e}"),
    )
}

fn bb84() -> (bool, String) {
    let (mut scan, mut q1) = (0.0f64, 0.0f64);
    for q in [0.0f64, 0.02, 0.05, 0.1, 0.14] {
        let g = 2.0 * q * (1.0 - q);
        let closed = h(0.5 - g) - h(g);
        scan = scan.max((bb84_alpha_scan(q, 0.0).unwrap() - closed).abs());
        let r = q1_maximize(&bb84_extension(q).unwrap(), &Q1Options::default()).unwrap();
        q1 = q1.max((r.value - closed).abs());
    }
    let root = (bb84_zero_crossing::<f64>() - (2.0 - 2f64.sqrt()) / 4.0).abs();
    (
        scan <= 1e-12 && q1 <= 1e-5 && root <= 1e-6,
        format!("alpha-scan dev {scan:.2e}, Q1 dev {q1:.2e}, root dev {root:.2e}"),
    )
}

fn depolarizing_bounds() -> (bool, String) {
    let grid = uniform_grid(0.0, 0.3, 601).unwrap();
    let thm6 = theorem6_bound(&grid, &DeltaOptions::default()).unwrap();
    let cor7 = corollary7_bound(&grid).unwrap();
    let mut failures = Vec::new();
    if !cor7.samples.is_convex(1e-9) {
        failures.push("cor7 not convex".to_string());
    }
    let (mut above_simple, mut below_hashing, mut above_cor7) = (0.0f64, 0.0f64, 0.0f64);
    for (k, &p) in grid.iter().enumerate() {
        let c = cor7.values()[k];
        above_simple = above_simple.max(c - (1.0 - h(p)).min(1.0 - 4.0 * p));
        if p <= 0.25 {
            below_hashing = below_hashing.max(1.0 - h(p) - p * 3f64.log2() - c);
        }
        above_cor7 = above_cor7.max(thm6.values()[k] - c);
    }
    if above_simple > 1e-12 {
        failures.push(format!("cor7 above min(1-H, 1-4p) by {above_simple:.2e}"));
    }
    if below_hashing > 0.0 {
        failures.push(format!("cor7 below hashing by {below_hashing:.2e}"));
    }
    if above_cor7 > 1e-6 {
        failures.push(format!("thm6 above cor7 by {above_cor7:.2e}"));
    }
    let at0 = cor7.eval(0.0).unwrap();
    let at_quarter = cor7.eval(0.25).unwrap();
    if (at0 - 1.0).abs() > 1e-12 {
        failures.push(format!("cor7(0) = {at0}"));
    }
    if at_quarter > 0.0 {
        failures.push(format!("cor7(0.25) = {at_quarter}"));
    }
    let ok = failures.is_empty();
    let detail = if ok {
        format!("cor7(0.25) = {at_quarter:.4}, max thm6 - cor7 = {above_cor7:.2e}")
    } else {
        failures.join("; ")
    };
    (ok, detail)
}

fn concavity() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut concave, mut order) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for _ in 0..200 {
        let inst = random_degradable_instance(&mut rng);
        let phi0 = random_density::<f64, _>(&mut rng, 2);
        let phi1 = random_density::<f64, _>(&mut rng, 2);
        let p: f64 = rng.random();
        let lhs = p * inst.coherent_information(&phi0).unwrap()
            + (1.0 - p) * inst.coherent_information(&phi1).unwrap();
        let rhs = inst.coherent_information(&phi0.mix(&phi1, p)).unwrap();
        concave = concave.max(lhs - rhs);
        let (vb, ve) = ensemble_conditional_entropies(&inst.channel(), &phi0, &phi1, p).unwrap();
        order = order.max(vb - ve);
    }
    (
        concave <= 1e-9 && order <= 1e-9,
        format!("max concavity gap {concave:.2e}, max H(V|B) - H(V|E) = {order:.2e}"),
    )
}

fn no_cloning() -> (bool, String) {
    let ext = no_cloning_extension(&depolarizing(0.25).unwrap()).unwrap();
    let defect = ext.symmetry_defect();
    let q1 = q1_maximize(&ext.channel, &Q1Options::default())
        .unwrap()
        .value;
    (
        defect < 1e-10 && q1 <= 1e-6,
        format!("swap defect {defect:.2e}, Q1 = {q1:.2e}"),
    )
}

fn degrading_maps() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    for gamma in [0.1, 0.3, 0.5] {
        let s = find_degrading_map(&amplitude_damping(gamma).unwrap(), 1e-9, 2000).unwrap();
        let found = matches!(s, DegradingSearch::Found { .. }) && s.residual() < 1e-7;
        ok &= found;
        notes.push(format!("γ={gamma}: {:.1e}", s.residual()));
    }
    for gamma in [0.7, 0.9] {
        let s = find_degrading_map(&amplitude_damping(gamma).unwrap(), 1e-9, 2000).unwrap();
        let infeasible = matches!(s, DegradingSearch::Infeasible { .. }) && s.residual() > 1e-3;
        ok &= infeasible;
        notes.push(format!("γ={gamma}: {:.1e}", s.residual()));
    }
    (ok, format!("residuals {}", notes.join(", ")))
}

fn numerics_floor() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut recon = 0.0f64;
    for k in 0..100 {
        let n = 1 + (k * 47) / 99;
        let m = random_hermitian::<f64, _>(&mut rng, n);
        let spec = hermitian_eig(&m).unwrap();
        recon = recon.max(spec.reconstruct().distance(&m));
    }
    let mut inv = 0.0f64;
    for k in 0..100 {
        let n = if k % 2 == 0 { 2 } else { 4 };
        let rho = random_density::<f64, _>(&mut rng, n);
        let u = random_unitary(&mut rng, n);
        let a = von_neumann_entropy(&rho).unwrap();
        let b = von_neumann_entropy(&rho.conjugate(&u)).unwrap();
        inv = inv.max((a - b).abs());
    }
    (
        recon < 1e-10 && inv < 1e-9,
        format!("reconstruction {recon:.2e} (n ≤ 48), entropy invariance {inv:.2e}"),
    )
}

#[test]
fn acceptance() {
    let outcomes = [
        run(
            1,
            "flagged depolarizing Q1 closed form",
            60,
            flagged_depolarizing_q1,
        ),
        run(2, "Clifford twirl of N_uv", 10, twirled_n_uv),
        run(3, "BB84 extension", 30, bb84),
        run(4, "depolarizing bound curves", 120, depolarizing_bounds),
        run(5, "concavity on degradable channels", 30, concavity),
        run(6, "no-cloning extension", 60, no_cloning),
        run(7, "degrading-map feasibility", 60, degrading_maps),
        run(8, "numerics floor", 30, numerics_floor),
    ];
    let mut all = true;
    for o in &outcomes {
        let in_time = o.elapsed <= o.limit;
        let pass = o.ok && in_time;
        all &= pass;
        println!(
            "[{}] criterion {}: {} | {} | {:.2}s (limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            o.id,
            o.title,
            o.detail,
            o.elapsed.as_secs_f64(),
            o.limit.as_secs()
        );
    }
    assert!(all, "at least one acceptance criterion failed");
}
