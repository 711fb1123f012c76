//! Bound tables for the depolarizing and BB84 channels.

use qcap::bounds::{
    ad_upper, bb84_upper, convex_hull_curves, corollary7_bound, delta_curve, dephasing_upper,
    hashing_lower, no_cloning_line, sample_on, uniform_grid, DeltaOptions,
};

use crate::table::Table;

fn clamped(values: &[f64]) -> Vec<f64> {
    values.iter().map(|v| v.max(0.0)).collect()
}

pub fn depolarizing_table(
    pmin: f64,
    pmax: f64,
    steps: usize,
    delta_opts: &DeltaOptions,
    include_clamped: bool,
) -> qcap::Result<Table> {
    let grid = uniform_grid(pmin, pmax, steps)?;
    let hashing = sample_on("hashing", "p", &grid, hashing_lower)?;
    let deph = sample_on("one_minus_Hp", "p", &grid, dephasing_upper)?;
    let line = sample_on("one_minus_4p", "p", &grid, |p| Ok(no_cloning_line(p)))?;
    let ad = sample_on("ad_bound", "p", &grid, ad_upper)?;
    let delta = delta_curve(&grid, delta_opts)?;
    let thm6 = convex_hull_curves("thm6_hull", &[&delta, &line])?;
    let cor7 = corollary7_bound(&grid)?;

    let mut t = Table::new("p", grid);
    for c in [&hashing, &deph, &line, &ad, &delta, &thm6, &cor7] {
        t.push(&c.name, c.values().to_vec());
    }
    if include_clamped {
        t.push("thm6_hull_clamped", clamped(thm6.values()));
        t.push("cor7_hull_clamped", clamped(cor7.values()));
    }
    Ok(t)
}

pub fn bb84_table(qmin: f64, qmax: f64, steps: usize) -> qcap::Result<Table> {
    let grid = uniform_grid(qmin, qmax, steps)?;
    let upper = sample_on("bb84_upper", "q", &grid, bb84_upper)?;
    let mut t = Table::new("q", grid);
    t.push("bb84_upper", upper.values().to_vec());
    t.push("bb84_upper_clamped", clamped(upper.values()));
    Ok(t)
}
