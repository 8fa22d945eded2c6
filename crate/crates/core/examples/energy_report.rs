// Spectrum, energy and moment diagnostics for a few named graphs.

use energy_core::spectrum::{eigenvalues, DEFAULT_GROUP_TOL};
use energy_core::{construct, graph6, Graph};

fn describe(name: &str, g: &Graph) -> f64 {
    let s = eigenvalues(g);
    let r = s.report();
    let groups: Vec<String> = s
        .groups(DEFAULT_GROUP_TOL)
        .iter()
        .map(|e| format!("{:.4}^{}", e.value, e.multiplicity))
        .collect();
    println!("{name}: n = {}, m = {}", g.n(), g.m());
    println!("  spectrum {}", groups.join(" "));
    println!(
        "  E = {:.6}  sum x^2 = {:.3}  triangles = {}  Koolen-Moulton slack = {:.4}",
        r.energy, r.moment2, r.triangle_count, r.km_slack
    );
    r.energy
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = describe("Petersen", &construct::petersen());
    if (e - 16.0).abs() > 1e-9 {
        return Err(format!("Petersen energy {e}").into());
    }
    describe("K7", &construct::complete(7)?);
    let e = describe("F`~~w", &graph6::decode("F`~~w")?);
    if (e - 12.0).abs() > 1e-9 {
        return Err(format!("F`~~w energy {e}").into());
    }
    describe("Clebsch", &construct::clebsch());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
