// Finding a graph with a prescribed spectrum, and certifying that none
// exists when a moment identity fails.

use energy_core::search::{realize_spectrum, SearchSpec, DEFAULT_MATCH_TOL};
use energy_core::spectrum::eigenvalues;
use energy_core::Spectrum;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r2 = 2f64.sqrt();
    let target = Spectrum::from_groups(&[(3.0, 1), (r2, 6), (-r2, 6), (-3.0, 1)]);
    let spec = SearchSpec::new(14).edges(21).bipartite().regular(3).realize(target.clone(), DEFAULT_MATCH_TOL);
    let r = realize_spectrum(&spec)?;
    let found = r.best.first().ok_or("no realisation")?;
    let dev = eigenvalues(found.graph.as_ref().ok_or("graph missing")?).max_deviation(&target).unwrap_or(f64::MAX);
    println!("found {} after {} graphs, max deviation {dev:.2e}", found.graph6, r.graphs_examined);
    if dev > 1e-6 {
        return Err("realisation does not match".into());
    }

    let printed = Spectrum::from_groups(&[(6.0, 1), (1.4415, 3), (-1.7208, 6)]);
    let r = realize_spectrum(&SearchSpec::new(10).edges(30).realize(printed, 5e-5))?;
    for v in &r.fast_fail {
        println!("fails: {v:?}");
    }
    if !r.certifies_nonexistence() {
        return Err("expected a certificate of non-existence".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
