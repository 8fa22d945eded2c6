// Exhaustive maximal-energy search over all graphs on up to 7 vertices,
// plus a constrained class (trees on 10 vertices).

use energy_core::canon::are_isomorphic;
use energy_core::search::{extremal_energy, SearchObjective, SearchSpec};
use energy_core::{construct, graph6};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=7 {
        let r = extremal_energy(&SearchSpec::new(n).objective(SearchObjective::MaxEnergy))?;
        let codes: Vec<&str> = r.best.iter().map(|f| f.graph6.as_str()).collect();
        println!(
            "n = {n}: E = {:.4} from {} graphs, maximisers {codes:?}",
            r.best[0].energy, r.graphs_examined
        );
        let k = construct::complete(n)?;
        if !r.best.iter().any(|f| f.graph.as_ref().is_some_and(|g| are_isomorphic(g, &k))) {
            return Err(format!("K{n} missing at n = {n}").into());
        }
        if n == 7 {
            let other = graph6::decode("F`~~w")?;
            if r.best.len() != 2 || !r.best.iter().any(|f| f.graph.as_ref().is_some_and(|g| are_isomorphic(g, &other))) {
                return Err("expected {K7, F`~~w} at n = 7".into());
            }
        }
    }
    let trees = extremal_energy(&SearchSpec::new(10).tree().objective(SearchObjective::MaxEnergy))?;
    println!("trees on 10 vertices: max E = {:.4} ({})", trees.best[0].energy, trees.best[0].graph6);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
