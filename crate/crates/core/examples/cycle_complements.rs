// 15-regular graphs on 18 vertices whose complement is a union of cycles:
// one graph per partition of 18 into parts of at least 3.

use energy_core::search::partitions::partitions_min_part;
use energy_core::search::{cycle_partition_spectrum, extremal_energy, SearchObjective, SearchSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rows: Vec<(f64, Vec<usize>)> = partitions_min_part(18, 3)
        .into_iter()
        .map(|p| Ok((cycle_partition_spectrum(&p, 18)?.energy(), p)))
        .collect::<Result<_, energy_core::spectrum::SpectrumError>>()?;
    rows.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!("{} partitions; top five:", rows.len());
    for (e, p) in rows.iter().take(5) {
        println!("  {p:?}  E = {e:.4}");
    }
    if rows[0].1 != [5, 5, 4, 4] {
        return Err(format!("unexpected best partition {:?}", rows[0].1).into());
    }
    let r = extremal_energy(&SearchSpec::new(18).complement_of_cycles().objective(SearchObjective::MaxEnergy))?;
    println!("search agrees: {} with E = {:.4}", r.best[0].graph6, r.best[0].energy);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
