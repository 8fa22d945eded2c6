// Two-value completion of a partial spectrum: the candidate table for
// 10-regular graphs on 16 vertices and its best passing row.

use energy_core::{best_candidates, complete_spectrum, derive_constants, CandidateFilter, Objective};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let known = derive_constants(&[10.0]);
    let cands = complete_spectrum(16, 80, &known)?;
    println!("{:>3} {:>3} {:>9} {:>9} {:>9} {:>11}", "p", "q", "x", "y", "E", "third/6");
    for c in &cands {
        println!(
            "{:>3} {:>3} {:>9.4} {:>9.4} {:>9.4} {:>11.4} {}",
            c.p,
            c.q,
            c.x,
            c.y,
            c.energy,
            c.third_moment_over_6,
            if c.passes_moment_test { "+" } else { "-" }
        );
    }
    let best = &best_candidates(&cands, CandidateFilter::MomentPassOnly, Objective::Max)?[0];
    println!("best passing: {:?}", best.assemble(&known).groups(1e-9));
    if (best.energy - 40.0).abs() > 1e-9 || best.p != 5 {
        return Err(format!("unexpected best row {best:?}").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
