// A session on 15-regular graphs with 18 vertices: extend K by hand, read
// each candidate table, then replay the history and save it.

use energy_explorer::session::{Addition, Session, ValueInput, Which};
use energy_explorer::table::render;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut s = Session::create("demo".into(), 18, 135, &[ValueInput::Number(15.0)])?;
    println!("{}", render(&s.candidates(0)?.rows));

    // the passing p = 5 row has x = -3; assume four complement components
    s.extend(Addition::Adopt { p: 5, root: 1, which: Which::X, count: Some(3) })?;
    println!("{}", render(&s.candidates(1)?.rows));

    // two pentagons in the complement
    let pentagons = ["phi-1", "phi-1", "phi-1", "phi-1", "-phi", "-phi", "-phi", "-phi"];
    s.extend(Addition::Values { values: pentagons.iter().map(|t| ValueInput::Text(t.to_string())).collect() })?;
    let table = s.candidates(2)?;
    println!("{}", render(&table.rows));
    let best = table
        .rows
        .iter()
        .filter(|r| r.passes_moment_test)
        .map(|r| r.energy)
        .fold(f64::NEG_INFINITY, f64::max);
    if (best - 38.9443).abs() > 5e-5 {
        return Err(format!("best passing energy {best}").into());
    }
    if !s.replay_matches() {
        return Err("replay diverged".into());
    }
    let doc = s.to_json();
    println!("session document: {} bytes, {} snapshots", doc.len(), s.history.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
