// Encoding and decoding graph6 strings, and what the strict decoder rejects.

use energy_core::{construct, graph6};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let heawood = construct::heawood();
    let code = graph6::encode(&heawood)?;
    println!("Heawood graph: {code}");
    if graph6::decode(code.as_str())? != heawood {
        return Err("round trip changed the graph".into());
    }
    for code in ["F`~~w", "G`lv~{", "HEutZhj", "I~qkzXZLw", "JJ^em]uj[v_", "K~z\\c\\qRXVa~"] {
        let g = graph6::decode(code)?;
        println!("{code:>14}  n = {:>2}  m = {}", g.n(), g.m());
    }
    for bad in ["", "A", "A@", ">>graph6<<A_", ":Fa@x^"] {
        match graph6::decode(bad) {
            Ok(_) => return Err(format!("{bad:?} should be rejected").into()),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
