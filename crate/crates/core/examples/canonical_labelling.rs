// Canonical forms decide isomorphism; equal spectra do not.

use energy_core::canon::{are_isomorphic, canonical_form};
use energy_core::spectrum::eigenvalues;
use energy_core::{construct, graph6};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = construct::petersen();
    let shuffled = p.relabel(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
    let a = canonical_form(&p);
    let b = canonical_form(&shuffled);
    println!("Petersen canonical code: {}", graph6::encode(&a.graph)?);
    if a.graph != b.graph {
        return Err("relabelling changed the canonical form".into());
    }
    let star = construct::star(4)?;
    let c4k1 = construct::disjoint_union(&[construct::cycle(4)?, construct::complete(1)?])?;
    let same_spectrum = eigenvalues(&star).matches(&eigenvalues(&c4k1), 1e-9);
    println!("K_1,4 vs C4+K1: cospectral {same_spectrum}, isomorphic {}", are_isomorphic(&star, &c4k1));
    if !same_spectrum || are_isomorphic(&star, &c4k1) {
        return Err("expected a cospectral, non-isomorphic pair".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
