// The `verify-tables` command run in-process.

use energy_explorer::cli::{run, EXIT_OK};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["energy", "verify-tables"], &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    if code != EXIT_OK {
        return Err(String::from_utf8(err)?.into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
