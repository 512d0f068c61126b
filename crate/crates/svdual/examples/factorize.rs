//! Generates discrete-series parameters for one space and factors each through ^LG_X.
use svdual::factorization::{factorize, generate_ds_parameters, Options};
use svdual::symspaces::SymmetricSpace;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "case8:r=1,s=0,rp=3,sp=0".to_string());
    let x: SymmetricSpace = spec.parse().expect("space spec");
    let opts = Options::default();
    println!("{x}");
    for psi in generate_ds_parameters(&x, 6, &opts) {
        match factorize(&psi, &x, &opts) {
            Ok(f) => {
                let phi_d: Vec<String> = f.phi_d.iter().map(ToString::to_string).collect();
                println!("  {psi}\n    phi_d = {}", phi_d.join(" + "));
            }
            Err(e) => println!("  {psi}\n    {e}"),
        }
    }
}
