//! The Arthur packet of one ψ seen from the symmetric spaces of U(2,2).
use svdual::arthur::ArthurParameter;
use svdual::spectrum::{disjoint_owner, enumerate_eps, EpsCharacter, SpectrumOptions};
use svdual::symspaces::SymmetricSpace;

fn main() {
    let opts = SpectrumOptions::default();
    let c3: SymmetricSpace = "case3:r=1,s=1,rp=1,sp=1".parse().unwrap();
    let c4: SymmetricSpace = "case4:n=2".parse().unwrap();
    let psi = ArthurParameter::parse(c4.lgroup(), "chi(3)xR[1]+chi(-3)xR[1]+chi(1)xR[1]+chi(-1)xR[1]").unwrap();
    for x in [c3, c4] {
        match enumerate_eps(&x, &psi, &opts) {
            Ok(es) => println!("{x}: {}", es.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
            Err(e) => println!("{x}: {e}"),
        }
    }
    for eps in EpsCharacter::all(4) {
        let owner = disjoint_owner(&psi, &eps, &[c3, c4], &opts);
        if let Ok(Some(o)) = owner {
            println!("{eps} -> {o}");
        }
    }
}
