//! Sp(2n,R)/GL(n,R): the parity rule against the root-system oracle.
use itertools::Itertools;
use svdual::spectrum::{case13_is_ds, case13_root_oracle, Case13Chi, InfCharTuple};

fn main() {
    let mut disagreements = 0;
    for n in 1..=3 {
        for pick in (1..=6i64).rev().combinations(n) {
            let l = InfCharTuple::from_ints(&pick).unwrap();
            for chi in [Case13Chi::Trivial, Case13Chi::SgnDet] {
                let a = case13_is_ds(&l, chi).unwrap();
                let b = case13_root_oracle(&l, chi).unwrap();
                if a {
                    println!("{l} {chi:?}");
                }
                disagreements += usize::from(a != b);
            }
        }
    }
    println!("disagreements: {disagreements}");
}
