//! Walks the registry: rank, ǧ_X, ľ_X and the commutant of every small instance.
use svdual::factorization::{commutant_of_space, golden_commutant};
use svdual::symspaces::{all_instances, dual_data, rank, registry};

fn main() {
    for row in registry() {
        println!("case {:>2}: {}  [{}]", row.case, row.space, row.g_check);
    }
    println!();
    for x in all_instances(3) {
        let d = dual_data(&x);
        let rule = commutant_of_space(&x).expect("valid instance");
        let mark = if rule == golden_commutant(&x) { "" } else { "  (differs from table)" };
        println!("{:<30} rank {}  l_check {:<24} commutant {rule}{mark}", x.to_string(), rank(&x).unwrap(), d.l_check.to_string());
    }
}
