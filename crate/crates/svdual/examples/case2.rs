//! U(n)/O(n) type spaces: accepted (p, ε) for every λ in a small window, n odd.
use svdual::spectrum::{case2_closed_form, case2_so_quotient_accepting, InfCharTuple};

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3usize);
    let window: Vec<i64> = (-3..=3).rev().collect();
    for pick in itertools::Itertools::combinations(window.iter().copied(), n) {
        let l = InfCharTuple::from_ints(&pick).unwrap();
        let acc = case2_so_quotient_accepting(&l).unwrap();
        let text: Vec<String> = acc.iter().map(|(p, e)| format!("p={p} {e}")).collect();
        let closed = match case2_closed_form(&l) {
            Ok((p, e)) if n % 2 == 1 => format!("  closed form p={p} {e}"),
            _ => String::new(),
        };
        println!("{l}: {}{closed}", text.join(", "));
    }
}
