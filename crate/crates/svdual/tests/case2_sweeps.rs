use itertools::Itertools;
use svdual::spectrum::*;

fn lambdas(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (lo..=hi).rev().combinations(n).collect()
}

#[test]
fn so_only_matches_mu_parity() {
    for n in 1..=4usize {
        for doubled in lambdas(n, -7, 7) {
            // integers for n odd, half-integers for n even
            if doubled.iter().any(|d| (d.rem_euclid(2) == 0) != (n % 2 == 1)) {
                continue;
            }
            let l = InfCharTuple::from_halves(&doubled).unwrap();
            for eps in EpsCharacter::all(n as u32) {
                let k = case2_min_ktype(&l, &eps).unwrap();
                let same = k.mu.iter().all(|x| (x - k.mu[0]) % 2 == 0);
                assert_eq!(case2_is_ds(&l, &eps, Case2Variant::SOOnly).unwrap(), same, "{l} {eps}");
                let even = k.mu.iter().all(|x| x % 2 == 0);
                assert_eq!(case2_is_ds(&l, &eps, Case2Variant::OFull).unwrap(), even, "{l} {eps}");
            }
        }
    }
}

#[test]
fn odd_n_unique_class() {
    for n in [1usize, 3, 5] {
        for ints in lambdas(n, -8, 8) {
            let l = InfCharTuple::from_ints(&ints).unwrap();
            let acc = case2_so_quotient_accepting(&l).unwrap();
            let (p0, eps) = case2_closed_form(&l).unwrap();
            assert_eq!(acc, vec![(p0, eps)], "{l}");
        }
    }
}
