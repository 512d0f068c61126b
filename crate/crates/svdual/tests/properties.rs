use proptest::prelude::*;
use proptest::sample::select;

use svdual::arthur::{inf_char, sl2_partition, validate_good_parity, ArthurParameter, ArthurSummand};
use svdual::factorization::{factorize, generate_ds_parameters, Options};
use svdual::groups::{dual_lgroup, ClassicalGroup};
use svdual::matrixlab::{ExactMatrix, Invertible, Laurent};
use svdual::spectrum::{
    case13_is_ds, case13_root_oracle, case2_closed_form, case2_so_quotient_accepting, enumerate_eps, packet_verdicts,
    Case13Chi, InfCharTuple, SpectrumOptions,
};
use svdual::symspaces::{all_instances, SymmetricSpace};
use svdual::weil::{Rho, WeilCChar};

fn spaces() -> Vec<SymmetricSpace> {
    all_instances(5)
}

/// A space together with one of its generated parameters.
fn space_and_psi() -> impl Strategy<Value = (SymmetricSpace, ArthurParameter)> {
    let pool: Vec<(SymmetricSpace, ArthurParameter)> = spaces()
        .into_iter()
        .flat_map(|x| generate_ds_parameters(&x, 7, &Options::default()).into_iter().take(4).map(move |p| (x, p)))
        .collect();
    select(pool)
}

/// Signed permutation matrix with u-powers, carried with its inverse.
fn monomial(n: usize) -> impl Strategy<Value = Invertible> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec((any::<bool>(), -3i64..=3), n)).prop_map(
        move |(perm, entries)| {
            let mut m = ExactMatrix::zero(n);
            for (i, (&j, &(neg, e))) in perm.iter().zip(&entries).enumerate() {
                m.set(i, j, Laurent::monomial(if neg { -1 } else { 1 }, e));
            }
            Invertible::monomial(m)
        },
    )
}

proptest! {
    #[test]
    fn matrix_product_associative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        prop_assert_eq!(&(&a.m * &b.m) * &c.m, &a.m * &(&b.m * &c.m));
    }

    #[test]
    fn monomial_inverse_is_inverse(a in monomial(5)) {
        prop_assert_eq!(&a.m * &a.inv, ExactMatrix::identity(5));
        prop_assert_eq!(&a.inv * &a.m, ExactMatrix::identity(5));
    }

    #[test]
    fn inf_char_and_partition_sizes((x, psi) in space_and_psi()) {
        let dim = x.lgroup().standard_dim as usize;
        prop_assert_eq!(inf_char(&psi).len(), dim);
        let part = sl2_partition(&psi);
        prop_assert_eq!(part.iter().sum::<u32>() as usize, dim);
        prop_assert!(part.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn unitary_parity_is_constant((x, psi) in space_and_psi()) {
        prop_assume!(x.lgroup().is_unitary());
        let n = i64::from(x.lgroup().standard_dim);
        for s in &psi.summands {
            if let Rho::Char(WeilCChar(m)) = s.rho {
                prop_assert_eq!((m + i64::from(s.a) - n).rem_euclid(2), 0, "{}", psi);
            }
        }
    }

    #[test]
    fn good_parity_ignores_order((_x, psi) in space_and_psi(), seed in any::<u64>()) {
        let mut summands = psi.summands.clone();
        let k = summands.len();
        if k > 1 {
            summands.rotate_left((seed as usize) % k);
            summands.swap(0, (seed as usize / 7) % k);
        }
        let raw = ArthurParameter { target: psi.target, summands };
        prop_assert_eq!(validate_good_parity(&raw).is_ok(), validate_good_parity(&psi).is_ok());
    }

    /// Raising one a by 2 keeps the dimension parity but moves off the principal partition.
    #[test]
    fn non_principal_partition_rejected((x, psi) in space_and_psi(), pick in any::<prop::sample::Index>()) {
        let i = pick.index(psi.summands.len());
        let mut summands = psi.summands.clone();
        let s = summands[i];
        summands[i] = ArthurSummand::new(s.rho, s.a + 2);
        let moved = ArthurParameter::new(psi.target, summands);
        prop_assert!(factorize(&moved, &x, &Options::default()).is_err());
    }

    #[test]
    fn enumerated_eps_are_accepted((x, psi) in space_and_psi()) {
        let opts = SpectrumOptions::default();
        if let Ok(accepted) = enumerate_eps(&x, &psi, &opts) {
            let verdicts = packet_verdicts(&x, &psi, &opts).unwrap();
            for e in accepted {
                prop_assert!(verdicts.iter().any(|v| v.eps == e && v.verdict));
            }
        }
    }

    #[test]
    fn so_even_flip(p in 0u32..16, q in 0u32..16) {
        prop_assume!((p + q) % 2 == 0 && p + q > 0);
        let a = dual_lgroup(ClassicalGroup::SpecialOrthogonal(p, q));
        let b = dual_lgroup(ClassicalGroup::SpecialOrthogonal(q, p));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn case13_rule_matches_oracle(set in prop::collection::btree_set(1i64..40, 1..7), sgn in any::<bool>()) {
        let l: Vec<i64> = set.into_iter().rev().collect();
        let lambda = InfCharTuple::from_ints(&l).unwrap();
        let chi = if sgn { Case13Chi::SgnDet } else { Case13Chi::Trivial };
        prop_assert_eq!(case13_is_ds(&lambda, chi).unwrap(), case13_root_oracle(&lambda, chi).unwrap());
    }

    #[test]
    fn case2_odd_unique(set in prop::collection::btree_set(-30i64..30, 1..8)) {
        prop_assume!(set.len() % 2 == 1);
        let l: Vec<i64> = set.into_iter().rev().collect();
        let lambda = InfCharTuple::from_ints(&l).unwrap();
        let acc = case2_so_quotient_accepting(&lambda).unwrap();
        prop_assert_eq!(acc, vec![case2_closed_form(&lambda).unwrap()]);
    }
}
