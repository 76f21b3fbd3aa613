use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use zasym::content::{is_shifted_form, partition_from_content_sequence};
use zasym::partition::enumerate_z_asymmetric;
use zasym::tabloid::{cell_bounds, phi, phi_inverse};
use zasym::{ContentSequence, LaurentPolynomial, Partition, Tabloid, TabloidKind};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(&v).unwrap()
    })
}

fn conjugate_by_counting(parts: &[usize]) -> Vec<usize> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

fn k_of(parts: &[usize]) -> i64 {
    parts.iter().enumerate().map(|(i, &p)| (i * p) as i64).sum()
}

/// Standard Young tableaux counted by removing corners.
fn syt_count(parts: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    if parts.iter().sum::<usize>() == 0 {
        return BigInt::from(1);
    }
    if let Some(v) = memo.get(&parts) {
        return v.clone();
    }
    let mut total = BigInt::from(0);
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            let mut smaller = parts.clone();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_count(smaller, memo);
        }
    }
    memo.insert(parts, total.clone());
    total
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(lam in partition(8, 8)) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.parts().to_vec(), conjugate_by_counting(lam.parts()));
        prop_assert_eq!(conj.conjugate(), lam.clone());
        prop_assert_eq!(conj.weight(), lam.weight());
    }

    #[test]
    fn frobenius_round_trip(lam in partition(8, 8)) {
        let c = lam.frobenius();
        prop_assert_eq!(c.rank(), lam.rank());
        prop_assert_eq!(c.weight(), lam.weight());
        prop_assert_eq!(c.to_partition(), lam.clone());
        prop_assert_eq!(c.transpose().to_partition(), lam.conjugate());
    }

    #[test]
    fn asymmetry_matches_coordinates(lam in partition(7, 7), z in -2i64..=3) {
        let parts = lam.parts();
        let conj = conjugate_by_counting(parts);
        let rank = (1..=parts.len()).take_while(|&i| parts[i - 1] >= i).count();
        let expected = (1..=rank)
            .all(|i| conj[i - 1] as i64 - i as i64 == parts[i - 1] as i64 - i as i64 + z);
        prop_assert_eq!(lam.is_z_asymmetric(z), expected);
        if z >= 0 {
            prop_assert_eq!(is_shifted_form(&lam, z as usize), lam.conjugate().is_z_asymmetric(z));
        }
        let listed = enumerate_z_asymmetric(lam.weight(), z).contains(&lam);
        prop_assert_eq!(listed, expected);
    }

    #[test]
    fn content_sum_and_k(lam in partition(8, 8)) {
        let conj = conjugate_by_counting(lam.parts());
        let sum: i64 = lam.contents().iter().sum();
        prop_assert_eq!(sum, k_of(&conj) - k_of(lam.parts()));
        prop_assert_eq!(lam.k_statistic(), k_of(lam.parts()));
    }

    #[test]
    fn hooks_give_standard_tableaux(lam in partition(5, 5)) {
        let mut memo = HashMap::new();
        let n = lam.weight();
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let hooks: BigInt = lam.hooks().into_iter().map(BigInt::from).product();
        prop_assert_eq!(factorial / hooks, syt_count(lam.parts().to_vec(), &mut memo));
    }

    #[test]
    fn content_sequence_round_trip(lam in partition(8, 8)) {
        let seq = ContentSequence::of(&lam);
        prop_assert_eq!(seq.peak(), lam.rank());
        prop_assert_eq!(seq.iter().map(|(_, x)| x).sum::<usize>(), lam.weight());
        prop_assert_eq!(partition_from_content_sequence(&seq), lam.clone());
        prop_assert_eq!(seq.reflected(), ContentSequence::of(&lam.conjugate()));
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in prop::collection::vec(-5i64..=5, 1..6),
        b in prop::collection::vec(-5i64..=5, 1..6),
        shift in -4i64..=4,
    ) {
        let pa = LaurentPolynomial::from_terms(a.iter().enumerate().map(|(i, &c)| (i as i64 + shift, c)));
        let pb = LaurentPolynomial::from_terms(b.iter().enumerate().map(|(i, &c)| (i as i64 - shift, c)));
        prop_assume!(!pb.is_zero());
        let product = &pa * &pb;
        prop_assert_eq!(product.exact_div(&pb).unwrap(), pa.clone());
        prop_assert_eq!(product.eval_at_one(), pa.eval_at_one() * pb.eval_at_one());
    }

    #[test]
    fn phi_on_random_tabloids(
        mu in partition(5, 6),
        m in 1usize..=2,
        extra in 0i64..=2,
        seed in prop::collection::vec(0u32..1000, 30),
    ) {
        let Some(_) = mu.frobenius().unshift_arms(m) else { return Ok(()); };
        let n = mu.length() as i64 + extra;
        let kind = TabloidKind::Content { n };
        let bounds = cell_bounds(&mu, kind);
        prop_assume!(bounds.iter().all(|(lo, hi)| lo <= hi));
        let mut flat = bounds
            .iter()
            .zip(seed.iter().cycle())
            .map(|(&(lo, hi), &s)| lo + s as i64 % (hi - lo + 1));
        let rows: Vec<Vec<i64>> = mu.parts().iter().map(|&p| flat.by_ref().take(p).collect()).collect();
        let t = Tabloid::new(mu.clone(), kind, rows).unwrap();
        let s = phi(&t, m).unwrap();
        prop_assert_eq!(s.kind(), TabloidKind::Content { n: n + m as i64 });
        prop_assert_eq!(s.shape().weight(), mu.weight());
        prop_assert_eq!(s.norm() - t.norm(), (m * mu.weight()) as i64);
        prop_assert_eq!(phi_inverse(&s, m).unwrap(), t);
    }
}
