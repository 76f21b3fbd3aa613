use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zasym::partition::partitions_up_to;
use zasym::schur::{
    count_ssyt, determinant, dim_hook_content, principal_specialization, schur_bialternant_eval,
    schur_truncated, stepped_specialization, stepped_specialization_by_product,
};
use zasym::{LaurentPolynomial, Partition};

/// Every filling with entries in 1..=n, filtered to semistandard ones; each
/// is reported by its content vector.
fn brute_ssyt(lam: &Partition, n: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = lam.cells().collect();
    let mut out = Vec::new();
    let mut filling = vec![1usize; cells.len()];
    if n == 0 {
        return if cells.is_empty() { vec![vec![]] } else { out };
    }
    loop {
        let at = |r: usize, c: usize| {
            cells.iter().position(|&x| x == (r, c)).map(|i| filling[i])
        };
        let ok = cells.iter().all(|&(r, c)| {
            let v = at(r, c).unwrap();
            at(r, c + 1).is_none_or(|w| v <= w) && at(r + 1, c).is_none_or(|w| v < w)
        });
        if ok {
            let mut weight = vec![0u32; n];
            for &v in &filling {
                weight[v - 1] += 1;
            }
            out.push(weight);
        }
        let mut k = filling.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if filling[k] < n {
                filling[k] += 1;
                filling[k + 1..].iter_mut().for_each(|v| *v = 1);
                break;
            }
        }
    }
}

fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term: BigInt = (0..n).map(|i| m[i][p[i]].clone()).product();
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

#[test]
fn tableau_counts_match_brute_force() {
    for lam in partitions_up_to(5) {
        for n in 0..=3 {
            let brute = brute_ssyt(&lam, n);
            assert_eq!(count_ssyt(&lam, n, u64::MAX).unwrap(), brute.len() as u64, "{lam} n={n}");
            if lam.length() <= n {
                assert_eq!(dim_hook_content(&lam, n).unwrap().into_inner(), BigInt::from(brute.len()));
            }
        }
    }
}

#[test]
fn schur_coefficients_are_kostka_numbers() {
    for lam in partitions_up_to(5) {
        let n = 3;
        let s = schur_truncated(&lam, n, 5, u64::MAX).unwrap();
        let brute = brute_ssyt(&lam, n);
        for (e, c) in s.terms() {
            let kostka = brute.iter().filter(|w| *w == e).count();
            assert_eq!(*c, BigInt::from(kostka), "{lam} {e:?}");
        }
        assert_eq!(s.num_terms(), {
            let mut distinct = brute.clone();
            distinct.sort();
            distinct.dedup();
            distinct.len()
        });
        assert_eq!(s.swap_variables(0, 2), s);
    }
}

#[test]
fn bialternant_by_hand() {
    let col = Partition::new(&[1, 1]).unwrap();
    assert_eq!(schur_bialternant_eval(&col, &[2, 3, 5]).unwrap(), BigInt::from(31));
    let row = Partition::new(&[2]).unwrap();
    // h_2(1, -2) = 1 - 2 + 4.
    assert_eq!(schur_bialternant_eval(&row, &[1, -2]).unwrap(), BigInt::from(3));
    assert!(schur_bialternant_eval(&row, &[1, 1]).is_err());
}

#[test]
fn determinant_matches_permutation_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for size in 0..=5 {
        for _ in 0..10 {
            let m: Vec<Vec<BigInt>> = (0..size)
                .map(|_| (0..size).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
                .collect();
            assert_eq!(determinant(&m), leibniz(&m));
        }
    }
}

#[test]
fn principal_specialization_at_one_is_the_dimension() {
    for lam in partitions_up_to(6) {
        for n in lam.length()..=lam.length() + 2 {
            let p = principal_specialization(&lam, n).unwrap();
            assert_eq!(p.eval_at_one(), dim_hook_content(&lam, n).unwrap().into_inner());
            assert_eq!(p.min_exponent().unwrap(), lam.k_statistic());
        }
    }
}

#[test]
fn stepped_specialization_is_palindromic() {
    // Points symmetric about q^0 give a polynomial fixed by q -> 1/q.
    for lam in partitions_up_to(5) {
        for count in lam.length().max(1)..=4 {
            let start = 1 - count as i64;
            let s = stepped_specialization(&lam, start, count, u64::MAX).unwrap();
            let mirrored = LaurentPolynomial::from_terms(s.terms().map(|(e, c)| (-e, c.clone())));
            assert_eq!(s, mirrored, "{lam} count={count}");
            assert_eq!(s, stepped_specialization_by_product(&lam, start, count).unwrap());
        }
    }
}
