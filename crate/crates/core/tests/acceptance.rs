//! Acceptance suite: one line per criterion, nonzero exit if any fails or
//! runs over its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zasym::partition::{enumerate_partitions, enumerate_z_asymmetric, frobenius_up_to, partitions_up_to};
use zasym::schur::{count_ssyt, dim_hook_content, hook_content_value};
use zasym::tabloid::{count_content_tabloids, count_hook_tabloids, phi, phi_inverse, verify_phi};
use zasym::verify::{
    littlewood_report, random_point_sets, strict_pairs, verify_bialternant, verify_cor34,
    verify_cor35, verify_cor_content, verify_dimension_oracle, verify_hook_products_can_differ,
    verify_lemma_k, verify_littlewood_1, verify_littlewood_2, verify_principal, verify_thm21,
    verify_thm22, verify_thm22_reduction, verify_thm33, LittlewoodForm,
};
use zasym::{FrobeniusCoords, Partition, Tabloid, TabloidKind, VerificationReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn p(parts: &[usize]) -> Partition {
    Partition::from_parts(parts).unwrap()
}

fn coords(a: &[usize], b: &[usize]) -> FrobeniusCoords {
    FrobeniusCoords::new(a.to_vec(), b.to_vec()).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Folds a batch of reports into a count, or the first failure.
fn all_pass(reports: impl IntoIterator<Item = zasym::Result<VerificationReport>>) -> Result<usize, String> {
    let mut n = 0;
    for r in reports {
        let r = r.map_err(|e| format!("error: {e}"))?;
        if !r.passed() {
            return Err(serde_json::to_string(&r).unwrap());
        }
        n += 1;
    }
    Ok(n)
}

fn golden() -> Outcome {
    let lam = p(&[4, 2, 2, 1]);
    ensure(lam.frobenius() == coords(&[3, 0], &[3, 1]), || {
        format!("frobenius {}", lam.frobenius())
    })?;
    let mut hooks = lam.hooks();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    ensure(hooks == [7, 5, 4, 3, 2, 2, 1, 1, 1], || format!("hooks {hooks:?}"))?;
    let contents = lam.contents();
    ensure(contents == [0, 1, 2, 3, -1, 0, -2, -1, -3], || format!("contents {contents:?}"))?;
    let c = count_content_tabloids(&lam, 4);
    let h = count_hook_tabloids(&lam);
    ensure(c == BigInt::from(60480) && h == BigInt::from(1680), || format!("counts {c} {h}"))?;
    Ok("(3,0|3,1), hooks, contents, 60480 and 1680".into())
}

fn z_asymmetric() -> Outcome {
    let six = enumerate_z_asymmetric(6, 1);
    ensure(six == [p(&[3, 1, 1, 1]), p(&[2, 2, 2])], || format!("{six:?}"))?;
    let mut checked = 0;
    for w in 0..=16 {
        let all = enumerate_partitions(w, None);
        for z in -2..=3 {
            let filtered: Vec<Partition> =
                all.iter().filter(|l| l.is_z_asymmetric(z)).cloned().collect();
            let generated = enumerate_z_asymmetric(w, z);
            ensure(generated == filtered, || format!("weight {w}, z {z}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (weight, z) pairs agree with the filter"))
}

fn bijection() -> Outcome {
    let t = Tabloid::from_rows(
        TabloidKind::Content { n: 3 },
        vec![vec![2, 0, 1, 3, -3], vec![2, 1, 1], vec![3]],
    )
    .unwrap();
    let expected = Tabloid::from_rows(
        TabloidKind::Content { n: 4 },
        vec![vec![1, 2, 4, -2], vec![3, 2], vec![3, 2], vec![4]],
    )
    .unwrap();
    let s = phi(&t, 1).map_err(|e| e.to_string())?;
    ensure(s == expected, || format!("image\n{s}"))?;
    ensure(phi_inverse(&s, 1).ok() == Some(t.clone()), || "inverse".into())?;
    ensure(s.norm() - t.norm() == 9, || "norm shift".into())?;

    let mut reports = Vec::new();
    for m in 0..=2usize {
        for lam in partitions_up_to(6) {
            let Some(base) = lam.frobenius().unshift_arms(m) else {
                continue;
            };
            for n in lam.length()..=4 {
                reports.push(verify_phi(&base, m, n as i64, u64::MAX));
            }
        }
    }
    for r in reports.iter().flatten() {
        ensure(r.parameters["mode"] == "enumeration", || format!("{:?}", r.parameters))?;
    }
    let exhaustive = all_pass(reports)?;

    let mut gf = Vec::new();
    for m in 0..=2usize {
        for w in 0..=14 {
            for lam in enumerate_z_asymmetric(w, m as i64) {
                let lo = lam.conjugate().length();
                for n in lo..=lo + 3 {
                    gf.push(verify_cor35(&lam, m, n));
                }
            }
        }
    }
    let gf = all_pass(gf)?;
    Ok(format!("sample tabloid exact, {exhaustive} exhaustive bijection checks, {gf} generating-function checks"))
}

fn cor34() -> Outcome {
    let mut reports = Vec::new();
    for c in frobenius_up_to(10) {
        let len = c.to_partition().length();
        for m in 0..=3 {
            for n in len..=10 {
                reports.push(verify_cor34(&c, m, n));
            }
        }
    }
    let n = all_pass(reports)?;
    let r = verify_hook_products_can_differ(10, 3);
    let w = r.witness.clone().ok_or("no witness found")?;
    let alpha: Vec<usize> = serde_json::from_value(w["alpha"].clone()).unwrap();
    let beta: Vec<usize> = serde_json::from_value(w["beta"].clone()).unwrap();
    let m = w["m"].as_u64().unwrap() as usize;
    let base = FrobeniusCoords::new(alpha, beta).unwrap();
    let a = count_hook_tabloids(&base.shift_arms(m).to_partition());
    let b = count_hook_tabloids(&base.shift_legs(m).to_partition());
    ensure(r.passed() && a != b, || format!("witness does not re-check: {a} {b}"))?;
    Ok(format!("{n} product checks; hook products {a} vs {b} at {base}, m={m}"))
}

fn thm21() -> Outcome {
    let worked = verify_thm21(&coords(&[1], &[0]), 1, 2, 2).map_err(|e| e.to_string())?;
    ensure(
        worked.passed()
            && worked.lhs.as_deref() == Some("8")
            && worked.parameters["ssyt_cross_check"] == true,
        || format!("{worked:?}"),
    )?;
    let counts: Vec<u64> = [(p(&[3]), 2), (p(&[2, 1]), 2), (p(&[2, 1]), 3), (p(&[1, 1, 1]), 3)]
        .iter()
        .map(|(s, n)| count_ssyt(s, *n, 1000).unwrap())
        .collect();
    ensure(counts == [4, 2, 8, 1], || format!("ssyt counts {counts:?}"))?;

    let mut reports = Vec::new();
    let mut cross_checked = 0;
    for c in strict_pairs(8) {
        let lam = c.to_partition();
        let (p0, q0) = (lam.length(), lam.first_part());
        for m in 1..=3 {
            for extra in [0, 2] {
                let r = verify_thm21(&c, m, p0 + extra, q0 + extra);
                if let Ok(r) = &r {
                    cross_checked += (r.parameters["ssyt_cross_check"] == true) as usize;
                }
                reports.push(r);
            }
        }
    }
    let n = all_pass(reports)?;
    Ok(format!("{n} instances, {cross_checked} also counted by tableaux"))
}

fn thm22() -> Outcome {
    let mut reports = Vec::new();
    let mut holds = 0;
    for lam in partitions_up_to(10) {
        for m in 0..=2 {
            let r = verify_thm22(&lam, m);
            if let Ok(r) = &r {
                holds += (r.lhs.as_deref() == Some("true")) as usize;
            }
            reports.push(r);
        }
    }
    let n = all_pass(reports)?;
    ensure(holds > 0 && holds < n, || format!("degenerate split {holds}/{n}"))?;
    let sanity = verify_thm22_reduction(2024, 20, 10, 2, 5).map_err(|e| e.to_string())?;
    ensure(sanity.passed(), || serde_json::to_string(&sanity).unwrap())?;
    Ok(format!("{n} cases ({holds} with equal dimensions), 20 random cases agree on the longer window"))
}

fn thm33() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=2usize {
        for w in 0..=12 {
            for lam in enumerate_z_asymmetric(w, m as i64) {
                let lo = lam.conjugate().length();
                for n in lo..=lo + 2 {
                    reports.push(verify_thm33(&lam, m, n));
                }
            }
        }
    }
    Ok(format!("{} Laurent identities", all_pass(reports)?))
}

fn k_and_content_sums() -> Outcome {
    let mut reports = Vec::new();
    for m in 0..=3usize {
        for w in 0..=20 {
            for lam in enumerate_z_asymmetric(w, m as i64) {
                reports.push(verify_lemma_k(&lam, m));
                reports.push(verify_cor_content(&lam, m));
            }
        }
    }
    Ok(format!("{} checks", all_pass(reports)?))
}

fn littlewood() -> Outcome {
    let mut reports = Vec::new();
    for n in [2, 3] {
        reports.push(verify_littlewood_1(n, 8));
        reports.push(verify_littlewood_2(n, 8));
    }
    let n = all_pass(reports)?;
    for form in [LittlewoodForm::WithDiagonal, LittlewoodForm::OffDiagonal] {
        for d in [2, 8] {
            let r = littlewood_report(form, 2, d, false).map_err(|e| e.to_string())?;
            ensure(!r.passed() && r.witness.is_some(), || format!("{form:?} D={d} unsigned passed"))?;
        }
    }
    Ok(format!("{n} identities hold; unsigned sums fail"))
}

fn oracles() -> Outcome {
    let mut reports = Vec::new();
    let mut zeros = 0;
    for lam in partitions_up_to(8) {
        for n in 0..=5usize {
            if lam.length() <= n {
                reports.push(verify_dimension_oracle(&lam, n, u64::MAX));
                reports.push(verify_principal(&lam, n, u64::MAX));
            } else {
                let v = hook_content_value(&lam, n as i64).unwrap();
                let c = count_ssyt(&lam, n, u64::MAX).unwrap();
                ensure(v == BigInt::from(0) && c == 0 && dim_hook_content(&lam, n).is_err(), || {
                    format!("{lam} n={n}")
                })?;
                zeros += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for lam in partitions_up_to(8) {
        for n in 1..=4 {
            for pts in random_point_sets(&mut rng, 5, n, 9) {
                reports.push(verify_bialternant(&lam, &pts, u64::MAX));
            }
        }
    }
    Ok(format!("{} oracle comparisons, {zeros} empty cases", all_pass(reports)?))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden examples", 1, golden),
        ("z-asymmetric enumeration", 5, z_asymmetric),
        ("diagonal-shift bijection", 120, bijection),
        ("content products and hook witness", 60, cor34),
        ("four-dimension product identity", 120, thm21),
        ("conjugate dimension criterion", 120, thm22),
        ("stepped specialization identity", 120, thm33),
        ("k statistic and content sums", 30, k_and_content_sums),
        ("Littlewood identities", 60, littlewood),
        ("oracle equivalences", 180, oracles),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let over = elapsed > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {limit} s limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {:>2} {name} [{:.2} s / {limit} s]: {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
