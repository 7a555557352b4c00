//! End-to-end acceptance checks. Every headline count is computed by at
//! least two independent routes (closed form, exhaustive enumeration, Dyck
//! avoidance counts) and compared exactly; the runtime-sensitive criteria
//! assert their budgets. One test per criterion, so the harness prints one
//! pass/fail line for each.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use paradiag::catalan::{catalan, pow4};
use paradiag::closed_forms::{
    barry, f, f01_even, f01_odd, f02_even, f02_even_k, f02_even_k_low_exponent,
    f02_even_k_shifted_sum, CountQuery,
};
use paradiag::dyck::{
    count_avoiding, path_to_triangulation, triangulation_to_path, DyckSpec, ForbiddenResidue,
};
use paradiag::identities::{verify, verify_all, IdentityId};
use paradiag::polygon::{
    count_marked_triangulations, enumerate_triangulations, fan_histogram, histogram, KHistogram,
    Parity,
};

const ORACLE_MAX: u32 = 14;

/// Brute-force histograms for every polygon size and family the criteria
/// compare against, built once and shared across the tests.
fn oracle() -> &'static BTreeMap<(u32, u32), KHistogram> {
    static CACHE: OnceLock<BTreeMap<(u32, u32), KHistogram>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut map = BTreeMap::new();
        for n in 3..=ORACLE_MAX {
            for y in [1, 2] {
                map.insert((n, y), histogram(n, 0, y).unwrap());
            }
        }
        map
    })
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn criterion_01_hexagon_ground_truth() {
    let start = Instant::now();
    let hist = histogram(6, 0, 1).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(hist.count(0), big(10));
    assert_eq!(hist.count(1), big(4));
    assert_eq!(hist.counts().len(), 2, "no other k occurs");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (hexagon ground truth): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_zero_diagonal_forms_match_oracle() {
    let start = Instant::now();
    for n in (4..=ORACLE_MAX).step_by(2) {
        let m = n / 2;
        assert_eq!(f01_even(m), oracle()[&(n, 1)].count(0), "f01_even n={n}");
        assert_eq!(f02_even(m), oracle()[&(n, 2)].count(0), "f02_even n={n}");
    }
    for n in (5..=13u32).step_by(2) {
        let m = n / 2;
        assert_eq!(f01_odd(m), oracle()[&(n, 1)].count(0), "f01_odd n={n}");
        assert_eq!(f01_odd(m), oracle()[&(n, 2)].count(0), "collapsed class n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 2 (zero-diagonal closed forms vs oracle, n <= 14): PASS in {elapsed:?}");
}

#[test]
fn criterion_03_dispatcher_matches_oracle_for_all_k() {
    let start = Instant::now();
    for n in 5..=ORACLE_MAX {
        for y in [1u32, 2] {
            let hist = &oracle()[&(n, y)];
            let mut total = big(0);
            for k in 0..=n - 3 {
                let value = f(&CountQuery { n, x: 0, y, k }).unwrap();
                assert_eq!(value, hist.count(k), "n={n} y={y} k={k}");
                total += value;
            }
            assert_eq!(total, catalan(n - 2), "completeness n={n} y={y}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 3 (full k-refinement vs oracle and Catalan totals): PASS in {elapsed:?}");
}

#[test]
fn criterion_04_wrong_variants_mismatch_and_corrected_form_does_not() {
    let mut shifted_mismatch = false;
    let mut exponent_mismatch = false;
    for n in (4..=8u32).step_by(2) {
        let m = n / 2;
        let hist = &oracle()[&(n, 2)];
        for k in 1..=n - 3 {
            if f02_even_k_shifted_sum(m, k) != hist.count(k) {
                shifted_mismatch = true;
            }
            if f02_even_k_low_exponent(m, k) != BigInt::from(hist.count(k)) {
                exponent_mismatch = true;
            }
        }
    }
    assert!(shifted_mismatch, "the shifted-total variant must disagree somewhere in n <= 8");
    assert!(exponent_mismatch, "the low-exponent variant must disagree somewhere in n <= 8");

    for n in (4..=ORACLE_MAX).step_by(2) {
        let m = n / 2;
        let hist = &oracle()[&(n, 2)];
        for k in 1..=n - 3 {
            assert_eq!(f02_even_k(m, k), hist.count(k), "corrected form n={n} k={k}");
        }
    }
    println!("criterion 4 (wrong variants detected, corrected form clean to n = 14): PASS");
}

#[test]
fn criterion_05_marked_triangulation_double_count() {
    for m in 2..=7u32 {
        assert_eq!(
            count_marked_triangulations(m).unwrap(),
            pow4(u64::from(m) - 1) * catalan(m - 1),
            "m={m}"
        );
    }
    let report = verify(IdentityId::Lemma1LemEq, 2, 50).unwrap();
    assert!(report.passed, "{:?}", report.failures.first());
    println!("criterion 5 (marked count oracle m <= 7, weighted convolution to 50): PASS");
}

#[test]
fn criterion_06_dyck_avoidance_equivalences() {
    let start = Instant::now();
    for s in 1..=12u32 {
        let n = s + 2;
        let r0 = count_avoiding(&DyckSpec {
            semilength: s,
            forbidden: Some(ForbiddenResidue::ZeroMod4),
        });
        let r2 = count_avoiding(&DyckSpec {
            semilength: s,
            forbidden: Some(ForbiddenResidue::TwoMod4),
        });
        assert_eq!(r0, f(&CountQuery { n, x: 0, y: 1, k: 0 }).unwrap(), "s={s} r=0");
        assert_eq!(r2, f(&CountQuery { n, x: 0, y: 2, k: 0 }).unwrap(), "s={s} r=2");
    }
    for m in 1..=10u32 {
        let avoiding = count_avoiding(&DyckSpec {
            semilength: 2 * m,
            forbidden: Some(ForbiddenResidue::ZeroMod4),
        });
        assert_eq!(avoiding, catalan(2 * m - 1) * 2u32, "doubled Catalan m={m}");
    }

    // Fan-diagonal analog: diagonals 0-j with odd j behave like the 01
    // family, even j like the 02 family. The k = 0 agreement is asserted;
    // how far the full histograms agree is recorded, not assumed.
    let mut full_match = true;
    for n in 3..=10u32 {
        let odd = fan_histogram(n, Parity::Odd).unwrap();
        let even = fan_histogram(n, Parity::Even).unwrap();
        assert_eq!(odd.count(0), f(&CountQuery { n, x: 0, y: 1, k: 0 }).unwrap(), "fan odd n={n}");
        assert_eq!(even.count(0), f(&CountQuery { n, x: 0, y: 2, k: 0 }).unwrap(), "fan even n={n}");
        full_match &= odd.counts() == oracle()[&(n, 1)].counts();
        full_match &= even.counts() == oracle()[&(n, 2)].counts();
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "criterion 6 (Dyck avoidance counts, doubled-Catalan law, fan analog): PASS in {elapsed:?} \
         (observation: full fan histograms {} the parallel-class histograms for n <= 10)",
        if full_match { "match" } else { "do not fully match" }
    );
}

#[test]
fn criterion_07_identity_suite_to_50() {
    let start = Instant::now();
    let reports = verify_all(50).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(reports.len(), 13);
    for report in &reports {
        if report.identity.is_negative_control() {
            assert!(!report.passed, "the negative control must fail");
            assert_eq!(
                report.failures[0].n,
                report.identity.domain_min(),
                "the control must fail at its smallest domain point"
            );
        } else {
            assert!(
                report.passed,
                "{} failed: {:?}",
                report.identity,
                report.failures.first()
            );
        }
    }
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 7 (identity suite at n_hi = 50, negative control caught): PASS in {elapsed:?}");
}

#[test]
fn criterion_08_sequence_values() {
    assert_eq!(f02_even(2), big(1));
    assert_eq!(f02_even(3), big(6));
    assert_eq!(f02_even(4), big(53));
    assert_eq!(f02_even(5), big(554));
    assert_eq!(f01_odd(1), big(1));
    assert_eq!(f01_odd(2), big(3));
    assert_eq!(f01_odd(3), big(22));
    assert_eq!(f01_odd(4), big(211));

    assert_eq!(f02_even(2), oracle()[&(4, 2)].count(0));
    assert_eq!(f02_even(3), oracle()[&(6, 2)].count(0));
    assert_eq!(f02_even(4), oracle()[&(8, 2)].count(0));
    assert_eq!(f01_odd(1), oracle()[&(3, 1)].count(0));
    assert_eq!(f01_odd(2), oracle()[&(5, 1)].count(0));
    assert_eq!(f01_odd(3), oracle()[&(7, 1)].count(0));

    for m in 1..=50u32 {
        assert_eq!(barry(m), f02_even(m + 1), "barry m={m}");
    }
    println!("criterion 8 (sequence values, oracle confirmation, binomial alternative to 50): PASS");
}

#[test]
fn criterion_09_bijection_over_full_enumerations() {
    let start = Instant::now();
    for n in 3..=9u32 {
        let mut images = HashSet::new();
        for t in enumerate_triangulations(n).unwrap() {
            let path = triangulation_to_path(&t);
            assert_eq!(path.semilength(), n - 2, "n={n}");
            assert_eq!(path_to_triangulation(&path).unwrap(), t, "round trip n={n}");
            images.insert(path);
        }
        assert_eq!(BigUint::from(images.len()), catalan(n - 2), "image size n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 9 (triangulation-path bijection, n = 3..9): PASS in {elapsed:?}");
}
