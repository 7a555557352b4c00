//! Machine verification of the Catalan identities behind the closed forms.
//!
//! Every identity lives in a fixed registry and is checked by exact big-int
//! evaluation of both sides over a range. Identities with an enumeration
//! side additionally compare against the brute-force oracle for small n.
//! One registry entry, `callan_conv_printed`, is a deliberately wrong
//! convolution kept as a negative control: a healthy harness must report its
//! failure, and the suite asserts that it does.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedSub, Zero};
use rayon::prelude::*;

use crate::catalan::{catalan, pow2, pow4};
use crate::closed_forms::{
    barry, even_power_coeff, f01_even, f01_even_k, f01_odd, f02_even, family_histogram,
    FamilyClass,
};
use crate::polygon::{count_marked_triangulations, histogram};
use crate::Error;

/// Largest index at which identities with an enumeration side call the
/// brute-force oracle; beyond it only the formula sides are compared.
const ORACLE_LIMIT: u32 = 7;

/// The registered identities, in fixed report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Per-class counts sum to the Catalan total, for the n-gon.
    Eq1Total,
    /// Catalan recursion: sum C_i C_{n-i} = C_{n+1}.
    Eq2CatalanRec,
    /// Half-index convolution: 2 sum C_{2i} C_{2n+1-2i} = C_{2n+2}.
    Eq3HalfConv,
    /// Shapiro convolution: sum C_{2j} C_{2n-2j} = 4^n C_n.
    Eq4Shapiro,
    /// Weighted convolution: sum 2^{2i-1} C_{i-1} C_{2n-1-2i} over i = 1..n-1
    /// equals 4^{n-1} C_{n-1} - C_{2n-2}.
    Lemma1LemEq,
    /// Marked-triangulation count: sum C_{2j} C_{2(n-1)-2j} = 4^{n-1} C_{n-1},
    /// with the oracle count of marked triangulations as a second side.
    Shap2Marked,
    /// Composition sum over 2^{k+1} prod C_{2i_j-1} equals C_{2n}.
    Eq11Catid1,
    /// (k+2)-weighted composition sum equals 4^{n-1} C_{n-1}.
    Eq12Catid2,
    /// k 2^k-weighted composition sum equals 2^{2n-1} C_n - C_{2n}.
    CombinedKWeighted,
    /// Binomial alternative equals the 0-2 family count.
    Eq13Barry,
    /// Index-shifted odd-count convolution reproducing the 0-2 family.
    CallanConvCorrected,
    /// Unshifted variant of the same convolution. Expected to fail; kept as
    /// the registry's negative control.
    CallanConvPrinted,
    /// Family sum: f01_odd(n) + f02_even(n) = 2 C_{2n-2}.
    Eq14Sum2C,
}

impl IdentityId {
    /// Registry in report order.
    pub const ALL: [IdentityId; 13] = [
        IdentityId::Eq1Total,
        IdentityId::Eq2CatalanRec,
        IdentityId::Eq3HalfConv,
        IdentityId::Eq4Shapiro,
        IdentityId::Lemma1LemEq,
        IdentityId::Shap2Marked,
        IdentityId::Eq11Catid1,
        IdentityId::Eq12Catid2,
        IdentityId::CombinedKWeighted,
        IdentityId::Eq13Barry,
        IdentityId::CallanConvCorrected,
        IdentityId::CallanConvPrinted,
        IdentityId::Eq14Sum2C,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1Total => "eq1_total",
            IdentityId::Eq2CatalanRec => "eq2_catalan_rec",
            IdentityId::Eq3HalfConv => "eq3_half_conv",
            IdentityId::Eq4Shapiro => "eq4_shapiro",
            IdentityId::Lemma1LemEq => "lemma1_lemeq",
            IdentityId::Shap2Marked => "shap2_marked",
            IdentityId::Eq11Catid1 => "eq11_catid1",
            IdentityId::Eq12Catid2 => "eq12_catid2",
            IdentityId::CombinedKWeighted => "combined_k_weighted",
            IdentityId::Eq13Barry => "eq13_barry",
            IdentityId::CallanConvCorrected => "callan_conv_corrected",
            IdentityId::CallanConvPrinted => "callan_conv_printed",
            IdentityId::Eq14Sum2C => "eq14_sum_2C",
        }
    }

    /// Smallest index the identity is defined at.
    pub fn domain_min(self) -> u32 {
        match self {
            IdentityId::Eq1Total => 3,
            IdentityId::Eq2CatalanRec => 0,
            IdentityId::Eq3HalfConv => 0,
            IdentityId::Eq4Shapiro => 0,
            IdentityId::Lemma1LemEq => 2,
            IdentityId::Shap2Marked => 2,
            IdentityId::Eq11Catid1 => 1,
            IdentityId::Eq12Catid2 => 2,
            IdentityId::CombinedKWeighted => 1,
            IdentityId::Eq13Barry => 1,
            IdentityId::CallanConvCorrected => 1,
            IdentityId::CallanConvPrinted => 2,
            IdentityId::Eq14Sum2C => 2,
        }
    }

    /// True for entries that are supposed to fail verification.
    pub fn is_negative_control(self) -> bool {
        matches!(self, IdentityId::CallanConvPrinted)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_owned()))
    }
}

/// One mismatch: both sides at the index where they disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: u32,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

/// Outcome of verifying one identity over a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub range: (u32, u32),
    pub failures: Vec<Failure>,
    pub passed: bool,
}

/// Both sides of `id` at index `n`; several pairs when an oracle side is
/// also available.
fn checks(id: IdentityId, n: u32) -> Vec<(BigUint, BigUint)> {
    match id {
        IdentityId::Eq1Total => {
            let total = catalan(n - 2);
            let mut pairs = vec![
                (
                    family_histogram(n, FamilyClass::Class01).unwrap().total(),
                    total.clone(),
                ),
                (
                    family_histogram(n, FamilyClass::Class02).unwrap().total(),
                    total.clone(),
                ),
            ];
            if n <= ORACLE_LIMIT {
                pairs.push((histogram(n, 0, 1).unwrap().total(), total.clone()));
                pairs.push((histogram(n, 0, 2).unwrap().total(), total));
            }
            pairs
        }
        IdentityId::Eq2CatalanRec => {
            let lhs: BigUint = (0..=n).map(|i| catalan(i) * catalan(n - i)).sum();
            vec![(lhs, catalan(n + 1))]
        }
        IdentityId::Eq3HalfConv => {
            let lhs: BigUint = (0..=n).map(|i| catalan(2 * i) * catalan(2 * n + 1 - 2 * i)).sum();
            vec![(lhs * 2u32, catalan(2 * n + 2))]
        }
        IdentityId::Eq4Shapiro => {
            let lhs: BigUint = (0..=n).map(|j| catalan(2 * j) * catalan(2 * n - 2 * j)).sum();
            vec![(lhs, pow4(u64::from(n)) * catalan(n))]
        }
        IdentityId::Lemma1LemEq => {
            let lhs: BigUint = (1..n)
                .map(|i| pow2(2 * u64::from(i) - 1) * catalan(i - 1) * catalan(2 * n - 1 - 2 * i))
                .sum();
            let rhs = (pow4(u64::from(n) - 1) * catalan(n - 1))
                .checked_sub(&catalan(2 * n - 2))
                .expect("the weighted sum is a difference of counts");
            vec![(lhs, rhs)]
        }
        IdentityId::Shap2Marked => {
            let rhs = pow4(u64::from(n) - 1) * catalan(n - 1);
            let conv: BigUint = (0..n)
                .map(|j| catalan(2 * j) * catalan(2 * (n - 1) - 2 * j))
                .sum();
            let mut pairs = vec![(conv, rhs.clone())];
            if n <= ORACLE_LIMIT {
                pairs.push((count_marked_triangulations(n).unwrap(), rhs));
            }
            pairs
        }
        IdentityId::Eq11Catid1 => {
            let lhs = family_histogram(2 * n + 2, FamilyClass::Class01)
                .unwrap()
                .total();
            vec![(lhs, catalan(2 * n))]
        }
        IdentityId::Eq12Catid2 => {
            let mut lhs = f01_even(n) * 2u32;
            for k in 1..=n.saturating_sub(2) {
                lhs += f01_even_k(n, k) * (k + 2);
            }
            vec![(lhs, pow4(u64::from(n) - 1) * catalan(n - 1))]
        }
        IdentityId::CombinedKWeighted => {
            let mut lhs = BigUint::zero();
            for k in 1..n {
                lhs += pow2(u64::from(k)) * k * even_power_coeff(k + 1, n);
            }
            let rhs = (pow2(2 * u64::from(n) - 1) * catalan(n))
                .checked_sub(&catalan(2 * n))
                .expect("the k-weighted sum is a difference of counts");
            vec![(lhs, rhs)]
        }
        IdentityId::Eq13Barry => vec![(barry(n), f02_even(n + 1))],
        IdentityId::CallanConvCorrected => {
            let rhs: BigUint = (1..=n).map(|k| f01_odd(k) * f01_odd(n - k + 1)).sum();
            vec![(f02_even(n + 1), rhs)]
        }
        IdentityId::CallanConvPrinted => {
            // The unshifted convolution needs a value at half-size 0, where
            // the factor is taken as 1 (the empty polygon's one
            // "triangulation"); under that reading the identity still fails.
            let rhs: BigUint = (1..=n)
                .map(|k| {
                    let tail = if n - k >= 1 {
                        f01_odd(n - k)
                    } else {
                        BigUint::from(1u32)
                    };
                    f01_odd(k) * tail
                })
                .sum();
            vec![(f02_even(n + 1), rhs)]
        }
        IdentityId::Eq14Sum2C => {
            vec![(f01_odd(n) + f02_even(n), catalan(2 * n - 2) * 2u32)]
        }
    }
}

/// Verifies one identity for every `n` in `lo..=hi`.
pub fn verify(id: IdentityId, lo: u32, hi: u32) -> Result<VerificationReport, Error> {
    if lo < id.domain_min() {
        return Err(Error::RangeOutsideDomain {
            identity: id.name(),
            lo,
            hi,
            min: id.domain_min(),
        });
    }
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let mut failures = Vec::new();
    for n in lo..=hi {
        for (lhs, rhs) in checks(id, n) {
            if lhs != rhs {
                failures.push(Failure { n, lhs, rhs });
            }
        }
    }
    Ok(VerificationReport {
        identity: id,
        range: (lo, hi),
        passed: failures.is_empty(),
        failures,
    })
}

/// Verifies the whole registry, each identity over its own domain clamped to
/// at most `n_hi` (identities whose domain starts above `n_hi` run at their
/// single smallest point). Reports come back in registry order.
pub fn verify_all(n_hi: u32) -> Result<Vec<VerificationReport>, Error> {
    if n_hi < 2 {
        return Err(Error::RangeBelowMinimum { got: n_hi, min: 2 });
    }
    Ok(IdentityId::ALL
        .into_par_iter()
        .map(|id| {
            let lo = id.domain_min();
            verify(id, lo, n_hi.max(lo)).expect("registry ranges are clamped to each domain")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_stable() {
        let names: Vec<_> = IdentityId::ALL.iter().map(|id| id.name()).collect();
        assert_eq!(
            names,
            vec![
                "eq1_total",
                "eq2_catalan_rec",
                "eq3_half_conv",
                "eq4_shapiro",
                "lemma1_lemeq",
                "shap2_marked",
                "eq11_catid1",
                "eq12_catid2",
                "combined_k_weighted",
                "eq13_barry",
                "callan_conv_corrected",
                "callan_conv_printed",
                "eq14_sum_2C",
            ]
        );
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
            assert_eq!(id.to_string(), id.name());
        }
        assert!(matches!(
            "eq99_bogus".parse::<IdentityId>(),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn convolution_identities_pass() {
        assert!(verify(IdentityId::Eq2CatalanRec, 0, 40).unwrap().passed);
        assert!(verify(IdentityId::Eq3HalfConv, 0, 30).unwrap().passed);
        assert!(verify(IdentityId::Eq4Shapiro, 0, 30).unwrap().passed);
        assert!(verify(IdentityId::Lemma1LemEq, 2, 30).unwrap().passed);
    }

    #[test]
    fn structural_identities_pass_at_small_points() {
        assert!(verify(IdentityId::Eq1Total, 3, 8).unwrap().passed);
        assert!(verify(IdentityId::Shap2Marked, 2, 8).unwrap().passed);
        assert!(verify(IdentityId::Eq11Catid1, 1, 10).unwrap().passed);
        assert!(verify(IdentityId::Eq12Catid2, 2, 10).unwrap().passed);
        assert!(verify(IdentityId::CombinedKWeighted, 1, 10).unwrap().passed);
        assert!(verify(IdentityId::Eq13Barry, 1, 10).unwrap().passed);
        assert!(verify(IdentityId::CallanConvCorrected, 1, 10).unwrap().passed);
        assert!(verify(IdentityId::Eq14Sum2C, 2, 10).unwrap().passed);
    }

    #[test]
    fn negative_control_fails_at_first_point() {
        let report = verify(IdentityId::CallanConvPrinted, 2, 5).unwrap();
        assert!(!report.passed);
        assert_eq!(
            report.failures[0],
            Failure {
                n: 2,
                lhs: BigUint::from(6u32),
                rhs: BigUint::from(4u32),
            }
        );
    }

    #[test]
    fn marked_double_count_matches_oracle() {
        for m in 2..=7u32 {
            let mut weighted = f01_even(m) * 2u32;
            for k in 1..=m - 2 {
                weighted += f01_even_k(m, k) * (k + 2);
            }
            assert_eq!(weighted, count_marked_triangulations(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn range_validation() {
        assert!(matches!(
            verify(IdentityId::Lemma1LemEq, 1, 5),
            Err(Error::RangeOutsideDomain { identity: "lemma1_lemeq", lo: 1, .. })
        ));
        assert!(matches!(
            verify(IdentityId::Eq4Shapiro, 5, 4),
            Err(Error::EmptyRange { lo: 5, hi: 4 })
        ));
        assert!(matches!(
            verify_all(1),
            Err(Error::RangeBelowMinimum { got: 1, min: 2 })
        ));
    }

    #[test]
    fn verify_all_reports_in_registry_order() {
        let reports = verify_all(10).unwrap();
        assert_eq!(reports.len(), 13);
        for (report, id) in reports.iter().zip(IdentityId::ALL) {
            assert_eq!(report.identity, id);
            assert_eq!(report.passed, !id.is_negative_control(), "{id}");
            assert_eq!(report.range, (id.domain_min(), 10.max(id.domain_min())));
        }
    }

    #[test]
    fn verify_all_clamps_to_domain_minimum() {
        let reports = verify_all(2).unwrap();
        for report in &reports {
            let min = report.identity.domain_min();
            assert_eq!(report.range, (min, 2.max(min)), "{}", report.identity);
        }
        // eq1_total's domain starts above 2, so it runs at its single
        // smallest point.
        assert_eq!(reports[0].range, (3, 3));
    }
}
