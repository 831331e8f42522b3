//! Closed-form factor counts and their comparison against a measured
//! factorization.
//!
//! The mixed-case count formulas are audited rather than trusted: every
//! prediction is paired with the measured count, and a mismatch becomes a
//! flagged entry carrying both values.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Case, CaseParameters, IrreducibleFactor};
use crate::error::Result;
use crate::numth::{euler_phi, factorize, gcd};

/// Non-negative rational, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(k: u64) -> Self {
        Ratio { num: k, den: 1 }
    }

    pub fn equals(&self, k: u64) -> bool {
        self.den == 1 && self.num == k
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorClass {
    Binomial,
    /// All factors with a nonzero middle coefficient.
    Trinomial,
    /// Trinomials with the given `nu_2(u)`.
    TrinomialNu2(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CountKey {
    pub degree: u64,
    pub class: FactorClass,
}

impl fmt::Display for CountKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            FactorClass::Binomial => write!(f, "degree {} binomials", self.degree),
            FactorClass::Trinomial => write!(f, "degree {} trinomials", self.degree),
            FactorClass::TrinomialNu2(v) => {
                write!(f, "degree {} trinomials with nu2(u)={v}", self.degree)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountSource {
    /// `phi(t)/t * gcd(n, q-1)` binomials of each degree `t | m`.
    BinomialCase,
    /// Binomial and trinomial counts per degree in the mixed case.
    MixedCase,
    /// `2^(r-1-nu_2(u)) phi(t)/t gcd(n, q-1)` codes per `nu_2(u)` class.
    PerClassCodeCount,
    /// Measured but no formula predicts this key.
    Unpredicted,
}

impl CountSource {
    /// Whether a mismatch indicates a bug rather than a known formula
    /// discrepancy.
    pub fn is_strict(self) -> bool {
        matches!(self, CountSource::BinomialCase)
    }

    pub fn label(self) -> &'static str {
        match self {
            CountSource::BinomialCase => "binomial-case count",
            CountSource::MixedCase => "mixed-case count",
            CountSource::PerClassCodeCount => "per-class code count",
            CountSource::Unpredicted => "unpredicted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPrediction {
    pub key: CountKey,
    pub value: Ratio,
    pub source: CountSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountAudit {
    pub key: CountKey,
    pub source: CountSource,
    pub predicted: Ratio,
    pub measured: u64,
    pub agrees: bool,
}

/// Closed-form counts per `(degree, class)`; no factorization is done.
pub fn predicted_counts(params: &CaseParameters) -> Result<Vec<CountPrediction>> {
    let g1 = params.gcd_n_q_minus_1();
    let mut out = Vec::new();
    let mut push = |degree: u64, class, num: u64, den: u64, source| {
        out.push(CountPrediction {
            key: CountKey { degree, class },
            value: Ratio::new(num, den),
            source,
        })
    };
    match params.case {
        Case::BinomialOnly => {
            for t in factorize(params.m)?.divisors() {
                push(t, FactorClass::Binomial, euler_phi(t)? * g1, t, CountSource::BinomialCase);
            }
        }
        Case::Mixed => {
            let r = params.r.expect("mixed case carries r");
            let half = 1u64 << (r - 1);
            for t in factorize(params.m_prime)?.divisors() {
                let phi = euler_phi(t)?;
                if t % 2 == 1 {
                    push(t, FactorClass::Binomial, phi * g1, t, CountSource::MixedCase);
                    push(2 * t, FactorClass::Binomial, phi * g1, 2 * t, CountSource::MixedCase);
                    push(2 * t, FactorClass::Trinomial, phi * (half - 1) * g1, t, CountSource::MixedCase);
                    for nu in 0..=r - 2 {
                        let scale = 1u64 << (r - 1 - nu);
                        push(
                            2 * t,
                            FactorClass::TrinomialNu2(nu),
                            scale * phi * g1,
                            t,
                            CountSource::PerClassCodeCount,
                        );
                    }
                } else {
                    push(2 * t, FactorClass::Trinomial, phi * half * g1, t, CountSource::MixedCase);
                    push(
                        2 * t,
                        FactorClass::TrinomialNu2(0),
                        half * phi * g1,
                        t,
                        CountSource::PerClassCodeCount,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Factor counts per key, including the per-`nu_2(u)` refinement.
pub fn measured_counts(factors: &[IrreducibleFactor]) -> BTreeMap<CountKey, u64> {
    let mut out = BTreeMap::new();
    for f in factors {
        let degree = f.degree() as u64;
        if f.is_trinomial() {
            *out.entry(CountKey { degree, class: FactorClass::Trinomial }).or_default() += 1;
            let nu = f.nu2u().expect("trinomials carry nu_2(u)");
            *out.entry(CountKey { degree, class: FactorClass::TrinomialNu2(nu) }).or_default() += 1;
        } else {
            *out.entry(CountKey { degree, class: FactorClass::Binomial }).or_default() += 1;
        }
    }
    out
}

/// One entry per prediction, plus an `Unpredicted` entry for every measured
/// key no formula covers.
pub fn audit_counts(params: &CaseParameters, factors: &[IrreducibleFactor]) -> Result<Vec<CountAudit>> {
    let measured = measured_counts(factors);
    let predictions = predicted_counts(params)?;
    let mut out: Vec<CountAudit> = predictions
        .iter()
        .map(|p| {
            let m = measured.get(&p.key).copied().unwrap_or(0);
            CountAudit {
                key: p.key,
                source: p.source,
                predicted: p.value,
                measured: m,
                agrees: p.value.equals(m),
            }
        })
        .collect();
    for (key, &m) in &measured {
        if !predictions.iter().any(|p| p.key == *key) {
            out.push(CountAudit {
                key: *key,
                source: CountSource::Unpredicted,
                predicted: Ratio::integer(0),
                measured: m,
                agrees: false,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorizer::{case_parameters, factor};
    use crate::gfield::FieldTower;

    fn lookup(preds: &[CountPrediction], degree: u64, class: FactorClass, source: CountSource) -> Ratio {
        preds
            .iter()
            .find(|p| p.key == CountKey { degree, class } && p.source == source)
            .unwrap()
            .value
    }

    #[test]
    fn worked_example_predictions() {
        let p = case_parameters(288, 31).unwrap();
        let preds = predicted_counts(&p).unwrap();
        assert_eq!(lookup(&preds, 3, FactorClass::Binomial, CountSource::MixedCase), Ratio::integer(4));
        assert_eq!(lookup(&preds, 2, FactorClass::Trinomial, CountSource::MixedCase), Ratio::integer(42));
        assert_eq!(
            lookup(&preds, 2, FactorClass::TrinomialNu2(2), CountSource::PerClassCodeCount),
            Ratio::integer(12)
        );
    }

    #[test]
    fn small_mixed_prediction() {
        let p = case_parameters(8, 3).unwrap();
        let preds = predicted_counts(&p).unwrap();
        assert_eq!(lookup(&preds, 1, FactorClass::Binomial, CountSource::MixedCase), Ratio::integer(2));
    }

    #[test]
    fn audit_flags_per_class_mismatch_with_both_values() {
        let p = case_parameters(288, 31).unwrap();
        let tower = FieldTower::new(31, 1).unwrap();
        let fs = factor(&p, &tower).unwrap();
        let audit = audit_counts(&p, &fs).unwrap();
        let entry = audit
            .iter()
            .find(|a| a.key == CountKey { degree: 2, class: FactorClass::TrinomialNu2(2) })
            .unwrap();
        assert_eq!((entry.predicted, entry.measured, entry.agrees), (Ratio::integer(12), 6, false));
        assert!(audit.iter().filter(|a| a.source == CountSource::MixedCase).all(|a| a.agrees));
    }

    #[test]
    fn ratio_display() {
        assert_eq!(Ratio::new(6, 4).to_string(), "3/2");
        assert_eq!(Ratio::new(8, 2).to_string(), "4");
    }
}
